#include <zfgd/errors.hh>
#include <zfgd/linrank.hh>

#include <charconv>
#include <sstream>

#include <gmpxx.h>

using std::int64_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace zfgd
{
    IntMatrix::IntMatrix(int rows, int cols) :
        _rows(rows),
        _cols(cols),
        _data(std::size_t(rows) * cols, 0)
    {
        if (rows < 0 || cols < 0)
            throw InputError("negative matrix dimension");
    }

    IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows) :
        IntMatrix(int(rows.size()), rows.size() ? int(rows.begin()->size()) : 0)
    {
        int i = 0;
        for (auto & row : rows) {
            if (int(row.size()) != _cols)
                throw InputError("ragged matrix literal");
            int j = 0;
            for (auto x : row)
                (*this)(i, j++) = x;
            ++i;
        }
    }

    auto IntMatrix::identity(int n) -> IntMatrix
    {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    auto IntMatrix::is_symmetric() const -> bool
    {
        if (_rows != _cols)
            return false;
        for (int i = 0; i < _rows; ++i)
            for (int j = i + 1; j < _cols; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    auto IntMatrix::column_block(int first, int count) const -> IntMatrix
    {
        if (first < 0 || count < 0 || first + count > _cols)
            throw InputError("column block out of range");
        IntMatrix r(_rows, count);
        for (int i = 0; i < _rows; ++i)
            for (int j = 0; j < count; ++j)
                r(i, j) = (*this)(i, first + j);
        return r;
    }

    auto hconcat(const IntMatrix & a, const IntMatrix & b) -> IntMatrix
    {
        if (a.rows() != b.rows())
            throw InputError("hconcat: row counts differ");
        IntMatrix r(a.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j)
                r(i, j) = a(i, j);
            for (int j = 0; j < b.cols(); ++j)
                r(i, a.cols() + j) = b(i, j);
        }
        return r;
    }

    auto parse_matrix(string_view text) -> IntMatrix
    {
        vector<int64_t> values;
        vector<std::size_t> offsets;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == text.size())
                break;
            std::size_t start = i;
            while (i < text.size() && ! std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            int64_t v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, v);
            if (ec != std::errc{} || ptr != text.data() + i)
                throw ParseError("unparsable matrix entry '" + string(text.substr(start, i - start)) + "'", start);
            values.push_back(v);
            offsets.push_back(start);
        }
        if (values.size() < 2)
            throw ParseError("matrix text must start with 'rows cols'", 0);
        if (values[0] < 0 || values[1] < 0 || values[0] > 4096 || values[1] > 4096)
            throw ParseError("implausible matrix dimensions", offsets[0]);
        int rows = int(values[0]), cols = int(values[1]);
        if (values.size() != 2 + std::size_t(rows) * cols)
            throw ParseError("expected " + to_string(rows * cols) + " entries, found " + to_string(values.size() - 2),
                values.size() > 2 + std::size_t(rows) * cols ? offsets[2 + std::size_t(rows) * cols] : text.size());
        IntMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m(r, c) = values[2 + std::size_t(r) * cols + c];
        return m;
    }

    auto format_matrix(const IntMatrix & m) -> string
    {
        std::ostringstream out;
        out << m.rows() << ' ' << m.cols() << '\n';
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j)
                out << (j ? " " : "") << m(i, j);
            out << '\n';
        }
        return out.str();
    }

    auto matrix_to_json(const IntMatrix & m) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        auto entries = nlohmann::ordered_json::array();
        for (int i = 0; i < m.rows(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int c = 0; c < m.cols(); ++c)
                row.push_back(m(i, c));
            entries.push_back(std::move(row));
        }
        j["entries"] = std::move(entries);
        return j;
    }

    auto rank_exact(const IntMatrix & m) -> int
    {
        int rows = m.rows(), cols = m.cols();
        vector<vector<mpz_class>> a(rows, vector<mpz_class>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                a[i][j] = static_cast<long>(m(i, j));

        mpz_class prev = 1;
        int rank = 0;
        for (int c = 0; c < cols && rank < rows; ++c) {
            int p = rank;
            while (p < rows && a[p][c] == 0)
                ++p;
            if (p == rows)
                continue;
            std::swap(a[p], a[rank]);
            for (int i = rank + 1; i < rows; ++i) {
                for (int j = c + 1; j < cols; ++j) {
                    a[i][j] = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
                    mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
                }
                a[i][c] = 0;
            }
            prev = a[rank][c];
            ++rank;
        }
        return rank;
    }

    auto pattern_name(PatternKind p) -> string_view
    {
        switch (p) {
            case PatternKind::S: return "S";
            case PatternKind::S_loop: return "S_loop";
            case PatternKind::S_zero: return "S_zero";
            case PatternKind::L_pair: return "L_pair";
        }
        return "";
    }

    auto parse_pattern(string_view s) -> PatternKind
    {
        for (auto p : {PatternKind::S, PatternKind::S_loop, PatternKind::S_zero, PatternKind::L_pair})
            if (pattern_name(p) == s)
                return p;
        throw InputError("unknown pattern '" + string(s) + "' (expected S, S_loop, S_zero or L_pair)");
    }

    namespace
    {
        auto square_member(const IntMatrix & m, const Graph & g, PatternKind diag) -> bool
        {
            if (! m.is_symmetric())
                return false;
            for (int i = 0; i < g.n(); ++i) {
                if (diag == PatternKind::S_loop && m(i, i) == 0)
                    return false;
                if (diag == PatternKind::S_zero && m(i, i) != 0)
                    return false;
                for (int j = i + 1; j < g.n(); ++j)
                    if ((m(i, j) != 0) != g.adjacent(i, j))
                        return false;
            }
            return true;
        }
    }

    auto pattern_member(const IntMatrix & m, const Graph & g, PatternKind p) -> bool
    {
        int n = g.n();
        if (p == PatternKind::L_pair) {
            if (m.rows() != n || m.cols() != 2 * n)
                throw InputError("L_pair pattern needs an n x 2n matrix");
            return square_member(m.column_block(0, n), g, PatternKind::S_loop) && square_member(m.column_block(n, n), g, PatternKind::S_zero);
        }
        if (m.rows() != n || m.cols() != n)
            throw InputError("pattern " + string(pattern_name(p)) + " needs an n x n matrix");
        return square_member(m, g, p);
    }

    auto parse_witness_matrix(string_view s) -> WitnessMatrix
    {
        if (s == "petersen_A")
            return WitnessMatrix::petersen_A;
        if (s == "petersen_B")
            return WitnessMatrix::petersen_B;
        if (s == "k33_C")
            return WitnessMatrix::k33_C;
        throw InputError("unknown witness matrix '" + string(s) + "'");
    }

    auto witness_matrices(WitnessMatrix which) -> IntMatrix
    {
        // adjacency of the outer 5-cycle and of the inner pentagram, each
        // relative to its own block of five vertices
        const IntMatrix outer{
            {0, 1, 0, 0, 1},
            {1, 0, 1, 0, 0},
            {0, 1, 0, 1, 0},
            {0, 0, 1, 0, 1},
            {1, 0, 0, 1, 0}};
        const IntMatrix inner{
            {0, 0, 1, 1, 0},
            {0, 0, 0, 1, 1},
            {1, 0, 0, 0, 1},
            {1, 1, 0, 0, 0},
            {0, 1, 1, 0, 0}};

        switch (which) {
            case WitnessMatrix::petersen_A:
            case WitnessMatrix::petersen_B: {
                bool loop = which == WitnessMatrix::petersen_A;
                IntMatrix m(10, 10);
                for (int i = 0; i < 5; ++i) {
                    for (int j = 0; j < 5; ++j) {
                        m(i, j) = loop ? outer(i, j) - (i == j) : -outer(i, j);
                        m(5 + i, 5 + j) = loop ? inner(i, j) - (i == j) : inner(i, j);
                    }
                    m(i, 5 + i) = m(5 + i, i) = 1;
                }
                return m;
            }
            case WitnessMatrix::k33_C:
                return IntMatrix{
                    {3, 0, 0, 1, 1, -2, 0, 0, 0, 1, 1, 1},
                    {0, 3, 0, 1, -2, 1, 0, 0, 0, 1, 1, 1},
                    {0, 0, 3, -2, 1, 1, 0, 0, 0, 1, 1, 1},
                    {1, 1, -2, 3, 0, 0, 1, 1, 1, 0, 0, 0},
                    {1, -2, 1, 0, 3, 0, 1, 1, 1, 0, 0, 0},
                    {-2, 1, 1, 0, 0, 3, 1, 1, 1, 0, 0, 0}};
        }
        throw InputError("unknown witness matrix");
    }

    namespace
    {
        auto nonzero(Rng & rng, int64_t bound) -> int64_t
        {
            auto v = rng.uniform(1, bound);
            return rng.uniform(0, 1) ? v : -v;
        }

        auto sample_square(const Graph & g, PatternKind diag, int64_t bound, Rng & rng) -> IntMatrix
        {
            int n = g.n();
            IntMatrix m(n, n);
            for (int i = 0; i < n; ++i) {
                switch (diag) {
                    case PatternKind::S_loop: m(i, i) = nonzero(rng, bound); break;
                    case PatternKind::S_zero: m(i, i) = 0; break;
                    default: m(i, i) = rng.uniform(-bound, bound); break;
                }
                for (int j = i + 1; j < n; ++j)
                    if (g.adjacent(i, j))
                        m(i, j) = m(j, i) = nonzero(rng, bound);
            }
            return m;
        }
    }

    auto sample_pattern_matrix(const Graph & g, PatternKind p, int64_t entry_bound, Rng & rng) -> IntMatrix
    {
        if (entry_bound < 1)
            throw InputError("entry bound must be at least 1");
        if (p == PatternKind::L_pair) {
            auto a = sample_square(g, PatternKind::S_loop, entry_bound, rng);
            auto b = sample_square(g, PatternKind::S_zero, entry_bound, rng);
            return hconcat(a, b);
        }
        return sample_square(g, p, entry_bound, rng);
    }

    auto sample_rank_bound(const Graph & g, PatternKind p, int trials, std::uint64_t seed, int64_t entry_bound) -> SampleBound
    {
        if (trials < 1)
            throw InputError("trials must be at least 1");
        if (entry_bound < 1)
            throw InputError("entry bound must be at least 1");
        int best = g.n();
        for (int t = 0; t < trials; ++t) {
            Rng rng(seed, std::uint64_t(t));
            best = std::min(best, rank_exact(sample_pattern_matrix(g, p, entry_bound, rng)));
        }
        return {best, g.n() - best};
    }

    auto clique_cover_matrix(const Graph & g, const vector<VertexSet> & cliques) -> CliqueCoverMatrix
    {
        VertexSet touched;
        for (auto & c : cliques) {
            if (! c.is_subset_of(g.vertices()) || ! is_clique(g, c))
                throw InputError("clique_cover_matrix: input set is not a clique of the graph");
            touched |= c;
        }
        if (! covers_edges(g, cliques))
            throw InputError("clique_cover_matrix: cliques leave an edge uncovered");

        CliqueCoverMatrix r{IntMatrix(g.n(), g.n()), {}, int(cliques.size())};
        auto add_block = [&](const VertexSet & c) {
            c.for_each([&](int i) { c.for_each([&](int j) { ++r.matrix(i, j); }); });
        };
        for (auto & c : cliques)
            add_block(c);
        (g.vertices() - touched).for_each([&](int v) {
            r.added_singletons.push_back(v);
            add_block(VertexSet{v});
        });
        r.cliques_used += int(r.added_singletons.size());
        return r;
    }

    auto embed_L_block(const Graph & g, const IntMatrix & a, const IntMatrix & b) -> IntMatrix
    {
        if (! pattern_member(a, g, PatternKind::S_loop))
            throw InputError("embed_L_block: A is not in the S_loop pattern of the graph");
        if (! pattern_member(b, g, PatternKind::S_zero))
            throw InputError("embed_L_block: B is not in the S_zero pattern of the graph");
        int n = g.n();
        IntMatrix m(3 * n, 3 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m(i, n + j) = m(n + i, j) = a(i, j);
                m(i, 2 * n + j) = m(2 * n + i, j) = b(i, j);
            }
        return m;
    }
}

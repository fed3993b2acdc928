#ifndef ZFGD_LINRANK_HH
#define ZFGD_LINRANK_HH

#include <zfgd/graph.hh>
#include <zfgd/random.hh>
#include <zfgd/solver_options.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zfgd
{
    /// Dense row-major integer matrix. Entries are machine integers; rank
    /// computations promote to arbitrary precision.
    class IntMatrix
    {
        public:
            IntMatrix() = default;
            IntMatrix(int rows, int cols);
            IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

            static auto identity(int n) -> IntMatrix;

            auto rows() const -> int { return _rows; }
            auto cols() const -> int { return _cols; }
            auto operator()(int i, int j) const -> std::int64_t { return _data[std::size_t(i) * _cols + j]; }
            auto operator()(int i, int j) -> std::int64_t & { return _data[std::size_t(i) * _cols + j]; }

            auto is_symmetric() const -> bool;
            /// Columns [first, first + count).
            auto column_block(int first, int count) const -> IntMatrix;

            friend auto operator==(const IntMatrix &, const IntMatrix &) -> bool = default;

        private:
            int _rows = 0, _cols = 0;
            std::vector<std::int64_t> _data;
    };

    /// [a b]; row counts must agree.
    auto hconcat(const IntMatrix & a, const IntMatrix & b) -> IntMatrix;

    /// "rows cols" on the first line, then one whitespace-separated row per line.
    auto parse_matrix(std::string_view text) -> IntMatrix;
    auto format_matrix(const IntMatrix & m) -> std::string;
    auto matrix_to_json(const IntMatrix & m) -> nlohmann::ordered_json;

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    auto rank_exact(const IntMatrix & m) -> int;

    enum class PatternKind
    {
        S,      // free diagonal
        S_loop, // every diagonal entry nonzero
        S_zero, // every diagonal entry zero
        L_pair  // n x 2n: [A B], A of S_loop pattern, B of S_zero pattern
    };

    auto pattern_name(PatternKind p) -> std::string_view;
    auto parse_pattern(std::string_view s) -> PatternKind;

    /// Off-diagonal support must equal E(g) exactly and blocks must be
    /// symmetric. Throws InputError on a dimension mismatch.
    auto pattern_member(const IntMatrix & m, const Graph & g, PatternKind p) -> bool;

    enum class WitnessMatrix
    {
        petersen_A,
        petersen_B,
        k33_C
    };

    auto parse_witness_matrix(std::string_view s) -> WitnessMatrix;

    /// Witness matrices for the labelled Petersen graph (rank 5 in S_loop,
    /// rank 6 in S_zero) and the 6x12 L-pair for K_{3,3} (rank 4).
    auto witness_matrices(WitnessMatrix which) -> IntMatrix;

    /// One random member of the pattern, entries in [-entry_bound, entry_bound]
    /// with required nonzeros drawn from the same range minus zero.
    auto sample_pattern_matrix(const Graph & g, PatternKind p, std::int64_t entry_bound, Rng & rng) -> IntMatrix;

    struct SampleBound
    {
        int min_rank;         // upper bound on the mr-variant
        int max_nullity_seen; // n - min_rank, lower bound on the M-variant
    };

    /// Trial t draws from the stream Rng(seed, t).
    auto sample_rank_bound(const Graph & g, PatternKind p, int trials = 32, std::uint64_t seed = 0, std::int64_t entry_bound = 10)
        -> SampleBound;

    struct CliqueCoverMatrix
    {
        IntMatrix matrix;
        std::vector<int> added_singletons; // vertices that were in no clique
        int cliques_used;                  // input cliques plus added singletons
    };

    /// Sum of all-ones blocks, one per clique. Vertices in no clique receive a
    /// singleton block so the diagonal is nonzero throughout. Throws InputError
    /// for a non-clique or an uncovered edge.
    auto clique_cover_matrix(const Graph & g, const std::vector<VertexSet> & cliques) -> CliqueCoverMatrix;

    /// [[O A B] [A O O] [B O O]], which lies in S_zero(B_L(g)) and has twice
    /// the rank of [A B]. Throws InputError unless a is S_loop and b is S_zero
    /// for g.
    auto embed_L_block(const Graph & g, const IntMatrix & a, const IntMatrix & b) -> IntMatrix;

    struct BoundsReport
    {
        int alpha = 0;
        int beta = 0;
        int gamma_dom = 0;
        std::optional<int> cc; // absent when skipped
        VertexSet independent_set;
        VertexSet vertex_cover;
        VertexSet dominating_set;
        std::vector<VertexSet> clique_cover;
    };

    struct BoundsOptions
    {
        int max_n = 20;
        int max_n_cc = 16;
        bool skip_cc = false;
    };

    /// Exact independence, vertex cover, domination and edge clique cover
    /// numbers with certificates. Throws CapExceeded past max_n, or past
    /// max_n_cc unless skip_cc is set, in which case cc is left empty.
    auto combinatorial_bounds(const Graph & g, const BoundsOptions & options = {}) -> BoundsReport;

    /// All maximal cliques with at least two vertices (Bron-Kerbosch with pivoting).
    auto maximal_cliques(const Graph & g) -> std::vector<VertexSet>;

    auto is_independent(const Graph & g, const VertexSet & s) -> bool;
    auto is_vertex_cover(const Graph & g, const VertexSet & s) -> bool;
    auto is_dominating(const Graph & g, const VertexSet & s) -> bool;
    auto is_clique(const Graph & g, const VertexSet & s) -> bool;
    auto covers_edges(const Graph & g, const std::vector<VertexSet> & cliques) -> bool;
}

#endif

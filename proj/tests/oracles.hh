#ifndef ZFGD_TESTS_ORACLES_HH
#define ZFGD_TESTS_ORACLES_HH

// Slow reference implementations written straight from the definitions. They
// share nothing with the library beyond reading the edge list.

#include <zfgd/forcing.hh>
#include <zfgd/graph.hh>
#include <zfgd/grundy.hh>
#include <zfgd/linrank.hh>

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle
{
    using Adj = std::vector<std::vector<bool>>;

    inline auto adjacency(const zfgd::Graph & g) -> Adj
    {
        Adj a(g.n(), std::vector<bool>(g.n(), false));
        for (auto [u, v] : g.edges())
            a[u][v] = a[v][u] = true;
        return a;
    }

    // one force attempt: may x force y given the blue vector?
    inline auto can_force(const Adj & a, const std::vector<bool> & blue, zfgd::Rule rule, int x, int y) -> bool
    {
        int n = int(a.size());
        if (blue[y])
            return false;
        bool self = x == y;
        bool loop = rule == zfgd::Rule::Zld || (rule == zfgd::Rule::ZL && self);
        bool needs_blue_actor = rule == zfgd::Rule::Z;
        if (self && ! loop)
            return false;
        if (! self && ! a[x][y])
            return false;
        if (needs_blue_actor && ! blue[x])
            return false;
        // every other member of the actor's neighbourhood must be blue
        for (int w = 0; w < n; ++w) {
            bool in_nbhd = a[x][w] || (w == x && loop);
            if (in_nbhd && w != y && ! blue[w])
                return false;
        }
        return true;
    }

    inline auto closure(const Adj & a, std::vector<bool> blue, zfgd::Rule rule) -> std::vector<bool>
    {
        int n = int(a.size());
        for (bool changed = true; changed;) {
            changed = false;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (can_force(a, blue, rule, x, y)) {
                        blue[y] = true;
                        changed = true;
                    }
        }
        return blue;
    }

    inline auto mask_to_blue(std::uint32_t mask, int n) -> std::vector<bool>
    {
        std::vector<bool> b(n);
        for (int i = 0; i < n; ++i)
            b[i] = (mask >> i) & 1;
        return b;
    }

    inline auto forcing_number(const zfgd::Graph & g, zfgd::Rule rule) -> int
    {
        auto a = adjacency(g);
        int n = g.n();
        int best = n;
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            int k = __builtin_popcount(m);
            if (k >= best)
                continue;
            auto b = closure(a, mask_to_blue(m, n), rule);
            if (std::all_of(b.begin(), b.end(), [](bool x) { return x; }))
                best = k;
        }
        return best;
    }

    inline auto closed_gain(zfgd::SeqKind k) -> bool { return k == zfgd::SeqKind::Dominating || k == zfgd::SeqKind::Lseq; }
    inline auto closed_footprint(zfgd::SeqKind k) -> bool { return k == zfgd::SeqKind::Zseq || k == zfgd::SeqKind::Dominating; }

    inline auto nbhd_mask(const Adj & a, int v, bool closed) -> std::uint32_t
    {
        std::uint32_t m = closed ? 1u << v : 0;
        for (int w = 0; w < int(a.size()); ++w)
            if (a[v][w])
                m |= 1u << w;
        return m;
    }

    // Longest sequence of the kind, restricted to candidates, by DP over the
    // set of chosen vertices (the footprint depends only on that set).
    inline auto grundy_number(const zfgd::Graph & g, zfgd::SeqKind kind, std::uint32_t candidates) -> int
    {
        auto a = adjacency(g);
        int n = g.n();
        std::vector<std::uint32_t> gain(n), foot(n);
        for (int v = 0; v < n; ++v) {
            gain[v] = nbhd_mask(a, v, closed_gain(kind));
            foot[v] = nbhd_mask(a, v, closed_footprint(kind));
        }
        std::vector<int> best(std::size_t(1) << n, 0);
        for (std::uint32_t s = (1u << n); s-- > 0;) {
            std::uint32_t fp = 0;
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1)
                    fp |= foot[v];
            int b = 0;
            for (int v = 0; v < n; ++v)
                if (! ((s >> v) & 1) && ((candidates >> v) & 1) && (gain[v] & ~fp))
                    b = std::max(b, 1 + best[s | (1u << v)]);
            best[s] = b;
        }
        return best[0];
    }

    inline auto grundy_number(const zfgd::Graph & g, zfgd::SeqKind kind) -> int
    {
        return grundy_number(g, kind, g.n() == 32 ? ~0u : (1u << g.n()) - 1);
    }

    inline auto is_valid_sequence(const zfgd::Graph & g, zfgd::SeqKind kind, const std::vector<int> & seq) -> bool
    {
        auto a = adjacency(g);
        std::uint32_t fp = 0, used = 0;
        for (int v : seq) {
            if ((used >> v) & 1)
                return false;
            used |= 1u << v;
            if (! (nbhd_mask(a, v, closed_gain(kind)) & ~fp))
                return false;
            fp |= nbhd_mask(a, v, closed_footprint(kind));
        }
        return true;
    }

    // Gaussian elimination over the rationals.
    inline auto rank(const zfgd::IntMatrix & m) -> int
    {
        std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                a[i][j] = mpq_class(static_cast<long>(m(i, j)));
        int r = 0;
        for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
            int p = r;
            while (p < m.rows() && a[p][c] == 0)
                ++p;
            if (p == m.rows())
                continue;
            std::swap(a[p], a[r]);
            for (int i = 0; i < m.rows(); ++i)
                if (i != r && a[i][c] != 0) {
                    mpq_class f = a[i][c] / a[r][c];
                    for (int j = c; j < m.cols(); ++j)
                        a[i][j] -= f * a[r][j];
                }
            ++r;
        }
        return r;
    }
}

#endif

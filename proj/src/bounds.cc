#include <zfgd/errors.hh>
#include <zfgd/linrank.hh>

#include <algorithm>

using std::string;
using std::to_string;
using std::vector;

namespace zfgd
{
    auto is_independent(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&](int v) { ok = ok && ! g.open(v).intersects(s); });
        return ok;
    }

    auto is_vertex_cover(const Graph & g, const VertexSet & s) -> bool
    {
        return is_independent(g, g.vertices() - s);
    }

    auto is_dominating(const Graph & g, const VertexSet & s) -> bool
    {
        VertexSet dom;
        s.for_each([&](int v) { dom |= g.closed(v); });
        return dom == g.vertices();
    }

    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        if (s.none())
            return false;
        bool ok = true;
        s.for_each([&](int v) { ok = ok && (s - g.closed(v)).none(); });
        return ok;
    }

    auto covers_edges(const Graph & g, const vector<VertexSet> & cliques) -> bool
    {
        for (auto [u, v] : g.edges()) {
            bool covered = std::any_of(cliques.begin(), cliques.end(), [&](const VertexSet & c) { return c.test(u) && c.test(v); });
            if (! covered)
                return false;
        }
        return true;
    }

    namespace
    {
        auto max_independent(const Graph & g, const VertexSet & cand, VertexSet & current, VertexSet & best) -> void
        {
            if (current.count() + cand.count() <= best.count())
                return;
            int v = cand.first();
            if (v == -1) {
                best = current;
                return;
            }
            current.set(v);
            max_independent(g, cand - g.closed(v), current, best);
            current.reset(v);
            auto rest = cand;
            rest.reset(v);
            max_independent(g, rest, current, best);
        }

        auto min_dominating(const Graph & g, const VertexSet & undominated, VertexSet & current, VertexSet & best, int max_closed) -> void
        {
            int u = undominated.first();
            if (u == -1) {
                if (current.count() < best.count())
                    best = current;
                return;
            }
            int need = (undominated.count() + max_closed - 1) / max_closed;
            if (current.count() + need >= best.count())
                return;
            // some member of N[u] must be chosen
            g.closed(u).for_each([&](int w) {
                if (current.test(w))
                    return;
                current.set(w);
                min_dominating(g, undominated - g.closed(w), current, best, max_closed);
                current.reset(w);
            });
        }

        auto bron_kerbosch(const Graph & g, VertexSet r, VertexSet p, VertexSet x, vector<VertexSet> & out) -> void
        {
            if (p.none() && x.none()) {
                if (r.count() >= 2)
                    out.push_back(r);
                return;
            }
            int pivot = -1, pivot_deg = -1;
            (p | x).for_each([&](int u) {
                int d = (p & g.open(u)).count();
                if (d > pivot_deg) {
                    pivot = u;
                    pivot_deg = d;
                }
            });
            (p - g.open(pivot)).for_each([&](int v) {
                auto r2 = r;
                r2.set(v);
                bron_kerbosch(g, r2, p & g.open(v), x & g.open(v), out);
                p.reset(v);
                x.set(v);
            });
        }

        struct CoverSearch
        {
            const vector<std::pair<int, int>> & edges;
            const vector<vector<int>> & containing; // cliques covering each edge
            const vector<VertexSet> & cliques;
            vector<int> current, best;

            auto covered(int e) const -> bool
            {
                auto [u, v] = edges[e];
                for (int c : current)
                    if (cliques[c].test(u) && cliques[c].test(v))
                        return true;
                return false;
            }

            auto search(int from) -> void
            {
                int e = from;
                while (e < int(edges.size()) && covered(e))
                    ++e;
                if (e == int(edges.size())) {
                    if (current.size() < best.size())
                        best = current;
                    return;
                }
                if (current.size() + 1 >= best.size())
                    return;
                for (int c : containing[e]) {
                    current.push_back(c);
                    search(e + 1);
                    current.pop_back();
                }
            }
        };
    }

    auto maximal_cliques(const Graph & g) -> vector<VertexSet>
    {
        vector<VertexSet> out;
        bron_kerbosch(g, {}, g.vertices(), {}, out);
        std::sort(out.begin(), out.end(), [](const VertexSet & a, const VertexSet & b) { return lex_less(a, b); });
        return out;
    }

    auto combinatorial_bounds(const Graph & g, const BoundsOptions & options) -> BoundsReport
    {
        if (g.n() > options.max_n)
            throw CapExceeded("combinatorial bounds: n = " + to_string(g.n()) + " exceeds cap " + to_string(options.max_n));

        BoundsReport r;

        VertexSet current, best;
        max_independent(g, g.vertices(), current, best);
        r.independent_set = best;
        r.alpha = best.count();
        r.vertex_cover = g.vertices() - best;
        r.beta = g.n() - r.alpha;

        int max_closed = 1;
        for (int v = 0; v < g.n(); ++v)
            max_closed = std::max(max_closed, g.degree(v) + 1);
        current = {};
        auto dom = g.vertices();
        min_dominating(g, g.vertices(), current, dom, max_closed);
        r.dominating_set = dom;
        r.gamma_dom = dom.count();

        if (! options.skip_cc) {
            if (g.n() > options.max_n_cc)
                throw CapExceeded("edge clique cover: n = " + to_string(g.n()) + " exceeds cap " + to_string(options.max_n_cc));
            auto cliques = maximal_cliques(g);
            auto edges = g.edges();
            vector<vector<int>> containing(edges.size());
            for (std::size_t e = 0; e < edges.size(); ++e)
                for (std::size_t c = 0; c < cliques.size(); ++c)
                    if (cliques[c].test(edges[e].first) && cliques[c].test(edges[e].second))
                        containing[e].push_back(int(c));

            CoverSearch search{edges, containing, cliques, {}, {}};
            // one clique per edge is always a cover
            search.best.assign(edges.size() + 1, -1);
            search.search(0);
            for (int c : search.best)
                r.clique_cover.push_back(cliques[c]);
            r.cc = int(r.clique_cover.size());
        }
        return r;
    }
}

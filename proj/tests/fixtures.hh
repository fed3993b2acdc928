#ifndef ZFGD_TESTS_FIXTURES_HH
#define ZFGD_TESTS_FIXTURES_HH

#include <zfgd/graph.hh>

#include <string>
#include <vector>

namespace fixture
{
    inline auto graph(int n, std::initializer_list<std::pair<int, int>> one_based) -> zfgd::Graph
    {
        zfgd::Graph g(n);
        for (auto [u, v] : one_based)
            g.add_edge(u - 1, v - 1);
        return g;
    }

    // six vertices, a star at 3 with a pendant path 3-5-6
    inline auto six_vertex() -> zfgd::Graph { return graph(6, {{1, 3}, {2, 3}, {3, 4}, {3, 5}, {5, 6}}); }

    inline auto path(int n) -> zfgd::Graph { return zfgd::family(zfgd::Family::path, {n}); }
    inline auto k33() -> zfgd::Graph { return zfgd::family(zfgd::Family::complete_bipartite, {3, 3}); }
    inline auto petersen() -> zfgd::Graph { return zfgd::family(zfgd::Family::petersen); }

    // every graph on 1..7 vertices up to isomorphism, in atlas order
    inline auto atlas(int max_n = 7) -> std::vector<zfgd::Graph>
    {
        auto all = zfgd::read_graph6_file(std::string(ZFGD_TEST_DATA) + "/atlas_n1_7.g6");
        std::vector<zfgd::Graph> r;
        for (auto & g : all)
            if (g.n() <= max_n)
                r.push_back(g);
        return r;
    }

    inline auto set(std::initializer_list<int> one_based) -> zfgd::VertexSet
    {
        zfgd::VertexSet s;
        for (int v : one_based)
            s.set(v - 1);
        return s;
    }
}

#endif

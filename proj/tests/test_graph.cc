#include "fixtures.hh"

#include <zfgd/errors.hh>
#include <zfgd/graph.hh>
#include <zfgd/random.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace zfgd;

TEST_CASE("vertex set basics")
{
    VertexSet s{0, 5, 64, 130, 191};
    CHECK(s.count() == 5);
    CHECK(s.first() == 0);
    CHECK(s.next(5) == 64);
    CHECK(s.last() == 191);
    CHECK(s.to_vector() == std::vector<int>{0, 5, 64, 130, 191});
    s.reset(64);
    CHECK(! s.test(64));
    CHECK((VertexSet::range(70) - VertexSet::range(69)).to_vector() == std::vector<int>{69});
    CHECK(VertexSet{}.none());
    CHECK(VertexSet{1, 2}.is_subset_of(VertexSet{0, 1, 2}));
    CHECK(! VertexSet{1, 3}.intersects(VertexSet{0, 2}));
    CHECK(lex_less(VertexSet{0, 3}, VertexSet{1, 2}));
}

TEST_CASE("graph6 reference strings")
{
    // encodings cross-checked against networkx
    CHECK(encode_graph6(family(Family::complete, {4})) == "C~");
    CHECK(encode_graph6(fixture::path(4)) == "Ch");
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(fixture::six_vertex()) == "EXGG");
    CHECK(encode_graph6(fixture::k33()) == "EFz_");
    CHECK(encode_graph6(fixture::petersen()) == "IheA@GUAo");

    CHECK(parse_graph6("Ch") == fixture::path(4));
    CHECK(parse_graph6(">>graph6<<EXGG\n") == fixture::six_vertex());
    CHECK(parse_graph6("?").n() == 0);
}

TEST_CASE("graph6 round trip over every labelled graph up to five vertices")
{
    for (int n = 0; n <= 5; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                slots.emplace_back(i, j);
        for (std::uint32_t m = 0; m < (1u << slots.size()); ++m) {
            Graph g(n);
            for (std::size_t k = 0; k < slots.size(); ++k)
                if ((m >> k) & 1)
                    g.add_edge(slots[k].first, slots[k].second);
            auto text = encode_graph6(g);
            REQUIRE(parse_graph6(text) == g);
            CHECK(std::all_of(text.begin(), text.end(), [](char c) { return c >= 63 && c <= 126; }));
        }
    }
}

TEST_CASE("graph6 errors carry offsets")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);
    try {
        parse_graph6("C!");
        FAIL("expected a parse error");
    } catch (const ParseError & e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("edge lists")
{
    auto g = parse_edge_list("# fig\nn 6\n1 3\n2 3\n3 4 # hub\n3 5\n5 6\n");
    CHECK(g == fixture::six_vertex());
    CHECK(parse_edge_list(encode_edge_list(g)) == g);
    CHECK(load_graph_argument(std::string("@") + ZFGD_TEST_DATA + "/six_vertex.edges") == g);
    CHECK(load_graph_argument("EXGG") == g);

    CHECK_THROWS_AS(parse_edge_list("n 3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 3\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 3\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    try {
        parse_edge_list("n 3\n1 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError & e) {
        CHECK(e.offset() == 6);
    }
    CHECK_THROWS_AS(load_graph_argument("@/nonexistent/file.edges"), InputError);
}

TEST_CASE("graph edits")
{
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.isolated_count() == 1);
    CHECK(g.has_edge());
    CHECK_THROWS_AS(Graph(max_vertices + 1), InputError);

    auto h = add_isolated(fixture::path(3), 2);
    CHECK(h.n() == 5);
    CHECK(h.edge_count() == 2);
    CHECK(h.isolated_count() == 2);
}

TEST_CASE("families")
{
    auto p = fixture::petersen();
    CHECK(p.n() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);
    // girth 5: no triangles and no 4-cycles
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            CHECK((p.open(u) & p.open(v)).count() == (p.adjacent(u, v) ? 0 : 1));

    CHECK(family(Family::cycle, {5}).edge_count() == 5);
    CHECK(family(Family::complete, {5}).edge_count() == 10);
    CHECK(family(Family::empty, {4}).edge_count() == 0);
    CHECK(fixture::k33().edge_count() == 9);
    CHECK_THROWS_AS(family(Family::cycle, {2}), InputError);
    CHECK_THROWS_AS(family(Family::path, {}), InputError);
    CHECK_THROWS_AS(family(Family::path, {63}), InputError);
    CHECK_THROWS_AS(parse_family("wheel"), InputError);
    CHECK(parse_family("complete_bipartite") == Family::complete_bipartite);
}

TEST_CASE("bipartition")
{
    auto parts = bipartition(fixture::k33());
    REQUIRE(parts);
    CHECK(parts->first == VertexSet{0, 1, 2});
    CHECK(parts->second == VertexSet{3, 4, 5});
    CHECK(! bipartition(family(Family::cycle, {5})));
    CHECK(bipartition(Graph(3)));
}

TEST_CASE("B_L structure on random graphs up to eight vertices")
{
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = int(rng.uniform(1, 8));
        auto g = random_graph(rng, n, 0.4);
        auto b = build_BL(g);
        REQUIRE(b.n() == 3 * n);
        CHECK(b.edge_count() == 4 * g.edge_count() + n);
        auto xs = b.role_set(Role::x);
        CHECK(xs == VertexSet::range(n));
        CHECK(b.role_set(Role::y) == VertexSet::range(2 * n) - VertexSet::range(n));
        CHECK(b.role_set(Role::z) == VertexSet::range(3 * n) - VertexSet::range(2 * n));
        for (int i = 0; i < n; ++i) {
            CHECK(b.degree(i) == 2 * g.degree(i) + 1);
            CHECK(b.degree(n + i) == g.degree(i) + 1);
            CHECK(b.degree(2 * n + i) == g.degree(i));
            CHECK(b.labels()[n + i].source == i);
            // x side is independent, every edge crosses
            CHECK(! b.open(i).intersects(xs));
        }
        CHECK(bipartition(b));
    }
}

TEST_CASE("B_L of P4")
{
    auto b = build_BL(fixture::path(4));
    CHECK(b.n() == 12);
    CHECK(b.edge_count() == 16);
    CHECK(b.adjacent(0, 4)); // x1 y1
    CHECK(b.adjacent(0, 5)); // x1 y2
    CHECK(b.adjacent(0, 9)); // x1 z2
    CHECK(! b.adjacent(0, 8)); // x1 z1
}

TEST_CASE("graph JSON round trip")
{
    auto g = build_BL(fixture::six_vertex());
    auto j = graph_to_json(g);
    CHECK(j["roles"][0] == "x1");
    auto back = graph_from_json(nlohmann::ordered_json::parse(j.dump()));
    CHECK(back == g);
    CHECK_THROWS_AS(graph_from_json(nlohmann::ordered_json::parse(R"({"n": 2, "edges": [[1, 3]]})")), InputError);
}

namespace
{
    // smallest adjacency word over all relabellings
    auto canonical(const Graph & g) -> std::uint64_t
    {
        std::vector<int> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        auto edges = g.edges();
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t w = 0;
            for (auto [u, v] : edges) {
                int a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
                w |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
            }
            best = std::min(best, w);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
}

TEST_CASE("atlas data holds each isomorphism class once")
{
    auto all = fixture::atlas();
    std::vector<int> counts(8, 0);
    std::set<std::pair<int, std::uint64_t>> seen;
    for (auto & g : all) {
        ++counts[g.n()];
        CHECK(seen.insert({g.n(), canonical(g)}).second);
    }
    CHECK(counts == std::vector<int>{0, 1, 2, 4, 11, 34, 156, 1044});
}

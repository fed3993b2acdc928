#ifndef ZFGD_GRAPH_HH
#define ZFGD_GRAPH_HH

#include <zfgd/vertex_set.hh>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zfgd
{
    /// Largest vertex count accepted from graph6 / edge-list input or from the
    /// family generators. Internally graphs may grow to 3x this (B_L products).
    inline constexpr int max_input_vertices = 62;
    inline constexpr int max_vertices = 3 * max_input_vertices;

    enum class Role
    {
        plain,
        x,
        y,
        z
    };

    struct VertexLabel
    {
        Role role = Role::plain;
        int source = -1; // 0-based index of the originating vertex of G

        friend auto operator==(const VertexLabel &, const VertexLabel &) -> bool = default;
    };

    auto role_name(Role r) -> std::string_view;

    /// Simple undirected graph. Vertices are 0-based internally; every text
    /// format uses 1-based labels.
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(int n);

            auto n() const -> int { return _n; }
            auto open(int v) const -> const VertexSet & { return _adj[v]; }
            auto closed(int v) const -> VertexSet
            {
                auto r = _adj[v];
                r.set(v);
                return r;
            }
            auto adjacent(int u, int v) const -> bool { return _adj[u].test(v); }
            auto degree(int v) const -> int { return _adj[v].count(); }
            auto vertices() const -> VertexSet { return VertexSet::range(_n); }

            /// Idempotent. Throws InputError on loops or out-of-range endpoints.
            auto add_edge(int u, int v) -> void;

            auto edge_count() const -> int;
            /// Edges as (u, v) with u < v, ascending.
            auto edges() const -> std::vector<std::pair<int, int>>;

            auto has_edge() const -> bool;
            auto isolated_count() const -> int;

            auto labels() const -> const std::vector<VertexLabel> & { return _labels; }
            auto has_roles() const -> bool { return ! _labels.empty(); }
            auto set_labels(std::vector<VertexLabel> labels) -> void;
            /// Vertices carrying the given role.
            auto role_set(Role r) const -> VertexSet;

            friend auto operator==(const Graph &, const Graph &) -> bool = default;

        private:
            int _n = 0;
            std::vector<VertexSet> _adj;
            std::vector<VertexLabel> _labels;
    };

    /// Disjoint union with r isolated vertices appended.
    auto add_isolated(const Graph & g, int r) -> Graph;

    /// Two-colouring by BFS (lowest uncoloured vertex of each component goes to
    /// side 0). Empty when g is not bipartite.
    auto bipartition(const Graph & g) -> std::optional<std::pair<VertexSet, VertexSet>>;

    // text formats

    auto parse_graph6(std::string_view text) -> Graph;
    auto encode_graph6(const Graph & g) -> std::string;
    auto parse_edge_list(std::string_view text) -> Graph;
    auto encode_edge_list(const Graph & g) -> std::string;

    /// Accepts a graph6 literal, "@file.g6" (first line) or "@file.edges".
    auto load_graph_argument(std::string_view arg) -> Graph;
    /// Every non-empty line of a .g6 file.
    auto read_graph6_file(const std::string & path) -> std::vector<Graph>;

    auto graph_to_json(const Graph & g) -> nlohmann::ordered_json;
    auto graph_from_json(const nlohmann::ordered_json & j) -> Graph;

    // generators

    enum class Family
    {
        path,
        cycle,
        complete,
        complete_bipartite,
        empty,
        petersen
    };

    auto parse_family(std::string_view name) -> Family;
    auto family_name(Family f) -> std::string_view;

    /// Path/cycle/complete/empty take one size; complete_bipartite takes two;
    /// petersen takes none.
    auto family(Family f, const std::vector<int> & params = {}) -> Graph;

    /// Vertices x_1..x_n, y_1..y_n, z_1..z_n; x_i ~ y_j and x_i ~ z_j for every
    /// edge ij of g, plus x_i ~ y_i for every i.
    auto build_BL(const Graph & g) -> Graph;
}

#endif

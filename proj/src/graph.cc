#include <zfgd/errors.hh>
#include <zfgd/graph.hh>

#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

using std::optional;
using std::pair;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace zfgd
{
    auto role_name(Role r) -> string_view
    {
        switch (r) {
            case Role::plain: return "plain";
            case Role::x: return "x";
            case Role::y: return "y";
            case Role::z: return "z";
        }
        return "plain";
    }

    Graph::Graph(int n) :
        _n(n)
    {
        if (n < 0 || n > max_vertices)
            throw InputError("vertex count " + to_string(n) + " outside [0, " + to_string(max_vertices) + "]");
        _adj.resize(n);
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw InputError("edge endpoint out of range");
        if (u == v)
            throw InputError("self-loop on vertex " + to_string(u + 1));
        _adj[u].set(v);
        _adj[v].set(u);
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (auto & a : _adj)
            twice += a.count();
        return twice / 2;
    }

    auto Graph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> r;
        for (int u = 0; u < _n; ++u)
            for (int v = _adj[u].next(u); v != -1; v = _adj[u].next(v))
                r.emplace_back(u, v);
        return r;
    }

    auto Graph::has_edge() const -> bool
    {
        for (auto & a : _adj)
            if (a.any())
                return true;
        return false;
    }

    auto Graph::isolated_count() const -> int
    {
        int r = 0;
        for (auto & a : _adj)
            r += a.none();
        return r;
    }

    auto Graph::set_labels(vector<VertexLabel> labels) -> void
    {
        if (! labels.empty() && int(labels.size()) != _n)
            throw InputError("label count does not match vertex count");
        _labels = std::move(labels);
    }

    auto Graph::role_set(Role r) const -> VertexSet
    {
        VertexSet s;
        for (int v = 0; v < int(_labels.size()); ++v)
            if (_labels[v].role == r)
                s.set(v);
        return s;
    }

    auto add_isolated(const Graph & g, int r) -> Graph
    {
        Graph h(g.n() + r);
        for (auto [u, v] : g.edges())
            h.add_edge(u, v);
        return h;
    }

    auto bipartition(const Graph & g) -> optional<pair<VertexSet, VertexSet>>
    {
        vector<int> side(g.n(), -1);
        for (int s = 0; s < g.n(); ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            std::deque<int> queue{s};
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                bool clash = false;
                g.open(u).for_each([&](int v) {
                    if (side[v] == -1) {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    }
                    else if (side[v] == side[u])
                        clash = true;
                });
                if (clash)
                    return std::nullopt;
            }
        }
        pair<VertexSet, VertexSet> parts;
        for (int v = 0; v < g.n(); ++v)
            (side[v] == 0 ? parts.first : parts.second).set(v);
        return parts;
    }

    namespace
    {
        auto strip(string_view s) -> string_view
        {
            while (! s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            return s;
        }

        constexpr string_view graph6_header = ">>graph6<<";
    }

    auto parse_graph6(string_view text) -> Graph
    {
        text = strip(text);
        std::size_t base = 0;
        if (text.starts_with(graph6_header)) {
            text.remove_prefix(graph6_header.size());
            base = graph6_header.size();
        }
        if (text.empty())
            throw ParseError("empty graph6 string", base);

        for (std::size_t i = 0; i < text.size(); ++i) {
            auto c = static_cast<unsigned char>(text[i]);
            if (c < 63 || c > 126)
                throw ParseError("byte " + to_string(int(c)) + " outside the graph6 range 63..126", base + i);
        }

        int n = static_cast<unsigned char>(text[0]) - 63;
        if (n == 63)
            throw ParseError("extended graph6 size encoding (n > 62) is not supported", base);

        std::size_t bits = std::size_t(n) * (n - 1) / 2;
        std::size_t expected = 1 + (bits + 5) / 6;
        if (text.size() != expected)
            throw ParseError("graph6 body has " + to_string(text.size()) + " bytes, expected " + to_string(expected) + " for n=" + to_string(n),
                text.size() < expected ? base + text.size() : base + expected);

        Graph g(n);
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
                if ((byte >> (5 - k % 6)) & 1)
                    g.add_edge(i, j);
            }
        return g;
    }

    auto encode_graph6(const Graph & g) -> string
    {
        int n = g.n();
        if (n > max_input_vertices)
            throw InputError("graph6 short form holds at most " + to_string(max_input_vertices) + " vertices");
        string out(1, char(n + 63));
        int acc = 0, used = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | int(g.adjacent(i, j));
                if (++used == 6) {
                    out.push_back(char(acc + 63));
                    acc = used = 0;
                }
            }
        if (used > 0)
            out.push_back(char((acc << (6 - used)) + 63));
        return out;
    }

    namespace
    {
        auto parse_int_token(string_view tok, std::size_t offset) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError("unparsable token '" + string(tok) + "'", offset);
            return value;
        }

        struct Token
        {
            string_view text;
            std::size_t offset;
        };

        auto tokens_of(string_view line, std::size_t line_offset) -> vector<Token>
        {
            vector<Token> r;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                    ++i;
                if (i > start)
                    r.push_back({line.substr(start, i - start), line_offset + start});
            }
            return r;
        }
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        optional<Graph> g;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto eol = text.find('\n', pos);
            if (eol == string_view::npos)
                eol = text.size();
            auto line = text.substr(pos, eol - pos);
            auto hash = line.find('#');
            if (hash != string_view::npos)
                line = line.substr(0, hash);
            auto toks = tokens_of(line, pos);
            if (! toks.empty()) {
                if (! g) {
                    if (toks.size() != 2 || toks[0].text != "n")
                        throw ParseError("edge list must start with 'n <count>'", toks[0].offset);
                    int n = parse_int_token(toks[1].text, toks[1].offset);
                    if (n < 0 || n > max_input_vertices)
                        throw ParseError("vertex count must lie in [0, " + to_string(max_input_vertices) + "]", toks[1].offset);
                    g.emplace(n);
                }
                else {
                    if (toks.size() != 2)
                        throw ParseError("edge line must hold exactly two labels", toks[0].offset);
                    int u = parse_int_token(toks[0].text, toks[0].offset);
                    int v = parse_int_token(toks[1].text, toks[1].offset);
                    if (u < 1 || u > g->n())
                        throw ParseError("label " + to_string(u) + " out of range", toks[0].offset);
                    if (v < 1 || v > g->n())
                        throw ParseError("label " + to_string(v) + " out of range", toks[1].offset);
                    if (u == v)
                        throw ParseError("self-loop on vertex " + to_string(u), toks[0].offset);
                    g->add_edge(u - 1, v - 1);
                }
            }
            pos = eol + 1;
        }
        if (! g)
            throw ParseError("edge list is empty", 0);
        return std::move(*g);
    }

    auto encode_edge_list(const Graph & g) -> string
    {
        string out = "n " + to_string(g.n()) + "\n";
        for (auto [u, v] : g.edges())
            out += to_string(u + 1) + " " + to_string(v + 1) + "\n";
        return out;
    }

    namespace
    {
        auto slurp(const string & path) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw InputError("cannot open " + path);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }

    auto load_graph_argument(string_view arg) -> Graph
    {
        if (! arg.starts_with('@'))
            return parse_graph6(arg);
        string path(arg.substr(1));
        auto body = slurp(path);
        if (path.ends_with(".edges") || path.ends_with(".txt"))
            return parse_edge_list(body);
        auto eol = body.find('\n');
        return parse_graph6(string_view(body).substr(0, eol));
    }

    auto read_graph6_file(const string & path) -> vector<Graph>
    {
        auto body = slurp(path);
        vector<Graph> r;
        std::istringstream in(body);
        string line;
        while (std::getline(in, line))
            if (! strip(line).empty())
                r.push_back(parse_graph6(line));
        return r;
    }

    auto graph_to_json(const Graph & g) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["n"] = g.n();
        auto edges = nlohmann::ordered_json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u + 1, v + 1});
        j["edges"] = std::move(edges);
        if (g.has_roles()) {
            auto roles = nlohmann::ordered_json::array();
            for (auto & l : g.labels())
                roles.push_back(l.role == Role::plain ? string("plain") : string(role_name(l.role)) + to_string(l.source + 1));
            j["roles"] = std::move(roles);
        }
        return j;
    }

    auto graph_from_json(const nlohmann::ordered_json & j) -> Graph
    {
        try {
            Graph g(j.at("n").get<int>());
            for (auto & e : j.at("edges"))
                g.add_edge(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
            if (j.contains("roles")) {
                vector<VertexLabel> labels;
                for (auto & r : j["roles"]) {
                    auto s = r.get<string>();
                    if (s == "plain")
                        labels.push_back({});
                    else {
                        Role role = s[0] == 'x' ? Role::x : s[0] == 'y' ? Role::y : s[0] == 'z' ? Role::z : throw InputError("bad role " + s);
                        labels.push_back({role, parse_int_token(string_view(s).substr(1), 0) - 1});
                    }
                }
                g.set_labels(std::move(labels));
            }
            return g;
        }
        catch (const nlohmann::json::exception & e) {
            throw InputError(string("malformed graph JSON: ") + e.what());
        }
    }

    auto parse_family(string_view name) -> Family
    {
        for (auto f : {Family::path, Family::cycle, Family::complete, Family::complete_bipartite, Family::empty, Family::petersen})
            if (family_name(f) == name)
                return f;
        throw InputError("unknown graph family '" + string(name) + "'");
    }

    auto family_name(Family f) -> string_view
    {
        switch (f) {
            case Family::path: return "path";
            case Family::cycle: return "cycle";
            case Family::complete: return "complete";
            case Family::complete_bipartite: return "complete_bipartite";
            case Family::empty: return "empty";
            case Family::petersen: return "petersen";
        }
        return "";
    }

    auto family(Family f, const vector<int> & params) -> Graph
    {
        auto want = [&](std::size_t k) {
            if (params.size() != k)
                throw InputError(string(family_name(f)) + " takes " + to_string(k) + " size parameter(s)");
            for (int p : params)
                if (p < 0)
                    throw InputError("negative size for " + string(family_name(f)));
        };
        auto checked = [](int n) {
            if (n > max_input_vertices)
                throw InputError("family size exceeds " + to_string(max_input_vertices) + " vertices");
            return Graph(n);
        };

        switch (f) {
            case Family::path: {
                want(1);
                auto g = checked(params[0]);
                for (int i = 0; i + 1 < g.n(); ++i)
                    g.add_edge(i, i + 1);
                return g;
            }
            case Family::cycle: {
                want(1);
                if (params[0] > 0 && params[0] < 3)
                    throw InputError("a cycle needs at least 3 vertices");
                auto g = checked(params[0]);
                for (int i = 0; i < g.n(); ++i)
                    g.add_edge(i, (i + 1) % g.n());
                return g;
            }
            case Family::complete: {
                want(1);
                auto g = checked(params[0]);
                for (int i = 0; i < g.n(); ++i)
                    for (int j = i + 1; j < g.n(); ++j)
                        g.add_edge(i, j);
                return g;
            }
            case Family::complete_bipartite: {
                want(2);
                auto g = checked(params[0] + params[1]);
                for (int i = 0; i < params[0]; ++i)
                    for (int j = 0; j < params[1]; ++j)
                        g.add_edge(i, params[0] + j);
                return g;
            }
            case Family::empty: {
                want(1);
                return checked(params[0]);
            }
            case Family::petersen: {
                want(0);
                Graph g(10);
                for (int i = 0; i < 5; ++i) {
                    g.add_edge(i, (i + 1) % 5);
                    g.add_edge(i, i + 5);
                }
                // inner pentagram 6-8-10-7-9-6
                const int inner[] = {5, 7, 9, 6, 8};
                for (int i = 0; i < 5; ++i)
                    g.add_edge(inner[i], inner[(i + 1) % 5]);
                return g;
            }
        }
        throw InputError("unknown family");
    }

    auto build_BL(const Graph & g) -> Graph
    {
        int n = g.n();
        Graph b(3 * n);
        for (int i = 0; i < n; ++i) {
            b.add_edge(i, n + i);
            g.open(i).for_each([&](int j) {
                b.add_edge(i, n + j);
                b.add_edge(i, 2 * n + j);
            });
        }
        vector<VertexLabel> labels;
        for (auto role : {Role::x, Role::y, Role::z})
            for (int i = 0; i < n; ++i)
                labels.push_back({role, i});
        b.set_labels(std::move(labels));
        return b;
    }
}

// Command-line front end: parameter reports, single solvers, the invariant
// battery and family sweeps.
//
// Exit codes: 0 success, 1 invariant failure, 2 input error, 3 cap exceeded.

#include <zfgd/errors.hh>
#include <zfgd/harness.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using std::cerr;
using std::cout;
using std::string;
using std::vector;

using namespace zfgd;

namespace
{
    struct Globals
    {
        std::uint64_t seed = 0;
        int trials = 32;
        int max_n = 20;
        bool tsv = false;
        bool json = false;
        bool deterministic = true;
        int jobs = 1;
    };

    auto flatten(const nlohmann::ordered_json & j, const string & prefix, vector<std::pair<string, string>> & out) -> void
    {
        if (j.is_object()) {
            for (auto & [k, v] : j.items())
                flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        }
        else if (j.is_string())
            out.emplace_back(prefix, j.get<string>());
        else
            out.emplace_back(prefix, j.dump());
    }

    auto emit(const Globals & g, const nlohmann::ordered_json & j) -> void
    {
        if (g.tsv) {
            vector<std::pair<string, string>> rows;
            flatten(j, "", rows);
            for (auto & [k, v] : rows)
                cout << k << '\t' << v << '\n';
        }
        else
            cout << j.dump(2) << '\n';
    }

    auto solver_options(const Globals & g) -> SolverOptions
    {
        SolverOptions o;
        o.max_n = g.max_n;
        o.deterministic = g.deterministic;
        return o;
    }

    auto read_text(const string & path) -> string
    {
        std::ifstream in(path);
        if (! in)
            throw InputError("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto load_matrix(const string & arg) -> IntMatrix
    {
        if (arg.starts_with("witness:"))
            return witness_matrices(parse_witness_matrix(arg.substr(8)));
        return parse_matrix(read_text(arg));
    }

    auto parse_vertex_list(const string & s, int n) -> VertexSet
    {
        VertexSet r;
        std::stringstream ss(s);
        string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty())
                continue;
            int v = 0;
            try {
                v = std::stoi(tok);
            }
            catch (const std::exception &) {
                throw InputError("bad vertex label '" + tok + "'");
            }
            if (v < 1 || v > n)
                throw InputError("vertex label " + tok + " out of range");
            r.set(v - 1);
        }
        return r;
    }

    auto parse_range(const string & s, int & lo, int & hi) -> void
    {
        auto dots = s.find("..");
        try {
            if (dots == string::npos)
                lo = hi = std::stoi(s);
            else {
                lo = std::stoi(s.substr(0, dots));
                hi = std::stoi(s.substr(dots + 2));
            }
        }
        catch (const std::exception &) {
            throw InputError("bad range '" + s + "' (expected a..b)");
        }
    }

    auto one_based(const VertexSet & s) -> nlohmann::ordered_json
    {
        auto a = nlohmann::ordered_json::array();
        s.for_each([&](int v) { a.push_back(v + 1); });
        return a;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Exact zero forcing and Grundy domination numbers of small graphs"};
    app.require_subcommand(1);

    Globals globals;
    app.add_option("--seed", globals.seed, "Seed for every randomised check")->capture_default_str();
    app.add_option("--trials", globals.trials, "Random matrices per sampled rank bound")->capture_default_str();
    app.add_option("--max-n", globals.max_n, "Vertex cap for the exact solvers")->capture_default_str();
    auto json_flag = app.add_flag("--json", globals.json, "JSON output (default)");
    app.add_flag("--tsv", globals.tsv, "key<TAB>value output")->excludes(json_flag);
    app.add_flag("--deterministic,!--any-optimum", globals.deterministic, "Canonical (lexicographically smallest) optimal certificates")
        ->capture_default_str();
    app.add_option("--jobs", globals.jobs, "Worker threads for sweeps")->capture_default_str();
    app.fallthrough();

    string graph_arg;
    auto add_graph = [&](CLI::App * sub) {
        sub->add_option("graph", graph_arg, "graph6 literal, @file.g6 or @file.edges")->required();
    };

    auto params = app.add_subcommand("params", "All eight parameters, bounds, residuals and certificates");
    add_graph(params);
    string method_name = "direct";
    params->add_option("--method", method_name, "Forcing solver: direct, dual or cross_check")->capture_default_str();

    auto forcing = app.add_subcommand("forcing", "Zero forcing number under one rule");
    add_graph(forcing);
    string rule_arg = "Z";
    forcing->add_option("--rule", rule_arg, "Z, Zld, Zminus or ZL")->required();
    string forcing_method = "dual";
    forcing->add_option("--method", forcing_method, "direct, dual or cross_check")->capture_default_str();
    string initial_arg;
    bool show_closure = false;
    forcing->add_option("--closure", initial_arg, "Also print the canonical game from this comma-separated initial set");
    forcing->add_flag("--closure-empty", show_closure, "Print the canonical game from the empty set");

    auto grundy = app.add_subcommand("grundy", "Grundy domination number of one kind");
    add_graph(grundy);
    string kind_arg;
    grundy->add_option("--kind", kind_arg, "Zseq, Dominating, TotalDominating or Lseq")->required();
    string restrict_arg;
    grundy->add_option("--restrict", restrict_arg, "Comma-separated vertex set (TotalDominating only)");
    string check_arg;
    grundy->add_option("--check", check_arg, "Validate this comma-separated sequence instead of solving");

    auto bl = app.add_subcommand("bl", "The bipartite product B_L(G)");
    add_graph(bl);
    bool bl_g6 = false;
    bl->add_flag("--graph6", bl_g6, "Print only the graph6 encoding");

    auto rank = app.add_subcommand("rank", "Exact rank of an integer matrix");
    string matrix_arg;
    rank->add_option("matrix", matrix_arg, "Matrix file ('rows cols' then rows) or witness:petersen_A|petersen_B|k33_C")->required();
    string pattern_arg, pattern_graph;
    rank->add_option("--pattern", pattern_arg, "Also test membership in S, S_loop, S_zero or L_pair");
    rank->add_option("--graph", pattern_graph, "Graph for --pattern");

    auto bounds = app.add_subcommand("bounds", "alpha, beta, gamma, cc and sampled rank bounds");
    add_graph(bounds);
    bool skip_cc = false;
    bounds->add_flag("--skip-cc", skip_cc, "Do not compute the edge clique cover number");

    auto verify = app.add_subcommand("verify", "Run the invariant battery");
    add_graph(verify);
    bool verbose = false;
    verify->add_flag("--all", verbose, "List passing and skipped invariants too");

    auto sweep_cmd = app.add_subcommand("sweep", "Parameter reports over a family, as JSON lines");
    string family_arg, range_arg = "1..0", out_arg;
    bool sweep_verify = false;
    sweep_cmd->add_option("--family", family_arg, "path, cycle, complete, complete_bipartite:M, empty, petersen, or @file.g6")->required();
    sweep_cmd->add_option("--range", range_arg, "Inclusive size range a..b (line range for files; default all lines)");
    sweep_cmd->add_option("--out", out_arg, "Output path (default stdout)");
    sweep_cmd->add_flag("--verify", sweep_verify, "Also run the invariant battery per graph");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto sopts = solver_options(globals);

        if (*params) {
            auto g = load_graph_argument(graph_arg);
            ReportOptions ropts;
            ropts.solver = sopts;
            ropts.forcing_method = parse_method(method_name);
            auto report = compute_all(g, ropts);
            auto j = report_to_json(report);
            auto problems = audit_report(g, report);
            if (! problems.empty())
                j["audit"] = problems;
            emit(globals, j);
            return problems.empty() ? 0 : 1;
        }

        if (*forcing) {
            auto g = load_graph_argument(graph_arg);
            auto rule = parse_rule(rule_arg);
            auto r = zero_forcing_number(g, rule, parse_method(forcing_method), sopts);
            nlohmann::ordered_json j;
            j["graph6"] = encode_graph6(g);
            j["rule"] = rule_name(rule);
            j["k"] = r.k;
            j["witness"] = one_based(r.witness);
            if (! initial_arg.empty() || show_closure) {
                auto state = closure(g, parse_vertex_list(initial_arg, g.n()), rule);
                auto hist = nlohmann::ordered_json::array();
                for (auto & f : state.history)
                    hist.push_back({{"actor", f.actor + 1}, {"target", f.target + 1}, {"via", f.via == Via::open ? "open" : "closed"}});
                j["closure"] = {{"blue", one_based(state.blue)}, {"history", hist}, {"forcing", state.blue == g.vertices()}};
            }
            emit(globals, j);
            return 0;
        }

        if (*grundy) {
            auto g = load_graph_argument(graph_arg);
            auto kind = parse_kind(kind_arg);
            nlohmann::ordered_json j;
            j["graph6"] = encode_graph6(g);
            j["kind"] = kind_name(kind);
            if (! check_arg.empty()) {
                vector<int> seq;
                std::stringstream ss(check_arg);
                string tok;
                while (std::getline(ss, tok, ','))
                    if (! tok.empty()) {
                        try {
                            seq.push_back(std::stoi(tok) - 1);
                        }
                        catch (const std::exception &) {
                            throw InputError("bad vertex label '" + tok + "'");
                        }
                    }
                auto v = is_valid_sequence(g, kind, seq);
                j["valid"] = v.ok;
                if (v.ok)
                    j["sequence"] = sequence_to_json({kind, seq, v.witnesses});
                else
                    j["failed_step"] = v.failed_step + 1;
                emit(globals, j);
                return 0;
            }
            GrundyResult r;
            if (! restrict_arg.empty()) {
                if (kind != SeqKind::TotalDominating)
                    throw InputError("--restrict applies to TotalDominating only");
                r = grundy_total_restricted(g, parse_vertex_list(restrict_arg, g.n()), sopts);
            }
            else
                r = grundy_number(g, kind, sopts);
            j["k"] = r.k;
            j["sequence"] = sequence_to_json(r.sequence);
            emit(globals, j);
            return 0;
        }

        if (*bl) {
            auto g = load_graph_argument(graph_arg);
            auto b = build_BL(g);
            if (bl_g6) {
                cout << encode_graph6(b) << '\n';
                return 0;
            }
            auto j = graph_to_json(b);
            emit(globals, j);
            return 0;
        }

        if (*rank) {
            auto m = load_matrix(matrix_arg);
            nlohmann::ordered_json j;
            j["rows"] = m.rows();
            j["cols"] = m.cols();
            j["rank"] = rank_exact(m);
            if (! pattern_arg.empty()) {
                if (pattern_graph.empty())
                    throw InputError("--pattern needs --graph");
                auto g = load_graph_argument(pattern_graph);
                auto p = parse_pattern(pattern_arg);
                j["pattern"] = pattern_name(p);
                j["member"] = pattern_member(m, g, p);
            }
            emit(globals, j);
            return 0;
        }

        if (*bounds) {
            auto g = load_graph_argument(graph_arg);
            BoundsOptions bo;
            bo.max_n = globals.max_n;
            bo.skip_cc = skip_cc;
            auto b = combinatorial_bounds(g, bo);
            nlohmann::ordered_json j;
            j["graph6"] = encode_graph6(g);
            j["alpha"] = b.alpha;
            j["beta"] = b.beta;
            j["gamma"] = b.gamma_dom;
            j["cc"] = b.cc ? nlohmann::ordered_json(*b.cc) : nlohmann::ordered_json(nullptr);
            j["independent_set"] = one_based(b.independent_set);
            j["vertex_cover"] = one_based(b.vertex_cover);
            j["dominating_set"] = one_based(b.dominating_set);
            auto cliques = nlohmann::ordered_json::array();
            for (auto & c : b.clique_cover)
                cliques.push_back(one_based(c));
            j["clique_cover"] = cliques;
            nlohmann::ordered_json sampled;
            for (auto p : {PatternKind::S, PatternKind::S_loop, PatternKind::S_zero, PatternKind::L_pair}) {
                auto s = sample_rank_bound(g, p, globals.trials, globals.seed);
                sampled[string(pattern_name(p))] = {{"min_rank", s.min_rank}, {"max_nullity_seen", s.max_nullity_seen}};
            }
            j["sampled"] = sampled;
            emit(globals, j);
            return 0;
        }

        if (*verify) {
            auto g = load_graph_argument(graph_arg);
            VerifyOptions vo;
            vo.solver = sopts;
            auto outcomes = verify_invariants(g, globals.seed, vo);
            int fails = 0;
            auto list = nlohmann::ordered_json::array();
            for (auto & o : outcomes) {
                fails += o.status == Status::fail;
                if (verbose || o.status == Status::fail)
                    list.push_back(outcome_to_json(o));
            }
            nlohmann::ordered_json j;
            j["graph6"] = encode_graph6(g);
            j["checked"] = outcomes.size();
            j["failures"] = fails;
            j["outcomes"] = list;
            emit(globals, j);
            return fails ? 1 : 0;
        }

        if (*sweep_cmd) {
            SweepSpec spec;
            if (family_arg.starts_with("@"))
                spec.g6_file = family_arg.substr(1);
            else {
                auto colon = family_arg.find(':');
                spec.family = parse_family(family_arg.substr(0, colon));
                if (colon != string::npos) {
                    try {
                        spec.fixed_param = std::stoi(family_arg.substr(colon + 1));
                    }
                    catch (const std::exception &) {
                        throw InputError("bad family parameter in '" + family_arg + "'");
                    }
                }
            }
            parse_range(range_arg, spec.lo, spec.hi);
            spec.jobs = globals.jobs;
            spec.verify = sweep_verify;
            spec.seed = globals.seed;

            ReportOptions ropts;
            ropts.solver = sopts;
            VerifyOptions vo;
            vo.solver = sopts;

            SweepSummary summary;
            if (out_arg.empty())
                summary = sweep(spec, cout, ropts, vo);
            else {
                std::ofstream out(out_arg);
                if (! out)
                    throw InputError("cannot write " + out_arg);
                summary = sweep(spec, out, ropts, vo);
            }
            cerr << "graphs " << summary.graphs << ", failures " << summary.failures << ", skipped " << summary.skipped << '\n';
            return summary.failures ? 1 : 0;
        }
    }
    catch (const CapExceeded & e) {
        cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    }
    catch (const InputError & e) {
        cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::invalid_argument & e) {
        cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const InternalInconsistency & e) {
        cerr << "internal inconsistency: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

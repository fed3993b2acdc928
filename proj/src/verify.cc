#include <zfgd/errors.hh>
#include <zfgd/harness.hh>

using std::string;
using std::to_string;
using std::vector;

namespace zfgd
{
    auto status_name(Status s) -> std::string_view
    {
        switch (s) {
            case Status::pass: return "pass";
            case Status::fail: return "fail";
            case Status::skipped: return "skipped";
        }
        return "";
    }

    auto outcome_to_json(const InvariantOutcome & o) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["id"] = o.id;
        j["statement"] = o.statement;
        j["graph6"] = o.graph6;
        j["status"] = status_name(o.status);
        if (! o.reason.empty())
            j["reason"] = o.reason;
        if (! o.payload.is_null())
            j["payload"] = o.payload;
        j["seed"] = o.seed;
        return j;
    }

    auto random_order_closure(const Graph & g, const VertexSet & initial, Rule rule, Rng & rng) -> ColorState
    {
        auto state = ColorState::starting_from(initial);
        while (true) {
            auto forces = applicable_forces(g, state, rule);
            if (forces.empty())
                return state;
            apply_force(g, state, forces[rng.uniform(0, std::int64_t(forces.size()) - 1)], rule);
        }
    }

    namespace
    {
        auto one_based(const VertexSet & s) -> nlohmann::json
        {
            auto a = nlohmann::json::array();
            s.for_each([&](int v) { a.push_back(v + 1); });
            return a;
        }

        auto random_subset(Rng & rng, int n, double p) -> VertexSet
        {
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if (rng.bernoulli(p))
                    s.set(v);
            return s;
        }

        class Battery
        {
            public:
                Battery(const Graph & g, std::uint64_t seed) :
                    _graph6(encode_graph6(g)),
                    _seed(seed)
                {
                }

                auto check(const string & id, const string & statement, bool ok, nlohmann::json payload = {}) -> void
                {
                    InvariantOutcome o{id, statement, _graph6, ok ? Status::pass : Status::fail, {}, {}, _seed};
                    if (! ok) {
                        o.reason = "violated";
                        payload["graph6"] = _graph6;
                        payload["seed"] = _seed;
                        o.payload = std::move(payload);
                    }
                    _out.push_back(std::move(o));
                }

                auto skip(const string & id, const string & statement, const string & reason) -> void
                {
                    _out.push_back({id, statement, _graph6, Status::skipped, reason, {}, _seed});
                }

                auto take() -> vector<InvariantOutcome> { return std::move(_out); }

            private:
                string _graph6;
                std::uint64_t _seed;
                vector<InvariantOutcome> _out;
        };

        // stream indices, one per randomised check
        enum Stream : std::uint64_t
        {
            stream_closure = 1,
            stream_monotone,
            stream_mr,
            stream_asym,
            stream_lpair
        };
    }

    auto verify_invariants(const Graph & g, std::uint64_t seed, const VerifyOptions & options) -> vector<InvariantOutcome>
    {
        Battery b(g, seed);
        int n = g.n();
        bool has_edge = g.has_edge();
        bool no_isolated = g.isolated_count() == 0;

        if (n > options.solver.max_n) {
            b.skip("battery", "all invariants", "n = " + to_string(n) + " exceeds solver cap " + to_string(options.solver.max_n));
            return b.take();
        }

        int z[4], gd[4];
        GrundySequence seqs[4];
        for (int i = 0; i < 4; ++i) {
            auto f = zero_forcing_number(g, all_rules[i], Method::direct, options.solver);
            auto r = grundy_number(g, all_kinds[i], options.solver);
            z[i] = f.k;
            gd[i] = r.k;
            seqs[i] = r.sequence;
            b.check("duality." + string(rule_name(all_rules[i])),
                "forcing number (direct search) + Grundy number (branch and bound) = n for " + string(rule_name(all_rules[i])) + "/" + string(kind_name(all_kinds[i])),
                f.k + r.k == n, {{"forcing", f.k}, {"grundy", r.k}, {"n", n}});
            b.check("certificate." + string(rule_name(all_rules[i])), "optimal forcing set and sequence certificates validate",
                is_forcing_set(g, f.witness, all_rules[i]) && is_valid_sequence(g, all_kinds[i], r.sequence.vertices).ok);
        }
        const int Z = z[0], Zld = z[1], Zminus = z[2], ZL = z[3];
        const int gdZ = gd[0], ggr = gd[1], gdt = gd[2], gdL = gd[3];
        nlohmann::json params = {{"Z", Z}, {"Zld", Zld}, {"Zminus", Zminus}, {"ZL", ZL}, {"gdZ", gdZ}, {"gamma_gr", ggr}, {"gdt", gdt}, {"gdL", gdL}};

        b.check("ineq.ZL<=Zld<=Z", "Z_L <= Z_ldot <= Z", ZL <= Zld && Zld <= Z, params);
        b.check("ineq.ZL<=Zminus<=Z", "Z_L <= Z_- <= Z", ZL <= Zminus && Zminus <= Z, params);
        b.check("ineq.2Z<=n+Zminus", "2 Z <= n + Z_-", 2 * Z <= n + Zminus, params);
        b.check("ineq.2Zld<=n+ZL", "2 Z_ldot <= n + Z_L", 2 * Zld <= n + ZL, params);
        b.check("ineq.gdL<=2gamma_gr", "gd^L <= 2 gamma_gr", gdL <= 2 * ggr, params);
        b.check("order.grundy", "gd^Z <= gd^t <= gd^L and gd^Z <= gamma_gr <= gd^L", gdZ <= gdt && gdt <= gdL && gdZ <= ggr && ggr <= gdL, params);
        if (has_edge) {
            b.check("ineq.ZL+1<=Zld", "Z_L + 1 <= Z_ldot when G has an edge", ZL + 1 <= Zld, params);
            b.check("ineq.gamma_gr<=gdL-1", "gamma_gr <= gd^L - 1 when G has an edge", ggr <= gdL - 1, params);
        }
        else {
            b.skip("ineq.ZL+1<=Zld", "Z_L + 1 <= Z_ldot when G has an edge", "no edge");
            b.skip("ineq.gamma_gr<=gdL-1", "gamma_gr <= gd^L - 1 when G has an edge", "no edge");
        }
        if (no_isolated)
            b.check("ineq.gdt<=2gdZ", "gd^t <= 2 gd^Z without isolated vertices", gdt <= 2 * gdZ, params);
        else
            b.skip("ineq.gdt<=2gdZ", "gd^t <= 2 gd^Z without isolated vertices", "has isolated vertices");

        // domination
        auto bounds = combinatorial_bounds(g, {options.solver.max_n, options.cc_max_n, n > options.cc_max_n});
        b.check("dom.gamma<=gamma_gr", "gamma <= gamma_gr", bounds.gamma_dom <= ggr, {{"gamma", bounds.gamma_dom}, {"gamma_gr", ggr}});
        if (no_isolated)
            b.check("dom.Z<=n-gamma", "Z <= n - gamma without isolated vertices", Z <= n - bounds.gamma_dom, {{"gamma", bounds.gamma_dom}, {"Z", Z}});
        else
            b.skip("dom.Z<=n-gamma", "Z <= n - gamma without isolated vertices", "has isolated vertices");
        b.check("bounds.certificates", "alpha + beta = n and the independent set, cover and dominating set verify",
            bounds.alpha + bounds.beta == n && is_independent(g, bounds.independent_set) && is_vertex_cover(g, bounds.vertex_cover)
                && is_dominating(g, bounds.dominating_set) && bounds.independent_set.count() == bounds.alpha && bounds.dominating_set.count() == bounds.gamma_dom);

        // isolated-vertex padding
        if (n + 3 <= options.solver.max_n && n <= options.isolated_max_n) {
            for (int r = 1; r <= 3; ++r) {
                auto h = add_isolated(g, r);
                int hz = grundy_number(h, SeqKind::Zseq, options.solver).k;
                int ht = grundy_number(h, SeqKind::TotalDominating, options.solver).k;
                int hg = grundy_number(h, SeqKind::Dominating, options.solver).k;
                int hl = grundy_number(h, SeqKind::Lseq, options.solver).k;
                b.check("isolated.r" + to_string(r), "adding isolated vertices keeps gd^Z, gd^t and raises gamma_gr, gd^L by their number",
                    hz == gdZ && ht == gdt && hg == ggr + r && hl == gdL + r, {{"r", r}, {"gdZ", hz}, {"gdt", ht}, {"gamma_gr", hg}, {"gdL", hl}});
            }
        }
        else
            b.skip("isolated", "isolated-vertex padding", "graph larger than the padding cap");

        // bipartite halving
        const string halving = "gd^t(G) = 2 gd^t(G, X) = 2 gd^t(G, Y) for bipartite G without isolated vertices";
        if (auto parts = bipartition(g); parts && no_isolated && n > 0) {
            int tx = grundy_total_restricted(g, parts->first, options.solver).k;
            int ty = grundy_total_restricted(g, parts->second, options.solver).k;
            b.check("bipartite.halving", halving, gdt == 2 * tx && gdt == 2 * ty, {{"gdt", gdt}, {"gdt_X", tx}, {"gdt_Y", ty}});
        }
        else
            b.skip("bipartite.halving", halving, parts ? "has isolated vertices" : "not bipartite");

        // B_L product
        if (n <= options.bl_max_n && 3 * n <= options.solver.max_n) {
            auto bl = build_BL(g);
            auto x = bl.role_set(Role::x);
            bool structure = bl.edge_count() == 4 * g.edge_count() + n;
            auto parts = bipartition(bl);
            structure = structure && parts && is_independent(bl, x) && is_independent(bl, bl.vertices() - x);
            for (int i = 0; i < n; ++i)
                structure = structure && bl.degree(i) == 2 * g.degree(i) + 1 && bl.degree(n + i) == g.degree(i) + 1 && bl.degree(2 * n + i) == g.degree(i);
            b.check("bl.structure", "B_L(G) is bipartite with X against Y and Z, has 4|E| + n edges and the expected degrees", structure);

            int bl_gdt = grundy_number(bl, SeqKind::TotalDominating, options.solver).k;
            int bl_tx = grundy_total_restricted(bl, x, options.solver).k;
            int bl_zminus = zero_forcing_number(bl, Rule::Zminus, Method::direct, options.solver).k;
            b.check("bl.gdt", "gd^t(B_L(G)) = 2 gd^L(G)", bl_gdt == 2 * gdL, {{"gdt_BL", bl_gdt}, {"gdL", gdL}});
            b.check("bl.restricted", "gd^t(B_L(G), X) = gd^L(G)", bl_tx == gdL, {{"gdt_BL_X", bl_tx}, {"gdL", gdL}});
            b.check("bl.Zminus", "Z_-(B_L(G)) = n + 2 Z_L(G)", bl_zminus == n + 2 * ZL, {{"Zminus_BL", bl_zminus}, {"ZL", ZL}});

            Rng rng(seed, stream_asym);
            bool ok = true;
            nlohmann::json bad;
            for (int t = 0; t < options.trials && ok; ++t) {
                auto m = sample_pattern_matrix(bl, PatternKind::S_zero, options.entry_bound, rng);
                int rk = rank_exact(m);
                if (2 * gdL > rk) {
                    ok = false;
                    bad = {{"matrix", format_matrix(m)}, {"rank", rk}, {"trial", t}};
                }
            }
            b.check("asym.BL", "2 gd^L(G) <= rank(A) for sampled A in S_0(B_L(G))", ok, bad);
        }
        else
            for (auto id : {"bl.structure", "bl.gdt", "bl.restricted", "bl.Zminus", "asym.BL"})
                b.skip(id, "B_L identity", "n exceeds the B_L cap");

        // sampled minimum-rank bounds
        {
            Rng rng(seed, stream_mr);
            struct Family
            {
                PatternKind p;
                int lower;
                const char * id;
                const char * statement;
            };
            const Family fams[] = {
                {PatternKind::S, gdZ, "mr.S", "rank(A) >= gd^Z for sampled A in S(G)"},
                {PatternKind::S_loop, ggr, "mr.S_loop", "rank(A) >= gamma_gr for sampled A in S_ldot(G)"},
                {PatternKind::S_zero, gdt, "mr.S_zero", "rank(A) >= gd^t and rank(A) <= 2 beta for sampled A in S_0(G)"},
            };
            for (auto & f : fams) {
                bool ok = true;
                nlohmann::json bad;
                for (int t = 0; t < options.trials && ok; ++t) {
                    auto m = sample_pattern_matrix(g, f.p, options.entry_bound, rng);
                    int rk = rank_exact(m);
                    bool good = rk >= f.lower && pattern_member(m, g, f.p);
                    if (f.p == PatternKind::S_zero)
                        good = good && rk <= 2 * bounds.beta;
                    if (! good) {
                        ok = false;
                        bad = {{"matrix", format_matrix(m)}, {"rank", rk}, {"trial", t}, {"lower", f.lower}, {"beta", bounds.beta}};
                    }
                }
                b.check(f.id, f.statement, ok, bad);
            }
        }

        // L-pairs and the block embedding
        {
            Rng rng(seed, stream_lpair);
            Graph bl = build_BL(g);
            bool ok = true;
            nlohmann::json bad;
            for (int t = 0; t < options.trials && ok; ++t) {
                auto c = sample_pattern_matrix(g, PatternKind::L_pair, options.entry_bound, rng);
                int rc = rank_exact(c);
                auto e = embed_L_block(g, c.column_block(0, n), c.column_block(n, n));
                int re = rank_exact(e);
                if (gdL > rc || re != 2 * rc || ! pattern_member(e, bl, PatternKind::S_zero)) {
                    ok = false;
                    bad = {{"matrix", format_matrix(c)}, {"rank", rc}, {"embedded_rank", re}, {"trial", t}};
                }
            }
            b.check("lpair.rank", "gd^L <= rank([A B]) and the 3n x 3n embedding lies in S_0(B_L(G)) with twice the rank", ok, bad);
        }

        // clique cover construction
        if (bounds.cc) {
            auto ccm = clique_cover_matrix(g, bounds.clique_cover);
            int rk = rank_exact(ccm.matrix);
            bool ok = covers_edges(g, bounds.clique_cover) && pattern_member(ccm.matrix, g, PatternKind::S_loop) && rk <= ccm.cliques_used && ggr <= rk;
            b.check("cc.matrix", "the clique cover matrix lies in S_ldot(G) with gamma_gr <= rank <= cliques used (cc plus singleton patches)", ok,
                {{"cc", *bounds.cc}, {"cliques_used", ccm.cliques_used}, {"rank", rk}, {"gamma_gr", ggr}});
        }
        else
            b.skip("cc.matrix", "clique cover matrix bound", "cc skipped over its cap");

        // chronological list <-> reversed sequence
        for (int i = 0; i < 4; ++i) {
            auto game = game_from_sequence(g, seqs[i]);
            bool ok = game.blue == g.vertices() && sequence_from_game(g, game, all_rules[i]) == seqs[i];
            b.check("roundtrip." + string(kind_name(all_kinds[i])), "an optimal sequence replays as a successful game and reads back unchanged", ok,
                {{"sequence", sequence_to_json(seqs[i])}});
        }

        // closure order independence and monotonicity
        {
            Rng rng(seed, stream_closure);
            bool ok = true;
            nlohmann::json bad;
            for (auto rule : all_rules) {
                for (int s = 0; s < options.initial_sets && ok; ++s) {
                    auto initial = s == 0 ? VertexSet{} : random_subset(rng, n, 0.1 * s);
                    auto canonical = closure(g, initial, rule).blue;
                    for (int t = 0; t < options.order_trials && ok; ++t) {
                        auto shuffled = random_order_closure(g, initial, rule, rng).blue;
                        if (shuffled != canonical) {
                            ok = false;
                            bad = {{"rule", rule_name(rule)}, {"initial", one_based(initial)}, {"trial", t}};
                        }
                    }
                }
            }
            b.check("closure.order", "every force order reaches the canonical final blue set", ok, bad);
        }
        {
            Rng rng(seed, stream_monotone);
            bool ok = true;
            nlohmann::json bad;
            for (auto rule : all_rules)
                for (int s = 0; s < options.initial_sets && ok; ++s) {
                    auto small = random_subset(rng, n, 0.25);
                    auto large = small | random_subset(rng, n, 0.25);
                    if (! closure_set(g, small, rule).is_subset_of(closure_set(g, large, rule))) {
                        ok = false;
                        bad = {{"rule", rule_name(rule)}, {"small", one_based(small)}, {"large", one_based(large)}};
                    }
                }
            b.check("closure.monotone", "B subset of B' implies closure(B) subset of closure(B')", ok, bad);
        }

        return b.take();
    }
}

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "fixtures.hh"
#include "oracles.hh"

#include <zfgd/forcing.hh>
#include <zfgd/grundy.hh>
#include <zfgd/harness.hh>
#include <zfgd/linrank.hh>
#include <zfgd/random.hh>

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace zfgd;
using fixture::set;

namespace
{
    // collects the first few mismatches of one criterion
    struct Tally
    {
        int checks = 0;
        std::vector<std::string> problems;

        auto expect(bool ok, const std::string & what) -> void
        {
            ++checks;
            if (! ok && problems.size() < 5)
                problems.push_back(what);
            else if (! ok)
                problems.push_back("");
        }
        auto ok() const -> bool { return problems.empty(); }
    };

    auto seq(std::initializer_list<int> one_based) -> std::vector<int>
    {
        std::vector<int> r;
        for (int v : one_based)
            r.push_back(v - 1);
        return r;
    }

    auto str(const std::optional<int> & v) -> std::string { return v ? std::to_string(*v) : "none"; }

    auto criterion_1(Tally & t) -> void
    {
        auto g = fixture::six_vertex();
        auto r = compute_all(g);
        int z[] = {3, 1, 2, 0}, gd[] = {3, 5, 4, 6};
        for (int i = 0; i < 4; ++i) {
            t.expect(r.forcing[i] == z[i], std::string(rule_name(all_rules[i])) + " = " + str(r.forcing[i]));
            t.expect(r.grundy[i] == gd[i], std::string(kind_name(all_kinds[i])) + " = " + str(r.grundy[i]));
            t.expect(r.residuals[i] == 0, "residual " + str(r.residuals[i]));
        }
        t.expect(audit_report(g, r).empty(), "audit");
    }

    auto criterion_2(Tally & t) -> void
    {
        auto g = fixture::petersen();
        t.expect(grundy_number(g, SeqKind::Zseq).k == 5, "gdZ");
        t.expect(grundy_number(g, SeqKind::Dominating).k == 5, "gamma_gr");
        t.expect(grundy_number(g, SeqKind::TotalDominating).k == 6, "gdt");
        auto a = witness_matrices(WitnessMatrix::petersen_A);
        auto b = witness_matrices(WitnessMatrix::petersen_B);
        t.expect(rank_exact(a) == 5, "rank A");
        t.expect(rank_exact(b) == 6, "rank B");
        t.expect(pattern_member(a, g, PatternKind::S_loop), "A in S_loop");
        t.expect(pattern_member(b, g, PatternKind::S_zero), "B in S_zero");
    }

    auto criterion_3(Tally & t) -> void
    {
        auto g = fixture::k33();
        auto c = witness_matrices(WitnessMatrix::k33_C);
        t.expect(rank_exact(c) == 4, "rank C");
        t.expect(pattern_member(c, g, PatternKind::L_pair), "C in L_pair");
        t.expect(grundy_number(g, SeqKind::Lseq).k == 4, "gdL");
        t.expect(is_valid_sequence(g, SeqKind::Lseq, seq({1, 2, 3, 4})).ok, "(1,2,3,4)");
        auto second = is_valid_sequence(g, SeqKind::Lseq, seq({1, 2, 4, 5}));
        t.expect(second.ok, "(1,2,4,5) is not an L-sequence: step " + std::to_string(second.failed_step + 1) + " has an empty gain");
        auto big = embed_L_block(g, c.column_block(0, 6), c.column_block(6, 6));
        t.expect(rank_exact(big) == 8, "embedded rank");
        t.expect(pattern_member(big, build_BL(g), PatternKind::S_zero), "embedded in S_zero(B_L)");
    }

    auto criterion_4(Tally & t) -> void
    {
        auto g = fixture::path(4);
        t.expect(grundy_number(g, SeqKind::Lseq).k == 4, "gdL");
        t.expect(zero_forcing_number(g, Rule::ZL, Method::direct).k == 0, "ZL");
        auto b = build_BL(g);
        t.expect(b.n() == 12, "B_L order");
        t.expect(b.edge_count() == 16, "B_L size");
        t.expect(grundy_total_restricted(b, b.role_set(Role::x)).k == 4, "restricted");
        t.expect(grundy_number(b, SeqKind::TotalDominating).k == 8, "gdt(B_L)");
    }

    // shared between criteria 5 and 9
    std::vector<std::pair<Graph, GrundySequence>> optimal_sequences;

    auto criterion_5(Tally & t) -> void
    {
        auto start = std::chrono::steady_clock::now();
        for (auto & g : fixture::atlas(7)) {
            for (int i = 0; i < 4; ++i) {
                auto z = zero_forcing_number(g, all_rules[i], Method::direct);
                auto gd = grundy_number(g, all_kinds[i]);
                t.expect(z.k + gd.k == g.n(), encode_graph6(g) + " " + std::string(rule_name(all_rules[i])));
                optimal_sequences.emplace_back(g, gd.sequence);
            }
        }
        t.expect(optimal_sequences.size() == 4 * 1252, "graph count");
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        t.expect(secs <= 600, "runtime " + std::to_string(secs) + " s");
    }

    auto battery(Tally & t, const Graph & g, std::uint64_t seed, const VerifyOptions & o) -> void
    {
        for (auto & r : verify_invariants(g, seed, o)) {
            if (r.status == Status::skipped)
                continue;
            t.expect(r.status == Status::pass, r.id + " on " + r.graph6 + ": " + r.reason);
        }
    }

    auto criterion_6(Tally & t) -> void
    {
        VerifyOptions o;
        o.bl_max_n = 6;
        for (auto & g : fixture::atlas(6))
            battery(t, g, 6, o);
        Rng rng(6);
        for (int i = 0; i < 500; ++i) {
            int n = int(rng.uniform(1, 12));
            double p = 0.1 + 0.7 * double(rng.uniform(0, 100)) / 100;
            battery(t, random_graph(rng, n, p), 600 + std::uint64_t(i), o);
        }
    }

    auto criterion_7(Tally & t) -> void
    {
        Rng rng(7);
        for (int i = 0; i < 200; ++i) {
            int n = int(rng.uniform(2, 12));
            int a = int(rng.uniform(1, n - 1));
            auto g = random_bipartite(rng, n, a, 0.15 + 0.5 * double(rng.uniform(0, 100)) / 100);
            auto x = VertexSet::range(a);
            auto y = g.vertices() - x;
            int full = grundy_number(g, SeqKind::TotalDominating).k;
            int hx = grundy_total_restricted(g, x).k;
            int hy = grundy_total_restricted(g, y).k;
            t.expect(g.isolated_count() == 0, encode_graph6(g) + " has isolated vertices");
            t.expect(full == 2 * hx && full == 2 * hy,
                encode_graph6(g) + ": " + std::to_string(full) + " vs " + std::to_string(hx) + ", " + std::to_string(hy));
        }
    }

    auto criterion_8(Tally & t) -> void
    {
        Rng rng(8);
        for (int i = 0; i < 200; ++i) {
            auto g = random_graph(rng, int(rng.uniform(1, 12)), 0.1 + 0.6 * double(rng.uniform(0, 100)) / 100);
            auto adj = oracle::adjacency(g);
            for (auto rule : all_rules)
                for (int s = 0; s < 6; ++s) {
                    VertexSet init;
                    std::vector<bool> blue(g.n());
                    for (int v = 0; v < g.n(); ++v)
                        if (rng.bernoulli(0.3)) {
                            init.set(v);
                            blue[v] = true;
                        }
                    auto canon = closure(g, init, rule).blue;
                    auto ref = oracle::closure(adj, blue, rule);
                    VertexSet expect;
                    for (int v = 0; v < g.n(); ++v)
                        if (ref[v])
                            expect.set(v);
                    std::string tag = encode_graph6(g) + " " + std::string(rule_name(rule));
                    t.expect(canon == expect, tag + " canonical vs definition");
                    for (int k = 0; k < 20; ++k)
                        t.expect(random_order_closure(g, init, rule, rng).blue == canon, tag + " random order");
                }
        }
    }

    auto criterion_9(Tally & t) -> void
    {
        t.expect(! optimal_sequences.empty(), "no sequences from criterion 5");
        for (auto & [g, s] : optimal_sequences) {
            std::string tag = encode_graph6(g) + " " + std::string(kind_name(s.kind));
            try {
                auto game = game_from_sequence(g, s);
                t.expect(game.blue == g.vertices(), tag + " game incomplete");
                t.expect(sequence_from_game(g, game, paired_rule(s.kind)) == s, tag + " round trip");
            } catch (const std::exception & e) {
                t.expect(false, tag + ": " + e.what());
            }
        }
    }

    auto criterion_10(Tally & t) -> void
    {
        Rng rng(10);
        for (int i = 0; i < 500; ++i) {
            int r = int(rng.uniform(1, 12)), c = int(rng.uniform(1, 12));
            IntMatrix m(r, c);
            // mix of sparse, dense and deliberately rank-deficient matrices
            int shape = i % 3;
            if (shape == 2 && r > 1) {
                for (int j = 0; j < c; ++j)
                    m(0, j) = rng.uniform(-9, 9);
                for (int k = 1; k < r; ++k) {
                    auto f = rng.uniform(-2, 2);
                    int src = int(rng.uniform(0, k - 1));
                    for (int j = 0; j < c; ++j)
                        m(k, j) = f * m(src, j) + (rng.bernoulli(0.2) ? rng.uniform(-1, 1) : 0);
                }
            } else {
                double density = shape == 0 ? 0.3 : 1.0;
                for (int a = 0; a < r; ++a)
                    for (int b = 0; b < c; ++b)
                        m(a, b) = rng.bernoulli(density) ? rng.uniform(-50, 50) : 0;
            }
            int fast = rank_exact(m), slow = oracle::rank(m);
            t.expect(fast == slow, std::to_string(r) + "x" + std::to_string(c) + ": " + std::to_string(fast) + " vs " + std::to_string(slow));
        }
    }
}

int main()
{
    struct Criterion
    {
        int id;
        const char * title;
        std::function<void(Tally &)> run;
    };
    const Criterion criteria[] = {
        {1, "six-vertex example regression", criterion_1},
        {2, "Petersen regression", criterion_2},
        {3, "K33 regression", criterion_3},
        {4, "P4 and B_L(P4) regression", criterion_4},
        {5, "exhaustive duality, n <= 7", criterion_5},
        {6, "inequality battery", criterion_6},
        {7, "bipartite halving", criterion_7},
        {8, "closure order independence", criterion_8},
        {9, "sequence/game round trip", criterion_9},
        {10, "Bareiss vs rational rank", criterion_10},
    };

    int failed = 0;
    for (auto & c : criteria) {
        Tally t;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception & e) {
            t.problems.push_back(std::string("exception: ") + e.what());
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (t.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.checks << " checks, "
             << std::fixed;
        line.precision(2);
        line << secs << " s)";
        std::cout << line.str() << '\n';
        int shown = 0;
        for (auto & p : t.problems)
            if (! p.empty() && shown++ < 5)
                std::cout << "    " << p << '\n';
        if (t.problems.size() > 5)
            std::cout << "    ... " << t.problems.size() << " failures in total\n";
        std::cout.flush();
        failed += ! t.ok();
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << 10 - failed << "/10\n";
    return failed ? 1 : 0;
}

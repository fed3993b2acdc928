#include <zfgd/errors.hh>
#include <zfgd/grundy.hh>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace zfgd
{
    auto kind_name(SeqKind k) -> string_view
    {
        switch (k) {
            case SeqKind::Zseq: return "Zseq";
            case SeqKind::Dominating: return "Dominating";
            case SeqKind::TotalDominating: return "TotalDominating";
            case SeqKind::Lseq: return "Lseq";
        }
        return "";
    }

    auto parse_kind(string_view s) -> SeqKind
    {
        for (auto k : all_kinds)
            if (kind_name(k) == s)
                return k;
        throw InputError("unknown sequence kind '" + string(s) + "' (expected Zseq, Dominating, TotalDominating or Lseq)");
    }

    auto paired_rule(SeqKind k) -> Rule
    {
        switch (k) {
            case SeqKind::Zseq: return Rule::Z;
            case SeqKind::Dominating: return Rule::Zld;
            case SeqKind::TotalDominating: return Rule::Zminus;
            case SeqKind::Lseq: return Rule::ZL;
        }
        return Rule::Z;
    }

    auto paired_kind(Rule r) -> SeqKind
    {
        switch (r) {
            case Rule::Z: return SeqKind::Zseq;
            case Rule::Zld: return SeqKind::Dominating;
            case Rule::Zminus: return SeqKind::TotalDominating;
            case Rule::ZL: return SeqKind::Lseq;
        }
        return SeqKind::Zseq;
    }

    auto sequence_to_json(const GrundySequence & s) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["kind"] = kind_name(s.kind);
        auto one_based = [](const vector<int> & v) {
            auto a = nlohmann::ordered_json::array();
            for (int x : v)
                a.push_back(x + 1);
            return a;
        };
        j["vertices"] = one_based(s.vertices);
        j["witnesses"] = one_based(s.witnesses);
        return j;
    }

    auto sequence_from_json(const nlohmann::ordered_json & j) -> GrundySequence
    {
        try {
            GrundySequence s;
            s.kind = parse_kind(j.at("kind").get<string>());
            for (auto & v : j.at("vertices"))
                s.vertices.push_back(v.get<int>() - 1);
            if (j.contains("witnesses"))
                for (auto & v : j["witnesses"])
                    s.witnesses.push_back(v.get<int>() - 1);
            return s;
        }
        catch (const nlohmann::json::exception & e) {
            throw InputError(string("malformed sequence JSON: ") + e.what());
        }
    }

    auto gain_base(const Graph & g, SeqKind kind, int v) -> VertexSet
    {
        return kind == SeqKind::Zseq || kind == SeqKind::TotalDominating ? g.open(v) : g.closed(v);
    }

    auto footprint_of(const Graph & g, SeqKind kind, int v) -> VertexSet
    {
        return kind == SeqKind::Zseq || kind == SeqKind::Dominating ? g.closed(v) : g.open(v);
    }

    auto is_valid_sequence(const Graph & g, SeqKind kind, const vector<int> & vertices) -> Validation
    {
        VertexSet seen;
        for (int v : vertices) {
            if (v < 0 || v >= g.n())
                throw SequenceError("vertex " + to_string(v + 1) + " is not in the graph");
            if (seen.test(v))
                throw SequenceError("vertex " + to_string(v + 1) + " repeats in the sequence");
            seen.set(v);
        }

        Validation r;
        VertexSet footprint;
        for (int i = 0; i < int(vertices.size()); ++i) {
            auto gain = gain_base(g, kind, vertices[i]) - footprint;
            if (gain.none()) {
                r.witnesses.clear();
                r.failed_step = i;
                return r;
            }
            r.witnesses.push_back(gain.first());
            footprint |= footprint_of(g, kind, vertices[i]);
        }
        r.ok = true;
        return r;
    }

    namespace
    {
        class Searcher
        {
            public:
                Searcher(const Graph & g, SeqKind kind, const VertexSet & allowed) :
                    _kind(kind),
                    _allowed(allowed)
                {
                    for (int v = 0; v < g.n(); ++v) {
                        _gain.push_back(gain_base(g, kind, v));
                        _foot.push_back(footprint_of(g, kind, v));
                    }
                }

                auto solve(const SolverOptions & options) -> vector<int>
                {
                    if (options.transposition_table)
                        return memo_solve();

                    _best = -1;
                    _current.clear();
                    _seen.clear();
                    branch_and_bound(VertexSet{}, VertexSet{});
                    if (! options.deterministic)
                        return _best_seq;

                    _current.clear();
                    _seen.clear();
                    if (! lex_first(VertexSet{}, VertexSet{}, _best))
                        throw InternalInconsistency("lexicographic search lost the optimum");
                    return _current;
                }

            private:
                SeqKind _kind;
                VertexSet _allowed;
                vector<VertexSet> _gain, _foot;

                int _best = -1;
                vector<int> _best_seq, _current;
                std::unordered_map<VertexSet, std::unordered_map<VertexSet, int>> _memo;

                // Used sets already searched. The footprint is a function of the
                // used set and the depth is its size, so a second visit cannot
                // do better than the first. Capped to bound memory.
                static constexpr std::size_t seen_cap = std::size_t{1} << 22;
                std::unordered_set<VertexSet> _seen;

                auto first_visit(const VertexSet & used) -> bool
                {
                    if (_seen.size() >= seen_cap)
                        return ! _seen.contains(used);
                    return _seen.insert(used).second;
                }

                auto candidates(const VertexSet & used, const VertexSet & footprint) const -> VertexSet
                {
                    VertexSet c;
                    (_allowed - used).for_each([&](int v) {
                        if (! (_gain[v] - footprint).none())
                            c.set(v);
                    });
                    return c;
                }

                // Upper bound on further steps from this state.
                auto remaining_bound(const VertexSet & cand, const VertexSet & footprint) const -> int
                {
                    int b = cand.count();
                    if (_kind != SeqKind::Lseq) {
                        // each step moves one fresh gain vertex into the footprint
                        VertexSet fresh;
                        cand.for_each([&](int v) { fresh |= _gain[v]; });
                        b = std::min(b, (fresh - footprint).count());
                    }
                    return b;
                }

                auto branch_and_bound(const VertexSet & used, const VertexSet & footprint) -> void
                {
                    int depth = int(_current.size());
                    if (depth > _best) {
                        _best = depth;
                        _best_seq = _current;
                    }
                    if (! first_visit(used))
                        return;
                    auto cand = candidates(used, footprint);
                    if (depth + remaining_bound(cand, footprint) <= _best)
                        return;

                    vector<std::pair<int, int>> order;
                    cand.for_each([&](int v) { order.emplace_back(-(_gain[v] - footprint).count(), v); });
                    std::sort(order.begin(), order.end());

                    for (auto [neg_gain, v] : order) {
                        _current.push_back(v);
                        auto u = used;
                        u.set(v);
                        branch_and_bound(u, footprint | _foot[v]);
                        _current.pop_back();
                        if (depth + remaining_bound(cand, footprint) <= _best)
                            return;
                    }
                }

                // Depth-first in ascending vertex order; the first sequence of
                // the target length reached is the lexicographically smallest.
                auto lex_first(const VertexSet & used, const VertexSet & footprint, int target) -> bool
                {
                    int depth = int(_current.size());
                    if (depth == target)
                        return true;
                    if (! first_visit(used))
                        return false;
                    auto cand = candidates(used, footprint);
                    if (depth + remaining_bound(cand, footprint) < target)
                        return false;
                    for (int v = cand.first(); v != -1; v = cand.next(v)) {
                        _current.push_back(v);
                        auto u = used;
                        u.set(v);
                        if (lex_first(u, footprint | _foot[v], target))
                            return true;
                        _current.pop_back();
                    }
                    return false;
                }

                auto longest_from(const VertexSet & used, const VertexSet & footprint) -> int
                {
                    auto & inner = _memo[used];
                    if (auto it = inner.find(footprint); it != inner.end())
                        return it->second;
                    int best = 0;
                    candidates(used, footprint).for_each([&](int v) {
                        auto u = used;
                        u.set(v);
                        best = std::max(best, 1 + longest_from(u, footprint | _foot[v]));
                    });
                    _memo[used][footprint] = best;
                    return best;
                }

                auto memo_solve() -> vector<int>
                {
                    _memo.clear();
                    vector<int> seq;
                    VertexSet used, footprint;
                    int left = longest_from(used, footprint);
                    while (left > 0) {
                        auto cand = candidates(used, footprint);
                        for (int v = cand.first(); v != -1; v = cand.next(v)) {
                            auto u = used;
                            u.set(v);
                            auto f = footprint | _foot[v];
                            if (1 + longest_from(u, f) == left) {
                                seq.push_back(v);
                                used = u;
                                footprint = f;
                                --left;
                                break;
                            }
                        }
                    }
                    return seq;
                }
        };

        auto run(const Graph & g, SeqKind kind, const VertexSet & allowed, const SolverOptions & options) -> GrundyResult
        {
            if (g.n() > options.max_n)
                throw CapExceeded("Grundy search: n = " + to_string(g.n()) + " exceeds cap " + to_string(options.max_n));
            Searcher s(g, kind, allowed);
            auto vertices = s.solve(options);
            auto check = is_valid_sequence(g, kind, vertices);
            if (! check.ok)
                throw InternalInconsistency("Grundy search produced an invalid sequence");
            GrundyResult r{int(vertices.size()), {kind, std::move(vertices), std::move(check.witnesses)}};
            return r;
        }
    }

    auto grundy_number(const Graph & g, SeqKind kind, const SolverOptions & options) -> GrundyResult
    {
        return run(g, kind, g.vertices(), options);
    }

    auto grundy_total_restricted(const Graph & g, const VertexSet & x, const SolverOptions & options) -> GrundyResult
    {
        if (! x.is_subset_of(g.vertices()))
            throw InputError("restriction set is not a subset of V(G)");
        return run(g, SeqKind::TotalDominating, x, options);
    }

    auto sequence_from_game(const Graph & g, const ColorState & state, Rule rule) -> GrundySequence
    {
        if (state.blue != g.vertices())
            throw SequenceError("game is not successful: some vertex stays white");

        GrundySequence s;
        s.kind = paired_kind(rule);
        for (auto it = state.history.rbegin(); it != state.history.rend(); ++it) {
            s.vertices.push_back(it->target);
            s.witnesses.push_back(it->actor);
        }

        auto check = is_valid_sequence(g, s.kind, s.vertices);
        VertexSet footprint;
        for (int i = 0; i < s.size(); ++i) {
            if (! check.ok || ! (gain_base(g, s.kind, s.vertices[i]) - footprint).test(s.witnesses[i]))
                throw InputError("chronological list is not a legal " + string(rule_name(rule)) + " game");
            footprint |= footprint_of(g, s.kind, s.vertices[i]);
        }
        return s;
    }
}

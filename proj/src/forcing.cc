#include <zfgd/errors.hh>
#include <zfgd/forcing.hh>
#include <zfgd/grundy.hh>

#include <algorithm>
#include <numeric>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace zfgd
{
    auto rule_name(Rule r) -> string_view
    {
        switch (r) {
            case Rule::Z: return "Z";
            case Rule::Zld: return "Zld";
            case Rule::Zminus: return "Zminus";
            case Rule::ZL: return "ZL";
        }
        return "";
    }

    auto parse_rule(string_view s) -> Rule
    {
        for (auto r : all_rules)
            if (rule_name(r) == s)
                return r;
        throw InputError("unknown rule '" + string(s) + "' (expected Z, Zld, Zminus or ZL)");
    }

    auto parse_method(string_view s) -> Method
    {
        if (s == "direct")
            return Method::direct;
        if (s == "dual")
            return Method::dual;
        if (s == "cross_check")
            return Method::cross_check;
        throw InputError("unknown method '" + string(s) + "'");
    }

    namespace
    {
        // The unique white vertex of s, or -1 if there are zero or several.
        auto sole_white(const VertexSet & s, const VertexSet & blue) -> int
        {
            auto white = s - blue;
            return white.count() == 1 ? white.first() : -1;
        }

        // Forces x can perform; at most one for every rule.
        auto force_of(const Graph & g, const VertexSet & blue, int x, Rule rule) -> int
        {
            switch (rule) {
                case Rule::Z: {
                    int y = sole_white(g.closed(x), blue);
                    return y != x ? y : -1;
                }
                case Rule::Zld:
                    return sole_white(g.closed(x), blue);
                case Rule::Zminus:
                    return sole_white(g.open(x), blue);
                case Rule::ZL: {
                    if (int y = sole_white(g.open(x), blue); y != -1)
                        return y;
                    return sole_white(g.closed(x), blue) == x ? x : -1;
                }
            }
            return -1;
        }
    }

    auto is_legal_force(const Graph & g, const VertexSet & blue, const ForceRecord & f, Rule rule) -> bool
    {
        if (f.actor < 0 || f.actor >= g.n() || f.target < 0 || f.target >= g.n())
            return false;
        if (blue.test(f.target))
            return false;
        if ((f.via == Via::closed) != (f.actor == f.target))
            return false;
        switch (rule) {
            case Rule::Z:
                return f.actor != f.target && sole_white(g.closed(f.actor), blue) == f.target;
            case Rule::Zld:
                return sole_white(g.closed(f.actor), blue) == f.target;
            case Rule::Zminus:
                return f.actor != f.target && sole_white(g.open(f.actor), blue) == f.target;
            case Rule::ZL:
                if (f.actor != f.target)
                    return sole_white(g.open(f.actor), blue) == f.target;
                return sole_white(g.closed(f.actor), blue) == f.actor;
        }
        return false;
    }

    auto applicable_forces(const Graph & g, const ColorState & state, Rule rule) -> vector<ForceRecord>
    {
        vector<ForceRecord> r;
        for (int x = 0; x < g.n(); ++x)
            if (int y = force_of(g, state.blue, x, rule); y != -1)
                r.push_back(make_force(x, y));
        return r;
    }

    auto apply_force(const Graph & g, ColorState & state, const ForceRecord & f, Rule rule) -> void
    {
        if (! is_legal_force(g, state.blue, f, rule))
            throw InputError("illegal " + string(rule_name(rule)) + " force " + to_string(f.actor + 1) + " -> " + to_string(f.target + 1));
        state.blue.set(f.target);
        state.history.push_back(f);
    }

    auto closure(const Graph & g, const VertexSet & initial, Rule rule) -> ColorState
    {
        auto state = ColorState::starting_from(initial);
        bool progress = true;
        while (progress) {
            progress = false;
            for (int x = 0; x < g.n(); ++x)
                if (int y = force_of(g, state.blue, x, rule); y != -1) {
                    state.blue.set(y);
                    state.history.push_back(make_force(x, y));
                    progress = true;
                    break;
                }
        }
        return state;
    }

    auto closure_set(const Graph & g, const VertexSet & initial, Rule rule) -> VertexSet
    {
        auto blue = initial;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int x = 0; x < g.n(); ++x)
                if (int y = force_of(g, blue, x, rule); y != -1) {
                    blue.set(y);
                    progress = true;
                }
        }
        return blue;
    }

    auto is_forcing_set(const Graph & g, const VertexSet & b, Rule rule) -> bool
    {
        return closure_set(g, b, rule) == g.vertices();
    }

    namespace
    {
        auto check_cap(const Graph & g, const SolverOptions & options, string_view what) -> void
        {
            if (g.n() > options.max_n)
                throw CapExceeded(string(what) + ": n = " + to_string(g.n()) + " exceeds cap " + to_string(options.max_n));
        }

        auto direct_forcing(const Graph & g, Rule rule, const SolverOptions & options) -> ForcingResult
        {
            check_cap(g, options, "direct forcing search");
            int n = g.n();
            auto all = g.vertices();
            for (int k = 0; k <= n; ++k) {
                // k-subsets in lexicographic order of their sorted member lists
                vector<int> idx(k);
                std::iota(idx.begin(), idx.end(), 0);
                while (true) {
                    auto b = VertexSet::from(idx);
                    if (closure_set(g, b, rule) == all)
                        return {k, b};
                    int i = k - 1;
                    while (i >= 0 && idx[i] == n - k + i)
                        --i;
                    if (i < 0)
                        break;
                    ++idx[i];
                    for (int j = i + 1; j < k; ++j)
                        idx[j] = idx[j - 1] + 1;
                }
            }
            throw InternalInconsistency("V(G) failed to force itself");
        }

        auto dual_forcing(const Graph & g, Rule rule, const SolverOptions & options) -> ForcingResult
        {
            auto gr = grundy_number(g, paired_kind(rule), options);
            auto witness = g.vertices() - VertexSet::from(gr.sequence.vertices);
            return {g.n() - gr.k, witness};
        }
    }

    auto zero_forcing_number(const Graph & g, Rule rule, Method method, const SolverOptions & options) -> ForcingResult
    {
        switch (method) {
            case Method::direct:
                return direct_forcing(g, rule, options);
            case Method::dual:
                return dual_forcing(g, rule, options);
            case Method::cross_check: {
                auto d = direct_forcing(g, rule, options);
                auto u = dual_forcing(g, rule, options);
                if (d.k != u.k || ! is_forcing_set(g, u.witness, rule))
                    throw InternalInconsistency("forcing number " + string(rule_name(rule)) + " mismatch: direct " + to_string(d.k) + ", dual " + to_string(u.k)
                        + " on " + encode_graph6(g));
                return d;
            }
        }
        throw InputError("unknown method");
    }

    auto game_from_sequence(const Graph & g, const GrundySequence & seq) -> ColorState
    {
        auto check = is_valid_sequence(g, seq.kind, seq.vertices);
        if (! check.ok)
            throw SequenceError("not a valid " + string(kind_name(seq.kind)) + " sequence (empty gain at step " + to_string(check.failed_step + 1) + ")");

        auto rule = paired_rule(seq.kind);
        auto state = ColorState::starting_from(g.vertices() - VertexSet::from(seq.vertices));
        for (int i = seq.size() - 1; i >= 0; --i) {
            auto f = make_force(check.witnesses[i], seq.vertices[i]);
            if (! is_legal_force(g, state.blue, f, rule))
                throw InternalInconsistency("reversed sequence produced an illegal force");
            state.blue.set(f.target);
            state.history.push_back(f);
        }
        return state;
    }
}

#ifndef ZFGD_FORCING_HH
#define ZFGD_FORCING_HH

#include <zfgd/graph.hh>
#include <zfgd/solver_options.hh>

#include <string_view>
#include <vector>

namespace zfgd
{
    /// Colour-change rules. Zld is the rule on the graph with a loop at every
    /// vertex, Zminus the rule with no loops, ZL the mixed rule.
    enum class Rule
    {
        Z,
        Zld,
        Zminus,
        ZL
    };

    inline constexpr Rule all_rules[] = {Rule::Z, Rule::Zld, Rule::Zminus, Rule::ZL};

    auto rule_name(Rule r) -> std::string_view;
    auto parse_rule(std::string_view s) -> Rule;

    enum class Via
    {
        open,  // actor != target
        closed // actor == target
    };

    struct ForceRecord
    {
        int actor;
        int target;
        Via via;

        friend auto operator==(const ForceRecord &, const ForceRecord &) -> bool = default;
    };

    inline auto make_force(int actor, int target) -> ForceRecord
    {
        return {actor, target, actor == target ? Via::closed : Via::open};
    }

    struct ColorState
    {
        VertexSet blue;
        std::vector<ForceRecord> history;

        static auto starting_from(const VertexSet & initial) -> ColorState { return {initial, {}}; }
    };

    struct GrundySequence;

    /// All forces legal in the current colouring, ordered by (actor, target).
    auto applicable_forces(const Graph & g, const ColorState & state, Rule rule) -> std::vector<ForceRecord>;

    auto is_legal_force(const Graph & g, const VertexSet & blue, const ForceRecord & f, Rule rule) -> bool;

    /// Performs f on state after checking legality; throws InputError otherwise.
    auto apply_force(const Graph & g, ColorState & state, const ForceRecord & f, Rule rule) -> void;

    /// Repeatedly performs the first applicable force until none remains.
    auto closure(const Graph & g, const VertexSet & initial, Rule rule) -> ColorState;

    /// Final blue set only, without recording the chronological list.
    auto closure_set(const Graph & g, const VertexSet & initial, Rule rule) -> VertexSet;

    auto is_forcing_set(const Graph & g, const VertexSet & b, Rule rule) -> bool;

    enum class Method
    {
        direct,
        dual,
        cross_check
    };

    auto parse_method(std::string_view s) -> Method;

    struct ForcingResult
    {
        int k;
        VertexSet witness;
    };

    /// Minimum forcing set. direct enumerates subsets by size in lexicographic
    /// order; dual complements an optimal Grundy sequence of the paired kind.
    auto zero_forcing_number(const Graph & g, Rule rule, Method method = Method::dual, const SolverOptions & options = {})
        -> ForcingResult;

    /// Replays seq backwards as a forcing game under the paired rule, from
    /// V(g) minus the sequence. Throws SequenceError if seq is not valid.
    auto game_from_sequence(const Graph & g, const GrundySequence & seq) -> ColorState;
}

#endif

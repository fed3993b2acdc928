#ifndef ZFGD_GRUNDY_HH
#define ZFGD_GRUNDY_HH

#include <zfgd/forcing.hh>
#include <zfgd/graph.hh>
#include <zfgd/solver_options.hh>

#include <string_view>
#include <vector>

namespace zfgd
{
    /// Sequence kinds. The gain at step i is taken from N(v_i) or N[v_i] and
    /// measured against the union of N[v_j] or N(v_j) over earlier steps:
    ///
    ///     Zseq             N(v_i) minus closed footprint
    ///     Dominating       N[v_i] minus closed footprint
    ///     TotalDominating  N(v_i) minus open footprint
    ///     Lseq             N[v_i] minus open footprint
    enum class SeqKind
    {
        Zseq,
        Dominating,
        TotalDominating,
        Lseq
    };

    inline constexpr SeqKind all_kinds[] = {SeqKind::Zseq, SeqKind::Dominating, SeqKind::TotalDominating, SeqKind::Lseq};

    auto kind_name(SeqKind k) -> std::string_view;
    auto parse_kind(std::string_view s) -> SeqKind;

    /// The forcing rule whose minimum forcing sets complement sequences of k.
    auto paired_rule(SeqKind k) -> Rule;
    auto paired_kind(Rule r) -> SeqKind;

    struct GrundySequence
    {
        SeqKind kind = SeqKind::Zseq;
        std::vector<int> vertices;
        std::vector<int> witnesses;

        auto size() const -> int { return int(vertices.size()); }

        friend auto operator==(const GrundySequence &, const GrundySequence &) -> bool = default;
    };

    auto sequence_to_json(const GrundySequence & s) -> nlohmann::ordered_json;
    auto sequence_from_json(const nlohmann::ordered_json & j) -> GrundySequence;

    /// Vertices a step may gain, before subtracting the footprint.
    auto gain_base(const Graph & g, SeqKind kind, int v) -> VertexSet;
    /// What a chosen vertex adds to the footprint.
    auto footprint_of(const Graph & g, SeqKind kind, int v) -> VertexSet;

    struct Validation
    {
        bool ok = false;
        std::vector<int> witnesses; // smallest member of each gain set, when ok
        int failed_step = -1;       // first step with an empty gain, when not ok
    };

    /// Throws SequenceError on a repeated or out-of-range vertex.
    auto is_valid_sequence(const Graph & g, SeqKind kind, const std::vector<int> & vertices) -> Validation;

    struct GrundyResult
    {
        int k;
        GrundySequence sequence;
    };

    auto grundy_number(const Graph & g, SeqKind kind, const SolverOptions & options = {}) -> GrundyResult;

    /// Longest total dominating sequence drawing its vertices from x only.
    auto grundy_total_restricted(const Graph & g, const VertexSet & x, const SolverOptions & options = {}) -> GrundyResult;

    /// Reads a successful game's targets backwards as a sequence of the paired
    /// kind, with the game's actors as witnesses.
    auto sequence_from_game(const Graph & g, const ColorState & state, Rule rule) -> GrundySequence;
}

#endif

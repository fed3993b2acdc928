#ifndef ZFGD_HARNESS_HH
#define ZFGD_HARNESS_HH

#include <zfgd/forcing.hh>
#include <zfgd/graph.hh>
#include <zfgd/grundy.hh>
#include <zfgd/linrank.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zfgd
{
    struct ReportOptions
    {
        SolverOptions solver;
        /// Forcing numbers are solved independently of the Grundy numbers by
        /// default so the duality residuals carry information.
        Method forcing_method = Method::direct;
        BoundsOptions bounds;
    };

    struct OrderCheck
    {
        std::string name;
        bool pass;

        friend auto operator==(const OrderCheck &, const OrderCheck &) -> bool = default;
    };

    /// Every parameter of one graph. Index 0..3 of the per-rule arrays follows
    /// all_rules / all_kinds: (Z, gdZ), (Zld, gamma_gr), (Zminus, gdt), (ZL, gdL).
    struct ParameterReport
    {
        std::string graph6;
        int n = 0;
        int edges = 0;

        std::array<std::optional<int>, 4> forcing;
        std::array<std::optional<int>, 4> grundy;
        std::optional<int> z_loop; // Zld plus the number of isolated vertices

        std::optional<int> alpha, beta, gamma, cc;

        /// forcing[i] + grundy[i] - n; zero whenever both sides are present.
        std::array<std::optional<int>, 4> residuals;

        std::array<std::optional<std::vector<int>>, 4> forcing_sets; // 0-based
        std::array<std::optional<GrundySequence>, 4> sequences;

        std::vector<OrderCheck> order_checks;
        std::vector<std::pair<std::string, std::int64_t>> timing_us;
        std::vector<std::string> skipped;

        friend auto operator==(const ParameterReport &, const ParameterReport &) -> bool = default;
    };

    auto compute_all(const Graph & g, const ReportOptions & options = {}) -> ParameterReport;

    /// Problems found when re-validating a report's certificates and residuals
    /// against g. Empty means the report checks out.
    auto audit_report(const Graph & g, const ParameterReport & r) -> std::vector<std::string>;

    auto report_to_json(const ParameterReport & r) -> nlohmann::ordered_json;
    auto report_from_json(const nlohmann::ordered_json & j) -> ParameterReport;

    enum class Status
    {
        pass,
        fail,
        skipped
    };

    auto status_name(Status s) -> std::string_view;

    struct InvariantOutcome
    {
        std::string id;
        std::string statement;
        std::string graph6;
        Status status = Status::pass;
        std::string reason;         // why skipped, or what failed
        nlohmann::json payload;     // reproduction data on failure
        std::uint64_t seed = 0;
    };

    auto outcome_to_json(const InvariantOutcome & o) -> nlohmann::ordered_json;

    struct VerifyOptions
    {
        SolverOptions solver;
        int trials = 8;            // random matrices per sampled rank check
        std::int64_t entry_bound = 10;
        int bl_max_n = 6;          // B_L checks run on 3n vertices
        int isolated_max_n = 8;    // padding by up to 3 isolated vertices
        int order_trials = 20;     // random force orders per initial set
        int initial_sets = 6;      // random initial sets per rule for closure checks
        int cc_max_n = 16;
    };

    /// The full cross-parameter battery on one graph. Failures are returned as
    /// outcomes, never thrown.
    auto verify_invariants(const Graph & g, std::uint64_t seed, const VerifyOptions & options = {}) -> std::vector<InvariantOutcome>;

    /// Closure under a uniformly random legal force at every step.
    auto random_order_closure(const Graph & g, const VertexSet & initial, Rule rule, Rng & rng) -> ColorState;

    struct SweepSpec
    {
        /// Generator family; ignored when g6_file is set.
        Family family = Family::path;
        /// Held fixed for complete_bipartite; the range supplies the other side.
        int fixed_param = 0;
        std::string g6_file;
        int lo = 1, hi = 0; // inclusive; for files, 1-based line range (hi = 0: to the end)
        int jobs = 1;
        bool verify = false; // also run the invariant battery on every graph
        std::uint64_t seed = 0;
    };

    struct SweepSummary
    {
        int graphs = 0;
        int failures = 0;
        int skipped = 0;
    };

    auto sweep_graphs(const SweepSpec & spec) -> std::vector<Graph>;

    /// One report per line, in input order. Reports whose audit or order
    /// checks fail (or, with verify, any failed invariant) count as failures;
    /// cap-exceeded graphs count as skipped.
    auto sweep(const SweepSpec & spec, std::ostream & out, const ReportOptions & options = {}, const VerifyOptions & vopts = {})
        -> SweepSummary;
}

#endif

#include <zfgd/errors.hh>
#include <zfgd/harness.hh>

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

using std::string;
using std::vector;

namespace zfgd
{
    auto sweep_graphs(const SweepSpec & spec) -> vector<Graph>
    {
        if (! spec.g6_file.empty()) {
            auto all = read_graph6_file(spec.g6_file);
            int lo = std::max(spec.lo, 1);
            int hi = spec.hi == 0 ? int(all.size()) : std::min(spec.hi, int(all.size()));
            vector<Graph> r;
            for (int i = lo; i <= hi; ++i)
                r.push_back(std::move(all[i - 1]));
            return r;
        }

        vector<Graph> r;
        for (int k = spec.lo; k <= spec.hi; ++k) {
            switch (spec.family) {
                case Family::petersen:
                    if (k == spec.lo)
                        r.push_back(family(Family::petersen));
                    break;
                case Family::complete_bipartite:
                    r.push_back(family(Family::complete_bipartite, {spec.fixed_param, k}));
                    break;
                default:
                    r.push_back(family(spec.family, {k}));
                    break;
            }
        }
        return r;
    }

    namespace
    {
        struct Row
        {
            string line;
            bool failed = false;
            bool skipped = false;
        };
    }

    auto sweep(const SweepSpec & spec, std::ostream & out, const ReportOptions & options, const VerifyOptions & vopts) -> SweepSummary
    {
        auto graphs = sweep_graphs(spec);
        vector<Row> rows(graphs.size());

        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next++) < graphs.size();) {
                auto & g = graphs[i];
                auto report = compute_all(g, options);
                auto j = report_to_json(report);
                bool failed = ! audit_report(g, report).empty();
                if (spec.verify) {
                    int fails = 0;
                    for (auto & o : verify_invariants(g, spec.seed, vopts))
                        fails += o.status == Status::fail;
                    j["invariant_failures"] = fails;
                    failed = failed || fails > 0;
                }
                rows[i] = {j.dump(), failed, ! report.skipped.empty()};
            }
        };

        int jobs = std::max(1, spec.jobs);
        vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t)
            pool.emplace_back(work);
        work();
        for (auto & t : pool)
            t.join();

        SweepSummary summary;
        for (auto & row : rows) {
            out << row.line << '\n';
            ++summary.graphs;
            summary.failures += row.failed;
            summary.skipped += row.skipped;
        }
        return summary;
    }
}

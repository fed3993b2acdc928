#include <zfgd/errors.hh>
#include <zfgd/harness.hh>

#include <chrono>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace zfgd
{
    namespace
    {
        const char * const forcing_keys[] = {"Z", "Zld", "Zminus", "ZL"};
        const char * const grundy_keys[] = {"gdZ", "gamma_gr", "gdt", "gdL"};

        template <typename F>
        auto timed(ParameterReport & r, const string & label, F && f)
        {
            auto start = std::chrono::steady_clock::now();
            auto result = f();
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
            r.timing_us.emplace_back(label, us);
            return result;
        }

        auto opt_json(const optional<int> & v) -> nlohmann::ordered_json
        {
            return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
        }

        auto opt_int(const nlohmann::ordered_json & j, const char * key) -> optional<int>
        {
            if (! j.contains(key) || j[key].is_null())
                return std::nullopt;
            return j[key].get<int>();
        }
    }

    auto compute_all(const Graph & g, const ReportOptions & options) -> ParameterReport
    {
        ParameterReport r;
        r.graph6 = encode_graph6(g);
        r.n = g.n();
        r.edges = g.edge_count();

        for (int i = 0; i < 4; ++i) {
            auto kind = all_kinds[i];
            auto rule = all_rules[i];
            try {
                auto gr = timed(r, grundy_keys[i], [&] { return grundy_number(g, kind, options.solver); });
                r.grundy[i] = gr.k;
                r.sequences[i] = gr.sequence;
            }
            catch (const CapExceeded & e) {
                r.skipped.push_back(string(grundy_keys[i]) + ": " + e.what());
            }
            try {
                auto zf = timed(r, forcing_keys[i], [&] { return zero_forcing_number(g, rule, options.forcing_method, options.solver); });
                r.forcing[i] = zf.k;
                r.forcing_sets[i] = zf.witness.to_vector();
            }
            catch (const CapExceeded & e) {
                r.skipped.push_back(string(forcing_keys[i]) + ": " + e.what());
            }
            if (r.forcing[i] && r.grundy[i])
                r.residuals[i] = *r.forcing[i] + *r.grundy[i] - g.n();
        }
        if (r.forcing[1])
            r.z_loop = *r.forcing[1] + g.isolated_count();

        try {
            auto bounds_options = options.bounds;
            auto b = timed(r, "bounds", [&] {
                try {
                    return combinatorial_bounds(g, bounds_options);
                }
                catch (const CapExceeded & e) {
                    if (bounds_options.skip_cc)
                        throw;
                    r.skipped.push_back(string("cc: ") + e.what());
                    bounds_options.skip_cc = true;
                    return combinatorial_bounds(g, bounds_options);
                }
            });
            r.alpha = b.alpha;
            r.beta = b.beta;
            r.gamma = b.gamma_dom;
            r.cc = b.cc;
        }
        catch (const CapExceeded & e) {
            r.skipped.push_back(string("bounds: ") + e.what());
        }

        auto check = [&](const char * name, const optional<int> & lo, const optional<int> & hi) {
            if (lo && hi)
                r.order_checks.push_back({name, *lo <= *hi});
        };
        auto & gd = r.grundy;
        auto & z = r.forcing;
        check("gdZ<=gdt", gd[0], gd[2]);
        check("gdt<=gdL", gd[2], gd[3]);
        check("gdZ<=gamma_gr", gd[0], gd[1]);
        check("gamma_gr<=gdL", gd[1], gd[3]);
        check("ZL<=Zld", z[3], z[1]);
        check("Zld<=Z", z[1], z[0]);
        check("ZL<=Zminus", z[3], z[2]);
        check("Zminus<=Z", z[2], z[0]);
        check("gamma<=gamma_gr", r.gamma, gd[1]);
        return r;
    }

    auto audit_report(const Graph & g, const ParameterReport & r) -> vector<string>
    {
        vector<string> problems;
        if (r.graph6 != encode_graph6(g) || r.n != g.n() || r.edges != g.edge_count())
            problems.push_back("graph identity does not match");
        for (int i = 0; i < 4; ++i) {
            if (r.residuals[i] && *r.residuals[i] != 0)
                problems.push_back(string("duality residual for ") + forcing_keys[i] + " is " + to_string(*r.residuals[i]));
            if (r.forcing[i] && r.grundy[i] && (! r.residuals[i] || *r.forcing[i] + *r.grundy[i] != g.n() + *r.residuals[i]))
                problems.push_back(string("residual for ") + forcing_keys[i] + " is inconsistent with the parameters");
            if (r.sequences[i]) {
                auto & s = *r.sequences[i];
                try {
                    auto v = is_valid_sequence(g, all_kinds[i], s.vertices);
                    if (s.kind != all_kinds[i] || ! v.ok || v.witnesses != s.witnesses || ! r.grundy[i] || s.size() != *r.grundy[i])
                        problems.push_back(string("sequence certificate for ") + grundy_keys[i] + " does not validate");
                }
                catch (const SequenceError & e) {
                    problems.push_back(string("sequence certificate for ") + grundy_keys[i] + ": " + e.what());
                }
            }
            if (r.forcing_sets[i]) {
                auto & b = *r.forcing_sets[i];
                bool in_range = std::all_of(b.begin(), b.end(), [&](int v) { return v >= 0 && v < g.n(); });
                if (! in_range || ! is_forcing_set(g, VertexSet::from(b), all_rules[i]) || ! r.forcing[i] || int(b.size()) != *r.forcing[i])
                    problems.push_back(string("forcing set certificate for ") + forcing_keys[i] + " does not validate");
            }
        }
        if (r.forcing[1] && r.z_loop != *r.forcing[1] + g.isolated_count())
            problems.push_back("Zl does not equal Zld plus the isolated vertex count");
        for (auto & c : r.order_checks)
            if (! c.pass)
                problems.push_back("order check failed: " + c.name);
        return problems;
    }

    auto report_to_json(const ParameterReport & r) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["graph6"] = r.graph6;
        j["n"] = r.n;
        j["edges"] = r.edges;

        nlohmann::ordered_json params;
        for (int i = 0; i < 4; ++i)
            params[forcing_keys[i]] = opt_json(r.forcing[i]);
        for (int i = 0; i < 4; ++i)
            params[grundy_keys[i]] = opt_json(r.grundy[i]);
        params["Zl"] = opt_json(r.z_loop);
        j["parameters"] = std::move(params);

        nlohmann::ordered_json bounds;
        bounds["alpha"] = opt_json(r.alpha);
        bounds["beta"] = opt_json(r.beta);
        bounds["gamma"] = opt_json(r.gamma);
        bounds["cc"] = opt_json(r.cc);
        j["bounds"] = std::move(bounds);

        nlohmann::ordered_json residuals;
        for (int i = 0; i < 4; ++i)
            residuals[forcing_keys[i]] = opt_json(r.residuals[i]);
        j["residuals"] = std::move(residuals);

        nlohmann::ordered_json sets, seqs;
        for (int i = 0; i < 4; ++i) {
            if (r.forcing_sets[i]) {
                auto a = nlohmann::ordered_json::array();
                for (int v : *r.forcing_sets[i])
                    a.push_back(v + 1);
                sets[forcing_keys[i]] = std::move(a);
            }
            else
                sets[forcing_keys[i]] = nullptr;
            seqs[grundy_keys[i]] = r.sequences[i] ? sequence_to_json(*r.sequences[i]) : nlohmann::ordered_json(nullptr);
        }
        j["certificates"] = {{"forcing_sets", std::move(sets)}, {"sequences", std::move(seqs)}};

        auto checks = nlohmann::ordered_json::array();
        for (auto & c : r.order_checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}});
        j["order_checks"] = std::move(checks);

        auto timing = nlohmann::ordered_json::object();
        for (auto & [k, v] : r.timing_us)
            timing[k] = v;
        j["timing_us"] = std::move(timing);
        j["skipped"] = r.skipped;
        return j;
    }

    auto report_from_json(const nlohmann::ordered_json & j) -> ParameterReport
    {
        try {
            ParameterReport r;
            r.graph6 = j.at("graph6").get<string>();
            r.n = j.at("n").get<int>();
            r.edges = j.at("edges").get<int>();
            auto & params = j.at("parameters");
            for (int i = 0; i < 4; ++i) {
                r.forcing[i] = opt_int(params, forcing_keys[i]);
                r.grundy[i] = opt_int(params, grundy_keys[i]);
                r.residuals[i] = opt_int(j.at("residuals"), forcing_keys[i]);
            }
            r.z_loop = opt_int(params, "Zl");
            auto & bounds = j.at("bounds");
            r.alpha = opt_int(bounds, "alpha");
            r.beta = opt_int(bounds, "beta");
            r.gamma = opt_int(bounds, "gamma");
            r.cc = opt_int(bounds, "cc");

            auto & certs = j.at("certificates");
            for (int i = 0; i < 4; ++i) {
                auto & fs = certs.at("forcing_sets").at(forcing_keys[i]);
                if (! fs.is_null()) {
                    vector<int> b;
                    for (auto & v : fs)
                        b.push_back(v.get<int>() - 1);
                    r.forcing_sets[i] = std::move(b);
                }
                auto & sq = certs.at("sequences").at(grundy_keys[i]);
                if (! sq.is_null())
                    r.sequences[i] = sequence_from_json(sq);
            }
            for (auto & c : j.at("order_checks"))
                r.order_checks.push_back({c.at("name").get<string>(), c.at("pass").get<bool>()});
            for (auto & [k, v] : j.at("timing_us").items())
                r.timing_us.emplace_back(k, v.get<std::int64_t>());
            r.skipped = j.at("skipped").get<vector<string>>();
            return r;
        }
        catch (const nlohmann::json::exception & e) {
            throw InputError(string("malformed report JSON: ") + e.what());
        }
    }
}

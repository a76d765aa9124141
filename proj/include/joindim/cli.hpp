#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "joindim/report.hpp"

namespace joindim::cli {

namespace detail {

struct Output {
    std::string format = "table";  // table | json | csv
    std::string path;              // empty = stdout
    bool stable = false;           // zero out elapsed_ms in reports

    void write(std::ostream& out, const std::string& text) const {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        file << text;
    }
};

inline std::string param_table(const ParamValue& v) { return joindim::detail::param_csv(v); }

inline std::string verification_table(const VerificationReport& report, bool stable) {
    std::ostringstream os;
    os << "check: " << report.check << '\n';
    os << "params:";
    for (const auto& [key, value] : report.ranges) os << ' ' << key << '=' << param_table(value);
    os << '\n';
    os << "instances: " << report.instances << '\n';
    os << "counterexamples: " << report.counterexample_count << '\n';
    for (const auto& ce : report.counterexamples) {
        os << "  at";
        for (const auto& [key, value] : ce.params) os << ' ' << key << '=' << param_table(value);
        os << ": lhs=" << ce.lhs << " rhs=" << ce.rhs << '\n';
    }
    os << "elapsed_ms: " << (stable ? 0 : report.elapsed_ms) << '\n';
    os << "passed: " << (report.passed() ? "true" : "false") << '\n';
    return os.str();
}

inline std::string dimension_table(const DimensionReport& report) {
    std::ostringstream os;
    os << "profile: d=" << report.profile.d() << " n=" << report.profile.n()
       << " degs=" << joindim::detail::join_with(report.profile.degs(), ',')
       << " (r=" << report.profile.r() << ")\n";
    os << "formula_bound: " << report.formula_bound << '\n';
    os << "hl_value: ";
    if (report.hl_value)
        os << *report.hl_value << '\n';
    else
        os << "-\n";
    os << "oracle_value: " << report.oracle_value << '\n';
    os << "equality: " << (report.equality ? "true" : "false") << '\n';
    os << "bound_violated: " << (report.bound_violated ? "true" : "false") << '\n';
    os << "trials: " << report.trials << '\n';
    os << "p: " << report.p << '\n';
    os << "seed: " << report.seed << '\n';
    return os.str();
}

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// Shared emission for the scalar query subcommands.
inline void emit_query(const Output& output, std::ostream& out, const std::string& query,
                       const Json& params, const Json& result, const std::string& csv_header,
                       const std::string& csv_row, const std::string& table,
                       const std::optional<std::string>& warning, std::ostream& err) {
    if (output.format == "json") {
        Json doc = Json::object();
        doc["query"] = query;
        doc["params"] = params;
        doc["result"] = result;
        if (warning) doc["warning"] = *warning;
        output.write(out, dump(doc));
        return;
    }
    if (warning) err << "note: " << *warning << '\n';
    if (output.format == "csv") {
        output.write(out, csv_header + csv_row);
        return;
    }
    output.write(out, table);
}

inline std::optional<std::string> low_degree_warning(int d) {
    if (d >= 5) return std::nullopt;
    return "d = " + std::to_string(d) +
           " is below 5; minimality of the all-ones profile is only guaranteed for d >= 5";
}

// Sweep descriptors shared by the ranged verify subcommands.
struct RangeBox {
    int d_min = 5, d_max = 12, n_min = 2, n_max = 12;
};

template <typename PerPair>
VerificationReport run_box(const std::string& name, const RangeBox& box, PerPair&& per_pair) {
    std::vector<VerificationReport> parts;
    for (int d = box.d_min; d <= box.d_max; ++d)
        for (int n = box.n_min; n <= box.n_max; ++n) parts.push_back(per_pair(d, n));
    return merge_reports(name,
                         {{"d_min", Int{box.d_min}},
                          {"d_max", Int{box.d_max}},
                          {"n_min", Int{box.n_min}},
                          {"n_max", Int{box.n_max}}},
                         parts);
}

}  // namespace detail

/// Entry point used by both the binary and the tests. Returns the process
/// exit code: 0 on success, 1 on a verification counterexample, oracle bound
/// violation or arithmetic overflow, 2 on usage or configuration errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"joindim: dimension formulas for joins of factor loci of forms,\n"
                 "exhaustive inequality sweeps and a finite-field rank oracle"};
    app.require_subcommand(1);
    app.fallthrough();

    detail::Output output;
    app.add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", output.path, "Write the report to this file instead of stdout");
    app.add_flag("--stable-output", output.stable,
                 "Emit elapsed_ms as 0 so identical invocations produce byte-identical output");

    int d = 0, n = 0, l1 = 0, l2 = 0, max_r = 0, m_max = 9;
    std::vector<int> degs;
    std::uint64_t p = 2147483647, seed = 1;
    int trials = 3;
    detail::RangeBox box;
    int id_n_max = 4, id_e_max = 10, id_deg_max = 5, id_len_max = 3;

    auto* slrk_cmd = app.add_subcommand("slrk", "Slice rank of the general degree-d form");
    slrk_cmd->add_option("--d", d, "Degree")->required();
    slrk_cmd->add_option("--n", n, "Number of variables minus one")->required();

    auto* bound_cmd =
        app.add_subcommand("bound", "Upper bound for the join dimension of a degree profile");
    bound_cmd->add_option("--d", d, "Degree")->required();
    bound_cmd->add_option("--n", n, "Number of variables minus one")->required();
    bound_cmd->add_option("--degs", degs, "Comma-separated profile degrees")
        ->required()
        ->delimiter(',');

    auto* f_cmd = app.add_subcommand("f", "Profile objective F (minimal at the all-ones profile)");
    f_cmd->add_option("--d", d, "Degree")->required();
    f_cmd->add_option("--n", n, "Number of variables minus one")->required();
    f_cmd->add_option("--degs", degs, "Comma-separated profile degrees")->required()->delimiter(',');

    auto* ci_cmd =
        app.add_subcommand("ci-dim", "Dimension of the family of complete intersections");
    ci_cmd->add_option("--n", n, "Ambient projective dimension")->required();
    ci_cmd->add_option("--degs", degs, "Comma-separated hypersurface degrees")
        ->required()
        ->delimiter(',');

    auto* abcde_cmd = app.add_subcommand("abcde", "Finite-difference family A..E at (l1, l2)");
    abcde_cmd->add_option("--d", d, "Degree")->required();
    abcde_cmd->add_option("--n", n, "Number of variables minus one")->required();
    abcde_cmd->add_option("--l1", l1, "Number of degree-1 entries")->required();
    abcde_cmd->add_option("--l2", l2, "Number of degree-2 entries")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive inequality sweeps");
    verify_cmd->require_subcommand(1);
    verify_cmd->fallthrough();
    auto add_box = [&](CLI::App* cmd) {
        cmd->add_option("--d-min", box.d_min, "Lowest degree")->capture_default_str();
        cmd->add_option("--d-max", box.d_max, "Highest degree")->capture_default_str();
        cmd->add_option("--n-min", box.n_min, "Lowest n")->capture_default_str();
        cmd->add_option("--n-max", box.n_max, "Highest n")->capture_default_str();
        cmd->fallthrough();
    };
    auto* v_min = verify_cmd->add_subcommand(
        "minimality", "F is uniquely minimal at the all-ones profile");
    add_box(v_min);
    auto* v_theta = verify_cmd->add_subcommand(
        "theta", "Strict coefficient inequality behind the profile-descent step");
    v_theta->add_option("--m-max", m_max, "Sweep all m up to this bound")->capture_default_str();
    v_theta->fallthrough();
    auto* v_edcba = verify_cmd->add_subcommand(
        "edcba", "Positivity of the finite differences B, C, D, E");
    add_box(v_edcba);
    auto* v_chain = verify_cmd->add_subcommand("chain", "A_{l1,l2} > A_{l1+l2,0} for l2 >= 1");
    add_box(v_chain);
    auto* v_reduction = verify_cmd->add_subcommand(
        "theta-reduction", "F strictly drops when a profile entry above 2 is lowered by one");
    add_box(v_reduction);
    auto* v_identity = verify_cmd->add_subcommand(
        "identity", "Series coefficient equals the inclusion-exclusion sum");
    v_identity->add_option("--n-max", id_n_max, "Highest n")->capture_default_str();
    v_identity->add_option("--e-max", id_e_max, "Highest coefficient index")->capture_default_str();
    v_identity->add_option("--deg-max", id_deg_max, "Highest degree entry")->capture_default_str();
    v_identity->add_option("--len-max", id_len_max, "Longest degree multiset")
        ->capture_default_str();
    v_identity->fallthrough();

    auto* oracle_cmd = app.add_subcommand("oracle", "Randomized finite-field dimension oracle");
    oracle_cmd->require_subcommand(1);
    oracle_cmd->fallthrough();
    auto* o_join = oracle_cmd->add_subcommand(
        "join-dim", "Measure one join dimension against the formula bound");
    o_join->add_option("--d", d, "Degree")->required();
    o_join->add_option("--n", n, "Number of variables minus one")->required();
    o_join->add_option("--degs", degs, "Comma-separated profile degrees")
        ->required()
        ->delimiter(',');
    o_join->add_option("--p", p, "Odd prime modulus")->capture_default_str();
    o_join->add_option("--trials", trials, "Samples per profile (max is reported)")
        ->capture_default_str();
    o_join->add_option("--seed", seed, "RNG seed (mt19937_64)")->capture_default_str();
    o_join->fallthrough();
    auto* o_cross = oracle_cmd->add_subcommand(
        "cross-check", "Measure every profile with r <= max-r against the bounds");
    o_cross->add_option("--d", d, "Degree")->required();
    o_cross->add_option("--n", n, "Number of variables minus one")->required();
    o_cross->add_option("--max-r", max_r, "Largest profile length")->required();
    o_cross->add_option("--p", p, "Odd prime modulus")->capture_default_str();
    o_cross->add_option("--trials", trials, "Samples per profile (max is reported)")
        ->capture_default_str();
    o_cross->add_option("--seed", seed, "RNG seed (mt19937_64)")->capture_default_str();
    o_cross->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (slrk_cmd->parsed()) {
            const Int value = generic_slice_rank(d, n);
            detail::emit_query(output, out, "slrk", {{"d", d}, {"n", n}}, value,
                               "d,n,slrk\n",
                               std::to_string(d) + "," + std::to_string(n) + "," +
                                   std::to_string(value) + "\n",
                               std::to_string(value) + "\n", std::nullopt, err);
            return 0;
        }
        if (bound_cmd->parsed() || f_cmd->parsed()) {
            const JoinProfile profile(d, n, degs);
            const bool is_bound = bound_cmd->parsed();
            const Int value = is_bound ? join_dim_upper_bound(profile) : f_value(profile);
            const std::string name = is_bound ? "bound" : "f";
            detail::emit_query(
                output, out, name, {{"d", d}, {"n", n}, {"degs", profile.degs()}}, value,
                "d,n,degs," + name + "\n",
                std::to_string(d) + "," + std::to_string(n) + "," +
                    joindim::detail::join_with(profile.degs(), ';') + "," + std::to_string(value) +
                    "\n",
                std::to_string(value) + "\n", detail::low_degree_warning(d), err);
            return 0;
        }
        if (ci_cmd->parsed()) {
            const Int value = ci_dimension(n, degs);
            detail::emit_query(output, out, "ci-dim", {{"n", n}, {"degs", degs}}, value,
                               "n,degs,dim\n",
                               std::to_string(n) + "," + joindim::detail::join_with(degs, ';') +
                                   "," + std::to_string(value) + "\n",
                               std::to_string(value) + "\n", std::nullopt, err);
            return 0;
        }
        if (abcde_cmd->parsed()) {
            const AbcdeRecord rec = abcde(d, n, l1, l2);
            const auto cell = [](const std::optional<Int>& v) {
                return v ? std::to_string(*v) : std::string("-");
            };
            Json result = Json::object();
            result["A"] = rec.a;
            result["B"] = rec.b ? Json(*rec.b) : Json(nullptr);
            result["C"] = rec.c ? Json(*rec.c) : Json(nullptr);
            result["D"] = rec.d ? Json(*rec.d) : Json(nullptr);
            result["E"] = rec.e ? Json(*rec.e) : Json(nullptr);
            std::ostringstream table;
            table << "A = " << rec.a << "\nB = " << cell(rec.b) << "\nC = " << cell(rec.c)
                  << "\nD = " << cell(rec.d) << "\nE = " << cell(rec.e) << '\n';
            detail::emit_query(output, out, "abcde",
                               {{"d", d}, {"n", n}, {"l1", l1}, {"l2", l2}}, result,
                               "d,n,l1,l2,A,B,C,D,E\n",
                               std::to_string(d) + "," + std::to_string(n) + "," +
                                   std::to_string(l1) + "," + std::to_string(l2) + "," +
                                   std::to_string(rec.a) + "," + cell(rec.b) + "," + cell(rec.c) +
                                   "," + cell(rec.d) + "," + cell(rec.e) + "\n",
                               table.str(), std::nullopt, err);
            return 0;
        }
        if (verify_cmd->parsed()) {
            VerificationReport report;
            if (v_min->parsed())
                report = detail::run_box("minimality", box, [](int dd, int nn) {
                    return verify_minimality(dd, nn);
                });
            else if (v_theta->parsed())
                report = verify_theta_inequality(m_max);
            else if (v_edcba->parsed())
                report = detail::run_box("edcba", box, [](int dd, int nn) {
                    return verify_edcba(dd, nn);
                });
            else if (v_chain->parsed())
                report = detail::run_box("chain", box, [](int dd, int nn) {
                    return verify_chain(dd, nn);
                });
            else if (v_reduction->parsed())
                report = detail::run_box("theta-reduction", box, [](int dd, int nn) {
                    return verify_theta_reduction(dd, nn);
                });
            else
                report = verify_identity_lemma(id_n_max, id_e_max, id_deg_max, id_len_max);

            if (output.format == "json")
                output.write(out, detail::dump(to_json(report, output.stable)));
            else if (output.format == "csv")
                output.write(out, to_csv(report, output.stable));
            else
                output.write(out, detail::verification_table(report, output.stable));
            return report.passed() ? 0 : 1;
        }
        if (o_join->parsed()) {
            const JoinProfile profile(d, n, degs);
            const auto start = std::chrono::steady_clock::now();
            const DimensionReport report = terracini_join_dim(profile, p, trials, seed);
            const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
            if (output.format == "json") {
                Json doc = Json::object();
                doc["check"] = "oracle-join-dim";
                doc["params"] = {{"d", d},      {"n", n},           {"degs", profile.degs()},
                                 {"p", p},      {"trials", trials}, {"seed", seed}};
                doc["result"] = dimension_json(report);
                doc["passed"] = !report.bound_violated;
                doc["seed"] = seed;
                doc["elapsed_ms"] = output.stable ? 0 : elapsed_ms;
                output.write(out, detail::dump(doc));
            } else if (output.format == "csv") {
                output.write(out, dimension_csv_header() + dimension_csv_row(report));
            } else {
                output.write(out, detail::dimension_table(report));
            }
            return report.bound_violated ? 1 : 0;
        }
        if (o_cross->parsed()) {
            const auto start = std::chrono::steady_clock::now();
            const CrossCheckResult result = cross_check(d, n, max_r, p, trials, seed);
            const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
            if (output.format == "json") {
                Json doc = Json::object();
                doc["check"] = "oracle-cross-check";
                doc["params"] = {{"d", d},      {"n", n},           {"max_r", max_r},
                                 {"p", p},      {"trials", trials}, {"seed", seed}};
                Json profiles = Json::array();
                for (const auto& rep : result.reports) profiles.push_back(dimension_json(rep));
                doc["result"] = {{"profiles", std::move(profiles)}};
                doc["passed"] = result.passed;
                doc["seed"] = seed;
                doc["elapsed_ms"] = output.stable ? 0 : elapsed_ms;
                output.write(out, detail::dump(doc));
            } else if (output.format == "csv") {
                std::string text = dimension_csv_header();
                for (const auto& rep : result.reports) text += dimension_csv_row(rep);
                output.write(out, text);
            } else {
                std::ostringstream os;
                for (const auto& rep : result.reports) {
                    os << "degs=" << joindim::detail::join_with(rep.profile.degs(), ',')
                       << " bound=" << rep.formula_bound << " oracle=" << rep.oracle_value
                       << " equality=" << (rep.equality ? "true" : "false");
                    if (rep.hl_value) os << " hl=" << *rep.hl_value;
                    if (rep.bound_violated) os << " BOUND VIOLATED";
                    os << '\n';
                }
                os << "passed: " << (result.passed ? "true" : "false") << '\n';
                output.write(out, os.str());
            }
            return result.passed ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace joindim::cli

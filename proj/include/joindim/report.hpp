#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "joindim/oracle.hpp"
#include "joindim/verifier.hpp"

namespace joindim {

using Json = nlohmann::ordered_json;

inline Json to_json(const ParamValue& v) {
    if (std::holds_alternative<Int>(v)) return std::get<Int>(v);
    return std::get<std::vector<int>>(v);
}

inline Json to_json(const ParamList& params) {
    Json obj = Json::object();
    for (const auto& [key, value] : params) obj[key] = to_json(value);
    return obj;
}

/// Full report envelope for a verification sweep. When stable_output is set,
/// elapsed_ms is emitted as 0 so identical invocations serialize byte-identically.
inline Json to_json(const VerificationReport& report, bool stable_output = false) {
    Json doc = Json::object();
    doc["check"] = report.check;
    doc["params"] = to_json(report.ranges);
    doc["result"] = {{"instances", report.instances},
                     {"counterexample_count", report.counterexample_count}};
    doc["passed"] = report.passed();
    Json ces = Json::array();
    for (const auto& ce : report.counterexamples)
        ces.push_back({{"params", to_json(ce.params)}, {"lhs", ce.lhs}, {"rhs", ce.rhs}});
    doc["counterexamples"] = std::move(ces);
    doc["elapsed_ms"] = stable_output ? 0 : report.elapsed_ms;
    return doc;
}

/// Inner JSON object for one oracle measurement (no envelope).
inline Json dimension_json(const DimensionReport& report) {
    Json obj = Json::object();
    obj["d"] = report.profile.d();
    obj["n"] = report.profile.n();
    obj["degs"] = report.profile.degs();
    obj["r"] = report.profile.r();
    obj["formula_bound"] = report.formula_bound;
    if (report.hl_value)
        obj["hl_value"] = *report.hl_value;
    else
        obj["hl_value"] = nullptr;
    obj["oracle_value"] = report.oracle_value;
    obj["equality"] = report.equality;
    obj["bound_violated"] = report.bound_violated;
    return obj;
}

namespace detail {

inline std::string join_with(const std::vector<int>& values, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << sep;
        os << values[i];
    }
    return os.str();
}

inline std::string param_csv(const ParamValue& v) {
    if (std::holds_alternative<Int>(v)) return std::to_string(std::get<Int>(v));
    return join_with(std::get<std::vector<int>>(v), ';');
}

}  // namespace detail

/// One-row CSV summary of a verification sweep.
inline std::string to_csv(const VerificationReport& report, bool stable_output = false) {
    std::ostringstream os;
    os << "check,passed,instances,counterexample_count,elapsed_ms\n";
    os << report.check << ',' << (report.passed() ? "true" : "false") << ',' << report.instances
       << ',' << report.counterexample_count << ','
       << (stable_output ? 0 : report.elapsed_ms) << '\n';
    return os.str();
}

inline std::string dimension_csv_header() {
    return "d,n,degs,r,formula_bound,hl_value,oracle_value,equality,bound_violated,trials,p,seed\n";
}

inline std::string dimension_csv_row(const DimensionReport& report) {
    std::ostringstream os;
    os << report.profile.d() << ',' << report.profile.n() << ','
       << detail::join_with(report.profile.degs(), ';') << ',' << report.profile.r() << ','
       << report.formula_bound << ',';
    if (report.hl_value)
        os << *report.hl_value;
    else
        os << '-';
    os << ',' << report.oracle_value << ',' << (report.equality ? "true" : "false") << ','
       << (report.bound_violated ? "true" : "false") << ',' << report.trials << ',' << report.p
       << ',' << report.seed << '\n';
    return os.str();
}

}  // namespace joindim

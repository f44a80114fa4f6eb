#pragma once

#include <filesystem>

#include <json.hpp>

#include "qfrft/bounds.hpp"
#include "qfrft/qsig.hpp"

namespace qfr {

namespace detail {

inline nlohmann::ordered_json report_common_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["theorem_id"] = theorem_name(r.theorem_id);
    auto orders = nlohmann::ordered_json::array();
    for (const auto& o : r.orders) orders.push_back({o.alpha1, o.alpha2});
    j["orders"] = orders;
    if (r.axis != 0)
        j["axis"] = r.axis;
    else
        j["axis"] = nullptr;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    auto terms = nlohmann::ordered_json::object();
    for (const auto& [label, value] : r.rhs_terms) terms[label] = value;
    j["rhs_terms"] = terms;
    j["grid"] = {{"n1", r.grid.n1},
                 {"n2", r.grid.n2},
                 {"x1_min", r.grid.x1_min},
                 {"x1_max", r.grid.x1_max},
                 {"x2_min", r.grid.x2_min},
                 {"x2_max", r.grid.x2_max}};
    return j;
}

} // namespace detail

/// JSON form of a BoundReport with the one-sided slack criterion
/// slack >= -tol_factor * max(1, lhs). rhs_terms keeps the summation order,
/// so a reader can re-sum the signed values left to right and reproduce rhs
/// bit-exactly (doubles serialize with shortest round-trip precision).
inline nlohmann::ordered_json report_to_json(const BoundReport& r, double tol_factor) {
    nlohmann::ordered_json j = detail::report_common_json(r);
    j["tolerances"] = {{"tol_slack_factor", tol_factor},
                       {"tol_slack", slack_tolerance(r.lhs, tol_factor)}};
    j["pass"] = passes(r, tol_factor);
    return j;
}

/// Equality flavor: pass iff |slack| / lhs is within the relative tolerance.
/// Used for the Gaussian equality cases, where both sides agree to
/// discretization level and the slack may land on either side of zero.
inline nlohmann::ordered_json equality_report_to_json(const BoundReport& r, double eq_tol) {
    nlohmann::ordered_json j = detail::report_common_json(r);
    const double rel = std::abs(r.slack) / std::max(1e-300, std::abs(r.lhs));
    j["tolerances"] = {{"equality_rel_tol", eq_tol}, {"relative_slack", rel}};
    j["pass"] = rel <= eq_tol;
    return j;
}

inline void write_report(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
    detail::atomic_write(path, j.dump(2) + "\n");
}

} // namespace qfr

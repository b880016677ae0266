#include "pgrow/report.hpp"

namespace pgrow {

Json to_json(const LimitEstimate& e) {
    Json j;
    j["status"] = to_string(e.status);
    if (e.value) j["value"] = *e.value;
    j["tail_residual"] = e.tail_residual;
    j["window"] = Json::array({e.window_lo, e.window_hi});
    return j;
}

Json to_json(const ValidationReport& r) {
    Json j;
    j["passing"] = r.passing();
    j["clauses"] = {{"positive", r.positive},
                    {"derivative_positive", r.derivative_positive},
                    {"log_convex", r.log_convex},
                    {"divergent", r.divergent}};
    Json w = Json::array();
    for (const auto& wit : r.witnesses) w.push_back({{"x", wit.x}, {"detail", wit.detail}});
    j["witnesses"] = w;
    j["scope"] = "sampled ray only";
    return j;
}

Json to_json(const ProximateVerdict& v) {
    Json j;
    j["is_proximate"] = v.is_proximate;
    j["rho"] = to_json(v.rho);
    return j;
}

Json to_json(const EquivalenceReport& r) {
    Json j;
    j["verdict_I"] = to_json(r.verdict_I);
    j["limit_3"] = to_json(r.limit_3);
    j["limit_4"] = to_json(r.limit_4);
    j["limit_4_zero"] = r.limit_4_zero;
    j["statement_II"] = r.statement_II;
    j["identity6_max_residual"] = r.identity6_max_residual;
    if (r.rho_agreement) j["rho_agreement"] = *r.rho_agreement;
    j["theorem_consistent"] = r.theorem_consistent;
    return j;
}

Json to_json(const LhopitalReport& r) {
    Json j;
    j["precondition_ok"] = r.precondition_ok;
    j["derivative_ratio"] = to_json(r.derivative_ratio);
    j["value_ratio"] = to_json(r.value_ratio);
    j["discrepancy"] = r.discrepancy;
    j["tolerance"] = r.tolerance;
    j["passes"] = r.passes;
    return j;
}

Json to_json(const ValironVerdict& v) {
    Json j;
    j["is_valiron"] = v.is_valiron;
    j["rho_limit"] = to_json(v.rho_limit);
    j["decay_limit"] = to_json(v.decay_limit);
    return j;
}

Json to_json(const ValironBridgeReport& r) {
    Json j;
    j["valiron"] = to_json(r.valiron);
    j["proximate"] = to_json(r.proximate);
    j["agree"] = r.agree;
    if (r.rho_gap) {
        j["rho_gap"] = *r.rho_gap;
        j["rho_tolerance"] = r.rho_tolerance;
    }
    return j;
}

Json to_json(const OrderEstimate& e) {
    Json j;
    j["finite"] = e.finite;
    if (e.finite) j["rho_star"] = e.rho_star;
    j["limsup"] = to_json(e.limsup);
    j["window_warning"] = e.window_warning;
    return j;
}

Json to_json(const ConstructionResult& r) {
    Json j;
    j["rho_star"] = r.rho_star;
    j["proximate"] = to_json(r.proximate);
    j["rho_gap"] = r.rho_gap;
    j["q_upper"] = r.q_upper;
    j["q_touch"] = r.q_touch;
    j["touch_count"] = r.touch_indices.size();
    j["terminal_slope"] = r.terminal_slope;
    j["lift"] = r.lift;
    j["used_ray"] = r.used_ray;
    j["window_warning"] = r.window_warning;
    j["success"] = r.success;
    return j;
}

Json to_json(const MeansSeries& s) {
    Json j;
    j["radii"] = s.rs.size();
    j["r_min"] = s.rs.front();
    j["r_max"] = s.rs.back();
    j["normalization"] = to_string(s.normalization);
    return j;
}

Json make_report(const std::string& command, const Json& options, const Json& payload) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["options"] = options;
    j["payload"] = payload;
    j["version"] = kVersion;
    return j;
}

} // namespace pgrow

#ifndef PGROW_REPORT_HPP
#define PGROW_REPORT_HPP

#include <string>

#include <json.hpp>

#include "pgrow/construct.hpp"
#include "pgrow/limits.hpp"
#include "pgrow/model.hpp"
#include "pgrow/proximate.hpp"
#include "pgrow/subharmonic.hpp"

namespace pgrow {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "proxgrow 0.1.0";

Json to_json(const LimitEstimate& e);
Json to_json(const ValidationReport& r);
Json to_json(const ProximateVerdict& v);
Json to_json(const EquivalenceReport& r);
Json to_json(const LhopitalReport& r);
Json to_json(const ValironVerdict& v);
Json to_json(const ValironBridgeReport& r);
Json to_json(const OrderEstimate& e);
Json to_json(const ConstructionResult& r);
Json to_json(const MeansSeries& s);

/// Wraps a payload with the command echo, the resolved options, and version
/// fields. The payload is reproducible byte-for-byte from the echoed options.
Json make_report(const std::string& command, const Json& options, const Json& payload);

} // namespace pgrow

#endif

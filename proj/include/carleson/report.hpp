#pragma once

#include <string>

#include <json.hpp>

#include "carleson/certify.hpp"
#include "carleson/growth.hpp"
#include "carleson/measure.hpp"

namespace carleson {

using json = nlohmann::ordered_json;

// Exit statuses shared by the library dispatch and the CLI.
inline constexpr int kStatusOk = 0;
inline constexpr int kStatusPrecondition = 2;
inline constexpr int kStatusAccuracy = 3;
inline constexpr int kStatusUsage = 64;

struct RunOutcome {
  int status = kStatusOk;
  json report;
};

// Construct inputs from config records.
GrowthFunction growth_from_config(const json& cfg);
Measure measure_from_config(const json& cfg);
ScanGrid scan_grid_from_config(const json& cfg, const ScanGrid& fallback = {});
QuadratureConfig quadrature_from_config(const json& cfg);

// Dispatch one command against its config; never throws for domain errors,
// they are encoded in the status and report.
RunOutcome run_command(const std::string& command, const json& config);

// Canonical textual rendering (what the CLI writes).  Byte-deterministic for
// identical configs.
std::string render_report(const json& report);

json to_json(const CertificationReport& rep);
json to_json(const ClassReport& rep);

}  // namespace carleson

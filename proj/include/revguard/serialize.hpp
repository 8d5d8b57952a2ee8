#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "revguard/defense.hpp"
#include "revguard/detection.hpp"
#include "revguard/metrics.hpp"
#include "revguard/trojan.hpp"

// JSON envelopes used by the CLI. Every object carries
// "schema_version": 1; see README for the field reference.
namespace revguard {

inline constexpr int kSchemaVersion = 1;

nlohmann::json trojan_to_json(const TrojanSpec& t);
TrojanSpec trojan_from_json(const nlohmann::json& j, int width);

nlohmann::json report_to_json(const DetectionReport& r);
nlohmann::json assignment_to_json(const ScramblingAssignment& a);
nlohmann::json cost_to_json(const CostReport& r);

}  // namespace revguard

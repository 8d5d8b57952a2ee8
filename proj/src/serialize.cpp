#include "revguard/serialize.hpp"

#include <nlohmann/json.hpp>

namespace revguard {

using nlohmann::json;

json trojan_to_json(const TrojanSpec& t) {
  json gates = json::array();
  for (const auto& g : t.gates)
    gates.push_back({{"controls", g.controls()}, {"target", g.target()}});
  return json{{"schema_version", kSchemaVersion},
              {"position", t.position},
              {"gates", gates}};
}

TrojanSpec trojan_from_json(const json& j, int width) {
  TrojanSpec t;
  t.width = width;
  t.position = j.at("position").get<std::size_t>();
  for (const auto& jg : j.at("gates")) {
    std::uint64_t mask = 0;
    for (int c : jg.at("controls").get<std::vector<int>>()) {
      if (c < 0 || c >= kMaxLines)
        throw MalformedGateError("trojan control index out of range");
      mask |= std::uint64_t{1} << c;
    }
    t.gates.emplace_back(mask, jg.at("target").get<int>());
  }
  if (t.gates.empty())
    throw InsertionError("trojan payload must be non-empty");
  return t;
}

json report_to_json(const DetectionReport& r) {
  json j{{"schema_version", kSchemaVersion},
         {"detected", r.detected},
         {"patterns_applied", r.patterns_applied},
         {"suite", r.suite}};
  if (r.witness) {
    j["witness"] = {{"input", r.witness->input.str()},
                    {"expected", r.witness->expected.str()},
                    {"observed", r.witness->observed.str()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json assignment_to_json(const ScramblingAssignment& a) {
  json j{{"schema_version", kSchemaVersion},
         {"level", to_string(a.level)},
         {"primary_inputs", a.primary_inputs},
         {"c_effective", a.c_effective}};
  if (a.constant)
    j["constant"] = *a.constant;
  else
    j["constant"] = nullptr;
  if (!a.per_pattern.empty()) {
    json vals = json::array();
    for (std::uint64_t v : a.per_pattern) vals.push_back(v);
    j["per_pattern"] = vals;
  }
  if (a.seed) j["seed"] = *a.seed;
  return j;
}

json cost_to_json(const CostReport& r) {
  return json{{"schema_version", kSchemaVersion},
              {"line_cost", r.line_cost},
              {"gate_cost", r.gate_cost},
              {"quantum_cost", r.quantum_cost},
              {"per_gate", r.per_gate}};
}

}  // namespace revguard

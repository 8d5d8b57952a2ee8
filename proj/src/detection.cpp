#include "revguard/detection.hpp"

#include <random>
#include <unordered_set>

namespace revguard {

namespace {

PatternSuite dedup(std::string label, std::vector<BitPattern> raw) {
  PatternSuite suite;
  suite.label = std::move(label);
  suite.raw_count = raw.size();
  std::unordered_set<std::uint64_t> seen;
  for (const auto& p : raw)
    if (seen.insert(p.value()).second) suite.patterns.push_back(p);
  return suite;
}

}  // namespace

PatternSuite all1_suite(const Circuit& host) {
  std::vector<BitPattern> raw;
  const BitPattern target = BitPattern::all_ones(host.lines());
  for (std::size_t slot = 0; slot <= host.gate_count(); ++slot)
    raw.push_back(simulate_inverse(host, target, 0, slot));
  return dedup("all1", std::move(raw));
}

PatternSuite onecold_suite(const Circuit& host) {
  std::vector<BitPattern> raw;
  for (std::size_t slot = 0; slot <= host.gate_count(); ++slot)
    for (int line = 0; line < host.lines(); ++line)
      raw.push_back(simulate_inverse(
          host, BitPattern::one_cold(host.lines(), line), 0, slot));
  return dedup("onecold", std::move(raw));
}

DetectionReport detect(const Circuit& host, const TrojanSpec& t,
                       const std::vector<BitPattern>& patterns,
                       const std::string& label) {
  const Circuit infected = insert(host, t);
  DetectionReport report;
  report.suite = label;
  for (const auto& p : patterns) {
    ++report.patterns_applied;
    const BitPattern expected = simulate(host, p);
    const BitPattern observed = simulate(infected, p);
    if (!(expected == observed)) {
      report.detected = true;
      report.witness = DetectionWitness{p, expected, observed};
      return report;
    }
  }
  return report;
}

DetectionReport detect(const Circuit& host, const TrojanSpec& t,
                       const PatternSuite& suite) {
  return detect(host, t, suite.patterns, suite.label);
}

DetectionReport random_detect(const Circuit& host, const TrojanSpec& t,
                              std::size_t k, std::uint64_t seed) {
  if (t.width != host.lines())
    throw DimensionError("trojan width does not match host");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = BitPattern::mask(host.lines());
  std::vector<BitPattern> patterns;
  patterns.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    patterns.emplace_back(host.lines(), rng() & mask);
  return detect(host, t, patterns, "random");
}

}  // namespace revguard

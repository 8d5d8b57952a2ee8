#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revguard/circuit.hpp"
#include "revguard/trojan.hpp"

namespace revguard {

// A labelled test-pattern suite. patterns are deduplicated preserving
// order; raw_count keeps the undeduplicated size bound visible
// (m+1 for all-1, n*(m+1) for one-cold).
struct PatternSuite {
  std::string label;
  std::vector<BitPattern> patterns;
  std::size_t raw_count = 0;
};

// For each inter-gate slot, the primary-input pattern whose prefix image is
// the all-ones pattern at that slot. At most m+1 patterns.
PatternSuite all1_suite(const Circuit& host);

// For each slot and each line, the primary-input pattern whose prefix image
// has a single 0 on that line. At most n*(m+1) patterns.
PatternSuite onecold_suite(const Circuit& host);

struct DetectionWitness {
  BitPattern input;
  BitPattern expected;
  BitPattern observed;
};

struct DetectionReport {
  bool detected = false;
  std::optional<DetectionWitness> witness;
  std::size_t patterns_applied = 0;
  std::string suite;
};

// Compares the golden host against insert(host, t) on each suite pattern;
// stops at the first differing output.
DetectionReport detect(const Circuit& host, const TrojanSpec& t,
                       const PatternSuite& suite);
DetectionReport detect(const Circuit& host, const TrojanSpec& t,
                       const std::vector<BitPattern>& patterns,
                       const std::string& label);

// k uniform patterns from a seeded generator; deterministic per seed.
DetectionReport random_detect(const Circuit& host, const TrojanSpec& t,
                              std::size_t k, std::uint64_t seed);

}  // namespace revguard

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revguard {

enum class ScramblingLevel { Baseline, Lv1, Lv2, Lv3 };

std::string to_string(ScramblingLevel level);
ScramblingLevel parse_level(const std::string& s);

// Functional-mode assignment of ancillary inputs. Baseline/Lv1 use one
// constant vector over the ancillae; Lv2/Lv3 carry one value per primary
// input pattern. Lv3 works over c+1 ancillae (one extra line).
struct ScramblingAssignment {
  ScramblingLevel level = ScramblingLevel::Baseline;
  int primary_inputs = 0;                   // p
  int c_effective = 0;                      // c, or c+1 for Lv3
  std::optional<std::uint64_t> constant;    // baseline / Lv1
  std::vector<std::uint64_t> per_pattern;   // Lv2 / Lv3, size 2^p
  std::optional<std::uint64_t> seed;

  // Ancilla value used for primary pattern x.
  std::uint64_t value_for(std::uint64_t x) const {
    if (constant) return *constant;
    return per_pattern.empty() ? 0 : per_pattern[x];
  }
};

}  // namespace revguard

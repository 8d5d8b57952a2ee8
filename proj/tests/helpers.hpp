#pragma once

#include <algorithm>
#include <random>

#include "revguard/circuit.hpp"
#include "revguard/trojan.hpp"

namespace revguard::testing {

// Seeded random cascade: every gate picks a target and a random subset of
// the other lines as controls.
inline Circuit random_circuit(int lines, std::size_t gate_count,
                              std::mt19937_64& rng) {
  Circuit c(lines);
  std::uniform_int_distribution<int> pick_target(0, lines - 1);
  const std::uint64_t full = BitPattern::mask(lines);
  for (std::size_t i = 0; i < gate_count; ++i) {
    const int target = pick_target(rng);
    const std::uint64_t controls =
        rng() & full & ~(std::uint64_t{1} << target);
    c.append(ToffoliGate(controls, target));
  }
  return c;
}

inline Circuit random_circuit(int lines, std::size_t gate_count,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_circuit(lines, gate_count, rng);
}

inline ToffoliGate random_gate(int lines, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_target(0, lines - 1);
  const int target = pick_target(rng);
  const std::uint64_t controls =
      rng() & BitPattern::mask(lines) & ~(std::uint64_t{1} << target);
  return ToffoliGate(controls, target);
}

inline Permutation random_permutation(int width, std::mt19937_64& rng) {
  std::vector<std::uint64_t> map(std::uint64_t{1} << width);
  for (std::uint64_t x = 0; x < map.size(); ++x) map[x] = x;
  std::shuffle(map.begin(), map.end(), rng);
  return Permutation(width, std::move(map));
}

}  // namespace revguard::testing

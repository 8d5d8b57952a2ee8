#include "revguard/synthesis.hpp"

#include <algorithm>

namespace revguard {

namespace {

// Applies gate (controls, flip) to the output side of the working map.
void apply_output_gate(std::vector<std::uint64_t>& map, std::uint64_t controls,
                       std::uint64_t flip) {
  for (auto& y : map)
    if ((y & controls) == controls) y ^= flip;
}

}  // namespace

Circuit synthesize(const Permutation& spec) {
  const int n = spec.width();
  if (n > exhaustive_limit())
    throw CapacityError("synthesis above the exhaustive limit");

  std::vector<std::uint64_t> work = spec.map();
  std::vector<ToffoliGate> gates;

  for (std::uint64_t x = 0; x < work.size(); ++x) {
    // set bits that are 1 in x but 0 in the current output
    std::uint64_t y = work[x];
    std::uint64_t missing = x & ~y;
    while (missing) {
      const int j = std::countr_zero(missing);
      const std::uint64_t flip = std::uint64_t{1} << j;
      gates.emplace_back(y, j);
      apply_output_gate(work, y, flip);
      y |= flip;
      missing &= missing - 1;
    }
    // clear bits that are 1 in the output but 0 in x, controlling on x's bits
    std::uint64_t surplus = y & ~x;
    while (surplus) {
      const int j = std::countr_zero(surplus);
      const std::uint64_t flip = std::uint64_t{1} << j;
      gates.emplace_back(x, j);
      apply_output_gate(work, x, flip);
      surplus &= surplus - 1;
    }
  }

  // gates were accumulated on the output side; the circuit applies them in
  // reverse
  std::reverse(gates.begin(), gates.end());
  return Circuit(n, std::move(gates));
}

Circuit resynthesize(const EmbeddingResult& e,
                     const ScramblingAssignment& assignment) {
  EmbeddingResult scrambled = scrambled_embedding(e, assignment);
  Circuit c = synthesize(scrambled.spec);

  const int n = scrambled.width;
  const int a = scrambled.ancillary;
  const int g = scrambled.garbage;
  std::vector<std::string> names;
  std::vector<std::optional<bool>> constants(static_cast<std::size_t>(n),
                                             std::nullopt);
  std::vector<bool> garbage(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (i < a) {
      names.push_back("a" + std::to_string(i));
      if (assignment.constant)
        constants[static_cast<std::size_t>(i)] =
            ((*assignment.constant >> i) & 1u) != 0;
      else
        constants[static_cast<std::size_t>(i)] = false;  // value is secret
    } else {
      names.push_back("x" + std::to_string(i - a));
    }
    if (i < g) garbage[static_cast<std::size_t>(i)] = true;
  }
  c.set_line_names(std::move(names));
  c.set_constants(std::move(constants));
  c.set_garbage(std::move(garbage));
  return c;
}

Circuit resynthesize_for_level(const EmbeddingResult& e, ScramblingLevel level,
                               std::uint64_t seed) {
  return resynthesize(e, scramble(e, level, seed));
}

}  // namespace revguard

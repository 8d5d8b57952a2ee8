#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "revguard/circuit.hpp"

namespace revguard {

// Cost of one k-line Toffoli gate in primitive (1- and 2-line) gates.
using QuantumCostFn = std::function<std::uint64_t(int k)>;

// 1 for NOT/CNOT, 2^k - 3 for larger gates (no-ancilla decomposition).
std::uint64_t standard_quantum_cost(int k);

struct CostReport {
  int line_cost = 0;
  std::size_t gate_cost = 0;
  std::uint64_t quantum_cost = 0;
  std::vector<std::uint64_t> per_gate;
};

CostReport cost(const Circuit& c);
CostReport cost(const Circuit& c, const QuantumCostFn& table);

struct OverheadReport {
  double line_pct = 0;
  double gate_pct = 0;
  double quantum_pct = 0;
};

// 100 * (variant - base) / base per metric; negative values allowed.
OverheadReport overhead(const CostReport& base, const CostReport& variant);

}  // namespace revguard

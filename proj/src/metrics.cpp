#include "revguard/metrics.hpp"

namespace revguard {

std::uint64_t standard_quantum_cost(int k) {
  if (k <= 2) return 1;
  return (std::uint64_t{1} << k) - 3;
}

CostReport cost(const Circuit& c) { return cost(c, standard_quantum_cost); }

CostReport cost(const Circuit& c, const QuantumCostFn& table) {
  CostReport report;
  report.line_cost = c.lines();
  report.gate_cost = c.gate_count();
  report.per_gate.reserve(c.gate_count());
  for (const auto& g : c.gates()) {
    const std::uint64_t qc = table(g.size());
    report.per_gate.push_back(qc);
    report.quantum_cost += qc;
  }
  return report;
}

OverheadReport overhead(const CostReport& base, const CostReport& variant) {
  if (base.gate_cost == 0 || base.quantum_cost == 0)
    throw DomainError("overhead undefined for zero base gate/quantum cost");
  OverheadReport o;
  o.line_pct = 100.0 *
               (static_cast<double>(variant.line_cost) - base.line_cost) /
               static_cast<double>(base.line_cost);
  o.gate_pct = 100.0 *
               (static_cast<double>(variant.gate_cost) -
                static_cast<double>(base.gate_cost)) /
               static_cast<double>(base.gate_cost);
  o.quantum_pct = 100.0 *
                  (static_cast<double>(variant.quantum_cost) -
                   static_cast<double>(base.quantum_cost)) /
                  static_cast<double>(base.quantum_cost);
  return o;
}

}  // namespace revguard

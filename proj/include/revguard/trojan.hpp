#pragma once

#include <vector>

#include "revguard/circuit.hpp"
#include "revguard/defense.hpp"

namespace revguard {

// Reversible gate-sequence payload plus the inter-gate slot (0..m) of the
// host it is inserted at.
struct TrojanSpec {
  int width = 0;
  std::vector<ToffoliGate> gates;
  std::size_t position = 0;
};

enum class TrojanTag {
  Single,
  TwoDistinctTargets,
  TwoSharedTarget,
  TwoDummy,
  Three1,  // all three gates share the target line
  Three2,  // first two share the target line
  Three3,  // last two share the target line
  Three4,  // first and last share the target line
  Three5,  // all targets distinct
  SymmetricTTinv,
  General,
};

std::string to_string(TrojanTag tag);

struct TrojanClass {
  TrojanTag tag = TrojanTag::General;
  bool functionally_null = false;  // composite function is the identity
};

// Infected circuit: host gates [0..pos) ++ payload ++ host gates [pos..m).
Circuit insert(const Circuit& host, const TrojanSpec& t);

// Composite function of the payload alone on one pattern.
BitPattern trojan_apply(const TrojanSpec& t, BitPattern p);

// All patterns a with T(a) != a, where T is the payload's composite
// function. Exhaustive over 2^width inputs.
std::vector<BitPattern> triggering_patterns(const TrojanSpec& t);

// D = 1 - |triggering patterns| / 2^n, exact.
Rational difficulty(const TrojanSpec& t);

TrojanClass classify(const TrojanSpec& t);

// Symmetric Trojan t·T·t^-1: the outer parts cancel unless the middle gate
// fires. t_part gates must share one control set disjoint from their
// targets, and every t_part target must be a control of middle.
TrojanSpec make_symmetric(int width, const std::vector<ToffoliGate>& t_part,
                          const ToffoliGate& middle, std::size_t position = 0);

}  // namespace revguard

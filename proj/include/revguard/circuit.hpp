#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "revguard/errors.hpp"
#include "revguard/pattern.hpp"

namespace revguard {

// Positive-control Toffoli gate: flips the target line iff all control
// lines carry 1. An empty control set is a NOT gate (TOF1); one control is
// a CNOT (TOF2). Self-inverse.
class ToffoliGate {
 public:
  ToffoliGate(std::uint64_t control_mask, int target)
      : controls_(control_mask), target_(target) {
    if (target < 0 || target >= kMaxLines)
      throw MalformedGateError("gate target out of range");
    if (controls_ >> kMaxLines)
      throw MalformedGateError("gate control out of range");
    if ((controls_ >> target) & 1u)
      throw MalformedGateError("gate target must not be a control line");
  }

  ToffoliGate(std::initializer_list<int> controls, int target)
      : ToffoliGate(mask_of(controls), target) {}

  std::uint64_t control_mask() const noexcept { return controls_; }
  int target() const noexcept { return target_; }

  // Gate size k = |controls| + 1.
  int size() const noexcept { return std::popcount(controls_) + 1; }

  int max_line() const noexcept {
    int hi = target_;
    if (controls_ != 0) {
      int c = 63 - std::countl_zero(controls_);
      if (c > hi) hi = c;
    }
    return hi;
  }

  std::vector<int> controls() const {
    std::vector<int> out;
    for (int i = 0; i < kMaxLines; ++i)
      if ((controls_ >> i) & 1u) out.push_back(i);
    return out;
  }

  friend bool operator==(const ToffoliGate&, const ToffoliGate&) = default;

 private:
  static std::uint64_t mask_of(std::initializer_list<int> controls) {
    std::uint64_t m = 0;
    for (int c : controls) {
      if (c < 0 || c >= kMaxLines)
        throw MalformedGateError("gate control out of range");
      m |= std::uint64_t{1} << c;
    }
    return m;
  }

  std::uint64_t controls_;
  int target_;
};

BitPattern apply_gate(const ToffoliGate& g, const BitPattern& p);

// Ordered cascade of Toffoli gates over a fixed number of lines, with
// optional per-line metadata: names, constant-input values (ancillary
// inputs) and garbage-output flags. Immutable once built apart from
// append/set_* used during construction.
class Circuit {
 public:
  explicit Circuit(int lines);
  Circuit(int lines, std::vector<ToffoliGate> gates);

  int lines() const noexcept { return lines_; }
  std::size_t gate_count() const noexcept { return gates_.size(); }
  const std::vector<ToffoliGate>& gates() const noexcept { return gates_; }
  const ToffoliGate& gate(std::size_t i) const { return gates_.at(i); }

  void append(const ToffoliGate& g);

  const std::vector<std::string>& line_names() const { return line_names_; }
  void set_line_names(std::vector<std::string> names);

  // constants[i] engaged means line i is an ancillary input with that value.
  const std::vector<std::optional<bool>>& constants() const {
    return constants_;
  }
  void set_constants(std::vector<std::optional<bool>> constants);

  const std::vector<bool>& garbage() const { return garbage_; }
  void set_garbage(std::vector<bool> garbage);

  int constant_count() const;
  int garbage_count() const;

  std::string version;

 private:
  int lines_;
  std::vector<ToffoliGate> gates_;
  std::vector<std::string> line_names_;
  std::vector<std::optional<bool>> constants_;
  std::vector<bool> garbage_;
};

// Line cap for exhaustive (2^n) operations. Default 24; overridden by the
// REVGUARD_EXHAUSTIVE_LIMIT environment variable or set_exhaustive_limit.
int exhaustive_limit();
void set_exhaustive_limit(int limit);

// Applies gates[from..to) in order. simulate(c, p, 0, m) is the full
// circuit function.
BitPattern simulate(const Circuit& c, BitPattern p, std::size_t from,
                    std::size_t to);
BitPattern simulate(const Circuit& c, BitPattern p);

// Applies gates[from..to) in reverse order; inverse of simulate over the
// same range since every Toffoli gate is self-inverse.
BitPattern simulate_inverse(const Circuit& c, BitPattern p, std::size_t from,
                            std::size_t to);
BitPattern simulate_inverse(const Circuit& c, BitPattern p);

// A bijection on {0..2^n-1}; the full function of an n-line circuit.
class Permutation {
 public:
  Permutation(int width, std::vector<std::uint64_t> map);
  static Permutation identity(int width);

  int width() const noexcept { return width_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << width_; }
  std::uint64_t operator[](std::uint64_t x) const { return map_[x]; }
  const std::vector<std::uint64_t>& map() const noexcept { return map_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  int width_;
  std::vector<std::uint64_t> map_;
};

// Exhaustive extraction of the circuit's function.
Permutation permutation(const Circuit& c);

// True iff both circuits realize the same permutation.
bool equivalent(const Circuit& a, const Circuit& b);

}  // namespace revguard

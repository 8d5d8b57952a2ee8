#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revguard/circuit.hpp"
#include "revguard/scrambling.hpp"

namespace revguard {

// Non-reversible p-input/q-output specification. rows[x] is the output
// pattern for input pattern x. Text format: one "bits -> bits" line per
// row; '#' starts a comment; leftmost character is bit 0.
struct TruthTable {
  int inputs = 0;   // p
  int outputs = 0;  // q
  std::vector<std::uint64_t> rows;

  static TruthTable parse(const std::string& text);
  std::string str() const;
  bool injective() const;
};

// Minimum number of garbage outputs: ceil(log2 mu) where mu is the largest
// multiplicity of any output pattern.
int min_garbage(const TruthTable& tt);

struct EmbedOptions {
  // Ancilla value per primary pattern (size 2^p); empty means all zero.
  std::vector<std::uint64_t> ancilla_values;
  // Extra lines beyond the minimal embedding (one more ancillary input and
  // one more garbage output each).
  int extra_lines = 0;
};

// Reversible embedding of a truth table. Ancillary inputs occupy the
// least-significant input bit positions, garbage outputs the
// least-significant output bit positions, so the functional row for
// primary pattern x is (x << a) | ancilla_values[x].
struct EmbeddingResult {
  TruthTable source;
  int width = 0;      // n = p + a = q + g
  int ancillary = 0;  // a
  int garbage = 0;    // g
  Permutation spec;
  std::vector<std::uint64_t> functional_rows;  // size 2^p, index x
  std::vector<std::uint64_t> ancilla_values;   // size 2^p, index x
};

EmbeddingResult embed(const TruthTable& tt);
EmbeddingResult embed(const TruthTable& tt, const EmbedOptions& options);

// Output of spec on the functional row of x, with garbage bits dropped.
std::uint64_t project(const EmbeddingResult& e, std::uint64_t x);

// The 2^p input rows reachable in functional mode under an assignment.
std::vector<std::uint64_t> functional_reachable(
    const EmbeddingResult& e, const ScramblingAssignment& assignment);

}  // namespace revguard

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "revguard/embedding.hpp"
#include "revguard/scrambling.hpp"

namespace revguard {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Functional-mode ancilla assignment for a scrambling level.
//   Baseline: all ancillae 0.
//   Lv1:      first ceil(c/2) ancillae 0, the rest 1 (needs c >= 2).
//   Lv2:      seeded uniform ancilla value per primary pattern.
//   Lv3:      one extra ancillary line, then per-pattern values over c+1 bits.
ScramblingAssignment scramble(const EmbeddingResult& e, ScramblingLevel level,
                              std::uint64_t seed = 0);

// Number of assignment guesses an attacker must cover for the level's
// family: 2 for baseline (all-0/all-1), 2^c for constant vectors, 2^(p+c)
// for per-pattern assignments.
BigInt guess_space(const EmbeddingResult& e, ScramblingLevel level);

// Rebuilds the embedding with the assignment baked into the functional
// rows (and the extra line for Lv3).
EmbeddingResult scrambled_embedding(const EmbeddingResult& e,
                                    const ScramblingAssignment& assignment);

BigInt binomial(const BigInt& n, const BigInt& k);

// Probability that none of the t triggering patterns lands on a reachable
// row: C(2^(p+c)-2^p, t) / C(2^(p+c), t). For t = 1 this is 1 - 2^-c.
Rational disabled_probability(int p, int c, std::uint64_t t);

// Hypergeometric distribution of how many of the t triggering patterns
// are reachable in functional mode.
struct TriggerDistribution {
  int p = 0;
  int c = 0;
  std::uint64_t t = 0;
  std::vector<Rational> probs;  // index i = 0..t
};

TriggerDistribution trigger_count_distribution(int p, int c, std::uint64_t t);

struct SurfaceCell {
  int p;
  int c;
  std::uint64_t t;
  double prob;
};

// grid over p_range x c_range (inclusive) of disabled probabilities.
std::vector<SurfaceCell> never_triggered_surface(std::uint64_t t,
                                                 int p_min = 3, int p_max = 20,
                                                 int c_min = 1, int c_max = 20);

struct BenchmarkEntry {
  std::string name;
  int total_inputs = 0;
  int constants = 0;
};

struct Table2Row {
  std::string name;
  int total_inputs = 0;
  int constants = 0;
  double baseline_lv2 = 0;  // percent
  double lv3 = 0;           // percent
};

// Per-benchmark disable probabilities for single-trigger Trojans
// (baseline-Lv2 column 100*(1-2^-c), Lv3 column 100*(1-2^-(c+1))), with an
// "Average" row appended.
std::vector<Table2Row> table2_report(const std::vector<BenchmarkEntry>& bench);

// "name,total_inputs,constants" CSV ('#' comments allowed).
std::vector<BenchmarkEntry> parse_benchmark_list(const std::string& text);

}  // namespace revguard

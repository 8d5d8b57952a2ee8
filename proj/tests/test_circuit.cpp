#include <doctest.h>

#include "helpers.hpp"
#include "revguard/circuit.hpp"
#include "revguard/embedding.hpp"
#include "revguard/synthesis.hpp"

using namespace revguard;
using revguard::testing::random_circuit;

TEST_CASE("apply_gate follows the Toffoli equations") {
  CHECK(apply_gate(ToffoliGate({0, 1}, 2), BitPattern::parse("110")) ==
        BitPattern::parse("111"));
  CHECK(apply_gate(ToffoliGate({0}, 1), BitPattern::parse("10")) ==
        BitPattern::parse("11"));
  // control bit 0 absent, gate passive
  CHECK(apply_gate(ToffoliGate({0, 1}, 2), BitPattern::parse("011")) ==
        BitPattern::parse("011"));
  // empty control set is an unconditional NOT
  CHECK(apply_gate(ToffoliGate(std::uint64_t{0}, 0),
                   BitPattern::parse("00")) == BitPattern::parse("10"));
}

TEST_CASE("apply_gate rejects out-of-range gates") {
  CHECK_THROWS_AS(apply_gate(ToffoliGate({3}, 1), BitPattern::parse("01")),
                  MalformedGateError);
  CHECK_THROWS_AS(ToffoliGate({1}, 1), MalformedGateError);
}

TEST_CASE("simulate folds gates over a range") {
  Circuit c(1, {ToffoliGate(std::uint64_t{0}, 0),
                ToffoliGate(std::uint64_t{0}, 0)});
  BitPattern zero(1, 0);
  CHECK(simulate(c, zero, 1, 1) == zero);  // empty range
  CHECK(simulate(c, zero) == zero);        // NOT twice is the identity
  CHECK(simulate(c, zero, 0, 1) == BitPattern(1, 1));
  CHECK_THROWS_AS(simulate(c, BitPattern(2, 0)), DimensionError);
  CHECK_THROWS_AS(simulate(c, zero, 0, 3), DimensionError);
}

TEST_CASE("half-adder embedding circuit reproduces the functional rows") {
  TruthTable half_adder = TruthTable::parse(
      "00 -> 00\n"
      "10 -> 10\n"  // x=1,y=0 -> sum 1 (line order: x then y, carry then sum)
      "01 -> 10\n"
      "11 -> 01\n");
  EmbeddingResult e = embed(half_adder);
  Circuit c = synthesize(e.spec);
  // x=1, y=1, ancilla 0: carry out 1, sum 0, distinct garbage bit
  const std::uint64_t in_row = e.functional_rows[3];
  const std::uint64_t out = simulate(c, BitPattern(e.width, in_row)).value();
  CHECK((out >> e.garbage) == half_adder.rows[3]);
}

TEST_CASE("simulate_inverse undoes simulate over any range") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // up to 10 lines
    const std::size_t m = rng() % 51;
    Circuit c = random_circuit(n, m, rng);
    BitPattern p(n, rng() & BitPattern::mask(n));
    const std::size_t from = m == 0 ? 0 : rng() % (m + 1);
    const std::size_t to = from + (m - from == 0 ? 0 : rng() % (m - from + 1));
    CHECK(simulate_inverse(c, simulate(c, p, from, to), from, to) == p);
    CHECK(simulate(c, simulate_inverse(c, p, from, to), from, to) == p);
  }
}

TEST_CASE("single-gate inverse is the gate itself") {
  Circuit c(2, {ToffoliGate({0}, 1)});
  CHECK(simulate_inverse(c, BitPattern::parse("11")) ==
        BitPattern::parse("10"));
}

TEST_CASE("prefix inverse then forward returns the all-ones pattern") {
  Circuit c = random_circuit(4, 8, 99);
  BitPattern ones = BitPattern::all_ones(4);
  BitPattern pre = simulate_inverse(c, ones, 0, 2);
  CHECK(simulate(c, pre, 0, 2) == ones);
}

TEST_CASE("gate application changes at most the target bit") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    ToffoliGate g = testing::random_gate(n, rng);
    BitPattern p(n, rng() & BitPattern::mask(n));
    BitPattern q = apply_gate(g, p);
    const std::uint64_t diff = p.value() ^ q.value();
    CHECK((diff & ~(std::uint64_t{1} << g.target())) == 0);
  }
}

TEST_CASE("permutation extraction") {
  Circuit empty2(2);
  CHECK(permutation(empty2) == Permutation::identity(2));

  Circuit not1(1, {ToffoliGate(std::uint64_t{0}, 0)});
  CHECK(permutation(not1).map() == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("permutation is a bijection for random circuits") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    Circuit c = random_circuit(n, 10, rng);
    // Permutation's constructor pigeonhole-checks bijectivity
    CHECK_NOTHROW(permutation(c));
  }
}

TEST_CASE("permutation refuses widths above the exhaustive limit") {
  const int saved = exhaustive_limit();
  set_exhaustive_limit(4);
  Circuit c(5);
  CHECK_THROWS_AS(permutation(c), CapacityError);
  set_exhaustive_limit(saved);
}

TEST_CASE("simulation composes across a split point") {
  std::mt19937_64 rng(13);
  Circuit c = random_circuit(5, 12, rng);
  for (std::size_t j = 0; j <= c.gate_count(); ++j) {
    BitPattern p(5, rng() & BitPattern::mask(5));
    CHECK(simulate(c, p) == simulate(c, simulate(c, p, 0, j), j,
                                     c.gate_count()));
  }
}

TEST_CASE("equivalent compares full permutations") {
  Circuit c = random_circuit(3, 6, 11);
  CHECK(equivalent(c, c));

  Circuit longer(3, c.gates());
  longer.append(ToffoliGate(std::uint64_t{0}, 0));
  CHECK_FALSE(equivalent(c, longer));

  Circuit padded(3, c.gates());
  padded.append(ToffoliGate({0, 1}, 2));
  padded.append(ToffoliGate({0, 1}, 2));
  CHECK(equivalent(c, padded));

  CHECK_THROWS_AS(equivalent(c, Circuit(4)), DimensionError);
}

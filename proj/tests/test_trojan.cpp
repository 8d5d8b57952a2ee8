#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "revguard/trojan.hpp"

using namespace revguard;
using revguard::testing::random_circuit;

namespace {

// 5-line symmetric payload: two outer gates flip lines 0 and 1
// under controls {2,3}; the middle gate fires only when lines 0..3 are 1.
TrojanSpec evasive_symmetric() {
  return make_symmetric(
      5, {ToffoliGate({2, 3}, 0), ToffoliGate({2, 3}, 1)},
      ToffoliGate({0, 1, 2, 3}, 4));
}

}  // namespace

TEST_CASE("insert places the payload at the slot") {
  Circuit host = random_circuit(4, 6, 1);
  TrojanSpec t{4, {ToffoliGate({0}, 1)}, 0};

  Circuit front = insert(host, t);
  CHECK(front.gate_count() == 7);
  CHECK(front.gate(0) == t.gates[0]);

  t.position = host.gate_count();
  Circuit back = insert(host, t);
  CHECK(back.gate(6) == t.gates[0]);

  t.position = 3;
  CHECK(insert(host, t).gate_count() == host.gate_count() + t.gates.size());

  t.position = 99;
  CHECK_THROWS_AS(insert(host, t), InsertionError);
  t.position = 0;
  t.width = 5;
  CHECK_THROWS_AS(insert(host, t), InsertionError);
}

TEST_CASE("single k-wide gate has 2^(n-k+1) triggering patterns") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::uint64_t controls = 0;
      for (int i = 0; i < k - 1; ++i) controls |= std::uint64_t{1} << i;
      TrojanSpec t{n, {ToffoliGate(controls, k - 1)}, 0};
      const auto trig = triggering_patterns(t);
      CHECK(trig.size() == (std::uint64_t{1} << (n - k + 1)));
      CHECK(trig.size() >= 2);
    }
  }
}

TEST_CASE("dummy pair has an empty triggering set") {
  ToffoliGate g({0, 1}, 2);
  TrojanSpec t{3, {g, g}, 0};
  CHECK(triggering_patterns(t).empty());
}

TEST_CASE("symmetric payload matches a brute-force trigger enumeration") {
  TrojanSpec t = evasive_symmetric();
  std::set<std::uint64_t> expected;
  for (std::uint64_t x = 0; x < 32; ++x) {
    BitPattern p(5, x);
    for (const auto& g : t.gates) p = apply_gate(g, p);
    if (p.value() != x) expected.insert(x);
  }
  std::set<std::uint64_t> got;
  for (const auto& p : triggering_patterns(t)) got.insert(p.value());
  CHECK(got == expected);
  CHECK_FALSE(got.empty());
}

TEST_CASE("difficulty metric") {
  TrojanSpec cnot{2, {ToffoliGate({0}, 1)}, 0};
  CHECK(difficulty(cnot) == Rational(1, 2));

  TrojanSpec tof3{3, {ToffoliGate({0, 1}, 2)}, 0};
  CHECK(difficulty(tof3) == Rational(3, 4));

  ToffoliGate g({0}, 1);
  TrojanSpec dummy{2, {g, g}, 0};
  CHECK(difficulty(dummy) == Rational(1, 1));
}

TEST_CASE("difficulty is 1 exactly for functionally null payloads") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    TrojanSpec t{n, {}, 0};
    const std::size_t len = 1 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i)
      t.gates.push_back(testing::random_gate(n, rng));
    const bool null = classify(t).functionally_null;
    CHECK((difficulty(t) == Rational(1)) == null);
    CHECK(triggering_patterns(t).empty() == null);
  }
}

TEST_CASE("classification taxonomy") {
  ToffoliGate a({0, 1}, 2), b({0}, 2), c({1}, 3), d({2}, 0);

  CHECK(classify({4, {a}, 0}).tag == TrojanTag::Single);

  TrojanClass dummy = classify({4, {a, a}, 0});
  CHECK(dummy.tag == TrojanTag::TwoDummy);
  CHECK(dummy.functionally_null);

  CHECK(classify({4, {a, b}, 0}).tag == TrojanTag::TwoSharedTarget);
  CHECK(classify({4, {a, c}, 0}).tag == TrojanTag::TwoDistinctTargets);

  CHECK(classify({4, {a, b, a}, 0}).tag == TrojanTag::Three1);
  CHECK(classify({4, {a, b, c}, 0}).tag == TrojanTag::Three2);
  CHECK(classify({4, {c, a, b}, 0}).tag == TrojanTag::Three3);
  CHECK(classify({4, {a, c, b}, 0}).tag == TrojanTag::Three4);
  CHECK(classify({4, {a, c, d}, 0}).tag == TrojanTag::Three5);

  CHECK(classify({5, evasive_symmetric().gates, 0}).tag ==
        TrojanTag::SymmetricTTinv);
  // four arbitrary gates do not fit the t·T·t^-1 shape
  CHECK(classify({4, {a, b, c, d}, 0}).tag == TrojanTag::General);
}

TEST_CASE("make_symmetric") {
  TrojanSpec t = evasive_symmetric();
  CHECK(t.gates.size() == 5);
  CHECK(classify(t).tag == TrojanTag::SymmetricTTinv);
  CHECK_FALSE(classify(t).functionally_null);

  // triggering set avoids the all-ones and every one-cold pattern
  std::set<std::uint64_t> trig;
  for (const auto& p : triggering_patterns(t)) trig.insert(p.value());
  CHECK_FALSE(trig.empty());
  CHECK_FALSE(trig.count(BitPattern::all_ones(5).value()));
  for (int line = 0; line < 5; ++line)
    CHECK_FALSE(trig.count(BitPattern::one_cold(5, line).value()));

  // removing the middle gate leaves a functionally null payload
  TrojanSpec outer{5,
                   {t.gates[0], t.gates[1], t.gates[3], t.gates[4]},
                   0};
  CHECK(classify(outer).functionally_null);
}

TEST_CASE("make_symmetric names the violated precondition") {
  ToffoliGate g1({2, 3}, 0), g2({2, 3}, 1), middle({0, 1, 2, 3}, 4);
  CHECK_THROWS_WITH_AS(make_symmetric(5, {g1}, middle),
                       doctest::Contains("at least two gates"),
                       ConstructionError);
  CHECK_THROWS_WITH_AS(
      make_symmetric(5, {g1, ToffoliGate({3, 4}, 1)}, middle),
      doctest::Contains("share one control set"), ConstructionError);
  CHECK_THROWS_WITH_AS(make_symmetric(5, {g1, g2}, ToffoliGate({0, 2, 3}, 4)),
                       doctest::Contains("control of the middle"),
                       ConstructionError);
}

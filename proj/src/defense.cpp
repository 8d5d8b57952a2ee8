#include "revguard/defense.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace revguard {

std::string to_string(ScramblingLevel level) {
  switch (level) {
    case ScramblingLevel::Baseline: return "baseline";
    case ScramblingLevel::Lv1: return "lv1";
    case ScramblingLevel::Lv2: return "lv2";
    case ScramblingLevel::Lv3: return "lv3";
  }
  return "?";
}

ScramblingLevel parse_level(const std::string& s) {
  if (s == "baseline" || s == "lv0") return ScramblingLevel::Baseline;
  if (s == "lv1") return ScramblingLevel::Lv1;
  if (s == "lv2") return ScramblingLevel::Lv2;
  if (s == "lv3") return ScramblingLevel::Lv3;
  throw DomainError("unknown scrambling level: " + s);
}

ScramblingAssignment scramble(const EmbeddingResult& e, ScramblingLevel level,
                              std::uint64_t seed) {
  const int p = e.source.inputs;
  const int c = e.ancillary;
  const std::uint64_t num_primary = std::uint64_t{1} << p;

  ScramblingAssignment asg;
  asg.level = level;
  asg.primary_inputs = p;
  asg.c_effective = c;

  switch (level) {
    case ScramblingLevel::Baseline:
      asg.constant = 0;
      break;
    case ScramblingLevel::Lv1: {
      if (c < 2)
        throw UnsupportedLevelError(
            "Lv1 needs at least 2 ancillary inputs, embedding has " +
            std::to_string(c));
      const int zeros = (c + 1) / 2;  // first ceil(c/2) ancillae stay 0
      asg.constant = BitPattern::mask(c) & ~BitPattern::mask(zeros);
      break;
    }
    case ScramblingLevel::Lv2:
    case ScramblingLevel::Lv3: {
      if (level == ScramblingLevel::Lv3) asg.c_effective = c + 1;
      asg.seed = seed;
      std::mt19937_64 rng(seed);
      const std::uint64_t mask = BitPattern::mask(asg.c_effective);
      asg.per_pattern.reserve(num_primary);
      for (std::uint64_t x = 0; x < num_primary; ++x)
        asg.per_pattern.push_back(rng() & mask);
      break;
    }
  }
  return asg;
}

BigInt guess_space(const EmbeddingResult& e, ScramblingLevel level) {
  const int p = e.source.inputs;
  const int c = e.ancillary;
  switch (level) {
    case ScramblingLevel::Baseline:
      return 2;  // all-0 or all-1
    case ScramblingLevel::Lv1:
      return BigInt(1) << c;
    case ScramblingLevel::Lv2:
      return BigInt(1) << (p + c);
    case ScramblingLevel::Lv3:
      return BigInt(1) << (p + c + 1);
  }
  return 0;
}

EmbeddingResult scrambled_embedding(const EmbeddingResult& e,
                                    const ScramblingAssignment& assignment) {
  const std::uint64_t num_primary = std::uint64_t{1} << e.source.inputs;
  EmbedOptions opts;
  opts.extra_lines = assignment.c_effective - e.ancillary;
  if (opts.extra_lines < 0)
    throw DimensionError("assignment has fewer ancillae than the embedding");
  opts.ancilla_values.reserve(num_primary);
  for (std::uint64_t x = 0; x < num_primary; ++x)
    opts.ancilla_values.push_back(assignment.value_for(x));
  return embed(e.source, opts);
}

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || k > n) return 0;
  BigInt kk = k;
  if (n - k < kk) kk = n - k;
  BigInt result = 1;
  for (BigInt i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

namespace {

void check_prob_args(int p, int c, std::uint64_t t) {
  if (p < 0 || c < 0 || p + c > 64)
    throw DomainError("need p, c >= 0 and p + c <= 64");
  const BigInt total = BigInt(1) << (p + c);
  if (BigInt(t) > total)
    throw DomainError("t exceeds the 2^(p+c) available rows");
}

}  // namespace

Rational disabled_probability(int p, int c, std::uint64_t t) {
  check_prob_args(p, c, t);
  const BigInt total = BigInt(1) << (p + c);
  const BigInt reachable = BigInt(1) << p;
  return Rational(binomial(total - reachable, t), binomial(total, t));
}

TriggerDistribution trigger_count_distribution(int p, int c, std::uint64_t t) {
  check_prob_args(p, c, t);
  if (t > (std::uint64_t{1} << 22))
    throw DomainError("t too large to enumerate the distribution");
  const BigInt total = BigInt(1) << (p + c);
  const BigInt reachable = BigInt(1) << p;
  const BigInt denom = binomial(total, t);
  TriggerDistribution d{p, c, t, {}};
  d.probs.reserve(t + 1);
  for (std::uint64_t i = 0; i <= t; ++i)
    d.probs.emplace_back(
        binomial(reachable, i) * binomial(total - reachable, t - i), denom);
  return d;
}

std::vector<SurfaceCell> never_triggered_surface(std::uint64_t t, int p_min,
                                                 int p_max, int c_min,
                                                 int c_max) {
  std::vector<SurfaceCell> grid;
  for (int p = p_min; p <= p_max; ++p)
    for (int c = c_min; c <= c_max; ++c)
      grid.push_back(
          {p, c, t,
           disabled_probability(p, c, t).convert_to<double>()});
  return grid;
}

std::vector<Table2Row> table2_report(
    const std::vector<BenchmarkEntry>& bench) {
  std::vector<Table2Row> rows;
  double sum_base = 0, sum_lv3 = 0;
  for (const auto& b : bench) {
    if (b.constants < 1 || b.constants > 62)
      throw DomainError("benchmark " + b.name +
                        ": constants must be in 1..62");
    const double base = 100.0 * (1.0 - std::ldexp(1.0, -b.constants));
    const double lv3 = 100.0 * (1.0 - std::ldexp(1.0, -(b.constants + 1)));
    rows.push_back({b.name, b.total_inputs, b.constants, base, lv3});
    sum_base += base;
    sum_lv3 += lv3;
  }
  if (!bench.empty()) {
    const double k = static_cast<double>(bench.size());
    rows.push_back({"Average", 0, 0, sum_base / k, sum_lv3 / k});
  }
  return rows;
}

std::vector<BenchmarkEntry> parse_benchmark_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::vector<BenchmarkEntry> out;
  while (std::getline(in, raw)) {
    ++lineno;
    auto pos = raw.find('#');
    if (pos != std::string::npos) raw = raw.substr(0, pos);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream iss(raw);
    BenchmarkEntry e;
    std::string tok;
    if (!std::getline(iss, e.name, ',')) throw ParseError(lineno, "missing name");
    // strip whitespace around the name
    auto b = e.name.find_first_not_of(" \t");
    auto en = e.name.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw ParseError(lineno, "empty name");
    e.name = e.name.substr(b, en - b + 1);
    if (e.name == "name") continue;  // header row
    if (!std::getline(iss, tok, ','))
      throw ParseError(lineno, "missing total_inputs");
    e.total_inputs = std::stoi(tok);
    if (!std::getline(iss, tok, ','))
      throw ParseError(lineno, "missing constants");
    e.constants = std::stoi(tok);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace revguard

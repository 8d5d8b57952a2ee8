#include "revguard/circuit.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace revguard {

BitPattern apply_gate(const ToffoliGate& g, const BitPattern& p) {
  if (g.max_line() >= p.width())
    throw MalformedGateError("gate line index " +
                             std::to_string(g.max_line()) +
                             " out of range for width " +
                             std::to_string(p.width()));
  std::uint64_t bits = p.value();
  if ((bits & g.control_mask()) == g.control_mask())
    bits ^= std::uint64_t{1} << g.target();
  return BitPattern(p.width(), bits);
}

Circuit::Circuit(int lines) : lines_(lines) {
  if (lines < 1 || lines > kMaxLines)
    throw DimensionError("circuit must have 1..63 lines, got " +
                         std::to_string(lines));
}

Circuit::Circuit(int lines, std::vector<ToffoliGate> gates) : Circuit(lines) {
  for (const auto& g : gates)
    if (g.max_line() >= lines_)
      throw MalformedGateError("gate references line beyond circuit width");
  gates_ = std::move(gates);
}

void Circuit::append(const ToffoliGate& g) {
  if (g.max_line() >= lines_)
    throw MalformedGateError("gate references line beyond circuit width");
  gates_.push_back(g);
}

void Circuit::set_line_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != static_cast<std::size_t>(lines_))
    throw DimensionError("line name count must equal line count");
  line_names_ = std::move(names);
}

void Circuit::set_constants(std::vector<std::optional<bool>> constants) {
  if (!constants.empty() &&
      constants.size() != static_cast<std::size_t>(lines_))
    throw DimensionError("constants vector length must equal line count");
  constants_ = std::move(constants);
}

void Circuit::set_garbage(std::vector<bool> garbage) {
  if (!garbage.empty() && garbage.size() != static_cast<std::size_t>(lines_))
    throw DimensionError("garbage vector length must equal line count");
  garbage_ = std::move(garbage);
}

int Circuit::constant_count() const {
  return static_cast<int>(std::count_if(constants_.begin(), constants_.end(),
                                        [](auto& c) { return c.has_value(); }));
}

int Circuit::garbage_count() const {
  return static_cast<int>(std::count(garbage_.begin(), garbage_.end(), true));
}

namespace {

std::atomic<int> g_limit{-1};

int initial_limit() {
  if (const char* env = std::getenv("REVGUARD_EXHAUSTIVE_LIMIT")) {
    int v = std::atoi(env);
    if (v >= 1 && v <= kMaxLines) return v;
  }
  return 24;
}

void check_range(const Circuit& c, const BitPattern& p, std::size_t from,
                 std::size_t to) {
  if (p.width() != c.lines())
    throw DimensionError("pattern width " + std::to_string(p.width()) +
                         " does not match circuit with " +
                         std::to_string(c.lines()) + " lines");
  if (from > to || to > c.gate_count())
    throw DimensionError("gate range [" + std::to_string(from) + ", " +
                         std::to_string(to) + ") invalid for " +
                         std::to_string(c.gate_count()) + " gates");
}

}  // namespace

int exhaustive_limit() {
  int v = g_limit.load(std::memory_order_relaxed);
  if (v < 0) {
    v = initial_limit();
    g_limit.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_exhaustive_limit(int limit) {
  if (limit < 1 || limit > kMaxLines)
    throw DomainError("exhaustive limit must be in 1..63");
  g_limit.store(limit, std::memory_order_relaxed);
}

BitPattern simulate(const Circuit& c, BitPattern p, std::size_t from,
                    std::size_t to) {
  check_range(c, p, from, to);
  for (std::size_t i = from; i < to; ++i) p = apply_gate(c.gate(i), p);
  return p;
}

BitPattern simulate(const Circuit& c, BitPattern p) {
  return simulate(c, p, 0, c.gate_count());
}

BitPattern simulate_inverse(const Circuit& c, BitPattern p, std::size_t from,
                            std::size_t to) {
  check_range(c, p, from, to);
  for (std::size_t i = to; i > from; --i) p = apply_gate(c.gate(i - 1), p);
  return p;
}

BitPattern simulate_inverse(const Circuit& c, BitPattern p) {
  return simulate_inverse(c, p, 0, c.gate_count());
}

Permutation::Permutation(int width, std::vector<std::uint64_t> map)
    : width_(width), map_(std::move(map)) {
  if (width < 1 || width > kMaxLines)
    throw DimensionError("permutation width must be in 1..63");
  const std::uint64_t n = std::uint64_t{1} << width_;
  if (map_.size() != n)
    throw DimensionError("permutation map must have 2^width entries");
  std::vector<bool> seen(n, false);
  for (std::uint64_t v : map_) {
    if (v >= n || seen[v])
      throw DimensionError("permutation map is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int width) {
  if (width < 1 || width > kMaxLines)
    throw DimensionError("permutation width must be in 1..63");
  std::vector<std::uint64_t> map(std::uint64_t{1} << width);
  for (std::uint64_t x = 0; x < map.size(); ++x) map[x] = x;
  return Permutation(width, std::move(map));
}

Permutation permutation(const Circuit& c) {
  if (c.lines() > exhaustive_limit())
    throw CapacityError("circuit has " + std::to_string(c.lines()) +
                        " lines, above the exhaustive limit " +
                        std::to_string(exhaustive_limit()));
  const std::uint64_t n = std::uint64_t{1} << c.lines();
  std::vector<std::uint64_t> map(n);
  for (std::uint64_t x = 0; x < n; ++x)
    map[x] = simulate(c, BitPattern(c.lines(), x)).value();
  return Permutation(c.lines(), std::move(map));
}

bool equivalent(const Circuit& a, const Circuit& b) {
  if (a.lines() != b.lines())
    throw DimensionError("cannot compare circuits of different widths");
  return permutation(a) == permutation(b);
}

}  // namespace revguard

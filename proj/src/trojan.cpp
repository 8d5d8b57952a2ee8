#include "revguard/trojan.hpp"

#include <algorithm>

namespace revguard {

std::string to_string(TrojanTag tag) {
  switch (tag) {
    case TrojanTag::Single: return "single";
    case TrojanTag::TwoDistinctTargets: return "two-distinct-targets";
    case TrojanTag::TwoSharedTarget: return "two-shared-target";
    case TrojanTag::TwoDummy: return "two-dummy";
    case TrojanTag::Three1: return "three-1";
    case TrojanTag::Three2: return "three-2";
    case TrojanTag::Three3: return "three-3";
    case TrojanTag::Three4: return "three-4";
    case TrojanTag::Three5: return "three-5";
    case TrojanTag::SymmetricTTinv: return "symmetric-tTt-inv";
    case TrojanTag::General: return "general";
  }
  return "?";
}

namespace {

void validate(const TrojanSpec& t) {
  if (t.width < 1 || t.width > kMaxLines)
    throw DimensionError("trojan width must be in 1..63");
  if (t.gates.empty()) throw InsertionError("trojan payload must be non-empty");
  for (const auto& g : t.gates)
    if (g.max_line() >= t.width)
      throw MalformedGateError("trojan gate references line beyond width");
}

}  // namespace

Circuit insert(const Circuit& host, const TrojanSpec& t) {
  validate(t);
  if (t.width != host.lines())
    throw InsertionError("trojan width " + std::to_string(t.width) +
                         " does not match host with " +
                         std::to_string(host.lines()) + " lines");
  if (t.position > host.gate_count())
    throw InsertionError("insertion slot " + std::to_string(t.position) +
                         " beyond last slot " +
                         std::to_string(host.gate_count()));
  std::vector<ToffoliGate> gates;
  gates.reserve(host.gate_count() + t.gates.size());
  gates.insert(gates.end(), host.gates().begin(),
               host.gates().begin() + static_cast<std::ptrdiff_t>(t.position));
  gates.insert(gates.end(), t.gates.begin(), t.gates.end());
  gates.insert(gates.end(),
               host.gates().begin() + static_cast<std::ptrdiff_t>(t.position),
               host.gates().end());
  Circuit infected(host.lines(), std::move(gates));
  infected.version = host.version;
  infected.set_line_names(host.line_names());
  infected.set_constants(host.constants());
  infected.set_garbage(host.garbage());
  return infected;
}

BitPattern trojan_apply(const TrojanSpec& t, BitPattern p) {
  for (const auto& g : t.gates) p = apply_gate(g, p);
  return p;
}

std::vector<BitPattern> triggering_patterns(const TrojanSpec& t) {
  validate(t);
  if (t.width > exhaustive_limit())
    throw CapacityError("trigger enumeration above the exhaustive limit");
  std::vector<BitPattern> out;
  const std::uint64_t size = std::uint64_t{1} << t.width;
  for (std::uint64_t x = 0; x < size; ++x) {
    BitPattern p(t.width, x);
    if (trojan_apply(t, p) != p) out.push_back(p);
  }
  return out;
}

Rational difficulty(const TrojanSpec& t) {
  const std::uint64_t size = std::uint64_t{1} << t.width;
  const std::uint64_t triggering = triggering_patterns(t).size();
  return Rational(BigInt(size - triggering), BigInt(size));
}

namespace {

bool composite_is_identity(const TrojanSpec& t) {
  if (t.width <= exhaustive_limit()) {
    const std::uint64_t size = std::uint64_t{1} << t.width;
    for (std::uint64_t x = 0; x < size; ++x) {
      BitPattern p(t.width, x);
      if (trojan_apply(t, p) != p) return false;
    }
    return true;
  }
  // above the exhaustive limit fall back to adjacent-cancellation; sound
  // but incomplete
  std::vector<ToffoliGate> stack;
  for (const auto& g : t.gates) {
    if (!stack.empty() && stack.back() == g)
      stack.pop_back();
    else
      stack.push_back(g);
  }
  return stack.empty();
}

bool symmetric_shape(const std::vector<ToffoliGate>& gates) {
  const std::size_t len = gates.size();
  if (len < 5 || len % 2 == 0) return false;
  const std::size_t half = len / 2;  // |t| >= 2
  for (std::size_t i = 0; i < half; ++i)
    if (!(gates[i] == gates[len - 1 - i])) return false;
  const ToffoliGate& middle = gates[half];
  for (std::size_t i = 0; i < half; ++i) {
    const std::uint64_t target_bit = std::uint64_t{1} << gates[i].target();
    if ((middle.control_mask() & target_bit) == 0) return false;
  }
  return true;
}

}  // namespace

TrojanClass classify(const TrojanSpec& t) {
  validate(t);
  TrojanClass cls;
  cls.functionally_null = composite_is_identity(t);

  const auto& g = t.gates;
  switch (g.size()) {
    case 1:
      cls.tag = TrojanTag::Single;
      break;
    case 2:
      if (g[0] == g[1])
        cls.tag = TrojanTag::TwoDummy;
      else if (g[0].target() == g[1].target())
        cls.tag = TrojanTag::TwoSharedTarget;
      else
        cls.tag = TrojanTag::TwoDistinctTargets;
      break;
    case 3: {
      const int t0 = g[0].target(), t1 = g[1].target(), t2 = g[2].target();
      if (t0 == t1 && t1 == t2)
        cls.tag = TrojanTag::Three1;
      else if (t0 == t1)
        cls.tag = TrojanTag::Three2;
      else if (t1 == t2)
        cls.tag = TrojanTag::Three3;
      else if (t0 == t2)
        cls.tag = TrojanTag::Three4;
      else
        cls.tag = TrojanTag::Three5;
      break;
    }
    default:
      cls.tag = symmetric_shape(g) ? TrojanTag::SymmetricTTinv
                                   : TrojanTag::General;
      break;
  }
  return cls;
}

TrojanSpec make_symmetric(int width, const std::vector<ToffoliGate>& t_part,
                          const ToffoliGate& middle, std::size_t position) {
  if (t_part.size() < 2)
    throw ConstructionError("symmetric part must have at least two gates");
  const std::uint64_t common_controls = t_part.front().control_mask();
  std::uint64_t targets = 0;
  for (const auto& g : t_part) {
    if (g.control_mask() != common_controls)
      throw ConstructionError(
          "symmetric part gates must share one control set");
    targets |= std::uint64_t{1} << g.target();
  }
  if (targets & common_controls)
    throw ConstructionError(
        "symmetric part control set must be disjoint from its targets");
  if ((targets & middle.control_mask()) != targets)
    throw ConstructionError(
        "every symmetric-part target must be a control of the middle gate");

  TrojanSpec spec;
  spec.width = width;
  spec.position = position;
  spec.gates = t_part;
  spec.gates.push_back(middle);
  spec.gates.insert(spec.gates.end(), t_part.rbegin(), t_part.rend());
  validate(spec);
  return spec;
}

}  // namespace revguard

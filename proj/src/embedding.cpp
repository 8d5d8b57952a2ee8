#include "revguard/embedding.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace revguard {

TruthTable TruthTable::parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  TruthTable tt;
  std::size_t expected_rows = 0;
  std::vector<bool> seen;

  while (std::getline(in, raw)) {
    ++lineno;
    auto pos = raw.find('#');
    if (pos != std::string::npos) raw = raw.substr(0, pos);
    std::istringstream iss(raw);
    std::string lhs, arrow, rhs;
    if (!(iss >> lhs)) continue;
    if (!(iss >> arrow >> rhs) || arrow != "->")
      throw ParseError(lineno, "expected \"bits -> bits\"");
    std::string extra;
    if (iss >> extra) throw ParseError(lineno, "trailing tokens");

    BitPattern in_pat = BitPattern::parse(lhs);
    BitPattern out_pat = BitPattern::parse(rhs);
    if (tt.rows.empty()) {
      tt.inputs = in_pat.width();
      tt.outputs = out_pat.width();
      expected_rows = std::uint64_t{1} << tt.inputs;
      tt.rows.assign(expected_rows, 0);
      seen.assign(expected_rows, false);
    } else if (in_pat.width() != tt.inputs || out_pat.width() != tt.outputs) {
      throw ParseError(lineno, "inconsistent row width");
    }
    if (seen[in_pat.value()])
      throw ParseError(lineno, "duplicate input row " + lhs);
    seen[in_pat.value()] = true;
    tt.rows[in_pat.value()] = out_pat.value();
  }

  if (tt.rows.empty()) throw ParseError(lineno, "empty truth table");
  for (std::size_t x = 0; x < expected_rows; ++x)
    if (!seen[x])
      throw ParseError(lineno, "missing row for input " +
                                   BitPattern(tt.inputs, x).str());
  return tt;
}

std::string TruthTable::str() const {
  std::ostringstream out;
  for (std::uint64_t x = 0; x < rows.size(); ++x)
    out << BitPattern(inputs, x).str() << " -> "
        << BitPattern(outputs, rows[x]).str() << "\n";
  return out.str();
}

bool TruthTable::injective() const {
  std::vector<bool> seen(std::uint64_t{1} << outputs, false);
  for (std::uint64_t v : rows) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

int min_garbage(const TruthTable& tt) {
  std::map<std::uint64_t, std::uint64_t> mult;
  for (std::uint64_t v : tt.rows) ++mult[v];
  std::uint64_t mu = 0;
  for (const auto& [v, m] : mult) mu = std::max(mu, m);
  int g = 0;
  while ((std::uint64_t{1} << g) < mu) ++g;
  return g;
}

EmbeddingResult embed(const TruthTable& tt) { return embed(tt, EmbedOptions{}); }

EmbeddingResult embed(const TruthTable& tt, const EmbedOptions& options) {
  const int p = tt.inputs;
  const int q = tt.outputs;
  int g = min_garbage(tt);
  int a = q + g - p;
  if (a < 0) {
    // more inputs than output bits can distinguish: pad with garbage only
    g = p - q;
    a = 0;
  }
  g += options.extra_lines;
  a += options.extra_lines;
  const int n = p + a;
  if (n > exhaustive_limit())
    throw CapacityError("embedding needs " + std::to_string(n) +
                        " lines, above the exhaustive limit");

  const std::uint64_t num_primary = std::uint64_t{1} << p;
  std::vector<std::uint64_t> anc_values = options.ancilla_values;
  if (anc_values.empty()) anc_values.assign(num_primary, 0);
  if (anc_values.size() != num_primary)
    throw DimensionError("ancilla value vector must have 2^p entries");
  for (std::uint64_t v : anc_values)
    if (v >> a)
      throw DimensionError("ancilla value does not fit in " +
                           std::to_string(a) + " bits");

  // distinct garbage codes per colliding output group, lowest code first,
  // in increasing primary-pattern order
  std::map<std::uint64_t, std::uint64_t> next_code;
  std::vector<std::uint64_t> garbage_code(num_primary);
  for (std::uint64_t x = 0; x < num_primary; ++x)
    garbage_code[x] = next_code[tt.rows[x]]++;

  const std::uint64_t size = std::uint64_t{1} << n;
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> map(size, kUnset);
  std::vector<bool> used(size, false);
  std::vector<std::uint64_t> functional_rows(num_primary);
  for (std::uint64_t x = 0; x < num_primary; ++x) {
    const std::uint64_t in_row = (x << a) | anc_values[x];
    const std::uint64_t out_row = (tt.rows[x] << g) | garbage_code[x];
    functional_rows[x] = in_row;
    map[in_row] = out_row;
    used[out_row] = true;
  }

  // completion: lexicographically smallest unused output per remaining row
  std::uint64_t next_free = 0;
  for (std::uint64_t row = 0; row < size; ++row) {
    if (map[row] != kUnset) continue;
    while (used[next_free]) ++next_free;
    map[row] = next_free;
    used[next_free] = true;
  }

  return EmbeddingResult{tt,
                         n,
                         a,
                         g,
                         Permutation(n, std::move(map)),
                         std::move(functional_rows),
                         std::move(anc_values)};
}

std::uint64_t project(const EmbeddingResult& e, std::uint64_t x) {
  return e.spec[e.functional_rows[x]] >> e.garbage;
}

std::vector<std::uint64_t> functional_reachable(
    const EmbeddingResult& e, const ScramblingAssignment& assignment) {
  if (assignment.c_effective != e.ancillary)
    throw DimensionError("assignment covers " +
                         std::to_string(assignment.c_effective) +
                         " ancillae, embedding has " +
                         std::to_string(e.ancillary));
  const std::uint64_t num_primary = std::uint64_t{1} << e.source.inputs;
  if (!assignment.constant && !assignment.per_pattern.empty() &&
      assignment.per_pattern.size() != num_primary)
    throw DimensionError("per-pattern assignment must have 2^p entries");
  std::vector<std::uint64_t> rows;
  rows.reserve(num_primary);
  for (std::uint64_t x = 0; x < num_primary; ++x)
    rows.push_back((x << e.ancillary) | assignment.value_for(x));
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace revguard

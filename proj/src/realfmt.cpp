#include "revguard/realfmt.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace revguard {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream iss(line);
  std::vector<std::string> toks;
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool looks_negative(const std::string& operand) {
  return operand.size() > 1 &&
         (operand.front() == '-' || operand.back() == '\'');
}

}  // namespace

Circuit parse_real(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;

  std::string version;
  int numvars = -1;
  std::vector<std::string> variables;
  std::unordered_map<std::string, int> var_index;
  std::string constants_str, garbage_str;
  std::vector<ToffoliGate> gates;
  bool in_body = false, ended = false;

  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    if (ended)
      throw ParseError(lineno, "content after .end");
    const std::string& head = toks[0];

    if (head[0] == '.') {
      if (in_body && head != ".end")
        throw ParseError(lineno, "directive inside gate body: " + head);
      if (head == ".version") {
        version = toks.size() > 1 ? toks[1] : "";
      } else if (head == ".numvars") {
        if (toks.size() != 2) throw ParseError(lineno, ".numvars needs one operand");
        numvars = std::stoi(toks[1]);
        if (numvars < 1 || numvars > kMaxLines)
          throw ParseError(lineno, ".numvars out of supported range 1..63");
      } else if (head == ".variables") {
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (var_index.count(toks[i]))
            throw ParseError(lineno, "duplicate variable " + toks[i]);
          var_index[toks[i]] = static_cast<int>(variables.size());
          variables.push_back(toks[i]);
        }
      } else if (head == ".inputs" || head == ".outputs") {
        // informational name lists; length checked against numvars below
        if (numvars >= 0 &&
            toks.size() - 1 != static_cast<std::size_t>(numvars))
          throw ParseError(lineno, head + " name count does not match .numvars");
      } else if (head == ".constants") {
        if (toks.size() != 2) throw ParseError(lineno, ".constants needs one operand");
        constants_str = toks[1];
      } else if (head == ".garbage") {
        if (toks.size() != 2) throw ParseError(lineno, ".garbage needs one operand");
        garbage_str = toks[1];
      } else if (head == ".begin") {
        if (numvars < 0) throw ParseError(lineno, ".begin before .numvars");
        if (variables.empty())
          throw ParseError(lineno, ".begin before .variables");
        if (variables.size() != static_cast<std::size_t>(numvars))
          throw ParseError(lineno, ".variables count does not match .numvars");
        in_body = true;
      } else if (head == ".end") {
        if (!in_body) throw ParseError(lineno, ".end without .begin");
        in_body = false;
        ended = true;
      } else if (head == ".inputbus" || head == ".outputbus" ||
                 head == ".state" || head == ".module") {
        throw UnsupportedFeatureError("line " + std::to_string(lineno) +
                                      ": unsupported directive " + head);
      } else {
        throw ParseError(lineno, "unknown directive " + head);
      }
      continue;
    }

    // gate line
    if (!in_body) throw ParseError(lineno, "gate line outside .begin/.end");
    if (head[0] != 't')
      throw UnsupportedFeatureError("line " + std::to_string(lineno) +
                                    ": unsupported gate kind " + head);
    int k;
    try {
      std::size_t used = 0;
      k = std::stoi(head.substr(1), &used);
      if (used != head.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UnsupportedFeatureError("line " + std::to_string(lineno) +
                                    ": unsupported gate kind " + head);
    }
    if (k < 1)
      throw ParseError(lineno, "gate size must be at least 1");
    if (toks.size() - 1 != static_cast<std::size_t>(k))
      throw ParseError(lineno, "t" + std::to_string(k) + " expects " +
                                   std::to_string(k) + " operands, got " +
                                   std::to_string(toks.size() - 1));
    std::uint64_t control_mask = 0;
    int target = -1;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const std::string& op = toks[i];
      if (looks_negative(op))
        throw UnsupportedFeatureError("line " + std::to_string(lineno) +
                                      ": negative controls are not supported");
      auto it = var_index.find(op);
      if (it == var_index.end())
        throw ParseError(lineno, "unknown variable " + op);
      if (i + 1 == toks.size()) {
        target = it->second;
      } else {
        control_mask |= std::uint64_t{1} << it->second;
      }
    }
    if ((control_mask >> target) & 1u)
      throw MalformedGateError("line " + std::to_string(lineno) +
                               ": gate target duplicates a control line");
    gates.emplace_back(control_mask, target);
  }

  if (numvars < 0) throw ParseError(lineno, "missing .numvars");
  if (in_body) throw ParseError(lineno, "missing .end");

  Circuit c(numvars, std::move(gates));
  c.version = version.empty() ? "2.0" : version;
  c.set_line_names(variables);

  std::vector<std::optional<bool>> constants(numvars, std::nullopt);
  if (!constants_str.empty()) {
    if (constants_str.size() != static_cast<std::size_t>(numvars))
      throw ParseError(0, ".constants length does not match .numvars");
    for (int i = 0; i < numvars; ++i) {
      char ch = constants_str[static_cast<std::size_t>(i)];
      if (ch == '0')
        constants[static_cast<std::size_t>(i)] = false;
      else if (ch == '1')
        constants[static_cast<std::size_t>(i)] = true;
      else if (ch != '-')
        throw ParseError(0, ".constants characters must be one of -01");
    }
  }
  c.set_constants(std::move(constants));

  std::vector<bool> garbage(static_cast<std::size_t>(numvars), false);
  if (!garbage_str.empty()) {
    if (garbage_str.size() != static_cast<std::size_t>(numvars))
      throw ParseError(0, ".garbage length does not match .numvars");
    for (int i = 0; i < numvars; ++i) {
      char ch = garbage_str[static_cast<std::size_t>(i)];
      if (ch == '1')
        garbage[static_cast<std::size_t>(i)] = true;
      else if (ch != '-')
        throw ParseError(0, ".garbage characters must be one of -1");
    }
  }
  c.set_garbage(std::move(garbage));
  return c;
}

std::string write_real(const Circuit& c) {
  std::ostringstream out;
  const int n = c.lines();

  std::vector<std::string> names = c.line_names();
  if (names.empty()) {
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  }

  out << ".version 2.0\n";
  out << ".numvars " << n << "\n";
  out << ".variables";
  for (const auto& name : names) out << ' ' << name;
  out << "\n";
  out << ".inputs";
  for (const auto& name : names) out << ' ' << name;
  out << "\n";
  out << ".outputs";
  for (const auto& name : names) out << ' ' << name;
  out << "\n";

  std::string constants(static_cast<std::size_t>(n), '-');
  if (!c.constants().empty())
    for (int i = 0; i < n; ++i)
      if (auto v = c.constants()[static_cast<std::size_t>(i)])
        constants[static_cast<std::size_t>(i)] = *v ? '1' : '0';
  out << ".constants " << constants << "\n";

  std::string garbage(static_cast<std::size_t>(n), '-');
  if (!c.garbage().empty())
    for (int i = 0; i < n; ++i)
      if (c.garbage()[static_cast<std::size_t>(i)])
        garbage[static_cast<std::size_t>(i)] = '1';
  out << ".garbage " << garbage << "\n";

  out << ".begin\n";
  for (const auto& g : c.gates()) {
    out << 't' << g.size();
    for (int ctl : g.controls()) out << ' ' << names[static_cast<std::size_t>(ctl)];
    out << ' ' << names[static_cast<std::size_t>(g.target())] << "\n";
  }
  out << ".end\n";
  return out.str();
}

Circuit read_real_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_real(ss.str());
}

void write_real_file(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << write_real(c);
}

}  // namespace revguard

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "revguard/defense.hpp"
#include "revguard/detection.hpp"
#include "revguard/embedding.hpp"
#include "revguard/metrics.hpp"
#include "revguard/realfmt.hpp"
#include "revguard/serialize.hpp"
#include "revguard/synthesis.hpp"
#include "revguard/trojan.hpp"

using nlohmann::json;
using namespace revguard;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open file for writing: " + out_path);
    out << text;
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

std::vector<BitPattern> read_pattern_file(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<BitPattern> patterns;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line = line.substr(0, pos);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    patterns.push_back(BitPattern::parse(line.substr(b, e - b + 1)));
  }
  return patterns;
}

// Permutation given as a truth-table file with p = q and bijective rows.
Permutation spec_from_tt(const TruthTable& tt) {
  if (tt.inputs != tt.outputs)
    throw DomainError("specification must have equal input/output counts");
  return Permutation(tt.inputs, tt.rows);
}

std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"Workbench for hardware-Trojan studies in reversible circuits"};
  app.require_subcommand(1);

  int limit_override = 0;
  app.add_option("--exhaustive-limit", limit_override,
                 "Override the 2^n operation line cap (default 24, env "
                 "REVGUARD_EXHAUSTIVE_LIMIT)");

  std::string circuit_path, tt_path, host_path, trojan_path, out_path;
  std::string input_str, kind = "all1", level_str = "baseline";
  std::string suite_path, bench_path, base_path, variant_path, format = "text";
  std::optional<std::uint64_t> seed;
  std::size_t random_k = 0;
  std::optional<std::size_t> from, to;
  std::uint64_t prob_t = 1;
  bool dist = false;
  std::string p_range = "3..20", c_range = "1..20";
  int prob_p = 0, prob_c = 0;

  auto* sim = app.add_subcommand("sim", "Simulate a circuit on one pattern");
  sim->add_option("-c,--circuit", circuit_path, ".real netlist")->required();
  sim->add_option("-i,--input", input_str, "input pattern, line 0 leftmost")
      ->required();
  sim->add_option("--from", from, "first gate index");
  sim->add_option("--to", to, "one past the last gate index");

  auto* table = app.add_subcommand("table", "Dump the full permutation");
  table->add_option("-c,--circuit", circuit_path, ".real netlist")->required();

  auto* embed_cmd =
      app.add_subcommand("embed", "Embed a truth table into a reversible spec");
  embed_cmd->add_option("-t,--tt", tt_path, "truth-table file")->required();
  embed_cmd->add_option("-o,--out", out_path, "write synthesized .real here");

  auto* synth = app.add_subcommand("synth", "Synthesize a reversible spec");
  synth->add_option("-t,--tt", tt_path, "reversible truth-table file")
      ->required();
  synth->add_option("-o,--out", out_path, ".real output (default stdout)");

  auto* inject = app.add_subcommand("inject", "Insert a Trojan into a host");
  inject->add_option("-c,--host", host_path, "host .real")->required();
  inject->add_option("-t,--trojan", trojan_path, "trojan JSON")->required();
  inject->add_option("-o,--out", out_path, "infected .real (default stdout)");

  auto* suite = app.add_subcommand("suite", "Emit a detection pattern suite");
  suite->add_option("-c,--host", host_path, "host .real")->required();
  suite->add_option("-k,--kind", kind, "all1|onecold")->required();
  suite->add_option("-o,--out", out_path, "pattern file (default stdout)");
  suite->add_option("-f,--format", format, "text|json");

  auto* detect_cmd = app.add_subcommand("detect", "Golden-vs-infected test");
  detect_cmd->add_option("-c,--host", host_path, "host .real")->required();
  detect_cmd->add_option("-t,--trojan", trojan_path, "trojan JSON")->required();
  detect_cmd->add_option("-k,--kind", kind, "all1|onecold");
  detect_cmd->add_option("-s,--suite", suite_path, "pattern file");
  detect_cmd->add_option("--random", random_k, "use k random patterns");
  detect_cmd->add_option("--seed", seed, "RNG seed (required with --random)");

  auto* scramble_cmd =
      app.add_subcommand("scramble", "Scramble ancillae and resynthesize");
  scramble_cmd->add_option("-t,--tt", tt_path, "truth-table file")->required();
  scramble_cmd->add_option("-l,--level", level_str, "baseline|lv1|lv2|lv3")
      ->required();
  scramble_cmd->add_option("--seed", seed, "RNG seed (required for lv2/lv3)");
  scramble_cmd->add_option("-o,--out", out_path, "resynthesized .real");

  auto* cost_cmd = app.add_subcommand("cost", "Line/gate/quantum cost");
  cost_cmd->add_option("-c,--circuit", circuit_path, ".real netlist")
      ->required();

  auto* overhead_cmd =
      app.add_subcommand("overhead", "Cost overhead of a variant vs a base");
  overhead_cmd->add_option("-b,--base", base_path, "base .real")->required();
  overhead_cmd->add_option("-v,--variant", variant_path, "variant .real")
      ->required();
  overhead_cmd->add_option("-f,--format", format, "text|csv|json");

  auto* prob = app.add_subcommand("prob", "Trojan disable probability");
  prob->add_option("-p", prob_p, "primary inputs")->required();
  prob->add_option("-c", prob_c, "ancillary inputs")->required();
  prob->add_option("-t", prob_t, "triggering patterns")->required();
  prob->add_flag("--dist", dist, "full trigger-count distribution");

  auto* surface =
      app.add_subcommand("surface", "Never-triggered probability grid (CSV)");
  surface->add_option("-t", prob_t, "triggering patterns")->default_val(8);
  surface->add_option("-p", p_range, "p range, e.g. 3..20");
  surface->add_option("-c", c_range, "c range, e.g. 1..20");
  surface->add_option("-o,--out", out_path, "CSV output (default stdout)");

  auto* table2 = app.add_subcommand(
      "table2", "Disable probabilities for a benchmark list (CSV)");
  table2->add_option("-b,--bench", bench_path,
                     "CSV: name,total_inputs,constants")
      ->required();
  table2->add_option("-o,--out", out_path, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }
  if (limit_override > 0) set_exhaustive_limit(limit_override);

  if (sim->parsed()) {
    Circuit c = read_real_file(circuit_path);
    BitPattern p = BitPattern::parse(input_str);
    std::size_t f = from.value_or(0);
    std::size_t t = to.value_or(c.gate_count());
    std::cout << simulate(c, p, f, t).str() << "\n";
  } else if (table->parsed()) {
    Circuit c = read_real_file(circuit_path);
    Permutation perm = permutation(c);
    for (std::uint64_t x = 0; x < perm.size(); ++x)
      std::cout << BitPattern(c.lines(), x).str() << " -> "
                << BitPattern(c.lines(), perm[x]).str() << "\n";
  } else if (embed_cmd->parsed()) {
    TruthTable tt = TruthTable::parse(slurp(tt_path));
    EmbeddingResult e = embed(tt);
    json j{{"schema_version", kSchemaVersion},
           {"width", e.width},
           {"ancillary", e.ancillary},
           {"garbage", e.garbage},
           {"functional_rows", e.functional_rows},
           {"ancilla_values", e.ancilla_values}};
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty())
      emit(write_real(resynthesize(e, scramble(e, ScramblingLevel::Baseline))),
           out_path);
  } else if (synth->parsed()) {
    TruthTable tt = TruthTable::parse(slurp(tt_path));
    emit(write_real(synthesize(spec_from_tt(tt))), out_path);
  } else if (inject->parsed()) {
    Circuit host = read_real_file(host_path);
    TrojanSpec t =
        trojan_from_json(json::parse(slurp(trojan_path)), host.lines());
    emit(write_real(insert(host, t)), out_path);
  } else if (suite->parsed()) {
    Circuit host = read_real_file(host_path);
    if (kind != "all1" && kind != "onecold")
      throw DomainError("suite kind must be all1 or onecold");
    PatternSuite s =
        kind == "onecold" ? onecold_suite(host) : all1_suite(host);
    if (format == "json") {
      json pats = json::array();
      for (const auto& p : s.patterns) pats.push_back(p.str());
      json j{{"schema_version", kSchemaVersion},
             {"label", s.label},
             {"raw_count", s.raw_count},
             {"patterns", pats}};
      emit(j.dump(2) + "\n", out_path);
    } else {
      std::ostringstream os;
      for (const auto& p : s.patterns) os << p.str() << "\n";
      emit(os.str(), out_path);
    }
  } else if (detect_cmd->parsed()) {
    Circuit host = read_real_file(host_path);
    TrojanSpec t =
        trojan_from_json(json::parse(slurp(trojan_path)), host.lines());
    DetectionReport report;
    if (random_k > 0) {
      if (!seed) throw DomainError("--random requires --seed");
      report = random_detect(host, t, random_k, *seed);
    } else if (!suite_path.empty()) {
      report = detect(host, t, read_pattern_file(suite_path), "file");
    } else if (kind == "onecold") {
      report = detect(host, t, onecold_suite(host));
    } else if (kind == "all1") {
      report = detect(host, t, all1_suite(host));
    } else {
      throw DomainError("suite kind must be all1 or onecold");
    }
    std::cout << report_to_json(report).dump(2) << "\n";
  } else if (scramble_cmd->parsed()) {
    TruthTable tt = TruthTable::parse(slurp(tt_path));
    ScramblingLevel level = parse_level(level_str);
    if ((level == ScramblingLevel::Lv2 || level == ScramblingLevel::Lv3) &&
        !seed)
      throw DomainError("lv2/lv3 scrambling requires --seed");
    EmbeddingResult e = embed(tt);
    ScramblingAssignment asg = scramble(e, level, seed.value_or(0));
    std::cout << assignment_to_json(asg).dump(2) << "\n";
    if (!out_path.empty())
      emit(write_real(resynthesize(e, asg)), out_path);
  } else if (cost_cmd->parsed()) {
    std::cout << cost_to_json(cost(read_real_file(circuit_path))).dump(2)
              << "\n";
  } else if (overhead_cmd->parsed()) {
    OverheadReport o = overhead(cost(read_real_file(base_path)),
                                cost(read_real_file(variant_path)));
    if (format == "json") {
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"line_pct", o.line_pct},
                        {"gate_pct", o.gate_pct},
                        {"quantum_pct", o.quantum_pct}}
                       .dump(2)
                << "\n";
    } else if (format == "csv") {
      std::cout << "line_pct,gate_pct,quantum_pct\n"
                << fmt1(o.line_pct) << ',' << fmt1(o.gate_pct) << ','
                << fmt1(o.quantum_pct) << "\n";
    } else {
      std::cout << "line: " << fmt1(o.line_pct)
                << "%  gate: " << fmt1(o.gate_pct)
                << "%  quantum: " << fmt1(o.quantum_pct) << "%\n";
    }
  } else if (prob->parsed()) {
    if (dist) {
      TriggerDistribution d = trigger_count_distribution(prob_p, prob_c, prob_t);
      std::cout << "i,prob\n";
      for (std::size_t i = 0; i < d.probs.size(); ++i)
        std::cout << i << ',' << d.probs[i].convert_to<double>() << "\n";
    } else {
      std::cout << disabled_probability(prob_p, prob_c, prob_t)
                       .convert_to<double>()
                << "\n";
    }
  } else if (surface->parsed()) {
    auto [p_lo, p_hi] = parse_range(p_range);
    auto [c_lo, c_hi] = parse_range(c_range);
    std::ostringstream os;
    os << "p,c,t,prob\n";
    for (const auto& cell :
         never_triggered_surface(prob_t, p_lo, p_hi, c_lo, c_hi))
      os << cell.p << ',' << cell.c << ',' << cell.t << ',' << cell.prob
         << "\n";
    emit(os.str(), out_path);
  } else if (table2->parsed()) {
    auto rows = table2_report(parse_benchmark_list(slurp(bench_path)));
    std::ostringstream os;
    os << "name,total_inputs,constants,baseline_lv2,lv3\n";
    for (const auto& r : rows) {
      os << r.name << ',';
      if (r.name == "Average")
        os << ",,";
      else
        os << r.total_inputs << ',' << r.constants << ',';
      os << fmt1(r.baseline_lv2) << ',' << fmt1(r.lv3) << "\n";
    }
    emit(os.str(), out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

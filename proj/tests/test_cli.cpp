#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed CLI with the given arguments, capturing stdout.
RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(REVGUARD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_path(const std::string& rel) {
  return std::string(REVGUARD_DATA_DIR) + "/" + rel;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "cli_tmp_" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("cli: sim") {
  RunResult r = run_cli("sim -c " + data_path("circuits/toy3.real") + " -i 000");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "110\n");
  CHECK(run_cli("sim -c " + data_path("circuits/toy3.real") + " -i 111").out ==
        "010\n");
}

TEST_CASE("cli: table2 reproduces the benchmark table") {
  RunResult r = run_cli("table2 -b " + data_path("table2_benchmarks.csv"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("name,total_inputs,constants,baseline_lv2,lv3\n") == 0);
  CHECK(r.out.find("decod24_10,4,2,75.0,87.5\n") != std::string::npos);
  CHECK(r.out.find("wim_220,") != std::string::npos);
  CHECK(r.out.find("Average,,,85.8,92.9\n") != std::string::npos);
}

TEST_CASE("cli: detect reports a null payload with exit 0") {
  const std::string trojan = write_temp(
      "null_trojan.json",
      "{\"position\": 1, \"gates\": ["
      "{\"controls\": [0, 1], \"target\": 2},"
      "{\"controls\": [0, 1], \"target\": 2}]}");
  RunResult r = run_cli("detect -c " + data_path("circuits/toy3.real") +
                        " -t " + trojan + " -k onecold");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"detected\": false") != std::string::npos);

  const std::string live = write_temp(
      "live_trojan.json",
      "{\"position\": 0, \"gates\": [{\"controls\": [], \"target\": 1}]}");
  RunResult r2 = run_cli("detect -c " + data_path("circuits/toy3.real") +
                         " -t " + live + " -k all1");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("\"detected\": true") != std::string::npos);
}

TEST_CASE("cli: surface emits the requested grid") {
  RunResult r = run_cli("surface -t 8 -p 3..4 -c 1..2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p,c,t,prob\n") == 0);
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + 2 * 2);
}

TEST_CASE("cli: identical invocations are byte-identical") {
  const std::string tt = write_temp(
      "decod.tt", "00 -> 1000\n10 -> 0100\n01 -> 0010\n11 -> 0001\n");
  RunResult a = run_cli("scramble -t " + tt + " -l lv2 --seed 9");
  RunResult b = run_cli("scramble -t " + tt + " -l lv2 --seed 9");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"per_pattern\"") != std::string::npos);
}

TEST_CASE("cli: domain errors exit 1, usage errors exit 2") {
  CHECK(run_cli("cost -c /no/such/file.real").exit_code == 1);
  CHECK(run_cli("prob -p 2 -c 2 -t 999").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("sim").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

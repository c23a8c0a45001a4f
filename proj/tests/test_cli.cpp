// Black-box tests of the evac binary: exit codes, output formats, and the
// solve -> evaluate round trip. The binary path is injected at compile time.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#ifndef EVAC_CLI_PATH
#error "EVAC_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string temp_path(const std::string& stem) {
  return std::string("cli_test_") + stem;
}

RunResult run(const std::string& args, const std::string& out_file) {
  const std::string cmd = std::string(EVAC_CLI_PATH) + " " + args + " > " +
                          out_file + " 2> " + out_file + ".err";
  const int raw = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.status = raw;
#else
  r.status = WEXITSTATUS(raw);
#endif
  std::ifstream is(out_file, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  r.out = ss.str();
  return r;
}

double extract_number(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  REQUIRE(pos != std::string::npos);
  return std::strtod(text.c_str() + pos + key.size(), nullptr);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  os << content;
}

}  // namespace

TEST_CASE("solve emits the known n=4 instance") {
  const auto r = run("solve --n 4", temp_path("solve4.json"));
  REQUIRE(r.status == 0);
  CHECK(extract_number(r.out, "\"T\": ") == Catch::Approx(3.113474).margin(1e-4));
  CHECK(r.out.find("\"time_convention\": \"perimeter\"") != std::string::npos);
}

TEST_CASE("solve rejects n below 4") {
  const auto r = run("solve --n 3", temp_path("solve3.json"));
  CHECK(r.status == 1);
}

TEST_CASE("solve odd n has negative first start angle") {
  const auto r = run("solve --n 5", temp_path("solve5.json"));
  REQUIRE(r.status == 0);
  CHECK(extract_number(r.out, "\"T\": ") == Catch::Approx(2.904729).margin(1e-4));
  CHECK(extract_number(r.out, "\"start_angles\": [") < 0.0);
}

TEST_CASE("solve output is byte-identical across runs") {
  const auto a = run("solve --n 6", temp_path("det_a.json"));
  const auto b = run("solve --n 6", temp_path("det_b.json"));
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("solve then evaluate round trip") {
  const std::string solved = temp_path("rt.json");
  const auto s = run("solve --n 4 --out " + solved, temp_path("rt_stdout"));
  REQUIRE(s.status == 0);
  const auto e =
      run("evaluate --strategy " + solved + " --samples 1024",
          temp_path("rt_eval.json"));
  REQUIRE(e.status == 0);
  CHECK(extract_number(e.out, "\"worst_evac\": ") ==
        Catch::Approx(3.113474).margin(1e-4));
  CHECK(e.out.find("\"covered\": true") != std::string::npos);
}

TEST_CASE("evaluate trivial strategy file") {
  const std::string path = temp_path("trivial4_in.json");
  write_file(path,
             "{\"n\": 4, \"servants\": ["
             "{\"phi\": 0, \"sigma\": 1},"
             "{\"phi\": 1.5707963267948966, \"sigma\": 1},"
             "{\"phi\": 3.141592653589793, \"sigma\": 1},"
             "{\"phi\": 4.71238898038469, \"sigma\": 1}]}");
  const auto r = run("evaluate --strategy " + path, temp_path("trivial4.json"));
  REQUIRE(r.status == 0);
  CHECK(extract_number(r.out, "\"worst_evac\": ") ==
        Catch::Approx(3.5707963).margin(1e-5));
}

TEST_CASE("evaluate rejects an over-speed queen") {
  const std::string path = temp_path("fast_queen.json");
  write_file(path,
             "{\"n\": 1, \"alpha\": null,"
             " \"queen\": [[0,0,0],[1,2,0]],"
             " \"servants\": [{\"phi\": 0, \"sigma\": 1}]}");
  const auto r = run("evaluate --strategy " + path, temp_path("fast_out.json"));
  CHECK(r.status == 2);
}

TEST_CASE("evaluate reports uncovered strategies as data") {
  const std::string path = temp_path("uncovered.json");
  write_file(path,
             "{\"n\": 2, \"servants\": ["
             "{\"phi\": 0, \"sigma\": -1},"
             "{\"phi\": 1, \"sigma\": 1}]}");
  const auto r = run("evaluate --strategy " + path, temp_path("unc_out.json"));
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\"covered\": false") != std::string::npos);
}

TEST_CASE("evaluate rejects tiny sample counts") {
  const std::string path = temp_path("trivial4_b.json");
  write_file(path,
             "{\"n\": 1, \"servants\": [{\"phi\": 0, \"sigma\": 1}]}");
  const auto r =
      run("evaluate --strategy " + path + " --samples 8", temp_path("s8.json"));
  CHECK(r.status == 1);
}

TEST_CASE("evaluate fails cleanly on a missing file") {
  const auto r = run("evaluate --strategy no_such_file.json",
                     temp_path("missing.json"));
  CHECK(r.status == 2);
}

TEST_CASE("table reproduces the known rows") {
  const auto r = run("table --n-min 4 --n-max 8", temp_path("table.csv"));
  REQUIRE(r.status == 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "n,T,ub,lb,naive_ub,naive_lb");
  const double expected[5] = {3.113, 2.905, 2.762, 2.660, 2.582};
  for (int i = 0; i < 5; ++i) {
    REQUIRE(std::getline(is, line));
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    CHECK(field == std::to_string(4 + i));
    std::getline(row, field, ',');
    CHECK(std::strtod(field.c_str(), nullptr) ==
          Catch::Approx(expected[i]).margin(1.5e-3));
  }
}

TEST_CASE("table rejects an empty range") {
  const auto r = run("table --n-min 5 --n-max 4", temp_path("table_bad.csv"));
  CHECK(r.status == 1);
}

TEST_CASE("profile carries the worst-case trailer") {
  const auto r =
      run("profile --n 4 --samples 256", temp_path("profile4.csv"));
  REQUIRE(r.status == 0);
  CHECK(r.out.find("theta,discovery_time,evac_time\n") == 0);
  CHECK(extract_number(r.out, "# worst_evac=") ==
        Catch::Approx(3.113474).margin(1e-3));
}

TEST_CASE("bounds dense grid reaches the requested maximum") {
  const auto r =
      run("bounds --n-min 4 --n-max 1024 --dense", temp_path("dense.csv"));
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\n1024") != std::string::npos);
  // T column stays empty on every data row.
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    const auto c = line.find(',');
    REQUIRE(c != std::string::npos);
    CHECK(line[c + 1] == ',');
  }
}

TEST_CASE("bounds n=4 row matches the table") {
  const auto r = run("bounds --n-min 4 --n-max 4", temp_path("bounds4.csv"));
  REQUIRE(r.status == 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  REQUIRE(std::getline(is, line));
  std::istringstream row(line);
  std::string field;
  std::getline(row, field, ',');  // n
  std::getline(row, field, ',');  // T (empty)
  CHECK(field.empty());
  std::getline(row, field, ',');
  CHECK(std::strtod(field.c_str(), nullptr) == Catch::Approx(3.301).margin(5e-4));
  std::getline(row, field, ',');
  CHECK(std::strtod(field.c_str(), nullptr) == Catch::Approx(2.913).margin(5e-4));
}

TEST_CASE("trace frames start at the origin and land on the circle") {
  const auto r = run("trace --n 4 --dt 0.25", temp_path("trace4.json"));
  REQUIRE(r.status == 0);
  CHECK(r.out.find("{\"t\": 0, \"queen\": [0,0], \"servants\": [[0,0],[0,0],[0,0],[0,0]]") !=
        std::string::npos);
  CHECK(r.out.find("\"intercepts\": null") != std::string::npos);
  CHECK(r.out.find("\"intercepts\": [[") != std::string::npos);
}

TEST_CASE("missing subcommand is a usage error") {
  const auto r = run("", temp_path("nosub.txt"));
  CHECK(r.status == 1);
}

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "eofb/densmat.hpp"
#include "eofb/state_io.hpp"
#include "eofb/states.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the installed binary with stdout+stderr captured.
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(EOFB_CLI_BIN) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe))
    result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path artifact_dir() {
  const fs::path dir = fs::path("cli_test_artifacts");
  fs::create_directories(dir);
  return dir;
}

fs::path write_bell_file() {
  const fs::path path = artifact_dir() / "bell.state";
  eofb::ComplexVector psi = eofb::ComplexVector::Zero(4);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(3) = 1.0 / std::sqrt(2.0);
  eofb::save_state(path.string(), eofb::pure_state_density(psi, 2, 2));
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<double> parse_csv_row(const std::string& line) {
  std::vector<double> vals;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) vals.push_back(std::stod(cell));
  return vals;
}

// Column indices in the bounds CSV layout.
constexpr int kColParam = 0;
constexpr int kColPpt = 1;
constexpr int kColLower = 5;
constexpr int kColUpper = 6;
constexpr int kColEofLower = 7;
constexpr int kColEofUpper = 8;
constexpr int kColEpsPpt = 9;
constexpr int kColEpsPurityA = 11;
constexpr int kColHint = 13;

}  // namespace

TEST_CASE("bounds command on a Bell state file") {
  const auto path = write_bell_file();
  const auto res = run_cli("bounds " + path.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("EoF bounds:") != std::string::npos);

  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() >= 2);
  const auto row = parse_csv_row(lines.back());
  REQUIRE(row.size() == 13);
  CHECK(std::abs(row[kColEofLower] - 0.693147) <= 1e-5);
  CHECK(std::abs(row[kColEofUpper] - 0.693147) <= 1e-5);
}

TEST_CASE("bounds command on the maximally mixed 3x3 state") {
  const fs::path path = artifact_dir() / "mixed9.state";
  eofb::save_state(path.string(),
                   eofb::make_bipartite(
                       3, 3, eofb::ComplexMatrix::Identity(9, 9) / 9.0));
  const auto res = run_cli("bounds " + path.string());
  CHECK(res.exit_code == 0);
  const auto row = parse_csv_row(lines_of(res.output).back());
  REQUIRE(row.size() == 13);
  CHECK(row[kColEofLower] == 0.0);
  CHECK(std::abs(row[kColUpper] - std::sqrt(4.0 / 3.0)) <= 1e-9);
  CHECK(std::abs(row[kColEofUpper] - std::log(3.0)) <= 1e-9);
}

TEST_CASE("bounds command exit codes") {
  const fs::path bad_dims = artifact_dir() / "bad_dims.state";
  std::ofstream(bad_dims) << "dims two 2\n";
  CHECK(run_cli("bounds " + bad_dims.string()).exit_code == 2);

  CHECK(run_cli("bounds " + (artifact_dir() / "missing.state").string())
            .exit_code == 2);

  const fs::path non_psd = artifact_dir() / "non_psd.state";
  std::ofstream(non_psd) << "dims 2 2\n"
                            "1.5,0 0,0 0,0 0,0\n"
                            "0,0 -0.5,0 0,0 0,0\n"
                            "0,0 0,0 0,0 0,0\n"
                            "0,0 0,0 0,0 0,0\n";
  const auto res = run_cli("bounds " + non_psd.string());
  CHECK(res.exit_code == 3);
  CHECK(res.output.find("eigenvalue") != std::string::npos);
}

TEST_CASE("envelope command emits the documented table") {
  const fs::path out = artifact_dir() / "env3.csv";
  const auto res = run_cli("envelope --m 3 --grid 512 --out " + out.string());
  CHECK(res.exit_code == 0);

  std::ifstream in(out);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "c,X,Y,epsilon,eta");

  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) rows.push_back(parse_csv_row(line));
  REQUIRE(rows.size() >= 513);

  CHECK(rows.front()[0] == 0.0);
  CHECK(rows.front()[1] == 0.0);

  bool saw_c1 = false;
  for (const auto& row : rows)
    if (row[0] == 1.0) {
      saw_c1 = true;
      CHECK(std::abs(row[2] - 0.693147) <= 1e-6);   // Y
      CHECK(std::abs(row[3] - 0.693147) <= 1e-6);   // epsilon
      CHECK(std::abs(row[4] - 0.693147) <= 1e-6);   // eta
      CHECK(std::abs(row[1] - 0.867563) <= 1e-6);   // X, the level-set max
    }
  CHECK(saw_c1);

  const auto& last = rows.back();
  CHECK(std::abs(last[0] - 2.0 / std::sqrt(3.0)) <= 1e-12);
  for (int col = 1; col <= 4; ++col)
    CHECK(std::abs(last[col] - 1.098612) <= 1e-6);
}

TEST_CASE("envelope m=2 has X equal to Y") {
  const auto res = run_cli("envelope --m 2 --grid 128");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = parse_csv_row(lines[i]);
    CHECK(std::abs(row[1] - row[2]) <= 1e-12);
  }
}

TEST_CASE("envelope command rejects invalid m") {
  CHECK(run_cli("envelope --m 1").exit_code != 0);
}

TEST_CASE("werner example sweep") {
  const fs::path out = artifact_dir() / "werner.csv";
  const auto res = run_cli(
      "example --family werner --d 3 --sweep f=-1:0:0.25 --out " +
      out.string());
  CHECK(res.exit_code == 0);

  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("eof_upper_hint") != std::string::npos);

  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const auto row = parse_csv_row(line);
    REQUIRE(row.size() == 14);
    const double f = row[kColParam];
    CHECK(std::abs(row[kColEofUpper] - 1.098612) <= 1e-5);
    CHECK(std::abs(row[kColHint] - (-f) * std::log(2.0)) <= 1e-9);
    ++count;
  }
  CHECK(count == 5);
}

TEST_CASE("two-param example sweep reproduces the bound ordering") {
  const fs::path out = artifact_dir() / "twoparam.csv";
  const auto res = run_cli(
      "example --family two-param --x 0.1 --sweep a=0.5:0.66:0.005 --out " +
      out.string());
  CHECK(res.exit_code == 0);

  std::ifstream in(out);
  std::string line;
  std::getline(in, line);  // header
  int count = 0;
  while (std::getline(in, line)) {
    const auto row = parse_csv_row(line);
    CHECK(row[kColEpsPpt] >= row[kColEpsPurityA] - 1e-12);
    CHECK(row[kColLower] >= row[kColPpt] - 1e-12);
    ++count;
  }
  CHECK(count == 33);
}

TEST_CASE("example sweep over x at fixed a") {
  const auto res =
      run_cli("example --family two-param --a 0.5 --sweep x=0:1:0.25");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 6);
  const auto first = parse_csv_row(lines[1]);
  const auto last = parse_csv_row(lines.back());
  CHECK(first[kColParam] == 0.0);
  CHECK(last[kColParam] == 1.0);
  CHECK(first[kColLower] > last[kColLower]);
}

TEST_CASE("example command rejects unknown families and bad sweeps") {
  CHECK(run_cli("example --family isotropic --sweep f=0:1:0.5").exit_code !=
        0);
  CHECK(run_cli("example --family werner --d 3 --sweep g=0:1:0.5").exit_code !=
        0);
  CHECK(run_cli("example --family werner --d 3 --sweep f=0:1:-0.5")
            .exit_code != 0);
  CHECK(run_cli("example --family werner --d 3 --sweep f=zero:1:0.5")
            .exit_code != 0);
}

TEST_CASE("CSV output is byte-identical across reruns") {
  const fs::path out1 = artifact_dir() / "det1.csv";
  const fs::path out2 = artifact_dir() / "det2.csv";
  const std::string args = "envelope --m 4 --grid 256 --out ";
  CHECK(run_cli(args + out1.string()).exit_code == 0);
  CHECK(run_cli(args + out2.string()).exit_code == 0);
  std::ifstream a(out1), b(out2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("verify command runs the light suites") {
  CHECK(run_cli("verify --suite fixtures").exit_code == 0);
  CHECK(run_cli("verify --suite envelope-hull").exit_code == 0);
  CHECK(run_cli("verify --suite two-qubit --n 25 --seed 7").exit_code == 0);
  CHECK(run_cli("verify --suite pure-sandwich --n 40").exit_code == 0);
  CHECK(run_cli("verify --suite no-such-suite").exit_code != 0);
}

TEST_CASE("round-trip through the CLI state format") {
  const fs::path path = artifact_dir() / "werner_state.state";
  const auto rho = eofb::werner(3, -0.4);
  eofb::save_state(path.string(), rho);
  const auto back = eofb::load_state(path.string());
  bool identical = true;
  for (long r = 0; r < rho.mat.rows(); ++r)
    for (long c = 0; c < rho.mat.cols(); ++c)
      if (back.mat(r, c) != rho.mat(r, c)) identical = false;
  CHECK(identical);
}

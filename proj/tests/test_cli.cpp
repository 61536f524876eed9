// Integration tests for the command-line tool: exit-code contract, format
// stability and determinism.  The binary path is injected by the build.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out = std::string(std::tmpnam(nullptr)) + ".out";
  const std::string cmd = std::string(DUNKL_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.stdout_text = slurp(out);
  std::remove(out.c_str());
  return r;
}

}  // namespace

TEST_CASE("spectrum includes the coulomb ground row", "[cli]") {
  const auto r = run_cli(
      "--format json spectrum --potential mie --A 1 --B 0 --C 0 --mu 0,0,0 "
      "--n-max 2 --l-max 1 --m-max 1");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc["schema"] == "dunkl-report/1");
  CHECK(doc["command"] == "spectrum");
  bool found = false;
  for (const auto& row : doc["rows"]) {
    if (row["n"] == 0 && row["l"] == "0" && row["m"] == "0" && row["sector"] == "+++") {
      CHECK(row["energy"].get<double>() == -0.5);
      found = true;
    }
  }
  CHECK(found);
  // sorted by energy
  double prev = -1e300;
  for (const auto& row : doc["rows"]) {
    CHECK(row["energy"].get<double>() >= prev);
    prev = row["energy"].get<double>();
  }
}

TEST_CASE("spectrum reproduces the deformed oscillator ground energy", "[cli]") {
  const auto r = run_cli(
      "--format json spectrum --potential pseudo --A 0.5 --B 0 --C 0 --mu 0.3,0.3,0.3 "
      "--n-max 1 --l-max 0 --m-max 0");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["energy"].get<double>() == Catch::Approx(2.4).epsilon(1e-12));
  CHECK(doc["rows"][1]["energy"].get<double>() == Catch::Approx(4.4).epsilon(1e-12));
}

TEST_CASE("empty quantum-number range yields an empty table", "[cli]") {
  const auto r = run_cli(
      "--format csv spectrum --potential pseudo --A 1 --n-max -1 --l-max 0 --m-max 0");
  CHECK(r.exit_code == 0);
  // header only
  CHECK(r.stdout_text.find("energy") != std::string::npos);
  CHECK(r.stdout_text.find("\n0,") == std::string::npos);
}

TEST_CASE("exit-code contract", "[cli]") {
  // usage errors
  CHECK(run_cli("spectrum").exit_code == 2);                       // missing --potential
  CHECK(run_cli("nonsense").exit_code == 2);                       // unknown subcommand
  CHECK(run_cli("--format yaml spectrum --potential mie").exit_code == 2);
  // domain errors
  CHECK(run_cli("spectrum --potential pseudo --A -1").exit_code == 3);
  CHECK(run_cli("spectrum --potential pseudo --A 1 --mu 0.1,-0.2,0").exit_code == 3);
  CHECK(run_cli("eval --potential mie --A 1 --n 0 --l 0 --m 1/2 --sector +++ "
                "--points 1,1,1").exit_code == 3);  // half-integer m in an even sector
  // check failure: impossible tolerance on a healthy comparison
  CHECK(run_cli("oracle --potential mie --A 1 --s 0 --k 2 --grid-N 500 --tol 1e-12").exit_code ==
        1);
  // passing comparison
  CHECK(run_cli("oracle --potential mie --A 1 --s 0 --k 2 --grid-N 3000").exit_code == 0);
  // help is not an error
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify identities suite passes and is deterministic", "[cli]") {
  const std::string args = "--format json verify --suite identities --mu 0.7,0.2,1.1 --seed 42";
  const auto first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  const auto second = run_cli(args);
  CHECK(first.stdout_text == second.stdout_text);  // byte-identical

  const auto doc = nlohmann::json::parse(first.stdout_text);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["status"] == "pass");
  CHECK(doc["rows"][0]["statistic"].get<double>() <= 1e-12);
}

TEST_CASE("verify angular suite at the standard limit", "[cli]") {
  const auto r = run_cli("--format json verify --suite angular --mu 0,0,0 --tol 1e-6 --seed 7");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  for (const auto& row : doc["rows"]) CHECK(row["status"] == "pass");
}

TEST_CASE("oracle free-particle report", "[cli]") {
  const auto r = run_cli("--format json oracle --potential free --A 1");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc["rows"].empty());
  CHECK(doc["params"]["note"].get<std::string>().find("no bound states") != std::string::npos);
}

TEST_CASE("oracle rows carry both routes and their difference", "[cli]") {
  const auto r = run_cli(
      "--format json oracle --potential pseudo --A 0.5 --B 1.5 --C 0 --mu 0.3,0.3,0.3 "
      "--l 0 --m 0 --grid-N 2000 --k 3");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  REQUIRE(doc["rows"].size() == 3);
  for (const auto& row : doc["rows"]) {
    CHECK(row["rel_diff"].get<double>() <= 1e-4);
    CHECK(row["convergence_estimate"].get<double>() < 1e-3);
  }
}

TEST_CASE("eval emits component factors and skips plane points", "[cli]") {
  const auto r = run_cli(
      "--format json eval --potential pseudo --A 0.5 --n 0 --l 0 --m 0 --sector +++ "
      "--mu 0,0,0 --points \"0.5,1,1;2.0,1.5707963267948966,1;1.1,0.8,2.2\"");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  REQUIRE(doc["rows"].size() == 2);  // the theta = pi/2 point is skipped
  for (const auto& row : doc["rows"]) {
    const double psi = row["psi"].get<double>();
    const double product = row["R"].get<double>() * row["Theta"].get<double>() *
                           row["Phi"].get<double>();
    CHECK(psi == Catch::Approx(product).epsilon(1e-12));
    // mu=0 oscillator ground state: e^{-r^2/2}/pi^{3/4}
    const double rr = row["r"].get<double>();
    CHECK(psi == Catch::Approx(std::exp(-0.5 * rr * rr) / std::pow(M_PI, 0.75)).epsilon(1e-10));
  }
}

TEST_CASE("json output round-trips through a parser", "[cli]") {
  const auto r = run_cli("--format json spectrum --potential mie --A 1 --n-max 1 --l-max 1 "
                         "--m-max 1 --mu 0.2,0.4,0.8");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  const auto again = nlohmann::json::parse(doc.dump());
  CHECK(doc == again);
}

TEST_CASE("csv and json numbers agree", "[cli]") {
  const std::string tail = "spectrum --potential mie --A 1 --B 0.3 --C 0.1 --mu 0.5,1.0,0.25 "
                           "--n-max 1 --l-max 1 --m-max 1 --sectors +++";
  const auto js = run_cli("--format json " + tail);
  const auto cs = run_cli("--format csv " + tail);
  REQUIRE(js.exit_code == 0);
  REQUIRE(cs.exit_code == 0);
  const auto doc = nlohmann::json::parse(js.stdout_text);

  std::istringstream lines(cs.stdout_text);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,l,m,sector,s,beta,energy");
  size_t idx = 0;
  std::string line;
  while (std::getline(lines, line)) {
    const auto last_comma = line.rfind(',');
    const double csv_energy = std::stod(line.substr(last_comma + 1));
    CHECK(csv_energy == doc["rows"][idx]["energy"].get<double>());
    ++idx;
  }
  CHECK(idx == doc["rows"].size());
}

TEST_CASE("--out writes the same bytes as stdout", "[cli]") {
  const std::string path = std::string(std::tmpnam(nullptr)) + ".json";
  const std::string tail =
      "spectrum --potential pseudo --A 1 --n-max 1 --l-max 0 --m-max 0 --mu 0.1,0.2,0.3";
  const auto direct = run_cli("--format json " + tail);
  const auto filed = run_cli("--format json --out " + path + " " + tail);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.stdout_text.empty());
  CHECK(slurp(path) == direct.stdout_text);
  std::remove(path.c_str());
}

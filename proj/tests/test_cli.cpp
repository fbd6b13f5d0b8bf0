#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sharp/config_io.hpp"
#include "sharp/polarization.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using doctest::Approx;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string output;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SHARPCERT_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "sharpcert_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("verify reports strength and m") {
  const auto r = run("verify --config icosahedron --cap 8");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.output);
  CHECK(j["strength"] == 5);
  CHECK(j["m"] == 3);
  CHECK(j["antipodal"] == true);
  CHECK(j["strongly_sharp"] == false);
  CHECK(j["spectrum"].size() == 3);
  CHECK(j["residuals"].contains("6"));
  CHECK(j["settings"]["cap"] == 8);
  CHECK(j["command"] == "verify");
}

TEST_CASE("certify writes the certificate schema") {
  const auto r = run("certify --config square --potential gaussian:1.0");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.output);
  for (const char* key : {"config", "potential", "nu", "nodes", "newton_coeffs", "monomial_coeffs",
                          "certified_max", "min_slack", "consistency", "settings"})
    CHECK(j.contains(key));
  CHECK(j["certified_max"].get<double>() == Approx(std::pow(1 + std::exp(-2.0), 2)).epsilon(1e-12));
  CHECK(j["nu"] == 0);
  CHECK(j["valid"] == true);
}

TEST_CASE("compare runs are deterministic and violation free") {
  const auto a = run("compare --config square --potential gaussian:1.0 --trials 1000 --seed 42");
  REQUIRE(a.status == 0);
  const auto j = json::parse(a.output);
  CHECK(j["violations"] == 0);
  CHECK(j["trials"] == 1000);
  CHECK(j["settings"]["seed"] == 42);

  const auto csv1 = run("compare --config square --potential gaussian:1.0 --trials 50 --seed 42 --format csv");
  const auto csv2 = run("compare --config square --potential gaussian:1.0 --trials 50 --seed 42 --format csv");
  REQUIRE(csv1.status == 0);
  CHECK(csv1.output == csv2.output);
  std::istringstream lines(csv1.output);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "trial_id,seed,competitor_Q,gap");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 50);

  const auto riesz = run("compare --config triangle --riesz 1 --trials 50 --seed 1");
  REQUIRE(riesz.status == 0);
  const auto rj = json::parse(riesz.output);
  CHECK(rj["sense"] == "riesz_min");
  CHECK(rj["reference_value"].get<double>() == Approx(2 * std::sqrt(3.0)));
}

TEST_CASE("usage errors exit with 2") {
  auto r = run("verify --config icosahedrn");
  CHECK(r.status == 2);
  CHECK(r.output.find("icosahedron") != std::string::npos);
  CHECK(run("certify --config square --potential gauss:1").status == 2);
  CHECK(run("certify --config square").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("verify --config square --format xml").status == 2);
  CHECK(run("compare --config triangle --riesz 2.5 --trials 1").status == 2);
  CHECK(run("certify --config square --potential riesz:1").status == 2);
}

TEST_CASE("verification failures exit with 1") {
  const auto path = temp_dir() / "random.json";
  sharp::save(sharp::random_configuration(2, 7, 3, 0), path);
  CHECK(run("verify --file " + path.string()).status == 1);
  CHECK(run("certify --file " + path.string() + " --potential gaussian:1").status == 1);
}

TEST_CASE("catalog dump round-trips through --file") {
  const auto path = temp_dir() / "e8.json";
  REQUIRE(run("catalog --config e8 --out " + path.string()).status == 0);
  const auto cfg = sharp::load(path);
  CHECK(cfg.size() == 240);
  const auto r = run("verify --file " + path.string());
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.output)["strength"] == 7);

  const auto list = run("catalog");
  REQUIRE(list.status == 0);
  CHECK(json::parse(list.output)["configurations"].size() == 23);
}

TEST_CASE("search and energy") {
  const auto s = run("search --config square --potential gaussian:1 --grid 100000");
  REQUIRE(s.status == 0);
  const auto sj = json::parse(s.output);
  CHECK(sj["best_value"].get<double>() == Approx(std::pow(1 + std::exp(-2.0), 2)).epsilon(1e-12));
  CHECK(sj["argmax"].size() == 4);

  const auto m = run("search --config square --potential gaussian:1 --min --format text");
  REQUIRE(m.status == 0);
  CHECK(m.output.find("min") != std::string::npos);

  const auto e = run("energy --config square --potential gaussian:1");
  REQUIRE(e.status == 0);
  const auto ej = json::parse(e.output);
  CHECK(ej["energy"].get<double>() == Approx(4 * (2 * std::exp(-2.0) + std::exp(-4.0))));
  CHECK(ej["mean_value_check"].get<double>() <= 1e-12);

  const auto re = run("energy --config e8 --potential riesz:2");
  REQUIRE(re.status == 0);
  CHECK(json::parse(re.output)["mean_value_check"].is_null());
}

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into stdout.
Run run(const std::string& args, const std::string& input = "") {
  std::string cmd;
  if (!input.empty()) cmd = "printf '" + input + "' | ";
  cmd += std::string(NBODY_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  std::string f;
  while (std::getline(in, f, ',')) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("spectrum csv") {
  const auto r = run("spectrum --n 3 --stat fermi --levels 3");
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "label,energy,degeneracy,vanishes");
  const auto first = fields(l[1]);
  CHECK(first[0] == "0");
  CHECK(std::stod(first[1]) == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(first[2] == "1");
  CHECK(first[3] == "false");
  CHECK(std::stod(fields(l[2])[1]) == doctest::Approx(6.0 * std::sqrt(3.0)));
}

TEST_CASE("spectrum flags vanishing levels") {
  const auto r = run("spectrum --n 2 --stat bose --levels 3");
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  CHECK(fields(l[3])[3] == "true");
  CHECK(fields(l[2])[3] == "false");
}

TEST_CASE("spectrum with zero levels prints the header only") {
  const auto r = run("spectrum --n 4 --levels 0");
  CHECK(r.status == 0);
  CHECK(r.out == "label,energy,degeneracy,vanishes\n");
}

TEST_CASE("spectrum json in physical units") {
  const auto r = run("spectrum --n 4 --dim 2 --levels 2 --format json");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["units"] == "hbar_omega");
  CHECK(doc["levels"][0]["energy"].get<double>() == doctest::Approx(14.0));
  CHECK(doc["levels"][0]["degeneracy"] == 3);
  CHECK(doc["levels"][1]["degeneracy"].is_null());
}

TEST_CASE("degeneracy") {
  CHECK(run("degeneracy --n 3 --dim 3").out == "N,D,degeneracy\n3,3,3\n");
  CHECK(run("degeneracy --n 4 --dim 3").out == "N,D,degeneracy\n4,3,1\n");
  CHECK(run("degeneracy --n 7 --dim 1").out == "N,D,degeneracy\n7,1,1\n");
  const auto big = nlohmann::json::parse(run("degeneracy --n 10 --dim 4 --format json").out);
  CHECK(big["degeneracy"] == 252);
}

TEST_CASE("eval reads points from stdin") {
  const auto r = run("eval --n 2 --stat fermi --points -", "x1,x2\\n1,0\\n0,1\\n");
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == "point_id,value");
  CHECK(fields(l[1])[0] == "0");
  CHECK(std::stod(fields(l[1])[1]) == doctest::Approx(0.57516836952289603478).epsilon(1e-15));
  CHECK(std::stod(fields(l[2])[1]) == doctest::Approx(-0.57516836952289603478).epsilon(1e-15));
}

TEST_CASE("eval in the log domain") {
  const auto r = run("eval --n 2 --log-domain", "0,1\\n");
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  CHECK(l[0] == "point_id,log_abs,sign");
  const auto f = fields(l[1]);
  CHECK(std::stod(f[1]) == doctest::Approx(std::log(0.57516836952289603478)));
  CHECK(f[2] == "-1");
}

TEST_CASE("eval of a two-dimensional ground state") {
  const auto r = run("eval --n 3 --dim 2 --unnormalized", "0,0,1,0,0,1\\n");
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(std::abs(std::stod(fields(l[1])[1])) > 0.0);
}

TEST_CASE("eval errors name the offending line") {
  const auto r = run("eval --n 2", "1,0\\n1,abc\\n");
  CHECK(r.status == 2);
  CHECK(r.out.find("line 2") != std::string::npos);
  const auto width = run("eval --n 3", "1,0\\n");
  CHECK(width.status == 2);
  CHECK(width.out.find("line 1") != std::string::npos);
}

TEST_CASE("invalid arguments are rejected") {
  CHECK(run("spectrum --n 1").status != 0);
  CHECK(run("spectrum --n 3 --stat boltzmann").status != 0);
  CHECK(run("spectrum --n 3 --dim 2 --stat bose").status == 2);
  CHECK(run("eval --n 3 --dim 3 --selection 1,1", "0,0,0,1,0,0,0,1,0\\n").status == 2);
  CHECK(run("verify --suite nope").status != 0);
  CHECK(run("").status != 0);
}

TEST_CASE("figure table") {
  const auto r = run("figure1 --n-max 20 --dims 1,2,3");
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 1 + 19 * 3);
  CHECK(l[0] == "N,D,E0");
  const auto last = fields(l.back());
  CHECK(last[0] == "20");
  CHECK(last[1] == "3");
  CHECK(std::stod(last[2]) == doctest::Approx(328.7019926924691).epsilon(1e-14));
  const auto doc = nlohmann::json::parse(run("figure1 --n-max 3 --dims 2 --format json").out);
  CHECK(doc["rows"].size() == 2);
}

TEST_CASE("output is deterministic") {
  CHECK(run("figure1 --n-max 50").out == run("figure1 --n-max 50").out);
  CHECK(run("verify --suite identities --seed 5").out == run("verify --suite identities --seed 5").out);
}

TEST_CASE("verify exit status and report") {
  const auto r = run("verify --suite symmetry --seed 3");
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["seed"] == 3);
  const auto csv = run("verify --suite identities --format csv");
  CHECK(csv.status == 0);
  CHECK(lines(csv.out)[0] == "check,parameters,metric,tolerance,pass");
}

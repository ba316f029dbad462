#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "schubert/plucker.hpp"
#include "support.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(SCHUBERT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("schubert_cli_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("describe") {
  auto r = cli("describe --group A2 --w 213");
  CHECK(r.status == 0);
  CHECK(r.out == "zero: p3, p23; nonzero: p2\n");
  r = cli("describe --group A2 --w 132");
  CHECK(r.out == "zero: p2, p3; nonzero: p13\n");
  r = cli("describe --group A2 --w 213 --variety");
  CHECK(r.out == "zero: p3, p13, p23\n");
  CHECK(cli("describe-variety --group A2 --w 321").status == 0);
  const auto j = nlohmann::json::parse(cli("describe --group A3 --w 2314 --format json").out);
  CHECK(j.at("zero").size() + j.at("nonzero").size() <= 6);
  CHECK(cli("describe --group D4 --w s1.s2 --format json").status == 0);
  CHECK(cli("describe --group G2 --w 1.2.1").status == 0);
}

TEST_CASE("recognize") {
  const auto id = scratch("id.json", "[[1,0,0],[0,1,0],[0,0,1]]");
  auto r = cli("recognize --group A2 --flag " + id.string());
  CHECK(r.status == 0);
  CHECK(r.out == "w = 123; queries = 3 (p3, p2, p13)\n");
  const auto csv = scratch("x.csv", "1,0,1\n1,0,0\n0,1,0\n");
  r = cli("recognize --group A2 --flag " + csv.string() + " --trace");
  CHECK(r.out == "p3 = 0\np2 != 0\np23 != 0\nw = 231; queries = 3 (p3, p2, p23)\n");
  r = cli("recognize --group A2 --pattern 111111 --format json");
  CHECK(nlohmann::json::parse(r.out).at("w") == "321");
  CHECK(cli("recognize --group B2 --pattern 10001000").status == 0);
  CHECK(cli("recognize --group A2 --pattern 000000 --strict").status == 1);
  CHECK(cli("recognize --group A2 --pattern 0101").status == 2);
  CHECK(cli("recognize --group A2").status == 2);
  CHECK(cli("recognize --group B2 --flag " + id.string()).status == 2);
}

TEST_CASE("trees, bases, patterns, bounds") {
  auto r = cli("tree --group A2");
  CHECK(r.status == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(cli("tree --group A2 --optimal --format plain").status == 0);

  r = cli("base --group A2");
  CHECK(r.status == 0);
  for (const char* p : {" p2\n", " p3\n", " p13\n", " p23\n"}) CHECK(r.out.find(p) != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(nlohmann::json::parse(cli("base --group B2 --format json").out).size() == 6);

  r = cli("patterns-poset --n 3 --coords p2,p3,p13,p23");
  CHECK(r.out.find("11 patterns (complete)") != std::string::npos);
  CHECK(cli("patterns-poset --n 4 --seed 3").out == cli("patterns-poset --n 4 --seed 3").out);

  CHECK(cli("bounds --defining 213").out == "w = 213: lower bound 2 (hitting set p13 p23); upper bound 3\n");
  CHECK(nlohmann::json::parse(cli("bounds --witness 2 --format json").out).at("lower_bound") == 6);
  CHECK(cli("bounds --feedback-free 3").out.find("minimum size 4") != std::string::npos);
  CHECK(cli("bounds --chain 1").status == 0);
  CHECK(cli("economical --group D4").out.find("economical indices: none") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("describe --group E6 --w e").status == 3);
  CHECK(cli("describe --group X9 --w e").status == 2);
  CHECK(cli("describe --group A2").status == 2);
  CHECK(cli("describe --group A2 --w 9").status == 2);
  CHECK(cli("describe --group A2 --w 213 --format dot").status == 2);
  CHECK(cli("nonsense").status == 2);
}

TEST_CASE("describe then recognize round trip") {
  for (int n = 2; n <= 5; ++n) {
    const auto& ps = testing::plucker("A" + std::to_string(n - 1));
    const auto& W = ps.group();
    const std::string group = " --group A" + std::to_string(n - 1);
    for (const auto& w : W.elements()) {
      const auto perm = schubert::format_permutation(W.to_permutation(w));
      const auto d = nlohmann::json::parse(cli("describe" + group + " --w " + perm + " --format json").out);
      // Zero where the description says so, nonzero elsewhere.
      nlohmann::json pattern = nlohmann::json::object();
      for (std::size_t k = 0; k < ps.size(); ++k) pattern[ps.label(k)] = 1;
      for (const auto& z : d.at("zero")) pattern[z.get<std::string>().substr(1)] = 0;
      const auto r = cli("recognize" + group + " --format json --pattern '" + pattern.dump() + "'");
      REQUIRE(r.status == 0);
      CHECK(nlohmann::json::parse(r.out).at("w") == perm);
    }
  }
}

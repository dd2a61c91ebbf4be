#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "shellcert/cli.hpp"
#include "shellcert/gallai.hpp"
#include "shellcert/io.hpp"
#include "shellcert/shelling.hpp"

using namespace shellcert;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string fixture(const std::string& name) { return std::string(SHELLCERT_FIXTURE_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Timing lines vary between runs.
std::string stable(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (line.rfind("elapsed_ms:", 0) == 0) continue;
    out += line + "\n";
  }
  return out;
}

// Set SHELLCERT_UPDATE_GOLDEN=1 to rewrite the golden files.
void check_golden(const std::string& name, std::string actual) {
  const std::string dir = std::string(SHELLCERT_FIXTURE_DIR) + "/";
  for (auto at = actual.find(dir); at != std::string::npos; at = actual.find(dir)) {
    actual.replace(at, dir.size(), "fixtures/");
  }
  const std::filesystem::path path = std::filesystem::path(SHELLCERT_GOLDEN_DIR) / name;
  if (std::getenv("SHELLCERT_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << actual;
  }
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream expected;
  expected << in.rdbuf();
  CHECK(expected.str() == actual);
}

}  // namespace

TEST_CASE("shell find on the non-shellable fixture") {
  const Run r = run({"shell", "find", fixture("quasi_linear.cx")});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: exhausted: not shellable\n") != std::string::npos);
  check_golden("shell_find_quasi_linear.txt", stable(r.out));

  const auto doc = io::parse_complex(io::read_file(fixture("quasi_linear.cx")));
  CHECK(find_shelling(doc.complex).outcome == SearchOutcome::exhausted);
}

TEST_CASE("shell find on a shellable complex") {
  const Run r = run({"shell", "find", fixture("chain.cx")});
  CHECK(r.code == 0);
  check_golden("shell_find_chain.txt", stable(r.out));
  CHECK(r.out.find("flag clean_face_ring") != std::string::npos);
  CHECK(r.out.find("flag cohen_macaulay") != std::string::npos);

  const Run par = run({"shell", "find", fixture("chain.cx"), "--parallel"});
  CHECK(par.code == 0);
}

TEST_CASE("gallai complex of the seven-edge graph") {
  const Run r = run({"gallai", "complex", fixture("two_triangles.g")});
  CHECK(r.code == 0);
  CHECK(r.out.find("facets: 1={1,2} 2={1,3,4} 3={1,3,5} 4={2,3,4} 5={2,3,5} 6={3,5,6} 7={4,5,6}\n") !=
        std::string::npos);
  check_golden("gallai_complex_two_triangles.txt", r.out);
}

TEST_CASE("gallai graph and dot output") {
  const Run r = run({"gallai", "graph", fixture("hexagon_chords.g")});
  CHECK(r.code == 0);
  check_golden("gallai_graph_hexagon_chords.txt", r.out);
  const Run dot = run({"gallai", "graph", fixture("hexagon_chords.g"), "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph gallai {", 0) == 0);
}

TEST_CASE("gallai shell on trees") {
  Run r = run({"gallai", "shell", fixture("path5.g")});
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 1 2 3\n") != std::string::npos);
  check_golden("gallai_shell_path5.txt", r.out);

  r = run({"gallai", "shell", fixture("branched.g")});
  CHECK(r.code == 0);
  check_golden("gallai_shell_branched.txt", r.out);

  r = run({"gallai", "shell", fixture("two_triangles.g")});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: not a tree") != std::string::npos);
}

TEST_CASE("shell check and oracle verify") {
  // Canonical positions: 1={1,2,3} 2={1,4,5} 3={2,3,4} 4={3,4,5}.
  Run r = run({"shell", "check", fixture("quasi_linear.cx"), "--order", "1,3,4,2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("first_failure: step 4\n") != std::string::npos);
  check_golden("shell_check_quasi_linear.txt", r.out);

  r = run({"shell", "check", fixture("chain.cx"), "--order", "2,1,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("definition_check: agrees") != std::string::npos);

  r = run({"oracle", "verify", fixture("chain.cx"), "--order", "1,2,3"});
  CHECK(r.code == 0);
  r = run({"oracle", "verify", fixture("quasi_linear.cx"), "--order", "1,3,4,2"});
  CHECK(r.code == 1);

  r = run({"shell", "check", fixture("chain.cx"), "--order", "1,2"});
  CHECK(r.code == 2);
  r = run({"shell", "check", fixture("chain.cx"), "--order", "1,2,x"});
  CHECK(r.code == 2);
}

TEST_CASE("leaf and tree-check") {
  Run r = run({"leaf", fixture("chain.cx"), "--facet", "1"});
  CHECK(r.code == 0);
  check_golden("leaf_chain_1.txt", r.out);
  r = run({"leaf", fixture("chain.cx"), "--facet", "2"});
  CHECK(r.code == 1);
  r = run({"leaf", fixture("chain.cx"), "--facet", "9"});
  CHECK(r.code == 2);

  r = run({"tree-check", fixture("chain.cx")});
  CHECK(r.code == 0);
  r = run({"tree-check", fixture("quasi_linear.cx")});
  CHECK(r.code == 1);
}

TEST_CASE("ideal export") {
  Run r = run({"ideal", "facet", fixture("quasi_linear.cx")});
  CHECK(r.code == 0);
  CHECK(r.out == "ring 5\nx1*x2*x3\nx1*x4*x5\nx2*x3*x4\nx3*x4*x5\n");
  r = run({"ideal", "nonface", fixture("quasi_linear.cx")});
  CHECK(r.code == 0);
  CHECK(r.out == "ring 5\nx2*x5\nx1*x2*x4\nx1*x3*x4\nx1*x3*x5\n");

  r = run({"--json", "ideal", "facet", fixture("chain.cx")});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ring"] == 5);
  CHECK(j["pure_squarefree"] == true);
}

TEST_CASE("exit codes for errors and budgets") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"shell", "find", fixture("missing.cx")}).code == 2);
  CHECK(run({"shell", "find", fixture("path5.g")}).code == 2);
  const Run budget = run({"shell", "find", fixture("quasi_linear.cx"), "--budget", "2"});
  CHECK(budget.code == 3);
  CHECK(budget.out.find("verdict: budget exceeded") != std::string::npos);
  CHECK(run({"--help"}).code == 0);

  const auto dir = std::filesystem::temp_directory_path();
  const auto loop = dir / "shellcert_loop.g";
  std::ofstream(loop) << "graph 2\n1 1\n";
  const Run bad = run({"gallai", "complex", loop.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("loop") != std::string::npos);

  const auto big = dir / "shellcert_big.cx";
  std::ofstream(big) << "n: 21\nfacets: [[1, 21]]\n";
  CHECK(run({"ideal", "nonface", big.string()}).code == 3);
}

TEST_CASE("json and text renderings carry the same verdict and certificate") {
  const std::vector<std::vector<std::string>> queries{
      {"shell", "find", fixture("chain.cx")},
      {"shell", "find", fixture("quasi_linear.cx")},
      {"gallai", "shell", fixture("branched.g")},
      {"shell", "check", fixture("chain.cx"), "--order", "1,2,3"},
      {"leaf", fixture("quasi_linear.cx"), "--facet", "2"}};
  for (const auto& q : queries) {
    const Run text = run(q);
    auto jq = q;
    jq.insert(jq.begin(), "--json");
    const Run json = run(jq);
    CHECK(text.code == json.code);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(text.out.find("verdict: " + j["verdict"].get<std::string>() + "\n") != std::string::npos);
    CHECK(j["affirmative"] == (text.code == 0));
    if (j.contains("certificate")) {
      std::string order = "order:";
      for (const auto& p : j["certificate"]["order"]) order += " " + std::to_string(p.get<int>());
      CHECK(text.out.find(order + "\n") != std::string::npos);
      for (const auto& step : j["certificate"]["steps"]) {
        std::string line = "step " + std::to_string(step["step"].get<int>()) + ":";
        for (const auto& v : step["vertices"]) line += " " + std::to_string(v.get<int>());
        CHECK(text.out.find(line + "\n") != std::string::npos);
      }
    } else {
      CHECK(text.out.find("order:") == std::string::npos);
    }
  }
}

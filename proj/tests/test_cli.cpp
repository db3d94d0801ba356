#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "iip/fixtures.hpp"
#include "iip/json_io.hpp"
#include "support.hpp"

using namespace support;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "iipcone");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = iip::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("iipcone-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string write_fixtures(const fs::path& dir) {
  REQUIRE(run({"fixtures", "--write", dir.string()}).code == 0);
  return dir.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("fixtures: list, reproduce, and catch a perturbed file") {
  Run list = run({"fixtures", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out == "R1\nR2\nR3\n");

  Run full = run({"fixtures", "--run"});
  CHECK(full.code == 0);
  CHECK(full.out.find("3 fixtures, 0 mismatches") != std::string::npos);

  const fs::path dir = scratch("fixtures");
  write_fixtures(dir);
  CHECK(run({"fixtures", "--run", "--dir", dir.string()}).code == 0);

  Json r1 = read_json_file(dir / "R1.json");
  r1["A"][0][0] = "2";
  write_json_file(dir / "R1.json", r1);
  Run bad = run({"fixtures", "--run", "--dir", dir.string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("A^{\\dagger}") != std::string::npos);
}

TEST_CASE("op") {
  const fs::path dir = scratch("op");
  write_fixtures(dir);
  const std::string r1 = (dir / "R1.json").string();

  Run inv = run({"op", "imp-inverse", r1});
  REQUIRE(inv.code == 0);
  const Json got = Json::parse(inv.out);
  CHECK(matrix_from_json(got["result"]["matrix"]) == mat(2, {{2, 0}, {0, -1}, {0, 1}}));

  Run dual = run({"op", "dual-cone", "--weight", "N", r1});
  REQUIRE(dual.code == 0);
  const PolyCone k = cone_from_json(Json::parse(dual.out)["result"]);
  CHECK(cone_equal(k, PolyCone::from_generators(3, {vec({1, 0, 0}), vec({0, -1, 0}), vec({0, 0, -1})})));

  Run eucl = run({"op", "dual-cone", "--weight", "I", r1});
  REQUIRE(eucl.code == 0);
  CHECK(cone_equal(cone_from_json(Json::parse(eucl.out)["result"]), PolyCone::orthant(3)));

  const fs::path id3 = dir / "identity3.json";
  write_json_file(id3, Json::parse(R"({"A": [[1,0,0],[0,1,0],[0,0,1]]})"));
  Run mp = run({"op", "mp-inverse", id3.string()});
  REQUIRE(mp.code == 0);
  CHECK(matrix_from_json(Json::parse(mp.out)["result"]) == RatMatrix::identity(3));

  Run img = run({"op", "image-cone", (dir / "R2.json").string()});
  REQUIRE(img.code == 0);
  CHECK(cone_equal(cone_from_json(Json::parse(img.out)["result"]), PolyCone::from_generators(2, {vec({1, 1})})));

  Run adj = run({"--text", "op", "adjoint", r1});
  CHECK(adj.code == 0);
  CHECK_FALSE(adj.out.empty());
}

TEST_CASE("verify: exit codes and matching renderings") {
  const fs::path dir = scratch("verify");
  write_fixtures(dir);
  for (const char* label : {"R1", "R2", "R3"}) {
    CAPTURE(label);
    const std::string file = (dir / (std::string(label) + ".json")).string();
    Run text = run({"verify", file, "--lemmas"});
    Run json = run({"--json", "verify", file, "--lemmas"});
    CHECK(text.code == 0);
    CHECK(json.code == 0);
    const Json verdict = Json::parse(json.out)["verdict"];
    for (const auto& [bit, value] : verdict.items()) {
      if (bit == "hypotheses_hold" || bit == "lemma_defect") {
        continue;
      }
      CAPTURE(bit);
      const std::string line = bit + ": " + (value.get<bool>() ? "true" : "false");
      CHECK(text.out.find(line) != std::string::npos);
    }
  }
  Run r2 = run({"verify", (dir / "R2.json").string()});
  CHECK(r2.out.find("cond_i: true") != std::string::npos);
  CHECK(r2.out.find("cond_iii: true") != std::string::npos);
  CHECK(r2.out.find("equivalence_ok: true") != std::string::npos);
  Run r1 = run({"verify", (dir / "R1.json").string(), "--lemmas"});
  CHECK(r1.out.find("lemmas") != std::string::npos);
  CHECK(r1.out.find("witnesses") != std::string::npos);
  Run r3 = run({"verify", (dir / "R3.json").string()});
  CHECK(r3.code == 0);
  CHECK(r3.out.find("caveat: M A != A N") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"search", "--budget", "0"}).code == 2);
  CHECK(run({"search", "--predicate", "nope"}).code == 2);
  CHECK(run({"search", "--n-max", "20"}).code == 2);
  CHECK(run({"op", "transpose", "x.json"}).code == 2);
  CHECK(run({"verify", "/nonexistent.json"}).code == 2);
  CHECK(run({"--json", "--text", "fixtures"}).code == 2);

  const fs::path dir = scratch("errors");
  std::ofstream(dir / "float.json") << R"({"A": [[0.5, 1]]})";
  Run f = run({"verify", (dir / "float.json").string()});
  CHECK(f.code == 2);
  CHECK(f.err.find("/A/0/0") != std::string::npos);
  std::ofstream(dir / "broken.json") << "{";
  CHECK(run({"verify", (dir / "broken.json").string()}).code == 2);
  std::ofstream(dir / "weight.json") << R"({"A": [[1, 1]], "N": [[1, 1], [0, 1]]})";
  CHECK(run({"verify", (dir / "weight.json").string()}).code == 2);
  CHECK(run({"op", "dual-cone", "--weight", "N", (dir / "float.json").string()}).code == 2);
}

TEST_CASE("search writes found instances that re-verify") {
  const fs::path dir = scratch("search");
  Run s = run({"search", "--predicate", "theorem34-reverse-fails", "--budget", "200", "--seed", "7", "--out",
               dir.string()});
  CHECK(s.code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    const Instance inst = read_instance(e.path());
    CHECK(find_predicate("theorem34-reverse-fails")->test(verify_main(inst)));
    ++files;
  }
  CHECK(files > 0);
  CHECK(s.out.find(std::to_string(files) + " found") != std::string::npos);

  Run j = run({"--json", "--seed", "7", "search", "--predicate", "theorem34-reverse-fails", "--budget", "200"});
  CHECK(Json::parse(j.out)["found"].size() == files);
  CHECK(Json::parse(j.out)["seed"] == 7);
}

}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rlat/cli.hpp"
#include "rlat/io.hpp"
#include "support.hpp"

using namespace rlat;

namespace {
  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string a6_path() {
    return test::fixture_path("a6.json");
  }

  std::string read_file(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Writes s to a temporary file and returns the path.
  std::string write_temp(std::string const& name, std::string const& text) {
    std::string const path = std::string(RLAT_TEST_TMP_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
  }
}  // namespace

TEST_CASE("golden text reports") {
  struct Golden {
    std::vector<std::string> args;
    char const*              file;
  };
  std::vector<Golden> const cases = {
      {{"filters", a6_path()}, "a6_filters.txt"},
      {{"spectrum", a6_path()}, "a6_spectrum.txt"},
      {{"coann", a6_path(), "--base", "c,d,1"}, "a6_coann.txt"},
      {{"omega", a6_path(), "--base", "d,1"}, "a6_omega.txt"},
      {{"normality", a6_path()}, "a6_normality.txt"},
  };
  for (auto const& g : cases) {
    CAPTURE(g.file);
    auto const r = call(g.args);
    CHECK(r.code == kExitOk);
    CHECK(r.out == read_file(std::string(RLAT_GOLDEN_DIR) + "/" + g.file));
    CHECK(call(g.args).out == r.out);
  }
}

TEST_CASE("coannihilator of a set") {
  auto const r = call({"coann", a6_path(), "--base", "c,d,1", "--of", "a"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{c,d,1}\n");
  CHECK(call({"coann", a6_path(), "--base", "c,d,1", "--of", "c"}).out
        == "{0,a,b,c,d,1}\n");
}

TEST_CASE("generated base filter") {
  auto const r = call({"spectrum", a6_path(), "--base", "c", "--gen"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("{c,d,1}") != std::string::npos);
}

TEST_CASE("json reports round-trip byte for byte") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"filters", a6_path(), "--format", "json"},
           {"spectrum", a6_path(), "--format", "json"},
           {"coann", a6_path(), "--base", "c,d,1", "--format", "json"},
           {"omega", a6_path(), "--base", "d,1", "--format", "json"},
           {"normality", a6_path(), "--format", "json"},
           {"verify", a6_path(), "--format", "json"},
           {"validate", a6_path(), "--format", "json"}}) {
    CAPTURE(args[0]);
    auto const r = call(args);
    CHECK(r.code == kExitOk);
    Json const j = Json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["tool"] == kToolName);
    CHECK(j["version"] == kToolVersion);
    CHECK(j["command"] == args[0]);
    CHECK(j["structure"] == "A6");
  }
}

TEST_CASE("verify passes on the fixtures") {
  for (char const* f : {"a6.json", "chain2.json", "chain3-godel.json", "chain3-luk.json"}) {
    auto const r = call({"verify", test::fixture_path(f), "--battery", "all"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find(", 0 failures") != std::string::npos);
  }
  CHECK(call({"verify", a6_path(), "--battery", "omega"}).code == kExitOk);
  CHECK(call({"verify", a6_path(), "--battery", "nonsense"}).code == kExitUsage);
}

TEST_CASE("exit codes") {
  auto const unknown = call({"coann", a6_path(), "--base", "c,e,1"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("'e'") != std::string::npos);
  CHECK(unknown.out.empty());

  auto const not_filter = call({"omega", a6_path(), "--base", "b,d,1"});
  CHECK(not_filter.code == kExitUsage);
  CHECK(not_filter.err.find("NotAFilter") != std::string::npos);

  CHECK(call({"filters", "/nonexistent.json"}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"normality", a6_path(), "--assert-normal"}).code == kExitOk);

  std::string const nn = write_temp("non_normal.json",
                                    structure_to_json(test::non_normal()).dump(2));
  CHECK(call({"normality", nn, "--assert-normal"}).code == kExitFailed);
  CHECK(call({"normality", nn}).code == kExitOk);

  Structure bad = test::a6();
  bad.times.at(*bad.find("a"), *bad.find("c")) = *bad.find("a");
  bad.times.at(*bad.find("c"), *bad.find("a")) = *bad.find("a");
  std::string const bad_path = write_temp("tampered.json", structure_to_json(bad).dump(2));
  auto const v = call({"validate", bad_path});
  CHECK(v.code == kExitFailed);
  CHECK(call({"filters", bad_path}).code == kExitUsage);
}

TEST_CASE("malformed files") {
  std::string const garbage = write_temp("garbage.json", "{ not json");
  CHECK(call({"validate", garbage}).code == kExitUsage);
  std::string const mismatch = write_temp(
      "mismatch.json",
      R"({"name":"x","elements":["0","1"],"bot":"0","top":"1","order":[["0","1"]],
          "join":{"0":{"0":"0","1":"0"},"1":{"0":"0","1":"1"}},
          "meet":{"0":{"0":"0","1":"0"},"1":{"0":"0","1":"1"}},
          "times":{"0":{"0":"0","1":"0"},"1":{"0":"0","1":"1"}},
          "residuum":{"0":{"0":"1","1":"1"},"1":{"0":"0","1":"1"}}})");
  auto const r = call({"validate", mismatch});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("MalformedTables") != std::string::npos);
}

TEST_CASE("hasse diagram export") {
  auto const r = call({"export-dot", a6_path(), "--what", "hasse"});
  CHECK(r.code == kExitOk);
  for (char const* node : {"n0 [label=\"0\"]", "n1 [label=\"a\"]", "n2 [label=\"b\"]",
                           "n3 [label=\"c\"]", "n4 [label=\"d\"]", "n5 [label=\"1\"]"}) {
    CHECK(r.out.find(node) != std::string::npos);
  }
  std::size_t edges = 0;
  for (std::size_t p = r.out.find(" -- "); p != std::string::npos; p = r.out.find(" -- ", p + 1)) {
    ++edges;
  }
  CHECK(edges == 6);
  // 0-a, 0-c, a-b, b-d, c-d, d-1
  for (char const* e : {"n0 -- n1;", "n0 -- n3;", "n1 -- n2;", "n2 -- n4;", "n3 -- n4;", "n4 -- n5;"}) {
    CHECK(r.out.find(e) != std::string::npos);
  }
  auto const f = call({"export-dot", a6_path(), "--what", "filters"});
  CHECK(f.code == kExitOk);
  CHECK(f.out.rfind("graph ", 0) == 0);
  CHECK(call({"export-dot", a6_path(), "--what", "bogus"}).code == kExitUsage);
}

TEST_CASE("census output") {
  auto const r = call({"search", "--size", "3", "--size", "4"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string        line;
  std::vector<Json>  records;
  while (std::getline(lines, line)) {
    records.push_back(Json::parse(line));
  }
  REQUIRE(records.size() == 10);
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    Structure const s = structure_from_json(records[i]);
    CHECK(validate_structure(s).valid());
    CHECK(records[i]["canonical_key"] == to_hex(canonical_key(s)));
  }
  Json const& stats = records.back()["stats"];
  CHECK(stats["counts"]["3"] == 2);
  CHECK(stats["counts"]["4"] == 7);
  CHECK(stats["total"] == 9);

  std::string const out_path = std::string(RLAT_TEST_TMP_DIR) + "/census3.ndjson";
  auto const w = call({"search", "--size", "3", "--out", out_path});
  CHECK(w.code == kExitOk);
  CHECK(read_file(out_path) == call({"search", "--size", "3"}).out);

  auto const base = call({"search", "--size", "6", "--base-lattice", a6_path()});
  CHECK(base.code == kExitOk);
  CHECK(base.out.find(to_hex(canonical_key(test::a6()))) != std::string::npos);

  CHECK(call({"search", "--size", "9"}).code == kExitUsage);
  CHECK(call({"search", "--size", "5", "--base-lattice", a6_path()}).code == kExitUsage);
}

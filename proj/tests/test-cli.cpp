//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "catch_amalgamated.hpp"
#include "json.hpp"

#include "cli.hpp"

namespace {

  using nlohmann::json;

  struct Result {
    int         status;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          status = cycred::cli::run(args, out, err);
    return {status, out.str(), err.str()};
  }

  json run_json(std::vector<std::string> args, int expected = 0) {
    args.insert(args.begin(), "--json");
    auto const r = run(args);
    INFO(r.err);
    REQUIRE(r.status == expected);
    return json::parse(r.out);
  }

  std::filesystem::path temp_path(std::string const& name) {
    return std::filesystem::temp_directory_path()
           / ("cycred-test-" + std::to_string(::getpid()) + "-" + name);
  }

  void write(std::filesystem::path const& p, std::string const& text) {
    std::ofstream(p) << text;
  }

}  // namespace

TEST_CASE("cli: reductions", "[cli]") {
  auto j = run_json({"reduce", "txyYzT"});
  REQUIRE(j["command"] == "reduce");
  REQUIRE(j["outputs"]["word"] == "txzT");
  REQUIRE(j["traces"]["trace"] == json::parse(R"([[2, 3, "internal"]])"));

  j = run_json({"cycreduce", "xyzxYX"});
  REQUIRE(j["outputs"]["core"] == "zx");
  REQUIRE(j["outputs"]["conjugator"] == "xy");

  j = run_json({"cprod", "txy", "YzT"});
  REQUIRE(j["outputs"]["product"] == "xz");
  j = run_json({"prod", "txy", "YzT"});
  REQUIRE(j["outputs"]["product"] == "txzT");

  j = run_json({"anyorder", "xXyX", "--policy", "external-first"});
  REQUIRE(j["outputs"]["word"] == "Xy");
  REQUIRE(j["outputs"]["rotation"] == 1);
}

TEST_CASE("cli: spaced syntax and explicit alphabet", "[cli]") {
  auto j = run_json(
      {"--syntax", "spaced", "--alphabet", "a,b", "cprod", "a b", "b^-1 a"});
  REQUIRE(j["outputs"]["product"] == "a a");
  REQUIRE(run({"--alphabet", "a", "reduce", "ab"}).status == 2);
}

TEST_CASE("cli: classify and puzo", "[cli]") {
  auto j = run_json({"classify", "txy", "YzT"});
  REQUIRE(j["witnesses"]["case"] == 2);
  REQUIRE(j["witnesses"]["t"] == "t");

  j = run_json({"puzo", "xz", "zx"});
  REQUIRE(j["outputs"]["shift"] == 2);
  REQUIRE(j["outputs"]["uv_product"] == "xzzx");
  REQUIRE(j["outputs"]["vu_product"] == "zxxz");
}

TEST_CASE("cli: puzo emits a collapse file that collapses", "[cli]") {
  auto const path = temp_path("collapse.json");
  auto       j    = run_json({"puzo", "xy", "yx", "--emit-collapse", path.string()});
  auto const n    = j["witnesses"]["collapse_input"]["n"].get<std::size_t>();
  REQUIRE(j["witnesses"]["schedule_length"] == 2 * n + 3);
  j = run_json({"collapse", "--file", path.string()});
  REQUIRE(j["outputs"]["trivial"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("cli: collapse failures", "[cli]") {
  auto const path = temp_path("bad-collapse.json");
  write(path, R"({"terms": [["1", "x"], ["1", "y"]],
                  "ops": [{"type": "deletion", "pos": 1}]})");
  auto j = run_json({"collapse", "--file", path.string()}, 1);
  REQUIRE(j["outputs"]["failed_op"] == 0);
  REQUIRE(j["outputs"]["trivial"] == false);
  write(path, R"({"terms": [["1", "x"]], "ops": [{"type": "swap", "pos": 1}]})");
  REQUIRE(run({"collapse", "--file", path.string()}).status == 2);
  write(path, "{ not json");
  REQUIRE(run({"collapse", "--file", path.string()}).status == 2);
  std::filesystem::remove(path);
  REQUIRE(run({"collapse", "--file", path.string()}).status == 2);
}

TEST_CASE("cli: latin", "[cli]") {
  auto j = run_json({"latin", "xy", "x", "--count", "3"});
  REQUIRE(j["witnesses"]["s"] == "y");
  REQUIRE(j["witnesses"]["rule"] == "2.1");
  REQUIRE(j["outputs"]["pairs"].size() == 3);
  REQUIRE(run({"latin", "xX", "x"}).status == 1);
}

TEST_CASE("cli: closure and query", "[cli]") {
  auto const rel = temp_path("relators.txt");
  auto const set = temp_path("set.txt");
  write(rel, "xy\ny\n");
  auto j = run_json({"--alphabet",
                     "x,y",
                     "closure",
                     "--relators",
                     rel.string(),
                     "--maxlen",
                     "4",
                     "--workers",
                     "2",
                     "--out",
                     set.string()});
  REQUIRE(j["outputs"]["saturated"] == true);
  j = run_json({"closure-query", "--set", set.string(), "x"});
  REQUIRE(j["outputs"]["member"] == true);
  j = run_json({"closure-query", "--set", set.string(), "xxxxx"}, 1);
  REQUIRE(j["outputs"]["beyond_cap"] == true);
  std::filesystem::remove(rel);
  std::filesystem::remove(set);
}

TEST_CASE("cli: usage errors and human output", "[cli]") {
  REQUIRE(run({}).status == 2);
  REQUIRE(run({"frobnicate"}).status == 2);
  REQUIRE(run({"reduce"}).status == 2);
  auto const bad = run({"reduce", "x#y"});
  REQUIRE(bad.status == 2);
  REQUIRE(bad.err.rfind("cycred: parse error at byte 1", 0) == 0);
  auto const human = run({"reduce", "xXy"});
  REQUIRE(human.status == 0);
  REQUIRE(human.out.rfind("reduce\n", 0) == 0);
  REQUIRE(human.out.find("word: y") != std::string::npos);
  // Output is stable across runs.
  REQUIRE(run({"--json", "puzo", "txy", "YzT"}).out
          == run({"--json", "puzo", "txy", "YzT"}).out);
}

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "app/app.hpp"

using namespace fprlab;
using namespace fprlab::app;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fprlab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("config file") {
  const auto file = scratch("run.cfg");
  write(file, "# comment\nseed = 42\nbudget=1000  # trailing\n\nformat = csv\n");
  const auto config = load_config(file);
  CHECK(config.seed == 42);
  CHECK(config.budget == 1000);
  CHECK(config.format == Format::kCsv);
  CHECK(config.spread_cap == RunConfig{}.spread_cap);

  write(file, "colour = blue\n");
  CHECK_THROWS_AS(load_config(file), InvalidArgument);
  write(file, "order_cap = 0\n");
  CHECK_THROWS_AS(load_config(file), InvalidArgument);
  write(file, "seed\n");
  CHECK_THROWS_AS(load_config(file), InvalidArgument);
  write(file, "seed = -3\n");
  CHECK_THROWS_AS(load_config(file), InvalidArgument);
}

TEST_CASE("FPRLAB_SEED") {
  RunConfig config;
  ::setenv("FPRLAB_SEED", "99", 1);
  apply_environment(config);
  ::unsetenv("FPRLAB_SEED");
  CHECK(config.seed == 99);
}

TEST_CASE("report document") {
  RunConfig config;
  const auto report = cmd_fpr("alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)", config, {"(1,2)(3,4)"});
  const Json doc = to_json(report, config);
  CHECK(doc["schema"] == "fprlab/1");
  CHECK(doc["spec"] == "alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)");
  CHECK(doc["config"]["seed"] == config.seed);
  const auto& rows = doc["result"]["fpr"]["rows"];
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto a = std::make_pair(rows[i - 1]["order"].get<int>(), rows[i - 1]["size"].get<int>());
    const auto b = std::make_pair(rows[i]["order"].get<int>(), rows[i]["size"].get<int>());
    CHECK(a <= b);
  }
  CHECK(rows[1]["fpr"] == "1/3");
  CHECK(doc["result"]["elements"][0]["fpr"] == "1/3");
}

TEST_CASE("csv flattening") {
  Json doc{{"a", 1}, {"b", Json{{"c", "x,y"}, {"d", Json::array()}}}, {"e", Json::array({true, nullptr})}};
  CHECK(to_csv(doc) == "key,value\na,1\nb.c,\"x,y\"\nb.d,[]\ne.0,true\ne.1,null\n");
}

TEST_CASE("empty survivors serialize as an empty list") {
  const auto report = cmd_genus_screen("psl:2:23@projective", RunConfig{}, 0, true, 8);
  CHECK(report.result["survivors"] == Json::array());
  CHECK(render(report, RunConfig{}).find("\"survivors\": []") != std::string::npos);
}

TEST_CASE("spread report carries method and witnesses") {
  const auto report = cmd_spread("alt:5", RunConfig{});
  CHECK(report.result["method"] == "set-cover exact");
  CHECK(report.result["s"] == 2);
  CHECK(report.result["s_failing"].size() == 3);
}

TEST_CASE("reproducibility") {
  RunConfig config;
  config.seed = 12345;
  auto once = [&] {
    return render(cmd_base("sym:6@ksets:2", config, BaseMode::kProb, 3, 20000), config) +
           render(cmd_pgen2("alt:7", config, 3000), config) + render(cmd_graph("alt:5", config, false), config);
  };
  const std::string a = once();
  CHECK(a == once());
  config.format = Format::kCsv;
  CHECK(once() == once());
  config.format = Format::kJson;
  config.seed = 54321;
  CHECK(a != once());
}

TEST_CASE("caps") {
  RunConfig config;
  config.spread_cap = 50;
  CHECK_THROWS_AS(cmd_spread("alt:5", config), CapExceeded);
  config = RunConfig{};
  config.degree_cap = 5;
  CHECK_THROWS_AS(cmd_classes("sym:4@ksets:2", config), CapExceeded);
  config = RunConfig{};
  CHECK_THROWS_AS(cmd_pgen2("sym:7", config, 0), CapExceeded);
}

TEST_CASE("genus-of and uspread from files") {
  const auto tuple = scratch("tuple.txt");
  write(tuple, "(1,2)\n(1,2,3,4,5)\n# product-one completion\n(1,5,4,3)\n");
  const auto r = cmd_genus_of("sym:5", RunConfig{}, tuple);
  CHECK(r.result["tuple"]["genus"] == 0);
  CHECK(r.result["tuple"]["indices"] == Json::array({1, 4, 3}));

  const auto og = scratch("overgroups.txt");
  write(og, "(1,2,3,4,5),(2,5)(3,4)\n");
  const auto u = cmd_uspread("alt:5", RunConfig{}, "(1,2,3,4,5)", 2, og);
  CHECK(u.result["certified"] == true);
  CHECK(u.result["max_total"] == "1/3");
  CHECK(u.result["trust_note"].is_string());
}

TEST_CASE("reproduce: pass, mismatch, unknown table") {
  const RunConfig config;
  const auto report = cmd_reproduce("all", config, FPRLAB_TEST_DATA_DIR);
  CHECK(report.exit_code == kOk);
  CHECK(report.result["mismatches"] == 0);
  CHECK(report.result["tables"].size() == table_names(FPRLAB_TEST_DATA_DIR).size());

  const auto dir = scratch("tables");
  std::filesystem::create_directories(dir);
  write(dir / "wrong.json",
        R"({"name": "wrong", "description": "deliberately wrong", "entries": [
          {"spec": "sym:5", "kind": "base-size", "expected": {"b": 3}}]})");
  const auto bad = cmd_reproduce("wrong", config, dir);
  CHECK(bad.exit_code == kMismatch);
  CHECK(bad.result["tables"][0]["entries"][0]["cells"][0]["got"] == 4);
  CHECK_THROWS_AS(cmd_reproduce("nope", config, dir), InvalidArgument);
}

TEST_CASE("base modes") {
  const RunConfig config;
  const auto exact = cmd_base("alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)", config, BaseMode::kExact, 0, 0);
  CHECK(exact.result["b"] == 3);
  CHECK(exact.result["witness_verified"] == true);
  CHECK(exact.result["bounds"]["b_times_mu_at_least_n"] == true);
  const auto q = cmd_base("alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)", config, BaseMode::kQhat, 3, 0);
  CHECK(q.result["qhat"] == "2/3");
  CHECK(q.result["certifies_b_at_most_c"] == true);
  const auto p = cmd_base("sym:5", config, BaseMode::kProb, 3, 1000);
  CHECK(p.result["bases"] == 0);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "oracles.hpp"

using namespace tracefree::cli;
using nlohmann::json;

namespace {

std::string census_file(const std::string& name) { return oracle::data_path("census/" + name + ".txt"); }

json parse(const CommandResult& r) {
  REQUIRE(r.exit_code == kOk);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("ideals command lists relation families") {
  RunConfig config;
  json f2 = parse(cmd_ideals(census_file("4_1"), "f2", config));
  CHECK(f2["count"] == 16);
  CHECK(f2["generators"].size() == 16);
  json r = parse(cmd_ideals(census_file("4_1"), "r", config));
  CHECK(r["count"] == 1);
  json kch = parse(cmd_ideals(census_file("4_1"), "kch", config));
  CHECK(kch["count"] == 16);
  CHECK(cmd_ideals(census_file("4_1"), "zz", config).exit_code == kParseError);

  config.format = "text";
  CommandResult text = cmd_ideals(census_file("3_1"), "h", config);
  CHECK(text.exit_code == kOk);
  CHECK(text.out.find("x123^2") != std::string::npos);
}

TEST_CASE("f2 command") {
  json j = parse(cmd_f2(census_file("4_1"), RunConfig{}));
  CHECK(j["count"] == 3);
  CHECK(j["dimension"] == 0);
  CHECK(j["eliminant"]["coefficients"] == json::array({"2", "-3", "-1", "1"}));
  CHECK(j["points"][2]["pairs"]["13"]["exact"] == "2");
}

TEST_CASE("s0 command on 8_5") {
  json j = parse(cmd_s0(census_file("8_5"), RunConfig{}));
  CHECK(j["f2_count"] == 12);
  CHECK(j["s0_count"] == 13);
  CHECK(j["ghost_count"] == 0);
  int doubles = 0;
  for (const auto& p : j["f2_points"]) doubles += p["lift_status"] == "lifts:2" ? 1 : 0;
  CHECK(doubles == 1);
  CHECK(j["margins"]["smallest_rejected_residual"].is_null());
}

TEST_CASE("ghosts command on 5_2") {
  json j = parse(cmd_ghosts(census_file("5_2"), RunConfig{}));
  CHECK(j["checked"] == 4);
  CHECK(j["ghosts"].empty());
}

TEST_CASE("cover command") {
  RunConfig config;
  CHECK(parse(cmd_cover(census_file("3_1"), config))["invariant_factors"] == json::array({"3"}));
  CHECK(parse(cmd_cover(census_file("4_1"), config))["invariant_factors"] == json::array({"5"}));
  json kink = parse(cmd_cover(oracle::data_path("extra/kinked_unknot.txt"), config));
  CHECK(kink["trivial"] == true);
  CHECK(kink["order"] == "1");
  config.drop_relator = 2;
  CHECK(parse(cmd_cover(census_file("5_2"), config))["invariant_factors"] == json::array({"7"}));
}

TEST_CASE("census command") {
  RunConfig config;
  json j = parse(cmd_census(oracle::data_path("census"), config));
  REQUIRE(j["rows"].size() == 6);
  const json& fig8 = j["rows"][1];
  CHECK(fig8["file"] == "4_1.txt");
  CHECK(fig8["f2"] == 3);
  CHECK(fig8["s0"] == 3);
  CHECK(fig8["ghosts"] == 0);
  CHECK(fig8["h1_order"] == "5");
  CHECK_FALSE(fig8.contains("runtime_ms"));

  config.format = "csv";
  CommandResult csv = cmd_census(oracle::data_path("census"), config);
  CHECK(csv.out.rfind("file,knot,n,f2,s0,ghosts,h1_order,status\n", 0) == 0);

  config.format = "json";
  config.timing = true;
  CHECK(parse(cmd_census(oracle::data_path("census"), config))["rows"][0].contains("runtime_ms"));
}

TEST_CASE("census of an empty directory") {
  auto dir = std::filesystem::temp_directory_path() / "tracefree_empty_census";
  std::filesystem::create_directories(dir);
  json j = parse(cmd_census(dir.string(), RunConfig{}));
  CHECK(j["rows"].empty());
  std::filesystem::remove(dir);
}

TEST_CASE("census keeps going after a bad file") {
  auto dir = std::filesystem::temp_directory_path() / "tracefree_mixed_census";
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(census_file("3_1"), dir / "a.txt", std::filesystem::copy_options::overwrite_existing);
  std::filesystem::copy_file(oracle::data_path("extra/unlink_2component.txt"), dir / "b.txt",
                             std::filesystem::copy_options::overwrite_existing);
  {
    std::ofstream bad(dir / "c.txt");
    bad << "(1,2)\n";
  }
  json j = parse(cmd_census(dir.string(), RunConfig{}));
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["status"] == "ok");
  CHECK(j["rows"][1]["error"] == "NotZeroDimensional");
  CHECK(j["rows"][1]["dimension"] == 1);
  CHECK(j["rows"][2]["error"] == "MalformedInput");
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes") {
  RunConfig config;
  CHECK(cmd_f2(oracle::data_path("census/none.txt"), config).exit_code == kParseError);
  CommandResult nz = cmd_f2(oracle::data_path("extra/unlink_2component.txt"), config);
  CHECK(nz.exit_code == kNotZeroDimensional);
  CHECK(json::parse(nz.out)["dimension"] == 1);
  config.gb_budget = 2;
  CHECK(cmd_s0(census_file("8_5"), config).exit_code == kResourceLimit);
  config.gb_budget = 500000;
  config.tolerance = -1;
  CHECK(cmd_f2(census_file("3_1"), config).exit_code == kParseError);
  config.tolerance = 1e-9;
  config.pivot = "12";
  CHECK(cmd_s0(census_file("3_1"), config).exit_code == kParseError);
}

TEST_CASE("output is deterministic") {
  RunConfig config;
  CommandResult a = cmd_s0(census_file("8_5"), config);
  CommandResult b = cmd_s0(census_file("8_5"), config);
  CHECK(a.out == b.out);
  CHECK(cmd_census(oracle::data_path("census"), config).out == cmd_census(oracle::data_path("census"), config).out);
}

TEST_CASE("parameter and pivot options") {
  RunConfig config;
  config.parameter = "x14";
  json j = parse(cmd_f2(census_file("5_2"), config));
  CHECK(j["eliminant"]["variable"] == "x14");
  CHECK(j["eliminant"]["coefficients"] == json::array({"2", "3", "-4", "-1", "1"}));
  config.parameter.reset();
  config.pivot = "123";
  json s = parse(cmd_s0(census_file("3_1"), config));
  CHECK(s["s0_count"] == 2);
}

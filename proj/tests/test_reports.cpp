#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "adlv/report.hpp"
#include "adlv/svg.hpp"
#include "oracles.hpp"

using namespace adlv;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

RunConfig base_cfg() {
  RunConfig cfg;
  cfg.sys = "A2";
  cfg.max_len = 6;
  cfg.mode = RunConfig::Mode::FlagCensus;
  cfg.jobs = 1;
  return cfg;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("adlv_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("census row schema is stable") {
  auto lines = census_row_strings(base_cfg());
  REQUIRE(!lines.empty());
  ojson j = ojson::parse(lines.front());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expect = {
      "sys",  "x_word",          "len",        "chamber",
      "shrunken", "nonempty",    "dim",        "reuman_nonempty",
      "reuman_dim", "lau_nonempty", "nu"};
  CHECK(keys == expect);
  CHECK(j["sys"] == "A2");
  CHECK(j["len"] == 0);
  CHECK(j["nonempty"] == true);
  CHECK(j["dim"] == 0);
}

TEST_CASE("row counts match the Cayley growth oracle") {
  RunConfig cfg = base_cfg();
  cfg.max_len = 7;
  auto lines = census_row_strings(cfg);
  auto rs = RootSystem::build("A2");
  AffineWeylGroup aw(rs);
  CHECK(lines.size() == oracles::bfs_lengths(aw, 7).size());
}

TEST_CASE("rows are sorted by length then word") {
  auto lines = census_row_strings(base_cfg());
  int prev_len = -1;
  std::vector<int> prev_word;
  for (const auto& l : lines) {
    ojson j = ojson::parse(l);
    int len = j["len"].get<int>();
    std::vector<int> word = j["x_word"].get<std::vector<int>>();
    if (len == prev_len) CHECK(prev_word < word);
    CHECK(prev_len <= len);
    prev_len = len;
    prev_word = word;
  }
}

TEST_CASE("output is independent of the worker count") {
  RunConfig one = base_cfg();
  RunConfig four = base_cfg();
  four.jobs = 4;
  CHECK(census_row_strings(one) == census_row_strings(four));

  one.mode = RunConfig::Mode::CompareB;
  four.mode = RunConfig::Mode::CompareB;
  one.nu = {1, 1};
  four.nu = {1, 1};
  CHECK(census_row_strings(one) == census_row_strings(four));
}

TEST_CASE("summary equals the fold of the rows") {
  RunConfig cfg = base_cfg();
  cfg.mode = RunConfig::Mode::Reuman;
  std::ostringstream out;
  CensusSummary s = run_census(cfg, out);
  Int rows = 0, nonempty = 0, shrunken = 0;
  std::istringstream in(out.str());
  std::string line;
  while (std::getline(in, line)) {
    ojson j = ojson::parse(line);
    ++rows;
    if (j["nonempty"].get<bool>()) ++nonempty;
    if (j["shrunken"].get<bool>()) ++shrunken;
  }
  CHECK(s.rows == rows);
  CHECK(s.nonempty_count == nonempty);
  CHECK(s.reuman_checked == shrunken);
  CHECK(s.reuman_disagree == 0);
  CHECK_FALSE(s.violation);
}

TEST_CASE("csv mirrors the json fields in order") {
  RunConfig cfg = base_cfg();
  cfg.format = RunConfig::Format::Csv;
  auto lines = census_row_strings(cfg);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] ==
        "sys,x_word,len,chamber,shrunken,nonempty,dim,reuman_nonempty,"
        "reuman_dim,lau_nonempty,nu");
  // identity row: empty word cell, null dims empty
  CHECK(lines[1] == "A2,\"\",0,0,false,true,0,false,,,\"0 0\"");
}

TEST_CASE("cache: warm rerun does no folding work") {
  TempDir tmp;
  RunConfig cfg = base_cfg();
  cfg.max_len = 4;
  cfg.cache_dir = (tmp.path / "cache").string();
  auto cold = census_row_strings(cfg);
  auto before = fold_invocations();
  auto warm = census_row_strings(cfg);
  auto after = fold_invocations();
  CHECK(cold == warm);
  CHECK(before == after);
}

TEST_CASE("cache: corrupted and mixed-version entries are recomputed") {
  TempDir tmp;
  RunConfig cfg = base_cfg();
  cfg.max_len = 3;
  cfg.cache_dir = (tmp.path / "cache").string();
  auto cold = census_row_strings(cfg);
  // corrupt every cache file
  for (const auto& entry : fs::directory_iterator(cfg.cache_dir)) {
    std::ofstream f(entry.path());
    f << "{\"schema\":999,\"key\":\"stale\",\"value\":\"{}\"}";
  }
  auto rebuilt = census_row_strings(cfg);
  CHECK(cold == rebuilt);
  // outright garbage
  for (const auto& entry : fs::directory_iterator(cfg.cache_dir)) {
    std::ofstream f(entry.path());
    f << "not json at all";
  }
  CHECK(census_row_strings(cfg) == cold);
}

TEST_CASE("partial-folding and grass and levi-check modes produce rows") {
  RunConfig cfg = base_cfg();
  cfg.mode = RunConfig::Mode::PartialFolding;
  cfg.orientation_w = 2;
  cfg.max_len = 4;
  auto lines = census_row_strings(cfg);
  REQUIRE(!lines.empty());
  ojson j = ojson::parse(lines.front());
  CHECK(j["fold_class"] == "dark");
  CHECK(j["w"] == 2);

  cfg.mode = RunConfig::Mode::GrassCensus;
  cfg.max_len = 6;
  auto glines = census_row_strings(cfg);
  REQUIRE(!glines.empty());
  for (const auto& l : glines) {
    ojson g = ojson::parse(l);
    if (g["nonempty"].get<bool>()) CHECK(g["dim"].get<Int>() >= 0);
  }

  cfg.mode = RunConfig::Mode::LeviCheck;
  cfg.max_len = 6;
  std::ostringstream out;
  CensusSummary s = run_census(cfg, out);
  CHECK(s.rows > 0);
  CHECK(s.inconsistent == 0);
  CHECK_FALSE(s.violation);
}

TEST_CASE("config validation") {
  RunConfig cfg = base_cfg();
  cfg.sys = "E8";
  CHECK_THROWS_AS(census_row_strings(cfg), ConfigError);
  cfg = base_cfg();
  cfg.nu = {1};
  CHECK_THROWS_AS(census_row_strings(cfg), ConfigError);
  cfg = base_cfg();
  cfg.jobs = 0;
  CHECK_THROWS_AS(census_row_strings(cfg), ConfigError);
  cfg = base_cfg();
  cfg.mode = RunConfig::Mode::Lau;
  cfg.sys = "C2";
  CHECK_THROWS_AS(census_row_strings(cfg), ConfigError);
}

TEST_CASE("apartment rendering") {
  auto rs = RootSystem::build("A2");
  AffineWeylGroup aw(rs);

  SUBCASE("tiny disk holds the chamber alcoves, one of them black") {
    double r0 = 1.0;  // between the first and second barycenter rings in A2
    auto cells = alcoves_in_disk(aw, r0);
    CHECK(cells.size() == 6);  // the W-orbit of the base alcove
    std::string svg = render_status_figure(aw, Coweight::Zero(2), r0, 1);
    CHECK(svg.find("<svg") == 0);
    std::size_t polys = 0, black = 0;
    for (std::size_t p = svg.find("<polygon"); p != std::string::npos;
         p = svg.find("<polygon", p + 1))
      ++polys;
    for (std::size_t p = svg.find("fill=\"#000000\""); p != std::string::npos;
         p = svg.find("fill=\"#000000\"", p + 1))
      ++black;
    CHECK(polys == 6);
    CHECK(black == 2);  // the base alcove and the origin dot
    CHECK(svg.find("<circle") != std::string::npos);
  }
  SUBCASE("deterministic across worker counts") {
    std::string a = render_status_figure(aw, Coweight::Zero(2), 3.0, 1);
    std::string b = render_status_figure(aw, Coweight::Zero(2), 3.0, 3);
    CHECK(a == b);
    std::string c = render_partial_figure(aw, 1, 3.0, 1);
    std::string d = render_partial_figure(aw, 1, 3.0, 2);
    CHECK(c == d);
    CHECK(a != c);
  }
  SUBCASE("rank restriction") {
    auto a3 = RootSystem::build("A3");
    AffineWeylGroup aw3(a3);
    CHECK_THROWS_AS(alcoves_in_disk(aw3, 2.0), ConfigError);
  }
}

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hideseek/csv.hpp"
#include "hideseek/errors.hpp"
#include "hideseek/experiments.hpp"
#include "hideseek/scenario.hpp"

using namespace hideseek;

namespace {

std::vector<std::vector<std::string>> parse(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) rows.push_back(csv::split(line));
  return rows;
}

ExperimentConfig small() {
  ExperimentConfig cfg;
  cfg.m = 6;
  cfg.trials = 20;
  cfg.n1_sweep = {2, 8, 32};
  cfg.deltas = {0.2, 0.5};
  cfg.nbar2 = 3;
  cfg.geometries = 3;
  cfg.master_seed = 99;
  return cfg;
}

}  // namespace

TEST_CASE("config values") {
  ExperimentConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.sensors() == 2);
  set_config_value(cfg, "region-side", "12.5");
  set_config_value(cfg, "n1_sweep", "5, 6,7");
  set_config_value(cfg, "--deltas", "0.1,0.3");
  set_config_value(cfg, "s", "4");
  set_config_value(cfg, "seed", "18446744073709551615");
  CHECK(cfg.region_side == 12.5);
  CHECK(cfg.n1_sweep == std::vector<int>{5, 6, 7});
  CHECK(cfg.deltas == std::vector<double>{0.1, 0.3});
  CHECK(cfg.sensors() == 4);
  CHECK(cfg.master_seed == 18446744073709551615ULL);
  set_config_value(cfg, "s", "auto");
  CHECK(cfg.sensors() == 2);

  CHECK_THROWS_AS(set_config_value(cfg, "colour", "1"), ConfigError);
  CHECK_THROWS_AS(set_config_value(cfg, "m", "ten"), ConfigError);
  CHECK_THROWS_AS(set_config_value(cfg, "m", "10x"), ConfigError);
  CHECK_THROWS_AS(set_config_value(cfg, "n1", ""), ConfigError);
  for (const std::string& key : config_keys()) CHECK_NOTHROW(set_config_value(cfg, key, key == "s" ? "auto" : "1"));

  ExperimentConfig bad;
  bad.alpha = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ExperimentConfig{};
  bad.deltas = {0.5, 1.0};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ExperimentConfig{};
  bad.treasure = 11;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ExperimentConfig{};
  bad.region_side = -1;
  std::ostringstream sink;
  CHECK_THROWS_AS(run_scenario_dump(bad, sink), ConfigError);
}

TEST_CASE("config file") {
  const std::string path = "test_experiments_config.txt";
  {
    std::ofstream f(path);
    f << "# comment\n\nm = 7\n  trials=3   # trailing\nn1-sweep = 4,5\n";
  }
  ExperimentConfig cfg;
  load_config_file(cfg, path);
  CHECK(cfg.m == 7);
  CHECK(cfg.trials == 3);
  CHECK(cfg.n1_sweep == std::vector<int>{4, 5});
  {
    std::ofstream f(path);
    f << "m 7\n";
  }
  CHECK_THROWS_AS(load_config_file(cfg, path), ConfigError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_config_file(cfg, "no/such/file"), ConfigError);
}

TEST_CASE("quantile curves") {
  SUBCASE("row layout") {
    std::ostringstream os;
    run_quantile_curves(small(), os);
    const auto rows = parse(os.str());
    REQUIRE(rows.size() == 1 + 3 + 6);
    CHECK(rows[0][0] == "row_kind");
    int big = 0, small_rows = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      REQUIRE(rows[i].size() == rows[0].size());
      big += rows[i][0] == "V_bar";
      small_rows += rows[i][0] == "v_bar";
    }
    CHECK(big == 3);
    CHECK(small_rows == 6);
    CHECK(rows[2][5] == "12");  // k1 = ceil(1/0.2 - 1) * 3
    CHECK(rows[3][5] == "3");
  }
  SUBCASE("one trial reports its own sample") {
    ExperimentConfig cfg = small();
    cfg.trials = 1;
    cfg.n1_sweep = {4};
    cfg.deltas = {0.5};
    std::ostringstream os;
    run_quantile_curves(cfg, os);
    const auto rows = parse(os.str());
    CHECK(rows[1][9] == rows[1][11]);  // quantile == mean
    CHECK(rows[2][9] == rows[2][11]);
    CHECK(rows[1][10] == "0");
  }
  SUBCASE("V_bar quantile non-decreasing in n1") {
    ExperimentConfig cfg = small();
    cfg.trials = 60;
    cfg.n1_sweep = {1, 4, 16, 64};
    std::ostringstream os;
    run_quantile_curves(cfg, os);
    std::vector<double> q, se;
    for (const auto& row : parse(os.str()))
      if (row[0] == "V_bar") {
        q.push_back(std::stod(row[9]));
        se.push_back(std::stod(row[10]));
      }
    REQUIRE(q.size() == 4);
    for (std::size_t i = 1; i < q.size(); ++i)
      CHECK(q[i] >= q[i - 1] - 2 * std::hypot(se[i], se[i - 1]) - 1e-12);
  }
}

TEST_CASE("comparison") {
  SUBCASE("one candidate: every column is the straight walk") {
    ExperimentConfig cfg = small();
    cfg.m = 1;
    cfg.trials = 2;
    std::ostringstream os;
    run_comparison(cfg, os);
    const auto rows = parse(os.str());
    REQUIRE(rows.size() == 1 + 3 + 1);
    CHECK(rows[0][4] == "V_bar_alpha_n1_2");
    for (int g = 0; g < 3; ++g) {
      const Scenario sc = generate_scenario(50.0, 1, 0, geometry_seed(99, g));
      const double d = -(sc.point(1) - sc.start).norm();
      const auto& row = rows[static_cast<std::size_t>(g + 1)];
      CHECK(std::stod(row[2]) == doctest::Approx(d));
      CHECK(std::stod(row[3]) == doctest::Approx(d));
      for (std::size_t c = 4; c < row.size(); ++c) CHECK(std::stod(row[c]) == doctest::Approx(d));
    }
    CHECK(rows.back()[0] == "mean");
  }
  SUBCASE("byte-identical across worker counts") {
    ExperimentConfig cfg = small();
    std::ostringstream one, three;
    run_comparison(cfg, one);
    cfg.workers = 3;
    run_comparison(cfg, three);
    CHECK(one.str() == three.str());
  }
}

TEST_CASE("heuristic bounds rows") {
  ExperimentConfig cfg = small();
  cfg.m_sweep = {10, 30};
  cfg.trials = 30;
  std::ostringstream os, os4;
  run_heuristic_bounds(cfg, os);
  cfg.workers = 4;
  run_heuristic_bounds(cfg, os4);
  CHECK(os.str() == os4.str());
  const auto rows = parse(os.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "10");
  CHECK(rows[1][1] == "2");
  CHECK(rows[1][2] == "2");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    CHECK(std::stod(rows[r][4]) <= std::stod(rows[r][6]));
    CHECK(std::stod(rows[r][9]) <= std::stod(rows[r][11]) + 1e-9);
  }
}

TEST_CASE("dumps") {
  ExperimentConfig cfg = small();
  std::ostringstream sc_text, trace, matrix;
  run_scenario_dump(cfg, sc_text);
  std::istringstream in(sc_text.str());
  const Scenario back = read_scenario(in);
  CHECK(back.m() == 6);
  CHECK(back.seed == geometry_seed(99, 0));
  run_trace_dump(cfg, trace);
  CHECK(trace.str().rfind("t,point_index", 0) == 0);
  cfg.columns = 4;
  run_matrix_dump(cfg, matrix);
  CHECK(parse(matrix.str()).size() == 7);
  CHECK(parse(matrix.str())[0].size() == 5);
}

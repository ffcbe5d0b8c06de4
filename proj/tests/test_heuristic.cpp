#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "hideseek/heuristic.hpp"
#include "hideseek/pathing.hpp"

using namespace hideseek;

TEST_CASE("kstar") {
  CHECK(kstar(10) == 2);   // K* = 1.4678
  CHECK(kstar(100) == 5);  // K* = 4.3072
  CHECK(kstar(1) == 0);    // formula negative, clamped
  CHECK_THROWS_AS(kstar(0), InvalidArgument);
}

TEST_CASE("theorem42_bound") {
  const double r2 = std::numbers::sqrt2;
  CHECK(theorem42_bound(10, 2, 1.0) == doctest::Approx(13 / r2 + 2 + 2 * std::sqrt(10.0) * 4 / 9 + r2 * std::log(10.0)));
  CHECK(theorem42_bound(10, 2, 1.0) == doctest::Approx(17.2596).epsilon(1e-5));
  CHECK(theorem42_bound(37, 0, 4.0) ==
        doctest::Approx((9 / r2 + 2 + 2 * std::sqrt(37.0) + r2 * std::log(37.0)) * 2.0));

  SUBCASE("unimodal in k with the minimum next to K*") {
    const double l32 = std::log(1.5);
    for (int m : {10, 50, 100, 1000, 100000}) {
      int argmin = 0;
      for (int k = 1; k <= 20; ++k)
        if (theorem42_bound(m, k, 1.0) < theorem42_bound(m, argmin, 1.0)) argmin = k;
      for (int k = 1; k <= argmin; ++k) CHECK(theorem42_bound(m, k, 1.0) < theorem42_bound(m, k - 1, 1.0));
      for (int k = argmin + 1; k <= 20; ++k) CHECK(theorem42_bound(m, k, 1.0) > theorem42_bound(m, k - 1, 1.0));
      const double kreal = std::log(r2 * l32 * std::sqrt(static_cast<double>(m))) / l32;
      CHECK(argmin >= std::floor(kreal));
      CHECK(argmin <= std::ceil(kreal));
    }
  }
}

TEST_CASE("lemma41_bound") {
  CHECK(lemma41_bound(0, 1, 1.0) == doctest::Approx(1 + 1 / std::numbers::sqrt2));
  CHECK(lemma41_bound(200, 2, 3.0) == doctest::Approx(1.5));
  CHECK(lemma41_bound(3, 8, 1.0) == doctest::Approx(8.0 / 27 + 0.25));
  CHECK_THROWS_AS(lemma41_bound(1, 0, 1.0), InvalidArgument);
}

TEST_CASE("divide_and_search reductions") {
  SUBCASE("no sensors: truncated shortest path through every candidate") {
    const Scenario sc = generate_scenario(50.0, 6, 0, 42);
    const Path full = exact_open_path(sc.start, sc.candidates);
    for (int t = 1; t <= sc.m(); ++t) {
      const SearchTrace tr = divide_and_search(sc, t, kstar(sc.m()));
      CHECK(tr.k_used == 0);
      double expect = 0;
      Point at = sc.start;
      for (int pos : full.order) {
        expect += (sc.candidates[static_cast<std::size_t>(pos)] - at).norm();
        at = sc.candidates[static_cast<std::size_t>(pos)];
        if (pos + 1 == t) break;
      }
      CHECK(tr.total_distance == doctest::Approx(expect));
    }
  }
  SUBCASE("one candidate") {
    const Scenario sc = generate_scenario(50.0, 1, 3, 8);
    const SearchTrace tr = divide_and_search(sc, 1, kstar(1));
    CHECK(tr.k_used == 0);
    CHECK(tr.total_distance == doctest::Approx((sc.point(1) - sc.start).norm()));
  }
  SUBCASE("invalid treasure") {
    const Scenario sc = generate_scenario(50.0, 3, 1, 8);
    CHECK_THROWS_AS(divide_and_search(sc, 0, 1), InvalidTreasure);
    CHECK_THROWS_AS(divide_and_search(sc, 4, 1), InvalidTreasure);
  }
}

TEST_CASE("divide_and_search soundness and accounting") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int m = 10 + static_cast<int>(seed % 60);
    const Scenario sc = generate_scenario(50.0, m, sensor_count(m) + static_cast<int>(seed % 3), seed);
    const int treasure = 1 + static_cast<int>(seed * 7 % static_cast<std::uint64_t>(m));
    const SearchTrace tr = divide_and_search(sc, treasure, kstar(m) + 1);
    const Point& p = sc.point(treasure);

    REQUIRE(tr.regions.size() == static_cast<std::size_t>(tr.k_used + 1));
    for (std::size_t t = 0; t < tr.regions.size(); ++t) {
      CHECK(contains(tr.regions[t], p, 1e-9));
      if (t > 0) CHECK(area(tr.regions[t]) <= area(tr.regions[t - 1]) + 1e-9);
    }
    CHECK(std::find(tr.terminal_candidates.begin(), tr.terminal_candidates.end(), treasure) !=
          tr.terminal_candidates.end());
    for (int j = 1; j <= m; ++j) {
      const bool listed = std::find(tr.terminal_candidates.begin(), tr.terminal_candidates.end(), j) !=
                          tr.terminal_candidates.end();
      CHECK(listed == contains(tr.final_region(), sc.point(j), 1e-9));
    }

    CHECK(tr.visited.back() == treasure);
    Point at = sc.start;
    double sum = 0;
    for (std::size_t i = 0; i < tr.visited.size(); ++i) {
      const double leg = (sc.point(tr.visited[i]) - at).norm();
      if (static_cast<int>(i) < tr.k_used) {
        CHECK(sc.is_sensor(tr.visited[i]));
        CHECK(leg <= std::numbers::sqrt2 * sc.region_side);
      }
      sum += leg;
      at = sc.point(tr.visited[i]);
      CHECK(tr.cumulative[i] == doctest::Approx(sum));
    }
    CHECK(tr.total_distance == doctest::Approx(sum));
  }
}

TEST_CASE("the first sensor is the one nearest the square's center") {
  const Scenario sc = generate_scenario(1.0, 20, 9, 3);
  const SearchTrace tr = divide_and_search(sc, 1, 1);
  REQUIRE(tr.k_used == 1);
  CHECK(sc.point(tr.visited[0]).isApprox(Point(0.5, 0.5)));
}

TEST_CASE("heuristic_security_cost") {
  SUBCASE("one candidate") {
    const Scenario sc = generate_scenario(50.0, 1, 0, 5);
    CHECK(heuristic_security_cost(sc) == doctest::Approx((sc.point(1) - sc.start).norm()));
  }
  SUBCASE("two candidates, no sensors: enumerate both placements") {
    const Scenario sc = generate_scenario(50.0, 2, 0, 6);
    const double d1 = (sc.point(1) - sc.start).norm();
    const double d2 = (sc.point(2) - sc.start).norm();
    const double between = (sc.point(1) - sc.point(2)).norm();
    // The seeker takes the shorter order; the hider sits at its far end.
    const double expect = std::min(d1, d2) + between;
    CHECK(heuristic_security_cost(sc) == doctest::Approx(expect));
  }
  SUBCASE("dominates every fixed placement") {
    const Scenario sc = generate_scenario(50.0, 12, 2, 7);
    const double worst = heuristic_security_cost(sc);
    for (int t = 1; t <= sc.m(); ++t) CHECK(divide_and_search(sc, t, kstar(sc.m())).total_distance <= worst);
  }
  SUBCASE("mean worst case exceeds half the side") {
    double total = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) total += heuristic_security_cost(generate_scenario(50.0, 10, 2, seed));
    CHECK(total / 40 >= 0.5 * 50.0);
  }
}

TEST_CASE("trace dump") {
  const Scenario sc = generate_scenario(50.0, 10, 2, 21);
  const SearchTrace tr = divide_and_search(sc, 4, kstar(10));
  std::ostringstream os;
  write_trace(os, sc, tr);
  const std::string text = os.str();
  CHECK(text.rfind("t,point_index,x,y,measurement,region_area,cumulative_distance\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(tr.visited.size() + 2));
}

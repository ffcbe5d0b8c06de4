#include <random>

#include "doctest.h"
#include "hideseek/random.hpp"
#include "hideseek/solver.hpp"

using namespace hideseek;

namespace {

Eigen::MatrixXd random_matrix(Rng& rng, Eigen::Index m, Eigen::Index n) {
  Eigen::MatrixXd a(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = rng.uniform(-10, 10);
  return a;
}

// Exact value of a 2-row game: the upper envelope max_j (p a0j + (1-p) a1j)
// is convex piecewise linear in p, so its minimum sits at p in {0, 1} or at
// a crossing of two column lines.
double two_row_value(const Eigen::MatrixXd& a) {
  auto envelope = [&](double p) { return (p * a.row(0) + (1 - p) * a.row(1)).maxCoeff(); };
  double best = std::min(envelope(0), envelope(1));
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index k = j + 1; k < a.cols(); ++k) {
      const double slope_j = a(0, j) - a(1, j), slope_k = a(0, k) - a(1, k);
      if (slope_j == slope_k) continue;
      const double p = (a(1, k) - a(1, j)) / (slope_j - slope_k);
      if (p > 0 && p < 1) best = std::min(best, envelope(p));
    }
  return best;
}

void check_strategies(const GameSolution<double>& sol, Eigen::Index m, Eigen::Index n) {
  REQUIRE(sol.row_strategy.size() == m);
  REQUIRE(sol.col_strategy.size() == n);
  CHECK(sol.row_strategy.minCoeff() >= 0);
  CHECK(sol.col_strategy.minCoeff() >= 0);
  CHECK(sol.row_strategy.sum() == doctest::Approx(1).epsilon(1e-12));
  CHECK(sol.col_strategy.sum() == doctest::Approx(1).epsilon(1e-12));
}

}  // namespace

TEST_CASE("closed-form games") {
  SUBCASE("matching pennies") {
    Eigen::Matrix2d a;
    a << 1, -1, -1, 1;
    const auto sol = solve_zero_sum(a);
    CHECK(sol.value == doctest::Approx(0).epsilon(1e-9));
    CHECK(sol.row_strategy(0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sol.col_strategy(0) == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("mixed 2x2") {
    Eigen::Matrix2d a;
    a << 3, 1, 2, 4;
    const auto sol = solve_zero_sum(a);
    CHECK(sol.value == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(sol.row_strategy(0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sol.col_strategy(0) == doctest::Approx(0.75).epsilon(1e-9));
  }
  SUBCASE("saddle point") {
    Eigen::Matrix2d a;
    a << 1, 2, 3, 4;
    const auto sol = solve_zero_sum(a);
    CHECK(sol.value == doctest::Approx(2).epsilon(1e-9));
    CHECK(sol.row_strategy(0) == doctest::Approx(1).epsilon(1e-9));
    CHECK(sol.col_strategy(1) == doctest::Approx(1).epsilon(1e-9));
  }
  SUBCASE("rock paper scissors") {
    Eigen::Matrix3d a;
    a << 0, 1, -1, -1, 0, 1, 1, -1, 0;
    const auto sol = solve_zero_sum(a);
    CHECK(sol.value == doctest::Approx(0).epsilon(1e-9));
    for (int i = 0; i < 3; ++i) {
      CHECK(sol.row_strategy(i) == doctest::Approx(1.0 / 3).epsilon(1e-9));
      CHECK(sol.col_strategy(i) == doctest::Approx(1.0 / 3).epsilon(1e-9));
    }
  }
  SUBCASE("constant and single-entry matrices") {
    CHECK(solve_zero_sum(Eigen::MatrixXd::Constant(3, 4, -7.5)).value == doctest::Approx(-7.5));
    Eigen::MatrixXd one(1, 1);
    one << -3.25;
    const auto sol = solve_zero_sum(one);
    CHECK(sol.value == doctest::Approx(-3.25));
    CHECK(sol.row_strategy(0) == doctest::Approx(1));
  }
  SUBCASE("single row and single column") {
    Eigen::MatrixXd row(1, 4);
    row << -4, -1, -3, -2;
    CHECK(solve_zero_sum(row).value == doctest::Approx(-1));
    Eigen::MatrixXd col(4, 1);
    col << -4, -1, -3, -2;
    CHECK(solve_zero_sum(col).value == doctest::Approx(-4));
  }
  CHECK_THROWS_AS(solve_zero_sum(Eigen::MatrixXd(0, 3)), InvalidArgument);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(solve_zero_sum(bad), InvalidArgument);
}

TEST_CASE("random games satisfy the saddle inequalities") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng.below(12));
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.below(40));
    const Eigen::MatrixXd a = random_matrix(rng, m, n);
    const auto sol = solve_zero_sum(a);
    check_strategies(sol, m, n);
    CHECK(saddle_violation(a, sol) <= 1e-7);
    // Pure-strategy bracket.
    CHECK(sol.value >= a.colwise().minCoeff().maxCoeff() - 1e-9);
    CHECK(sol.value <= a.rowwise().maxCoeff().minCoeff() + 1e-9);

    const auto transposed = solve_zero_sum(-a.transpose());
    CHECK(transposed.value == doctest::Approx(-sol.value).epsilon(1e-9));

    const double scale = rng.uniform(0.1, 10), shift = rng.uniform(-50, 50);
    const auto affine = solve_zero_sum((scale * a.array() + shift).matrix());
    CHECK(affine.value == doctest::Approx(scale * sol.value + shift).epsilon(1e-9));

    // An extra column can only help the maximizing player.
    Eigen::MatrixXd wider(m, n + 1);
    wider << a, random_matrix(rng, m, 1);
    CHECK(solve_zero_sum(wider).value >= sol.value - 1e-9);
  }
}

TEST_CASE("two-row games match the envelope oracle") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::MatrixXd a = random_matrix(rng, 2, 1 + static_cast<Eigen::Index>(rng.below(25)));
    CHECK(solve_zero_sum(a).value == doctest::Approx(two_row_value(a)).epsilon(1e-9));
  }
}

TEST_CASE("degenerate games") {
  // Duplicate rows and columns, integer ties.
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::MatrixXd a(6, 9);
    for (Eigen::Index i = 0; i < 6; ++i)
      for (Eigen::Index j = 0; j < 9; ++j) a(i, j) = static_cast<double>(rng.below(3));
    a.row(5) = a.row(0);
    a.col(8) = a.col(1);
    const auto sol = solve_zero_sum(a);
    check_strategies(sol, 6, 9);
    CHECK(saddle_violation(a, sol) <= 1e-9);
  }
}

TEST_CASE("sampled_security_level and best_pure_response") {
  Rng rng(14);
  const Eigen::MatrixXd a = random_matrix(rng, 5, 30);
  const auto [level, y] = sampled_security_level(a);
  CHECK(level == doctest::Approx(solve_zero_sum(a).value));
  const auto br = best_pure_response(a, y);
  CHECK(br.payoff == doctest::Approx(level).epsilon(1e-9));
  CHECK(br.payoff == doctest::Approx((a.transpose() * y).maxCoeff()));

  Eigen::MatrixXd tie(2, 3);
  tie << 1, 2, 2, 0, 0, 0;
  const auto t = best_pure_response(tie, Eigen::Vector2d(1, 0));
  CHECK(t.column == 1);
  CHECK(t.payoff == 2);
  CHECK_THROWS_AS(best_pure_response(tie, Eigen::Vector3d(1, 0, 0)), InvalidArgument);
}

TEST_CASE("long double instantiation") {
  Eigen::Matrix<long double, 2, 2> a;
  a << 3, 1, 2, 4;
  const auto sol = solve_zero_sum(a);
  CHECK(static_cast<double>(sol.value) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("wide game with many sampled columns") {
  Rng rng(15);
  const Eigen::MatrixXd a = -random_matrix(rng, 10, 5000).cwiseAbs();
  const auto sol = solve_zero_sum(a);
  check_strategies(sol, 10, 5000);
  CHECK(saddle_violation(a, sol) <= 1e-7);
}

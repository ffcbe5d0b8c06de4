#ifndef HIDESEEK_SOLVER_HPP_
#define HIDESEEK_SOLVER_HPP_

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hideseek/errors.hpp"

namespace hideseek {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Saddle point of a zero-sum matrix game. The row player minimizes y'Az,
/// the column player maximizes it.
template <typename Scalar>
struct GameSolution {
  Scalar value = 0;
  VectorX<Scalar> row_strategy;
  VectorX<Scalar> col_strategy;
  int pivots = 0;
};

template <typename Scalar>
struct PureResponse {
  Eigen::Index column = 0;
  Scalar payoff = 0;
};

/// Exact value and optimal mixed strategies of the game with payoff matrix A.
///
/// A is mapped affinely onto B = (A - min A) / range + 1, so every entry of B
/// lies in [1, 2]. The column player's LP for B,
///
///   minimize 1'w  subject to  B w >= 1,  w >= 0,
///
/// is solved by the dual simplex method on an m x (n + m) tableau whose
/// slack basis is dual feasible from the start. This pivots exactly like a
/// primal simplex on the row player's LP (max 1'u s.t. B'u <= 1), which has
/// one constraint per column, while keeping the tableau m rows tall. Bland's
/// rule (lowest index) breaks ties on both the leaving row and the entering
/// column. At the optimum the primal solution gives z = w / 1'w, the reduced
/// costs of the surplus columns give y = u / 1'u, and val(B) = 1 / 1'w.
template <typename Derived>
GameSolution<typename Derived::Scalar> solve_zero_sum(const Eigen::MatrixBase<Derived>& payoff) {
  using Scalar = typename Derived::Scalar;
  using Tableau = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Index m = payoff.rows();
  const Eigen::Index n = payoff.cols();
  if (m == 0 || n == 0) throw InvalidArgument("solve_zero_sum needs a nonempty matrix");
  if (!payoff.allFinite()) throw InvalidArgument("solve_zero_sum needs finite entries");

  const Scalar pivot_tol = Scalar(1e-9);
  const Scalar lo = payoff.minCoeff();
  Scalar range = payoff.maxCoeff() - lo;
  if (!(range > Scalar(0))) range = Scalar(1);

  const Eigen::Index rhs = n + m;
  Tableau t = Tableau::Zero(m + 1, n + m + 1);
  t.topLeftCorner(m, n) = -((payoff.derived().array() - lo) / range + Scalar(1)).matrix();
  t.block(0, n, m, m).setIdentity();
  t.col(rhs).head(m).setConstant(Scalar(-1));
  t.row(m).head(n).setOnes();

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  GameSolution<Scalar> sol;
  const int max_pivots = static_cast<int>(50 * (n + m) + 1000);
  for (;;) {
    Eigen::Index leave = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, rhs) < -pivot_tol &&
          (leave < 0 || basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)]))
        leave = i;
    }
    if (leave < 0) break;

    Eigen::Index enter = -1;
    Scalar best_ratio = 0;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      const Scalar a = t(leave, j);
      if (a >= -pivot_tol) continue;
      const Scalar ratio = t(m, j) / -a;
      if (enter < 0 || ratio < best_ratio) {
        enter = j;
        best_ratio = ratio;
      }
    }
    if (enter < 0) throw NumericalFailure("solve_zero_sum: LP reported infeasible (conditioning)");
    if (++sol.pivots > max_pivots)
      throw NumericalFailure("solve_zero_sum: no convergence after " + std::to_string(max_pivots) +
                             " pivots on a " + std::to_string(m) + "x" + std::to_string(n) + " game");

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const Scalar f = t(i, enter);
      if (f != Scalar(0)) t.row(i) -= f * t.row(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  VectorX<Scalar> w = VectorX<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index b = basis[static_cast<std::size_t>(i)];
    if (b < n) w(b) = std::max(Scalar(0), t(i, rhs));
  }
  VectorX<Scalar> u = t.row(m).segment(n, m).transpose().cwiseMax(Scalar(0));
  const Scalar wsum = w.sum();
  const Scalar usum = u.sum();
  if (!(wsum > Scalar(0)) || !(usum > Scalar(0)))
    throw NumericalFailure("solve_zero_sum: degenerate optimal basis");

  sol.col_strategy = w / wsum;
  sol.row_strategy = u / usum;
  sol.value = (Scalar(1) / wsum - Scalar(1)) * range + lo;
  return sol;
}

/// Security level of the row player against the pure columns of A, with
/// the minimizing strategy. Equal to solve_zero_sum(A).value by duality.
template <typename Derived>
std::pair<typename Derived::Scalar, VectorX<typename Derived::Scalar>> sampled_security_level(
    const Eigen::MatrixBase<Derived>& payoff) {
  auto sol = solve_zero_sum(payoff);
  return {sol.value, std::move(sol.row_strategy)};
}

/// Column maximizing y'A e_j; ties go to the lowest index.
template <typename Derived, typename VecDerived>
PureResponse<typename Derived::Scalar> best_pure_response(const Eigen::MatrixBase<Derived>& payoff,
                                                          const Eigen::MatrixBase<VecDerived>& y) {
  using Scalar = typename Derived::Scalar;
  if (y.size() != payoff.rows()) throw InvalidArgument("best_pure_response: dimension mismatch");
  if (payoff.cols() == 0) throw InvalidArgument("best_pure_response: no columns");
  const VectorX<Scalar> payoffs = payoff.transpose() * y;
  PureResponse<Scalar> best{0, payoffs(0)};
  for (Eigen::Index j = 1; j < payoffs.size(); ++j)
    if (payoffs(j) > best.payoff) best = {j, payoffs(j)};
  return best;
}

/// Largest violation of the saddle inequalities
///   y'A e_j <= value for every column, e_i'A z >= value for every row.
template <typename Derived>
typename Derived::Scalar saddle_violation(const Eigen::MatrixBase<Derived>& payoff,
                                          const GameSolution<typename Derived::Scalar>& sol) {
  using Scalar = typename Derived::Scalar;
  const Scalar col_excess = (payoff.transpose() * sol.row_strategy).maxCoeff() - sol.value;
  const Scalar row_deficit = sol.value - (payoff * sol.col_strategy).minCoeff();
  return std::max({Scalar(0), col_excess, row_deficit});
}

}  // namespace hideseek

#endif  // HIDESEEK_SOLVER_HPP_

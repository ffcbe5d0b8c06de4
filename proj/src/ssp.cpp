#include "hideseek/ssp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "hideseek/csv.hpp"
#include "hideseek/random.hpp"
#include "hideseek/solver.hpp"

namespace hideseek {

namespace {

void check_delta(double delta, bool allow_one) {
  if (!(delta > 0.0) || delta > 1.0 || (!allow_one && delta == 1.0))
    throw InvalidArgument("delta must lie in (0, 1)");
}

void check_beta(const std::optional<double>& beta) {
  if (beta && !(*beta > 0.0 && *beta < 1.0)) throw InvalidArgument("beta must lie in (0, 1)");
}

int to_count(double x) {
  if (!(x >= 0.0) || x > 2e9) throw InvalidArgument("sample size out of range");
  return static_cast<int>(x);
}

}  // namespace

void SampleSizes::validate() const {
  if (m1 < 1) throw InvalidArgument("m1 must be positive");
  if (n1 < 1) throw InvalidArgument("n1 must be positive");
  if (n2 < 1 || nbar2 < n2) throw InvalidArgument("need nbar2 >= n2 >= 1");
  if (k1 < 0) throw InvalidArgument("k1 must be nonnegative");
  check_delta(delta, false);
  check_beta(beta);
}

int apriori_n1(int m1, double delta, int nbar2, std::optional<double> beta) {
  if (m1 < 1 || nbar2 < 1) throw InvalidArgument("apriori_n1 requires m1 >= 1 and nbar2 >= 1");
  check_delta(delta, !beta.has_value());
  check_beta(beta);
  double per_column;
  if (beta) {
    const double lb = std::log(1.0 / *beta);
    per_column = ceil_tolerant((lb + m1 + 2.0 * std::sqrt(m1 * lb)) / delta);
  } else {
    per_column = ceil_tolerant((m1 + 1.0) / delta - 1.0);
  }
  return to_count(per_column * nbar2);
}

int aposteriori_k1(double delta, int nbar2, std::optional<double> beta) {
  if (nbar2 < 1) throw InvalidArgument("aposteriori_k1 requires nbar2 >= 1");
  check_delta(delta, !beta.has_value());
  check_beta(beta);
  const double per_column = beta ? ceil_tolerant(std::log(1.0 / *beta) / std::log(1.0 / (1.0 - delta)))
                                 : ceil_tolerant(1.0 / delta - 1.0);
  return to_count(per_column * nbar2);
}

std::vector<std::uint64_t> policy_seeds(std::uint64_t seed, std::string_view stream, int count) {
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(std::max(0, count)));
  for (std::size_t j = 0; j < seeds.size(); ++j) seeds[j] = derive_seed(seed, stream, {j});
  return seeds;
}

double sampled_value(const Scenario& sc, int n1, std::uint64_t seed, int workers) {
  const GameMatrix a1 = build_matrix(sc, policy_seeds(seed, "pi1", n1), workers);
  return solve_zero_sum(a1.entries).value;
}

SspReport ssp_run(const Scenario& sc, const SampleSizes& sizes, std::uint64_t seed, int workers) {
  sizes.validate();
  if (sizes.m1 != sc.m()) throw InvalidArgument("m1 must equal the number of candidates");

  SspReport report;
  report.seed = seed;
  report.m = sc.m();
  report.s = sc.s();
  report.sizes = sizes;

  const GameMatrix a1 = build_matrix(sc, policy_seeds(seed, "pi1", sizes.n1), workers);
  const auto hider = solve_zero_sum(a1.entries);
  report.v_bar_level = hider.value;
  report.y_star = hider.row_strategy;

  const GameMatrix a2 = build_matrix(sc, policy_seeds(seed, "pi2", sizes.n2), workers);
  const auto seeker = solve_zero_sum(a2.entries);
  for (Eigen::Index j = 0; j < seeker.col_strategy.size(); ++j) {
    if (seeker.col_strategy(j) > 0.0)
      report.z_star.push_back({a2.column_seeds[static_cast<std::size_t>(j)], seeker.col_strategy(j)});
  }
  // Columns of A2 are the simulated support policies of z*, so y*'A z*
  // needs no further simulation.
  report.outcome = report.y_star.dot(a2.entries * seeker.col_strategy);
  return report;
}

SspReport aposteriori_run(const Scenario& sc, const SampleSizes& sizes, std::uint64_t seed, int workers) {
  if (sizes.k1 < 1) throw InvalidArgument("aposteriori_run needs k1 >= 1");
  SspReport report = ssp_run(sc, sizes, seed, workers);
  const GameMatrix test = build_matrix(sc, policy_seeds(seed, "pibar1", sizes.k1), workers);
  report.v_posterior = best_pure_response(test.entries, report.y_star).payoff;
  report.epsilon = *report.v_posterior - report.v_bar_level;
  return report;
}

double quantile(std::vector<double> samples, double alpha) {
  if (samples.empty()) throw InvalidArgument("quantile of an empty sample");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("quantile level must lie in (0, 1]");
  const auto n = samples.size();
  const auto rank = static_cast<std::size_t>(std::clamp(ceil_tolerant(alpha * static_cast<double>(n)), 1.0,
                                                        static_cast<double>(n)));
  std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(rank - 1), samples.end());
  return samples[rank - 1];
}

double quantile_stderr(std::vector<double> samples, double alpha) {
  if (samples.empty()) throw InvalidArgument("quantile of an empty sample");
  const double n = static_cast<double>(samples.size());
  const double spread = std::sqrt(alpha * (1.0 - alpha) / n);
  const double lo = std::clamp(alpha - spread, 1.0 / n, 1.0);
  const double hi = std::clamp(alpha + spread, 1.0 / n, 1.0);
  return (quantile(samples, hi) - quantile(samples, lo)) / 2.0;
}

void write_report_header(std::ostream& os) {
  csv::row(os, "seed", "m", "s", "n1", "n2", "k1", "delta", "beta", "V_bar", "v_posterior", "epsilon", "outcome");
}

void write_report_row(std::ostream& os, const SspReport& r) {
  const auto opt = [](const std::optional<double>& x) { return x ? csv::format(*x) : std::string(); };
  csv::write_row(os, {csv::format(r.seed), csv::format(r.m), csv::format(r.s), csv::format(r.sizes.n1),
                      csv::format(r.sizes.n2), csv::format(r.sizes.k1), csv::format(r.sizes.delta),
                      opt(r.sizes.beta), csv::format(r.v_bar_level), opt(r.v_posterior), opt(r.epsilon),
                      csv::format(r.outcome)});
}

}  // namespace hideseek

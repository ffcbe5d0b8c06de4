#ifndef HIDESEEK_SSP_HPP_
#define HIDESEEK_SSP_HPP_

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "hideseek/game.hpp"
#include "hideseek/scenario.hpp"

namespace hideseek {

/// Sizes for one Sampled Saddle-Point run. Both players keep every row
/// (m1 = m); only policy columns are sampled.
struct SampleSizes {
  int m1 = 1;
  int n1 = 1;
  int n2 = 1;
  int nbar2 = 1;
  int k1 = 0;
  double delta = 0.1;
  std::optional<double> beta;

  /// Throws InvalidArgument unless nbar2 >= n2 >= 1, n1 >= 1, k1 >= 0,
  /// 0 < delta < 1 and (if set) 0 < beta < 1.
  void validate() const;
};

/// Columns for the hider that make the sampled strategy 0-secure with
/// confidence 1 - delta:
///   ceil((m1 + 1)/delta - 1) nbar2, or with beta
///   ceil((ln(1/beta) + m1 + 2 sqrt(m1 ln(1/beta))) / delta) nbar2.
int apriori_n1(int m1, double delta, int nbar2, std::optional<double> beta = std::nullopt);

/// Test columns for the a-posteriori check:
///   ceil(1/delta - 1) nbar2, or with beta ceil(ln(1/beta) / ln(1/(1-delta))) nbar2.
int aposteriori_k1(double delta, int nbar2, std::optional<double> beta = std::nullopt);

/// `count` policy seeds from the labelled stream of `seed`.
std::vector<std::uint64_t> policy_seeds(std::uint64_t seed, std::string_view stream, int count);

struct WeightedPolicy {
  std::uint64_t seed = 0;
  double weight = 0.0;
};

struct SspReport {
  std::uint64_t seed = 0;
  int m = 0;
  int s = 0;
  SampleSizes sizes;
  double v_bar_level = 0.0;           // sampled security value of A1
  Eigen::VectorXd y_star;             // hider strategy over the m candidates
  std::vector<WeightedPolicy> z_star; // seeker mixture (support only)
  double outcome = 0.0;               // y*'A z*
  std::optional<double> v_posterior;  // max over k1 fresh columns of y*'A e_j
  std::optional<double> epsilon;      // v_posterior - v_bar_level
};

/// One Sampled Saddle-Point run. Pi1 and Pi2 are n1 and n2 fresh policy
/// seeds drawn from independent streams of `seed`.
SspReport ssp_run(const Scenario& sc, const SampleSizes& sizes, std::uint64_t seed, int workers = 1);

/// ssp_run followed by the a-posteriori check on sizes.k1 fresh columns.
SspReport aposteriori_run(const Scenario& sc, const SampleSizes& sizes, std::uint64_t seed, int workers = 1);

/// Sampled security level only (the hider's half of ssp_run).
double sampled_value(const Scenario& sc, int n1, std::uint64_t seed, int workers = 1);

/// Empirical quantile inf{x : F_n(x) >= alpha}: the ceil(alpha n)-th
/// smallest sample. Throws InvalidArgument for empty input or alpha outside (0, 1].
double quantile(std::vector<double> samples, double alpha);

/// Distribution-free standard error of quantile(samples, alpha): half the
/// spread of the order statistics at alpha -+ sqrt(alpha(1-alpha)/n).
double quantile_stderr(std::vector<double> samples, double alpha);

void write_report_header(std::ostream& os);
void write_report_row(std::ostream& os, const SspReport& r);

}  // namespace hideseek

#endif  // HIDESEEK_SSP_HPP_

#ifndef HIDESEEK_EXPERIMENTS_HPP_
#define HIDESEEK_EXPERIMENTS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hideseek {

/// Settings shared by every experiment subcommand. Keys accepted by
/// set_config_value() are the field names below (`s` takes "auto" or a count).
struct ExperimentConfig {
  double region_side = 50.0;
  int m = 10;
  std::optional<int> s;  // nullopt: sensor_count(m)
  int trials = 200;
  double alpha = 0.9;
  std::vector<double> deltas{0.02};
  double beta = 2e-5;
  int nbar2 = 10;
  std::vector<int> n1_sweep{10, 50, 100, 500};
  int geometries = 30;
  std::vector<int> m_sweep;  // heuristic-bounds; empty means {m}
  int geometry_id = 0;
  int treasure = 1;
  int columns = 10;
  std::uint64_t master_seed = 0;
  int workers = 1;
  std::string output;  // empty: standard output

  /// Throws ConfigError on any out-of-range field.
  void validate() const;
  int sensors_for(int m_value) const;
  int sensors() const { return sensors_for(m); }
};

/// Every key recognised by set_config_value().
const std::vector<std::string>& config_keys();

/// Parses `value` into the field named `key` (hyphens and underscores are
/// interchangeable). Throws ConfigError.
void set_config_value(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Applies a `key = value` file; blank lines and '#' comments are ignored.
void load_config_file(ExperimentConfig& cfg, const std::string& path);

/// Seed of geometry `id` under `master_seed`.
std::uint64_t geometry_seed(std::uint64_t master_seed, int id);

/// Quantiles of the sampled security value and of the a-posteriori outcome
/// over `trials` independent runs, per n1 and per delta (k1 from 1/delta - 1).
void run_quantile_curves(const ExperimentConfig& cfg, std::ostream& os);

/// Heuristic security cost, sensor-free path cost and sampled security
/// quantiles on `geometries` random scenarios, plus a row of means.
void run_comparison(const ExperimentConfig& cfg, std::ostream& os);

/// Empirical mean distance and final-region area of Divide-and-Search
/// against their analytical bounds, one row per m.
void run_heuristic_bounds(const ExperimentConfig& cfg, std::ostream& os);

void run_scenario_dump(const ExperimentConfig& cfg, std::ostream& os);
void run_trace_dump(const ExperimentConfig& cfg, std::ostream& os);
void run_matrix_dump(const ExperimentConfig& cfg, std::ostream& os);

}  // namespace hideseek

#endif  // HIDESEEK_EXPERIMENTS_HPP_

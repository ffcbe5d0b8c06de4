#include "hideseek/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>

#include "hideseek/csv.hpp"
#include "hideseek/errors.hpp"
#include "hideseek/game.hpp"
#include "hideseek/heuristic.hpp"
#include "hideseek/parallel.hpp"
#include "hideseek/pathing.hpp"
#include "hideseek/random.hpp"
#include "hideseek/scenario.hpp"
#include "hideseek/solver.hpp"
#include "hideseek/ssp.hpp"

namespace hideseek {

namespace {

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MeanStderr mean_stderr(const std::vector<double>& xs) {
  MeanStderr r;
  const double n = static_cast<double>(xs.size());
  if (xs.empty()) return r;
  r.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.stderr_ = std::sqrt(ss / (n - 1.0) / n);
  }
  return r;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("invalid value '" + t + "' for " + std::string(key));
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  for (const std::string& item : csv::split(text)) {
    if (trim(item).empty()) continue;
    out.push_back(parse_number<T>(key, item));
  }
  if (out.empty()) throw ConfigError("empty list for " + std::string(key));
  return out;
}

std::string normalize_key(std::string_view key) {
  std::string k = trim(key);
  while (!k.empty() && k.front() == '-') k.erase(k.begin());
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "region_side", "m", "s", "trials", "alpha", "deltas", "beta", "nbar2", "n1_sweep", "geometries",
      "m_sweep", "geometry_id", "treasure", "columns", "master_seed", "workers", "output"};
  return keys;
}

void set_config_value(ExperimentConfig& cfg, std::string_view raw_key, std::string_view value) {
  const std::string key = normalize_key(raw_key);
  if (key == "region_side") cfg.region_side = parse_number<double>(key, value);
  else if (key == "m") cfg.m = parse_number<int>(key, value);
  else if (key == "s") {
    if (trim(value) == "auto") cfg.s.reset();
    else cfg.s = parse_number<int>(key, value);
  } else if (key == "trials") cfg.trials = parse_number<int>(key, value);
  else if (key == "alpha") cfg.alpha = parse_number<double>(key, value);
  else if (key == "deltas" || key == "delta") cfg.deltas = parse_list<double>(key, value);
  else if (key == "beta") cfg.beta = parse_number<double>(key, value);
  else if (key == "nbar2") cfg.nbar2 = parse_number<int>(key, value);
  else if (key == "n1_sweep" || key == "n1") cfg.n1_sweep = parse_list<int>(key, value);
  else if (key == "geometries") cfg.geometries = parse_number<int>(key, value);
  else if (key == "m_sweep") cfg.m_sweep = parse_list<int>(key, value);
  else if (key == "geometry_id") cfg.geometry_id = parse_number<int>(key, value);
  else if (key == "treasure") cfg.treasure = parse_number<int>(key, value);
  else if (key == "columns") cfg.columns = parse_number<int>(key, value);
  else if (key == "master_seed" || key == "seed") cfg.master_seed = parse_number<std::uint64_t>(key, value);
  else if (key == "workers") cfg.workers = parse_number<int>(key, value);
  else if (key == "output") cfg.output = trim(value);
  else throw ConfigError("unknown config key '" + std::string(raw_key) + "'");
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    set_config_value(cfg, std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1));
  }
}

void ExperimentConfig::validate() const {
  const auto fail = [](const std::string& what) { throw ConfigError(what); };
  if (!(region_side > 0.0) || !std::isfinite(region_side)) fail("region_side must be positive");
  if (m < 1) fail("m must be positive");
  if (s && *s < 0) fail("s must be nonnegative");
  if (trials < 1) fail("trials must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0)) fail("alpha must lie in (0, 1]");
  for (double d : deltas)
    if (!(d > 0.0 && d < 1.0)) fail("each delta must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) fail("beta must lie in (0, 1)");
  if (nbar2 < 1) fail("nbar2 must be positive");
  for (int n1 : n1_sweep)
    if (n1 < 1) fail("each n1 must be positive");
  if (geometries < 1) fail("geometries must be positive");
  for (int mm : m_sweep)
    if (mm < 2) fail("each m in m_sweep must be at least 2");
  if (geometry_id < 0) fail("geometry_id must be nonnegative");
  if (treasure < 1 || treasure > m) fail("treasure must lie in 1..m");
  if (columns < 1) fail("columns must be positive");
  if (workers < 1) fail("workers must be positive");
}

int ExperimentConfig::sensors_for(int m_value) const {
  if (s) return *s;
  return m_value >= 2 ? sensor_count(m_value) : 0;
}

std::uint64_t geometry_seed(std::uint64_t master_seed, int id) {
  return derive_seed(master_seed, "geometry", {static_cast<std::uint64_t>(id)});
}

void run_quantile_curves(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  const std::uint64_t gseed = geometry_seed(cfg.master_seed, cfg.geometry_id);
  const Scenario sc = generate_scenario(cfg.region_side, cfg.m, cfg.sensors(), gseed);

  std::vector<int> k1s;
  for (double d : cfg.deltas) k1s.push_back(aposteriori_k1(d, cfg.nbar2));
  const int k1_max = *std::max_element(k1s.begin(), k1s.end());

  const std::size_t n_sweep = cfg.n1_sweep.size();
  const auto trials = static_cast<std::size_t>(cfg.trials);
  // v_bar[task][delta]; task = sweep index * trials + trial.
  std::vector<double> v_level(n_sweep * trials);
  std::vector<std::vector<double>> v_post(n_sweep * trials);
  parallel_for(n_sweep * trials, cfg.workers, [&](std::size_t task) {
    const std::size_t si = task / trials;
    const std::size_t t = task % trials;
    const int n1 = cfg.n1_sweep[si];
    const std::uint64_t seed =
        derive_seed(cfg.master_seed, "quantiles-trial", {static_cast<std::uint64_t>(n1), t});
    SampleSizes sizes;
    sizes.m1 = sc.m();
    sizes.n1 = n1;
    sizes.n2 = cfg.nbar2;
    sizes.nbar2 = cfg.nbar2;
    sizes.k1 = k1_max;
    sizes.delta = cfg.deltas.front();
    const SspReport r = ssp_run(sc, sizes, seed);
    v_level[task] = r.v_bar_level;
    // One stream of test columns; a smaller k1 uses its prefix.
    const GameMatrix test = build_matrix(sc, policy_seeds(seed, "pibar1", k1_max));
    const Eigen::VectorXd payoffs = test.entries.transpose() * r.y_star;
    for (int k1 : k1s) v_post[task].push_back(payoffs.head(k1).maxCoeff());
  });

  csv::row(os, "row_kind", "master_seed", "geometry_seed", "n1", "n2", "k1", "delta", "alpha", "trials",
           "quantile", "quantile_stderr", "mean", "mean_stderr", "n1_apriori");
  const std::string n1_apriori = csv::format(apriori_n1(sc.m(), cfg.deltas.front(), cfg.nbar2, cfg.beta));
  for (std::size_t si = 0; si < n_sweep; ++si) {
    const std::vector<double> levels(v_level.begin() + static_cast<std::ptrdiff_t>(si * trials),
                                     v_level.begin() + static_cast<std::ptrdiff_t>((si + 1) * trials));
    const MeanStderr ms = mean_stderr(levels);
    csv::write_row(os, {"V_bar", csv::format(cfg.master_seed), csv::format(gseed), csv::format(cfg.n1_sweep[si]),
                        csv::format(cfg.nbar2), "", "", csv::format(cfg.alpha), csv::format(cfg.trials),
                        csv::format(quantile(levels, cfg.alpha)), csv::format(quantile_stderr(levels, cfg.alpha)),
                        csv::format(ms.mean), csv::format(ms.stderr_), n1_apriori});
    for (std::size_t di = 0; di < k1s.size(); ++di) {
      std::vector<double> post;
      for (std::size_t t = 0; t < trials; ++t) post.push_back(v_post[si * trials + t][di]);
      const MeanStderr mp = mean_stderr(post);
      csv::write_row(os, {"v_bar", csv::format(cfg.master_seed), csv::format(gseed),
                          csv::format(cfg.n1_sweep[si]), csv::format(cfg.nbar2), csv::format(k1s[di]),
                          csv::format(cfg.deltas[di]), csv::format(cfg.alpha), csv::format(cfg.trials),
                          csv::format(quantile(post, cfg.alpha)), csv::format(quantile_stderr(post, cfg.alpha)),
                          csv::format(mp.mean), csv::format(mp.stderr_), n1_apriori});
    }
  }
}

void run_comparison(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  const auto geoms = static_cast<std::size_t>(cfg.geometries);
  const std::size_t n_sweep = cfg.n1_sweep.size();
  const auto trials = static_cast<std::size_t>(cfg.trials);

  std::vector<Scenario> scenarios(geoms);
  std::vector<double> heuristic(geoms), etsp(geoms);
  parallel_for(geoms, cfg.workers, [&](std::size_t g) {
    scenarios[g] = generate_scenario(cfg.region_side, cfg.m, cfg.sensors(),
                                     geometry_seed(cfg.master_seed, static_cast<int>(g)));
    const Scenario& sc = scenarios[g];
    heuristic[g] = -heuristic_security_cost(sc);
    etsp[g] = -best_path(sc.start, sc.candidates, sc.region(), sc.area()).length;
  });

  std::vector<double> samples(geoms * n_sweep * trials);
  parallel_for(samples.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t g = task / (n_sweep * trials);
    const std::size_t si = (task / trials) % n_sweep;
    const std::size_t t = task % trials;
    const Scenario& sc = scenarios[g];
    const int n1 = cfg.n1_sweep[si];
    samples[task] = sampled_value(sc, n1, derive_seed(sc.seed, "compare-trial", {static_cast<std::uint64_t>(n1), t}));
  });

  std::vector<std::string> header{"geometry_id", "geometry_seed", "heuristic_cost", "etsp_cost"};
  for (int n1 : cfg.n1_sweep) header.push_back("V_bar_alpha_n1_" + std::to_string(n1));
  csv::write_row(os, header);

  std::vector<double> sums(n_sweep, 0.0);
  for (std::size_t g = 0; g < geoms; ++g) {
    std::vector<std::string> row{csv::format(static_cast<int>(g)), csv::format(scenarios[g].seed),
                                 csv::format(heuristic[g]), csv::format(etsp[g])};
    for (std::size_t si = 0; si < n_sweep; ++si) {
      const auto begin = samples.begin() + static_cast<std::ptrdiff_t>((g * n_sweep + si) * trials);
      const double q = quantile(std::vector<double>(begin, begin + static_cast<std::ptrdiff_t>(trials)), cfg.alpha);
      sums[si] += q;
      row.push_back(csv::format(q));
    }
    csv::write_row(os, row);
  }
  std::vector<std::string> mean_row{"mean", csv::format(cfg.master_seed),
                                    csv::format(mean_stderr(heuristic).mean), csv::format(mean_stderr(etsp).mean)};
  for (double s : sums) mean_row.push_back(csv::format(s / static_cast<double>(geoms)));
  csv::write_row(os, mean_row);
}

void run_heuristic_bounds(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  const std::vector<int> ms = cfg.m_sweep.empty() ? std::vector<int>{cfg.m} : cfg.m_sweep;
  csv::row(os, "m", "s", "K", "trials", "mean_distance", "stderr_distance", "theorem42_bound",
           "theorem42_closed_form", "lower_bound", "mean_final_area", "stderr_final_area", "lemma41_bound",
           "master_seed");
  const double area = cfg.region_side * cfg.region_side;
  for (int m : ms) {
    if (m < 2) throw ConfigError("heuristic-bounds needs m >= 2");
    const int s = cfg.sensors_for(m);
    const int k = kstar(m);
    const auto trials = static_cast<std::size_t>(cfg.trials);
    std::vector<double> dist(trials), final_area(trials);
    parallel_for(trials, cfg.workers, [&](std::size_t t) {
      const std::uint64_t seed =
          derive_seed(cfg.master_seed, "heuristic-bounds", {static_cast<std::uint64_t>(m), t});
      const Scenario sc = generate_scenario(cfg.region_side, m, s, seed);
      Rng rng(derive_seed(seed, "treasure"));
      const int treasure = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
      const SearchTrace trace = divide_and_search(sc, treasure, k);
      dist[t] = trace.total_distance;
      final_area[t] = hideseek::area(trace.final_region());
    });
    const MeanStderr d = mean_stderr(dist);
    const MeanStderr a = mean_stderr(final_area);
    csv::row(os, m, s, k, cfg.trials, d.mean, d.stderr_, theorem42_bound(m, k, area),
             theorem42_closed_form(m, area), 0.5 * std::sqrt(area), a.mean, a.stderr_,
             s >= 1 ? lemma41_bound(k, s, area) : area, cfg.master_seed);
  }
}

void run_scenario_dump(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  write_scenario(os, generate_scenario(cfg.region_side, cfg.m, cfg.sensors(),
                                       geometry_seed(cfg.master_seed, cfg.geometry_id)));
}

void run_trace_dump(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  const Scenario sc =
      generate_scenario(cfg.region_side, cfg.m, cfg.sensors(), geometry_seed(cfg.master_seed, cfg.geometry_id));
  write_trace(os, sc, divide_and_search(sc, cfg.treasure, kstar(cfg.m)));
}

void run_matrix_dump(const ExperimentConfig& cfg, std::ostream& os) {
  cfg.validate();
  const std::uint64_t gseed = geometry_seed(cfg.master_seed, cfg.geometry_id);
  const Scenario sc = generate_scenario(cfg.region_side, cfg.m, cfg.sensors(), gseed);
  write_matrix(os, build_matrix(sc, policy_seeds(gseed, "matrix-dump", cfg.columns), cfg.workers));
}

}  // namespace hideseek

// Experiment driver. Each subcommand writes one CSV to --output or stdout.
//
//   hideseek quantiles --n1-sweep 10,50,100 --deltas 0.02,0.1 --trials 200
//   hideseek compare --geometries 30 --n1-sweep 500
//   hideseek heuristic-bounds --m-sweep 50,200,1000 --trials 300
//   hideseek scenario-dump --geometry-id 3
//
// Settings come from defaults, then --config FILE (key = value lines), then
// flags. HIDESEEK_SEED supplies the master seed when neither sets it.
// Exit status: 0 success, 1 configuration error, 2 numerical failure.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hideseek/errors.hpp"
#include "hideseek/experiments.hpp"

namespace {

constexpr int kConfigError = 1;
constexpr int kNumericalFailure = 2;

using Runner = std::function<void(const hideseek::ExperimentConfig&, std::ostream&)>;

std::string flag_name(const std::string& key) {
  std::string f = key;
  for (char& c : f)
    if (c == '_') c = '-';
  return "--" + f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hide-and-seek with directional sensing: experiment harness"};
  app.require_subcommand(1);

  const std::map<std::string, std::pair<Runner, std::string>> commands{
      {"quantiles", {hideseek::run_quantile_curves, "Quantile curves of the sampled and a-posteriori values"}},
      {"compare", {hideseek::run_comparison, "Heuristic vs sampled security value across geometries"}},
      {"heuristic-bounds", {hideseek::run_heuristic_bounds, "Divide-and-Search against its distance/area bounds"}},
      {"scenario-dump", {hideseek::run_scenario_dump, "Write one generated scenario"}},
      {"trace-dump", {hideseek::run_trace_dump, "Write the Divide-and-Search trace for one treasure"}},
      {"matrix-dump", {hideseek::run_matrix_dump, "Write a sampled game matrix"}},
  };

  std::string config_path;
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_options;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->add_option("--config", config_path, "key = value settings file");
    for (const std::string& key : hideseek::config_keys()) {
      CLI::Option* opt = sub->add_option(flag_name(key), flag_values[name + "/" + key]);
      flag_options[name + "/" + key] = opt;
    }
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      hideseek::ExperimentConfig cfg;
      if (const char* env = std::getenv("HIDESEEK_SEED")) hideseek::set_config_value(cfg, "master_seed", env);
      if (!config_path.empty()) hideseek::load_config_file(cfg, config_path);
      for (const std::string& key : hideseek::config_keys()) {
        if (flag_options[name + "/" + key]->count() > 0)
          hideseek::set_config_value(cfg, key, flag_values[name + "/" + key]);
      }
      cfg.validate();
      if (cfg.output.empty()) {
        commands.at(name).first(cfg, std::cout);
        std::cout.flush();
      } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) throw hideseek::ConfigError("cannot open output file " + cfg.output);
        commands.at(name).first(cfg, out);
      }
    }
  } catch (const hideseek::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const hideseek::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const hideseek::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const hideseek::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return 0;
}

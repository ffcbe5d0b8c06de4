#include "hideseek/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "hideseek/csv.hpp"
#include "hideseek/pathing.hpp"
#include "hideseek/random.hpp"

namespace hideseek {

int kstar(int m) {
  if (m < 1) throw InvalidArgument("kstar requires m >= 1");
  const double l32 = std::log(1.5);
  const double k = std::log(std::numbers::sqrt2 * l32 * std::sqrt(static_cast<double>(m))) / l32;
  return std::max(0, static_cast<int>(ceil_tolerant(k)));
}

SearchTrace divide_and_search(const Scenario& sc, int treasure_index, int k_budget) {
  if (!sc.is_candidate(treasure_index))
    throw InvalidTreasure("treasure index " + std::to_string(treasure_index) + " is not a candidate");
  if (k_budget < 0) throw InvalidArgument("measurement budget must be nonnegative");

  SearchTrace trace;
  trace.regions.push_back(sc.region());
  const Point& treasure = sc.point(treasure_index);
  const double tol = sc.tolerance();

  Point at = sc.start;
  double travelled = 0.0;
  std::vector<bool> used(static_cast<std::size_t>(sc.s()), false);

  for (int t = 1; t <= k_budget; ++t) {
    const ConvexRegiond& region = trace.regions.back();
    if (!(area(region) > 0.0)) break;
    const Point target = centroid(region);
    int chosen = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < sc.s(); ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      const Point& p = sc.sensors[static_cast<std::size_t>(k)].position;
      if (!contains(region, p, -tol)) continue;
      const double d = (p - target).norm();
      if (d < best) {
        best = d;
        chosen = k;
      }
    }
    if (chosen < 0) break;

    const Sensor& sensor = sc.sensors[static_cast<std::size_t>(chosen)];
    used[static_cast<std::size_t>(chosen)] = true;
    travelled += (sensor.position - at).norm();
    at = sensor.position;
    const Measurement y = measure(sensor, treasure, tol);
    trace.visited.push_back(sc.m() + 1 + chosen);
    trace.cumulative.push_back(travelled);
    trace.measurements.push_back(y);
    trace.regions.push_back(clip(region, halfplane_of(sensor, y)));
    ++trace.k_used;
  }

  // Candidates consistent with every measurement are exactly those in E_K.
  std::vector<Point> remaining;
  for (int j = 1; j <= sc.m(); ++j) {
    bool consistent = true;
    for (int step = 0; step < trace.k_used && consistent; ++step) {
      const Sensor& sensor = sc.sensor_at(trace.visited[static_cast<std::size_t>(step)]);
      consistent = measure(sensor, sc.point(j), tol) == trace.measurements[static_cast<std::size_t>(step)];
    }
    if (consistent) {
      trace.terminal_candidates.push_back(j);
      remaining.push_back(sc.point(j));
    }
  }

  const Path path = best_path(at, remaining, trace.final_region(), sc.area());
  for (int pos : path.order) {
    const int index = trace.terminal_candidates[static_cast<std::size_t>(pos)];
    travelled += (sc.point(index) - at).norm();
    at = sc.point(index);
    trace.visited.push_back(index);
    trace.cumulative.push_back(travelled);
    if (index == treasure_index) break;
  }
  if (trace.visited.empty() || trace.visited.back() != treasure_index)
    throw NumericalFailure("terminal path did not reach the treasure");
  trace.total_distance = travelled;
  return trace;
}

double heuristic_security_cost(const Scenario& sc) {
  if (sc.m() < 1) throw InvalidArgument("heuristic_security_cost requires m >= 1");
  const int k = kstar(sc.m());
  double worst = 0.0;
  for (int i = 1; i <= sc.m(); ++i) worst = std::max(worst, divide_and_search(sc, i, k).total_distance);
  return worst;
}

double theorem42_bound(int m, int k, double ambient_area) {
  if (m < 2 || k < 0) throw InvalidArgument("theorem42_bound requires m >= 2 and k >= 0");
  const double sqrt2 = std::numbers::sqrt2;
  const double coeff = (2.0 * k + 9.0) / sqrt2 + 2.0 +
                       2.0 * std::sqrt(static_cast<double>(m)) * std::pow(2.0 / 3.0, k) +
                       sqrt2 * std::log(static_cast<double>(m));
  return coeff * std::sqrt(ambient_area);
}

double theorem42_closed_form(int m, double ambient_area) {
  const double sqrt2 = std::numbers::sqrt2;
  const double l32 = std::log(1.5);
  const double lm = std::log(static_cast<double>(m));
  const double num = sqrt2 * std::log(sqrt2 * l32 * std::sqrt(static_cast<double>(m))) + sqrt2 + sqrt2 * l32 * lm;
  return num / l32 * std::sqrt(ambient_area);
}

double lemma41_bound(int k, int s, double ambient_area) {
  if (k < 0 || s < 1) throw InvalidArgument("lemma41_bound requires k >= 0 and s >= 1");
  return (std::pow(2.0 / 3.0, k) + 1.0 / std::sqrt(2.0 * s)) * ambient_area;
}

void write_trace(std::ostream& os, const Scenario& sc, const SearchTrace& trace) {
  csv::row(os, "t", "point_index", "x", "y", "measurement", "region_area", "cumulative_distance");
  csv::row(os, 0, 0, sc.start.x(), sc.start.y(), 0, area(trace.regions.front()), 0.0);
  for (std::size_t t = 0; t < trace.visited.size(); ++t) {
    const int index = trace.visited[t];
    const Point& p = sc.point(index);
    const bool sensing = static_cast<int>(t) < trace.k_used;
    const int meas = sensing ? sign(trace.measurements[t]) : 0;
    const double region_area = area(sensing ? trace.regions[t + 1] : trace.final_region());
    csv::row(os, static_cast<int>(t + 1), index, p.x(), p.y(), meas, region_area, trace.cumulative[t]);
  }
}

}  // namespace hideseek

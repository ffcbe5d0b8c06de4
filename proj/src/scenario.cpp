#include "hideseek/scenario.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "hideseek/csv.hpp"
#include "hideseek/random.hpp"

namespace hideseek {

namespace {

constexpr int kMaxRedraws = 100;

Point unit_from_angle(double theta) { return Point(std::cos(theta), std::sin(theta)); }

bool line_misses_all(const Sensor& sensor, const std::vector<Point>& candidates, double tol) {
  for (const Point& p : candidates)
    if (!(std::abs(sensor.normal.dot(p - sensor.position)) > tol)) return false;
  return true;
}

}  // namespace

const Point& Scenario::point(int index) const {
  if (index == 0) return start;
  if (is_candidate(index)) return candidates[static_cast<std::size_t>(index - 1)];
  if (is_sensor(index)) return sensor_at(index).position;
  throw InvalidArgument("point index " + std::to_string(index) + " out of range");
}

Measurement Scenario::measure(int sensor_index, int treasure_index) const {
  return hideseek::measure(sensor_at(sensor_index), point(treasure_index), tolerance());
}

int sensor_count(int m) {
  if (m < 2) throw InvalidArgument("sensor_count requires m >= 2");
  const double l = std::log(static_cast<double>(m));
  return static_cast<int>(ceil_tolerant(m / (l * l)));
}

std::vector<Sensor> place_sensors_rect(double region_side, int s, std::uint64_t seed) {
  if (s < 0) throw InvalidArgument("sensor count must be nonnegative");
  std::vector<Sensor> sensors;
  if (s == 0) return sensors;
  const int rows = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(s)))));
  const int cols = (s + rows - 1) / rows;
  const double w = region_side / cols;
  const double h = region_side / rows;
  Rng rng(seed);
  sensors.reserve(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k) {
    const int i = k / cols;
    const int j = k % cols;
    Sensor sensor;
    sensor.position = Point((j + 0.5) * w, (i + 0.5) * h);
    sensor.normal = unit_from_angle(rng.uniform(0.0, 2.0 * std::numbers::pi));
    sensors.push_back(sensor);
  }
  return sensors;
}

double max_min_distance(const std::vector<Sensor>& sensors, double region_side, int grid) {
  if (sensors.empty()) throw InvalidArgument("max_min_distance needs at least one sensor");
  double worst = 0.0;
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      const Point z(region_side * a / (grid - 1), region_side * b / (grid - 1));
      double nearest = std::numeric_limits<double>::infinity();
      for (const Sensor& s : sensors) nearest = std::min(nearest, (z - s.position).norm());
      worst = std::max(worst, nearest);
    }
  }
  return worst;
}

Scenario generate_scenario(double region_side, int m, int s, std::uint64_t seed) {
  if (!(region_side > 0.0) || !std::isfinite(region_side))
    throw GenerationFailed("region side must be finite and positive");
  if (m < 1 || s < 0) throw InvalidArgument("generate_scenario requires m >= 1 and s >= 0");

  Scenario sc;
  sc.region_side = region_side;
  sc.seed = seed;
  sc.start = Point(region_side / 2, region_side / 2);

  Rng cand_rng(derive_seed(seed, "candidates"));
  sc.candidates.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double x = cand_rng.uniform(0.0, region_side);
    const double y = cand_rng.uniform(0.0, region_side);
    sc.candidates.emplace_back(x, y);
  }

  sc.sensors = place_sensors_rect(region_side, s, derive_seed(seed, "sensors"));
  Rng redraw(derive_seed(seed, "sensor-redraw"));
  for (Sensor& sensor : sc.sensors) {
    int attempts = 0;
    while (!line_misses_all(sensor, sc.candidates, sc.tolerance())) {
      if (++attempts > kMaxRedraws)
        throw GenerationFailed("could not orient a sensor line away from every candidate");
      sensor.normal = unit_from_angle(redraw.uniform(0.0, 2.0 * std::numbers::pi));
    }
  }
  return sc;
}

Measurement measure(const Sensor& sensor, const Point& treasure, double tolerance) {
  const double d = sensor.normal.dot(treasure - sensor.position);
  if (!(std::abs(d) > tolerance)) throw DegenerateMeasurement("treasure lies on the sensor line");
  return d > 0 ? Measurement::Positive : Measurement::Negative;
}

HalfPlaned halfplane_of(const Sensor& sensor, Measurement meas) {
  return HalfPlaned(sensor.position, static_cast<double>(sign(meas)) * sensor.normal);
}

void write_scenario(std::ostream& os, const Scenario& sc) {
  os << "# region_side=" << csv::format(sc.region_side) << " seed=" << sc.seed << '\n';
  csv::row(os, "role", "index", "x", "y", "nx", "ny");
  csv::row(os, "start", 0, sc.start.x(), sc.start.y(), 0.0, 0.0);
  for (int i = 1; i <= sc.m(); ++i) {
    const Point& p = sc.point(i);
    csv::row(os, "candidate", i, p.x(), p.y(), 0.0, 0.0);
  }
  for (int i = sc.m() + 1; i <= sc.m() + sc.s(); ++i) {
    const Sensor& s = sc.sensor_at(i);
    csv::row(os, "sensor", i, s.position.x(), s.position.y(), s.normal.x(), s.normal.y());
  }
}

Scenario read_scenario(std::istream& is) {
  Scenario sc;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# region_side=", 0) != 0)
    throw InvalidArgument("scenario record: missing '# region_side=' preamble");
  {
    std::istringstream pre(line.substr(2));
    std::string side, seed;
    pre >> side >> seed;
    sc.region_side = std::stod(side.substr(side.find('=') + 1));
    sc.seed = std::stoull(seed.substr(seed.find('=') + 1));
  }
  if (!std::getline(is, line)) throw InvalidArgument("scenario record: missing header row");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = csv::split(line);
    if (f.size() != 6) throw InvalidArgument("scenario record: expected 6 fields: " + line);
    const Point p(std::stod(f[2]), std::stod(f[3]));
    if (f[0] == "start") {
      sc.start = p;
    } else if (f[0] == "candidate") {
      sc.candidates.push_back(p);
    } else if (f[0] == "sensor") {
      sc.sensors.push_back(Sensor{p, Point(std::stod(f[4]), std::stod(f[5]))});
    } else {
      throw InvalidArgument("scenario record: unknown role '" + f[0] + "'");
    }
  }
  return sc;
}

}  // namespace hideseek

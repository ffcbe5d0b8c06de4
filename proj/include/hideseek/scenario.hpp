#ifndef HIDESEEK_SCENARIO_HPP_
#define HIDESEEK_SCENARIO_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hideseek/geometry.hpp"

namespace hideseek {

/// Noise-free binary reading of a directional sensor.
enum class Measurement : std::int8_t { Negative = -1, Positive = 1 };

inline int sign(Measurement m) { return static_cast<int>(m); }

/// A sensor point with its line {p : normal . (p - position) = 0}.
struct Sensor {
  Point position = Point::Zero();
  Point normal = Point::UnitX();
};

/// One game instance. Point indices follow the game layout: 0 is the start,
/// 1..m are the candidate treasure points and m+1..m+s are the sensors.
struct Scenario {
  double region_side = 1.0;
  std::vector<Point> candidates;
  std::vector<Sensor> sensors;
  Point start = Point::Zero();
  std::uint64_t seed = 0;

  int m() const { return static_cast<int>(candidates.size()); }
  int s() const { return static_cast<int>(sensors.size()); }
  int point_count() const { return 1 + m() + s(); }

  bool is_candidate(int index) const { return index >= 1 && index <= m(); }
  bool is_sensor(int index) const { return index > m() && index <= m() + s(); }

  const Point& point(int index) const;
  const Sensor& sensor_at(int index) const { return sensors.at(static_cast<std::size_t>(index - m() - 1)); }

  double area() const { return region_side * region_side; }
  ConvexRegiond region() const { return ConvexRegiond::square(region_side); }
  /// Scale-free tolerance for point-on-line degeneracy.
  double tolerance() const { return 1e-9 * region_side; }

  /// Measurement of sensor `sensor_index` when the treasure is candidate `treasure_index`.
  Measurement measure(int sensor_index, int treasure_index) const;
};

/// ceil(m / ln(m)^2); requires m >= 2.
int sensor_count(int m);

/// One sensor per cell of an r x c grid (r = round(sqrt(s)), c = ceil(s/r)),
/// first s cells in row-major order, normals uniform on [0, 2pi).
std::vector<Sensor> place_sensors_rect(double region_side, int s, std::uint64_t seed);

/// Largest distance from a grid x grid lattice over the square (corners
/// included) to its nearest sensor.
double max_min_distance(const std::vector<Sensor>& sensors, double region_side, int grid = 200);

/// Candidates i.i.d. uniform, sensors from place_sensors_rect, start at the
/// center. Sensor normals are redrawn while any candidate lies on a sensor line.
Scenario generate_scenario(double region_side, int m, int s, std::uint64_t seed);

/// +1 if the treasure is on the normal side of the sensor line, else -1.
/// Throws DegenerateMeasurement within `tolerance` of the line.
Measurement measure(const Sensor& sensor, const Point& treasure, double tolerance = 1e-9);

/// The closed half-plane that a measurement proves contains the treasure.
HalfPlaned halfplane_of(const Sensor& sensor, Measurement meas);

/// Plain-text record, one line per point: role,index,x,y,nx,ny.
void write_scenario(std::ostream& os, const Scenario& sc);
Scenario read_scenario(std::istream& is);

}  // namespace hideseek

#endif  // HIDESEEK_SCENARIO_HPP_

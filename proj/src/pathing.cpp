#include "hideseek/pathing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace hideseek {

double path_length(const Point& start, const std::vector<Point>& pts, const std::vector<int>& order) {
  double len = 0.0;
  Point at = start;
  for (int i : order) {
    const Point& next = pts[static_cast<std::size_t>(i)];
    len += (next - at).norm();
    at = next;
  }
  return len;
}

Path exact_open_path(const Point& start, const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n > kExactPathLimit) throw TooManyPoints("exact_open_path handles at most 15 points");
  Path path;
  if (n == 0) return path;

  const std::uint32_t full = (1u << n) - 1;
  const std::size_t states = std::size_t{1} << n;
  constexpr double inf = std::numeric_limits<double>::infinity();
  // cost[mask * n + j]: shortest path from start covering `mask`, ending at j.
  std::vector<double> cost(states * n, inf);
  std::vector<std::int8_t> parent(states * n, -1);
  for (int j = 0; j < n; ++j) cost[(std::size_t{1} << j) * n + j] = (pts[j] - start).norm();

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int j = 0; j < n; ++j) {
      const double here = cost[mask * n + j];
      if (!(mask & (1u << j)) || here == inf) continue;
      for (int k = 0; k < n; ++k) {
        if (mask & (1u << k)) continue;
        const std::uint32_t next = mask | (1u << k);
        const double cand = here + (pts[k] - pts[j]).norm();
        if (cand < cost[next * n + k]) {
          cost[next * n + k] = cand;
          parent[next * n + k] = static_cast<std::int8_t>(j);
        }
      }
    }
  }

  int end = 0;
  for (int j = 1; j < n; ++j)
    if (cost[full * n + j] < cost[full * n + end]) end = j;

  path.order.resize(static_cast<std::size_t>(n));
  std::uint32_t mask = full;
  for (int pos = n - 1, j = end; pos >= 0; --pos) {
    path.order[static_cast<std::size_t>(pos)] = j;
    const int prev = parent[mask * n + j];
    mask &= ~(1u << j);
    j = prev;
  }
  path.length = path_length(start, pts, path.order);
  return path;
}

Path strip_path(const Point& start, const std::vector<Point>& pts, const ConvexRegiond& container,
                double ambient_area) {
  (void)ambient_area;
  const int n = static_cast<int>(pts.size());
  Path path;
  if (n == 0) return path;
  if (n == 1) {
    path.order = {0};
    path.length = (pts[0] - start).norm();
    return path;
  }
  if (!(area(container) > 0.0)) throw DegenerateRegion("strip_path needs a container with positive area");

  const OrientedRectangled rect = min_enclosing_rectangle(container);
  const double long_side = rect.long_side();
  const double short_side = std::max(rect.short_side(), std::numeric_limits<double>::min());
  const double h = long_side / short_side;
  const int strips = std::max(1, static_cast<int>(std::ceil(std::sqrt(n * h / 2.0))));
  const double width = long_side / strips;

  struct Item {
    int index;
    int strip;
    double along;  // coordinate across the strips (long axis)
    double sweep;  // coordinate within a strip (short axis)
  };
  std::vector<Item> items;
  items.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point q = rect.local(pts[static_cast<std::size_t>(i)]);
    const int strip = std::clamp(static_cast<int>(std::floor(q.x() / width)), 0, strips - 1);
    items.push_back({i, strip, q.x(), q.y()});
  }

  // Four variants: traverse strips from either short side, and start the
  // first strip's sweep upward or downward. Keep the shortest.
  bool have = false;
  for (int reverse_strips = 0; reverse_strips < 2; ++reverse_strips) {
    for (int first_down = 0; first_down < 2; ++first_down) {
      std::vector<Item> sorted = items;
      std::sort(sorted.begin(), sorted.end(), [&](const Item& a, const Item& b) {
        const int sa = reverse_strips ? strips - 1 - a.strip : a.strip;
        const int sb = reverse_strips ? strips - 1 - b.strip : b.strip;
        if (sa != sb) return sa < sb;
        const bool down = ((sa % 2) == 1) != (first_down == 1);
        if (a.sweep != b.sweep) return down ? a.sweep > b.sweep : a.sweep < b.sweep;
        if (a.along != b.along) return a.along < b.along;
        return a.index < b.index;
      });
      std::vector<int> order;
      order.reserve(sorted.size());
      for (const Item& it : sorted) order.push_back(it.index);
      const double len = path_length(start, pts, order);
      if (!have || len < path.length) {
        path.order = std::move(order);
        path.length = len;
        have = true;
      }
    }
  }
  return path;
}

Path best_path(const Point& start, const std::vector<Point>& pts, const ConvexRegiond& container,
               double ambient_area) {
  if (static_cast<int>(pts.size()) <= kExactPathLimit) return exact_open_path(start, pts);
  return strip_path(start, pts, container, ambient_area);
}

double strip_path_bound(double container_area, int n, double ambient_area) {
  return 2.0 * std::sqrt(container_area * n) + 9.0 / std::numbers::sqrt2 * std::sqrt(ambient_area);
}

}  // namespace hideseek

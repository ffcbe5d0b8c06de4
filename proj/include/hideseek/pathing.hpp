#ifndef HIDESEEK_PATHING_HPP_
#define HIDESEEK_PATHING_HPP_

#include <vector>

#include "hideseek/geometry.hpp"

namespace hideseek {

/// An open path from a fixed start through every input point once.
/// `order` holds positions into the input list; `length` includes the leg
/// from the start to the first point.
struct Path {
  std::vector<int> order;
  double length = 0.0;
};

/// Largest point set handled by the exact subset DP.
inline constexpr int kExactPathLimit = 15;

/// Length of visiting `pts` in `order` starting from `start`.
double path_length(const Point& start, const std::vector<Point>& pts, const std::vector<int>& order);

/// Shortest Hamiltonian path from `start` with a free endpoint (Held-Karp).
/// Throws TooManyPoints above kExactPathLimit.
Path exact_open_path(const Point& start, const std::vector<Point>& pts);

/// Boustrophedon sweep over strips of the minimum enclosing rectangle of
/// `container`, strips running parallel to the rectangle's short side.
/// Throws DegenerateRegion for a zero-area container with more than one point.
Path strip_path(const Point& start, const std::vector<Point>& pts, const ConvexRegiond& container,
                double ambient_area);

/// exact_open_path up to kExactPathLimit points, strip_path beyond.
Path best_path(const Point& start, const std::vector<Point>& pts, const ConvexRegiond& container,
               double ambient_area);

/// 2 sqrt(A n) + (9/sqrt 2) sqrt(ambient_area): upper bound on the shortest
/// path through n points inside a convex container of area A.
double strip_path_bound(double container_area, int n, double ambient_area);

}  // namespace hideseek

#endif  // HIDESEEK_PATHING_HPP_

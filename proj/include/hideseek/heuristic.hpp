#ifndef HIDESEEK_HEURISTIC_HPP_
#define HIDESEEK_HEURISTIC_HPP_

#include <iosfwd>
#include <vector>

#include "hideseek/geometry.hpp"
#include "hideseek/scenario.hpp"

namespace hideseek {

/// Record of one Divide-and-Search run.
///
/// `visited` lists point indices in travel order: first the sensors queried,
/// then the terminal path up to and including the treasure. `cumulative[i]`
/// is the distance travelled on arrival at `visited[i]`. `regions` holds
/// E_0 (the whole square) through E_K, one clip per measurement.
struct SearchTrace {
  std::vector<int> visited;
  std::vector<Measurement> measurements;
  std::vector<ConvexRegiond> regions;
  std::vector<double> cumulative;
  std::vector<int> terminal_candidates;
  double total_distance = 0.0;
  int k_used = 0;

  const ConvexRegiond& final_region() const { return regions.back(); }
  double sensor_distance() const { return k_used == 0 ? 0.0 : cumulative[static_cast<std::size_t>(k_used - 1)]; }
};

/// Measurement budget that minimizes the expected-distance bound:
/// max(0, ceil(ln(sqrt2 ln(3/2) sqrt m) / ln(3/2))).
int kstar(int m);

/// Greedy centroid search: up to `k_budget` times, go to the unvisited sensor
/// strictly inside the current region that is nearest its centroid (ties to
/// the lowest index), measure and clip. Stops early once no unvisited sensor
/// remains inside. Then follows best_path through the candidates still
/// consistent with every measurement; distance stops accruing at the treasure.
SearchTrace divide_and_search(const Scenario& sc, int treasure_index, int k_budget);

/// Worst case over treasure placements of the distance travelled with a
/// budget of kstar(m): the hider's best response to the published heuristic.
double heuristic_security_cost(const Scenario& sc);

/// ((2K+9)/sqrt2 + 2 + 2 sqrt(m) (2/3)^K + sqrt2 ln m) sqrt(ambient_area).
double theorem42_bound(int m, int k, double ambient_area);

/// The closed form obtained by substituting the real-valued minimizer K*.
double theorem42_closed_form(int m, double ambient_area);

/// ((2/3)^k + 1/sqrt(2s)) ambient_area.
double lemma41_bound(int k, int s, double ambient_area);

/// One row per step: t,point_index,x,y,measurement,region_area,cumulative_distance.
void write_trace(std::ostream& os, const Scenario& sc, const SearchTrace& trace);

}  // namespace hideseek

#endif  // HIDESEEK_HEURISTIC_HPP_

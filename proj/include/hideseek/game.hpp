#ifndef HIDESEEK_GAME_HPP_
#define HIDESEEK_GAME_HPP_

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hideseek/scenario.hpp"

namespace hideseek {

/// What the seeker knows: the points visited so far with the reading taken
/// at each (0 for the start and for candidate points, +-1 at sensors).
class InfoState {
 public:
  struct Step {
    int point_index;
    std::int8_t measurement;
  };

  /// The initial state: at the start point, no measurement.
  InfoState() { steps_.push_back({0, 0}); }

  void push(int point_index, std::int8_t measurement) { steps_.push_back({point_index, measurement}); }

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool visited(int point_index) const;

  /// Canonical digest of the state under a policy seed: the steps folded in
  /// order through hash_combine, then the step count.
  std::uint64_t digest(std::uint64_t policy_seed) const;

 private:
  std::vector<Step> steps_;
};

/// A seeker feedback policy: a pure function from information states to the
/// next point, drawn uniformly from all such functions by its seed.
struct SeekerPolicy {
  std::uint64_t seed = 0;
};

/// Dense m x n matrix of negated search costs; column j is the policy with
/// seed column_seeds[j], row i the treasure at candidate i+1.
struct GameMatrix {
  Eigen::MatrixXd entries;
  std::vector<std::uint64_t> column_seeds;
};

/// Next point for `policy` in state `info`: uniform over the unvisited
/// indices of candidates and sensors, keyed by the state digest.
/// Throws Exhausted when every point has been visited.
int policy_action(const SeekerPolicy& policy, const InfoState& info, const Scenario& sc);

/// Distance travelled by `policy` until it visits candidate `treasure_index`.
double simulate_policy(const Scenario& sc, const SeekerPolicy& policy, int treasure_index);

/// The points visited by `policy` when the treasure is at `treasure_index`,
/// ending with the treasure.
std::vector<int> policy_visits(const Scenario& sc, const SeekerPolicy& policy, int treasure_index);

/// entries(i, j) = -simulate_policy(sc, seeds[j], i + 1). Columns are
/// computed independently on `workers` threads and assembled by index.
GameMatrix build_matrix(const Scenario& sc, const std::vector<std::uint64_t>& seeds, int workers = 1);

/// Header `treasure,<seed>...`, one row per treasure index.
void write_matrix(std::ostream& os, const GameMatrix& g);

}  // namespace hideseek

#endif  // HIDESEEK_GAME_HPP_

#include "hideseek/game.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "hideseek/csv.hpp"
#include "hideseek/parallel.hpp"
#include "hideseek/random.hpp"

namespace hideseek {

namespace {

std::uint64_t fold_step(std::uint64_t h, const InfoState::Step& step) {
  const auto idx = static_cast<std::uint64_t>(static_cast<std::uint32_t>(step.point_index));
  const auto meas = static_cast<std::uint64_t>(static_cast<std::int64_t>(step.measurement) + 1);
  return hash_combine(h, (idx << 2) | meas);
}

std::uint64_t finish(std::uint64_t h, std::size_t length) { return hash_combine(h, length); }

// Walks a policy against one treasure. `visit` is called for every point
// reached with the distance travelled so far; the walk stops at the treasure.
template <typename Visit>
void replay(const Scenario& sc, const SeekerPolicy& policy, int treasure_index, Visit&& visit) {
  if (!sc.is_candidate(treasure_index))
    throw InvalidTreasure("treasure index " + std::to_string(treasure_index) + " is not a candidate");
  const int total = sc.m() + sc.s();
  std::vector<int> unvisited(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) unvisited[static_cast<std::size_t>(i)] = i + 1;

  const Point& treasure = sc.point(treasure_index);
  std::uint64_t chain = fold_step(splitmix64(policy.seed), {0, 0});
  std::size_t length = 1;
  Point at = sc.start;
  double travelled = 0.0;
  while (!unvisited.empty()) {
    const std::uint64_t h = finish(chain, length);
    const auto pick = static_cast<std::size_t>(scale_to_range(h, unvisited.size()));
    const int next = unvisited[pick];
    unvisited.erase(unvisited.begin() + static_cast<std::ptrdiff_t>(pick));
    travelled += (sc.point(next) - at).norm();
    at = sc.point(next);
    visit(next, travelled);
    if (next == treasure_index) return;
    std::int8_t meas = 0;
    if (sc.is_sensor(next)) meas = static_cast<std::int8_t>(sign(measure(sc.sensor_at(next), treasure, sc.tolerance())));
    chain = fold_step(chain, {next, meas});
    ++length;
  }
  throw Exhausted("policy visited every point without reaching the treasure");
}

}  // namespace

bool InfoState::visited(int point_index) const {
  return std::any_of(steps_.begin(), steps_.end(), [&](const Step& s) { return s.point_index == point_index; });
}

std::uint64_t InfoState::digest(std::uint64_t policy_seed) const {
  std::uint64_t h = splitmix64(policy_seed);
  for (const Step& step : steps_) h = fold_step(h, step);
  return finish(h, steps_.size());
}

int policy_action(const SeekerPolicy& policy, const InfoState& info, const Scenario& sc) {
  std::vector<int> unvisited;
  for (int i = 1; i <= sc.m() + sc.s(); ++i)
    if (!info.visited(i)) unvisited.push_back(i);
  if (unvisited.empty()) throw Exhausted("no unvisited point left");
  return unvisited[static_cast<std::size_t>(scale_to_range(info.digest(policy.seed), unvisited.size()))];
}

double simulate_policy(const Scenario& sc, const SeekerPolicy& policy, int treasure_index) {
  double cost = 0.0;
  replay(sc, policy, treasure_index, [&](int, double travelled) { cost = travelled; });
  return cost;
}

std::vector<int> policy_visits(const Scenario& sc, const SeekerPolicy& policy, int treasure_index) {
  std::vector<int> visits;
  replay(sc, policy, treasure_index, [&](int index, double) { visits.push_back(index); });
  return visits;
}

GameMatrix build_matrix(const Scenario& sc, const std::vector<std::uint64_t>& seeds, int workers) {
  if (seeds.empty()) throw InvalidArgument("build_matrix needs at least one policy seed");
  GameMatrix g;
  g.column_seeds = seeds;
  g.entries.resize(sc.m(), static_cast<Eigen::Index>(seeds.size()));
  parallel_for(seeds.size(), workers, [&](std::size_t j) {
    const SeekerPolicy policy{seeds[j]};
    for (int i = 1; i <= sc.m(); ++i)
      g.entries(i - 1, static_cast<Eigen::Index>(j)) = -simulate_policy(sc, policy, i);
  });
  return g;
}

void write_matrix(std::ostream& os, const GameMatrix& g) {
  std::vector<std::string> header{"treasure"};
  for (std::uint64_t s : g.column_seeds) header.push_back(csv::format(s));
  csv::write_row(os, header);
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    for (Eigen::Index j = 0; j < g.entries.cols(); ++j) row.push_back(csv::format(g.entries(i, j)));
    csv::write_row(os, row);
  }
}

}  // namespace hideseek

#include "motzkin/weights.hpp"

#include <vector>

#include "motzkin/enumeration.hpp"
#include "motzkin/error.hpp"

namespace motzkin {
namespace {

const Poly& x() {
  static const Poly p = Poly::x();
  return p;
}

Poly one_plus_x_squared() { return pow(Poly{1, 1}, 2); }

// Transfer recurrence over heights; heights above the remaining length can
// never return to the axis and are dropped.
Poly height_transfer(std::size_t length, const Poly& up, const Poly& down,
                     const Poly& level) {
  std::vector<Poly> at_height(1, Poly::one());
  for (std::size_t step = 0; step < length; ++step) {
    const std::size_t remaining = length - step - 1;
    const std::size_t cap = std::min(at_height.size() + 1, remaining + 1);
    std::vector<Poly> next(cap);
    for (std::size_t h = 0; h < at_height.size(); ++h) {
      if (at_height[h].is_zero()) continue;
      if (h < cap) next[h] += at_height[h] * level;
      if (h + 1 < cap) next[h + 1] += at_height[h] * up;
      if (h >= 1 && h - 1 < cap) next[h - 1] += at_height[h] * down;
    }
    at_height = std::move(next);
  }
  return at_height.empty() ? Poly() : at_height[0];
}

}  // namespace

EdgeWeighting theorem1_edge_weights() {
  return EdgeWeighting()
      .with(EdgeCategory::TerminalInterior, x())
      .with(EdgeCategory::TerminalExterior, x());
}

StepWeighting theorem1_step_weights() {
  return StepWeighting().with(Step::Down, x()).with(Step::WavyLevel, x());
}

EdgeWeighting theorem2_edge_weights() {
  const Poly x2 = pow(x(), 2);
  return EdgeWeighting()
      .with(EdgeCategory::TerminalInterior, x2)
      .with(EdgeCategory::TerminalExterior, x2)
      .with(EdgeCategory::NonTerminalInterior, one_plus_x_squared())
      .with(EdgeCategory::NonTerminalExterior, one_plus_x_squared());
}

StepWeighting theorem2_step_weights() {
  const Poly x2 = pow(x(), 2);
  return StepWeighting()
      .with(Step::Down, x2)
      .with(Step::WavyLevel, x2)
      .with(Step::Up, one_plus_x_squared())
      .with(Step::StraightLevel, one_plus_x_squared());
}

StepWeighting transported(const EdgeWeighting& edges) {
  StepWeighting steps;
  for (EdgeCategory c : kEdgeCategories)
    if (auto s = step_for(c)) steps = steps.with(*s, edges[c]);
  return steps;
}

EdgeWeighting pulled_back(const StepWeighting& steps) {
  EdgeWeighting edges;
  for (EdgeCategory c : kEdgeCategories)
    if (auto s = step_for(c)) edges = edges.with(c, steps[*s]);
  return edges;
}

Poly tree_weight(const PlaneTree& tree, const EdgeWeighting& w) {
  Poly product = Poly::one();
  for (const auto& edge : classify_edges(tree)) product *= w[edge.category];
  return product;
}

Poly path_weight(const TwoMotzkinPath& path, const StepWeighting& w) {
  Poly product = Poly::one();
  for (Step s : path.steps()) product *= w[s];
  return product;
}

Poly path_weight(const MotzkinPath& path, const MotzkinWeighting& w) {
  Poly product = Poly::one();
  for (MotzkinStep s : path.steps()) product *= w[s];
  return product;
}

Poly total_tree_weight(unsigned edges, const EdgeWeighting& w) {
  if (edges == 0)
    throw Error(ErrorKind::EmptyTree, "tree weight sums need at least one edge");
  Poly total;
  auto trees = enumerate_plane_trees(edges);
  while (auto t = trees.next()) total += tree_weight(*t, w);
  return total;
}

Poly total_path_weight(std::size_t length, const StepWeighting& w) {
  return height_transfer(length, w[Step::Up], w[Step::Down],
                         w[Step::StraightLevel] + w[Step::WavyLevel]);
}

Poly total_path_weight_enumerated(std::size_t length, const StepWeighting& w) {
  Poly total;
  auto paths = enumerate_two_motzkin(length);
  while (auto p = paths.next()) total += path_weight(*p, w);
  return total;
}

Poly total_motzkin_weight(std::size_t length, const MotzkinWeighting& w) {
  return height_transfer(length, w[MotzkinStep::Up], w[MotzkinStep::Down],
                         w[MotzkinStep::Level]);
}

Poly total_motzkin_weight_enumerated(std::size_t length, const MotzkinWeighting& w) {
  Poly total;
  auto paths = enumerate_motzkin(length);
  while (auto p = paths.next()) total += path_weight(*p, w);
  return total;
}

MotzkinWeighting merge_levels(const StepWeighting& w) {
  return MotzkinWeighting()
      .with(MotzkinStep::Up, w[Step::Up])
      .with(MotzkinStep::Down, w[Step::Down])
      .with(MotzkinStep::Level, w[Step::StraightLevel] + w[Step::WavyLevel]);
}

StepWeighting rebalance_up_down(const StepWeighting& w, const Poly& up, const Poly& down) {
  if (up * down != w[Step::Up] * w[Step::Down])
    throw Error(ErrorKind::ProductMismatch,
                "(" + to_string(up) + ")*(" + to_string(down) + ") differs from (" +
                    to_string(w[Step::Up]) + ")*(" + to_string(w[Step::Down]) + ")");
  return w.with(Step::Up, up).with(Step::Down, down);
}

Poly dotted_step_expansion(std::size_t length, const Poly& g, const Poly& dot) {
  Poly total;
  for (std::size_t k = 0; k <= length; ++k) {
    const BigInt paths = count_only(Family::TwoMotzkin, static_cast<unsigned>(k));
    total += Poly::constant(binomial(static_cast<long>(length), static_cast<long>(k)) * paths) *
             pow(dot, static_cast<unsigned>(length - k)) * pow(g, static_cast<unsigned>(k));
  }
  return total;
}

}  // namespace motzkin

#pragma once

#include <array>
#include <cstddef>

#include "motzkin/bijection.hpp"
#include "motzkin/poly.hpp"
#include "motzkin/structures.hpp"

namespace motzkin {

constexpr std::size_t index_of(EdgeCategory c) { return static_cast<std::size_t>(c); }
constexpr std::size_t index_of(Step s) {
  switch (s) {
    case Step::Up: return 0;
    case Step::Down: return 1;
    case Step::StraightLevel: return 2;
    case Step::WavyLevel: return 3;
  }
  return 0;
}
constexpr std::size_t index_of(MotzkinStep s) {
  switch (s) {
    case MotzkinStep::Up: return 0;
    case MotzkinStep::Down: return 1;
    case MotzkinStep::Level: return 2;
  }
  return 0;
}

/// Total map from a small key set to polynomial weights.
template <class Key, std::size_t N>
class Weighting {
 public:
  /// Every key weighted 1.
  Weighting() { weights_.fill(Poly::one()); }

  const Poly& operator[](Key k) const { return weights_[index_of(k)]; }

  Weighting with(Key k, Poly w) const {
    Weighting copy = *this;
    copy.weights_[index_of(k)] = std::move(w);
    return copy;
  }

  friend bool operator==(const Weighting&, const Weighting&) = default;

 private:
  std::array<Poly, N> weights_;
};

using EdgeWeighting = Weighting<EdgeCategory, 5>;
using StepWeighting = Weighting<Step, 4>;
using MotzkinWeighting = Weighting<MotzkinStep, 3>;

// Terminal non-critical edges weigh x, everything else 1; on paths Down and
// WavyLevel weigh x.
EdgeWeighting theorem1_edge_weights();
StepWeighting theorem1_step_weights();

// Terminal non-critical edges weigh x^2, non-terminal edges (1+x)^2, the
// critical edge 1; on paths Down and WavyLevel weigh x^2, Up and
// StraightLevel (1+x)^2.
EdgeWeighting theorem2_edge_weights();
StepWeighting theorem2_step_weights();

/// Step weighting that tree_to_path transports an edge weighting to: each
/// step takes the weight of the edge category that emits it. The critical
/// edge's weight has no step and is dropped.
StepWeighting transported(const EdgeWeighting& edges);

/// Edge weighting whose transport is `steps`, with the critical edge
/// weighted 1.
EdgeWeighting pulled_back(const StepWeighting& steps);

/// Product of the edge weights. Throws Error(EmptyTree).
Poly tree_weight(const PlaneTree& tree, const EdgeWeighting& w);
Poly path_weight(const TwoMotzkinPath& path, const StepWeighting& w);
Poly path_weight(const MotzkinPath& path, const MotzkinWeighting& w);

/// Sum of tree_weight over every tree with n >= 1 edges, by enumeration.
Poly total_tree_weight(unsigned edges, const EdgeWeighting& w);

/// Sum of path_weight over all 2-Motzkin paths of length m, by a transfer
/// recurrence over heights.
Poly total_path_weight(std::size_t length, const StepWeighting& w);
/// Same sum, by enumerating every path.
Poly total_path_weight_enumerated(std::size_t length, const StepWeighting& w);

Poly total_motzkin_weight(std::size_t length, const MotzkinWeighting& w);
Poly total_motzkin_weight_enumerated(std::size_t length, const MotzkinWeighting& w);

/// Collapses the two level kinds: Level = StraightLevel + WavyLevel.
MotzkinWeighting merge_levels(const StepWeighting& w);

/// Replaces the Up and Down weights by another pair with the same product.
/// Totals over closed paths are unchanged since #Up = #Down on each path.
/// Throws Error(ProductMismatch) when up * down != w[Up] * w[Down].
StepWeighting rebalance_up_down(const StepWeighting& w, const Poly& up, const Poly& down);

/// Total Motzkin weight of length m when Up = Down = g and Level = dot + 2g,
/// expanded by the positions of the dotted (weight `dot`) level steps: the
/// remaining k steps form a 2-Motzkin path whose steps all weigh g, so
///   sum_k C(m, k) dot^(m-k) g^k * #(2-Motzkin paths of length k).
/// The path counts come from the enumeration layer.
Poly dotted_step_expansion(std::size_t length, const Poly& g, const Poly& dot);

}  // namespace motzkin

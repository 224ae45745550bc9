#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "motzkin/structures.hpp"

namespace motzkin {

/// Edge (u, v) is exterior when v is the last child of u, interior
/// otherwise, and terminal when v is a leaf. The critical edge is the
/// terminal edge reached from the root through exterior edges only; it is
/// the last edge in preorder and is not counted as TerminalExterior.
enum class EdgeCategory {
  NonTerminalInterior,
  NonTerminalExterior,
  TerminalInterior,
  TerminalExterior,
  Critical,
};

inline constexpr std::array<EdgeCategory, 5> kEdgeCategories{
    EdgeCategory::NonTerminalInterior, EdgeCategory::NonTerminalExterior,
    EdgeCategory::TerminalInterior, EdgeCategory::TerminalExterior,
    EdgeCategory::Critical};

std::string_view to_string(EdgeCategory category);

/// Edges are identified by their position in the preorder edge traversal
///   (u, v1) P(T1) (u, v2) P(T2) ... (u, vk) P(Tk).
struct ClassifiedEdge {
  std::size_t index;
  EdgeCategory category;

  friend bool operator==(const ClassifiedEdge&, const ClassifiedEdge&) = default;
};

/// One entry per edge, in preorder. Throws Error(EmptyTree) on the 0-edge tree.
std::vector<ClassifiedEdge> classify_edges(const PlaneTree& tree);

/// Step emitted for an edge of the given category; none for the critical edge.
std::optional<Step> step_for(EdgeCategory category);

/// The edge-classifying map from plane trees with n >= 1 edges onto
/// 2-Motzkin paths of length n - 1. Each non-critical edge, read in
/// preorder, emits one step:
///   non-terminal interior -> Up        non-terminal exterior -> StraightLevel
///   terminal interior     -> WavyLevel terminal exterior     -> Down
TwoMotzkinPath tree_to_path(const PlaneTree& tree);

/// Inverse of tree_to_path; every 2-Motzkin path of length m yields a tree
/// with m + 1 edges.
PlaneTree path_to_tree(const TwoMotzkinPath& path);

class CategoryCensus {
 public:
  std::size_t operator[](EdgeCategory c) const noexcept {
    return counts_[static_cast<std::size_t>(c)];
  }
  std::size_t& operator[](EdgeCategory c) noexcept {
    return counts_[static_cast<std::size_t>(c)];
  }
  std::size_t total() const noexcept;

  friend bool operator==(const CategoryCensus&, const CategoryCensus&) = default;

 private:
  std::array<std::size_t, 5> counts_{};
};

CategoryCensus category_census(const PlaneTree& tree);

}  // namespace motzkin

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace motzkin {

/// Rooted ordered tree. The root is implicit: a tree is the ordered list of
/// the subtrees hanging below it, so a tree with n edges has n non-root
/// vertices and the 0-edge tree is the default-constructed value.
class PlaneTree {
 public:
  PlaneTree() = default;
  explicit PlaneTree(std::vector<PlaneTree> children)
      : children_(std::move(children)) {}

  std::span<const PlaneTree> children() const noexcept { return children_; }
  bool is_leaf() const noexcept { return children_.empty(); }
  std::size_t edge_count() const noexcept;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<PlaneTree> children_;
};

/// Balanced-parentheses word: each matched pair is one edge, nesting is
/// parent/child and left-to-right is sibling order.
PlaneTree parse_tree(std::string_view text);
std::string encode_tree(const PlaneTree& tree);

/// Vertices without children. The root only counts in the 0-edge tree.
std::size_t leaf_count(const PlaneTree& tree);

enum class Step : char {
  Up = 'U',
  Down = 'D',
  StraightLevel = 'S',
  WavyLevel = 'W',
};

enum class MotzkinStep : char { Up = 'U', Down = 'D', Level = 'L' };
enum class DyckStep : char { Up = 'U', Down = 'D' };

constexpr int height_change(Step s) {
  return s == Step::Up ? 1 : s == Step::Down ? -1 : 0;
}
constexpr int height_change(MotzkinStep s) {
  return s == MotzkinStep::Up ? 1 : s == MotzkinStep::Down ? -1 : 0;
}
constexpr int height_change(DyckStep s) { return s == DyckStep::Up ? 1 : -1; }

/// Path that starts and ends on the axis and never goes below it. The
/// invariant is checked on construction.
template <class StepT>
class LatticePath {
 public:
  using step_type = StepT;

  LatticePath() = default;
  explicit LatticePath(std::vector<StepT> steps);

  std::span<const StepT> steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t count(StepT s) const noexcept;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<StepT> steps_;
};

using TwoMotzkinPath = LatticePath<Step>;
using MotzkinPath = LatticePath<MotzkinStep>;
using DyckPath = LatticePath<DyckStep>;

extern template class LatticePath<Step>;
extern template class LatticePath<MotzkinStep>;
extern template class LatticePath<DyckStep>;

struct Run {
  DyckStep direction;
  unsigned magnitude;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Dyck path with its up and down steps grouped into ordered runs. Adjacent
/// runs may share a direction: U1 U1 D2 and U2 D2 are different objects.
class MultipleDyckPath {
 public:
  MultipleDyckPath() = default;
  explicit MultipleDyckPath(std::vector<Run> runs);

  std::span<const Run> runs() const noexcept { return runs_; }
  unsigned semilength() const noexcept;
  /// Flattened ordinary Dyck path.
  DyckPath flatten() const;

  friend bool operator==(const MultipleDyckPath&, const MultipleDyckPath&) = default;

 private:
  std::vector<Run> runs_;
};

enum class PathKind { TwoMotzkin, Motzkin, Dyck, MultipleDyck };

TwoMotzkinPath parse_two_motzkin(std::string_view text);
MotzkinPath parse_motzkin(std::string_view text);
DyckPath parse_dyck(std::string_view text);
/// Whitespace-separated tokens such as "U2 D1 D1".
MultipleDyckPath parse_multiple_dyck(std::string_view text);

using AnyPath = std::variant<TwoMotzkinPath, MotzkinPath, DyckPath, MultipleDyckPath>;
AnyPath parse_path(std::string_view text, PathKind kind);

std::string encode(const TwoMotzkinPath& path);
std::string encode(const MotzkinPath& path);
std::string encode(const DyckPath& path);
std::string encode(const MultipleDyckPath& path);

}  // namespace motzkin

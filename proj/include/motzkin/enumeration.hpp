#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/poly.hpp"
#include "motzkin/structures.hpp"

namespace motzkin {

enum class Family { PlaneTrees, TwoMotzkin, Motzkin, Dyck, MultipleDyck };

/// "trees", "2motzkin", "motzkin", "dyck", "mdyck".
std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

namespace detail {

struct Letter {
  char symbol;
  int delta;
};

/// Lazily walks every word of a fixed length over a small alphabet whose
/// running height stays nonnegative and returns to zero, in lexicographic
/// order of the letters' character codes. Memory is O(length).
class LatticeWordGenerator {
 public:
  /// `letters` must be sorted by symbol. Only words starting with `prefix`
  /// are produced.
  LatticeWordGenerator(std::vector<Letter> letters, std::size_t length,
                       std::string_view prefix = {});

  /// Next word, or nullopt once exhausted. The view is valid until the next
  /// call.
  std::optional<std::string_view> next();

 private:
  bool completable(long height, std::size_t remaining) const;
  bool fill_from(std::size_t position);

  std::vector<Letter> letters_;
  std::size_t length_;
  std::size_t fixed_ = 0;
  bool has_level_ = false;
  bool started_ = false;
  bool done_ = false;
  std::string word_;
  std::vector<std::size_t> choice_;   // index into letters_ per position
  std::vector<long> height_before_;
};

}  // namespace detail

/// Every plane tree with n edges, once each, in lexicographic order of the
/// balanced-parentheses encoding.
class PlaneTreeStream {
 public:
  explicit PlaneTreeStream(unsigned edges);
  std::optional<PlaneTree> next();

 private:
  detail::LatticeWordGenerator words_;
};

/// Every path of the given family and length, in lexicographic order of the
/// letter encoding.
template <class Path>
class PathStream {
 public:
  explicit PathStream(std::size_t length);
  std::optional<Path> next();

 private:
  detail::LatticeWordGenerator words_;
};

extern template class PathStream<TwoMotzkinPath>;
extern template class PathStream<MotzkinPath>;

using TwoMotzkinStream = PathStream<TwoMotzkinPath>;
using MotzkinStream = PathStream<MotzkinPath>;

/// Every multiple Dyck path of semilength n: each Dyck path in lexicographic
/// order, and for it every refinement of its maximal runs into ordered
/// compositions, rightmost run varying fastest.
class MultipleDyckStream {
 public:
  explicit MultipleDyckStream(unsigned semilength, std::string_view dyck_prefix = {});
  std::optional<MultipleDyckPath> next();

 private:
  bool load_next_dyck();
  bool advance_refinement();

  detail::LatticeWordGenerator dyck_;
  std::vector<Run> maximal_runs_;
  std::vector<std::vector<unsigned>> parts_;  // current composition per run
  bool pending_ = false;
};

class DyckStream {
 public:
  explicit DyckStream(unsigned semilength);
  std::optional<DyckPath> next();

 private:
  detail::LatticeWordGenerator words_;
};

PlaneTreeStream enumerate_plane_trees(unsigned edges);
TwoMotzkinStream enumerate_two_motzkin(std::size_t length);
MotzkinStream enumerate_motzkin(std::size_t length);
DyckStream enumerate_dyck(unsigned semilength);
MultipleDyckStream enumerate_multiple_dyck(unsigned semilength);

/// Family-erased stream of canonical text encodings.
class EncodingStream {
 public:
  EncodingStream(Family family, unsigned size);
  std::optional<std::string> next();

 private:
  Family family_;
  std::optional<detail::LatticeWordGenerator> words_;
  std::optional<MultipleDyckStream> mdyck_;
};

/// Length of the corresponding stream, counted without materializing the
/// objects. The words are partitioned on their first two letters and the
/// partitions counted concurrently; the sum does not depend on scheduling.
BigInt count_only(Family family, unsigned size);

}  // namespace motzkin

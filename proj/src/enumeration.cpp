#include "motzkin/enumeration.hpp"

#include <future>
#include <type_traits>

#include "motzkin/error.hpp"

namespace motzkin {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::PlaneTrees: return "trees";
    case Family::TwoMotzkin: return "2motzkin";
    case Family::Motzkin: return "motzkin";
    case Family::Dyck: return "dyck";
    case Family::MultipleDyck: return "mdyck";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::PlaneTrees, Family::TwoMotzkin, Family::Motzkin,
                   Family::Dyck, Family::MultipleDyck})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

namespace {

std::vector<detail::Letter> tree_letters() { return {{'(', 1}, {')', -1}}; }
std::vector<detail::Letter> two_motzkin_letters() {
  return {{'D', -1}, {'S', 0}, {'U', 1}, {'W', 0}};
}
std::vector<detail::Letter> motzkin_letters() { return {{'D', -1}, {'L', 0}, {'U', 1}}; }
std::vector<detail::Letter> dyck_letters() { return {{'D', -1}, {'U', 1}}; }

std::vector<detail::Letter> letters_for(Family family) {
  switch (family) {
    case Family::PlaneTrees: return tree_letters();
    case Family::TwoMotzkin: return two_motzkin_letters();
    case Family::Motzkin: return motzkin_letters();
    case Family::Dyck:
    case Family::MultipleDyck: return dyck_letters();
  }
  return {};
}

std::size_t word_length(Family family, unsigned size) {
  switch (family) {
    case Family::PlaneTrees:
    case Family::Dyck:
    case Family::MultipleDyck: return 2 * static_cast<std::size_t>(size);
    case Family::TwoMotzkin:
    case Family::Motzkin: return size;
  }
  return 0;
}

std::vector<Run> maximal_runs(std::string_view dyck_word) {
  std::vector<Run> runs;
  for (char c : dyck_word) {
    const auto dir = static_cast<DyckStep>(c);
    if (!runs.empty() && runs.back().direction == dir)
      ++runs.back().magnitude;
    else
      runs.push_back(Run{dir, 1});
  }
  return runs;
}

}  // namespace

namespace detail {

LatticeWordGenerator::LatticeWordGenerator(std::vector<Letter> letters,
                                           std::size_t length, std::string_view prefix)
    : letters_(std::move(letters)),
      length_(length),
      word_(length, '\0'),
      choice_(length, 0),
      height_before_(length + 1, 0) {
  for (const auto& l : letters_)
    if (l.delta == 0) has_level_ = true;
  if (prefix.size() > length_) {
    done_ = true;
    return;
  }
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    std::size_t k = 0;
    while (k < letters_.size() && letters_[k].symbol != prefix[i]) ++k;
    if (k == letters_.size()) {
      done_ = true;
      return;
    }
    word_[i] = prefix[i];
    choice_[i] = k;
    height_before_[i + 1] = height_before_[i] + letters_[k].delta;
    if (height_before_[i + 1] < 0) {
      done_ = true;
      return;
    }
  }
  fixed_ = prefix.size();
}

bool LatticeWordGenerator::completable(long height, std::size_t remaining) const {
  if (height < 0 || static_cast<std::size_t>(height) > remaining) return false;
  return has_level_ || (remaining - static_cast<std::size_t>(height)) % 2 == 0;
}

bool LatticeWordGenerator::fill_from(std::size_t position) {
  for (std::size_t p = position; p < length_; ++p) {
    const long h = height_before_[p];
    bool placed = false;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      const long next = h + letters_[k].delta;
      if (completable(next, length_ - p - 1)) {
        word_[p] = letters_[k].symbol;
        choice_[p] = k;
        height_before_[p + 1] = next;
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

std::optional<std::string_view> LatticeWordGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!completable(height_before_[fixed_], length_ - fixed_) || !fill_from(fixed_)) {
      done_ = true;
      return std::nullopt;
    }
    return std::string_view(word_);
  }
  for (std::size_t i = length_; i-- > fixed_;) {
    const long h = height_before_[i];
    for (std::size_t k = choice_[i] + 1; k < letters_.size(); ++k) {
      const long next = h + letters_[k].delta;
      if (!completable(next, length_ - i - 1)) continue;
      word_[i] = letters_[k].symbol;
      choice_[i] = k;
      height_before_[i + 1] = next;
      if (!fill_from(i + 1))
        throw Error(ErrorKind::InvalidArgument, "lattice word completion failed");
      return std::string_view(word_);
    }
  }
  done_ = true;
  return std::nullopt;
}

}  // namespace detail

PlaneTreeStream::PlaneTreeStream(unsigned edges)
    : words_(tree_letters(), 2 * static_cast<std::size_t>(edges)) {}

std::optional<PlaneTree> PlaneTreeStream::next() {
  auto w = words_.next();
  if (!w) return std::nullopt;
  return parse_tree(*w);
}

template <class Path>
PathStream<Path>::PathStream(std::size_t length)
    : words_(std::is_same_v<Path, TwoMotzkinPath> ? two_motzkin_letters()
                                                   : motzkin_letters(),
             length) {}

template <class Path>
std::optional<Path> PathStream<Path>::next() {
  auto w = words_.next();
  if (!w) return std::nullopt;
  std::vector<typename Path::step_type> steps;
  steps.reserve(w->size());
  for (char c : *w) steps.push_back(static_cast<typename Path::step_type>(c));
  return Path(std::move(steps));
}

template class PathStream<TwoMotzkinPath>;
template class PathStream<MotzkinPath>;

DyckStream::DyckStream(unsigned semilength)
    : words_(dyck_letters(), 2 * static_cast<std::size_t>(semilength)) {}

std::optional<DyckPath> DyckStream::next() {
  auto w = words_.next();
  if (!w) return std::nullopt;
  return parse_dyck(*w);
}

MultipleDyckStream::MultipleDyckStream(unsigned semilength, std::string_view dyck_prefix)
    : dyck_(dyck_letters(), 2 * static_cast<std::size_t>(semilength), dyck_prefix) {}

bool MultipleDyckStream::load_next_dyck() {
  auto w = dyck_.next();
  if (!w) return false;
  maximal_runs_ = maximal_runs(*w);
  parts_.clear();
  for (const auto& r : maximal_runs_) parts_.emplace_back(r.magnitude, 1U);
  pending_ = true;
  return true;
}

bool MultipleDyckStream::advance_refinement() {
  for (std::size_t r = parts_.size(); r-- > 0;) {
    auto& p = parts_[r];
    if (p.size() < 2) continue;
    // Lexicographic successor of a composition: bump the second-to-last
    // part and spread the rest of the last part as ones.
    const unsigned last = p.back();
    p.pop_back();
    ++p.back();
    p.insert(p.end(), last - 1, 1U);
    for (std::size_t later = r + 1; later < parts_.size(); ++later)
      parts_[later].assign(maximal_runs_[later].magnitude, 1U);
    return true;
  }
  return false;
}

std::optional<MultipleDyckPath> MultipleDyckStream::next() {
  if (!pending_ && !load_next_dyck()) return std::nullopt;
  std::vector<Run> runs;
  for (std::size_t r = 0; r < parts_.size(); ++r)
    for (unsigned part : parts_[r]) runs.push_back(Run{maximal_runs_[r].direction, part});
  if (!advance_refinement()) pending_ = false;
  return MultipleDyckPath(std::move(runs));
}

PlaneTreeStream enumerate_plane_trees(unsigned edges) { return PlaneTreeStream(edges); }
TwoMotzkinStream enumerate_two_motzkin(std::size_t length) { return TwoMotzkinStream(length); }
MotzkinStream enumerate_motzkin(std::size_t length) { return MotzkinStream(length); }
DyckStream enumerate_dyck(unsigned semilength) { return DyckStream(semilength); }
MultipleDyckStream enumerate_multiple_dyck(unsigned semilength) {
  return MultipleDyckStream(semilength);
}

EncodingStream::EncodingStream(Family family, unsigned size) : family_(family) {
  if (family == Family::MultipleDyck)
    mdyck_.emplace(size);
  else
    words_.emplace(letters_for(family), word_length(family, size));
}

std::optional<std::string> EncodingStream::next() {
  if (family_ == Family::MultipleDyck) {
    auto p = mdyck_->next();
    if (!p) return std::nullopt;
    return encode(*p);
  }
  auto w = words_->next();
  if (!w) return std::nullopt;
  return std::string(*w);
}

namespace {

// Number of objects one underlying word stands for.
BigInt count_partition(Family family, detail::LatticeWordGenerator words) {
  BigInt total = 0;
  if (family != Family::MultipleDyck) {
    std::uint64_t n = 0;
    while (words.next()) ++n;
    return n;
  }
  // A run of length r has 2^(r-1) compositions.
  while (auto w = words.next()) {
    unsigned free_cuts = 0;
    for (const auto& r : maximal_runs(*w)) free_cuts += r.magnitude - 1;
    total += BigInt(1) << free_cuts;
  }
  return total;
}

}  // namespace

BigInt count_only(Family family, unsigned size) {
  const auto letters = letters_for(family);
  const std::size_t length = word_length(family, size);
  std::vector<std::string> prefixes{""};
  for (std::size_t depth = 0; depth < std::min<std::size_t>(2, length); ++depth) {
    std::vector<std::string> longer;
    for (const auto& p : prefixes)
      for (const auto& l : letters) longer.push_back(p + l.symbol);
    prefixes = std::move(longer);
  }
  std::vector<std::future<BigInt>> parts;
  parts.reserve(prefixes.size());
  for (const auto& p : prefixes)
    parts.push_back(std::async(std::launch::async, [family, &letters, length, p] {
      return count_partition(family, detail::LatticeWordGenerator(letters, length, p));
    }));
  BigInt total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

}  // namespace motzkin

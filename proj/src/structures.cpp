#include "motzkin/structures.hpp"

#include <algorithm>
#include <cctype>

#include "motzkin/error.hpp"

namespace motzkin {

std::size_t PlaneTree::edge_count() const noexcept {
  std::size_t n = children_.size();
  for (const auto& c : children_) n += c.edge_count();
  return n;
}

PlaneTree parse_tree(std::string_view text) {
  // Frames of children under construction; frame 0 belongs to the root.
  std::vector<std::vector<PlaneTree>> open(1);
  std::vector<std::size_t> open_at;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') {
      open.emplace_back();
      open_at.push_back(i);
    } else if (c == ')') {
      if (open.size() == 1)
        throw Error(ErrorKind::UnbalancedParentheses, "unmatched ')'", i);
      PlaneTree closed(std::move(open.back()));
      open.pop_back();
      open_at.pop_back();
      open.back().push_back(std::move(closed));
    } else {
      throw Error(ErrorKind::IllegalCharacter,
                  std::string("unexpected '") + c + "' in tree encoding", i);
    }
  }
  if (open.size() != 1)
    throw Error(ErrorKind::UnbalancedParentheses, "unclosed '('", text.size());
  return PlaneTree(std::move(open.front()));
}

namespace {

void encode_into(const PlaneTree& tree, std::string& out) {
  for (const auto& child : tree.children()) {
    out += '(';
    encode_into(child, out);
    out += ')';
  }
}

std::size_t leaves_below(const PlaneTree& tree) {
  std::size_t n = 0;
  for (const auto& child : tree.children())
    n += child.is_leaf() ? 1 : leaves_below(child);
  return n;
}

template <class StepT>
void check_path(std::span<const StepT> steps) {
  long height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += height_change(steps[i]);
    if (height < 0)
      throw Error(ErrorKind::NegativePrefix, "path goes below the axis", i);
  }
  if (height != 0)
    throw Error(ErrorKind::NotClosed,
                "path ends at height " + std::to_string(height), steps.size());
}

template <class StepT>
LatticePath<StepT> parse_letters(std::string_view text, std::string_view alphabet) {
  std::vector<StepT> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (alphabet.find(text[i]) == std::string_view::npos)
      throw Error(ErrorKind::IllegalCharacter,
                  std::string("unexpected '") + text[i] + "', expected one of " +
                      std::string(alphabet),
                  i);
    steps.push_back(static_cast<StepT>(text[i]));
  }
  return LatticePath<StepT>(std::move(steps));
}

template <class StepT>
std::string encode_letters(const LatticePath<StepT>& path) {
  std::string out;
  out.reserve(path.length());
  for (StepT s : path.steps()) out += static_cast<char>(s);
  return out;
}

}  // namespace

std::string encode_tree(const PlaneTree& tree) {
  std::string out;
  encode_into(tree, out);
  return out;
}

std::size_t leaf_count(const PlaneTree& tree) {
  return tree.is_leaf() ? 1 : leaves_below(tree);
}

template <class StepT>
LatticePath<StepT>::LatticePath(std::vector<StepT> steps) : steps_(std::move(steps)) {
  check_path<StepT>(steps_);
}

template <class StepT>
std::size_t LatticePath<StepT>::count(StepT s) const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), s));
}

template class LatticePath<Step>;
template class LatticePath<MotzkinStep>;
template class LatticePath<DyckStep>;

MultipleDyckPath::MultipleDyckPath(std::vector<Run> runs) : runs_(std::move(runs)) {
  long height = 0;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].magnitude == 0)
      throw Error(ErrorKind::InvalidArgument, "run magnitude must be at least 1");
    height += height_change(runs_[i].direction) * static_cast<long>(runs_[i].magnitude);
    if (height < 0)
      throw Error(ErrorKind::NegativePrefix, "path goes below the axis", i);
  }
  if (height != 0)
    throw Error(ErrorKind::NotClosed,
                "path ends at height " + std::to_string(height), runs_.size());
}

unsigned MultipleDyckPath::semilength() const noexcept {
  unsigned n = 0;
  for (const auto& r : runs_)
    if (r.direction == DyckStep::Up) n += r.magnitude;
  return n;
}

DyckPath MultipleDyckPath::flatten() const {
  std::vector<DyckStep> steps;
  for (const auto& r : runs_) steps.insert(steps.end(), r.magnitude, r.direction);
  return DyckPath(std::move(steps));
}

TwoMotzkinPath parse_two_motzkin(std::string_view text) {
  return parse_letters<Step>(text, "UDSW");
}

MotzkinPath parse_motzkin(std::string_view text) {
  return parse_letters<MotzkinStep>(text, "UDL");
}

DyckPath parse_dyck(std::string_view text) { return parse_letters<DyckStep>(text, "UD"); }

MultipleDyckPath parse_multiple_dyck(std::string_view text) {
  std::vector<Run> runs;
  std::vector<std::size_t> token_at;
  std::size_t i = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const char dir = text[i];
    token_at.push_back(i);
    if (dir != 'U' && dir != 'D')
      throw Error(ErrorKind::IllegalCharacter,
                  std::string("unexpected '") + dir + "', expected U or D", i);
    ++i;
    if (i >= text.size() || !is_digit(text[i]) || text[i] == '0')
      throw Error(ErrorKind::IllegalCharacter, "expected a run length of at least 1", i);
    unsigned long magnitude = 0;
    while (i < text.size() && is_digit(text[i])) {
      magnitude = magnitude * 10 + static_cast<unsigned long>(text[i] - '0');
      if (magnitude > 1'000'000)
        throw Error(ErrorKind::IllegalCharacter, "run length too large", i);
      ++i;
    }
    if (i < text.size() && !is_space(text[i]))
      throw Error(ErrorKind::IllegalCharacter, "tokens must be whitespace separated", i);
    runs.push_back(Run{static_cast<DyckStep>(dir), static_cast<unsigned>(magnitude)});
  }
  try {
    return MultipleDyckPath(std::move(runs));
  } catch (const Error& e) {
    // Report a character offset rather than a run index.
    const std::size_t run = e.position().value_or(token_at.size());
    const std::size_t at = run < token_at.size() ? token_at[run] : text.size();
    const std::string message = e.what();
    const auto colon = message.find(": ");
    throw Error(e.kind(), colon == std::string::npos ? "" : message.substr(colon + 2), at);
  }
}

AnyPath parse_path(std::string_view text, PathKind kind) {
  switch (kind) {
    case PathKind::TwoMotzkin: return parse_two_motzkin(text);
    case PathKind::Motzkin: return parse_motzkin(text);
    case PathKind::Dyck: return parse_dyck(text);
    case PathKind::MultipleDyck: return parse_multiple_dyck(text);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown path kind");
}

std::string encode(const TwoMotzkinPath& path) { return encode_letters(path); }
std::string encode(const MotzkinPath& path) { return encode_letters(path); }
std::string encode(const DyckPath& path) { return encode_letters(path); }

std::string encode(const MultipleDyckPath& path) {
  std::string out;
  for (const auto& r : path.runs()) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(r.direction);
    out += std::to_string(r.magnitude);
  }
  return out;
}

}  // namespace motzkin

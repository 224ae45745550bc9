#include "motzkin/bijection.hpp"

#include "motzkin/error.hpp"

namespace motzkin {

std::string_view to_string(EdgeCategory category) {
  switch (category) {
    case EdgeCategory::NonTerminalInterior: return "NonTerminalInterior";
    case EdgeCategory::NonTerminalExterior: return "NonTerminalExterior";
    case EdgeCategory::TerminalInterior: return "TerminalInterior";
    case EdgeCategory::TerminalExterior: return "TerminalExterior";
    case EdgeCategory::Critical: return "Critical";
  }
  return "Unknown";
}

namespace {

void classify_below(const PlaneTree& vertex, bool on_exterior_chain,
                    std::vector<ClassifiedEdge>& out) {
  const auto children = vertex.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    const PlaneTree& child = children[i];
    const bool exterior = i + 1 == children.size();
    const bool terminal = child.is_leaf();
    EdgeCategory category;
    if (terminal && exterior && on_exterior_chain)
      category = EdgeCategory::Critical;
    else if (terminal)
      category = exterior ? EdgeCategory::TerminalExterior : EdgeCategory::TerminalInterior;
    else
      category = exterior ? EdgeCategory::NonTerminalExterior
                          : EdgeCategory::NonTerminalInterior;
    out.push_back(ClassifiedEdge{out.size(), category});
    classify_below(child, on_exterior_chain && exterior, out);
  }
}

void require_edges(const PlaneTree& tree) {
  if (tree.is_leaf())
    throw Error(ErrorKind::EmptyTree, "operation needs a tree with at least one edge");
}

}  // namespace

std::vector<ClassifiedEdge> classify_edges(const PlaneTree& tree) {
  require_edges(tree);
  std::vector<ClassifiedEdge> out;
  classify_below(tree, true, out);
  if (out.back().category != EdgeCategory::Critical)
    throw Error(ErrorKind::InvalidArgument, "critical edge is not last in preorder");
  return out;
}

std::optional<Step> step_for(EdgeCategory category) {
  switch (category) {
    case EdgeCategory::NonTerminalInterior: return Step::Up;
    case EdgeCategory::NonTerminalExterior: return Step::StraightLevel;
    case EdgeCategory::TerminalInterior: return Step::WavyLevel;
    case EdgeCategory::TerminalExterior: return Step::Down;
    case EdgeCategory::Critical: return std::nullopt;
  }
  return std::nullopt;
}

TwoMotzkinPath tree_to_path(const PlaneTree& tree) {
  std::vector<Step> steps;
  for (const auto& edge : classify_edges(tree))
    if (auto s = step_for(edge.category)) steps.push_back(*s);
  return TwoMotzkinPath(std::move(steps));
}

PlaneTree path_to_tree(const TwoMotzkinPath& path) {
  // Vertices live in a flat arena while the shape is built in preorder.
  std::vector<std::vector<std::size_t>> children(1);
  auto add_child = [&children](std::size_t parent) {
    children.emplace_back();
    children[parent].push_back(children.size() - 1);
    return children.size() - 1;
  };

  // `current` receives the next edge; `open` holds ancestors that still
  // expect a later (eventually exterior) child.
  std::size_t current = 0;
  std::vector<std::size_t> open;
  for (Step s : path.steps()) {
    switch (s) {
      case Step::Up: {
        const std::size_t v = add_child(current);
        open.push_back(current);
        current = v;
        break;
      }
      case Step::StraightLevel: current = add_child(current); break;
      case Step::WavyLevel: add_child(current); break;
      case Step::Down:
        add_child(current);
        current = open.back();
        open.pop_back();
        break;
    }
  }
  add_child(current);  // critical edge

  auto build = [&children](auto&& self, std::size_t v) -> PlaneTree {
    std::vector<PlaneTree> subtrees;
    subtrees.reserve(children[v].size());
    for (std::size_t c : children[v]) subtrees.push_back(self(self, c));
    return PlaneTree(std::move(subtrees));
  };
  return build(build, 0);
}

std::size_t CategoryCensus::total() const noexcept {
  std::size_t n = 0;
  for (auto c : counts_) n += c;
  return n;
}

CategoryCensus category_census(const PlaneTree& tree) {
  CategoryCensus census;
  for (const auto& edge : classify_edges(tree)) ++census[edge.category];
  return census;
}

}  // namespace motzkin

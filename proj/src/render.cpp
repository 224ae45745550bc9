#include "motzkin/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace motzkin {
namespace {

void list_below(const PlaneTree& tree, std::size_t depth, std::string& out) {
  for (const auto& child : tree.children()) {
    out.append(2 * depth, ' ');
    out += "o\n";
    list_below(child, depth + 1, out);
  }
}

char glyph(Step s) {
  switch (s) {
    case Step::Up: return '/';
    case Step::Down: return '\\';
    case Step::StraightLevel: return '-';
    case Step::WavyLevel: return '~';
  }
  return '?';
}

// Row on which a step is drawn, given the height before it.
long row_of(Step s, long height) { return s == Step::Down ? height - 1 : height; }

struct Placed {
  double x;
  double y;
};

// Leaves get consecutive columns; an internal vertex sits above the middle
// of its children.
double place(const PlaneTree& tree, std::size_t depth, double& next_leaf_x,
             std::vector<Placed>& vertices, std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t self = vertices.size();
  vertices.push_back({0, static_cast<double>(depth)});
  if (tree.is_leaf()) {
    vertices[self].x = next_leaf_x;
    next_leaf_x += 1;
    return vertices[self].x;
  }
  double first = 0;
  double last = 0;
  bool seen = false;
  for (const auto& child : tree.children()) {
    const std::size_t child_index = vertices.size();
    edges.emplace_back(self, child_index);
    const double cx = place(child, depth + 1, next_leaf_x, vertices, edges);
    if (!seen) first = cx;
    last = cx;
    seen = true;
  }
  vertices[self].x = (first + last) / 2;
  return vertices[self].x;
}

}  // namespace

std::string render_tree(const PlaneTree& tree) {
  std::string out = "*\n";
  list_below(tree, 1, out);
  return out;
}

std::string render_path(const TwoMotzkinPath& path) {
  const auto steps = path.steps();
  long height = 0;
  long top = 0;
  std::vector<long> rows;
  rows.reserve(steps.size());
  for (Step s : steps) {
    rows.push_back(row_of(s, height));
    height += height_change(s);
    top = std::max(top, rows.back());
  }
  std::string out;
  for (long r = top; r >= 0; --r) {
    std::string line(steps.size(), ' ');
    for (std::size_t i = 0; i < steps.size(); ++i)
      if (rows[i] == r) line[i] = glyph(steps[i]);
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_tree_svg(const PlaneTree& tree) {
  std::vector<Placed> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  double next_leaf_x = 0;
  place(tree, 0, next_leaf_x, vertices, edges);
  double width = 1;
  double depth = 0;
  for (const auto& v : vertices) {
    width = std::max(width, v.x + 1);
    depth = std::max(depth, v.y);
  }
  const double unit = 30;
  const double margin = 15;
  auto sx = [&](double x) { return margin + x * unit; };
  auto sy = [&](double y) { return margin + y * unit; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + (width - 1) * unit
      << "\" height=\"" << 2 * margin + depth * unit << "\">\n";
  for (const auto& [from, to] : edges)
    svg << "  <line x1=\"" << sx(vertices[from].x) << "\" y1=\"" << sy(vertices[from].y)
        << "\" x2=\"" << sx(vertices[to].x) << "\" y2=\"" << sy(vertices[to].y)
        << "\" stroke=\"black\"/>\n";
  for (const auto& v : vertices)
    svg << "  <circle cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\"3\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string render_path_svg(const TwoMotzkinPath& path) {
  const double unit = 20;
  const double margin = 10;
  long height = 0;
  long top = 0;
  for (Step s : path.steps()) {
    height += height_change(s);
    top = std::max(top, height);
  }
  auto sx = [&](double x) { return margin + x * unit; };
  auto sy = [&](double h) { return margin + (static_cast<double>(top) - h) * unit; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << 2 * margin + static_cast<double>(path.length()) * unit << "\" height=\""
      << 2 * margin + static_cast<double>(top) * unit << "\">\n";
  height = 0;
  std::size_t i = 0;
  for (Step s : path.steps()) {
    const long after = height + height_change(s);
    svg << "  <line x1=\"" << sx(static_cast<double>(i)) << "\" y1=\"" << sy(static_cast<double>(height))
        << "\" x2=\"" << sx(static_cast<double>(i + 1)) << "\" y2=\"" << sy(static_cast<double>(after))
        << "\" stroke=\"black\"" << (s == Step::WavyLevel ? " stroke-dasharray=\"3,2\"" : "")
        << "/>\n";
    height = after;
    ++i;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace motzkin

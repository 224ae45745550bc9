#include "doctest.h"

#include "motzkin/render.hpp"

using namespace motzkin;

TEST_CASE("path height profile") {
  CHECK(render_path(parse_two_motzkin("UWDS")) == " ~  \n/ \\-\n");
  CHECK(render_path(parse_two_motzkin("SW")) == "-~\n");
  CHECK(render_path(parse_two_motzkin("UUDD")) == " /\\ \n/  \\\n");
  CHECK(render_path(parse_two_motzkin("")) == "\n");
}

TEST_CASE("indented tree listing") {
  CHECK(render_tree(parse_tree("()()")) == "*\n  o\n  o\n");
  CHECK(render_tree(parse_tree("(())")) == "*\n  o\n    o\n");
  CHECK(render_tree(PlaneTree()) == "*\n");
}

TEST_CASE("svg output") {
  const auto tree = render_tree_svg(parse_tree("(())()"));
  CHECK(tree.rfind("<svg", 0) == 0);
  CHECK(tree.find("</svg>") != std::string::npos);
  std::size_t circles = 0;
  for (auto at = tree.find("<circle"); at != std::string::npos; at = tree.find("<circle", at + 1))
    ++circles;
  CHECK(circles == 4);

  const auto path = render_path_svg(parse_two_motzkin("UWD"));
  std::size_t lines = 0;
  for (auto at = path.find("<line"); at != std::string::npos; at = path.find("<line", at + 1))
    ++lines;
  CHECK(lines == 3);
  CHECK(path.find("stroke-dasharray") != std::string::npos);
  CHECK(render_path_svg(parse_two_motzkin("UWD")) == path);
}

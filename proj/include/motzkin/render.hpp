#pragma once

#include <string>

#include "motzkin/structures.hpp"

namespace motzkin {

/// One line per vertex in preorder, indented two spaces per depth. The root
/// is drawn as '*', other vertices as 'o'.
std::string render_tree(const PlaneTree& tree);

/// Height profile, one column per step and one row per height (top row
/// first): '/' up, '\' down, '-' straight level, '~' wavy level.
std::string render_path(const TwoMotzkinPath& path);

std::string render_tree_svg(const PlaneTree& tree);
std::string render_path_svg(const TwoMotzkinPath& path);

}  // namespace motzkin

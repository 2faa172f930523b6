#pragma once

#include <string>

#include "coalp/cotree.hpp"

namespace coalp {

/// Deterministic DOT rendering: and-nodes as labelled ellipses, or-nodes
/// as filled points, unit-clause boxes as square nodes. Node ids follow
/// preorder, so exporting the same tree twice is byte-identical.
std::string exportDot(const CoTree& t);

}  // namespace coalp

#pragma once

#include <string>
#include <string_view>

#include "rotsys/rotation_graph.hpp"

namespace rotsys {

// `.rot` text format, one vertex per line:
//     <vertex-id>: <n1> <n2> ... <nk>
// where the neighbor list is the counterclockwise cyclic order. `#` starts
// a comment, blank lines are ignored, ids are non-whitespace tokens.
RotationGraph parse_rotation_graph(std::string_view text);

// Writes vertices lexicographically; each rotation starts at its
// lexicographically smallest neighbor. parse(serialize(g)) == g.
std::string serialize_rotation_graph(const RotationGraph& g);

RotationGraph load_rotation_graph(const std::string& path);
void save_rotation_graph(const RotationGraph& g, const std::string& path);

}  // namespace rotsys

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotsys/budget.hpp"
#include "rotsys/rotation_graph.hpp"

namespace rotsys {

// Color lists indexed by vertex. Colors are opaque small integers with no
// meaning beyond equality; each list is kept sorted ascending.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    std::string to_text(const RotationGraph& g) const;
};

// One line per vertex: `<vertex-id>: c1 c2 c3`. Every graph vertex must
// get a nonempty list.
ListAssignment parse_list_assignment(std::string_view text, const RotationGraph& g);

struct Coloring {
    std::vector<int> color;  // by vertex index
};

bool coloring_is_proper(const RotationGraph& g, const Coloring& c);

// Least k admitting a proper k-coloring. Exact branch and bound with a
// greedy clique lower bound. Guards: vertex cap (default 64) and step cap.
int chromatic_number(const RotationGraph& g, const SearchBudget& budget = {});

// An L-coloring if one exists. Exhaustive backtracking, smallest list
// first. Total: no budget needed at the scales the engine accepts.
std::optional<Coloring> solve_list_coloring(const RotationGraph& g, const ListAssignment& L);

struct ChoosabilityResult {
    bool choosable = false;
    // A bad assignment when not choosable: sized per `sizes`, colors
    // relabeled 1,2,... by first appearance in vertex order.
    std::optional<ListAssignment> witness;
    std::uint64_t assignments_checked = 0;
};

// True iff every list assignment with |L(v)| = sizes(v) admits an
// L-coloring. Exhaustive over canonical assignments from a palette of
// sum(sizes) colors; see choosability.cpp for the search-space reductions.
// Guard: |V| <= 9 unless budget.max_vertices raises it.
ChoosabilityResult is_f_choosable(const RotationGraph& g, const std::vector<int>& sizes,
                                  const SearchBudget& budget = {});

// Maximal 2-connected subgraphs (blocks) as sorted vertex sets. Isolated
// vertices yield no block.
std::vector<std::vector<int>> blocks(const RotationGraph& g);

// True iff some block of g is neither a complete graph nor an odd cycle.
// Structural, no search. Requires a connected graph.
bool is_degree_choosable(const RotationGraph& g);

}  // namespace rotsys

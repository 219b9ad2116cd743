#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotsys/budget.hpp"
#include "rotsys/rotation_graph.hpp"

namespace rotsys {

enum class Pattern { K5, K5Minus, W4, Cycle };

std::string pattern_name(Pattern p);

struct PatternHit {
    Pattern pattern;
    int cycle_length = 0;              // set for Pattern::Cycle
    std::vector<std::string> witness;  // vertex ids realizing the pattern
};

// Subgraph (not induced) containment of K5, K5 minus an edge, or W4
// (K5 minus two non-incident edges), scanning 5-sets in lexicographic
// order. The first witness 5-set is returned.
std::optional<PatternHit> find_k5_variant(const RotationGraph& g, Pattern which);

// A cycle of length exactly `len` (witness lists the cycle in order), or
// nullopt. Exhaustive DFS with a canonical start: smallest vertex first,
// second vertex smaller than the last.
std::optional<PatternHit> has_cycle_of_length(const RotationGraph& g, int len,
                                              const SearchBudget& budget = {});

// A hamiltonian cycle as a cyclic vertex ordering, or nullopt. Requires a
// connected graph. Backtracking with degree-sorted branching.
std::optional<std::vector<std::string>> find_hamiltonian_cycle(const RotationGraph& g,
                                                               const SearchBudget& budget = {});

}  // namespace rotsys

#pragma once

#include <string>
#include <vector>

#include "rotsys/budget.hpp"
#include "rotsys/colorlab.hpp"
#include "rotsys/faces.hpp"
#include "rotsys/rotation_graph.hpp"

namespace rotsys {

// The five local structures that cannot occur in a vertex-minimal
// non-4-choosable graph: deleting the set S and extending a coloring of
// the rest across it always succeeds.
enum class ReducibleKind {
    EvenCycle4Reg,     // S all of degree 4 in G, G[S] an even cycle
    ChordedCycle4Reg,  // S all of degree 4 in G, G[S] a cycle plus one chord
    W4_44445,          // G-degrees (4,4,4,4,5), G[S] = W4
    FiveFaceDeg1,      // 5-face incident to a vertex of G-degree 1
    SixFaceDeg1,       // 6-face incident to a vertex of G-degree 1
};

std::string reducible_kind_name(ReducibleKind k);

struct ReducibleHit {
    ReducibleKind kind;
    std::vector<std::string> vertex_set;  // sorted ids of S
};

// All reducible hits in g, deduplicated by (kind, vertex set), sorted.
// Faces are traced internally for the two face kinds.
std::vector<ReducibleHit> find_reducible(const RotationGraph& g,
                                         const SearchBudget& budget = {});

struct ReducibilityCertificate {
    ReducibleKind kind;
    bool certified = false;
    // For the three coloring kinds: the degree-sized list profile under
    // which the induced structure is degree-choosable, plus both routes.
    std::vector<int> list_sizes;
    bool oracle_choosable = false;     // exhaustive list enumeration
    bool structural_choosable = false; // block classification
    std::string statement;
};

// Certifies why a structure of the given kind is reducible. For the three
// coloring kinds `structure` is the abstract induced graph G[S] and the
// certificate is degree-choosability under internal degrees. For the two
// face kinds the certificate is the minimum-degree statement. Throws
// ValidationError when `structure` does not match `kind`.
ReducibilityCertificate certify_reducibility(ReducibleKind kind, const RotationGraph& structure,
                                             const SearchBudget& budget = {});

}  // namespace rotsys

#pragma once

#include <string>
#include <vector>

#include "rotsys/colorlab.hpp"
#include "rotsys/rotation_graph.hpp"

namespace rotsys {

enum class Family { GS, GPrime };

// Parameters of a generated graph. For GS the derived value k = 2s is the
// largest k such that the graph has no cycle of length l for 6 <= l <= k.
struct FamilySpec {
    Family family;
    int s = 0;

    int derived_k() const { return 2 * s; }
    int expected_vertices() const { return family == Family::GS ? 4 * s + 1 : 4 * s + 5; }
    int expected_edges() const { return family == Family::GS ? 9 * s + 1 : 10 * s + 10; }
};

// Chain of s copies of K5-minus-an-edge, consecutive copies sharing a
// vertex, closed by one extra edge. Ships a rotation system of Euler
// genus 1 (validated by the embedding summary, not assumed). Requires
// s >= 2.
RotationGraph generate_gs(int s);

// Chain of 2s+1 copies of K4, consecutive copies sharing an edge, plus an
// apex vertex joined to the four free end vertices. Duplicate edges from
// the identification are merged. Rotation system of Euler genus 1.
// Requires s >= 1.
RotationGraph generate_gprime(int s);

struct FamilyCertificate {
    struct Item {
        std::string name;
        bool passed = false;
        std::string detail;
    };
    std::vector<Item> items;
    Coloring five_coloring;  // a concrete proper 5-coloring
    bool all_passed = true;
};

// Certifies the generated graph: vertex/edge counts, chromatic number 5
// (with the witness coloring), genus 1, and the family's structural
// properties (GS: no K5, K5-minus present, no l-cycle for 6 <= l <= 2s;
// GPrime: no K5-minus, hamiltonian). Throws CertificationError when any
// item fails; these are theorem-level facts about the construction.
FamilyCertificate certify_family(const RotationGraph& g, const FamilySpec& spec);

}  // namespace rotsys

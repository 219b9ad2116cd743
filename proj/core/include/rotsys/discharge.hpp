#pragma once

#include <string>
#include <vector>

#include "rotsys/budget.hpp"
#include "rotsys/faces.hpp"
#include "rotsys/rational.hpp"
#include "rotsys/reducer.hpp"
#include "rotsys/rotation_graph.hpp"

namespace rotsys {

enum class Verdict { Pass, Fail, Vacuous };
std::string verdict_name(Verdict v);

// Vertex and face classification driving the charge rules. All face
// incidences are counted per corner: a vertex incident to a face twice
// contributes two corners.
struct VertexClass {
    int degree = 0;
    int three_face_corners = 0;
    int four_face_corners = 0;
    bool special = false;  // degree 4, on a 4-face, exactly two 3-face corners
    bool bad3 = false;     // degree 4, exactly three 3-face corners
    bool bad4 = false;     // degree 4, exactly four 3-face corners
    bool good = false;     // neither bad nor special
    bool bad() const { return bad3 || bad4; }

    // (target vertex, level): this vertex is responsible for the adjacent
    // bad target, the shared edge lying on `level` 3-faces. For degree-4
    // vertices only level 2 entries are recorded.
    std::vector<std::pair<int, int>> responsibilities;
};

struct Classification {
    std::vector<VertexClass> vertex;
    std::vector<bool> face_great;        // degree >= 7
    std::vector<bool> face_degenerate6;  // degree 6 with a repeated corner
};

Classification classify(const RotationGraph& g, const FaceSet& faces);

struct ElementRef {
    enum Kind { Vertex, Face } kind = Vertex;
    int index = 0;
};

struct Transfer {
    ElementRef source;
    ElementRef target;
    Rational amount;
    const char* rule;  // "R1".."R6"
};

// Exact per-element charges. Conservation (sum of final equals sum of
// initial) holds by construction and is re-verified in tests.
struct ChargeLedger {
    std::vector<Rational> vertex_initial, face_initial;
    std::vector<Rational> vertex_final, face_final;
    std::vector<Transfer> transfers;

    Rational initial_total() const;
    Rational final_total() const;
};

// mu(v) = d(v) - 6 per vertex, mu(f) = 2 d(f) - 6 per face; the total is
// the exact value 6E - 6V - 6F.
ChargeLedger initial_charges(const RotationGraph& g, const FaceSet& faces);

// Runs the two synchronous phases. Phase F moves face charge to incident
// vertices (rules R1-R3), computed from initial charges; phase V moves
// vertex charge to bad vertices (rules R4-R6), computed from the charges
// after phase F. Every transfer is logged.
void apply_rules(const RotationGraph& g, const FaceSet& faces, const Classification& classes,
                 ChargeLedger& ledger);

struct CheckOutcome {
    std::string id;
    Verdict verdict = Verdict::Vacuous;
    std::string witness;
};

struct DischargeReport {
    // Hypothesis flags for the structure theorems.
    bool k5minus_free = false;
    bool six_cycle_free = false;
    bool min_degree_4 = false;
    bool genus_at_most_1 = false;
    bool hypotheses_hold() const {
        return k5minus_free && six_cycle_free && min_degree_4 && genus_at_most_1;
    }

    std::vector<ReducibleHit> reducible_hits;

    Rational initial_total, final_total;
    bool conservation_exact = false;
    bool initial_total_matches_euler_form = false;  // == 6E - 6V - 6F

    // Elements ending with negative final charge.
    std::vector<std::pair<std::string, Rational>> negative_final;

    // Sign-condition checklist for the per-element final-charge claims.
    std::vector<CheckOutcome> checklist;

    ChargeLedger ledger;
    Classification classes;
};

// Full pipeline on a connected embedded graph: hypotheses, reducible
// scan, charges, rules, conservation, and the claim checklist. Claims are
// Vacuous when a hypothesis fails or a reducible configuration exists.
DischargeReport verify_discharge(const RotationGraph& g, const SearchBudget& budget = {});

std::string element_name(const RotationGraph& g, ElementRef ref);

}  // namespace rotsys

#pragma once

#include <string>
#include <vector>

#include "rotsys/budget.hpp"
#include "rotsys/discharge.hpp"
#include "rotsys/rotation_graph.hpp"

namespace rotsys {

// One structural check, addressable by id. The checks test, by direct
// quantifier scan over vertices, faces and cyclic corner windows, the
// local statements that hold in any embedded graph satisfying the global
// hypotheses (no k5minus subgraph, no 6-cycle, minimum degree 4, genus at
// most 1). Two checks additionally presuppose the absence of the
// coloring-reducible configurations (see the gate table in the README):
// their verdict is Vacuous while such a configuration is present.
struct AuditCheckResult {
    std::string id;
    Verdict verdict = Verdict::Vacuous;
    std::string witness;  // Fail: violating tuple; Vacuous: failed premise
};

struct AuditReport {
    bool k5minus_free = false;
    bool six_cycle_free = false;
    bool min_degree_4 = false;
    bool genus_at_most_1 = false;
    bool hypotheses_hold() const {
        return k5minus_free && six_cycle_free && min_degree_4 && genus_at_most_1;
    }
    std::string failed_hypothesis;  // empty when hypotheses hold
    int reducible_coloring_hits = 0;  // kinds backed by the coloring argument

    std::vector<AuditCheckResult> checks;
};

// Requires a connected graph with a valid embedding.
AuditReport run_audit(const RotationGraph& g, const SearchBudget& budget = {});

// Ids in report order.
const std::vector<std::string>& audit_check_ids();

}  // namespace rotsys

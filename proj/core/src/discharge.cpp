#include "rotsys/discharge.hpp"

#include <algorithm>

#include "rotsys/detect.hpp"

namespace rotsys {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Vacuous: return "VACUOUS";
    }
    return "?";
}

std::string element_name(const RotationGraph& g, ElementRef ref) {
    if (ref.kind == ElementRef::Vertex) return "v:" + g.id(ref.index);
    return "f:" + std::to_string(ref.index);
}

namespace {

// Number of 3-faces on the edge uv, counting the two sides.
int three_faces_on_edge(const FaceSet& faces, int u, int v) {
    int count = 0;
    if (faces.degree(faces.face_of(u, v)) == 3) ++count;
    if (faces.degree(faces.face_of(v, u)) == 3) ++count;
    return count;
}

}  // namespace

Classification classify(const RotationGraph& g, const FaceSet& faces) {
    const int n = g.vertex_count();
    Classification cls;
    cls.vertex.resize(n);
    cls.face_great.resize(faces.face_count());
    cls.face_degenerate6.resize(faces.face_count());

    for (int f = 0; f < faces.face_count(); ++f) {
        cls.face_great[f] = faces.degree(f) >= 7;
        cls.face_degenerate6[f] = faces.degree(f) == 6 && faces.degenerate(f);
    }

    for (int v = 0; v < n; ++v) {
        VertexClass& c = cls.vertex[v];
        c.degree = g.degree(v);
        for (int f : faces.faces_around(v)) {
            if (faces.degree(f) == 3) ++c.three_face_corners;
            if (faces.degree(f) == 4) ++c.four_face_corners;
        }
        if (c.degree == 4) {
            c.special = c.four_face_corners > 0 && c.three_face_corners == 2;
            c.bad3 = c.three_face_corners == 3;
            c.bad4 = c.three_face_corners == 4;
        }
    }
    for (int v = 0; v < n; ++v) {
        VertexClass& c = cls.vertex[v];
        c.good = !c.bad() && !c.special;
        for (int u : g.rotation(v)) {
            if (!cls.vertex[u].bad()) continue;
            const int level = three_faces_on_edge(faces, v, u);
            if (c.degree >= 5 && (level == 1 || level == 2))
                c.responsibilities.emplace_back(u, level);
            else if (c.degree == 4 && level == 2)
                c.responsibilities.emplace_back(u, level);
        }
        std::sort(c.responsibilities.begin(), c.responsibilities.end());
    }
    return cls;
}

Rational ChargeLedger::initial_total() const {
    Rational t;
    for (const auto& r : vertex_initial) t += r;
    for (const auto& r : face_initial) t += r;
    return t;
}

Rational ChargeLedger::final_total() const {
    Rational t;
    for (const auto& r : vertex_final) t += r;
    for (const auto& r : face_final) t += r;
    return t;
}

ChargeLedger initial_charges(const RotationGraph& g, const FaceSet& faces) {
    ChargeLedger ledger;
    ledger.vertex_initial.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        ledger.vertex_initial.emplace_back(g.degree(v) - 6);
    ledger.face_initial.reserve(faces.face_count());
    for (int f = 0; f < faces.face_count(); ++f)
        ledger.face_initial.emplace_back(2 * faces.degree(f) - 6);
    ledger.vertex_final = ledger.vertex_initial;
    ledger.face_final = ledger.face_initial;
    return ledger;
}

namespace {

void move_charge(ChargeLedger& ledger, ElementRef from, ElementRef to, const Rational& amount,
                 const char* rule) {
    if (amount == Rational(0)) return;
    auto& src = from.kind == ElementRef::Vertex ? ledger.vertex_final[from.index]
                                                : ledger.face_final[from.index];
    auto& dst = to.kind == ElementRef::Vertex ? ledger.vertex_final[to.index]
                                              : ledger.face_final[to.index];
    src -= amount;
    dst += amount;
    ledger.transfers.push_back({from, to, amount, rule});
}

}  // namespace

void apply_rules(const RotationGraph& g, const FaceSet& faces, const Classification& classes,
                 ChargeLedger& ledger) {
    // Phase F: faces pay incident vertices, per corner, out of initial
    // charge. A face with no eligible recipient for the remainder keeps it.
    for (int f = 0; f < faces.face_count(); ++f) {
        const int d = faces.degree(f);
        const ElementRef fref{ElementRef::Face, f};
        const Rational mu = ledger.face_initial[f];
        if (d == 4) {
            // R1: 1 per special corner, 1/5 per 5+ corner, remainder split
            // over non-special 4-corners.
            Rational fixed(0);
            int plain4 = 0;
            for (const DirectedEdge& e : faces.walk(f)) {
                const VertexClass& c = classes.vertex[e.from];
                if (c.special)
                    fixed += 1;
                else if (c.degree >= 5)
                    fixed += Rational(1, 5);
                else if (c.degree == 4)
                    ++plain4;
            }
            const Rational remainder = mu - fixed;
            for (const DirectedEdge& e : faces.walk(f)) {
                const VertexClass& c = classes.vertex[e.from];
                const ElementRef vref{ElementRef::Vertex, e.from};
                if (c.special)
                    move_charge(ledger, fref, vref, Rational(1), "R1");
                else if (c.degree >= 5)
                    move_charge(ledger, fref, vref, Rational(1, 5), "R1");
                else if (c.degree == 4)
                    move_charge(ledger, fref, vref, remainder / plain4, "R1");
            }
        } else if (d == 5) {
            // R2: 4/7 per 5+ corner, remainder split over 4-corners.
            Rational fixed(0);
            int fours = 0;
            for (const DirectedEdge& e : faces.walk(f)) {
                const int deg = classes.vertex[e.from].degree;
                if (deg >= 5)
                    fixed += Rational(4, 7);
                else if (deg == 4)
                    ++fours;
            }
            const Rational remainder = mu - fixed;
            for (const DirectedEdge& e : faces.walk(f)) {
                const int deg = classes.vertex[e.from].degree;
                const ElementRef vref{ElementRef::Vertex, e.from};
                if (deg >= 5)
                    move_charge(ledger, fref, vref, Rational(4, 7), "R2");
                else if (deg == 4)
                    move_charge(ledger, fref, vref, remainder / fours, "R2");
            }
        } else if (d >= 6) {
            // R3: uniform per corner.
            const Rational share = mu / d;
            for (const DirectedEdge& e : faces.walk(f))
                move_charge(ledger, fref, {ElementRef::Vertex, e.from}, share, "R3");
        }
    }

    // Phase V reads the post-phase-F vertex charges.
    const std::vector<Rational> after_f = ledger.vertex_final;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexClass& c = classes.vertex[v];
        const ElementRef vref{ElementRef::Vertex, v};
        if (c.degree == 4 && c.good && !c.responsibilities.empty()) {
            // R4: a good 4-vertex sends its excess, split over its targets.
            const Rational excess = std::max(after_f[v], Rational(0));
            const Rational share = excess / static_cast<int>(c.responsibilities.size());
            for (auto [target, level] : c.responsibilities)
                move_charge(ledger, vref, {ElementRef::Vertex, target}, share, "R4");
        } else if (c.degree >= 5) {
            for (auto [target, level] : c.responsibilities) {
                if (level == 2)
                    move_charge(ledger, vref, {ElementRef::Vertex, target}, Rational(1), "R5");
                else
                    move_charge(ledger, vref, {ElementRef::Vertex, target}, Rational(2, 7), "R6");
            }
        }
    }
}

namespace {

void add_check(DischargeReport& report, const std::string& id, Verdict gate, bool holds,
               const std::string& witness) {
    CheckOutcome out;
    out.id = id;
    if (gate == Verdict::Vacuous) {
        out.verdict = Verdict::Vacuous;
        out.witness = witness.empty() ? "premises do not apply" : witness;
    } else {
        out.verdict = holds ? Verdict::Pass : Verdict::Fail;
        if (!holds) out.witness = witness;
    }
    report.checklist.push_back(std::move(out));
}

}  // namespace

DischargeReport verify_discharge(const RotationGraph& g, const SearchBudget& budget) {
    if (!g.connected()) throw ValidationError("verify_discharge requires a connected graph");

    DischargeReport report;
    const FaceSet faces = trace_faces(g);

    report.k5minus_free = !find_k5_variant(g, Pattern::K5Minus).has_value();
    report.six_cycle_free = !has_cycle_of_length(g, 6, budget).has_value();
    report.min_degree_4 = g.min_degree() >= 4;
    const EmbeddingSummary emb = summarize_embedding(g);
    report.genus_at_most_1 = emb.genus.has_value() && *emb.genus <= 1;

    report.reducible_hits = find_reducible(g, budget);

    report.classes = classify(g, faces);
    report.ledger = initial_charges(g, faces);
    apply_rules(g, faces, report.classes, report.ledger);

    report.initial_total = report.ledger.initial_total();
    report.final_total = report.ledger.final_total();
    report.conservation_exact = report.initial_total == report.final_total;
    const Rational euler_form(6 * g.edge_count() - 6 * g.vertex_count() - 6 * faces.face_count());
    report.initial_total_matches_euler_form = report.initial_total == euler_form;

    for (int v = 0; v < g.vertex_count(); ++v)
        if (report.ledger.vertex_final[v] < Rational(0))
            report.negative_final.emplace_back("v:" + g.id(v), report.ledger.vertex_final[v]);
    for (int f = 0; f < faces.face_count(); ++f)
        if (report.ledger.face_final[f] < Rational(0))
            report.negative_final.emplace_back("f:" + std::to_string(f),
                                               report.ledger.face_final[f]);

    // Claim checklist. All claims presuppose the hypotheses and the absence
    // of reducible configurations; otherwise they are Vacuous.
    const bool applicable = report.hypotheses_hold() && report.reducible_hits.empty();
    const Verdict gate = applicable ? Verdict::Pass : Verdict::Vacuous;
    std::string gate_witness;
    if (!applicable) {
        if (!report.k5minus_free) gate_witness = "k5minus present";
        else if (!report.six_cycle_free) gate_witness = "6-cycle present";
        else if (!report.min_degree_4) gate_witness = "min degree < 4";
        else if (!report.genus_at_most_1) gate_witness = "genus > 1";
        else gate_witness = "reducible configuration present";
    }

    const auto& led = report.ledger;
    const auto& cls = report.classes;
    auto adjacent_to_bad = [&](int v) {
        for (int u : g.rotation(v))
            if (cls.vertex[u].bad()) return true;
        return false;
    };
    auto incident_great = [&](int v) {
        for (int f : faces.faces_around(v))
            if (cls.face_great[f]) return true;
        return false;
    };
    auto incident_degen6 = [&](int v) {
        for (int f : faces.faces_around(v))
            if (cls.face_degenerate6[f]) return true;
        return false;
    };

    {  // 4-faces and 5-faces end nonnegative
        for (int d : {4, 5}) {
            bool holds = true;
            std::string witness;
            for (int f = 0; f < faces.face_count() && holds; ++f)
                if (faces.degree(f) == d && led.face_final[f] < Rational(0)) {
                    holds = false;
                    witness = "f:" + std::to_string(f) + " final " + to_string(led.face_final[f]);
                }
            add_check(report, d == 4 ? "4face" : "5face", gate, holds,
                      gate_witness.empty() ? witness : gate_witness);
        }
    }
    {  // 6+-vertices: nonnegative; positive when not adjacent to a bad vertex
        bool holds = true;
        std::string witness;
        for (int v = 0; v < g.vertex_count() && holds; ++v) {
            if (cls.vertex[v].degree < 6) continue;
            if (led.vertex_final[v] < Rational(0) ||
                (!adjacent_to_bad(v) && led.vertex_final[v] <= Rational(0))) {
                holds = false;
                witness = "v:" + g.id(v) + " final " + to_string(led.vertex_final[v]);
            }
        }
        add_check(report, "6vertex", gate, holds,
                  gate_witness.empty() ? witness : gate_witness);
    }
    {  // 5-vertices: nonnegative; positive when not adjacent to a bad vertex
        bool holds = true;
        std::string witness;
        for (int v = 0; v < g.vertex_count() && holds; ++v) {
            if (cls.vertex[v].degree != 5) continue;
            if (led.vertex_final[v] < Rational(0) ||
                (!adjacent_to_bad(v) && led.vertex_final[v] <= Rational(0))) {
                holds = false;
                witness = "v:" + g.id(v) + " final " + to_string(led.vertex_final[v]);
            }
        }
        add_check(report, "5vertex", gate, holds,
                  gate_witness.empty() ? witness : gate_witness);
    }
    {  // good 4-vertices nonnegative
        bool holds = true;
        std::string witness;
        for (int v = 0; v < g.vertex_count() && holds; ++v) {
            const VertexClass& c = cls.vertex[v];
            if (c.degree != 4 || !c.good) continue;
            if (led.vertex_final[v] < Rational(0)) {
                holds = false;
                witness = "v:" + g.id(v) + " final " + to_string(led.vertex_final[v]);
            }
        }
        add_check(report, "good4vertex", gate, holds,
                  gate_witness.empty() ? witness : gate_witness);
    }
    {  // special vertices nonnegative
        bool holds = true;
        std::string witness;
        for (int v = 0; v < g.vertex_count() && holds; ++v) {
            if (!cls.vertex[v].special) continue;
            if (led.vertex_final[v] < Rational(0)) {
                holds = false;
                witness = "v:" + g.id(v) + " final " + to_string(led.vertex_final[v]);
            }
        }
        add_check(report, "special", gate, holds,
                  gate_witness.empty() ? witness : gate_witness);
    }
    {  // 3-bad vertices on a great face end positive
        bool holds = true;
        std::string witness;
        for (int v = 0; v < g.vertex_count() && holds; ++v) {
            if (!cls.vertex[v].bad3 || !incident_great(v)) continue;
            if (led.vertex_final[v] <= Rational(0)) {
                holds = false;
                witness = "v:" + g.id(v) + " final " + to_string(led.vertex_final[v]);
            }
        }
        add_check(report, "3bad-great", gate, holds,
                  gate_witness.empty() ? witness : gate_witness);
    }
    {  // 3-bad vertices on a degenerate 6-face end positive
        bool holds = true;
        std::string witness;
        for (int v = 0; v < g.vertex_count() && holds; ++v) {
            if (!cls.vertex[v].bad3 || !incident_degen6(v)) continue;
            if (led.vertex_final[v] <= Rational(0)) {
                holds = false;
                witness = "v:" + g.id(v) + " final " + to_string(led.vertex_final[v]);
            }
        }
        add_check(report, "3bad-degen6", gate, holds,
                  gate_witness.empty() ? witness : gate_witness);
    }
    {  // 4-bad vertices end positive
        bool holds = true;
        std::string witness;
        for (int v = 0; v < g.vertex_count() && holds; ++v) {
            if (!cls.vertex[v].bad4) continue;
            if (led.vertex_final[v] <= Rational(0)) {
                holds = false;
                witness = "v:" + g.id(v) + " final " + to_string(led.vertex_final[v]);
            }
        }
        add_check(report, "4bad", gate, holds,
                  gate_witness.empty() ? witness : gate_witness);
    }

    return report;
}

}  // namespace rotsys

#include "rotsys/reducer.hpp"

#include <algorithm>
#include <set>

namespace rotsys {

std::string reducible_kind_name(ReducibleKind k) {
    switch (k) {
        case ReducibleKind::EvenCycle4Reg: return "even-cycle-4reg";
        case ReducibleKind::ChordedCycle4Reg: return "chorded-cycle-4reg";
        case ReducibleKind::W4_44445: return "w4-44445";
        case ReducibleKind::FiveFaceDeg1: return "5face-deg1";
        case ReducibleKind::SixFaceDeg1: return "6face-deg1";
    }
    return "?";
}

namespace {

std::vector<std::string> ids_sorted(const RotationGraph& g, const std::vector<int>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(g.id(v));
    std::sort(out.begin(), out.end());
    return out;
}

int induced_edge_count(const RotationGraph& g, const std::vector<int>& set) {
    int m = 0;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) ++m;
    return m;
}

// Enumerates the vertex sets of all cycles lying inside the degree-4
// vertices, via canonical-start DFS (smallest vertex first, second smaller
// than last). Each set is classified by its induced edge count.
void find_cycle_kinds(const RotationGraph& g, StepCounter& steps,
                      std::set<std::pair<int, std::vector<std::string>>>& out) {
    const int n = g.vertex_count();
    std::vector<char> deg4(n, 0);
    for (int v = 0; v < n; ++v) deg4[v] = g.degree(v) == 4;

    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    auto classify = [&](const std::vector<int>& cycle) {
        const int len = static_cast<int>(cycle.size());
        const int m = induced_edge_count(g, cycle);
        if (m == len && len % 2 == 0) {
            // induced even cycle
            out.insert({0, ids_sorted(g, cycle)});
        } else if (m == len + 1) {
            // cycle plus one extra induced edge: check it is a chord of
            // some hamiltonian cycle of G[S], i.e. removing the edge
            // between the two degree-3 vertices leaves a single cycle.
            std::vector<int> inner_deg(cycle.size(), 0);
            for (std::size_t i = 0; i < cycle.size(); ++i)
                for (std::size_t j = 0; j < cycle.size(); ++j)
                    if (i != j && g.adjacent(cycle[i], cycle[j])) ++inner_deg[i];
            int d3 = 0;
            for (int d : inner_deg) d3 += d == 3;
            if (d3 == 2) out.insert({1, ids_sorted(g, cycle)});
        }
    };

    auto dfs = [&](auto&& self, int start) -> void {
        steps.tick("reducible search budget exceeded");
        const int last = path.back();
        if (path.size() >= 3 && g.adjacent(last, start) && path[1] < last)
            classify(path);
        for (int u : g.rotation(last)) {
            if (!deg4[u] || u <= start || on_path[u]) continue;
            path.push_back(u);
            on_path[u] = 1;
            self(self, start);
            on_path[u] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        if (!deg4[s]) continue;
        path = {s};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(dfs, s);
    }
}

// The enumerated set S for the chord kind comes from its outer cycle; a
// chorded cycle also contains two shorter cycles whose vertex sets are
// proper subsets, and those subsets carry induced edge count |S'| + 1 only
// when they themselves are chorded cycles, so the classification above is
// per-set correct.

bool is_w4(const RotationGraph& g, const std::vector<int>& set) {
    if (induced_edge_count(g, set) != 8) return false;
    std::vector<std::pair<int, int>> missing;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!g.adjacent(set[i], set[j])) missing.emplace_back(i, j);
    const auto [a, b] = missing[0];
    const auto [c, d] = missing[1];
    return a != c && a != d && b != c && b != d;
}

}  // namespace

std::vector<ReducibleHit> find_reducible(const RotationGraph& g, const SearchBudget& budget) {
    StepCounter steps(budget.max_steps);
    std::set<std::pair<int, std::vector<std::string>>> cycle_sets;
    find_cycle_kinds(g, steps, cycle_sets);

    std::vector<ReducibleHit> hits;
    for (const auto& [code, ids] : cycle_sets)
        hits.push_back({code == 0 ? ReducibleKind::EvenCycle4Reg : ReducibleKind::ChordedCycle4Reg,
                        ids});

    // Kind (degrees 4,4,4,4,5 inducing W4): scan 5-sets of candidate
    // degrees only.
    const int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 4 || g.degree(v) == 5) cand.push_back(v);
    const int k = static_cast<int>(cand.size());
    std::vector<int> set(5);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d)
                    for (int e = d + 1; e < k; ++e) {
                        steps.tick("reducible search budget exceeded");
                        set = {cand[a], cand[b], cand[c], cand[d], cand[e]};
                        int fives = 0;
                        for (int v : set) fives += g.degree(v) == 5;
                        if (fives != 1) continue;
                        if (is_w4(g, set))
                            hits.push_back({ReducibleKind::W4_44445, ids_sorted(g, set)});
                    }

    // Face kinds: a 5- or 6-face incident to a vertex of degree 1.
    const FaceSet faces = trace_faces(g);
    for (int f = 0; f < faces.face_count(); ++f) {
        const int d = faces.degree(f);
        if (d != 5 && d != 6) continue;
        for (int v : faces.vertices_on(f)) {
            if (g.degree(v) == 1) {
                hits.push_back({d == 5 ? ReducibleKind::FiveFaceDeg1 : ReducibleKind::SixFaceDeg1,
                                ids_sorted(g, faces.vertices_on(f))});
                break;
            }
        }
    }

    std::sort(hits.begin(), hits.end(), [](const ReducibleHit& a, const ReducibleHit& b) {
        return std::pair(static_cast<int>(a.kind), a.vertex_set) <
               std::pair(static_cast<int>(b.kind), b.vertex_set);
    });
    hits.erase(std::unique(hits.begin(), hits.end(),
                           [](const ReducibleHit& a, const ReducibleHit& b) {
                               return a.kind == b.kind && a.vertex_set == b.vertex_set;
                           }),
               hits.end());
    return hits;
}

namespace {

bool structure_matches(ReducibleKind kind, const RotationGraph& s) {
    const int n = s.vertex_count();
    const int m = s.edge_count();
    switch (kind) {
        case ReducibleKind::EvenCycle4Reg: {
            if (n < 4 || n % 2 != 0 || m != n) return false;
            for (int v = 0; v < n; ++v)
                if (s.degree(v) != 2) return false;
            return s.connected();
        }
        case ReducibleKind::ChordedCycle4Reg: {
            if (n < 4 || m != n + 1 || !s.connected()) return false;
            std::vector<int> d3;
            for (int v = 0; v < n; ++v) {
                if (s.degree(v) == 3)
                    d3.push_back(v);
                else if (s.degree(v) != 2)
                    return false;
            }
            // Removing the chord must leave one hamiltonian cycle, which
            // for degrees (3,3,2..2) fails only for two cycles joined by
            // an edge; that case disconnects when the edge is removed.
            if (d3.size() != 2 || !s.adjacent(d3[0], d3[1])) return false;
            std::vector<int> keep;
            for (int v = 0; v < n; ++v) keep.push_back(v);
            // walk the cycle from d3[0] avoiding the chord edge
            int prev = d3[0];
            int cur = -1;
            for (int u : s.rotation(prev))
                if (u != d3[1]) {
                    cur = u;
                    break;
                }
            int steps = 1;
            while (cur != d3[0]) {
                int next = -1;
                for (int u : s.rotation(cur))
                    if (u != prev && !(cur == d3[1] && u == d3[0])) {
                        next = u;
                        break;
                    }
                if (next == -1) return false;
                prev = cur;
                cur = next;
                ++steps;
            }
            return steps == n;
        }
        case ReducibleKind::W4_44445: {
            if (n != 5 || m != 8) return false;
            std::vector<std::pair<int, int>> missing;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (!s.adjacent(i, j)) missing.emplace_back(i, j);
            const auto [a, b] = missing[0];
            const auto [c, d] = missing[1];
            return a != c && a != d && b != c && b != d;
        }
        case ReducibleKind::FiveFaceDeg1:
        case ReducibleKind::SixFaceDeg1:
            return true;  // face kinds carry no abstract structure to match
    }
    return false;
}

}  // namespace

ReducibilityCertificate certify_reducibility(ReducibleKind kind, const RotationGraph& structure,
                                             const SearchBudget& budget) {
    if (!structure_matches(kind, structure))
        throw ValidationError("structure does not match reducible kind " +
                              reducible_kind_name(kind));

    ReducibilityCertificate cert;
    cert.kind = kind;
    if (kind == ReducibleKind::FiveFaceDeg1 || kind == ReducibleKind::SixFaceDeg1) {
        cert.certified = true;
        cert.statement = "violates minimum degree 4";
        return cert;
    }

    // Any outside precoloring leaves each vertex of S a residual list at
    // least as large as its degree inside S, so degree-choosability of the
    // induced structure certifies the extension.
    cert.list_sizes.resize(structure.vertex_count());
    for (int v = 0; v < structure.vertex_count(); ++v) cert.list_sizes[v] = structure.degree(v);
    cert.oracle_choosable = is_f_choosable(structure, cert.list_sizes, budget).choosable;
    cert.structural_choosable = is_degree_choosable(structure);
    cert.certified = cert.oracle_choosable && cert.structural_choosable;
    cert.statement = "degree-choosable under internal degree lists";
    return cert;
}

}  // namespace rotsys

#include "rotsys/detect.hpp"

#include <algorithm>

namespace rotsys {

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::K5: return "k5";
        case Pattern::K5Minus: return "k5minus";
        case Pattern::W4: return "w4";
        case Pattern::Cycle: return "cycle";
    }
    return "?";
}

namespace {

std::vector<std::string> ids_of(const RotationGraph& g, const std::vector<int>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(g.id(v));
    return out;
}

// Missing pairs within the 5-set, as index pairs into `set`.
std::vector<std::pair<int, int>> non_edges(const RotationGraph& g, const std::vector<int>& set) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!g.adjacent(set[i], set[j])) out.emplace_back(i, j);
    return out;
}

bool five_set_matches(const RotationGraph& g, const std::vector<int>& set, Pattern which) {
    const auto missing = non_edges(g, set);
    switch (which) {
        case Pattern::K5:
            return missing.empty();
        case Pattern::K5Minus:
            return missing.size() <= 1;
        case Pattern::W4:
            // Need two non-incident pairs covering every non-edge.
            if (missing.size() <= 1) return true;
            if (missing.size() == 2) {
                const auto [a, b] = missing[0];
                const auto [c, d] = missing[1];
                return a != c && a != d && b != c && b != d;
            }
            return false;
        case Pattern::Cycle:
            break;
    }
    return false;
}

}  // namespace

std::optional<PatternHit> find_k5_variant(const RotationGraph& g, Pattern which) {
    const int n = g.vertex_count();
    if (n < 5) return std::nullopt;
    std::vector<int> set(5);
    for (set[0] = 0; set[0] < n; ++set[0])
        for (set[1] = set[0] + 1; set[1] < n; ++set[1])
            for (set[2] = set[1] + 1; set[2] < n; ++set[2])
                for (set[3] = set[2] + 1; set[3] < n; ++set[3])
                    for (set[4] = set[3] + 1; set[4] < n; ++set[4])
                        if (five_set_matches(g, set, which))
                            return PatternHit{which, 0, ids_of(g, set)};
    return std::nullopt;
}

namespace {

struct CycleSearch {
    const RotationGraph& g;
    int len;
    StepCounter steps;
    std::vector<int> path;
    std::vector<char> on_path;

    // Path vertices stay above path[0]; the canonical traversal direction is
    // fixed by path[1] < closing neighbor.
    bool extend() {
        steps.tick("cycle search budget exceeded");
        const int depth = static_cast<int>(path.size());
        const int last = path.back();
        if (depth == len) return g.adjacent(last, path[0]) && path[1] < last;
        for (int u : sorted_neighbors(last)) {
            if (u <= path[0] || on_path[u]) continue;
            path.push_back(u);
            on_path[u] = 1;
            if (extend()) return true;
            on_path[u] = 0;
            path.pop_back();
        }
        return false;
    }

    std::vector<int> sorted_neighbors(int v) const {
        std::vector<int> nb(g.rotation(v).begin(), g.rotation(v).end());
        std::sort(nb.begin(), nb.end());
        return nb;
    }
};

}  // namespace

std::optional<PatternHit> has_cycle_of_length(const RotationGraph& g, int len,
                                              const SearchBudget& budget) {
    if (len < 3) throw ValidationError("cycle length must be at least 3");
    const int n = g.vertex_count();
    if (len > n) return std::nullopt;
    CycleSearch search{g, len, StepCounter(budget.max_steps), {}, std::vector<char>(n, 0)};
    for (int s = 0; s < n; ++s) {
        search.path = {s};
        std::fill(search.on_path.begin(), search.on_path.end(), 0);
        search.on_path[s] = 1;
        if (search.extend()) return PatternHit{Pattern::Cycle, len, ids_of(g, search.path)};
    }
    return std::nullopt;
}

std::optional<std::vector<std::string>> find_hamiltonian_cycle(const RotationGraph& g,
                                                               const SearchBudget& budget) {
    if (!g.connected()) throw ValidationError("hamiltonian search requires a connected graph");
    const int n = g.vertex_count();
    if (n == 1) return std::vector<std::string>{g.id(0)};
    if (n == 2) return std::nullopt;

    StepCounter steps(budget.max_steps);
    std::vector<int> path{0};
    std::vector<char> on_path(n, 0);
    on_path[0] = 1;

    // Branch to low-degree neighbors first.
    std::vector<std::vector<int>> nbrs(n);
    for (int v = 0; v < n; ++v) {
        nbrs[v].assign(g.rotation(v).begin(), g.rotation(v).end());
        std::sort(nbrs[v].begin(), nbrs[v].end(),
                  [&](int a, int b) { return std::pair(g.degree(a), a) < std::pair(g.degree(b), b); });
    }

    auto dfs = [&](auto&& self) -> bool {
        steps.tick("hamiltonian search budget exceeded");
        if (static_cast<int>(path.size()) == n) return g.adjacent(path.back(), path[0]);
        for (int u : nbrs[path.back()]) {
            if (on_path[u]) continue;
            path.push_back(u);
            on_path[u] = 1;
            if (self(self)) return true;
            on_path[u] = 0;
            path.pop_back();
        }
        return false;
    };
    if (!dfs(dfs)) return std::nullopt;
    return ids_of(g, path);
}

}  // namespace rotsys

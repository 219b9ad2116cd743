#include "rotsys/colorlab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rotsys {

std::string ListAssignment::to_text(const RotationGraph& g) const {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << g.id(v) << ":";
        for (int c : lists[v]) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

ListAssignment parse_list_assignment(std::string_view text, const RotationGraph& g) {
    std::vector<std::vector<int>> lists(g.vertex_count());
    std::vector<char> seen(g.vertex_count(), 0);
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream in(line);
        std::string head;
        if (!(in >> head)) continue;
        if (head.back() != ':') throw ParseError(line_no, "expected '<vertex-id>: colors'");
        head.pop_back();
        const int v = g.index_of(head);
        if (v < 0) throw ParseError(line_no, "unknown vertex id '" + head + "'");
        if (seen[v]) throw ParseError(line_no, "duplicate list for vertex '" + head + "'");
        seen[v] = 1;
        int c;
        while (in >> c) lists[v].push_back(c);
        if (!in.eof()) throw ParseError(line_no, "colors must be integers");
        if (lists[v].empty()) throw ParseError(line_no, "empty list for vertex '" + head + "'");
        std::sort(lists[v].begin(), lists[v].end());
        lists[v].erase(std::unique(lists[v].begin(), lists[v].end()), lists[v].end());
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[v])
            throw ValidationError("no list for vertex '" + g.id(v) + "'");
    return ListAssignment{std::move(lists)};
}

bool coloring_is_proper(const RotationGraph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

namespace {

int greedy_clique_bound(const RotationGraph& g) {
    // Greedy clique from each start vertex in degree order.
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::pair(g.degree(a), b) < std::pair(g.degree(b), a); });
    std::reverse(order.begin(), order.end());
    int best = n > 0 ? 1 : 0;
    for (int start : order) {
        std::vector<int> clique{start};
        for (int v : order) {
            if (v == start) continue;
            bool ok = true;
            for (int u : clique)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

// Can g be properly colored with k colors? Colors vertices in a fixed
// degeneracy-flavored order; breaks color symmetry by allowing at most one
// fresh color beyond those already used.
bool k_colorable(const RotationGraph& g, int k, StepCounter& steps, Coloring* out) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(-g.degree(a), a) < std::pair(-g.degree(b), b);
    });

    std::vector<int> color(n, -1);
    auto dfs = [&](auto&& self, int idx, int used) -> bool {
        steps.tick("chromatic number budget exceeded");
        if (idx == n) return true;
        const int v = order[idx];
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u : g.rotation(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0, 0)) return false;
    if (out) out->color = color;
    return true;
}

}  // namespace

int chromatic_number(const RotationGraph& g, const SearchBudget& budget) {
    const int cap = budget.max_vertices > 0 ? budget.max_vertices : 64;
    if (g.vertex_count() > cap)
        throw BudgetExceeded("chromatic_number: vertex cap " + std::to_string(cap) + " exceeded");
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;

    StepCounter steps(budget.max_steps);
    for (int k = greedy_clique_bound(g);; ++k)
        if (k_colorable(g, k, steps, nullptr)) return k;
}

std::optional<Coloring> solve_list_coloring(const RotationGraph& g, const ListAssignment& L) {
    const int n = g.vertex_count();
    if (static_cast<int>(L.lists.size()) != n)
        throw ValidationError("list assignment does not cover the vertex set");
    for (int v = 0; v < n; ++v)
        if (L.lists[v].empty()) throw ValidationError("empty list for vertex '" + g.id(v) + "'");

    // Smallest list first.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(L.lists[a].size(), a) < std::pair(L.lists[b].size(), b);
    });

    std::vector<int> color(n);
    std::vector<char> assigned(n, 0);
    auto dfs = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        const int v = order[idx];
        for (int c : L.lists[v]) {
            bool ok = true;
            for (int u : g.rotation(v))
                if (assigned[u] && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            assigned[v] = 1;
            if (self(self, idx + 1)) return true;
            assigned[v] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return Coloring{std::move(color)};
}

}  // namespace rotsys

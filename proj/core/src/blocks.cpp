#include <algorithm>

#include "rotsys/colorlab.hpp"

namespace rotsys {

namespace {

// Hopcroft-Tarjan lowpoint block decomposition, iterative on an explicit
// edge stack.
struct BlockFinder {
    const RotationGraph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> out;
    int counter = 0;

    explicit BlockFinder(const RotationGraph& graph)
        : g(graph), num(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

    void pop_block(std::pair<int, int> until) {
        std::vector<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.push_back(std::move(verts));
    }

    void dfs(int root) {
        struct Frame {
            int v, parent;
            std::size_t next = 0;
        };
        std::vector<Frame> stack{{root, -1}};
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto rot = g.rotation(f.v);
            if (f.next < rot.size()) {
                const int u = rot[f.next++];
                if (u == f.parent) continue;
                if (num[u] == -1) {
                    edge_stack.emplace_back(f.v, u);
                    num[u] = low[u] = counter++;
                    stack.push_back({u, f.v});
                } else if (num[u] < num[f.v]) {
                    edge_stack.emplace_back(f.v, u);
                    low[f.v] = std::min(low[f.v], num[u]);
                }
            } else {
                const int v = f.v;
                const int parent = f.parent;
                stack.pop_back();
                if (parent != -1) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= num[parent]) pop_block({parent, v});
                }
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> blocks(const RotationGraph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.num[v] == -1 && g.degree(v) > 0) finder.dfs(v);
    std::sort(finder.out.begin(), finder.out.end());
    return finder.out;
}

namespace {

bool block_is_complete(const RotationGraph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.adjacent(verts[i], verts[j])) return false;
    return true;
}

bool block_is_odd_cycle(const RotationGraph& g, const std::vector<int>& verts) {
    if (verts.size() % 2 == 0 || verts.size() < 3) return false;
    for (int v : verts) {
        int inside = 0;
        for (int u : g.rotation(v))
            if (std::binary_search(verts.begin(), verts.end(), u)) ++inside;
        if (inside != 2) return false;
    }
    // 2-regular and 2-connected means a single cycle.
    return true;
}

}  // namespace

bool is_degree_choosable(const RotationGraph& g) {
    if (!g.connected()) throw ValidationError("is_degree_choosable requires a connected graph");
    for (const auto& b : blocks(g))
        if (!block_is_complete(g, b) && !block_is_odd_cycle(g, b)) return true;
    return false;
}

}  // namespace rotsys

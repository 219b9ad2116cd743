#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rotsys/rotation_graph.hpp"

namespace testutil {

using rotsys::RotationGraph;

inline std::string vid(int i) {
    // a, b, ..., z, va26, va27, ...
    if (i < 26) return std::string(1, char('a' + i));
    return "va" + std::to_string(i);
}

// Graph from an edge list; each adjacency list in insertion order, which
// fixes some rotation system (fine whenever faces are irrelevant).
inline RotationGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    RotationGraph::Rotations rot(n);
    for (int i = 0; i < n; ++i) rot[i].first = vid(i);
    for (auto [u, v] : edges) {
        rot[u].second.push_back(vid(v));
        rot[v].second.push_back(vid(u));
    }
    return RotationGraph::from_rotations(rot);
}

inline RotationGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, edges);
}

inline RotationGraph cycle_with_chord(int n, int offset) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(0, offset);
    return make_graph(n, edges);
}

inline RotationGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(n, edges);
}

inline RotationGraph complete_minus_edge(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
    return make_graph(n, edges);
}

// Wheel: hub 0, rim 1..4.
inline RotationGraph w4() {
    return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
}

// Planar embeddings with consistent rotations.
inline RotationGraph tetrahedron() {
    return rotsys::RotationGraph::from_rotations({
        {"a", {"b", "c", "d"}},
        {"b", {"a", "d", "c"}},
        {"c", {"a", "b", "d"}},
        {"d", {"a", "c", "b"}},
    });
}

inline RotationGraph octahedron() {
    // top t, bottom b, equator p1..p4
    return rotsys::RotationGraph::from_rotations({
        {"t", {"p1", "p2", "p3", "p4"}},
        {"p1", {"t", "p4", "b", "p2"}},
        {"p2", {"t", "p1", "b", "p3"}},
        {"p3", {"t", "p2", "b", "p4"}},
        {"p4", {"t", "p3", "b", "p1"}},
        {"b", {"p1", "p4", "p3", "p2"}},
    });
}

inline RotationGraph cube() {
    // top face t1..t4, bottom face b1..b4
    return rotsys::RotationGraph::from_rotations({
        {"t1", {"t2", "t4", "b1"}},
        {"t2", {"t3", "t1", "b2"}},
        {"t3", {"t4", "t2", "b3"}},
        {"t4", {"t1", "t3", "b4"}},
        {"b1", {"b4", "b2", "t1"}},
        {"b2", {"b1", "b3", "t2"}},
        {"b3", {"b2", "b4", "t3"}},
        {"b4", {"b3", "b1", "t4"}},
    });
}

// Quadrangulation of the torus: m x n grid with wraparound, genus 1.
inline RotationGraph torus_grid(int m, int n) {
    RotationGraph::Rotations rot;
    auto name = [&](int i, int j) {
        return "g" + std::to_string(i) + "x" + std::to_string(j);
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            rot.emplace_back(name(i, j),
                             std::vector<std::string>{name((i + 1) % m, j), name(i, (j + 1) % n),
                                                      name((i + m - 1) % m, j),
                                                      name(i, (j + n - 1) % n)});
    return RotationGraph::from_rotations(rot);
}

// Planar graph with one degenerate 6-face (walk x,y,z,a,y,w) plus two
// triangles; the vertex y sits on the 6-face twice.
inline RotationGraph degenerate_six_face_gadget() {
    return rotsys::RotationGraph::from_rotations({
        {"x", {"w", "y"}},
        {"y", {"z", "x", "w", "a"}},
        {"z", {"y", "a"}},
        {"a", {"z", "y"}},
        {"w", {"y", "x"}},
    });
}

// Random connected-ish simple graph with a random rotation at each vertex.
inline RotationGraph random_rotation_graph(int n, int extra_edges, unsigned seed) {
    std::mt19937 rng(seed);
    std::set<std::pair<int, int>> edges;
    // random spanning tree for connectivity
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng() % v);
        edges.insert({std::min(u, v), std::max(u, v)});
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int tries = 0; tries < extra_edges * 10 && static_cast<int>(edges.size()) <
                                                        n - 1 + extra_edges;
         ++tries) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        edges.insert({std::min(u, v), std::max(u, v)});
    }
    RotationGraph::Rotations rot(n);
    for (int i = 0; i < n; ++i) rot[i].first = vid(i);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int i = 0; i < n; ++i) {
        std::shuffle(adj[i].begin(), adj[i].end(), rng);
        for (int u : adj[i]) rot[i].second.push_back(vid(u));
    }
    return RotationGraph::from_rotations(rot);
}

// All connected graphs on n <= 7 labeled vertices up to isomorphism, as
// edge lists in canonical form.
inline std::vector<std::vector<std::pair<int, int>>> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int m = static_cast<int>(pairs.size());
    std::vector<int> perm(n);

    std::set<unsigned> seen;
    std::vector<std::vector<std::pair<int, int>>> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::vector<int>> adj(n);
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                adj[pairs[e].first].push_back(pairs[e].second);
                adj[pairs[e].second].push_back(pairs[e].first);
            }
        std::vector<char> vis(n, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (!vis[u]) {
                    vis[u] = 1;
                    ++cnt;
                    stack.push_back(u);
                }
        }
        if (cnt != n) continue;

        unsigned best = ~0u;
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            unsigned pm = 0;
            for (int e = 0; e < m; ++e)
                if (mask >> e & 1) {
                    int a = perm[pairs[e].first], b = perm[pairs[e].second];
                    if (a > b) std::swap(a, b);
                    pm |= 1u << ((a * (2 * n - a - 1)) / 2 + (b - a - 1));
                }
            best = std::min(best, pm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < m; ++e)
                if (best >> e & 1) edges.push_back(pairs[e]);
            out.push_back(edges);
        }
    }
    return out;
}

}  // namespace testutil

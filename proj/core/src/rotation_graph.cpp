#include "rotsys/rotation_graph.hpp"

#include <algorithm>
#include <map>

namespace rotsys {

RotationGraph RotationGraph::from_rotations(const Rotations& rotations) {
    RotationGraph g;

    std::map<std::string, std::vector<std::string>> by_id;
    for (const auto& [id, nbrs] : rotations) {
        if (id.empty()) throw ValidationError("empty vertex id");
        if (!by_id.emplace(id, nbrs).second)
            throw ValidationError("duplicate vertex id '" + id + "'");
    }

    g.ids_.reserve(by_id.size());
    for (const auto& [id, nbrs] : by_id) g.ids_.push_back(id);

    const int n = static_cast<int>(g.ids_.size());
    g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
    g.rot_.resize(n);

    for (const auto& [id, nbrs] : by_id) {
        const int v = g.index_of(id);
        auto& row = g.rot_[v];
        row.reserve(nbrs.size());
        for (const std::string& nbr : nbrs) {
            const int u = g.index_of(nbr);
            if (u < 0)
                throw ValidationError("vertex '" + id + "': unknown neighbor id '" + nbr + "'");
            if (u == v) throw ValidationError("vertex '" + id + "': loop not allowed");
            if (std::find(row.begin(), row.end(), u) != row.end())
                throw ValidationError("vertex '" + id + "': duplicate neighbor '" + nbr + "'");
            row.push_back(u);
        }
    }

    int directed = 0;
    for (int v = 0; v < n; ++v) {
        for (int u : g.rot_[v]) {
            if (std::find(g.rot_[u].begin(), g.rot_[u].end(), v) == g.rot_[u].end())
                throw ValidationError("asymmetric adjacency: '" + g.ids_[v] + "' lists '" +
                                      g.ids_[u] + "' but not vice versa");
            g.adj_[g.matrix_index(v, u)] = 1;
            ++directed;
        }
    }
    g.edge_count_ = directed / 2;
    return g;
}

int RotationGraph::index_of(std::string_view id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

int RotationGraph::rotation_pos(int v, int neighbor) const {
    const auto& row = rot_[v];
    auto it = std::find(row.begin(), row.end(), neighbor);
    return it == row.end() ? -1 : static_cast<int>(it - row.begin());
}

int RotationGraph::rotation_pred(int v, int neighbor) const {
    const int pos = rotation_pos(v, neighbor);
    const int d = degree(v);
    return rot_[v][(pos + d - 1) % d];
}

int RotationGraph::rotation_succ(int v, int neighbor) const {
    const int pos = rotation_pos(v, neighbor);
    return rot_[v][(pos + 1) % degree(v)];
}

bool RotationGraph::connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : rot_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

int RotationGraph::min_degree() const {
    int m = vertex_count() == 0 ? 0 : degree(0);
    for (int v = 1; v < vertex_count(); ++v) m = std::min(m, degree(v));
    return m;
}

std::vector<std::pair<int, int>> RotationGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int u : rot_[v])
            if (v < u) out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

RotationGraph RotationGraph::induced(const std::vector<int>& vertices) const {
    std::vector<char> keep(vertex_count(), 0);
    for (int v : vertices) keep[v] = 1;
    Rotations rot;
    rot.reserve(vertices.size());
    for (int v = 0; v < vertex_count(); ++v) {
        if (!keep[v]) continue;
        std::vector<std::string> nbrs;
        for (int u : rot_[v])
            if (keep[u]) nbrs.push_back(ids_[u]);
        rot.emplace_back(ids_[v], std::move(nbrs));
    }
    return from_rotations(rot);
}

}  // namespace rotsys

#include "rotsys/faces.hpp"

#include <algorithm>

namespace rotsys {

FaceSet trace_faces(const RotationGraph& g) {
    const int n = g.vertex_count();

    std::vector<std::vector<DirectedEdge>> walks;
    std::vector<std::vector<int>> around(n);
    for (int v = 0; v < n; ++v) around[v].assign(g.degree(v), -1);

    // around[v][k] doubles as the "visited" mark for directed edge
    // (v, rotation(v)[k]) while tracing.
    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < g.degree(v); ++k) {
            if (around[v][k] != -1) continue;
            const int face_index = static_cast<int>(walks.size());
            std::vector<DirectedEdge> walk;
            int from = v;
            int to = g.rotation(v)[k];
            while (around[from][g.rotation_pos(from, to)] == -1) {
                around[from][g.rotation_pos(from, to)] = face_index;
                walk.push_back({from, to});
                const int next_to = g.rotation_pred(to, from);
                from = to;
                to = next_to;
            }
            // Start the stored walk at its smallest directed edge.
            auto smallest = std::min_element(walk.begin(), walk.end());
            std::rotate(walk.begin(), smallest, walk.end());
            walks.push_back(std::move(walk));
        }
    }

    // Sort faces by smallest directed edge and remap indices.
    std::vector<int> order(walks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return walks[a].front() < walks[b].front(); });
    std::vector<int> rank(walks.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

    FaceSet fs;
    fs.walks_.resize(walks.size());
    for (std::size_t i = 0; i < walks.size(); ++i) fs.walks_[rank[i]] = std::move(walks[i]);
    fs.around_ = std::move(around);
    for (auto& row : fs.around_)
        for (int& f : row) f = rank[f];

    fs.corner_.resize(fs.walks_.size());
    for (int f = 0; f < fs.face_count(); ++f) {
        for (const DirectedEdge& e : fs.walks_[f]) fs.corner_[f].push_back(e.from);
        std::sort(fs.corner_[f].begin(), fs.corner_[f].end());
    }
    fs.graph_ = &g;
    return fs;
}

int FaceSet::face_of(int from, int to) const {
    const int pos = graph_->rotation_pos(from, to);
    if (pos < 0) return -1;
    return around_[from][pos];
}

int FaceSet::corner_count(int v, int f) const {
    const auto& c = corner_[f];
    auto [lo, hi] = std::equal_range(c.begin(), c.end(), v);
    return static_cast<int>(hi - lo);
}

std::vector<int> FaceSet::vertices_on(int f) const {
    std::vector<int> out = corner_[f];
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool FaceSet::faces_adjacent(int f, int g) const {
    for (const DirectedEdge& e : walks_[f])
        if (face_of(e.to, e.from) == g) return true;
    return false;
}

std::vector<int> FaceSet::neighbors_of_face(int f) const {
    std::vector<int> out;
    out.reserve(walks_[f].size());
    for (const DirectedEdge& e : walks_[f]) out.push_back(face_of(e.to, e.from));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool FaceSet::degenerate(int f) const {
    const auto& c = corner_[f];
    return std::adjacent_find(c.begin(), c.end()) != c.end();
}

EmbeddingSummary summarize_embedding(const RotationGraph& g) {
    if (!g.connected()) throw ValidationError("summarize_embedding requires a connected graph");
    const FaceSet fs = trace_faces(g);
    EmbeddingSummary s;
    s.v_count = g.vertex_count();
    s.e_count = g.edge_count();
    s.f_count = fs.face_count();
    s.euler_characteristic = s.v_count - s.e_count + s.f_count;
    if (s.euler_characteristic % 2 == 0 && s.euler_characteristic <= 2)
        s.genus = (2 - s.euler_characteristic) / 2;
    return s;
}

}  // namespace rotsys

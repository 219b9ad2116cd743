#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rotsys/rotation_graph.hpp"

namespace rotsys {

struct DirectedEdge {
    int from = -1;
    int to = -1;
    friend bool operator==(DirectedEdge, DirectedEdge) = default;
    friend auto operator<=>(DirectedEdge, DirectedEdge) = default;
};

// Boundary walks of the faces induced by a rotation system, plus the
// per-(vertex, face) corner counts. Faces are sorted by their smallest
// directed edge and each walk starts at that edge.
class FaceSet {
  public:
    int face_count() const { return static_cast<int>(walks_.size()); }
    // Walk of face f as directed edges; the boundary vertices are the tails.
    std::span<const DirectedEdge> walk(int f) const { return walks_[f]; }
    int degree(int f) const { return static_cast<int>(walks_[f].size()); }

    // Face containing the directed edge (from, to).
    int face_of(int from, int to) const;

    // Number of corners of v on face f (a degenerate face yields >= 2).
    int corner_count(int v, int f) const;
    bool incident(int v, int f) const { return corner_count(v, f) > 0; }

    // Faces around v, one entry per corner, in rotation order:
    // entry j is the face containing the directed edge (v, rotation(v)[j]).
    std::span<const int> faces_around(int v) const { return around_[v]; }

    // Distinct vertices on the walk of f, sorted.
    std::vector<int> vertices_on(int f) const;

    // Two faces are adjacent when they lie on the two sides of some edge.
    bool faces_adjacent(int f, int g) const;
    // Distinct faces sharing an edge with f (may include f itself when both
    // sides of an edge belong to f), sorted.
    std::vector<int> neighbors_of_face(int f) const;

    bool degenerate(int f) const;

  private:
    friend FaceSet trace_faces(const RotationGraph& g);

    std::vector<std::vector<DirectedEdge>> walks_;
    std::vector<std::vector<int>> around_;   // vertex -> faces per corner
    std::vector<std::vector<int>> corner_;   // face -> sorted tails of walk
    const RotationGraph* graph_ = nullptr;   // FaceSet does not outlive its graph
};

// Decomposes the directed edges into face boundary walks with the fixed
// corner rule: after arriving at v along (u, v), leave along the neighbor
// preceding u in rotation(v). Total on valid input.
FaceSet trace_faces(const RotationGraph& g);

struct EmbeddingSummary {
    int v_count = 0;
    int e_count = 0;
    int f_count = 0;
    int euler_characteristic = 0;
    // (2 - chi) / 2; present only when chi is even and at most 2.
    std::optional<int> genus;
};

// Requires a connected graph (throws ValidationError otherwise).
EmbeddingSummary summarize_embedding(const RotationGraph& g);

}  // namespace rotsys

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rotsys/errors.hpp"

namespace rotsys {

// Simple undirected graph with a cyclic neighbor order at each vertex
// (a rotation system, i.e. a combinatorial embedding on an orientable
// surface). Vertex ids are arbitrary strings; internally vertices are
// indexed 0..n-1 in lexicographic id order, so every derived output is
// deterministic.
class RotationGraph {
  public:
    using Rotations = std::vector<std::pair<std::string, std::vector<std::string>>>;

    // Validates symmetry, absence of loops and parallel edges, and that
    // every neighbor id names a vertex. Throws ValidationError otherwise.
    static RotationGraph from_rotations(const Rotations& rotations);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return edge_count_; }

    const std::string& id(int v) const { return ids_[v]; }
    // -1 when the id is unknown.
    int index_of(std::string_view id) const;

    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    // Neighbors of v in counterclockwise cyclic order.
    std::span<const int> rotation(int v) const { return rot_[v]; }

    bool adjacent(int u, int v) const { return adj_[matrix_index(u, v)]; }
    // Position of `neighbor` in rotation(v); -1 if absent.
    int rotation_pos(int v, int neighbor) const;

    // Neighbor preceding / following `neighbor` in rotation(v).
    int rotation_pred(int v, int neighbor) const;
    int rotation_succ(int v, int neighbor) const;

    bool connected() const;
    int min_degree() const;

    // Undirected edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced by `vertices` (ids preserved, rotations restricted
    // to kept neighbors in the same cyclic order).
    RotationGraph induced(const std::vector<int>& vertices) const;

  private:
    RotationGraph() = default;
    std::size_t matrix_index(int u, int v) const {
        return static_cast<std::size_t>(u) * ids_.size() + static_cast<std::size_t>(v);
    }

    std::vector<std::string> ids_;
    std::vector<std::vector<int>> rot_;
    std::vector<char> adj_;
    int edge_count_ = 0;
};

}  // namespace rotsys

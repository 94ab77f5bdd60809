#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cdplan/cyclic.hpp"
#include "cdplan/graph.hpp"

namespace cdplan {

/// Combinatorial embedding candidate: a cyclic order of incident edge ids per
/// vertex.  Planarity is decided by face tracing (see rotation_is_planar).
struct RotationSystem {
    std::map<VertexId, std::vector<EdgeId>> order;

    const std::vector<EdgeId>& at(VertexId v) const { return order.at(v); }

    CyclicOrder cyclic_at(VertexId v) const { return CyclicOrder(order.at(v)); }

    /// Cyclic order at v with edge ids replaced by their labels in g.
    CyclicOrder labels_at(const MultiGraph& g, VertexId v) const;

    /// Reverse every vertex order (the reflected embedding).
    RotationSystem mirrored() const;

    bool total_on(const MultiGraph& g) const;
};

/// Number of faces traced from the rotation system.  Convention: after
/// arriving at w via edge e, the walk continues along the successor of e in
/// w's clockwise order.
int face_count(const MultiGraph& g, const RotationSystem& r);

/// Euler check V - E + F = 2 on every connected component.
bool rotation_is_planar(const MultiGraph& g, const RotationSystem& r);

/// Contract a connected vertex subset inside an embedding: the cyclic order
/// in which the edges leaving `part` appear around it.  `part` must induce a
/// connected subgraph and must not cover a whole component.
CyclicOrder contract_rotation(const MultiGraph& g, const RotationSystem& r,
                              const std::vector<VertexId>& part);

/// Certificate-grade embedded multigraph: loops and parallel edges allowed,
/// rotations stored as dart lists (2*edge for the u->v dart, 2*edge+1 for
/// v->u; loops contribute both darts at their vertex).
struct DartGraph {
    struct DEdge {
        VertexId u, v;
        int label;
    };
    std::vector<VertexId> verts;
    std::vector<DEdge> edges;
    std::map<VertexId, std::vector<int>> rotation; // darts leaving the vertex

    int add_vertex(VertexId v);
    int add_edge(VertexId u, VertexId v, int label = kNoLabel); // returns edge index
    VertexId dart_tail(int d) const;
    VertexId dart_head(int d) const;

    int face_count() const;
    bool is_planar_embedding() const; // Euler per component
};

} // namespace cdplan

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdplan/errors.hpp"

namespace cdplan {

using VertexId = int;
using EdgeId = int;

/// No label attached to an edge.
inline constexpr int kNoLabel = -1;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;
    int label; // originating G-edge when this edge lives in a skeleton

    VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Undirected multigraph with stable, opaque vertex and edge identities.
/// Parallel edges are allowed, loops never are.  Edge identity (not the
/// endpoint pair) is the primary notion, so edges can be traced through
/// contractions via their ids and labels.
class MultiGraph {
public:
    MultiGraph() = default;

    VertexId add_vertex();                 // fresh id
    void add_vertex(VertexId v);           // explicit id, must be new
    EdgeId add_edge(VertexId u, VertexId v, int label = kNoLabel); // fresh id
    void add_edge(EdgeId id, VertexId u, VertexId v, int label = kNoLabel);

    bool has_vertex(VertexId v) const { return vpos_.count(v) != 0; }
    bool has_edge(EdgeId e) const { return epos_.count(e) != 0; }

    const std::vector<VertexId>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edge ids incident to v, in insertion order.
    const std::vector<EdgeId>& incident(VertexId v) const;
    std::size_t degree(VertexId v) const { return incident(v).size(); }

    /// Adjacent vertex ids (with multiplicity) of v.
    std::vector<VertexId> neighbors(VertexId v) const;

    bool adjacent(VertexId u, VertexId v) const;

    /// True when no two edges share the same endpoint pair.
    bool is_simple() const;

    MultiGraph induced(const std::vector<VertexId>& vs) const;
    MultiGraph restricted_to_edges(const std::vector<EdgeId>& es) const;

private:
    std::vector<VertexId> verts_;
    std::vector<Edge> edges_;
    std::unordered_map<VertexId, std::size_t> vpos_;
    std::unordered_map<EdgeId, std::size_t> epos_;
    std::vector<std::vector<EdgeId>> inc_; // parallel to verts_
    VertexId next_vertex_ = 0;
    EdgeId next_edge_ = 0;
};

/// Result of contracting vertex subsets: the graph plus, per part, the fresh
/// vertex standing for it.
struct Contraction {
    MultiGraph graph;
    std::vector<VertexId> part_vertex;            // index -> fresh id
    std::unordered_map<VertexId, VertexId> image; // old vertex -> new vertex
};

/// Contract each part into a single fresh vertex.  Edges inside a part are
/// dropped (loop removal); surviving edges keep ids and labels.
Contraction contract(const MultiGraph& g, const std::vector<std::vector<VertexId>>& parts);

/// Connected components as a partition of the vertex set.
std::vector<std::vector<VertexId>> components(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;      // partition of the edge set
    std::vector<VertexId> cutvertices;
    std::unordered_map<VertexId, std::vector<int>> block_incidence; // vertex -> block indexes
    std::vector<bool> nontrivial;                 // per block: more than one edge

    bool is_cutvertex(VertexId v) const;
    /// Blocks incident to v that are not single edges.
    int nontrivial_blocks_at(VertexId v) const;
};

/// Block–cutvertex decomposition (biconnected components of a multigraph).
BlockDecomposition blocks(const MultiGraph& g);

} // namespace cdplan

#pragma once

#include <optional>

#include "cdplan/graph.hpp"
#include "cdplan/pqtree.hpp"
#include "cdplan/rotation.hpp"

namespace cdplan {

/// Planarity test with witness: returns a rotation system passing
/// rotation_is_planar iff g is planar.  Demoucron-style face embedding per
/// block, blocks composed at cutvertices.
std::optional<RotationSystem> is_planar(const MultiGraph& g);

/// PQ-tree of the edge-orderings of v over all planar embeddings of g.
/// Preconditions: g planar, v not a cutvertex.  Built by composing the
/// triconnected decomposition of v's block (parallel classes contribute
/// P-nodes, rigid components Q-nodes).
PQTree embedding_tree(const MultiGraph& g, VertexId v);

} // namespace cdplan

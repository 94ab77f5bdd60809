#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "cdplan/config.hpp"
#include "cdplan/cyclic.hpp"
#include "cdplan/graph.hpp"
#include "cdplan/rotation.hpp"

namespace cdplan {
namespace search {

/// Per-vertex candidate rotations spanning a rotation-system search space.
/// Vertices of degree <= 1 are omitted (their rotation is forced).
struct Space {
    std::vector<VertexId> verts;
    std::vector<std::vector<std::vector<EdgeId>>> choices; // per vertex
    std::map<VertexId, std::vector<EdgeId>> forced;        // degree <= 1 or single choice

    std::uint64_t total() const;
    RotationSystem assemble(const std::vector<std::size_t>& pick) const;
};

/// Build the full space: every cyclic order of every vertex's incident edges.
Space full_space(const MultiGraph& g);

/// Space with some vertices restricted to explicit cyclic orders of their
/// incident edge ids.
Space constrained_space(const MultiGraph& g, const std::map<VertexId, OrderSet>& restrict_to);

/// Visit every rotation system in the space.  The visitor returns false to
/// stop early.  Serial reference implementation.
void for_each_serial(const Space& s, const std::function<bool(const RotationSystem&)>& visit);

/// Find the planar rotation system with the smallest assignment index, or
/// nullopt.  `parallel` splits the scan over the first vertex's choices.
std::optional<RotationSystem> find_planar_serial(const MultiGraph& g, const Space& s);
std::optional<RotationSystem> find_planar_parallel(const MultiGraph& g, const Space& s);

/// Collect the cyclic orders (of edge ids) realized at vertex v over all
/// planar rotation systems in the space.  Optionally keeps one witness per
/// order.
OrderSet vertex_orders_serial(const MultiGraph& g, const Space& s, VertexId v,
                              std::map<CyclicOrder, RotationSystem>* witnesses = nullptr);
OrderSet vertex_orders_parallel(const MultiGraph& g, const Space& s, VertexId v,
                                std::map<CyclicOrder, RotationSystem>* witnesses = nullptr);

/// Backtracking enumeration of planar rotation systems only: vertices are
/// assigned one at a time and a branch is abandoned as soon as the induced
/// sub-embedding on the assigned prefix fails the Euler check (restrictions
/// of planar embeddings stay planar, so the prune is sound).
void for_each_planar_pruned(const MultiGraph& g,
                            const std::function<bool(const RotationSystem&)>& visit);

/// Throw CapacityError if the space exceeds the capacity budget.
void check_capacity(const Space& s, const Capacity& cap, const std::string& what);

} // namespace search
} // namespace cdplan

#pragma once

#include <unordered_map>
#include <unordered_set>

#include "cdplan/graph.hpp"

namespace cdplan {
namespace spqr {

enum class CompType { Bundle, Cycle, Rigid };

/// Canonical triconnected decomposition of a biconnected multigraph
/// (maximal split decomposition with bundle-bundle and cycle-cycle
/// neighbors re-merged).  Virtual edges appear in pairs linking two
/// components; real edges keep their original ids and labels.
struct Decomposition {
    std::vector<MultiGraph> comps;
    std::unordered_set<EdgeId> virtual_ids;
    std::unordered_map<EdgeId, EdgeId> twin_edge;  // virtual -> its twin
    std::unordered_map<EdgeId, int> comp_of_edge;  // every edge -> component

    bool is_virtual(EdgeId e) const { return virtual_ids.count(e) != 0; }
    CompType type(int comp) const;
};

Decomposition triconnected_components(const MultiGraph& block);

} // namespace spqr
} // namespace cdplan

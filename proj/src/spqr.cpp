#include "cdplan/spqr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cdplan/errors.hpp"
#include "cdplan/planarity.hpp"
#include "cdplan/pqtree.hpp"

namespace cdplan {
namespace spqr {

namespace {

bool is_cycle_graph(const MultiGraph& g) {
    if (g.vertex_count() < 2 || g.edge_count() != g.vertex_count()) return false;
    for (VertexId v : g.vertices())
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

// Edge groups at a vertex pair: each a-b edge alone, plus one group per
// component of g - {a,b} (the component's edges together with its edges
// into a and b).
std::vector<std::vector<EdgeId>> groups_at(const MultiGraph& g, VertexId a, VertexId b) {
    std::vector<std::vector<EdgeId>> out;
    for (const Edge& e : g.edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) out.push_back({e.id});
    }
    std::unordered_set<VertexId> seen{a, b};
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        std::set<EdgeId> grp;
        std::vector<VertexId> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                grp.insert(e);
                VertexId w = g.edge(e).other(v);
                if (w == a || w == b) continue;
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        out.emplace_back(grp.begin(), grp.end());
    }
    return out;
}

MultiGraph graph_from_edges(const MultiGraph& g, const std::vector<EdgeId>& es) {
    return g.restricted_to_edges(es);
}

} // namespace

CompType Decomposition::type(int comp) const {
    const MultiGraph& k = comps[static_cast<std::size_t>(comp)];
    if (k.vertex_count() == 2) return CompType::Bundle;
    if (is_cycle_graph(k)) return CompType::Cycle;
    return CompType::Rigid;
}

Decomposition triconnected_components(const MultiGraph& block) {
    Decomposition d;
    EdgeId next_virtual = 0;
    for (const Edge& e : block.edges()) next_virtual = std::max(next_virtual, e.id + 1);

    std::vector<MultiGraph> work{block};
    while (!work.empty()) {
        MultiGraph k = std::move(work.back());
        work.pop_back();

        bool terminal = k.vertex_count() == 2 || is_cycle_graph(k);
        VertexId sa = -1, sb = -1;
        std::vector<std::vector<EdgeId>> grs;
        if (!terminal) {
            // Look for a split pair; prefer one with three or more groups.
            const auto& vs = k.vertices();
            int two_way_i = -1, two_way_j = -1;
            for (std::size_t i = 0; i < vs.size() && sa == -1; ++i) {
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    auto g = groups_at(k, vs[i], vs[j]);
                    if (g.size() >= 3) {
                        sa = vs[i];
                        sb = vs[j];
                        grs = std::move(g);
                        break;
                    }
                    if (g.size() == 2 && g[0].size() >= 2 && g[1].size() >= 2 && two_way_i < 0) {
                        two_way_i = static_cast<int>(i);
                        two_way_j = static_cast<int>(j);
                    }
                }
            }
            if (sa == -1 && two_way_i >= 0) {
                sa = vs[static_cast<std::size_t>(two_way_i)];
                sb = vs[static_cast<std::size_t>(two_way_j)];
                grs = groups_at(k, sa, sb);
            }
            if (sa == -1) terminal = true; // simple and 3-connected
        }

        if (terminal) {
            int idx = static_cast<int>(d.comps.size());
            for (const Edge& e : k.edges()) d.comp_of_edge[e.id] = idx;
            d.comps.push_back(std::move(k));
            continue;
        }

        if (grs.size() >= 3) {
            // Full split: hub bundle on {sa,sb}; each non-trivial group
            // becomes a child sharing a virtual pair with the hub.
            MultiGraph hub;
            hub.add_vertex(sa);
            hub.add_vertex(sb);
            for (auto& grp : grs) {
                if (grp.size() == 1) {
                    const Edge& e = k.edge(grp.front());
                    hub.add_edge(e.id, e.u, e.v, e.label);
                    continue;
                }
                EdgeId v1 = next_virtual++;
                EdgeId v2 = next_virtual++;
                d.virtual_ids.insert(v1);
                d.virtual_ids.insert(v2);
                d.twin_edge[v1] = v2;
                d.twin_edge[v2] = v1;
                hub.add_edge(v1, sa, sb);
                MultiGraph child = graph_from_edges(k, grp);
                if (!child.has_vertex(sa)) child.add_vertex(sa);
                if (!child.has_vertex(sb)) child.add_vertex(sb);
                child.add_edge(v2, sa, sb);
                work.push_back(std::move(child));
            }
            work.push_back(std::move(hub));
        } else {
            // Two-way split.
            EdgeId v1 = next_virtual++;
            EdgeId v2 = next_virtual++;
            d.virtual_ids.insert(v1);
            d.virtual_ids.insert(v2);
            d.twin_edge[v1] = v2;
            d.twin_edge[v2] = v1;
            for (int side = 0; side < 2; ++side) {
                MultiGraph part = graph_from_edges(k, grs[static_cast<std::size_t>(side)]);
                if (!part.has_vertex(sa)) part.add_vertex(sa);
                if (!part.has_vertex(sb)) part.add_vertex(sb);
                part.add_edge(side == 0 ? v1 : v2, sa, sb);
                work.push_back(std::move(part));
            }
        }
    }

    // Canonical merge: neighbors of equal degenerate type collapse.
    bool merged = true;
    while (merged) {
        merged = false;
        for (const auto& [ve, tw] : d.twin_edge) {
            int c1 = d.comp_of_edge.at(ve);
            int c2 = d.comp_of_edge.at(tw);
            if (c1 == c2) continue;
            CompType t1 = d.type(c1), t2 = d.type(c2);
            bool both_bundle = t1 == CompType::Bundle && t2 == CompType::Bundle;
            bool both_cycle = t1 == CompType::Cycle && t2 == CompType::Cycle;
            if (!both_bundle && !both_cycle) continue;

            // Merge c2 into c1, dropping the shared virtual pair.
            MultiGraph m;
            auto copy_in = [&](const MultiGraph& src, EdgeId skip) {
                for (VertexId v : src.vertices())
                    if (!m.has_vertex(v)) m.add_vertex(v);
                for (const Edge& e : src.edges()) {
                    if (e.id == skip) continue;
                    m.add_edge(e.id, e.u, e.v, e.label);
                    d.comp_of_edge[e.id] = c1;
                }
            };
            copy_in(d.comps[static_cast<std::size_t>(c1)], ve);
            copy_in(d.comps[static_cast<std::size_t>(c2)], tw);
            d.comps[static_cast<std::size_t>(c1)] = std::move(m);
            d.comps[static_cast<std::size_t>(c2)] = MultiGraph{};
            d.twin_edge.erase(ve);
            d.twin_edge.erase(tw);
            d.virtual_ids.erase(ve);
            d.virtual_ids.erase(tw);
            d.comp_of_edge.erase(ve);
            d.comp_of_edge.erase(tw);
            merged = true;
            break;
        }
    }

    // Compact away emptied components.
    std::vector<MultiGraph> packed;
    std::vector<int> remap(d.comps.size(), -1);
    for (std::size_t i = 0; i < d.comps.size(); ++i) {
        if (d.comps[i].edge_count() == 0) continue;
        remap[i] = static_cast<int>(packed.size());
        packed.push_back(std::move(d.comps[i]));
    }
    for (auto& [e, c] : d.comp_of_edge) c = remap[static_cast<std::size_t>(c)];
    d.comps = std::move(packed);
    return d;
}

} // namespace spqr

PQTree embedding_tree(const MultiGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw ArgumentError("embedding_tree: unknown vertex");
    if (g.incident(v).empty()) throw ArgumentError("embedding_tree: vertex has no incident edges");

    BlockDecomposition bd = blocks(g);
    if (bd.is_cutvertex(v)) throw PreconditionError("embedding_tree: vertex is a cutvertex");
    if (!is_planar(g)) throw PreconditionError("embedding_tree: graph is not planar");

    // All edges of a non-cutvertex lie in a single block.
    int blk_idx = bd.block_incidence.at(v).front();
    MultiGraph blk = g.restricted_to_edges(bd.blocks[static_cast<std::size_t>(blk_idx)]);

    if (blk.edge_count() == 1) return PQTree::leaf(blk.edges().front().id);

    spqr::Decomposition dec = spqr::triconnected_components(blk);

    // Rigid components carry a fixed rotation (up to reflection).
    std::unordered_map<int, RotationSystem> rigid_rot;
    auto rotation_of = [&](int comp) -> const RotationSystem& {
        auto it = rigid_rot.find(comp);
        if (it != rigid_rot.end()) return it->second;
        auto r = is_planar(dec.comps[static_cast<std::size_t>(comp)]);
        if (!r) throw std::logic_error("rigid component of a planar graph not planar");
        return rigid_rot.emplace(comp, std::move(*r)).first->second;
    };

    PQBuilder builder;
    // Expand the allocation component reached through virtual edge `enter`
    // (-1 for the start component): one PQ node per component, leaves for
    // real edges, recursion across virtual edges at v.
    std::function<int(int, EdgeId)> expand = [&](int comp, EdgeId enter) -> int {
        const MultiGraph& skel = dec.comps[static_cast<std::size_t>(comp)];
        spqr::CompType ty = dec.type(comp);

        std::vector<EdgeId> seq;
        if (ty == spqr::CompType::Rigid) {
            seq = rotation_of(comp).order.at(v);
        } else {
            seq = skel.incident(v);
        }
        if (enter != -1) {
            auto it = std::find(seq.begin(), seq.end(), enter);
            std::rotate(seq.begin(), it, seq.end());
            seq.erase(seq.begin()); // drop the entering edge, keep its cut order
        }
        std::vector<int> children;
        for (EdgeId e : seq) {
            if (dec.is_virtual(e)) {
                EdgeId tw = dec.twin_edge.at(e);
                children.push_back(expand(dec.comp_of_edge.at(tw), tw));
            } else {
                children.push_back(builder.add_leaf(e));
            }
        }
        PQTree::Kind kind =
            ty == spqr::CompType::Rigid ? PQTree::Kind::Q : PQTree::Kind::P;
        if (children.size() == 1) return children.front();
        return builder.add_inner(kind, std::move(children));
    };

    // Start at any component containing v.
    int start = -1;
    for (std::size_t i = 0; i < dec.comps.size() && start < 0; ++i)
        if (dec.comps[i].has_vertex(v) && !dec.comps[i].incident(v).empty())
            start = static_cast<int>(i);
    if (start < 0) throw std::logic_error("no allocation component for vertex");

    int root = expand(start, -1);
    return builder.finish(root);
}

} // namespace cdplan

#include "cdplan/graph.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace cdplan {

VertexId MultiGraph::add_vertex() {
    while (vpos_.count(next_vertex_)) ++next_vertex_;
    VertexId v = next_vertex_++;
    add_vertex(v);
    return v;
}

void MultiGraph::add_vertex(VertexId v) {
    if (vpos_.count(v)) throw ArgumentError("vertex id already present: " + std::to_string(v));
    vpos_[v] = verts_.size();
    verts_.push_back(v);
    inc_.emplace_back();
    next_vertex_ = std::max(next_vertex_, v + 1);
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v, int label) {
    while (epos_.count(next_edge_)) ++next_edge_;
    EdgeId e = next_edge_++;
    add_edge(e, u, v, label);
    return e;
}

void MultiGraph::add_edge(EdgeId id, VertexId u, VertexId v, int label) {
    if (u == v) throw ArgumentError("loops are not allowed");
    if (!has_vertex(u) || !has_vertex(v)) throw ArgumentError("edge endpoint missing");
    if (epos_.count(id)) throw ArgumentError("edge id already present: " + std::to_string(id));
    epos_[id] = edges_.size();
    edges_.push_back(Edge{id, u, v, label});
    inc_[vpos_.at(u)].push_back(id);
    inc_[vpos_.at(v)].push_back(id);
    next_edge_ = std::max(next_edge_, id + 1);
}

const Edge& MultiGraph::edge(EdgeId e) const {
    auto it = epos_.find(e);
    if (it == epos_.end()) throw ArgumentError("unknown edge id: " + std::to_string(e));
    return edges_[it->second];
}

const std::vector<EdgeId>& MultiGraph::incident(VertexId v) const {
    auto it = vpos_.find(v);
    if (it == vpos_.end()) throw ArgumentError("unknown vertex id: " + std::to_string(v));
    return inc_[it->second];
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : incident(v)) out.push_back(edge(e).other(v));
    return out;
}

bool MultiGraph::adjacent(VertexId u, VertexId v) const {
    for (EdgeId e : incident(u))
        if (edge(e).other(u) == v) return true;
    return false;
}

bool MultiGraph::is_simple() const {
    std::unordered_set<std::uint64_t> seen;
    for (const Edge& e : edges_) {
        auto a = static_cast<std::uint64_t>(std::min(e.u, e.v));
        auto b = static_cast<std::uint64_t>(std::max(e.u, e.v));
        if (!seen.insert((a << 32) | b).second) return false;
    }
    return true;
}

MultiGraph MultiGraph::induced(const std::vector<VertexId>& vs) const {
    MultiGraph h;
    std::unordered_set<VertexId> keep(vs.begin(), vs.end());
    for (VertexId v : verts_)
        if (keep.count(v)) h.add_vertex(v);
    for (const Edge& e : edges_)
        if (keep.count(e.u) && keep.count(e.v)) h.add_edge(e.id, e.u, e.v, e.label);
    return h;
}

MultiGraph MultiGraph::restricted_to_edges(const std::vector<EdgeId>& es) const {
    MultiGraph h;
    std::unordered_set<VertexId> vs;
    for (EdgeId id : es) {
        const Edge& e = edge(id);
        vs.insert(e.u);
        vs.insert(e.v);
    }
    for (VertexId v : verts_)
        if (vs.count(v)) h.add_vertex(v);
    for (EdgeId id : es) {
        const Edge& e = edge(id);
        h.add_edge(e.id, e.u, e.v, e.label);
    }
    return h;
}

Contraction contract(const MultiGraph& g, const std::vector<std::vector<VertexId>>& parts) {
    std::unordered_map<VertexId, int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (VertexId v : parts[i]) {
            if (!g.has_vertex(v)) throw ArgumentError("contract: vertex not in graph");
            if (!part_of.emplace(v, static_cast<int>(i)).second)
                throw ArgumentError("contract: parts overlap at vertex " + std::to_string(v));
        }
    }

    Contraction out;
    // Fresh ids for part vertices, past every existing id.
    VertexId fresh = 0;
    for (VertexId v : g.vertices()) fresh = std::max(fresh, v + 1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        VertexId pv = fresh++;
        out.part_vertex.push_back(pv);
        out.graph.add_vertex(pv);
        for (VertexId v : parts[i]) out.image[v] = pv;
    }
    for (VertexId v : g.vertices()) {
        if (!part_of.count(v)) {
            out.graph.add_vertex(v);
            out.image[v] = v;
        }
    }
    for (const Edge& e : g.edges()) {
        VertexId nu = out.image.at(e.u);
        VertexId nv = out.image.at(e.v);
        if (nu == nv) continue; // loop removal
        out.graph.add_edge(e.id, nu, nv, e.label);
    }
    return out;
}

std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::unordered_set<VertexId> seen;
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.edge(e).other(v);
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const MultiGraph& g) {
    return components(g).size() <= 1;
}

bool BlockDecomposition::is_cutvertex(VertexId v) const {
    return std::find(cutvertices.begin(), cutvertices.end(), v) != cutvertices.end();
}

int BlockDecomposition::nontrivial_blocks_at(VertexId v) const {
    auto it = block_incidence.find(v);
    if (it == block_incidence.end()) return 0;
    int n = 0;
    for (int b : it->second)
        if (nontrivial[static_cast<std::size_t>(b)]) ++n;
    return n;
}

// Iterative lowpoint DFS; tracks the incoming edge id so parallel edges are
// treated as genuine cycles rather than re-traversals of the tree edge.
BlockDecomposition blocks(const MultiGraph& g) {
    BlockDecomposition out;
    std::unordered_map<VertexId, int> depth;
    std::unordered_map<VertexId, int> low;
    std::unordered_set<EdgeId> visited_edge;
    std::vector<EdgeId> edge_stack;
    std::unordered_map<VertexId, bool> is_cut;

    struct Frame {
        VertexId v;
        EdgeId in_edge; // edge we arrived by, -1 at roots
        std::size_t next = 0;
        int children = 0;
    };

    for (VertexId root : g.vertices()) {
        if (depth.count(root)) continue;
        std::vector<Frame> stack;
        stack.push_back(Frame{root, -1});
        depth[root] = 0;
        low[root] = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.in_edge || visited_edge.count(e)) continue;
                visited_edge.insert(e);
                edge_stack.push_back(e);
                VertexId w = g.edge(e).other(f.v);
                auto it = depth.find(w);
                if (it == depth.end()) {
                    depth[w] = depth[f.v] + 1;
                    low[w] = depth[w];
                    stack.push_back(Frame{w, e});
                } else {
                    low[f.v] = std::min(low[f.v], it->second);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    ++parent.children;
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    bool root_parent = parent.in_edge == -1;
                    if ((root_parent && parent.children > 1) ||
                        (!root_parent && low[done.v] >= depth[parent.v]))
                        is_cut[parent.v] = true;
                    if (low[done.v] >= depth[parent.v]) {
                        // Pop the block ending at parent.
                        std::vector<EdgeId> blk;
                        EdgeId boundary = done.in_edge;
                        while (true) {
                            EdgeId e = edge_stack.back();
                            edge_stack.pop_back();
                            blk.push_back(e);
                            if (e == boundary) break;
                        }
                        out.blocks.push_back(std::move(blk));
                    }
                }
            }
        }
    }

    out.nontrivial.resize(out.blocks.size());
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        out.nontrivial[i] = out.blocks[i].size() > 1;
        std::unordered_set<VertexId> vs;
        for (EdgeId e : out.blocks[i]) {
            vs.insert(g.edge(e).u);
            vs.insert(g.edge(e).v);
        }
        for (VertexId v : vs) out.block_incidence[v].push_back(static_cast<int>(i));
    }
    for (const auto& [v, flag] : is_cut)
        if (flag) out.cutvertices.push_back(v);
    std::sort(out.cutvertices.begin(), out.cutvertices.end());
    return out;
}

} // namespace cdplan

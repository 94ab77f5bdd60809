#include "cdplan/rotation.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "cdplan/errors.hpp"

namespace cdplan {

CyclicOrder RotationSystem::labels_at(const MultiGraph& g, VertexId v) const {
    std::vector<int> labels;
    for (EdgeId e : order.at(v)) labels.push_back(g.edge(e).label);
    return CyclicOrder(std::move(labels));
}

RotationSystem RotationSystem::mirrored() const {
    RotationSystem m;
    for (const auto& [v, seq] : order) m.order[v] = std::vector<EdgeId>(seq.rbegin(), seq.rend());
    return m;
}

bool RotationSystem::total_on(const MultiGraph& g) const {
    for (VertexId v : g.vertices()) {
        auto it = order.find(v);
        if (it == order.end()) {
            if (!g.incident(v).empty()) return false;
            continue;
        }
        std::vector<EdgeId> a = it->second;
        std::vector<EdgeId> b = g.incident(v);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

namespace {

// Darts for a loop-free multigraph: 2*i (u->v) and 2*i+1 (v->u) for edge index i.
struct DartMaps {
    std::unordered_map<EdgeId, int> eindex;
    std::vector<int> next_dart; // successor along the face
    int dart_count = 0;
};

DartMaps build_darts(const MultiGraph& g, const RotationSystem& r) {
    DartMaps dm;
    dm.dart_count = static_cast<int>(g.edge_count()) * 2;
    dm.next_dart.assign(dm.dart_count, -1);
    int idx = 0;
    for (const Edge& e : g.edges()) dm.eindex[e.id] = idx++;

    for (VertexId v : g.vertices()) {
        if (g.incident(v).empty()) continue;
        auto it = r.order.find(v);
        if (it == r.order.end()) throw ArgumentError("rotation missing vertex " + std::to_string(v));
        const auto& seq = it->second;
        {
            std::vector<EdgeId> a = seq, b = g.incident(v);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) throw ArgumentError("rotation at vertex " + std::to_string(v) + " is not its incident edge set");
        }
        // Out-dart of edge e at v.
        auto out_dart = [&](EdgeId e) {
            const Edge& ed = g.edge(e);
            return 2 * dm.eindex[e] + (ed.u == v ? 0 : 1);
        };
        for (std::size_t i = 0; i < seq.size(); ++i) {
            EdgeId e = seq[i];
            EdgeId f = seq[(i + 1) % seq.size()];
            // Arriving at v via e: continue with successor f.
            int arriving = out_dart(e) ^ 1;
            dm.next_dart[arriving] = out_dart(f);
        }
    }
    return dm;
}

} // namespace

int face_count(const MultiGraph& g, const RotationSystem& r) {
    DartMaps dm = build_darts(g, r);
    std::vector<bool> seen(dm.dart_count, false);
    int faces = 0;
    for (int d = 0; d < dm.dart_count; ++d) {
        if (seen[d]) continue;
        ++faces;
        int cur = d;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = dm.next_dart[cur];
            if (cur < 0) throw ArgumentError("rotation does not cover all darts");
        }
    }
    return faces;
}

bool rotation_is_planar(const MultiGraph& g, const RotationSystem& r) {
    DartMaps dm = build_darts(g, r);

    // Component id per vertex.
    std::unordered_map<VertexId, int> comp;
    int ncomp = 0;
    for (const auto& cvs : components(g)) {
        for (VertexId v : cvs) comp[v] = ncomp;
        ++ncomp;
    }

    std::vector<int> vcount(ncomp, 0), ecount(ncomp, 0), fcount(ncomp, 0);
    for (VertexId v : g.vertices()) ++vcount[comp[v]];
    for (const Edge& e : g.edges()) ++ecount[comp[e.u]];

    std::vector<bool> seen(dm.dart_count, false);
    std::vector<const Edge*> edge_of_dart(dm.dart_count);
    for (const Edge& e : g.edges()) {
        int i = dm.eindex[e.id];
        edge_of_dart[2 * i] = &e;
        edge_of_dart[2 * i + 1] = &e;
    }
    for (int d = 0; d < dm.dart_count; ++d) {
        if (seen[d]) continue;
        ++fcount[comp[edge_of_dart[d]->u]];
        int cur = d;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = dm.next_dart[cur];
        }
    }
    for (int c = 0; c < ncomp; ++c) {
        if (ecount[c] == 0) continue; // single vertex: one face, always fine
        if (vcount[c] - ecount[c] + fcount[c] != 2) return false;
    }
    return true;
}

CyclicOrder contract_rotation(const MultiGraph& g, const RotationSystem& r,
                              const std::vector<VertexId>& part) {
    std::unordered_set<VertexId> inside(part.begin(), part.end());
    // Collect darts leaving the part.
    std::vector<std::pair<VertexId, EdgeId>> boundary;
    for (VertexId v : part)
        for (EdgeId e : g.incident(v))
            if (!inside.count(g.edge(e).other(v))) boundary.emplace_back(v, e);
    if (boundary.empty()) throw ArgumentError("contract_rotation: no outgoing edges");

    auto succ = [&](VertexId v, EdgeId e) -> EdgeId {
        const auto& seq = r.order.at(v);
        auto it = std::find(seq.begin(), seq.end(), e);
        return seq[(static_cast<std::size_t>(it - seq.begin()) + 1) % seq.size()];
    };

    // Walk the boundary: from an outgoing dart (v, e), the next boundary dart
    // is found by rotating at v and diving through internal edges.
    auto next_boundary = [&](std::pair<VertexId, EdgeId> d) {
        VertexId v = d.first;
        EdgeId e = succ(v, d.second);
        while (inside.count(g.edge(e).other(v))) {
            VertexId w = g.edge(e).other(v);
            e = succ(w, e);
            v = w;
        }
        return std::make_pair(v, e);
    };

    std::vector<int> labels;
    auto start = boundary.front();
    auto cur = start;
    do {
        labels.push_back(g.edge(cur.second).label);
        cur = next_boundary(cur);
    } while (cur != start && labels.size() <= boundary.size());
    if (labels.size() != boundary.size())
        throw ArgumentError("contract_rotation: part is not connected or walk failed");
    return CyclicOrder(std::move(labels));
}

int DartGraph::add_vertex(VertexId v) {
    verts.push_back(v);
    rotation.emplace(v, std::vector<int>{});
    return static_cast<int>(verts.size()) - 1;
}

int DartGraph::add_edge(VertexId u, VertexId v, int label) {
    edges.push_back(DEdge{u, v, label});
    return static_cast<int>(edges.size()) - 1;
}

VertexId DartGraph::dart_tail(int d) const {
    const DEdge& e = edges[static_cast<std::size_t>(d / 2)];
    return (d % 2 == 0) ? e.u : e.v;
}

VertexId DartGraph::dart_head(int d) const {
    return dart_tail(d ^ 1);
}

int DartGraph::face_count() const {
    int nd = static_cast<int>(edges.size()) * 2;
    std::vector<int> next(nd, -1);
    for (const auto& [v, seq] : rotation) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            int d = seq[i];
            if (dart_tail(d) != v) throw ArgumentError("dart rotation: dart not leaving its vertex");
            int f = seq[(i + 1) % seq.size()];
            next[d ^ 1] = f;
        }
    }
    std::vector<bool> seen(nd, false);
    int faces = 0;
    for (int d = 0; d < nd; ++d) {
        if (seen[d]) continue;
        ++faces;
        int cur = d;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = next[cur];
            if (cur < 0) throw ArgumentError("dart rotation incomplete");
        }
    }
    return faces;
}

bool DartGraph::is_planar_embedding() const {
    // Union-find over vertices.
    std::unordered_map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (VertexId v : verts) parent[v] = v;
    for (const DEdge& e : edges) parent[find(e.u)] = find(e.v);

    std::unordered_map<VertexId, int> vcount, ecount, fcount;
    for (VertexId v : verts) ++vcount[find(v)];
    for (const DEdge& e : edges) ++ecount[find(e.u)];

    int nd = static_cast<int>(edges.size()) * 2;
    std::vector<int> next(nd, -1);
    for (const auto& [v, seq] : rotation)
        for (std::size_t i = 0; i < seq.size(); ++i) next[seq[i] ^ 1] = seq[(i + 1) % seq.size()];
    std::vector<bool> seen(nd, false);
    for (int d = 0; d < nd; ++d) {
        if (seen[d]) continue;
        ++fcount[find(dart_tail(d))];
        int cur = d;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = next[cur];
            if (cur < 0) return false;
        }
    }
    for (const auto& [root, vc] : vcount) {
        auto ec = ecount.find(root);
        if (ec == ecount.end()) continue;
        if (vc - ec->second + fcount[root] != 2) return false;
    }
    return true;
}

} // namespace cdplan

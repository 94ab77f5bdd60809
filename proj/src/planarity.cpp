#include "cdplan/planarity.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cdplan/errors.hpp"

namespace cdplan {

namespace {

// Dart encoding: 2*edge_index + dir (dir 0: u->v).
struct Embedder {
    const MultiGraph& g;
    std::unordered_map<EdgeId, int> eidx;
    std::vector<Edge> eds;

    explicit Embedder(const MultiGraph& graph) : g(graph) {
        for (const Edge& e : g.edges()) {
            eidx[e.id] = static_cast<int>(eds.size());
            eds.push_back(e);
        }
    }

    VertexId tail(int d) const {
        const Edge& e = eds[static_cast<std::size_t>(d / 2)];
        return d % 2 == 0 ? e.u : e.v;
    }
    VertexId head(int d) const { return tail(d ^ 1); }
    int out_dart(EdgeId e, VertexId v) const {
        int i = eidx.at(e);
        return 2 * i + (eds[static_cast<std::size_t>(i)].u == v ? 0 : 1);
    }

    std::vector<std::vector<int>> faces; // dart cycles
    std::unordered_set<VertexId> embedded_vertex;
    std::unordered_set<EdgeId> embedded_edge;

    void start_with_cycle(const std::vector<EdgeId>& cyc_edges, const std::vector<VertexId>& cyc_verts) {
        std::vector<int> fwd, bwd;
        for (std::size_t i = 0; i < cyc_edges.size(); ++i) {
            fwd.push_back(out_dart(cyc_edges[i], cyc_verts[i]));
            embedded_edge.insert(cyc_edges[i]);
            embedded_vertex.insert(cyc_verts[i]);
        }
        for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) bwd.push_back(*it ^ 1);
        faces.push_back(fwd);
        faces.push_back(bwd);
    }

    // Insert the path v0 - x1 - ... - vk (alternating vertices/edges) into face fi.
    void embed_path(std::size_t fi, const std::vector<VertexId>& pverts,
                    const std::vector<EdgeId>& pedges) {
        const std::vector<int> f = faces[fi];
        VertexId v0 = pverts.front(), vk = pverts.back();
        int ci = -1, cj = -1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (head(f[i]) == v0) ci = static_cast<int>(i);
            if (head(f[i]) == vk) cj = static_cast<int>(i);
        }
        if (ci < 0 || cj < 0) throw ArgumentError("embed_path: attachment not on face");

        std::vector<int> fwd, bwd;
        for (std::size_t i = 0; i < pedges.size(); ++i)
            fwd.push_back(out_dart(pedges[i], pverts[i]));
        for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) bwd.push_back(*it ^ 1);

        auto segment = [&](int from, int to) { // darts f[from+1..to], cyclic
            std::vector<int> out;
            int n = static_cast<int>(f.size());
            for (int i = (from + 1) % n; ; i = (i + 1) % n) {
                out.push_back(f[static_cast<std::size_t>(i)]);
                if (i == to) break;
            }
            return out;
        };

        std::vector<int> fa = fwd; // v0 -> vk, then boundary vk -> v0
        {
            std::vector<int> seg = segment(cj, ci);
            fa.insert(fa.end(), seg.begin(), seg.end());
        }
        std::vector<int> fb = bwd; // vk -> v0, then boundary v0 -> vk
        {
            std::vector<int> seg = segment(ci, cj);
            fb.insert(fb.end(), seg.begin(), seg.end());
        }
        faces[fi] = fa;
        faces.push_back(fb);
        for (VertexId v : pverts) embedded_vertex.insert(v);
        for (EdgeId e : pedges) embedded_edge.insert(e);
    }

    std::unordered_set<VertexId> face_vertices(std::size_t fi) const {
        std::unordered_set<VertexId> vs;
        for (int d : faces[fi]) vs.insert(head(d));
        return vs;
    }

    // Rotations derived from the face structure.
    RotationSystem extract() const {
        std::unordered_map<VertexId, std::unordered_map<EdgeId, EdgeId>> succ;
        for (const auto& f : faces) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                int d = f[i];
                int d2 = f[(i + 1) % f.size()];
                VertexId v = head(d);
                succ[v][eds[static_cast<std::size_t>(d / 2)].id] =
                    eds[static_cast<std::size_t>(d2 / 2)].id;
            }
        }
        RotationSystem r;
        for (const auto& [v, m] : succ) {
            std::vector<EdgeId> seq;
            EdgeId start = m.begin()->first;
            EdgeId cur = start;
            do {
                seq.push_back(cur);
                cur = m.at(cur);
            } while (cur != start && seq.size() <= m.size());
            if (seq.size() != m.size())
                throw ArgumentError("face structure inconsistent at vertex " + std::to_string(v));
            r.order[v] = std::move(seq);
        }
        return r;
    }
};

// Any cycle in a graph of minimum degree >= 2: walk without immediate
// backtracking until a vertex repeats.
bool find_cycle(const MultiGraph& g, std::vector<VertexId>& cverts, std::vector<EdgeId>& cedges) {
    if (g.vertex_count() == 0) return false;
    std::vector<VertexId> wv{g.vertices().front()};
    std::vector<EdgeId> we;
    std::unordered_map<VertexId, std::size_t> pos{{wv[0], 0}};
    EdgeId prev = -1;
    while (true) {
        VertexId v = wv.back();
        EdgeId step = -1;
        for (EdgeId e : g.incident(v))
            if (e != prev) {
                step = e;
                break;
            }
        if (step == -1) return false; // degree < 2 somewhere
        VertexId w = g.edge(step).other(v);
        auto it = pos.find(w);
        if (it != pos.end()) {
            cverts.assign(wv.begin() + static_cast<long>(it->second), wv.end());
            cedges.assign(we.begin() + static_cast<long>(it->second), we.end());
            cedges.push_back(step);
            return true;
        }
        we.push_back(step);
        wv.push_back(w);
        pos[w] = wv.size() - 1;
        prev = step;
    }
}

struct Fragment {
    std::vector<EdgeId> edges;
    std::vector<VertexId> attachments; // embedded vertices touched
    std::vector<VertexId> interior;    // non-embedded vertices
};

std::vector<Fragment> fragments_of(const MultiGraph& g, const Embedder& emb) {
    std::vector<Fragment> frs;
    // Chords: unembedded edges with both ends embedded.
    for (const Edge& e : g.edges()) {
        if (emb.embedded_edge.count(e.id)) continue;
        if (emb.embedded_vertex.count(e.u) && emb.embedded_vertex.count(e.v)) {
            Fragment f;
            f.edges = {e.id};
            f.attachments = {e.u, e.v};
            frs.push_back(std::move(f));
        }
    }
    // Components of the unembedded vertices.
    std::unordered_set<VertexId> seen;
    for (VertexId s : g.vertices()) {
        if (emb.embedded_vertex.count(s) || seen.count(s)) continue;
        Fragment f;
        std::set<VertexId> att;
        std::set<EdgeId> fedges;
        std::vector<VertexId> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            f.interior.push_back(v);
            for (EdgeId e : g.incident(v)) {
                fedges.insert(e);
                VertexId w = g.edge(e).other(v);
                if (emb.embedded_vertex.count(w)) {
                    att.insert(w);
                } else if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        f.edges.assign(fedges.begin(), fedges.end());
        f.attachments.assign(att.begin(), att.end());
        frs.push_back(std::move(f));
    }
    return frs;
}

// Path between two attachments through the fragment interior.
void fragment_path(const MultiGraph& g, const Fragment& fr, const Embedder& emb,
                   std::vector<VertexId>& pverts, std::vector<EdgeId>& pedges) {
    if (fr.interior.empty()) {
        const Edge& e = g.edge(fr.edges.front());
        pverts = {e.u, e.v};
        pedges = {fr.edges.front()};
        return;
    }
    // BFS from one attachment through interior vertices to another attachment.
    VertexId a = fr.attachments.front();
    std::unordered_set<EdgeId> inside(fr.edges.begin(), fr.edges.end());
    std::unordered_map<VertexId, std::pair<VertexId, EdgeId>> par;
    std::deque<VertexId> q;
    par[a] = {a, -1};
    q.push_back(a);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        bool v_interior = !emb.embedded_vertex.count(v);
        if (v != a && !v_interior) {
            // Reached another attachment: build the path.
            std::vector<VertexId> rv;
            std::vector<EdgeId> re;
            VertexId x = v;
            while (x != a) {
                rv.push_back(x);
                re.push_back(par[x].second);
                x = par[x].first;
            }
            rv.push_back(a);
            std::reverse(rv.begin(), rv.end());
            std::reverse(re.begin(), re.end());
            pverts = rv;
            pedges = re;
            return;
        }
        if (v == a || v_interior) {
            for (EdgeId e : g.incident(v)) {
                if (!inside.count(e)) continue;
                VertexId w = g.edge(e).other(v);
                if (par.count(w)) continue;
                par[w] = {v, e};
                q.push_back(w);
            }
        }
    }
    throw ArgumentError("fragment has fewer than two attachments (input not biconnected)");
}

// Demoucron-style embedding of a simple biconnected graph with >= 1 cycle.
std::optional<RotationSystem> embed_biconnected_simple(const MultiGraph& g) {
    Embedder emb(g);
    std::vector<VertexId> cv;
    std::vector<EdgeId> ce;
    if (!find_cycle(g, cv, ce)) return std::nullopt; // no cycle in a biconnected graph: impossible
    emb.start_with_cycle(ce, cv);

    while (emb.embedded_edge.size() < g.edge_count()) {
        std::vector<Fragment> frs = fragments_of(g, emb);
        if (frs.empty()) break;
        // Admissible faces per fragment.
        std::vector<std::vector<std::size_t>> adm(frs.size());
        std::size_t best = frs.size();
        for (std::size_t i = 0; i < frs.size(); ++i) {
            for (std::size_t fi = 0; fi < emb.faces.size(); ++fi) {
                auto fv = emb.face_vertices(fi);
                bool ok = true;
                for (VertexId a : frs[i].attachments)
                    if (!fv.count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) adm[i].push_back(fi);
            }
            if (adm[i].empty()) return std::nullopt; // stuck fragment: nonplanar
            if (best == frs.size() || adm[i].size() < adm[best].size()) best = i;
        }
        std::vector<VertexId> pv;
        std::vector<EdgeId> pe;
        fragment_path(g, frs[best], emb, pv, pe);
        emb.embed_path(adm[best].front(), pv, pe);
    }
    return emb.extract();
}

// Keep one representative per endpoint pair; returns representative -> copies.
MultiGraph simplify(const MultiGraph& g, std::map<EdgeId, std::vector<EdgeId>>& copies) {
    MultiGraph s;
    for (VertexId v : g.vertices()) s.add_vertex(v);
    std::map<std::pair<VertexId, VertexId>, EdgeId> rep;
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        auto it = rep.find({key.first, key.second});
        if (it == rep.end()) {
            rep[{key.first, key.second}] = e.id;
            copies[e.id] = {};
            s.add_edge(e.id, e.u, e.v, e.label);
        } else {
            copies[it->second].push_back(e.id);
        }
    }
    return s;
}

std::optional<RotationSystem> embed_block(const MultiGraph& blk) {
    if (blk.edge_count() == 1) {
        RotationSystem r;
        const Edge& e = blk.edges().front();
        r.order[e.u] = {e.id};
        r.order[e.v] = {e.id};
        return r;
    }
    if (blk.vertex_count() == 2) {
        // Parallel bundle: nest the copies.
        RotationSystem r;
        VertexId u = blk.vertices()[0], v = blk.vertices()[1];
        std::vector<EdgeId> at_u = blk.incident(u);
        r.order[u] = at_u;
        r.order[v] = std::vector<EdgeId>(at_u.rbegin(), at_u.rend());
        return r;
    }
    std::map<EdgeId, std::vector<EdgeId>> copies;
    MultiGraph simple = simplify(blk, copies);
    auto base = embed_biconnected_simple(simple);
    if (!base) return std::nullopt;
    // Reinsert parallel copies as nested bigons alongside their representative.
    RotationSystem r = *base;
    for (const auto& [rep, dup] : copies) {
        if (dup.empty()) continue;
        const Edge& e = blk.edge(rep);
        auto& su = r.order[e.u];
        auto& sv = r.order[e.v];
        auto iu = std::find(su.begin(), su.end(), rep);
        su.insert(iu + 1, dup.begin(), dup.end());
        auto iv = std::find(sv.begin(), sv.end(), rep);
        sv.insert(iv, dup.rbegin(), dup.rend());
    }
    return r;
}

} // namespace

std::optional<RotationSystem> is_planar(const MultiGraph& g) {
    RotationSystem r;
    BlockDecomposition bd = blocks(g);
    for (const auto& blk_edges : bd.blocks) {
        MultiGraph blk = g.restricted_to_edges(blk_edges);
        auto br = embed_block(blk);
        if (!br) return std::nullopt;
        for (auto& [v, seq] : br->order) {
            auto& dst = r.order[v];
            dst.insert(dst.end(), seq.begin(), seq.end());
        }
    }
    if (!rotation_is_planar(g, r))
        throw std::logic_error("planar embedder produced a non-planar rotation");
    return r;
}

} // namespace cdplan

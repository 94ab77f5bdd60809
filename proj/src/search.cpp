#include "cdplan/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cdplan/errors.hpp"

namespace cdplan {

Capacity default_capacity() {
    Capacity cap;
    if (const char* env = std::getenv("CDPLAN_CAPACITY")) {
        char* end = nullptr;
        unsigned long long val = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && val > 0) cap.max_assignments = val;
    }
    return cap;
}

namespace search {

std::uint64_t Space::total() const {
    std::uint64_t t = 1;
    for (const auto& c : choices) {
        if (c.empty()) return 0;
        if (t > std::numeric_limits<std::uint64_t>::max() / c.size())
            return std::numeric_limits<std::uint64_t>::max();
        t *= c.size();
    }
    return t;
}

RotationSystem Space::assemble(const std::vector<std::size_t>& pick) const {
    RotationSystem r;
    r.order = forced;
    for (std::size_t i = 0; i < verts.size(); ++i) r.order[verts[i]] = choices[i][pick[i]];
    return r;
}

namespace {

std::vector<std::vector<EdgeId>> edge_orders(const std::vector<EdgeId>& inc) {
    std::vector<std::vector<EdgeId>> out;
    for (const CyclicOrder& o : all_cyclic_orders(inc)) out.push_back(o.seq());
    return out;
}

} // namespace

Space full_space(const MultiGraph& g) {
    Space s;
    for (VertexId v : g.vertices()) {
        const auto& inc = g.incident(v);
        if (inc.empty()) continue;
        if (inc.size() <= 2) {
            s.forced[v] = inc;
            continue;
        }
        s.verts.push_back(v);
        s.choices.push_back(edge_orders(inc));
    }
    return s;
}

Space constrained_space(const MultiGraph& g, const std::map<VertexId, OrderSet>& restrict_to) {
    Space s;
    for (VertexId v : g.vertices()) {
        const auto& inc = g.incident(v);
        auto it = restrict_to.find(v);
        if (it == restrict_to.end()) {
            if (inc.empty()) continue;
            if (inc.size() <= 2) {
                s.forced[v] = inc;
            } else {
                s.verts.push_back(v);
                s.choices.push_back(edge_orders(inc));
            }
            continue;
        }
        // Restricted vertex: candidates are exactly the given orders.
        std::vector<std::vector<EdgeId>> cands;
        for (const CyclicOrder& o : it->second) {
            if (o.size() != inc.size())
                throw ArgumentError("order constraint does not cover the incident edge set");
            cands.push_back(o.seq());
        }
        if (cands.size() == 1) {
            s.forced[v] = cands.front();
        } else {
            // An empty candidate list makes the whole space empty, which is
            // exactly what an infeasible explicit constraint means.
            s.verts.push_back(v);
            s.choices.push_back(std::move(cands));
        }
    }
    return s;
}

void check_capacity(const Space& s, const Capacity& cap, const std::string& what) {
    if (s.total() > cap.max_assignments)
        throw CapacityError(what + ": search space of " + std::to_string(s.total()) +
                            " rotation assignments exceeds capacity " +
                            std::to_string(cap.max_assignments));
}

void for_each_serial(const Space& s, const std::function<bool(const RotationSystem&)>& visit) {
    if (s.total() == 0) return;
    std::vector<std::size_t> pick(s.verts.size(), 0);
    while (true) {
        if (!visit(s.assemble(pick))) return;
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < s.choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) return;
    }
}

namespace {

// Enumerate the sub-space with the first coordinate fixed.
void for_each_with_first(const Space& s, std::size_t first,
                         const std::function<bool(const RotationSystem&)>& visit) {
    std::vector<std::size_t> pick(s.verts.size(), 0);
    if (!pick.empty()) pick[0] = first;
    while (true) {
        if (!visit(s.assemble(pick))) return;
        std::size_t i = pick.empty() ? 0 : 1;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < s.choices[i].size()) break;
            pick[i] = 0;
        }
        if (pick.empty() || i == pick.size()) return;
    }
}

} // namespace

std::optional<RotationSystem> find_planar_serial(const MultiGraph& g, const Space& s) {
    std::optional<RotationSystem> found;
    for_each_serial(s, [&](const RotationSystem& r) {
        if (rotation_is_planar(g, r)) {
            found = r;
            return false;
        }
        return true;
    });
    return found;
}

std::optional<RotationSystem> find_planar_parallel(const MultiGraph& g, const Space& s) {
    if (s.verts.empty() || s.total() == 0) return find_planar_serial(g, s);
    std::size_t nfirst = s.choices[0].size();
    std::atomic<std::size_t> best_first{nfirst};
    std::vector<std::optional<RotationSystem>> results(nfirst);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::size_t f = 0; f < nfirst; ++f) {
        if (f > best_first.load(std::memory_order_relaxed)) continue;
        std::optional<RotationSystem> local;
        for_each_with_first(s, f, [&](const RotationSystem& r) {
            if (rotation_is_planar(g, r)) {
                local = r;
                return false;
            }
            return f <= best_first.load(std::memory_order_relaxed);
        });
        if (local) {
            results[f] = std::move(local);
            std::size_t cur = best_first.load();
            while (f < cur && !best_first.compare_exchange_weak(cur, f)) {
            }
        }
    }
    // Lowest first-coordinate witness keeps the result deterministic.
    for (std::size_t f = 0; f < nfirst; ++f)
        if (results[f]) return results[f];
    return std::nullopt;
}

OrderSet vertex_orders_serial(const MultiGraph& g, const Space& s, VertexId v,
                              std::map<CyclicOrder, RotationSystem>* witnesses) {
    OrderSet out;
    for_each_serial(s, [&](const RotationSystem& r) {
        if (rotation_is_planar(g, r)) {
            CyclicOrder o = r.cyclic_at(v);
            if (out.insert(o).second && witnesses) witnesses->emplace(o, r);
        }
        return true;
    });
    return out;
}

OrderSet vertex_orders_parallel(const MultiGraph& g, const Space& s, VertexId v,
                                std::map<CyclicOrder, RotationSystem>* witnesses) {
    if (s.verts.empty() || s.total() == 0) return vertex_orders_serial(g, s, v, witnesses);
    std::size_t nfirst = s.choices[0].size();
    std::vector<OrderSet> sets(nfirst);
    std::vector<std::map<CyclicOrder, RotationSystem>> wit(nfirst);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::size_t f = 0; f < nfirst; ++f) {
        for_each_with_first(s, f, [&](const RotationSystem& r) {
            if (rotation_is_planar(g, r)) {
                CyclicOrder o = r.cyclic_at(v);
                if (sets[f].insert(o).second && witnesses) wit[f].emplace(o, r);
            }
            return true;
        });
    }
    OrderSet out;
    for (std::size_t f = 0; f < nfirst; ++f) {
        for (const auto& o : sets[f]) out.insert(o);
        if (witnesses)
            for (auto& [o, r] : wit[f]) witnesses->emplace(o, r);
    }
    return out;
}

void for_each_planar_pruned(const MultiGraph& g,
                            const std::function<bool(const RotationSystem&)>& visit) {
    // Assign vertices in BFS order so prefixes are dense.
    std::vector<VertexId> order;
    {
        std::map<VertexId, bool> seen;
        for (VertexId s0 : g.vertices()) {
            if (seen[s0]) continue;
            std::vector<VertexId> queue{s0};
            seen[s0] = true;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                VertexId v = queue[qi];
                order.push_back(v);
                for (EdgeId e : g.incident(v)) {
                    VertexId w = g.edge(e).other(v);
                    if (!seen[w]) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    order.erase(std::remove_if(order.begin(), order.end(),
                               [&](VertexId v) { return g.incident(v).empty(); }),
                order.end());

    std::vector<std::vector<std::vector<EdgeId>>> cands;
    for (VertexId v : order) cands.push_back(edge_orders(g.incident(v)));

    // Prefix graphs and the induced rotations on them.
    RotationSystem partial;
    bool stop = false;

    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (stop) return;
        if (i == order.size()) {
            if (!visit(partial)) stop = true;
            return;
        }
        VertexId v = order[i];
        // Edges of the prefix graph after adding v.
        std::vector<VertexId> prefix(order.begin(), order.begin() + static_cast<long>(i) + 1);
        MultiGraph sub = g.induced(prefix);
        for (const auto& cand : cands[i]) {
            partial.order[v] = cand;
            // Induced rotation: restrict each assigned vertex's order to prefix edges.
            RotationSystem induced;
            bool ok = true;
            for (VertexId w : prefix) {
                std::vector<EdgeId> seq;
                for (EdgeId e : partial.order[w])
                    if (sub.has_edge(e)) seq.push_back(e);
                induced.order[w] = std::move(seq);
            }
            if (sub.edge_count() > 0) ok = rotation_is_planar(sub, induced);
            if (ok) go(i + 1);
            if (stop) break;
        }
        partial.order.erase(v);
    };
    go(0);
}

} // namespace search
} // namespace cdplan

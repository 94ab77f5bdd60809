#include "cdplan/pqtree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cdplan/errors.hpp"

namespace cdplan {

namespace {

std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

PQTree PQTree::leaf(int label) {
    PQTree t;
    t.nodes_.push_back(Node{Kind::Leaf, label, {}});
    t.root_ = 0;
    t.refresh();
    return t;
}

PQTree PQTree::inner(Kind kind, std::vector<PQTree> children) {
    if (children.empty()) throw ArgumentError("inner node needs children");
    if (children.size() == 1) return children.front();
    PQTree t;
    std::vector<int> child_ids;
    for (PQTree& c : children) {
        int off = static_cast<int>(t.nodes_.size());
        for (Node& n : c.nodes_) {
            Node m = n;
            for (int& ch : m.children) ch += off;
            t.nodes_.push_back(std::move(m));
        }
        child_ids.push_back(c.root_ + off);
    }
    t.nodes_.push_back(Node{kind, -1, child_ids});
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    t.normalize();
    return t;
}

PQTree PQTree::universal(const std::vector<int>& labels) {
    if (labels.empty()) throw ArgumentError("universal: empty label set");
    if (labels.size() == 1) return leaf(labels.front());
    std::vector<PQTree> ls;
    for (int l : labels) ls.push_back(leaf(l));
    return inner(Kind::P, std::move(ls));
}

void PQTree::refresh() {
    leaves_.clear();
    for (const Node& n : nodes_)
        if (n.kind == Kind::Leaf) leaves_.push_back(n.label);
    std::sort(leaves_.begin(), leaves_.end());
    auto dup = std::adjacent_find(leaves_.begin(), leaves_.end());
    if (dup != leaves_.end()) throw ArgumentError("duplicate leaf label in PQ-tree");
}

// Compact the node arena to the nodes reachable from the root.
static void compact(std::vector<PQTree::Node>& nodes, int& root) {
    std::vector<int> order;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        order.push_back(i);
        for (int c : nodes[static_cast<std::size_t>(i)].children) stack.push_back(c);
    }
    std::unordered_map<int, int> remap;
    std::vector<PQTree::Node> out;
    for (int i : order) {
        remap[i] = static_cast<int>(out.size());
        out.push_back(nodes[static_cast<std::size_t>(i)]);
    }
    for (auto& n : out)
        for (int& c : n.children) c = remap.at(c);
    nodes = std::move(out);
    root = remap.at(root);
}

void PQTree::normalize() {
    bool changed = true;
    while (changed) {
        changed = false;
        // Splice single-child inner nodes (bottom-up by repeated sweeps).
        for (Node& n : nodes_) {
            if (n.kind == Kind::Leaf) continue;
            std::vector<int> nc;
            for (int c : n.children) {
                Node& ch = nodes_[static_cast<std::size_t>(c)];
                if (ch.kind != Kind::Leaf && ch.children.size() == 1) {
                    nc.push_back(ch.children.front());
                    changed = true;
                } else {
                    nc.push_back(c);
                }
            }
            n.children = std::move(nc);
        }
        Node& r = nodes_[static_cast<std::size_t>(root_)];
        if (r.kind != Kind::Leaf && r.children.size() == 1) {
            root_ = r.children.front();
            changed = true;
            continue;
        }
        // Degree-2 root dissolves into an inner child.
        if (r.kind != Kind::Leaf && r.children.size() == 2) {
            int a = r.children[0], b = r.children[1];
            Node& na = nodes_[static_cast<std::size_t>(a)];
            Node& nb = nodes_[static_cast<std::size_t>(b)];
            if (na.kind != Kind::Leaf) {
                na.children.push_back(b);
                root_ = a;
                changed = true;
                continue;
            }
            if (nb.kind != Kind::Leaf) {
                nb.children.push_back(a);
                root_ = b;
                changed = true;
                continue;
            }
            // Two leaves: canonical P root.
            r.kind = Kind::P;
        }
        // Degree-3 Q-nodes represent the same orders as P-nodes.
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            Node& n = nodes_[i];
            if (n.kind != Kind::Q) continue;
            bool is_root = static_cast<int>(i) == root_;
            std::size_t degree = n.children.size() + (is_root ? 0 : 1);
            if (degree <= 3) {
                n.kind = Kind::P;
                changed = true;
            }
        }
    }
    compact(nodes_, root_);
    refresh();
}

int PQBuilder::add_leaf(int label) {
    nodes_.push_back(PQTree::Node{PQTree::Kind::Leaf, label, {}});
    return static_cast<int>(nodes_.size()) - 1;
}

int PQBuilder::add_inner(PQTree::Kind kind, std::vector<int> children) {
    nodes_.push_back(PQTree::Node{kind, -1, std::move(children)});
    return static_cast<int>(nodes_.size()) - 1;
}

void PQBuilder::add_child(int node, int child) {
    nodes_[static_cast<std::size_t>(node)].children.push_back(child);
}

PQTree PQBuilder::finish(int root) {
    PQTree t;
    t.nodes_ = std::move(nodes_);
    t.root_ = root;
    t.normalize();
    return t;
}

std::uint64_t PQTree::order_count() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        if (n.kind == Kind::Leaf) continue;
        bool is_root = static_cast<int>(i) == root_;
        std::uint64_t k = n.children.size();
        if (n.kind == Kind::P) {
            total *= is_root ? factorial(k - 1) : factorial(k);
        } else {
            std::size_t degree = n.children.size() + (is_root ? 0 : 1);
            total *= degree >= 4 ? 2 : (is_root ? factorial(k - 1) : factorial(k));
        }
    }
    return total;
}

namespace {

using Seq = std::vector<int>;

void concat_products(const std::vector<std::vector<Seq>>& parts, Seq prefix, std::size_t i,
                     std::vector<Seq>& out) {
    if (i == parts.size()) {
        out.push_back(std::move(prefix));
        return;
    }
    for (const Seq& s : parts[i]) {
        Seq p = prefix;
        p.insert(p.end(), s.begin(), s.end());
        concat_products(parts, std::move(p), i + 1, out);
    }
}

} // namespace

OrderSet PQTree::orders(const Capacity& cap) const {
    if (static_cast<int>(leaves_.size()) > cap.max_order_labels)
        throw CapacityError("orders: " + std::to_string(leaves_.size()) +
                            " labels exceed the enumeration bound " +
                            std::to_string(cap.max_order_labels));

    // Linear sequence variants per subtree.
    std::function<std::vector<Seq>(int)> lin = [&](int idx) -> std::vector<Seq> {
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (n.kind == Kind::Leaf) return {Seq{n.label}};
        std::vector<std::vector<Seq>> parts;
        for (int c : n.children) parts.push_back(lin(c));
        std::vector<Seq> out;
        if (n.kind == Kind::Q && n.children.size() + 1 >= 4) {
            concat_products(parts, {}, 0, out);
            std::reverse(parts.begin(), parts.end());
            concat_products(parts, {}, 0, out);
        } else {
            // P node: every permutation of the children.
            std::vector<std::size_t> perm(parts.size());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<std::vector<Seq>> arranged;
                for (std::size_t pi : perm) arranged.push_back(parts[pi]);
                concat_products(arranged, {}, 0, out);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return out;
    };

    OrderSet result;
    const Node& r = nodes_[static_cast<std::size_t>(root_)];
    if (r.kind == Kind::Leaf) {
        result.insert(CyclicOrder({r.label}));
        return result;
    }
    std::vector<std::vector<Seq>> parts;
    for (int c : r.children) parts.push_back(lin(c));
    auto emit_arrangements = [&](const std::vector<std::vector<Seq>>& arranged) {
        std::vector<Seq> flat;
        concat_products(arranged, {}, 0, flat);
        for (Seq& s : flat) result.insert(CyclicOrder(std::move(s)));
    };
    if (r.kind == Kind::Q && r.children.size() >= 4) {
        emit_arrangements(parts);
        std::vector<std::vector<Seq>> rev(parts.rbegin(), parts.rend());
        emit_arrangements(rev);
    } else {
        // Cyclic arrangements of the children: first child stays in front.
        std::vector<std::size_t> perm(parts.size() - 1);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::vector<std::vector<Seq>> arranged{parts[0]};
            for (std::size_t pi : perm) arranged.push_back(parts[pi]);
            emit_arrangements(arranged);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return result;
}

bool PQTree::permits(const CyclicOrder& o) const {
    {
        std::vector<int> sorted(o.seq());
        std::sort(sorted.begin(), sorted.end());
        if (sorted != leaves_) throw ArgumentError("permits: order labels differ from tree leaves");
    }
    std::size_t n = o.size();
    std::unordered_map<int, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[o.seq()[i]] = i;

    // Leaf positions per node; each must be a cyclic arc.
    std::unordered_map<int, std::vector<std::size_t>> node_pos;
    std::function<bool(int)> collect = [&](int idx) {
        const Node& nd = nodes_[static_cast<std::size_t>(idx)];
        std::vector<std::size_t>& ps = node_pos[idx];
        if (nd.kind == Kind::Leaf) {
            ps.push_back(pos.at(nd.label));
            return true;
        }
        for (int c : nd.children) {
            if (!collect(c)) return false;
            const auto& cp = node_pos[c];
            ps.insert(ps.end(), cp.begin(), cp.end());
        }
        if (ps.size() == n || ps.size() <= 1) return true;
        std::vector<bool> mark(n, false);
        for (std::size_t p : ps) mark[p] = true;
        int runs = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mark[i] && !mark[(i + n - 1) % n]) ++runs;
        return runs == 1;
    };
    if (!collect(root_)) return false;

    // Arc start of a node's position set (position whose predecessor is outside).
    auto arc_start = [&](const std::vector<std::size_t>& ps) -> std::size_t {
        if (ps.size() == n) return 0;
        std::vector<bool> mark(n, false);
        for (std::size_t p : ps) mark[p] = true;
        for (std::size_t p : ps)
            if (!mark[(p + n - 1) % n]) return p;
        return ps.front();
    };

    // Q-node children must appear in the stored order or its reverse.
    std::function<bool(int)> check = [&](int idx) {
        const Node& nd = nodes_[static_cast<std::size_t>(idx)];
        if (nd.kind == Kind::Leaf) return true;
        for (int c : nd.children)
            if (!check(c)) return false;
        if (nd.kind != Kind::Q) return true;

        bool is_root = idx == root_;
        std::size_t base = arc_start(node_pos[idx]);
        std::size_t arc_len = node_pos[idx].size();
        // Child block start offsets relative to the node's arc.
        std::vector<std::pair<std::size_t, std::size_t>> blocks; // (offset, child rank)
        for (std::size_t ci = 0; ci < nd.children.size(); ++ci) {
            std::size_t s = arc_start(node_pos[nd.children[ci]]);
            std::size_t off = (s + n - base) % n;
            if (is_root) off = s; // full circle: absolute positions
            blocks.emplace_back(off, ci);
        }
        std::sort(blocks.begin(), blocks.end());
        std::vector<std::size_t> ranks;
        for (auto& [off, rank] : blocks) ranks.push_back(rank);
        (void)arc_len;
        auto steps_by = [&](const std::vector<std::size_t>& rs, long step, bool cyclic) {
            std::size_t k = rs.size();
            for (std::size_t i = 0; i + 1 < k; ++i) {
                long d = static_cast<long>(rs[i + 1]) - static_cast<long>(rs[i]);
                if (cyclic) d = ((d % static_cast<long>(k)) + static_cast<long>(k)) % static_cast<long>(k);
                if (d != (cyclic && step < 0 ? static_cast<long>(k) + step : step)) return false;
            }
            return true;
        };
        if (!is_root) return steps_by(ranks, 1, false) || steps_by(ranks, -1, false);
        return steps_by(ranks, 1, true) || steps_by(ranks, -1, true);
    };
    return check(root_);
}

std::optional<PQTree> PQTree::reduce(const std::vector<int>& s, const Capacity& cap) const {
    std::set<int> sub(s.begin(), s.end());
    for (int l : sub)
        if (!std::binary_search(leaves_.begin(), leaves_.end(), l))
            throw ArgumentError("reduce: label not in tree: " + std::to_string(l));
    if (sub.size() <= 1 || sub.size() == leaves_.size()) return *this;

    OrderSet kept;
    for (const CyclicOrder& o : orders(cap))
        if (o.consecutive(sub)) kept.insert(o);
    if (kept.empty()) return std::nullopt;
    auto t = from_orders(kept);
    if (!t) throw std::logic_error("reduce result not PQ-representable");
    return t;
}

std::optional<PQTree> PQTree::from_orders(const OrderSet& orders) {
    if (orders.empty()) throw ArgumentError("from_orders: empty set");
    std::vector<int> labels(orders.begin()->seq());
    std::sort(labels.begin(), labels.end());
    for (const auto& o : orders) {
        std::vector<int> ls(o.seq());
        std::sort(ls.begin(), ls.end());
        if (ls != labels) throw ArgumentError("from_orders: inconsistent label sets");
    }
    std::size_t n = labels.size();
    if (n == 1) return leaf(labels[0]);
    if (n == 2) return universal(labels);

    // Cut every cyclic order at the reference label; work with linear orders
    // of the remaining labels (as indexes into `rest`).
    int ref = labels.front();
    std::vector<int> rest(labels.begin() + 1, labels.end());
    std::unordered_map<int, int> rpos;
    for (std::size_t i = 0; i < rest.size(); ++i) rpos[rest[i]] = static_cast<int>(i);
    std::size_t m = rest.size();

    std::vector<std::vector<int>> lin; // sequences of rest-indexes
    for (const CyclicOrder& o : orders) {
        const auto& s = o.seq();
        std::size_t at = 0;
        while (s[at] != ref) ++at;
        std::vector<int> row;
        for (std::size_t i = 1; i < s.size(); ++i) row.push_back(rpos.at(s[(at + i) % s.size()]));
        lin.push_back(std::move(row));
    }

    if (m > 20) throw CapacityError("from_orders: label set too large");
    // Common intervals as bitmasks.
    std::vector<std::uint32_t> strong;
    std::vector<std::uint32_t> family;
    std::vector<std::vector<int>> posof(lin.size(), std::vector<int>(m));
    for (std::size_t r = 0; r < lin.size(); ++r)
        for (std::size_t i = 0; i < m; ++i) posof[r][static_cast<std::size_t>(lin[r][i])] = static_cast<int>(i);
    std::uint32_t full = (m >= 32) ? 0xffffffffu : ((1u << m) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc < 2) continue;
        bool ok = true;
        for (std::size_t r = 0; r < lin.size() && ok; ++r) {
            int lo = static_cast<int>(m), hi = -1;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (1u << i)) {
                    lo = std::min(lo, posof[r][i]);
                    hi = std::max(hi, posof[r][i]);
                }
            }
            if (hi - lo + 1 != pc) ok = false;
        }
        if (ok) family.push_back(mask);
    }
    auto overlaps = [](std::uint32_t a, std::uint32_t b) {
        return (a & b) && (a & ~b) && (b & ~a);
    };
    for (std::uint32_t a : family) {
        bool st = true;
        for (std::uint32_t b : family)
            if (overlaps(a, b)) {
                st = false;
                break;
            }
        if (st) strong.push_back(a);
    }
    // Singletons are strong by definition; the full set always is.
    for (std::size_t i = 0; i < m; ++i) strong.push_back(1u << i);
    strong.push_back(full);
    std::sort(strong.begin(), strong.end());
    strong.erase(std::unique(strong.begin(), strong.end()), strong.end());
    std::sort(strong.begin(), strong.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa > pb : a < b;
    });

    // Laminar family -> tree by containment.
    std::vector<int> parent(strong.size(), -1);
    for (std::size_t i = 1; i < strong.size(); ++i) {
        for (std::size_t j = i; j-- > 0;) {
            if ((strong[i] & strong[j]) == strong[i]) {
                int pj = static_cast<int>(j);
                if (parent[i] == -1 ||
                    __builtin_popcount(strong[static_cast<std::size_t>(parent[i])]) >
                        __builtin_popcount(strong[j]))
                    parent[i] = pj;
            }
        }
    }
    std::vector<std::vector<int>> kids(strong.size());
    for (std::size_t i = 1; i < strong.size(); ++i) kids[static_cast<std::size_t>(parent[i])].push_back(static_cast<int>(i));

    // Build PQ subtrees bottom-up into one arena; normalize only once the
    // reference leaf has rejoined the root (the root is linear until then).
    PQBuilder builder;
    bool representable = true;
    std::function<int(int)> build = [&](int si) -> int {
        std::uint32_t mask = strong[static_cast<std::size_t>(si)];
        if (__builtin_popcount(mask) == 1) {
            int bit = __builtin_ctz(mask);
            return builder.add_leaf(rest[static_cast<std::size_t>(bit)]);
        }
        const auto& ch = kids[static_cast<std::size_t>(si)];
        std::vector<int> sub;
        std::vector<std::uint32_t> chm;
        for (int c : ch) {
            sub.push_back(build(c));
            chm.push_back(strong[static_cast<std::size_t>(c)]);
        }
        if (!representable) return 0;
        std::size_t k = ch.size();
        // Quotient permutations of the children across input orders.
        std::set<std::vector<int>> perms;
        for (std::size_t r = 0; r < lin.size(); ++r) {
            std::vector<std::pair<int, int>> firsts; // (position, child)
            for (std::size_t ci = 0; ci < k; ++ci) {
                int lo = static_cast<int>(m);
                for (std::size_t b = 0; b < m; ++b)
                    if (chm[ci] & (1u << b)) lo = std::min(lo, posof[r][b]);
                firsts.emplace_back(lo, static_cast<int>(ci));
            }
            std::sort(firsts.begin(), firsts.end());
            std::vector<int> p;
            for (auto& [pp, ci] : firsts) p.push_back(ci);
            perms.insert(std::move(p));
        }
        if (k == 2 || perms.size() == factorial(k)) return builder.add_inner(Kind::P, std::move(sub));
        if (perms.size() == 2) {
            std::vector<int> a = *perms.begin();
            std::vector<int> b = *std::next(perms.begin());
            std::vector<int> arev(a.rbegin(), a.rend());
            if (arev != b) {
                representable = false;
                return 0;
            }
            std::vector<int> ordered;
            for (int ci : a) ordered.push_back(sub[static_cast<std::size_t>(ci)]);
            return builder.add_inner(Kind::Q, std::move(ordered));
        }
        representable = false;
        return 0;
    };

    int rooted = build(0);
    if (!representable) return std::nullopt;
    // The reference label takes the open slot of the (so far linear) root.
    builder.add_child(rooted, builder.add_leaf(ref));
    PQTree result = builder.finish(rooted);

    // The reconstruction must reproduce the input set exactly.
    Capacity cap;
    cap.max_order_labels = static_cast<int>(n);
    if (result.orders(cap) != orders) return std::nullopt;
    return result;
}

PQTree PQTree::relabeled(const std::vector<std::pair<int, int>>& mapping) const {
    std::unordered_map<int, int> m(mapping.begin(), mapping.end());
    PQTree t = *this;
    for (Node& n : t.nodes_) {
        if (n.kind != Kind::Leaf) continue;
        auto it = m.find(n.label);
        if (it == m.end()) throw ArgumentError("relabel: unmapped leaf");
        n.label = it->second;
    }
    t.refresh();
    return t;
}

bool PQTree::same_orders(const PQTree& other, const Capacity& cap) const {
    if (leaves_ != other.leaves_) return false;
    return orders(cap) == other.orders(cap);
}

std::string PQTree::str(const std::function<std::string(int)>& name) const {
    auto namer = name ? name : [](int l) { return std::to_string(l); };
    std::function<std::string(int)> fmt = [&](int idx) -> std::string {
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (n.kind == Kind::Leaf) return namer(n.label);
        std::string s = n.kind == Kind::P ? "P(" : "Q(";
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i) s += ", ";
            s += fmt(n.children[i]);
        }
        return s + ")";
    };
    return fmt(root_);
}

PQTree PQTree::parse(const std::string& text, const std::function<int(const std::string&)>& label) {
    auto labeler = label ? label : [](const std::string& s) {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ArgumentError("PQ text: bad integer label '" + s + "'");
        return v;
    };
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::function<PQTree()> parse_node = [&]() -> PQTree {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '-'))
            ++pos;
        std::string tok = text.substr(start, pos - start);
        skip();
        if ((tok == "P" || tok == "Q") && pos < text.size() && text[pos] == '(') {
            ++pos;
            std::vector<PQTree> children;
            while (true) {
                children.push_back(parse_node());
                skip();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            skip();
            if (pos >= text.size() || text[pos] != ')') throw ArgumentError("PQ text: expected ')'");
            ++pos;
            return inner(tok == "P" ? Kind::P : Kind::Q, std::move(children));
        }
        if (tok.empty()) throw ArgumentError("PQ text: expected a node");
        return leaf(labeler(tok));
    };
    PQTree t = parse_node();
    skip();
    if (pos != text.size()) throw ArgumentError("PQ text: trailing input");
    return t;
}

Gadget gadget(const PQTree& t) {
    Gadget out;
    VertexId apex = out.graph.add_vertex();
    out.apex = apex;

    // One attachment vertex per (node, neighbor) as needed: P nodes and
    // leaves use a single vertex; Q nodes get a wheel with one rim vertex per
    // neighbor in the node's cyclic order.
    std::function<VertexId(int, bool)> realize = [&](int idx, bool is_root) -> VertexId {
        const PQTree::Node& n = t.node(idx);
        if (n.kind == PQTree::Kind::Leaf) {
            VertexId y = out.graph.add_vertex();
            EdgeId e = out.graph.add_edge(apex, y, n.label);
            out.leaf_edge[n.label] = e;
            out.leaf_vertex[n.label] = y;
            return y;
        }
        if (n.kind == PQTree::Kind::P) {
            VertexId p = out.graph.add_vertex();
            for (int c : n.children) {
                VertexId a = realize(c, false);
                out.graph.add_edge(p, a);
            }
            return p;
        }
        // Q node: wheel with rim slots for children (+ the parent when not root).
        std::size_t slots = n.children.size() + (is_root ? 0 : 1);
        VertexId hub = out.graph.add_vertex();
        std::vector<VertexId> rim;
        for (std::size_t i = 0; i < slots; ++i) rim.push_back(out.graph.add_vertex());
        for (std::size_t i = 0; i < slots; ++i) {
            out.graph.add_edge(rim[i], rim[(i + 1) % slots]);
            out.graph.add_edge(hub, rim[i]);
        }
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            VertexId a = realize(n.children[i], false);
            out.graph.add_edge(rim[i], a);
        }
        return rim.back(); // parent slot
    };

    const PQTree::Node& r = t.node(t.root());
    if (r.kind == PQTree::Kind::Leaf) {
        realize(t.root(), true);
        return out;
    }
    if (r.kind == PQTree::Kind::P) {
        realize(t.root(), true);
        return out;
    }
    realize(t.root(), true);
    return out;
}

} // namespace cdplan

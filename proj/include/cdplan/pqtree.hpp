#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdplan/config.hpp"
#include "cdplan/cyclic.hpp"
#include "cdplan/graph.hpp"

namespace cdplan {

/// Unrooted PQ-tree over a finite set of integer labels, representing a
/// reversal-closed set of cyclic orders.  Internally rooted: the root's
/// children form a cyclic sequence, children of deeper nodes a linear one.
/// Equality of trees is extensional (same represented order set).
class PQTree {
public:
    enum class Kind { P, Q, Leaf };

    struct Node {
        Kind kind = Kind::Leaf;
        int label = -1;             // leaves
        std::vector<int> children;  // inner nodes; fixed sequence for Q
    };

    /// Single P-node over the labels: every cyclic order.
    static PQTree universal(const std::vector<int>& labels);

    /// Build from explicit structure (children of inner nodes given
    /// depth-first).  Used by the parser and by embedding-tree assembly.
    static PQTree leaf(int label);
    static PQTree inner(Kind kind, std::vector<PQTree> children);

    /// Reconstruct the tree representing exactly the given reversal-closed
    /// cyclic-order set; nullopt when the set is not PQ-representable.
    static std::optional<PQTree> from_orders(const OrderSet& orders);

    const std::vector<int>& leaves() const { return leaves_; } // sorted
    std::size_t leaf_count() const { return leaves_.size(); }

    /// Number of represented orders (no enumeration; product formula).
    std::uint64_t order_count() const;

    /// The represented cyclic-order set.  Throws CapacityError when the leaf
    /// count exceeds cap.max_order_labels.
    OrderSet orders(const Capacity& cap = default_capacity()) const;

    /// Membership test, structural (no enumeration).
    bool permits(const CyclicOrder& o) const;

    /// Keep only orders where `s` is consecutive; nullopt when that set is
    /// empty.  Normalized result.
    std::optional<PQTree> reduce(const std::vector<int>& s,
                                 const Capacity& cap = default_capacity()) const;

    PQTree relabeled(const std::vector<std::pair<int, int>>& mapping) const;

    bool same_orders(const PQTree& other, const Capacity& cap = default_capacity()) const;

    std::string str(const std::function<std::string(int)>& name = nullptr) const;
    static PQTree parse(const std::string& text,
                        const std::function<int(const std::string&)>& label =
                            nullptr);

    // Structure access (tests, gadget construction).
    int root() const { return root_; }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    std::size_t node_count() const { return nodes_.size(); }

private:
    std::vector<Node> nodes_;
    int root_ = -1;
    std::vector<int> leaves_;

    void refresh();
    void normalize();
    friend class PQBuilder;
};

/// Arena-style construction of a PQ-tree; normalization happens once at
/// finish().  Needed when assembling subtrees whose root slot is filled later
/// (premature normalization would misread subtree arities as root arities).
class PQBuilder {
public:
    int add_leaf(int label);
    int add_inner(PQTree::Kind kind, std::vector<int> children);
    void add_child(int node, int child);
    PQTree finish(int root);

private:
    std::vector<PQTree::Node> nodes_;
};

/// Planar graph realizing the tree: every Q-node becomes a wheel, leaves hang
/// off an apex vertex.  The edge-orderings of the apex over all planar
/// embeddings are exactly orders(t), read through leaf_edge.
struct Gadget {
    MultiGraph graph;
    VertexId apex;
    std::map<int, EdgeId> leaf_edge;     // tree label -> apex edge
    std::map<int, VertexId> leaf_vertex; // tree label -> leaf vertex
};

Gadget gadget(const PQTree& t);

} // namespace cdplan

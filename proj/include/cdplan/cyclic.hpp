#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace cdplan {

/// Cyclic order of distinct integer labels, identified up to rotation but
/// NOT up to reversal.  Stored canonically with the smallest label first.
class CyclicOrder {
public:
    CyclicOrder() = default;
    explicit CyclicOrder(std::vector<int> seq);

    const std::vector<int>& seq() const { return seq_; }
    std::size_t size() const { return seq_.size(); }
    bool empty() const { return seq_.empty(); }

    CyclicOrder reversed() const;

    /// Sub-order induced on the given label subset (preserving cyclic order).
    CyclicOrder restricted(const std::set<int>& labels) const;

    /// Apply a relabeling map; every label must be mapped.
    CyclicOrder relabeled(const std::vector<std::pair<int, int>>& mapping) const;

    bool contains(int label) const;

    /// True when the labels of `subset` occupy consecutive positions.
    bool consecutive(const std::set<int>& subset) const;

    bool operator==(const CyclicOrder& o) const { return seq_ == o.seq_; }
    bool operator!=(const CyclicOrder& o) const { return seq_ != o.seq_; }
    bool operator<(const CyclicOrder& o) const { return seq_ < o.seq_; }

    std::string str() const;

private:
    std::vector<int> seq_;
};

using OrderSet = std::set<CyclicOrder>;

/// All cyclic orders of the given labels ((n-1)! of them).
std::vector<CyclicOrder> all_cyclic_orders(const std::vector<int>& labels);

bool reversal_closed(const OrderSet& s);

} // namespace cdplan

#include "cdplan/cyclic.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "cdplan/errors.hpp"

namespace cdplan {

CyclicOrder::CyclicOrder(std::vector<int> seq) : seq_(std::move(seq)) {
    if (seq_.empty()) return;
    std::unordered_set<int> dedup(seq_.begin(), seq_.end());
    if (dedup.size() != seq_.size()) throw ArgumentError("cyclic order with repeated labels");
    auto it = std::min_element(seq_.begin(), seq_.end());
    std::rotate(seq_.begin(), it, seq_.end());
}

CyclicOrder CyclicOrder::reversed() const {
    std::vector<int> r(seq_.rbegin(), seq_.rend());
    return CyclicOrder(std::move(r));
}

CyclicOrder CyclicOrder::restricted(const std::set<int>& labels) const {
    std::vector<int> r;
    for (int x : seq_)
        if (labels.count(x)) r.push_back(x);
    return CyclicOrder(std::move(r));
}

CyclicOrder CyclicOrder::relabeled(const std::vector<std::pair<int, int>>& mapping) const {
    std::unordered_map<int, int> m(mapping.begin(), mapping.end());
    std::vector<int> r;
    r.reserve(seq_.size());
    for (int x : seq_) {
        auto it = m.find(x);
        if (it == m.end()) throw ArgumentError("relabel: unmapped label");
        r.push_back(it->second);
    }
    return CyclicOrder(std::move(r));
}

bool CyclicOrder::contains(int label) const {
    return std::find(seq_.begin(), seq_.end(), label) != seq_.end();
}

bool CyclicOrder::consecutive(const std::set<int>& subset) const {
    if (subset.size() <= 1 || subset.size() >= seq_.size()) return true;
    std::size_t n = seq_.size();
    // Count maximal runs of subset members around the cycle.
    int runs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool cur = subset.count(seq_[i]) != 0;
        bool prev = subset.count(seq_[(i + n - 1) % n]) != 0;
        if (cur && !prev) ++runs;
    }
    return runs == 1;
}

std::string CyclicOrder::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(seq_[i]);
    }
    return s + ")";
}

std::vector<CyclicOrder> all_cyclic_orders(const std::vector<int>& labels) {
    std::vector<CyclicOrder> out;
    if (labels.empty()) return out;
    std::vector<int> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() == 1) {
        out.emplace_back(sorted);
        return out;
    }
    // Fix the smallest label first; permute the rest.
    std::vector<int> rest(sorted.begin() + 1, sorted.end());
    do {
        std::vector<int> seq{sorted[0]};
        seq.insert(seq.end(), rest.begin(), rest.end());
        out.emplace_back(std::move(seq));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

bool reversal_closed(const OrderSet& s) {
    for (const auto& o : s)
        if (!s.count(o.reversed())) return false;
    return true;
}

} // namespace cdplan

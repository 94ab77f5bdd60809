#pragma once

#include <cstdint>

namespace cdplan {

/// Budget for exhaustive searches.  `max_assignments` bounds the number of
/// rotation-system candidates a single search may visit; `max_order_labels`
/// bounds the ground-set size for explicit cyclic-order enumeration.
struct Capacity {
    std::uint64_t max_assignments = 3628800; // 10!
    int max_order_labels = 9;
};

/// Default capacity; honours the CDPLAN_CAPACITY environment variable
/// (a plain integer overriding max_assignments).
Capacity default_capacity();

} // namespace cdplan

#pragma once

#include <algorithm>
#include <cstdint>

namespace segscan {

/// Optional instrumentation counters. Engines accept a nullable Stats* and
/// account work and peak structure sizes into it; a null pointer costs one
/// branch per event.
struct Stats {
    std::uint64_t hull_pushes = 0;
    std::uint64_t hull_pops = 0;
    std::uint64_t tangent_queries = 0;
    std::uint64_t tangent_steps = 0;

    std::uint64_t heap_inserts = 0;    // logical heap insertions
    std::uint64_t heap_nodes = 0;      // nodes allocated (persistence copies included)
    std::uint64_t select_pops = 0;     // frontier pops during k-selection
    std::uint64_t enum_visits = 0;     // nodes visited by threshold enumeration

    std::uint64_t peak_hull = 0;        // max live hull entries
    std::uint64_t peak_batch_heap = 0;  // max live nodes in one batch's heap arena
    std::uint64_t peak_carry_heap = 0;  // max entries in the cross-batch heap
    std::uint64_t peak_window = 0;      // max retained prefix points

    void note_hull(std::uint64_t size) { peak_hull = std::max(peak_hull, size); }
    void note_batch_heap(std::uint64_t size) { peak_batch_heap = std::max(peak_batch_heap, size); }
    void note_carry_heap(std::uint64_t size) { peak_carry_heap = std::max(peak_carry_heap, size); }
    void note_window(std::uint64_t size) { peak_window = std::max(peak_window, size); }

    std::uint64_t hull_work() const { return hull_pushes + hull_pops + tangent_steps; }
};

}  // namespace segscan

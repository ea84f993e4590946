#pragma once

#include <algorithm>
#include <vector>

#include "segscan/core.hpp"

namespace segscan {

/// Reference enumeration of every feasible segment with exact scores, in
/// (last, first) order. Quadratic-ish and proud of it; this is the yardstick
/// the fast paths are measured against.
inline std::vector<ScoredSegment> enumerate_feasible(const PrefixIndex& idx, LengthBounds b) {
    std::vector<ScoredSegment> out;
    for (index_t j = 1; j <= idx.size(); ++j) {
        const auto w = idx.candidate_window(j, b);
        if (!w) continue;
        for (index_t t = w->first; t <= w->second; ++t) out.push_back(idx.score({t + 1, j}));
    }
    return out;
}

inline std::vector<ScoredSegment> oracle_top_k(const PrefixIndex& idx, LengthBounds b,
                                               std::size_t k, ScoreMode mode) {
    auto all = enumerate_feasible(idx, b);
    std::sort(all.begin(), all.end(),
              [mode](const ScoredSegment& a, const ScoredSegment& b2) {
                  return ranks_above(a, b2, mode);
              });
    if (all.size() > k) all.resize(k);
    return all;
}

inline std::vector<ScoredSegment> oracle_above(const PrefixIndex& idx, LengthBounds b, double d,
                                               ScoreMode mode, bool strict = false) {
    std::vector<ScoredSegment> out;
    for (const ScoredSegment& s : enumerate_feasible(idx, b)) {
        const double score = score_of(s, mode);
        if (strict ? score > d : score >= d) out.push_back(s);
    }
    std::sort(out.begin(), out.end(),
              [](const ScoredSegment& a, const ScoredSegment& b2) { return a.seg < b2.seg; });
    return out;
}

}  // namespace segscan

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/density.hpp"
#include "segscan/detail/batching.hpp"
#include "segscan/heaps.hpp"
#include "segscan/stats.hpp"
#include "segscan/sum.hpp"

namespace segscan {

/// Sort key for a left candidate under density threshold d: the segment
/// (t+1, j) has density >= d exactly when c_t <= c_j.
struct InterceptKey {
    index_t t = 0;
    double c = 0.0;
};

inline InterceptKey intercept_key(const PrefixIndex& idx, index_t t, double d) {
    return {t, idx.prefix_sum(t) - d * idx.cum_width(t)};
}

namespace detail {

inline bool meets(double score, double d, bool inclusive) {
    return inclusive ? score >= d : score > d;
}

/// One side of the density-threshold batch walk. Left candidates enter an
/// ordered set keyed by c = P - d*W as their windows open; for each right end
/// every key at or below c_j (plus a rounding guard) is probed and the exact
/// density predicate decides. The guard width scales with the magnitudes
/// that fed the keys, so a candidate passing the exact predicate can never
/// sort past the stopping point.
template <class PointSource>
void threshold_density_pass(const PointSource& pts, const BatchWindows& bw, bool leftward,
                            double d, bool inclusive, std::vector<ScoredSegment>& out,
                            Stats* stats) {
    std::set<std::pair<double, index_t>> keys;
    double max_mag = 0.0;
    const auto ckey = [&](index_t t) {
        const HullPoint p = pts.point(t);
        return p.y - d * p.x;
    };
    const auto magnitude = [&](index_t t) {
        const HullPoint p = pts.point(t);
        return std::abs(p.y) + std::abs(d) * p.x;
    };
    const auto insert_key = [&](index_t t) {
        keys.emplace(ckey(t), t);
        max_mag = std::max(max_mag, magnitude(t));
    };
    const auto emit_for = [&](index_t j) {
        if (keys.empty()) return;
        const double cj = ckey(j);
        const double guard =
            16.0 * std::numeric_limits<double>::epsilon() * (max_mag + magnitude(j));
        for (auto it = keys.begin(); it != keys.end() && it->first <= cj + guard; ++it) {
            if (stats) ++stats->enum_visits;
            const ScoredSegment s = segment_between(pts.point(it->second), pts.point(j));
            if (meets(s.density, d, inclusive)) out.push_back(s);
        }
    };
    if (!leftward) {
        index_t pushed = bw.split - 1;
        for (std::size_t r = 0; r < bw.win.size(); ++r) {
            for (index_t t = pushed + 1; t <= bw.win[r].hi; ++t) insert_key(t);
            if (bw.win[r].hi > pushed) pushed = bw.win[r].hi;
            emit_for(bw.first_j + static_cast<index_t>(r));
        }
    } else {
        index_t pushed = bw.split;
        for (std::size_t r = bw.win.size(); r-- > 0;) {
            for (index_t t = pushed - 1; t >= bw.win[r].lo; --t) insert_key(t);
            if (bw.win[r].lo < pushed) pushed = bw.win[r].lo;
            emit_for(bw.first_j + static_cast<index_t>(r));
        }
    }
}

}  // namespace detail

/// Streaming report of every feasible segment whose score clears the
/// threshold. Output arrives in batch order, ordered by (first, last) within
/// each batch.
class ThresholdScanner {
public:
    ThresholdScanner(LengthBounds b, double threshold, ScoreMode mode, bool inclusive = true,
                     Stats* stats = nullptr)
        : framer_(b), d_(threshold), mode_(mode), inclusive_(inclusive), stats_(stats) {}

    void push(Element e) {
        if (auto closed = framer_.push(e, stats_)) absorb(*closed, emitted_);
    }

    void push_raw(double prefix_sum, double cum_width) {
        if (auto closed = framer_.push_raw(prefix_sum, cum_width, stats_))
            absorb(*closed, emitted_);
    }

    std::vector<ScoredSegment> result() const {
        std::vector<ScoredSegment> out = emitted_;
        if (const auto* open = framer_.open_batch()) absorb(*open, out);
        return out;
    }

private:
    void absorb(const detail::BatchWindows& bw, std::vector<ScoredSegment>& out) const {
        std::vector<ScoredSegment> block;
        if (mode_ == ScoreMode::sum) {
            BatchHeap heap;
            for (bool leftward : {false, true})
                for (const BatchVersion& v :
                     sum_pass_versions(framer_, bw, leftward, heap, stats_))
                    for (const SelectedEntry& e :
                         enumerate_at_least(v, d_, inclusive_, stats_))
                        block.push_back(detail::scored_entry(framer_, e));
            if (stats_) stats_->note_batch_heap(heap.nodes());
        } else {
            for (bool leftward : {false, true})
                detail::threshold_density_pass(framer_, bw, leftward, d_, inclusive_, block,
                                               stats_);
        }
        std::sort(block.begin(), block.end(),
                  [](const ScoredSegment& a, const ScoredSegment& b) { return a.seg < b.seg; });
        out.insert(out.end(), block.begin(), block.end());
    }

    detail::BatchFramer framer_;
    double d_;
    ScoreMode mode_;
    bool inclusive_;
    std::vector<ScoredSegment> emitted_;
    Stats* stats_;
};

inline std::vector<ScoredSegment> required_sum_segments(const PrefixIndex& idx, LengthBounds b,
                                                        double d, bool inclusive = true,
                                                        Stats* stats = nullptr) {
    ThresholdScanner scan(b, d, ScoreMode::sum, inclusive, stats);
    for (index_t t = 1; t <= idx.size(); ++t)
        scan.push_raw(idx.prefix_sum(t), idx.cum_width(t));
    return scan.result();
}

inline std::vector<ScoredSegment> required_density_segments(const PrefixIndex& idx, LengthBounds b,
                                                            double d, bool inclusive = true,
                                                            Stats* stats = nullptr) {
    ThresholdScanner scan(b, d, ScoreMode::density, inclusive, stats);
    for (index_t t = 1; t <= idx.size(); ++t)
        scan.push_raw(idx.prefix_sum(t), idx.cum_width(t));
    return scan.result();
}

}  // namespace segscan

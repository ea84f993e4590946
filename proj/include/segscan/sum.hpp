#pragma once

#include <optional>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/density.hpp"
#include "segscan/detail/batching.hpp"
#include "segscan/heaps.hpp"
#include "segscan/stats.hpp"

namespace segscan {

/// Builds the per-right-end heap versions for one direction of a batch.
/// Left-to-right: version j holds keys -P[t] for the right group
/// t in [split, hi(j)]. Right-to-left: t in [lo(j), split-1], grown as j
/// decreases. The groups tile every window, so each candidate pair (t, j)
/// appears in exactly one version family.
template <class PointSource>
std::vector<BatchVersion> sum_pass_versions(const PointSource& pts,
                                            const detail::BatchWindows& bw, bool leftward,
                                            BatchHeap& heap, Stats* stats = nullptr) {
    std::vector<BatchVersion> versions;
    versions.reserve(bw.win.size());
    const BatchHeap::Node* root = nullptr;
    if (!leftward) {
        index_t pushed = bw.split - 1;
        for (std::size_t r = 0; r < bw.win.size(); ++r) {
            const index_t j = bw.first_j + static_cast<index_t>(r);
            for (index_t t = pushed + 1; t <= bw.win[r].hi; ++t)
                root = heap.push_version(root, -pts.point(t).y, t, stats);
            if (bw.win[r].hi > pushed) pushed = bw.win[r].hi;
            versions.push_back({root, pts.point(j).y, j});
        }
    } else {
        index_t pushed = bw.split;
        for (std::size_t r = bw.win.size(); r-- > 0;) {
            const index_t j = bw.first_j + static_cast<index_t>(r);
            for (index_t t = pushed - 1; t >= bw.win[r].lo; --t)
                root = heap.push_version(root, -pts.point(t).y, t, stats);
            if (bw.win[r].lo < pushed) pushed = bw.win[r].lo;
            if (root) versions.push_back({root, pts.point(j).y, j});
        }
    }
    return versions;
}

namespace detail {

template <class PointSource>
ScoredSegment scored_entry(const PointSource& pts, const SelectedEntry& e) {
    const HullPoint a = pts.point(e.t);
    const HullPoint b = pts.point(e.j);
    return segment_between(a, b);
}

template <class PointSource>
void sum_batch_best(const PointSource& pts, const BatchWindows& bw, RunningBest& acc,
                    Stats* stats) {
    BatchHeap heap;
    for (bool leftward : {false, true}) {
        for (const BatchVersion& v : sum_pass_versions(pts, bw, leftward, heap, stats)) {
            // the version root is the group's maximum sum with the smallest
            // left index among ties
            acc.consider(scored_entry(pts, SelectedEntry{v.offset + v.root->key, v.root->t, v.j}));
        }
    }
}

}  // namespace detail

/// Streaming maximum-sum query over the same batch layout as the density
/// engine, with one heap arena per batch instead of hulls.
class SumScanner {
public:
    explicit SumScanner(LengthBounds b, Stats* stats = nullptr)
        : framer_(b), best_(ScoreMode::sum), stats_(stats) {}

    void push(Element e) {
        if (auto closed = framer_.push(e, stats_)) detail::sum_batch_best(framer_, *closed, best_, stats_);
    }

    void push_raw(double prefix_sum, double cum_width) {
        if (auto closed = framer_.push_raw(prefix_sum, cum_width, stats_))
            detail::sum_batch_best(framer_, *closed, best_, stats_);
    }

    std::optional<ScoredSegment> try_result() const {
        RunningBest acc = best_;
        if (const auto* open = framer_.open_batch())
            detail::sum_batch_best(framer_, *open, acc, stats_);
        if (!acc.engaged()) return std::nullopt;
        return acc.top();
    }

    ScoredSegment result() const {
        if (auto r = try_result()) return *r;
        throw NoFeasibleSegment();
    }

private:
    detail::BatchFramer framer_;
    RunningBest best_;
    Stats* stats_;
};

inline ScoredSegment max_sum_segment(const PrefixIndex& idx, LengthBounds b,
                                     Stats* stats = nullptr) {
    SumScanner scan(b, stats);
    for (index_t t = 1; t <= idx.size(); ++t)
        scan.push_raw(idx.prefix_sum(t), idx.cum_width(t));
    return scan.result();
}

/// Maximum-sum feasible segment whose right end lies in the given batch.
inline ScoredSegment batch_max(const PrefixIndex& idx, LengthBounds b, Batch batch,
                               Stats* stats = nullptr) {
    const auto bw = make_batch_windows(idx, b, batch);
    RunningBest acc(ScoreMode::sum);
    detail::sum_batch_best(IndexSource{&idx}, bw, acc, stats);
    if (!acc.engaged()) throw NoFeasibleSegment();
    return acc.top();
}

}  // namespace segscan

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/density.hpp"
#include "segscan/detail/batching.hpp"
#include "segscan/heaps.hpp"
#include "segscan/stats.hpp"
#include "segscan/sum.hpp"

namespace segscan {

/// Rebuilds the heap from its `keep` top entries when it has grown past that.
inline void trim_heap(SkewHeap& h, std::size_t keep, ScoreMode mode, Stats* stats = nullptr) {
    if (h.size() <= keep) return;
    auto kept = select_k_largest(h, keep, stats);
    h.clear();
    for (const ScoredSegment& s : kept) h.insert(score_of(s, mode), s, stats);
}

/// One side of the small-k density search: k rounds of the split-hull pass
/// over the side's surviving left candidates. Each round records the round
/// winner's full row (every feasible segment of the batch sharing the
/// winner's left endpoint) and then retires that left endpoint. The union of
/// both sides' rows is a superset of the batch's true top k.
template <class PointSource>
std::vector<ScoredSegment> mds_smallk_pass(const PointSource& pts, const detail::BatchWindows& bw,
                                           bool leftward, std::size_t k, Stats* stats = nullptr) {
    std::vector<ScoredSegment> out;
    const index_t xlo = leftward ? bw.win.front().lo : bw.split;
    const index_t xhi = leftward ? bw.split - 1 : bw.win.back().hi;
    if (xlo > xhi) return out;
    DeleteMask mask{xlo, std::vector<char>(static_cast<std::size_t>(xhi - xlo + 1), 0)};
    for (std::size_t round = 0; round < k; ++round) {
        PassState st;
        if (leftward)
            run_rl_pass(pts, bw, st, stats, &mask);
        else
            run_lr_pass(pts, bw, st, stats, &mask);
        if (!st.best.engaged()) break;
        const index_t x = st.best.top().seg.first - 1;
        for (std::size_t r = 0; r < bw.win.size(); ++r) {
            if (bw.win[r].lo <= x && x <= bw.win[r].hi) {
                const index_t j = bw.first_j + static_cast<index_t>(r);
                out.push_back(segment_between(pts.point(x), pts.point(j)));
            }
        }
        mask.kill(x);
    }
    return out;
}

/// Large-k regime: every feasible segment of the batch goes into the carry
/// heap, which is compacted to its 2k best whenever it overflows.
template <class PointSource>
void largek_batch(const PointSource& pts, const detail::BatchWindows& bw, std::size_t k,
                  ScoreMode mode, SkewHeap& carry, Stats* stats = nullptr) {
    for (std::size_t r = 0; r < bw.win.size(); ++r) {
        const index_t j = bw.first_j + static_cast<index_t>(r);
        for (index_t t = bw.win[r].lo; t <= bw.win[r].hi; ++t) {
            const ScoredSegment s = segment_between(pts.point(t), pts.point(j));
            carry.insert(score_of(s, mode), s, stats);
            if (carry.size() > 4 * k) trim_heap(carry, 2 * k, mode, stats);
        }
    }
    if (carry.size() > 2 * k) trim_heap(carry, 2 * k, mode, stats);
}

/// Streaming k-best densities. k <= U-L runs the small-k row search per
/// batch; larger k enumerates batch windows outright.
class TopKDensityScanner {
public:
    TopKDensityScanner(LengthBounds b, std::size_t k, Stats* stats = nullptr)
        : framer_(b), k_(k), stats_(stats) {
        if (k < 1) throw BoundsOutOfRange("k must be at least 1");
        smallk_ = static_cast<double>(k) <= b.upper - b.lower;
    }

    void push(Element e) {
        if (auto closed = framer_.push(e, stats_)) absorb(*closed, carry_);
    }

    void push_raw(double prefix_sum, double cum_width) {
        if (auto closed = framer_.push_raw(prefix_sum, cum_width, stats_)) absorb(*closed, carry_);
    }

    std::vector<ScoredSegment> result() const {
        SkewHeap h = carry_.clone();
        if (const auto* open = framer_.open_batch()) absorb(*open, h);
        return select_k_largest(h, k_, stats_);
    }

private:
    void absorb(const detail::BatchWindows& bw, SkewHeap& h) const {
        if (smallk_) {
            for (bool leftward : {false, true})
                for (const ScoredSegment& s : mds_smallk_pass(framer_, bw, leftward, k_, stats_)) {
                    h.insert(s.density, s, stats_);
                    if (h.size() > 4 * k_) trim_heap(h, 2 * k_, ScoreMode::density, stats_);
                }
            if (h.size() > 2 * k_) trim_heap(h, 2 * k_, ScoreMode::density, stats_);
        } else {
            largek_batch(framer_, bw, k_, ScoreMode::density, h, stats_);
        }
        if (stats_) stats_->note_carry_heap(h.size());
    }

    detail::BatchFramer framer_;
    std::size_t k_;
    bool smallk_ = false;
    SkewHeap carry_;
    Stats* stats_;
};

/// Streaming k-best sums: per batch, the k best of the batch's heap versions
/// are selected and melded into the carry heap, which is trimmed back to k.
class TopKSumScanner {
public:
    TopKSumScanner(LengthBounds b, std::size_t k, Stats* stats = nullptr)
        : framer_(b), k_(k), stats_(stats) {
        if (k < 1) throw BoundsOutOfRange("k must be at least 1");
    }

    void push(Element e) {
        if (auto closed = framer_.push(e, stats_)) absorb(*closed, carry_);
    }

    void push_raw(double prefix_sum, double cum_width) {
        if (auto closed = framer_.push_raw(prefix_sum, cum_width, stats_)) absorb(*closed, carry_);
    }

    std::vector<ScoredSegment> result() const {
        SkewHeap h = carry_.clone();
        if (const auto* open = framer_.open_batch()) absorb(*open, h);
        return select_k_largest(h, k_, stats_);
    }

private:
    void absorb(const detail::BatchWindows& bw, SkewHeap& h) const {
        BatchHeap heap;
        std::vector<BatchVersion> versions;
        for (bool leftward : {false, true})
            for (const BatchVersion& v : sum_pass_versions(framer_, bw, leftward, heap, stats_))
                versions.push_back(v);
        for (const SelectedEntry& e :
             select_k_largest(std::span<const BatchVersion>(versions), k_, stats_)) {
            const ScoredSegment s = detail::scored_entry(framer_, e);
            h.insert(s.sum, s, stats_);
        }
        trim_heap(h, k_, ScoreMode::sum, stats_);
        if (stats_) {
            stats_->note_batch_heap(heap.nodes());
            stats_->note_carry_heap(h.size());
        }
    }

    detail::BatchFramer framer_;
    std::size_t k_;
    SkewHeap carry_;
    Stats* stats_;
};

inline std::vector<ScoredSegment> k_max_sum_segments(const PrefixIndex& idx, LengthBounds b,
                                                     std::size_t k, Stats* stats = nullptr) {
    TopKSumScanner scan(b, k, stats);
    for (index_t t = 1; t <= idx.size(); ++t)
        scan.push_raw(idx.prefix_sum(t), idx.cum_width(t));
    auto out = scan.result();
    if (out.empty()) throw NoFeasibleSegment();
    return out;
}

inline std::vector<ScoredSegment> k_max_density_segments(const PrefixIndex& idx, LengthBounds b,
                                                         std::size_t k, Stats* stats = nullptr) {
    TopKDensityScanner scan(b, k, stats);
    for (index_t t = 1; t <= idx.size(); ++t)
        scan.push_raw(idx.prefix_sum(t), idx.cum_width(t));
    auto out = scan.result();
    if (out.empty()) throw NoFeasibleSegment();
    return out;
}

}  // namespace segscan

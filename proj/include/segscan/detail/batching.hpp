#pragma once

#include <cassert>
#include <deque>
#include <optional>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/hull.hpp"
#include "segscan/stats.hpp"

namespace segscan::detail {

struct JWindow {
    index_t lo = 0;  // leftmost feasible prefix point for this right end
    index_t hi = 0;  // rightmost feasible prefix point
};

/// A closed or in-progress run of right endpoints that share the hull split
/// point: every j in the run has lo(j) <= split <= hi(j), where
/// split = hi(first_j). For unit widths this is exactly the fixed-size batch
/// of U-L+1 right ends (after the initial prefix run).
struct BatchWindows {
    index_t first_j = 0;
    index_t split = 0;
    std::vector<JWindow> win;  // win[r] belongs to j = first_j + r

    bool empty() const { return win.empty(); }
    index_t last_j() const { return first_j + static_cast<index_t>(win.size()) - 1; }
};

/// Streams prefix points, maintains the feasibility window pointers and cuts
/// the input into aligned batches. Retains only the prefix points the open
/// batch can still reach; everything older is dropped.
class BatchFramer {
public:
    explicit BatchFramer(LengthBounds b) : bounds_(b) {
        p_.push_back(0.0);
        w_.push_back(0.0);
    }

    /// Appends one element; returns the batch that this element closed, if any.
    std::optional<BatchWindows> push(Element e, Stats* stats = nullptr) {
        if (!(e.width > 0.0)) throw NonPositiveWidth(static_cast<std::size_t>(n_) + 1);
        return push_raw(p_.back() + e.value, w_.back() + e.width, stats);
    }

    /// Appends a precomputed prefix point (bitwise-faithful offline replay).
    std::optional<BatchWindows> push_raw(double prefix_sum, double cum_width,
                                         Stats* stats = nullptr) {
        if (!(cum_width > w_.back())) throw NonPositiveWidth(static_cast<std::size_t>(n_) + 1);
        // points below the open batch's reach are dropped only now, one push
        // after the preceding batch was handed out, so its passes could still
        // read them
        drop_below(pending_drop_);
        p_.push_back(prefix_sum);
        w_.push_back(cum_width);
        ++n_;
        const index_t j = n_;
        const double wj = cum_width;

        while (hi_ptr_ + 1 < j && w_at(hi_ptr_ + 1) <= wj - bounds_.lower) ++hi_ptr_;
        const index_t hij = hi_ptr_;  // -1 while total width has not reached lower
        while (lo_ptr_ < j && w_at(lo_ptr_) < wj - bounds_.upper) ++lo_ptr_;
        const index_t loj = lo_ptr_;
        const bool empty_window = hij < 0 || loj > hij;

        std::optional<BatchWindows> closed;
        if (!open_.win.empty() && (empty_window || loj > open_.split)) {
            closed.emplace(std::move(open_));
            open_ = BatchWindows{};
        }
        if (!empty_window) {
            if (open_.win.empty()) {
                open_.first_j = j;
                open_.split = hij;
                pending_drop_ = loj;
            }
            assert(loj <= open_.split && hij >= open_.split);
            open_.win.push_back({loj, hij});
        }
        if (stats) stats->note_window(p_.size());
        return closed;
    }

    /// The current partial batch, or null when none is open.
    const BatchWindows* open_batch() const { return open_.win.empty() ? nullptr : &open_; }

    index_t size() const { return n_; }

    HullPoint point(index_t t) const {
        assert(t >= base_ && t <= n_);
        return {t, w_at(t), p_at(t)};
    }

private:
    double p_at(index_t t) const { return p_[static_cast<std::size_t>(t - base_)]; }
    double w_at(index_t t) const { return w_[static_cast<std::size_t>(t - base_)]; }

    void drop_below(index_t t) {
        while (base_ < t) {
            p_.pop_front();
            w_.pop_front();
            ++base_;
        }
    }

    LengthBounds bounds_;
    std::deque<double> p_;  // prefix sums for t in [base_, n_]
    std::deque<double> w_;  // cumulative widths for the same range
    index_t base_ = 0;
    index_t n_ = 0;
    index_t lo_ptr_ = 0;
    index_t hi_ptr_ = -1;
    index_t pending_drop_ = 0;
    BatchWindows open_;
};

}  // namespace segscan::detail

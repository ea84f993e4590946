#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/detail/batching.hpp"
#include "segscan/hull.hpp"
#include "segscan/stats.hpp"

namespace segscan {

/// A run of consecutive right endpoints processed together.
struct Batch {
    index_t first = 0;  // first right endpoint index
    index_t size = 0;   // number of right endpoints
};

/// The three tangent parameters carried through a pass: the best slope found
/// so far (rise/run, exact as a pair), the hull position of its contact point
/// and a copy of that point. The line l through alpha_pt with slope rise/run
/// supports the hull from below; no hull vertex strictly left of alpha lies
/// on l.
struct TangentState {
    double rise = 0.0;
    double run = 0.0;  // > 0 once engaged
    std::size_t alpha = 0;
    HullPoint alpha_pt{};

    bool engaged() const { return run > 0.0; }
    double slope() const { return rise / run; }
};

/// Sign of p against the tangent line: +1 above, 0 on, -1 below.
inline int tangent_side(const TangentState& tan, const HullPoint& p) {
    const double lhs = (p.y - tan.alpha_pt.y) * tan.run;
    const double rhs = tan.rise * (p.x - tan.alpha_pt.x);
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

struct PassState {
    LowerHull hull;
    TangentState tangent;
    RunningBest best{ScoreMode::density};
};

/// Marks left candidates removed from a pass (top-k iterations).
struct DeleteMask {
    index_t base = 0;
    std::vector<char> dead;

    bool contains(index_t t) const {
        return t >= base && t < base + static_cast<index_t>(dead.size()) &&
               dead[static_cast<std::size_t>(t - base)];
    }
    void kill(index_t t) { dead[static_cast<std::size_t>(t - base)] = 1; }
};

inline ScoredSegment segment_between(const HullPoint& c, const HullPoint& q) {
    const double sum = q.y - c.y;
    const double width = q.x - c.x;
    return {{c.t + 1, q.t}, sum, width, sum / width};
}

/// Grows the pass hull by one candidate point and restores the tangent
/// bookkeeping. A point on or below l becomes the new contact: l keeps its
/// slope and slides down to pass through it.
inline void pass_add_point(PassState& st, const HullPoint& p, bool leftward, Stats* stats) {
    const int side = st.tangent.engaged() ? tangent_side(st.tangent, p) : 1;
    const std::size_t pops =
        leftward ? st.hull.push_left(p, stats) : st.hull.push_right(p, stats);
    if (!st.tangent.engaged()) return;
    if (leftward) {
        if (side <= 0) {
            st.tangent.alpha = 0;
            st.tangent.alpha_pt = p;
        } else {
            // a point above l never pops the contact
            assert(st.tangent.alpha >= pops);
            st.tangent.alpha = st.tangent.alpha - pops + 1;
        }
    } else {
        if (side < 0) {
            st.tangent.alpha = st.hull.size() - 1;
            st.tangent.alpha_pt = p;
        } else {
            assert(st.tangent.alpha < st.hull.size());
        }
    }
}

/// Queries the tangent from the right endpoint q. Only a q above l can beat
/// the running slope; a q exactly on l ties it, and the tie goes to the
/// contact point, which carries the smallest left index among the tying
/// candidates.
inline void pass_query(PassState& st, const HullPoint& q, Stats* stats) {
    if (st.hull.empty()) return;
    if (stats) ++stats->tangent_queries;
    if (!st.tangent.engaged()) {
        const std::size_t pos = tangent_scan(st.hull, q, 0, stats);
        const HullPoint c = st.hull[pos];
        st.tangent = {q.y - c.y, q.x - c.x, pos, c};
        st.best.consider(segment_between(c, q));
        return;
    }
    const int side = tangent_side(st.tangent, q);
    if (side > 0) {
        const std::size_t pos = tangent_scan(st.hull, q, st.tangent.alpha, stats);
        const HullPoint c = st.hull[pos];
        st.tangent = {q.y - c.y, q.x - c.x, pos, c};
        st.best.consider(segment_between(c, q));
    } else if (side == 0) {
        st.best.consider(segment_between(st.tangent.alpha_pt, q));
    }
}

/// Left-to-right pass over a batch: for each right end j in increasing order
/// the right-group hull over prefix points [split, hi(j)] is extended and
/// queried from p_j. The contact never moves left within the pass.
template <class PointSource>
void run_lr_pass(const PointSource& pts, const detail::BatchWindows& bw, PassState& st,
                 Stats* stats = nullptr, const DeleteMask* skip = nullptr) {
    index_t pushed = bw.split - 1;
    for (std::size_t r = 0; r < bw.win.size(); ++r) {
        const index_t j = bw.first_j + static_cast<index_t>(r);
        const detail::JWindow w = bw.win[r];
        for (index_t t = pushed + 1; t <= w.hi; ++t)
            if (!skip || !skip->contains(t)) pass_add_point(st, pts.point(t), false, stats);
        if (w.hi > pushed) pushed = w.hi;
        pass_query(st, pts.point(j), stats);
    }
}

/// Right-to-left pass: for each right end j in decreasing order the
/// left-group hull over [lo(j), split-1] grows leftward and is queried from
/// p_j. The two groups tile each window, so the two passes together cover
/// every feasible candidate of the batch exactly once.
template <class PointSource>
void run_rl_pass(const PointSource& pts, const detail::BatchWindows& bw, PassState& st,
                 Stats* stats = nullptr, const DeleteMask* skip = nullptr) {
    index_t pushed = bw.split;
    for (std::size_t r = bw.win.size(); r-- > 0;) {
        const index_t j = bw.first_j + static_cast<index_t>(r);
        const detail::JWindow w = bw.win[r];
        for (index_t t = pushed - 1; t >= w.lo; --t)
            if (!skip || !skip->contains(t)) pass_add_point(st, pts.point(t), true, stats);
        if (w.lo < pushed) pushed = w.lo;
        pass_query(st, pts.point(j), stats);
    }
}

struct IndexSource {
    const PrefixIndex* idx;
    HullPoint point(index_t t) const { return prefix_point(*idx, t); }
};

/// Resolves a batch into per-right-end candidate windows and checks the
/// alignment invariant lo(j) <= split <= hi(j) that both passes rely on.
inline detail::BatchWindows make_batch_windows(const PrefixIndex& idx, LengthBounds b,
                                               Batch batch) {
    if (batch.first < 1 || batch.size < 1 || batch.first + batch.size - 1 > idx.size())
        throw BoundsOutOfRange("batch lies outside the index");
    const auto first_win = idx.candidate_window(batch.first, b);
    if (!first_win) throw BoundsOutOfRange("batch starts at a right end with no candidates");
    detail::BatchWindows bw;
    bw.first_j = batch.first;
    bw.split = first_win->second;
    for (index_t j = batch.first; j < batch.first + batch.size; ++j) {
        const auto w = idx.candidate_window(j, b);
        if (!w || w->first > bw.split || w->second < bw.split)
            throw BoundsOutOfRange("batch is not aligned with its candidate windows");
        bw.win.push_back({w->first, w->second});
    }
    return bw;
}

inline void lr_pass(const PrefixIndex& idx, LengthBounds b, Batch batch, PassState& st,
                    Stats* stats = nullptr) {
    const auto bw = make_batch_windows(idx, b, batch);
    run_lr_pass(IndexSource{&idx}, bw, st, stats);
}

inline void rl_pass(const PrefixIndex& idx, LengthBounds b, Batch batch, PassState& st,
                    Stats* stats = nullptr) {
    const auto bw = make_batch_windows(idx, b, batch);
    run_rl_pass(IndexSource{&idx}, bw, st, stats);
}

namespace detail {

template <class Feed>
std::vector<Batch> schedule_by(index_t n, LengthBounds b, Feed&& feed) {
    BatchFramer f(b);
    std::vector<Batch> out;
    auto note = [&out](const BatchWindows& bw) {
        out.push_back({bw.first_j, static_cast<index_t>(bw.win.size())});
    };
    for (index_t j = 1; j <= n; ++j)
        if (auto closed = feed(f, j)) note(*closed);
    if (const auto* open = f.open_batch()) note(*open);
    return out;
}

}  // namespace detail

/// Batch layout for unit widths: the initial prefix run of right ends, then
/// full batches of U-L+1, then the residual run.
inline std::vector<Batch> batch_schedule(index_t n, LengthBounds b) {
    return detail::schedule_by(n, b, [](detail::BatchFramer& f, index_t) {
        return f.push(Element{0.0, 1.0});
    });
}

/// Batch layout induced by arbitrary widths: each batch is the maximal run of
/// right ends whose candidate windows still contain the split point hi(first).
inline std::vector<Batch> batch_schedule(const PrefixIndex& idx, LengthBounds b) {
    return detail::schedule_by(idx.size(), b, [&idx](detail::BatchFramer& f, index_t j) {
        return f.push_raw(idx.prefix_sum(j), idx.cum_width(j));
    });
}

/// Streaming maximum-density query. Feed elements one at a time; the result
/// for the consumed prefix is available at any moment. Auxiliary state is one
/// hull of the open batch's width plus the retained prefix window.
class DensityScanner {
public:
    explicit DensityScanner(LengthBounds b, Stats* stats = nullptr)
        : framer_(b), best_(ScoreMode::density), stats_(stats) {}

    void push(Element e) {
        if (auto closed = framer_.push(e, stats_)) absorb(*closed, best_);
    }

    /// Offline replay of an already-built index (bitwise-identical prefixes).
    void push_raw(double prefix_sum, double cum_width) {
        if (auto closed = framer_.push_raw(prefix_sum, cum_width, stats_)) absorb(*closed, best_);
    }

    std::optional<ScoredSegment> try_result() const {
        RunningBest acc = best_;
        if (const auto* open = framer_.open_batch()) absorb(*open, acc);
        if (!acc.engaged()) return std::nullopt;
        return acc.top();
    }

    ScoredSegment result() const {
        if (auto r = try_result()) return *r;
        throw NoFeasibleSegment();
    }

private:
    void absorb(const detail::BatchWindows& bw, RunningBest& acc) const {
        PassState lr;
        run_lr_pass(framer_, bw, lr, stats_);
        acc.merge(lr.best);
        PassState rl;
        run_rl_pass(framer_, bw, rl, stats_);
        acc.merge(rl.best);
    }

    detail::BatchFramer framer_;
    RunningBest best_;
    Stats* stats_;
};

inline ScoredSegment max_density_segment(const PrefixIndex& idx, LengthBounds b,
                                         Stats* stats = nullptr) {
    DensityScanner scan(b, stats);
    for (index_t t = 1; t <= idx.size(); ++t)
        scan.push_raw(idx.prefix_sum(t), idx.cum_width(t));
    return scan.result();
}

}  // namespace segscan

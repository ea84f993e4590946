#pragma once

#include <cassert>
#include <compare>
#include <deque>

#include "segscan/core.hpp"
#include "segscan/stats.hpp"

namespace segscan {

/// Prefix point t drawn in the plane at (W[t], P[t]); the density of the
/// segment (t+1, j) is the slope from point t to point j.
struct HullPoint {
    index_t t = 0;
    double x = 0.0;
    double y = 0.0;
};

inline HullPoint prefix_point(const PrefixIndex& idx, index_t t) {
    return {t, idx.cum_width(t), idx.prefix_sum(t)};
}

/// Sign of slope(a,b) - slope(c,d), division-free: compares
/// (b.y-a.y)(d.x-c.x) against (d.y-c.y)(b.x-a.x). Exact whenever the
/// coordinates and their pairwise products are exactly representable.
inline std::strong_ordering slope_compare(const HullPoint& a, const HullPoint& b,
                                          const HullPoint& c, const HullPoint& d) {
    const double ab_dx = b.x - a.x;
    const double cd_dx = d.x - c.x;
    if (!(ab_dx > 0.0) || !(cd_dx > 0.0)) throw DegenerateSpan();
    const double lhs = (b.y - a.y) * cd_dx;
    const double rhs = (d.y - c.y) * ab_dx;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline double slope_of(const HullPoint& a, const HullPoint& b) { return (b.y - a.y) / (b.x - a.x); }

/// Lower convex hull grown monotonically from either end. Strictly convex:
/// consecutive edge slopes strictly increase, collinear middle points are
/// dropped as they arise.
class LowerHull {
public:
    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }
    const HullPoint& operator[](std::size_t i) const { return pts_[i]; }
    const HullPoint& front() const { return pts_.front(); }
    const HullPoint& back() const { return pts_.back(); }
    void clear() { pts_.clear(); }

    /// Appends p on the right; pops points that end up on or above the new
    /// supporting edge. Returns the number of pops.
    std::size_t push_right(HullPoint p, Stats* stats = nullptr) {
        if (!pts_.empty() && !(p.x > pts_.back().x)) throw NonMonotoneX();
        std::size_t pops = 0;
        while (pts_.size() >= 2) {
            const HullPoint& mid = pts_[pts_.size() - 1];
            const HullPoint& prev = pts_[pts_.size() - 2];
            if (slope_compare(prev, mid, mid, p) != std::strong_ordering::less) {
                pts_.pop_back();
                ++pops;
            } else {
                break;
            }
        }
        pts_.push_back(p);
        account(pops, stats);
        return pops;
    }

    /// Mirror image of push_right: prepends p, popping from the left end.
    std::size_t push_left(HullPoint p, Stats* stats = nullptr) {
        if (!pts_.empty() && !(p.x < pts_.front().x)) throw NonMonotoneX();
        std::size_t pops = 0;
        while (pts_.size() >= 2) {
            const HullPoint& mid = pts_[0];
            const HullPoint& next = pts_[1];
            if (slope_compare(p, mid, mid, next) != std::strong_ordering::less) {
                pts_.pop_front();
                ++pops;
            } else {
                break;
            }
        }
        pts_.push_front(p);
        account(pops, stats);
        return pops;
    }

    /// Test hook: strict convexity of the stored polyline.
    bool convex() const {
        for (std::size_t i = 2; i < pts_.size(); ++i)
            if (slope_compare(pts_[i - 2], pts_[i - 1], pts_[i - 1], pts_[i]) !=
                std::strong_ordering::less)
                return false;
        return true;
    }

private:
    void account(std::size_t pops, Stats* stats) {
        if (stats) {
            ++stats->hull_pushes;
            stats->hull_pops += pops;
            stats->note_hull(pts_.size());
        }
    }

    std::deque<HullPoint> pts_;
};

struct TangentHit {
    std::size_t contact = 0;
    double slope = 0.0;
};

/// Walks right from `start` while the slope to q strictly improves. The slope
/// sequence along a lower hull is unimodal for a query right of every hull
/// point, so the walk stops at the leftmost maximum at or right of `start`.
inline std::size_t tangent_scan(const LowerHull& h, const HullPoint& q, std::size_t start,
                                Stats* stats = nullptr) {
    std::size_t pos = start;
    while (pos + 1 < h.size() &&
           slope_compare(h[pos + 1], q, h[pos], q) == std::strong_ordering::greater) {
        ++pos;
        if (stats) ++stats->tangent_steps;
    }
    return pos;
}

inline TangentHit max_slope_tangent(const LowerHull& h, const HullPoint& q, std::size_t start = 0,
                                    Stats* stats = nullptr) {
    if (h.empty()) throw EmptyHull();
    assert(q.x > h.back().x);
    if (start >= h.size()) start = h.size() - 1;
    if (stats) ++stats->tangent_queries;
    const std::size_t pos = tangent_scan(h, q, start, stats);
    return {pos, slope_of(h[pos], q)};
}

}  // namespace segscan

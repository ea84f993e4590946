#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/hull.hpp"
#include "segscan/matrix.hpp"
#include "segscan/oracle.hpp"

namespace segtest {

using namespace segscan;

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int iin(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    index_t nin(index_t lo, index_t hi) {
        return std::uniform_int_distribution<index_t>(lo, hi)(eng);
    }
    double rin(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
    bool coin() { return iin(0, 1) == 1; }
};

inline std::vector<Element> random_int_elements(Rng& rng, index_t n, int lo = -10, int hi = 10,
                                                bool unit_widths = true) {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) {
        const double w = unit_widths ? 1.0 : rng.rin(0.1, 2.5);
        out.push_back({static_cast<double>(rng.iin(lo, hi)), w});
    }
    return out;
}

inline LengthBounds random_unit_bounds(Rng& rng, index_t n) {
    const index_t lower = rng.nin(1, n);
    const index_t upper = rng.nin(lower, n);
    return LengthBounds(static_cast<double>(lower), static_cast<double>(upper));
}

/// Bounds for arbitrary widths guaranteeing at least one feasible segment:
/// [lower, upper] brackets the width of a randomly chosen segment.
inline LengthBounds random_weighted_bounds(Rng& rng, const PrefixIndex& idx) {
    const index_t n = idx.size();
    const index_t i = rng.nin(1, n);
    const index_t j = rng.nin(i, n);
    const double w = idx.cum_width(j) - idx.cum_width(i - 1);
    const double lower = rng.rin(0.2, 1.0) * w;
    const double upper = w + rng.rin(0.0, 1.0) * w;
    return LengthBounds(lower, upper);
}

/// Deep prefix-sum valleys that leave the candidate window as the right end
/// advances: the failure shape of one-hull sliding-window updates.
inline std::vector<Element> valley_elements(Rng& rng, index_t n, index_t upper) {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i)
        out.push_back({static_cast<double>(rng.iin(-3, 3)), 1.0});
    const index_t dips = rng.nin(1, 2);
    for (index_t d = 0; d < dips; ++d) {
        const index_t pos = rng.nin(0, n - 1);
        const index_t len = std::min<index_t>(rng.nin(1, std::max<index_t>(1, upper)), n - pos);
        const int depth = rng.iin(20, 200);
        for (index_t i = pos; i < pos + len; ++i)
            out[static_cast<std::size_t>(i)].value = -static_cast<double>(depth) + rng.iin(-3, 3);
        // sharp recovery right after the dip keeps the optimum near the rim
        for (index_t i = pos + len; i < std::min(n, pos + len + 3); ++i)
            out[static_cast<std::size_t>(i)].value = static_cast<double>(depth / 2 + rng.iin(0, 5));
    }
    return out;
}

/// O(n^2) gift-wrapping lower hull: from the leftmost point repeatedly pick
/// the smallest-slope successor, taking the farthest on ties so collinear
/// middles drop out.
inline std::vector<HullPoint> brute_lower_hull(std::vector<HullPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) { return a.x < b.x; });
    std::vector<HullPoint> hull;
    if (pts.empty()) return hull;
    std::size_t cur = 0;
    hull.push_back(pts[0]);
    while (cur + 1 < pts.size()) {
        std::size_t best = cur + 1;
        for (std::size_t cand = cur + 2; cand < pts.size(); ++cand) {
            const auto ord = slope_compare(pts[cur], pts[cand], pts[cur], pts[best]);
            if (ord == std::strong_ordering::less ||
                (ord == std::strong_ordering::equal && pts[cand].x > pts[best].x))
                best = cand;
        }
        hull.push_back(pts[best]);
        cur = best;
    }
    return hull;
}

inline bool same_points(const std::vector<HullPoint>& a, const LowerHull& h) {
    if (a.size() != h.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].x != h[i].x || a[i].y != h[i].y) return false;
    return true;
}

/// Exhaustive 2-D reference: every row and column interval, scored through
/// prefix sums of the collapsed slice.
inline SubarrayResult brute_subarray_2d(const Matrix2D& mat, LengthBounds b, ScoreMode mode) {
    SubarrayResult best{};
    bool found = false;
    for (index_t r1 = 1; r1 <= mat.rows(); ++r1) {
        std::vector<double> values(static_cast<std::size_t>(mat.cols()), 0.0);
        std::vector<double> widths(static_cast<std::size_t>(mat.cols()), 0.0);
        for (index_t r2 = r1; r2 <= mat.rows(); ++r2) {
            PrefixIndex idx;
            for (index_t c = 1; c <= mat.cols(); ++c) {
                values[static_cast<std::size_t>(c - 1)] += mat.value(r2, c);
                widths[static_cast<std::size_t>(c - 1)] += mat.width(r2, c);
                idx.append({values[static_cast<std::size_t>(c - 1)],
                            mat.uniform() ? 1.0 : widths[static_cast<std::size_t>(c - 1)]});
            }
            for (const ScoredSegment& s : enumerate_feasible(idx, b)) {
                const double score = score_of(s, mode);
                const double cur = mode == ScoreMode::sum ? best.sum : best.density;
                const bool wins =
                    !found || score > cur ||
                    (score == cur &&
                     std::array<index_t, 4>{r1, r2, s.seg.first, s.seg.last} <
                         std::array<index_t, 4>{best.r1, best.r2, best.c1, best.c2});
                if (wins) {
                    best = {r1, r2, s.seg.first, s.seg.last, s.sum, s.width, s.density};
                    found = true;
                }
            }
        }
    }
    if (!found) throw NoFeasibleSegment();
    return best;
}

inline bool same_segments(const std::vector<ScoredSegment>& a,
                          const std::vector<ScoredSegment>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].seg != b[i].seg) return false;
    return true;
}

}  // namespace segtest

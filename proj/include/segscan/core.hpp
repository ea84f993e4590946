#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "segscan/errors.hpp"

namespace segscan {

using index_t = std::int64_t;

/// One input item: a value and a strictly positive width.
struct Element {
    double value = 0.0;
    double width = 1.0;
};

/// Width bounds [lower, upper] that a segment's total width must satisfy.
/// For unit widths these are the classic length bounds.
struct LengthBounds {
    double lower;
    double upper;

    LengthBounds(double lo, double hi) : lower(lo), upper(hi) {
        if (!(lo > 0.0) || !(hi >= lo))
            throw BoundsOutOfRange("width bounds must satisfy 0 < lower <= upper");
    }
};

/// 1-based inclusive index pair; compares lexicographically, which is the
/// tie-break order used everywhere.
struct Segment {
    index_t first = 0;
    index_t last = 0;

    auto operator<=>(const Segment&) const = default;
};

struct ScoredSegment {
    Segment seg{};
    double sum = 0.0;
    double width = 0.0;
    double density = 0.0;
};

enum class ScoreMode { sum, density };

inline double score_of(const ScoredSegment& s, ScoreMode mode) {
    return mode == ScoreMode::sum ? s.sum : s.density;
}

/// Ranking order shared by every query: higher score first, ties resolved by
/// ascending (first, last).
inline bool ranks_above(const ScoredSegment& a, const ScoredSegment& b, ScoreMode mode) {
    const double va = score_of(a, mode);
    const double vb = score_of(b, mode);
    if (va != vb) return va > vb;
    return a.seg < b.seg;
}

/// Prefix sums P[0..n] and cumulative widths W[0..n]; appendable one element
/// at a time, immutable apart from append.
class PrefixIndex {
public:
    PrefixIndex() : p_{0.0}, w_{0.0} {}

    index_t size() const { return static_cast<index_t>(p_.size()) - 1; }

    double prefix_sum(index_t t) const { return p_[static_cast<std::size_t>(t)]; }
    double cum_width(index_t t) const { return w_[static_cast<std::size_t>(t)]; }

    void append(Element e) {
        if (!(e.width > 0.0)) throw NonPositiveWidth(static_cast<std::size_t>(size()) + 1);
        p_.push_back(p_.back() + e.value);
        w_.push_back(w_.back() + e.width);
    }

    /// Value and width of the i-th element, reconstructed from the prefixes.
    Element element(index_t i) const {
        const auto k = static_cast<std::size_t>(i);
        return {p_[k] - p_[k - 1], w_[k] - w_[k - 1]};
    }

    bool valid(Segment s) const { return 1 <= s.first && s.first <= s.last && s.last <= size(); }

    ScoredSegment score(Segment s) const {
        const double sum = prefix_sum(s.last) - prefix_sum(s.first - 1);
        const double width = cum_width(s.last) - cum_width(s.first - 1);
        return {s, sum, width, sum / width};
    }

    bool feasible(Segment s, LengthBounds b) const {
        const double width = cum_width(s.last) - cum_width(s.first - 1);
        return b.lower <= width && width <= b.upper;
    }

    /// Left prefix-point candidates for right end j: every t with
    /// W[j]-upper <= W[t] <= W[j]-lower, i.e. segment (t+1, j) is feasible.
    /// Empty window yields nullopt.
    std::optional<std::pair<index_t, index_t>> candidate_window(index_t j, LengthBounds b) const {
        const double wj = cum_width(j);
        // hi: last t with W[t] <= wj - lower (none when W[j] < lower)
        index_t lo = 0, hi = -1;
        {
            index_t a = 0, z = j - 1;
            while (a <= z) {
                const index_t mid = a + (z - a) / 2;
                if (cum_width(mid) <= wj - b.lower) {
                    hi = mid;
                    a = mid + 1;
                } else {
                    z = mid - 1;
                }
            }
        }
        if (hi < 0) return std::nullopt;
        {
            index_t a = 0, z = j;
            lo = j;
            while (a <= z) {
                const index_t mid = a + (z - a) / 2;
                if (cum_width(mid) >= wj - b.upper) {
                    lo = mid;
                    z = mid - 1;
                } else {
                    a = mid + 1;
                }
            }
        }
        if (lo > hi) return std::nullopt;
        return std::make_pair(lo, hi);
    }

private:
    std::vector<double> p_;
    std::vector<double> w_;
};

inline PrefixIndex build_prefix_index(const std::vector<Element>& elements) {
    PrefixIndex idx;
    for (const Element& e : elements) idx.append(e);
    return idx;
}

inline bool is_feasible(const PrefixIndex& idx, Segment s, LengthBounds b) {
    return idx.feasible(s, b);
}

inline ScoredSegment score(const PrefixIndex& idx, Segment s) { return idx.score(s); }

/// Number of length-feasible segments for unit widths and integer bounds.
inline index_t count_feasible(index_t n, index_t lower, index_t upper) {
    if (!(1 <= lower && lower <= upper && upper <= n))
        throw BoundsOutOfRange("count_feasible needs 1 <= L <= U <= n");
    const index_t gap = upper - lower;
    return (n - upper + 1) * (gap + 1) + gap * (gap + 1) / 2;
}

/// Running maximum under the shared ranking order.
class RunningBest {
public:
    explicit RunningBest(ScoreMode mode) : mode_(mode) {}

    void consider(const ScoredSegment& s) {
        if (!engaged_ || ranks_above(s, top_, mode_)) {
            top_ = s;
            engaged_ = true;
        }
    }

    void merge(const RunningBest& other) {
        if (other.engaged_) consider(other.top_);
    }

    bool engaged() const { return engaged_; }
    const ScoredSegment& top() const { return top_; }
    ScoreMode mode() const { return mode_; }

private:
    ScoreMode mode_;
    bool engaged_ = false;
    ScoredSegment top_{};
};

}  // namespace segscan

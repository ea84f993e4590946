#pragma once

#include <utility>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/density.hpp"
#include "segscan/errors.hpp"
#include "segscan/sum.hpp"

namespace segscan {

/// Rectangular matrix of (value, width) cells, 1-based. Without widths every
/// collapsed column has width 1, so the bounds constrain the column count;
/// with widths a collapsed column weighs the sum of its slice.
class Matrix2D {
public:
    Matrix2D(index_t rows, index_t cols, std::vector<double> values,
             std::vector<double> widths = {})
        : rows_(rows), cols_(cols), values_(std::move(values)), widths_(std::move(widths)) {
        if (rows_ < 1 || cols_ < 1 ||
            values_.size() != static_cast<std::size_t>(rows_ * cols_))
            throw BoundsOutOfRange("matrix shape does not match its data");
        if (!widths_.empty()) {
            if (widths_.size() != values_.size())
                throw BoundsOutOfRange("width grid does not match the value grid");
            for (std::size_t i = 0; i < widths_.size(); ++i)
                if (!(widths_[i] > 0.0)) throw NonPositiveWidth(i + 1);
        }
    }

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    bool uniform() const { return widths_.empty(); }

    double value(index_t r, index_t c) const { return values_[cell(r, c)]; }
    double width(index_t r, index_t c) const { return uniform() ? 1.0 : widths_[cell(r, c)]; }

private:
    std::size_t cell(index_t r, index_t c) const {
        return static_cast<std::size_t>((r - 1) * cols_ + (c - 1));
    }

    index_t rows_;
    index_t cols_;
    std::vector<double> values_;
    std::vector<double> widths_;
};

/// Collapses the row slice [r1, r2] columnwise into a 1-dimensional sequence.
inline std::vector<Element> collapse_rows(const Matrix2D& mat, index_t r1, index_t r2) {
    if (r1 < 1 || r2 < r1 || r2 > mat.rows()) throw RowRangeInvalid();
    std::vector<Element> out(static_cast<std::size_t>(mat.cols()));
    for (index_t c = 1; c <= mat.cols(); ++c) {
        double value = 0.0;
        double width = 0.0;
        for (index_t r = r1; r <= r2; ++r) {
            value += mat.value(r, c);
            width += mat.width(r, c);
        }
        out[static_cast<std::size_t>(c - 1)] = {value, mat.uniform() ? 1.0 : width};
    }
    return out;
}

struct SubarrayResult {
    index_t r1 = 0, r2 = 0, c1 = 0, c2 = 0;
    double sum = 0.0;
    double width = 0.0;
    double density = 0.0;
};

/// Best subarray over all row intervals, each reduced to a 1-dimensional
/// query along the columns. Ties fall to the lexicographically smallest
/// (r1, r2, c1, c2), which the iteration order provides for free.
inline SubarrayResult max_subarray_2d(const Matrix2D& mat, LengthBounds b, ScoreMode mode,
                                      Stats* stats = nullptr) {
    SubarrayResult best{};
    bool found = false;
    const auto cols = static_cast<std::size_t>(mat.cols());
    for (index_t r1 = 1; r1 <= mat.rows(); ++r1) {
        std::vector<double> values(cols, 0.0);
        std::vector<double> widths(cols, 0.0);
        for (index_t r2 = r1; r2 <= mat.rows(); ++r2) {
            PrefixIndex idx;
            for (index_t c = 1; c <= mat.cols(); ++c) {
                auto& v = values[static_cast<std::size_t>(c - 1)];
                auto& w = widths[static_cast<std::size_t>(c - 1)];
                v += mat.value(r2, c);
                w += mat.width(r2, c);
                idx.append({v, mat.uniform() ? 1.0 : w});
            }
            ScoredSegment s;
            try {
                s = (mode == ScoreMode::sum) ? max_sum_segment(idx, b, stats)
                                             : max_density_segment(idx, b, stats);
            } catch (const NoFeasibleSegment&) {
                continue;
            }
            const double score = score_of(s, mode);
            if (!found || score > (mode == ScoreMode::sum ? best.sum : best.density)) {
                best = {r1, r2, s.seg.first, s.seg.last, s.sum, s.width, s.density};
                found = true;
            }
        }
    }
    if (!found) throw NoFeasibleSegment();
    return best;
}

}  // namespace segscan

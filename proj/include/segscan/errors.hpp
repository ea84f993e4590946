#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segscan {

/// Element widths must be strictly positive.
class NonPositiveWidth : public std::invalid_argument {
public:
    explicit NonPositiveWidth(std::size_t position)
        : std::invalid_argument("non-positive width at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class BoundsOutOfRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by query entry points when no segment satisfies the width bounds.
class NoFeasibleSegment : public std::runtime_error {
public:
    NoFeasibleSegment() : std::runtime_error("no feasible segment") {}
};

/// Hull points must arrive with strictly monotone x.
class NonMonotoneX : public std::logic_error {
public:
    NonMonotoneX() : std::logic_error("hull point breaks strict x monotonicity") {}
};

/// Slope of a zero-width span is undefined.
class DegenerateSpan : public std::logic_error {
public:
    DegenerateSpan() : std::logic_error("slope comparison over a degenerate x span") {}
};

class EmptyHull : public std::logic_error {
public:
    EmptyHull() : std::logic_error("tangent query on an empty hull") {}
};

class RowRangeInvalid : public std::invalid_argument {
public:
    RowRangeInvalid() : std::invalid_argument("row interval out of range") {}
};

class EmptyInput : public std::runtime_error {
public:
    EmptyInput() : std::runtime_error("input holds no elements") {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace segscan

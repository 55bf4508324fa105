#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace fuzzyfrac {

// Compact real interval [lo, hi]. Plain interval arithmetic, no directed
// rounding: results are used for level-set bookkeeping, not enclosures.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr Interval() = default;
    constexpr Interval(double x) : lo(x), hi(x) {}
    constexpr Interval(double l, double h) : lo(l), hi(h) {}

    constexpr bool valid() const { return lo <= hi; }
    constexpr double midpoint() const { return 0.5 * (lo + hi); }
    constexpr double half_width() const { return 0.5 * (hi - lo); }
    constexpr double length() const { return hi - lo; }
    constexpr bool contains(double x) const { return lo <= x && x <= hi; }
    constexpr bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

inline Interval hull(double a, double b) { return a <= b ? Interval{a, b} : Interval{b, a}; }

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

/// Minkowski difference A + (-1)B.
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(double s, const Interval& a) { return s >= 0 ? Interval{s * a.lo, s * a.hi} : Interval{s * a.hi, s * a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

/// The multiplicative "inverse" [1/hi, 1/lo]; only meaningful when 0 is not in a.
inline Interval reciprocal(const Interval& a) { return {1.0 / a.hi, 1.0 / a.lo}; }

/// Hausdorff distance between two intervals.
inline double hausdorff(const Interval& a, const Interval& b) {
    return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

/// Cartesian product of intervals.
using Box = std::vector<Interval>;

}  // namespace fuzzyfrac

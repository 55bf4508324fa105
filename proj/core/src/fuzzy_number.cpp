#include "fuzzyfrac/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace fuzzyfrac {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::crossing: return "crossing";
        case ViolationKind::lower_not_monotone: return "lower_not_monotone";
        case ViolationKind::upper_not_monotone: return "upper_not_monotone";
    }
    return "unknown";
}

double validity_tolerance(std::span<const double> lower, std::span<const double> upper) {
    double scale = 0.0;
    for (double x : lower) scale = std::max(scale, std::abs(x));
    for (double x : upper) scale = std::max(scale, std::abs(x));
    return 1e-9 * (1.0 + scale);
}

ValidityReport validate_endpoints(std::span<const double> lower, std::span<const double> upper) {
    ValidityReport report;
    if (lower.size() != upper.size()) {
        throw DomainError("validate_endpoints: lower and upper differ in length");
    }
    const double tol = validity_tolerance(lower, upper);
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i])) {
            report.violations.push_back({i, ViolationKind::crossing, std::numeric_limits<double>::infinity()});
            continue;
        }
        if (lower[i] - upper[i] > tol) {
            report.violations.push_back({i, ViolationKind::crossing, lower[i] - upper[i]});
        }
        if (i == 0) continue;
        if (lower[i - 1] - lower[i] > tol) {
            report.violations.push_back({i, ViolationKind::lower_not_monotone, lower[i - 1] - lower[i]});
        }
        if (upper[i] - upper[i - 1] > tol) {
            report.violations.push_back({i, ViolationKind::upper_not_monotone, upper[i] - upper[i - 1]});
        }
    }
    report.is_valid = report.violations.empty();
    return report;
}

void enforce_nesting(std::span<double> lower, std::span<double> upper) {
    for (std::size_t i = 0; i < lower.size(); ++i) {
        double lo = lower[i];
        double hi = upper[i];
        if (i > 0) {
            lo = std::max(lo, lower[i - 1]);
            hi = std::min(hi, upper[i - 1]);
        }
        if (lo > hi) {
            double mid = 0.5 * (lo + hi);
            if (i > 0) mid = std::clamp(mid, lower[i - 1], upper[i - 1]);
            lo = hi = mid;
        }
        lower[i] = lo;
        upper[i] = hi;
    }
}

FuzzyNumber FuzzyNumber::from_endpoints(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper) {
    if (lower.size() != grid.size() || upper.size() != grid.size()) {
        throw DomainError("FuzzyNumber: endpoint sequences must match the grid size");
    }
    ValidityReport report = validate_endpoints(lower, upper);
    if (!report.is_valid) {
        const Violation& v = report.violations.front();
        throw ValidationError(std::string("FuzzyNumber: ") + to_string(v.kind) + " at level " +
                                  std::to_string(v.index),
                              std::move(report));
    }
    enforce_nesting(lower, upper);
    return FuzzyNumber(std::move(grid), std::move(lower), std::move(upper));
}

FuzzyNumber FuzzyNumber::trapezoid(double a, double b, double c, double d, const AlphaGrid& grid) {
    if (!(a <= b && b <= c && c <= d)) {
        throw OrderingError("trapezoid: expected a <= b <= c <= d");
    }
    std::vector<double> lower(grid.size()), upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double alpha = grid[i];
        lower[i] = a + alpha * (b - a);
        upper[i] = d + alpha * (c - d);
    }
    lower.back() = b;
    upper.back() = c;
    return from_endpoints(grid, std::move(lower), std::move(upper));
}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c, const AlphaGrid& grid) {
    return trapezoid(a, b, b, c, grid);
}

FuzzyNumber FuzzyNumber::crisp(double x, const AlphaGrid& grid) {
    return FuzzyNumber(grid, std::vector<double>(grid.size(), x), std::vector<double>(grid.size(), x));
}

Interval FuzzyNumber::alpha_cut(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha_cut: alpha must lie in [0, 1]");
    const std::size_t i = grid_.bracket(alpha);
    const double a0 = grid_[i], a1 = grid_[i + 1];
    if (alpha == a0) return cut(i);
    if (alpha == a1) return cut(i + 1);
    const double w = (alpha - a0) / (a1 - a0);
    return {lower_[i] + w * (lower_[i + 1] - lower_[i]), upper_[i] + w * (upper_[i + 1] - upper_[i])};
}

double FuzzyNumber::membership(double x) const {
    const std::size_t top = lower_.size() - 1;
    if (!(x >= lower_[0] && x <= upper_[0])) return 0.0;

    double alpha_lower = 1.0;
    if (lower_[top] > x) {
        // last level whose lower endpoint is still <= x
        auto it = std::upper_bound(lower_.begin(), lower_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - lower_.begin()) - 1;
        alpha_lower = grid_[i] + (x - lower_[i]) / (lower_[i + 1] - lower_[i]) * (grid_[i + 1] - grid_[i]);
    }
    double alpha_upper = 1.0;
    if (upper_[top] < x) {
        auto it = std::upper_bound(upper_.begin(), upper_.end(), x, std::greater<>());
        const std::size_t i = static_cast<std::size_t>(it - upper_.begin()) - 1;
        alpha_upper = grid_[i] + (upper_[i] - x) / (upper_[i] - upper_[i + 1]) * (grid_[i + 1] - grid_[i]);
    }
    return std::clamp(std::min(alpha_lower, alpha_upper), 0.0, 1.0);
}

bool FuzzyNumber::is_crisp() const {
    return lower_.front() == upper_.front();
}

void require_same_grid(const FuzzyNumber& u, const FuzzyNumber& v) {
    if (!(u.grid() == v.grid())) throw GridMismatch("operands use different alpha grids");
}

namespace {

template <class Op>
FuzzyNumber levelwise(const FuzzyNumber& u, const FuzzyNumber& v, Op op) {
    require_same_grid(u, v);
    std::vector<double> lower(u.size()), upper(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Interval c = op(u.cut(i), v.cut(i));
        lower[i] = c.lo;
        upper[i] = c.hi;
    }
    return FuzzyNumber::from_endpoints(u.grid(), std::move(lower), std::move(upper));
}

}  // namespace

FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v) {
    return levelwise(u, v, [](const Interval& a, const Interval& b) { return a + b; });
}

FuzzyNumber operator-(const FuzzyNumber& u) { return scale(u, -1.0); }

FuzzyNumber minkowski_sub(const FuzzyNumber& u, const FuzzyNumber& v) {
    return levelwise(u, v, [](const Interval& a, const Interval& b) { return a - b; });
}

FuzzyNumber scale(const FuzzyNumber& u, double lambda) {
    std::vector<double> lower(u.size()), upper(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Interval c = lambda * u.cut(i);
        lower[i] = c.lo;
        upper[i] = c.hi;
    }
    return FuzzyNumber::from_endpoints(u.grid(), std::move(lower), std::move(upper));
}

FuzzyNumber operator*(const FuzzyNumber& u, const FuzzyNumber& v) {
    return levelwise(u, v, [](const Interval& a, const Interval& b) { return a * b; });
}

double distance(const FuzzyNumber& u, const FuzzyNumber& v) {
    require_same_grid(u, v);
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d = std::max(d, hausdorff(u.cut(i), v.cut(i)));
    }
    return d;
}

double norm(const FuzzyNumber& u) {
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d = std::max({d, std::abs(u.lower()[i]), std::abs(u.upper()[i])});
    }
    return d;
}

FuzzyNumber resample(const FuzzyNumber& u, const AlphaGrid& grid) {
    std::vector<double> lower(grid.size()), upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Interval c = u.alpha_cut(grid[i]);
        lower[i] = c.lo;
        upper[i] = c.hi;
    }
    return FuzzyNumber::from_endpoints(grid, std::move(lower), std::move(upper));
}

}  // namespace fuzzyfrac

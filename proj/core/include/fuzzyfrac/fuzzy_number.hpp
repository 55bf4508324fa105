#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzyfrac/alpha_grid.hpp"
#include "fuzzyfrac/errors.hpp"
#include "fuzzyfrac/interval.hpp"

namespace fuzzyfrac {

enum class ViolationKind { crossing, lower_not_monotone, upper_not_monotone };

const char* to_string(ViolationKind kind);

struct Violation {
    std::size_t index = 0;
    ViolationKind kind = ViolationKind::crossing;
    double magnitude = 0.0;
};

/// Outcome of checking a family of level intervals against the stacking
/// conditions: nonempty cuts and nestedness.
struct ValidityReport {
    bool is_valid = true;
    std::vector<Violation> violations;
};

/// Absolute tolerance used by every validity check: 1e-9 * (1 + max |endpoint|).
double validity_tolerance(std::span<const double> lower, std::span<const double> upper);

/// Reports every index where lower <= upper or the nesting of consecutive
/// cuts fails by more than validity_tolerance(). Crossing is listed before
/// monotonicity failures at the same index.
ValidityReport validate_endpoints(std::span<const double> lower, std::span<const double> upper);

class ValidationError : public Error {
public:
    ValidationError(const std::string& what, ValidityReport report)
        : Error(what), report_(std::move(report)) {}
    const ValidityReport& report() const { return report_; }

private:
    ValidityReport report_;
};

/// Element of E^1 discretized on an AlphaGrid: endpoint sequences
/// lower[i] = u^-(a_i), upper[i] = u^+(a_i).
///
/// Invariants: lower nondecreasing, upper nonincreasing, lower <= upper.
/// Construction goes through from_endpoints(), which clamps violations
/// below tolerance and rejects the rest, so every live instance is valid.
class FuzzyNumber {
public:
    static FuzzyNumber from_endpoints(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper);

    /// <a, b, c, d>: cut(alpha) = [a + alpha (b - a), d + alpha (c - d)].
    static FuzzyNumber trapezoid(double a, double b, double c, double d,
                                 const AlphaGrid& grid = AlphaGrid::uniform());
    static FuzzyNumber triangular(double a, double b, double c,
                                  const AlphaGrid& grid = AlphaGrid::uniform());
    static FuzzyNumber crisp(double x, const AlphaGrid& grid = AlphaGrid::uniform());

    const AlphaGrid& grid() const { return grid_; }
    std::span<const double> lower() const { return lower_; }
    std::span<const double> upper() const { return upper_; }
    std::size_t size() const { return lower_.size(); }

    /// Stored cut at grid level i.
    Interval cut(std::size_t i) const { return {lower_[i], upper_[i]}; }

    /// Cut at any alpha in [0, 1]; linear interpolation between levels.
    Interval alpha_cut(double alpha) const;

    /// sup { alpha : x in cut(alpha) } using the interpolated endpoint curves.
    double membership(double x) const;

    Interval support() const { return cut(0); }
    Interval core() const { return cut(lower_.size() - 1); }
    bool is_crisp() const;

    friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

private:
    FuzzyNumber(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper)
        : grid_(std::move(grid)), lower_(std::move(lower)), upper_(std::move(upper)) {}

    AlphaGrid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Forces exact nesting on sequences already known to be valid within
/// tolerance: running max on lower, running min on upper, crossings
/// collapsed to a point kept inside the previous cut.
void enforce_nesting(std::span<double> lower, std::span<double> upper);

void require_same_grid(const FuzzyNumber& u, const FuzzyNumber& v);

FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v);
FuzzyNumber operator-(const FuzzyNumber& u);
/// Minkowski difference u + (-1) v.
FuzzyNumber minkowski_sub(const FuzzyNumber& u, const FuzzyNumber& v);
FuzzyNumber scale(const FuzzyNumber& u, double lambda);
/// Levelwise interval product (min/max of the four endpoint products).
FuzzyNumber operator*(const FuzzyNumber& u, const FuzzyNumber& v);

/// d(u, v) = max over levels of max(|u^- - v^-|, |u^+ - v^+|).
double distance(const FuzzyNumber& u, const FuzzyNumber& v);

/// Max-norm of the endpoints, ||u|| = d(u, 0).
double norm(const FuzzyNumber& u);

/// Explicit change of alpha grid by linear interpolation of the endpoints.
FuzzyNumber resample(const FuzzyNumber& u, const AlphaGrid& grid);

}  // namespace fuzzyfrac

#pragma once

#include <cstddef>
#include <vector>

#include "fuzzyfrac/fuzzy_number.hpp"

namespace fuzzyfrac {

/// Fuzzy-valued function sampled at t_k = a + k h, k = 0..M, all values on
/// one alpha grid.
class FuzzyFunction {
public:
    FuzzyFunction(double a, double h, std::vector<FuzzyNumber> values);

    double a() const { return a_; }
    double h() const { return h_; }
    std::size_t size() const { return values_.size(); }
    double time(std::size_t k) const { return a_ + static_cast<double>(k) * h_; }
    const FuzzyNumber& operator[](std::size_t k) const { return values_[k]; }
    const std::vector<FuzzyNumber>& values() const { return values_; }
    const AlphaGrid& grid() const { return values_.front().grid(); }

    /// Endpoint curve t_k -> lower (upper) endpoint at level i.
    std::vector<double> lower_curve(std::size_t level) const;
    std::vector<double> upper_curve(std::size_t level) const;

private:
    double a_;
    double h_;
    std::vector<FuzzyNumber> values_;
};

enum class DerivativeForm { form_i, form_ii, undefined };

const char* to_string(DerivativeForm f);

struct DerivativeSeries {
    FuzzyFunction derivative;
    std::vector<DerivativeForm> forms;
    std::vector<double> switching_points;
};

/// Levelwise gH derivative. Form (i) pairs (lower', upper'), form (ii)
/// pairs (upper', lower'). A sample where both pairings are valid takes the
/// form of its nearest decided neighbour (form (i) if there is none). Where
/// neither pairing is valid the form is undefined and the value is the
/// nested hull of the levelwise intervals. Switching points are the
/// midpoints between samples whose forms flip between (i) and (ii).
DerivativeSeries gh_derivative_series(const FuzzyFunction& f);

/// Trapezoidal integral of the endpoint curves between two sample indices.
FuzzyNumber fuzzy_riemann_integral(const FuzzyFunction& f, std::size_t from, std::size_t to);

/// Riemann-Liouville integral of order q in (0, 1] at sample index n,
/// applied to every endpoint curve.
FuzzyNumber fuzzy_rl_integral(const FuzzyFunction& f, double q, std::size_t n);

struct FracDerivative {
    FuzzyNumber value;
    DerivativeForm form = DerivativeForm::form_i;
};

/// Caputo-type fractional gH derivative of order q in (0, 1) at index n:
/// the L1 scheme on each endpoint curve, paired according to the gH form.
/// Throws SwitchingPointError when the form is undefined or flips on [a, t_n].
FracDerivative fuzzy_frac_derivative(const FuzzyFunction& f, double q, std::size_t n);

}  // namespace fuzzyfrac

#pragma once

#include <cstddef>
#include <vector>

#include "fuzzyfrac/sampled_function.hpp"
#include "fuzzyfrac/special_functions.hpp"

namespace fuzzyfrac {

enum class OracleKind { integral, derivative };

/// Closed form of the Riemann-Liouville integral or derivative of order p
/// applied to (s - a)^beta, evaluated at t > a:
///   integral:   Gamma(beta+1)/Gamma(beta+p+1) (t-a)^(beta+p)
///   derivative: Gamma(beta+1)/Gamma(beta-p+1) (t-a)^(beta-p)
/// A pole in the denominator gamma gives 0 (the function is in the kernel).
double power_rule_oracle(double beta, double p, double a, double t, OracleKind kind);

/// Riemann-Liouville integral of order p >= 0 at sample index n.
/// Product trapezoid rule: f is replaced by its piecewise-linear
/// interpolant and the kernel is integrated exactly.
double rl_integral(const SampledFunction& f, double p, std::size_t n);

/// rl_integral at every sample index.
std::vector<double> rl_integral_series(const SampledFunction& f, double p);

/// Caputo derivative, 0 < p < 1, by the L1 scheme.
double caputo_derivative(const SampledFunction& f, double p, std::size_t n);
std::vector<double> caputo_series(const SampledFunction& f, double p);

/// Riemann-Liouville derivative, 0 < p < 1, as Caputo plus the
/// f(a)/Gamma(1-p) (t-a)^-p correction. SingularAtOrigin at n = 0.
double rl_derivative(const SampledFunction& f, double p, std::size_t n);

/// Grunwald-Letnikov sum with n terms, 0 < p < 1, n >= 1.
double gl_derivative(const SampledFunction& f, double p, std::size_t n);

/// Hilfer derivative I^gamma1 d/dt I^(1-p-gamma1) f, 0 <= gamma1 <= 1-p.
double hilfer_derivative(const SampledFunction& f, double p, double gamma1, std::size_t n);

}  // namespace fuzzyfrac

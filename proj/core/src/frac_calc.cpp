#include "fuzzyfrac/frac_calc.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "fuzzyfrac/errors.hpp"

namespace fuzzyfrac {

namespace {

constexpr std::size_t kSeriesFrom = 8;

void require_index(const SampledFunction& f, std::size_t n, const char* who) {
    if (n >= f.size()) {
        throw RangeError(std::string(who) + ": index " + std::to_string(n) + " outside sampled range");
    }
}

void require_unit_order(double p, const char* who) {
    if (!(p > 0.0 && p < 1.0)) throw ParameterError(std::string(who) + ": order must lie in (0, 1)");
}

// (k+1)^s - 2 k^s + (k-1)^s, summed as 2 k^s sum_{m even} C(s,m) k^-m for large k.
double second_difference(double k, double s) {
    if (k < kSeriesFrom) return std::pow(k + 1.0, s) - 2.0 * std::pow(k, s) + std::pow(k - 1.0, s);
    const double x = 1.0 / k;
    double binom = 1.0, xm = 1.0, sum = 0.0;
    for (int m = 1; m <= 40; ++m) {
        binom *= (s - m + 1.0) / m;
        xm *= x;
        if (m % 2 == 0) {
            const double term = binom * xm;
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        }
    }
    return 2.0 * std::pow(k, s) * sum;
}

// (n-1)^s - (n-1-q) n^q with s = q + 1.
double first_weight(double n, double q) {
    const double s = q + 1.0;
    if (n < kSeriesFrom) return std::pow(n - 1.0, s) - (n - 1.0 - q) * std::pow(n, q);
    const double x = -1.0 / n;
    double binom = s, xm = x, sum = 0.0;
    for (int m = 2; m <= 40; ++m) {
        binom *= (s - m + 1.0) / m;
        xm *= x;
        const double term = binom * xm;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return std::pow(n, s) * sum;
}

// (k+1)^r - k^r
double first_difference(double k, double r) {
    if (k == 0.0) return 1.0;
    return std::pow(k, r) * std::expm1(r * std::log1p(1.0 / k));
}

}  // namespace

double power_rule_oracle(double beta, double p, double a, double t, OracleKind kind) {
    if (!(t > a)) throw RangeError("power_rule_oracle: t must exceed a");
    if (!(beta > -1.0)) throw DomainError("power_rule_oracle: exponent must exceed -1");
    const double shift = kind == OracleKind::integral ? p : -p;
    return gamma_fn(beta + 1.0) * reciprocal_gamma(beta + shift + 1.0) * std::pow(t - a, beta + shift);
}

double rl_integral(const SampledFunction& f, double p, std::size_t n) {
    require_index(f, n, "rl_integral");
    if (!(p >= 0.0)) throw ParameterError("rl_integral: order must be nonnegative");
    if (p == 0.0) return f[n];
    if (n == 0) return 0.0;
    const double s = p + 1.0;
    double sum = first_weight(static_cast<double>(n), p) * f[0] + f[n];
    for (std::size_t j = 1; j < n; ++j) sum += second_difference(static_cast<double>(n - j), s) * f[j];
    return std::pow(f.h(), p) * reciprocal_gamma(p + 2.0) * sum;
}

std::vector<double> rl_integral_series(const SampledFunction& f, double p) {
    if (!(p >= 0.0)) throw ParameterError("rl_integral: order must be nonnegative");
    const std::size_t m = f.size();
    if (p == 0.0) return {f.values().begin(), f.values().end()};
    const double s = p + 1.0;
    std::vector<double> inner(m, 0.0);
    for (std::size_t k = 1; k < m; ++k) inner[k] = second_difference(static_cast<double>(k), s);
    const double scale = std::pow(f.h(), p) * reciprocal_gamma(p + 2.0);

    std::vector<double> out(m, 0.0);
    for (std::size_t n = 1; n < m; ++n) {
        double sum = first_weight(static_cast<double>(n), p) * f[0] + f[n];
        for (std::size_t j = 1; j < n; ++j) sum += inner[n - j] * f[j];
        out[n] = scale * sum;
    }
    return out;
}

double caputo_derivative(const SampledFunction& f, double p, std::size_t n) {
    require_index(f, n, "caputo_derivative");
    require_unit_order(p, "caputo_derivative");
    const double r = 1.0 - p;
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += first_difference(static_cast<double>(n - j - 1), r) * (f[j + 1] - f[j]);
    return std::pow(f.h(), -p) * reciprocal_gamma(2.0 - p) * sum;
}

std::vector<double> caputo_series(const SampledFunction& f, double p) {
    require_unit_order(p, "caputo_derivative");
    const std::size_t m = f.size();
    const double r = 1.0 - p;
    std::vector<double> b(m), slope(m - 1);
    for (std::size_t k = 0; k < m; ++k) b[k] = first_difference(static_cast<double>(k), r);
    for (std::size_t j = 0; j + 1 < m; ++j) slope[j] = f[j + 1] - f[j];
    const double scale = std::pow(f.h(), -p) * reciprocal_gamma(2.0 - p);

    std::vector<double> out(m, 0.0);
    for (std::size_t n = 1; n < m; ++n) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += b[n - j - 1] * slope[j];
        out[n] = scale * sum;
    }
    return out;
}

double rl_derivative(const SampledFunction& f, double p, std::size_t n) {
    require_index(f, n, "rl_derivative");
    require_unit_order(p, "rl_derivative");
    if (n == 0) throw SingularAtOrigin("rl_derivative: singular at the left end point");
    const double t = static_cast<double>(n) * f.h();
    return caputo_derivative(f, p, n) + f[0] * reciprocal_gamma(1.0 - p) * std::pow(t, -p);
}

double gl_derivative(const SampledFunction& f, double p, std::size_t n) {
    require_index(f, n, "gl_derivative");
    require_unit_order(p, "gl_derivative");
    if (n == 0) throw RangeError("gl_derivative: index must be at least 1");
    double c = 1.0;
    double sum = f[n];
    for (std::size_t k = 1; k <= n; ++k) {
        c *= (static_cast<double>(k) - 1.0 - p) / static_cast<double>(k);
        sum += c * f[n - k];
    }
    return std::pow(f.h(), -p) * sum;
}

double hilfer_derivative(const SampledFunction& f, double p, double gamma1, std::size_t n) {
    require_index(f, n, "hilfer_derivative");
    require_unit_order(p, "hilfer_derivative");
    constexpr double slack = 1e-12;
    if (gamma1 < -slack || gamma1 > 1.0 - p + slack) {
        throw ParameterError("hilfer_derivative: gamma1 must lie in [0, 1 - p]");
    }
    if (n == 0) throw SingularAtOrigin("hilfer_derivative: singular at the left end point");
    gamma1 = std::min(std::max(gamma1, 0.0), 1.0 - p);
    const double inner_order = std::max(0.0, 1.0 - p - gamma1);

    // samples beyond n + 1 do not influence the result
    const std::size_t keep = std::min(f.size(), std::max<std::size_t>(n + 2, 4));
    const std::vector<double> head(f.values().begin(), f.values().begin() + static_cast<std::ptrdiff_t>(keep));
    const std::vector<double> inner = rl_integral_series(SampledFunction(f.a(), f.h(), head), inner_order);
    const std::size_t m = inner.size();
    const double h = f.h();
    if (gamma1 == 0.0) {
        // The inner integral may jump at a (its value there is 0, its right
        // limit need not be), so differences never reach back to index 0.
        if (m < 4) return (inner[m - 1] - inner[1]) / (h * static_cast<double>(m - 2));
        if (n == 1) return (-3.0 * inner[1] + 4.0 * inner[2] - inner[3]) / (2.0 * h);
        if (n + 1 < m) return (inner[n + 1] - inner[n - 1]) / (2.0 * h);
        return (3.0 * inner[n] - 4.0 * inner[n - 1] + inner[n - 2]) / (2.0 * h);
    }
    // Outer integral of the derivative of the piecewise linear interpolant,
    // cell by cell with exact kernel weights. Handles singular slopes at a.
    // With a nonzero inner order the first node is replaced by the right limit.
    const double start = inner_order == 0.0 || m < 3 ? inner[0] : 2.0 * inner[1] - inner[2];
    const double scale = std::pow(h, gamma1 - 1.0) / gamma_fn(gamma1 + 1.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lo = k == 0 ? start : inner[k];
        const double w = std::pow(static_cast<double>(n - k), gamma1) - std::pow(static_cast<double>(n - k - 1), gamma1);
        acc += (inner[k + 1] - lo) * w;
    }
    return acc * scale;
}

}  // namespace fuzzyfrac

#include "fuzzyfrac/fuzzy_frac.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "fuzzyfrac/frac_calc.hpp"
#include "fuzzyfrac/gh_arith.hpp"

namespace fuzzyfrac {

FuzzyFunction::FuzzyFunction(double a, double h, std::vector<FuzzyNumber> values)
    : a_(a), h_(h), values_(std::move(values)) {
    if (!(h_ > 0.0)) throw DomainError("FuzzyFunction: step must be positive");
    if (values_.empty()) throw DomainError("FuzzyFunction: no samples");
    for (const FuzzyNumber& v : values_) {
        if (!(v.grid() == values_.front().grid())) throw GridMismatch("FuzzyFunction: samples on different grids");
    }
}

std::vector<double> FuzzyFunction::lower_curve(std::size_t level) const {
    std::vector<double> out(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) out[k] = values_[k].lower()[level];
    return out;
}

std::vector<double> FuzzyFunction::upper_curve(std::size_t level) const {
    std::vector<double> out(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) out[k] = values_[k].upper()[level];
    return out;
}

const char* to_string(DerivativeForm f) {
    switch (f) {
        case DerivativeForm::form_i: return "i";
        case DerivativeForm::form_ii: return "ii";
        case DerivativeForm::undefined: return "undefined";
    }
    return "unknown";
}

namespace {

double difference(std::span<const double> y, std::size_t k, double h) {
    const std::size_t m = y.size();
    if (m == 2) return (y[1] - y[0]) / h;
    if (k == 0) return (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
    if (k == m - 1) return (3.0 * y[m - 1] - 4.0 * y[m - 2] + y[m - 3]) / (2.0 * h);
    return (y[k + 1] - y[k - 1]) / (2.0 * h);
}

enum class Raw { i, ii, both, neither };

}  // namespace

DerivativeSeries gh_derivative_series(const FuzzyFunction& f) {
    const std::size_t m = f.size();
    if (m < 3) throw DegenerateGrid("gh_derivative_series: at least three time samples required");
    const std::size_t levels = f.grid().size();

    std::vector<std::vector<double>> lower(levels), upper(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        lower[i] = f.lower_curve(i);
        upper[i] = f.upper_curve(i);
    }

    std::vector<Raw> raw(m);
    std::vector<std::vector<double>> d_lower(m, std::vector<double>(levels)), d_upper(m, std::vector<double>(levels));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < levels; ++i) {
            d_lower[k][i] = difference(lower[i], k, f.h());
            d_upper[k][i] = difference(upper[i], k, f.h());
        }
        const bool ok_i = validate_endpoints(d_lower[k], d_upper[k]).is_valid;
        const bool ok_ii = validate_endpoints(d_upper[k], d_lower[k]).is_valid;
        raw[k] = ok_i && ok_ii ? Raw::both : ok_i ? Raw::i : ok_ii ? Raw::ii : Raw::neither;
    }

    std::vector<DerivativeForm> forms(m, DerivativeForm::form_i);
    std::optional<DerivativeForm> previous;
    for (std::size_t k = 0; k < m; ++k) {
        if (raw[k] == Raw::i) forms[k] = DerivativeForm::form_i;
        if (raw[k] == Raw::ii) forms[k] = DerivativeForm::form_ii;
        if (raw[k] == Raw::neither) forms[k] = DerivativeForm::undefined;
        if (raw[k] == Raw::both) {
            std::optional<DerivativeForm> inherited = previous;
            for (std::size_t j = k + 1; !inherited && j < m; ++j) {
                if (raw[j] == Raw::i) inherited = DerivativeForm::form_i;
                if (raw[j] == Raw::ii) inherited = DerivativeForm::form_ii;
            }
            forms[k] = inherited.value_or(DerivativeForm::form_i);
        }
        if (forms[k] != DerivativeForm::undefined) previous = forms[k];
    }

    std::vector<double> switching;
    std::optional<std::size_t> last_decided;
    for (std::size_t k = 0; k < m; ++k) {
        if (forms[k] == DerivativeForm::undefined) continue;
        if (last_decided && forms[*last_decided] != forms[k]) {
            switching.push_back(0.5 * (f.time(*last_decided) + f.time(k)));
        }
        last_decided = k;
    }

    std::vector<FuzzyNumber> values;
    values.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<double> lo(levels), hi(levels);
        for (std::size_t i = 0; i < levels; ++i) {
            const double a = d_lower[k][i], b = d_upper[k][i];
            switch (forms[k]) {
                case DerivativeForm::form_i: lo[i] = a; hi[i] = b; break;
                case DerivativeForm::form_ii: lo[i] = b; hi[i] = a; break;
                case DerivativeForm::undefined: lo[i] = std::min(a, b); hi[i] = std::max(a, b); break;
            }
        }
        if (forms[k] == DerivativeForm::undefined) nested_hull(lo, hi);
        values.push_back(FuzzyNumber::from_endpoints(f.grid(), std::move(lo), std::move(hi)));
    }
    return {FuzzyFunction(f.a(), f.h(), std::move(values)), std::move(forms), std::move(switching)};
}

FuzzyNumber fuzzy_riemann_integral(const FuzzyFunction& f, std::size_t from, std::size_t to) {
    if (from > to || to >= f.size()) throw RangeError("fuzzy_riemann_integral: bad index range");
    const std::size_t levels = f.grid().size();
    std::vector<double> lo(levels, 0.0), hi(levels, 0.0);
    for (std::size_t k = from; k < to; ++k) {
        for (std::size_t i = 0; i < levels; ++i) {
            lo[i] += 0.5 * f.h() * (f[k].lower()[i] + f[k + 1].lower()[i]);
            hi[i] += 0.5 * f.h() * (f[k].upper()[i] + f[k + 1].upper()[i]);
        }
    }
    return FuzzyNumber::from_endpoints(f.grid(), std::move(lo), std::move(hi));
}

FuzzyNumber fuzzy_rl_integral(const FuzzyFunction& f, double q, std::size_t n) {
    if (!(q > 0.0 && q <= 1.0)) throw ParameterError("fuzzy_rl_integral: order must lie in (0, 1]");
    if (n >= f.size() || f.size() < 2) throw RangeError("fuzzy_rl_integral: index outside sampled range");
    const std::size_t levels = f.grid().size();
    std::vector<double> lo(levels), hi(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        lo[i] = rl_integral(SampledFunction(f.a(), f.h(), f.lower_curve(i)), q, n);
        hi[i] = rl_integral(SampledFunction(f.a(), f.h(), f.upper_curve(i)), q, n);
    }
    return FuzzyNumber::from_endpoints(f.grid(), std::move(lo), std::move(hi));
}

FracDerivative fuzzy_frac_derivative(const FuzzyFunction& f, double q, std::size_t n) {
    if (n >= f.size()) throw RangeError("fuzzy_frac_derivative: index outside sampled range");
    const DerivativeSeries series = gh_derivative_series(f);
    for (std::size_t k = 0; k <= n; ++k) {
        if (series.forms[k] == DerivativeForm::undefined) {
            throw SwitchingPointError("fuzzy_frac_derivative: gH derivative undefined at t = " +
                                      std::to_string(f.time(k)));
        }
    }
    for (double s : series.switching_points) {
        if (s <= f.time(n)) {
            throw SwitchingPointError("fuzzy_frac_derivative: switching point at t = " + std::to_string(s));
        }
    }
    const DerivativeForm form = series.forms[n];
    const std::size_t levels = f.grid().size();
    std::vector<double> lo(levels), hi(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        const double cl = caputo_derivative(SampledFunction(f.a(), f.h(), f.lower_curve(i)), q, n);
        const double cu = caputo_derivative(SampledFunction(f.a(), f.h(), f.upper_curve(i)), q, n);
        lo[i] = form == DerivativeForm::form_i ? cl : cu;
        hi[i] = form == DerivativeForm::form_i ? cu : cl;
    }
    return {FuzzyNumber::from_endpoints(f.grid(), std::move(lo), std::move(hi)), form};
}

}  // namespace fuzzyfrac

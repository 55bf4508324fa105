#include "fuzzyfrac/special_functions.hpp"

#include <cmath>
#include <string>

#include "fuzzyfrac/errors.hpp"

namespace fuzzyfrac {

namespace {

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double gamma_fn(double x) {
    if (std::isnan(x)) throw DomainError("gamma_fn: NaN argument");
    if (is_pole(x)) throw PoleError("gamma_fn: pole at " + std::to_string(x));
    return std::tgamma(x);
}

double reciprocal_gamma(double x) {
    if (is_pole(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

double beta_fn(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw DomainError("beta_fn: arguments must be positive");
    return std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q));
}

}  // namespace fuzzyfrac

#include <algorithm>
#include <cmath>
#include <vector>

#include "fuzzyfrac/extension.hpp"

namespace fuzzyfrac {

Envelope envelope(const std::function<double(double)>& phi, const Interval& cut, std::size_t samples) {
    if (samples < 2) throw DomainError("envelope: at least two samples required");
    const double lo = std::min(cut.lo, cut.hi);
    const double hi = std::max(cut.lo, cut.hi);
    double first = phi(lo);
    Envelope env{first, first};
    if (hi == lo) return env;
    const double step = (hi - lo) / static_cast<double>(samples - 1);
    for (std::size_t k = 1; k < samples; ++k) {
        const double x = k + 1 == samples ? hi : lo + static_cast<double>(k) * step;
        const double y = phi(x);
        env.min = std::min(env.min, y);
        env.max = std::max(env.max, y);
    }
    return env;
}

FuzzyNumber zadeh_extend(const std::function<double(double)>& phi, const FuzzyNumber& u,
                         std::size_t samples_per_cut, double repair_tolerance) {
    const std::size_t n = u.size();
    std::vector<double> lower(n), upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Envelope e = envelope(phi, u.cut(i), samples_per_cut);
        lower[i] = e.min;
        upper[i] = e.max;
    }

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max({scale, std::abs(lower[i]), std::abs(upper[i])});
    if (repair_tolerance < 0.0) repair_tolerance = 1e-3 * (1.0 + scale);

    double worst = 0.0;
    for (std::size_t i = n - 1; i-- > 0;) {
        const double lo = std::min(lower[i], lower[i + 1]);
        const double hi = std::max(upper[i], upper[i + 1]);
        worst = std::max({worst, lower[i] - lo, hi - upper[i]});
        lower[i] = lo;
        upper[i] = hi;
    }
    if (worst > repair_tolerance) {
        throw InvalidResult("zadeh_extend: envelope sampling too coarse (nesting repair of " +
                            std::to_string(worst) + ")");
    }
    return FuzzyNumber::from_endpoints(u.grid(), std::move(lower), std::move(upper));
}

bool convexity_check(const SampledFunction& membership) {
    const auto mu = membership.values();
    const std::size_t n = mu.size();
    std::vector<double> prefix(n), suffix(n);
    prefix[0] = mu[0];
    for (std::size_t i = 1; i < n; ++i) prefix[i] = std::max(prefix[i - 1], mu[i]);
    suffix[n - 1] = mu[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) suffix[i] = std::max(suffix[i + 1], mu[i]);
    constexpr double tol = 1e-12;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        // a valley: both sides rise above mu[j]
        if (mu[j] < std::min(prefix[j - 1], suffix[j + 1]) - tol) return false;
    }
    return true;
}

}  // namespace fuzzyfrac

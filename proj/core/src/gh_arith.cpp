#include "fuzzyfrac/gh_arith.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "fuzzyfrac/isotonic.hpp"

namespace fuzzyfrac {

const char* to_string(GhCase c) {
    switch (c) {
        case GhCase::case_i: return "i";
        case GhCase::case_ii: return "ii";
        case GhCase::both: return "both";
    }
    return "unknown";
}

const char* to_string(NotExistsReason r) {
    switch (r) {
        case NotExistsReason::mixed_cases: return "mixed_cases";
        case NotExistsReason::lower_not_monotone: return "lower_not_monotone";
        case NotExistsReason::upper_not_monotone: return "upper_not_monotone";
        case NotExistsReason::crossing: return "crossing";
    }
    return "unknown";
}

IntervalResult gh_diff(const Interval& a, const Interval& b) {
    const double d_lower = a.lo - b.lo;
    const double d_upper = a.hi - b.hi;
    const double la = a.length(), lb = b.length();
    const GhCase c = la > lb ? GhCase::case_i : (la < lb ? GhCase::case_ii : GhCase::both);
    return {hull(d_lower, d_upper), c};
}

Outcome<BoxResult> gh_diff(const Box& a, const Box& b) {
    if (a.size() != b.size() || a.empty()) throw DimensionMismatch("gh_diff: boxes differ in dimension");
    BoxResult out;
    out.value.reserve(a.size());
    bool any_i = false, any_ii = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const IntervalResult r = gh_diff(a[k], b[k]);
        out.value.push_back(r.value);
        any_i = any_i || r.gh_case == GhCase::case_i;
        any_ii = any_ii || r.gh_case == GhCase::case_ii;
        if (any_i && any_ii) return NotExists{NotExistsReason::mixed_cases, k};
    }
    out.gh_case = any_i ? GhCase::case_i : (any_ii ? GhCase::case_ii : GhCase::both);
    return out;
}

namespace {

double pair_tolerance(const FuzzyNumber& u, const FuzzyNumber& v) {
    return std::max(validity_tolerance(u.lower(), u.upper()), validity_tolerance(v.lower(), v.upper()));
}

// First index where `seq` fails to be nondecreasing (sign = +1) or
// nonincreasing (sign = -1) by more than tol.
std::optional<std::size_t> monotonicity_break(std::span<const double> seq, int sign, double tol) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (sign * (seq[i] - seq[i - 1]) < -tol) return i;
    }
    return std::nullopt;
}

GhCase level_case(double len_u, double len_v, double tol) {
    if (std::abs(len_u - len_v) <= tol) return GhCase::both;
    return len_u > len_v ? GhCase::case_i : GhCase::case_ii;
}

}  // namespace

Outcome<FuzzyResult> gh_diff(const FuzzyNumber& u, const FuzzyNumber& v) {
    require_same_grid(u, v);
    const std::size_t n = u.size();
    const double tol = pair_tolerance(u, v);

    std::vector<double> d_lower(n), d_upper(n);
    std::vector<GhCase> cases(n);
    bool case_a = true, case_b = true;
    std::optional<std::size_t> mixed_at;
    bool seen_i = false, seen_ii = false;
    for (std::size_t i = 0; i < n; ++i) {
        d_lower[i] = u.lower()[i] - v.lower()[i];
        d_upper[i] = u.upper()[i] - v.upper()[i];
        cases[i] = level_case(u.cut(i).length(), v.cut(i).length(), tol);
        case_a = case_a && d_lower[i] <= d_upper[i] + tol;
        case_b = case_b && d_lower[i] >= d_upper[i] - tol;
        seen_i = seen_i || cases[i] == GhCase::case_i;
        seen_ii = seen_ii || cases[i] == GhCase::case_ii;
        if (seen_i && seen_ii && !mixed_at) mixed_at = i;
    }
    if (!case_a && !case_b) return NotExists{NotExistsReason::mixed_cases, mixed_at.value_or(0)};

    // Branch (a): [u- - v-, u+ - v+] with u- - v- up, u+ - v+ down.
    // Branch (b): [u+ - v+, u- - v-] with u+ - v+ up, u- - v- down.
    auto check = [&](bool branch_a) -> std::optional<NotExists> {
        const int lower_sign = branch_a ? +1 : -1;
        if (auto i = monotonicity_break(d_lower, lower_sign, tol)) {
            return NotExists{NotExistsReason::lower_not_monotone, *i};
        }
        if (auto i = monotonicity_break(d_upper, -lower_sign, tol)) {
            return NotExists{NotExistsReason::upper_not_monotone, *i};
        }
        return std::nullopt;
    };

    std::optional<NotExists> failure;
    bool ok = false;
    if (case_a) {
        failure = check(true);
        ok = !failure;
    }
    if (!ok && case_b) {
        auto fb = check(false);
        if (!fb) {
            ok = true;
        } else if (!failure) {
            failure = fb;
        }
    }
    if (!ok) return *failure;

    std::vector<double> lower(n), upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        lower[i] = std::min(d_lower[i], d_upper[i]);
        upper[i] = std::max(d_lower[i], d_upper[i]);
    }
    enforce_nesting(lower, upper);
    const GhCase summary = case_a && case_b ? GhCase::both : (case_a ? GhCase::case_i : GhCase::case_ii);
    return FuzzyResult{FuzzyNumber::from_endpoints(u.grid(), std::move(lower), std::move(upper)), summary,
                       std::move(cases)};
}

void nested_hull(std::span<double> lower, std::span<double> upper) {
    for (std::size_t k = lower.size() - 1; k-- > 0;) {
        lower[k] = std::min(lower[k + 1], lower[k]);
        upper[k] = std::max(upper[k + 1], upper[k]);
    }
}

FuzzyNumber approx_gh_diff(const FuzzyNumber& u, const FuzzyNumber& v) {
    require_same_grid(u, v);
    const std::size_t n = u.size();
    std::vector<double> lower(n), upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Interval w = gh_diff(u.cut(i), v.cut(i)).value;
        lower[i] = w.lo;
        upper[i] = w.hi;
    }
    nested_hull(lower, upper);
    return FuzzyNumber::from_endpoints(u.grid(), std::move(lower), std::move(upper));
}

FuzzyNumber lsq_gh_diff(const FuzzyNumber& u, const FuzzyNumber& v, std::span<const double> lower_weights,
                        std::span<const double> upper_weights) {
    require_same_grid(u, v);
    const std::size_t n = u.size();
    auto weight_at = [n](std::span<const double> w, std::size_t i) {
        if (w.empty()) return 1.0;
        if (w.size() != n) throw DomainError("lsq_gh_diff: one weight per alpha level required");
        return w[i];
    };

    // Chain (z_0^-, ..., z_N^-, z_N^+, ..., z_0^+) must be nondecreasing.
    std::vector<double> target(2 * n), weights(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Interval w = gh_diff(u.cut(i), v.cut(i)).value;
        target[i] = w.lo;
        weights[i] = weight_at(lower_weights, i);
        target[2 * n - 1 - i] = w.hi;
        weights[2 * n - 1 - i] = weight_at(upper_weights, i);
    }
    for (double w : weights) {
        if (!(w > 0.0)) throw NonpositiveWeight("lsq_gh_diff: weights must be strictly positive");
    }
    const std::vector<double> fit = isotonic_regression(target, weights);

    std::vector<double> lower(n), upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        lower[i] = fit[i];
        upper[i] = fit[2 * n - 1 - i];
    }
    return FuzzyNumber::from_endpoints(u.grid(), std::move(lower), std::move(upper));
}

}  // namespace fuzzyfrac

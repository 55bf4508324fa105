#include "fuzzyfrac/cps.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzyfrac {

CpsTriple cps_decompose(const FuzzyNumber& u) {
    const Interval core = u.core();
    const double core_mid = core.midpoint();
    const double core_half = core.half_width();
    CpsTriple t{core, std::vector<double>(u.size()), std::vector<double>(u.size())};
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Interval c = u.cut(i);
        t.profile[i] = c.midpoint() - core_mid;
        t.symmetric[i] = c.half_width() - core_half;
    }
    t.profile.back() = 0.0;
    t.symmetric.back() = 0.0;
    return t;
}

FuzzyNumber cps_compose(const CpsTriple& t, const AlphaGrid& grid) {
    if (t.profile.size() != grid.size() || t.symmetric.size() != grid.size()) {
        throw GridMismatch("cps_compose: component length does not match grid");
    }
    const std::size_t n = grid.size();
    std::vector<double> down(n), up(n);
    for (std::size_t i = 0; i < n; ++i) {
        down[i] = t.profile[i] - t.symmetric[i];
        up[i] = t.profile[i] + t.symmetric[i];
    }
    const double tol = validity_tolerance(down, up) + 1e-9 * std::max(std::abs(t.crisp.lo), std::abs(t.crisp.hi));
    for (std::size_t i = 1; i < n; ++i) {
        if (down[i] < down[i - 1] - tol || up[i] > up[i - 1] + tol) {
            throw InvalidPair("cps_compose: profile/symmetric pair is not valid at level " + std::to_string(i));
        }
    }
    if (!t.crisp.valid()) throw InvalidPair("cps_compose: crisp part is not an interval");

    std::vector<double> lower(n), upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        lower[i] = t.crisp.lo + down[i];
        upper[i] = t.crisp.hi + up[i];
    }
    enforce_nesting(lower, upper);
    return FuzzyNumber::from_endpoints(grid, std::move(lower), std::move(upper));
}

namespace {

bool is_zero_symmetric(std::span<const double> s, double tol) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < -tol) return false;
        if (i > 0 && s[i] > s[i - 1] + tol) return false;
    }
    return true;
}

bool valid_pair(std::span<const double> p, std::span<const double> s, double tol) {
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] - s[i] < p[i - 1] - s[i - 1] - tol) return false;
        if (p[i] + s[i] > p[i - 1] + s[i - 1] + tol) return false;
    }
    return true;
}

}  // namespace

Outcome<FuzzyResult> gh_diff_cps(const FuzzyNumber& u, const FuzzyNumber& v) {
    require_same_grid(u, v);
    const CpsTriple a = cps_decompose(u);
    const CpsTriple b = cps_decompose(v);
    const std::size_t n = u.size();
    const double tol = std::max(validity_tolerance(u.lower(), u.upper()), validity_tolerance(v.lower(), v.upper()));

    const IntervalResult crisp = gh_diff(a.crisp, b.crisp);
    std::vector<double> profile(n), sym_i(n), sym_ii(n);
    for (std::size_t i = 0; i < n; ++i) {
        profile[i] = a.profile[i] - b.profile[i];
        sym_i[i] = a.symmetric[i] - b.symmetric[i];
        sym_ii[i] = -sym_i[i];
    }
    const bool crisp_i = crisp.gh_case != GhCase::case_ii;
    const bool crisp_ii = crisp.gh_case != GhCase::case_i;
    const bool cond_1 = crisp_i && is_zero_symmetric(sym_i, tol) && valid_pair(profile, sym_i, tol);
    const bool cond_2 = crisp_ii && is_zero_symmetric(sym_ii, tol) && valid_pair(profile, sym_ii, tol);
    if (!cond_1 && !cond_2) {
        // Same reason codes as the endpoint route.
        const Outcome<FuzzyResult> direct = gh_diff(u, v);
        if (!exists(direct)) return direct;
        return NotExists{NotExistsReason::mixed_cases, 0};
    }

    CpsTriple w{crisp.value, profile, cond_1 ? sym_i : sym_ii};
    for (double& s : w.symmetric) s = std::max(s, 0.0);
    FuzzyNumber value = cps_compose(w, u.grid());

    GhCase tag = cond_1 && cond_2 ? GhCase::both : (cond_1 ? GhCase::case_i : GhCase::case_ii);
    std::vector<GhCase> cases(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double du = u.cut(i).length(), dv = v.cut(i).length();
        cases[i] = std::abs(du - dv) <= tol ? GhCase::both : (du > dv ? GhCase::case_i : GhCase::case_ii);
    }
    return FuzzyResult{std::move(value), tag, std::move(cases)};
}

}  // namespace fuzzyfrac

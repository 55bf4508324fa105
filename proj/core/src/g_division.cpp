#include <algorithm>
#include <cmath>

#include "fuzzyfrac/gh_arith.hpp"

namespace fuzzyfrac {

namespace {

enum class Sign { positive, negative, straddles };

Sign sign_of(const Interval& a) {
    if (a.lo > 0.0) return Sign::positive;
    if (a.hi < 0.0) return Sign::negative;
    return Sign::straddles;
}

void require_divisor(const Interval& b) {
    const double delta = 1e-12 * (1.0 + std::max(std::abs(b.lo), std::abs(b.hi)));
    if (b.lo <= delta && b.hi >= -delta) {
        throw DomainError("g_div: divisor interval contains or approaches zero");
    }
}

GhCase singleton_or(const Interval& c, GhCase fallback) {
    return c.lo == c.hi && c.lo != 0.0 ? GhCase::both : fallback;
}

}  // namespace

IntervalResult g_div(const Interval& a, const Interval& b) {
    require_divisor(b);
    const double al = a.lo, ah = a.hi, bl = b.lo, bh = b.hi;
    Interval c;
    GhCase k = GhCase::case_i;
    const bool b_positive = bl > 0.0;
    switch (sign_of(a)) {
        case Sign::positive:
            if (!b_positive) {
                if (al * bl >= ah * bh) {
                    c = {ah / bl, al / bh};
                } else {
                    c = {al / bh, ah / bl};
                    k = GhCase::case_ii;
                }
            } else {
                if (al * bh <= ah * bl) {
                    c = {al / bl, ah / bh};
                } else {
                    c = {ah / bh, al / bl};
                    k = GhCase::case_ii;
                }
            }
            break;
        case Sign::negative:
            if (!b_positive) {
                if (ah * bl <= al * bh) {
                    c = {ah / bh, al / bl};
                } else {
                    c = {al / bl, ah / bh};
                    k = GhCase::case_ii;
                }
            } else {
                if (al * bl <= ah * bh) {
                    c = {al / bh, ah / bl};
                } else {
                    c = {ah / bl, al / bh};
                    k = GhCase::case_ii;
                }
            }
            break;
        case Sign::straddles:
            c = b_positive ? Interval{al / bh, ah / bh} : Interval{ah / bl, al / bl};
            break;
    }
    return {c, singleton_or(c, k)};
}

namespace {

struct LevelQuotients {
    std::vector<double> lower, upper;
    std::vector<GhCase> cases;
};

LevelQuotients levelwise_quotients(const FuzzyNumber& u, const FuzzyNumber& v) {
    require_same_grid(u, v);
    const std::size_t n = u.size();
    LevelQuotients q{std::vector<double>(n), std::vector<double>(n), std::vector<GhCase>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const IntervalResult r = g_div(u.cut(i), v.cut(i));
        q.lower[i] = r.value.lo;
        q.upper[i] = r.value.hi;
        q.cases[i] = r.gh_case;
    }
    return q;
}

NotExistsReason reason_of(ViolationKind k) {
    switch (k) {
        case ViolationKind::crossing: return NotExistsReason::crossing;
        case ViolationKind::lower_not_monotone: return NotExistsReason::lower_not_monotone;
        case ViolationKind::upper_not_monotone: return NotExistsReason::upper_not_monotone;
    }
    return NotExistsReason::crossing;
}

}  // namespace

Outcome<FuzzyResult> g_div(const FuzzyNumber& u, const FuzzyNumber& v) {
    LevelQuotients q = levelwise_quotients(u, v);
    const ValidityReport report = validate_endpoints(q.lower, q.upper);
    if (!report.is_valid) {
        // crossing first, then lower, then upper
        for (ViolationKind kind : {ViolationKind::crossing, ViolationKind::lower_not_monotone,
                                   ViolationKind::upper_not_monotone}) {
            for (const Violation& viol : report.violations) {
                if (viol.kind == kind) return NotExists{reason_of(kind), viol.index};
            }
        }
    }
    enforce_nesting(q.lower, q.upper);

    GhCase summary = q.cases.front();
    bool seen_i = false, seen_ii = false;
    for (GhCase c : q.cases) {
        seen_i = seen_i || c == GhCase::case_i;
        seen_ii = seen_ii || c == GhCase::case_ii;
    }
    if (seen_i && !seen_ii) summary = GhCase::case_i;
    if (seen_ii && !seen_i) summary = GhCase::case_ii;
    if (!seen_i && !seen_ii) summary = GhCase::both;
    return FuzzyResult{FuzzyNumber::from_endpoints(u.grid(), std::move(q.lower), std::move(q.upper)), summary,
                       std::move(q.cases)};
}

FuzzyNumber approx_g_div(const FuzzyNumber& u, const FuzzyNumber& v) {
    LevelQuotients q = levelwise_quotients(u, v);
    nested_hull(q.lower, q.upper);
    return FuzzyNumber::from_endpoints(u.grid(), std::move(q.lower), std::move(q.upper));
}

}  // namespace fuzzyfrac

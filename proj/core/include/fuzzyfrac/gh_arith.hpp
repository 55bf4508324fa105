#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "fuzzyfrac/fuzzy_number.hpp"
#include "fuzzyfrac/interval.hpp"

namespace fuzzyfrac {

/// Which defining identity a generalized difference/quotient satisfies.
/// For C = A -g B: (i) A = B + C, (ii) B = A + (-1)C.
/// For C = A /g B: (i) A = B C,   (ii) B = A C^-1.
/// `both` only when C is a singleton.
enum class GhCase { case_i, case_ii, both };

enum class NotExistsReason { mixed_cases, lower_not_monotone, upper_not_monotone, crossing };

const char* to_string(GhCase c);
const char* to_string(NotExistsReason r);

/// The generalized difference/quotient does not define a fuzzy number.
/// `index` is the first offending level (or box component).
struct NotExists {
    NotExistsReason reason = NotExistsReason::mixed_cases;
    std::size_t index = 0;
};

template <class T>
using Outcome = std::variant<T, NotExists>;

template <class T>
bool exists(const Outcome<T>& o) { return std::holds_alternative<T>(o); }

struct IntervalResult {
    Interval value;
    GhCase gh_case = GhCase::case_i;
};

struct BoxResult {
    Box value;
    GhCase gh_case = GhCase::case_i;
};

struct FuzzyResult {
    FuzzyNumber value;
    GhCase gh_case = GhCase::case_i;
    /// Case selected at every alpha level.
    std::vector<GhCase> level_cases;
};

// ---- gH difference --------------------------------------------------------

/// [min{a- - b-, a+ - b+}, max{...}]; always exists.
IntervalResult gh_diff(const Interval& a, const Interval& b);

/// Componentwise difference; exists iff every component agrees on case (i)
/// or every component agrees on case (ii).
Outcome<BoxResult> gh_diff(const Box& a, const Box& b);

/// Levelwise difference of fuzzy numbers. Exists iff, uniformly in alpha,
/// either len[u] >= len[v] with u- - v- nondecreasing and u+ - v+
/// nonincreasing, or len[u] <= len[v] with the opposite monotonicity.
/// NotExists reasons name the difference curve that breaks monotonicity:
/// `lower` is u- - v-, `upper` is u+ - v+.
Outcome<FuzzyResult> gh_diff(const FuzzyNumber& u, const FuzzyNumber& v);

/// Backward nested-union iteration on raw level intervals:
/// z_N = w_N, z_k = [min(z_{k+1}^-, w_k^-), max(z_{k+1}^+, w_k^+)].
void nested_hull(std::span<double> lower, std::span<double> upper);

/// cl( union_{b >= a} [u]_b -g [v]_b ); exists for every pair.
FuzzyNumber approx_gh_diff(const FuzzyNumber& u, const FuzzyNumber& v);

/// Fuzzy number whose cuts are closest, in weighted least squares, to the
/// levelwise gH differences: minimizes
///   sum_i lower_weights[i] (z_i^- - w_i^-)^2 + upper_weights[i] (z_i^+ - w_i^+)^2
/// subject to z_0^- <= ... <= z_N^- <= z_N^+ <= ... <= z_0^+.
/// Empty weight spans mean all ones.
FuzzyNumber lsq_gh_diff(const FuzzyNumber& u, const FuzzyNumber& v,
                        std::span<const double> lower_weights = {},
                        std::span<const double> upper_weights = {});

// ---- generalized division -------------------------------------------------

/// Six-case sign rule. Throws DomainError when 0 is within
/// 1e-12 (1 + max |b|) of the divisor.
IntervalResult g_div(const Interval& a, const Interval& b);

/// Levelwise g-division. Exists iff the quotient cuts are nested. The
/// summary case is the common case of all levels; when levels disagree
/// the support level's case is reported (see level_cases for detail).
Outcome<FuzzyResult> g_div(const FuzzyNumber& u, const FuzzyNumber& v);

/// cl( union_{b >= a} [u]_b /g [v]_b ); exists whenever 0 is outside every cut of v.
FuzzyNumber approx_g_div(const FuzzyNumber& u, const FuzzyNumber& v);

}  // namespace fuzzyfrac

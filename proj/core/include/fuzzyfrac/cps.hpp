#pragma once

#include <vector>

#include "fuzzyfrac/fuzzy_number.hpp"
#include "fuzzyfrac/gh_arith.hpp"

namespace fuzzyfrac {

/// Crisp / profile / symmetric decomposition of a fuzzy number:
///   u^-_a = crisp.lo + profile[a] - symmetric[a]
///   u^+_a = crisp.hi + profile[a] + symmetric[a]
/// with profile and symmetric vanishing at the top level.
struct CpsTriple {
    Interval crisp;
    std::vector<double> profile;
    std::vector<double> symmetric;
};

CpsTriple cps_decompose(const FuzzyNumber& u);

/// Throws InvalidPair when profile - symmetric is not nondecreasing or
/// profile + symmetric is not nonincreasing (beyond tolerance).
FuzzyNumber cps_compose(const CpsTriple& t, const AlphaGrid& grid);

/// gH difference computed on the CPS components: crisp parts by the
/// interval rule, profiles subtracted, symmetric parts subtracted in
/// whichever order stays a 0-symmetric fuzzy number.
Outcome<FuzzyResult> gh_diff_cps(const FuzzyNumber& u, const FuzzyNumber& v);

}  // namespace fuzzyfrac

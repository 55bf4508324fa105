#pragma once

#include <span>
#include <vector>

namespace fuzzyfrac {

/// Weighted least-squares fit of a nondecreasing sequence to `y`
/// (pool-adjacent-violators). Weights must be strictly positive.
std::vector<double> isotonic_regression(std::span<const double> y, std::span<const double> weights);

}  // namespace fuzzyfrac

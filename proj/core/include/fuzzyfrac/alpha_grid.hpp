#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fuzzyfrac {

/// Partition 0 = a_0 < a_1 < ... < a_N = 1 of the membership axis.
class AlphaGrid {
public:
    /// Uniform grid with `intervals` steps (intervals + 1 levels).
    static AlphaGrid uniform(std::size_t intervals = 100);

    /// Arbitrary partition; throws DomainError when the invariants fail.
    explicit AlphaGrid(std::vector<double> levels);

    std::span<const double> levels() const { return levels_; }
    std::size_t size() const { return levels_.size(); }
    double operator[](std::size_t i) const { return levels_[i]; }
    std::size_t top() const { return levels_.size() - 1; }

    /// Index i with levels[i] <= alpha <= levels[i+1]; the last bracket
    /// is returned for alpha == 1.
    std::size_t bracket(double alpha) const;

    friend bool operator==(const AlphaGrid&, const AlphaGrid&) = default;

private:
    std::vector<double> levels_;
};

}  // namespace fuzzyfrac

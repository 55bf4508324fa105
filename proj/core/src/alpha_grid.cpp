#include "fuzzyfrac/alpha_grid.hpp"

#include <algorithm>
#include <string>

#include "fuzzyfrac/errors.hpp"

namespace fuzzyfrac {

AlphaGrid AlphaGrid::uniform(std::size_t intervals) {
    if (intervals < 1) throw DomainError("AlphaGrid::uniform: need at least one interval");
    std::vector<double> levels(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        levels[i] = static_cast<double>(i) / static_cast<double>(intervals);
    }
    levels.back() = 1.0;
    return AlphaGrid(std::move(levels));
}

AlphaGrid::AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) throw DomainError("AlphaGrid: at least two levels required");
    if (levels_.front() != 0.0 || levels_.back() != 1.0) {
        throw DomainError("AlphaGrid: levels must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        if (!(levels_[i] > levels_[i - 1])) {
            throw DomainError("AlphaGrid: levels not strictly increasing at index " + std::to_string(i));
        }
    }
}

std::size_t AlphaGrid::bracket(double alpha) const {
    auto it = std::upper_bound(levels_.begin(), levels_.end(), alpha);
    std::size_t i = it == levels_.begin() ? 0 : static_cast<std::size_t>(it - levels_.begin()) - 1;
    return std::min(i, levels_.size() - 2);
}

}  // namespace fuzzyfrac

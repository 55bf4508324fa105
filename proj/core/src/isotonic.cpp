#include "fuzzyfrac/isotonic.hpp"

#include <cstddef>

#include "fuzzyfrac/errors.hpp"

namespace fuzzyfrac {

std::vector<double> isotonic_regression(std::span<const double> y, std::span<const double> weights) {
    if (y.size() != weights.size()) throw DomainError("isotonic_regression: size mismatch");

    struct Block {
        double mean;
        double weight;
        std::size_t count;
    };
    std::vector<Block> stack;
    stack.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(weights[i] > 0.0)) throw NonpositiveWeight("isotonic_regression: weights must be positive");
        stack.push_back({y[i], weights[i], 1});
        while (stack.size() > 1 && stack[stack.size() - 2].mean > stack.back().mean) {
            const Block top = stack.back();
            stack.pop_back();
            Block& prev = stack.back();
            const double w = prev.weight + top.weight;
            prev.mean = (prev.mean * prev.weight + top.mean * top.weight) / w;
            prev.weight = w;
            prev.count += top.count;
        }
    }

    std::vector<double> fit;
    fit.reserve(y.size());
    for (const Block& b : stack) fit.insert(fit.end(), b.count, b.mean);
    return fit;
}

}  // namespace fuzzyfrac

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fuzzyfrac/errors.hpp"

namespace fuzzyfrac {

/// Real function sampled on the uniform grid a + k h, k = 0..M.
class SampledFunction {
public:
    SampledFunction(double a, double h, std::vector<double> values) : a_(a), h_(h), values_(std::move(values)) {
        if (!(h_ > 0.0)) throw DomainError("SampledFunction: step must be positive");
        if (values_.size() < 2) throw DomainError("SampledFunction: at least two samples required");
    }

    /// Samples f at a + k h for k = 0..steps.
    static SampledFunction sample(const std::function<double(double)>& f, double a, double b, std::size_t steps) {
        if (steps < 1 || !(b > a)) throw DomainError("SampledFunction::sample: empty range");
        const double h = (b - a) / static_cast<double>(steps);
        std::vector<double> values(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k) values[k] = f(a + static_cast<double>(k) * h);
        return SampledFunction(a, h, std::move(values));
    }

    double a() const { return a_; }
    double h() const { return h_; }
    std::size_t size() const { return values_.size(); }
    std::size_t last() const { return values_.size() - 1; }
    double abscissa(std::size_t k) const { return a_ + static_cast<double>(k) * h_; }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const { return values_; }

private:
    double a_;
    double h_;
    std::vector<double> values_;
};

}  // namespace fuzzyfrac

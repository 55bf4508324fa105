#pragma once

#include <cstddef>
#include <functional>

#include "fuzzyfrac/fuzzy_number.hpp"
#include "fuzzyfrac/sampled_function.hpp"

namespace fuzzyfrac {

inline constexpr std::size_t kDefaultEnvelopeSamples = 65;

struct Envelope {
    double min = 0.0;
    double max = 0.0;
};

/// min / max of phi over `samples` equispaced points of [cut.lo, cut.hi],
/// both end points included. Exact for monotone phi.
Envelope envelope(const std::function<double(double)>& phi, const Interval& cut,
                  std::size_t samples = kDefaultEnvelopeSamples);

/// Levelwise Zadeh extension: [phi(u)]_a = [min phi, max phi] over [u]_a.
///
/// The per-level envelopes are estimated by sampling, so wider cuts may
/// miss an extremum that a narrower cut hits. Nesting is restored by a
/// backward running min/max; if that moves any endpoint by more than
/// `repair_tolerance` (default 1e-3 (1 + max |endpoint|)) the sampling is
/// too coarse for phi and InvalidResult is thrown.
FuzzyNumber zadeh_extend(const std::function<double(double)>& phi, const FuzzyNumber& u,
                         std::size_t samples_per_cut = kDefaultEnvelopeSamples,
                         double repair_tolerance = -1.0);

/// Quasi-concavity of a sampled membership function: every super-level
/// set of the samples is a contiguous index range.
bool convexity_check(const SampledFunction& membership);

}  // namespace fuzzyfrac

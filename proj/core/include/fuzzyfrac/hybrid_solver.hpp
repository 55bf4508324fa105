#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fuzzyfrac/extension.hpp"
#include "fuzzyfrac/fuzzy_number.hpp"
#include "fuzzyfrac/gh_arith.hpp"

namespace fuzzyfrac {

using ScalarField = std::function<double(double t, double x)>;

/// d/dt [ u / f(t, u) ] = g(t, u),  u(0) = u0,  t in [0, horizon].
struct HybridProblem {
    ScalarField f;
    ScalarField g;
    FuzzyNumber u0 = FuzzyNumber::crisp(0.0);
    double horizon = 1.0;
    std::size_t steps = 200;
    std::size_t envelope_samples = kDefaultEnvelopeSamples;
};

struct PicardOptions {
    double tolerance = 1e-10;
    std::size_t max_sweeps = 200;
    /// consecutive sweeps with growing change before NonContraction
    std::size_t growth_limit = 5;
};

/// Margin below which |f| counts as zero.
inline constexpr double kDivisorMargin = 1e-9;

struct LevelSolution {
    double alpha = 0.0;
    Interval initial;
    std::vector<double> times;
    std::vector<double> u1;
    std::vector<double> u2;
    /// Case of u0 /g f(0, u0) that selected the endpoint pairing.
    GhCase pairing = GhCase::case_i;
    std::size_t iterations = 0;
    bool converged = false;
    /// u1 <= u2 at every time.
    bool ordered = true;
    double residual = 0.0;
};

struct SolutionBundle {
    std::vector<double> times;
    std::vector<LevelSolution> levels;
    /// Per time: stacking check of the assembled cuts.
    std::vector<ValidityReport> diagnostics;
    /// Per time: no jump between adjacent levels beyond the neighbour bound.
    std::vector<bool> left_continuous;
    bool stacking_valid = true;

    /// Cuts at time index k as a fuzzy number (after tolerance clamping);
    /// throws ValidationError when the cuts do not stack.
    FuzzyNumber at(std::size_t k, const AlphaGrid& grid) const;
};

/// Picard iteration for one level. The initial cut is [u0]_alpha
/// (interpolated between grid levels).
LevelSolution picard_solve_level(const HybridProblem& p, double alpha, const PicardOptions& options = {});

/// Same, starting from an explicit initial interval.
LevelSolution picard_solve_level(const HybridProblem& p, double alpha, const Interval& initial,
                                 const PicardOptions& options = {});

/// Solves every level of u0's grid and validates the assembled cuts.
SolutionBundle solve(const HybridProblem& p, const PicardOptions& options = {});

/// Sup over the knots of |u - f_env (u0 /g f_env(0) + int g_env)| with the
/// integral recomputed on the doubled grid and Richardson-extrapolated.
double residual(const HybridProblem& p, const LevelSolution& s);

}  // namespace fuzzyfrac

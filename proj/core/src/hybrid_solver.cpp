#include "fuzzyfrac/hybrid_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <tuple>

namespace fuzzyfrac {

namespace {

struct Seed {
    Interval f0;
    Interval z0;
    GhCase pairing = GhCase::case_i;
    // Case (ii): which f / bracket endpoints produce u1 and u2 (0 = lo, 1 = hi).
    std::array<int, 2> u1_from{0, 0};
    std::array<int, 2> u2_from{1, 1};
    int bracket_sign = 0;
};

double endpoint(const Interval& x, int which) { return which == 0 ? x.lo : x.hi; }

int strict_sign(const Interval& x, double margin) {
    if (x.lo > margin) return 1;
    if (x.hi < -margin) return -1;
    return 0;
}

Interval envelope_at(const ScalarField& phi, double t, double a, double b, std::size_t samples) {
    const Envelope e = envelope([&](double x) { return phi(t, x); }, hull(a, b), samples);
    return {e.min, e.max};
}

Interval checked_f(const HybridProblem& p, double t, double a, double b) {
    const Interval f = envelope_at(p.f, t, a, b, p.envelope_samples);
    if (strict_sign(f, kDivisorMargin) == 0) {
        throw DomainViolation("hybrid solver: f vanishes (or changes sign) near t = " + std::to_string(t));
    }
    return f;
}

Seed make_seed(const HybridProblem& p, const Interval& initial) {
    Seed s;
    s.f0 = checked_f(p, 0.0, initial.lo, initial.hi);
    try {
        const IntervalResult q = g_div(initial, s.f0);
        s.z0 = q.value;
        s.pairing = q.gh_case == GhCase::case_ii ? GhCase::case_ii : GhCase::case_i;
    } catch (const DomainError& e) {
        throw DomainViolation(std::string("hybrid solver: ") + e.what());
    }
    s.bracket_sign = strict_sign(s.z0, 0.0);
    if (s.pairing == GhCase::case_ii) {
        // Pick the crossed pairing that reproduces the initial cut.
        double best = INFINITY;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const double lo = endpoint(s.f0, a) * endpoint(s.z0, b);
                const double hi = endpoint(s.f0, 1 - a) * endpoint(s.z0, 1 - b);
                const double err = std::abs(lo - initial.lo) + std::abs(hi - initial.hi);
                if (err < best) {
                    best = err;
                    s.u1_from = {a, b};
                    s.u2_from = {1 - a, 1 - b};
                }
            }
        }
    }
    return s;
}

// Endpoints of f (z0 + [I1, I2]) under the seed's pairing.
std::pair<double, double> combine(const Seed& s, const Interval& f, double i1, double i2, double t) {
    const Interval bracket{s.z0.lo + i1, s.z0.hi + i2};
    const Interval span = hull(bracket.lo, bracket.hi);
    if (s.pairing == GhCase::case_ii) {
        if (strict_sign(span, kDivisorMargin) == 0) {
            throw DomainViolation("hybrid solver: bracket reaches zero under case (ii) pairing at t = " +
                                  std::to_string(t));
        }
        return {endpoint(f, s.u1_from[0]) * endpoint(bracket, s.u1_from[1]),
                endpoint(f, s.u2_from[0]) * endpoint(bracket, s.u2_from[1])};
    }
    if (s.bracket_sign != 0 && strict_sign(span, 0.0) != s.bracket_sign) {
        throw DomainViolation("hybrid solver: bracket changes sign at t = " + std::to_string(t));
    }
    const Interval u = f * span;
    return {u.lo, u.hi};
}

std::vector<double> time_grid(const HybridProblem& p) {
    if (!(p.horizon > 0.0)) throw DomainError("hybrid solver: horizon must be positive");
    if (p.steps < 2) throw DomainError("hybrid solver: at least two time steps required");
    std::vector<double> t(p.steps + 1);
    for (std::size_t k = 0; k <= p.steps; ++k) t[k] = p.horizon * static_cast<double>(k) / static_cast<double>(p.steps);
    t.back() = p.horizon;
    return t;
}

// 4-point Lagrange value at the midpoint of [t_k, t_k+1].
double midpoint_value(std::span<const double> y, std::size_t k) {
    const std::size_t m = y.size();
    if (m < 4) return 0.5 * (y[k] + y[k + 1]);
    if (k == 0) return (5.0 * y[0] + 15.0 * y[1] - 5.0 * y[2] + y[3]) / 16.0;
    if (k + 2 == m) return (y[m - 4] - 5.0 * y[m - 3] + 15.0 * y[m - 2] + 5.0 * y[m - 1]) / 16.0;
    return (-y[k - 1] + 9.0 * y[k] + 9.0 * y[k + 1] - y[k + 2]) / 16.0;
}

}  // namespace

LevelSolution picard_solve_level(const HybridProblem& p, double alpha, const PicardOptions& options) {
    return picard_solve_level(p, alpha, p.u0.alpha_cut(alpha), options);
}

LevelSolution picard_solve_level(const HybridProblem& p, double alpha, const Interval& initial,
                                 const PicardOptions& options) {
    if (!p.f || !p.g) throw DomainError("hybrid solver: f and g must be set");
    LevelSolution s;
    s.alpha = alpha;
    s.initial = initial;
    s.times = time_grid(p);
    const std::size_t m = s.times.size();
    const Seed seed = make_seed(p, initial);
    s.pairing = seed.pairing;
    s.u1.assign(m, initial.lo);
    s.u2.assign(m, initial.hi);

    std::vector<Interval> f_env(m);
    std::vector<double> g_lo(m), g_hi(m);
    double previous_change = INFINITY;
    std::size_t growing = 0;
    for (std::size_t sweep = 1; sweep <= options.max_sweeps; ++sweep) {
        for (std::size_t k = 0; k < m; ++k) {
            const double t = s.times[k];
            f_env[k] = k == 0 ? seed.f0 : checked_f(p, t, s.u1[k], s.u2[k]);
            const Interval g = envelope_at(p.g, t, s.u1[k], s.u2[k], p.envelope_samples);
            g_lo[k] = g.lo;
            g_hi[k] = g.hi;
        }
        double i1 = 0.0, i2 = 0.0, change = 0.0;
        std::vector<double> n1(m), n2(m);
        for (std::size_t k = 0; k < m; ++k) {
            if (k > 0) {
                const double h = s.times[k] - s.times[k - 1];
                i1 += 0.5 * h * (g_lo[k - 1] + g_lo[k]);
                i2 += 0.5 * h * (g_hi[k - 1] + g_hi[k]);
            }
            std::tie(n1[k], n2[k]) = combine(seed, f_env[k], i1, i2, s.times[k]);
            change = std::max({change, std::abs(n1[k] - s.u1[k]), std::abs(n2[k] - s.u2[k])});
        }
        s.u1 = std::move(n1);
        s.u2 = std::move(n2);
        s.iterations = sweep;
        if (!std::isfinite(change)) throw NonContraction("hybrid solver: iterates diverged");
        if (change < options.tolerance) {
            s.converged = true;
            break;
        }
        growing = change > previous_change ? growing + 1 : 0;
        if (growing >= options.growth_limit) {
            throw NonContraction("hybrid solver: Picard change grew for " + std::to_string(growing) +
                                 " consecutive sweeps");
        }
        previous_change = change;
    }

    const double tol = validity_tolerance(s.u1, s.u2);
    for (std::size_t k = 0; k < m; ++k) s.ordered = s.ordered && s.u1[k] <= s.u2[k] + tol;
    s.residual = residual(p, s);
    return s;
}

double residual(const HybridProblem& p, const LevelSolution& s) {
    const std::size_t m = s.times.size();
    const Seed seed = make_seed(p, s.initial);
    std::vector<double> g_lo(m), g_hi(m), mid_lo(m - 1), mid_hi(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
        const Interval g = envelope_at(p.g, s.times[k], s.u1[k], s.u2[k], p.envelope_samples);
        g_lo[k] = g.lo;
        g_hi[k] = g.hi;
    }
    for (std::size_t k = 0; k + 1 < m; ++k) {
        const double t = 0.5 * (s.times[k] + s.times[k + 1]);
        const Interval g = envelope_at(p.g, t, midpoint_value(s.u1, k), midpoint_value(s.u2, k), p.envelope_samples);
        mid_lo[k] = g.lo;
        mid_hi[k] = g.hi;
    }

    double worst = std::max(std::abs(s.u1[0] - s.initial.lo), std::abs(s.u2[0] - s.initial.hi));
    double coarse1 = 0.0, coarse2 = 0.0, fine1 = 0.0, fine2 = 0.0;
    for (std::size_t k = 1; k < m; ++k) {
        const double h = s.times[k] - s.times[k - 1];
        coarse1 += 0.5 * h * (g_lo[k - 1] + g_lo[k]);
        coarse2 += 0.5 * h * (g_hi[k - 1] + g_hi[k]);
        fine1 += 0.25 * h * (g_lo[k - 1] + 2.0 * mid_lo[k - 1] + g_lo[k]);
        fine2 += 0.25 * h * (g_hi[k - 1] + 2.0 * mid_hi[k - 1] + g_hi[k]);
        const double i1 = (4.0 * fine1 - coarse1) / 3.0;
        const double i2 = (4.0 * fine2 - coarse2) / 3.0;
        const Interval f = envelope_at(p.f, s.times[k], s.u1[k], s.u2[k], p.envelope_samples);
        const auto [r1, r2] = combine(seed, f, i1, i2, s.times[k]);
        worst = std::max({worst, std::abs(s.u1[k] - r1), std::abs(s.u2[k] - r2)});
    }
    return worst;
}

namespace {

template <class E>
[[noreturn]] void rethrow_tagged(const E&, double alpha, const char* what) {
    throw E("alpha = " + std::to_string(alpha) + ": " + what);
}

}  // namespace

SolutionBundle solve(const HybridProblem& p, const PicardOptions& options) {
    const AlphaGrid& grid = p.u0.grid();
    SolutionBundle bundle;
    bundle.times = time_grid(p);
    bundle.levels.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            bundle.levels.push_back(picard_solve_level(p, grid[i], p.u0.cut(i), options));
        } catch (const DomainViolation& e) {
            rethrow_tagged(e, grid[i], e.what());
        } catch (const NonContraction& e) {
            rethrow_tagged(e, grid[i], e.what());
        } catch (const DomainError& e) {
            rethrow_tagged(e, grid[i], e.what());
        }
    }

    const std::size_t m = bundle.times.size();
    const std::size_t n = grid.size();
    std::vector<double> lower(n), upper(n), base_jump(n > 1 ? n - 1 : 0);
    auto jumps_at = [&](std::size_t k) {
        std::vector<double> j(n > 1 ? n - 1 : 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            j[i] = std::max(std::abs(bundle.levels[i + 1].u1[k] - bundle.levels[i].u1[k]),
                            std::abs(bundle.levels[i + 1].u2[k] - bundle.levels[i].u2[k]));
        }
        return j;
    };
    base_jump = jumps_at(0);

    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            lower[i] = bundle.levels[i].u1[k];
            upper[i] = bundle.levels[i].u2[k];
        }
        ValidityReport report = validate_endpoints(lower, upper);
        const double tol = validity_tolerance(lower, upper);
        const std::vector<double> jump = jumps_at(k);
        bool continuous = true;
        for (std::size_t i = 0; i < jump.size(); ++i) {
            double neighbour = 0.0;
            if (i > 0) neighbour = std::max(neighbour, jump[i - 1]);
            if (i + 1 < jump.size()) neighbour = std::max(neighbour, jump[i + 1]);
            if (jump[i] > 10.0 * (neighbour + base_jump[i]) + tol) continuous = false;
        }
        bundle.stacking_valid = bundle.stacking_valid && report.is_valid && continuous;
        bundle.diagnostics.push_back(std::move(report));
        bundle.left_continuous.push_back(continuous);
    }
    return bundle;
}

FuzzyNumber SolutionBundle::at(std::size_t k, const AlphaGrid& grid) const {
    if (k >= times.size()) throw RangeError("SolutionBundle::at: time index out of range");
    if (grid.size() != levels.size()) throw GridMismatch("SolutionBundle::at: grid does not match levels");
    std::vector<double> lower(levels.size()), upper(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        lower[i] = levels[i].u1[k];
        upper[i] = levels[i].u2[k];
    }
    return FuzzyNumber::from_endpoints(grid, std::move(lower), std::move(upper));
}

}  // namespace fuzzyfrac

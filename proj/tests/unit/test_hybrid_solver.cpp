#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fuzzyfrac/errors.hpp"
#include "fuzzyfrac/hybrid_solver.hpp"
#include "oracles.hpp"

using namespace fuzzyfrac;

namespace {

HybridProblem closed_form(double f_value) {
    HybridProblem p;
    p.f = [f_value](double, double) { return f_value; };
    p.g = [](double, double) { return -1.0; };
    p.u0 = FuzzyNumber::triangular(-3, -2, -1);
    return p;
}

// The decaying f pulls the narrow upper cuts and the wide lower cuts
// apart at different rates, so the levelwise solutions stop nesting.
HybridProblem case_two_violation() {
    HybridProblem p;
    p.f = [](double t, double x) { return 1.0 + 2.0 * std::exp(-500.0 * t) * (x + 3.0); };
    p.g = [](double, double) { return -1.0; };
    p.u0 = FuzzyNumber::triangular(-3, -2, -1, AlphaGrid::uniform(20));
    return p;
}

double sup_error(const LevelSolution& s, double (*lo)(double, double), double (*hi)(double, double)) {
    double e = 0.0;
    for (std::size_t k = 0; k < s.times.size(); ++k) {
        e = std::max({e, std::abs(s.u1[k] - lo(s.alpha, s.times[k])), std::abs(s.u2[k] - hi(s.alpha, s.times[k]))});
    }
    return e;
}

}  // namespace

TEST(Hybrid, UnitFClosedForm) {
    const auto b = solve(closed_form(1.0));
    EXPECT_TRUE(b.stacking_valid);
    ASSERT_EQ(b.levels.size(), 101u);
    for (const auto& s : b.levels) {
        EXPECT_TRUE(s.converged);
        EXPECT_TRUE(s.ordered);
        EXPECT_EQ(s.pairing, GhCase::case_i);  // ties at the core resolve to (i)
        EXPECT_LE(sup_error(s, [](double a, double t) { return -3 + a - t; }, [](double a, double t) { return -1 - a - t; }),
                  1e-6);
        EXPECT_LE(s.residual, 1e-8);
    }
    const auto u = b.at(b.times.size() - 1, AlphaGrid::uniform());
    EXPECT_LE(distance(u, FuzzyNumber::triangular(-4, -3, -2)), 1e-9);
}

TEST(Hybrid, TwoFClosedForm) {
    const auto b = solve(closed_form(2.0));
    EXPECT_TRUE(b.stacking_valid);
    for (const auto& s : b.levels) {
        EXPECT_LE(sup_error(s, [](double a, double t) { return -3 + a - 2 * t; },
                            [](double a, double t) { return -1 - a - 2 * t; }),
                  1e-6);
        EXPECT_LE(s.residual, 1e-8);
    }
}

TEST(Hybrid, CrispNonlinearMatchesOracle) {
    HybridProblem p;
    p.f = [](double, double) { return 1.0; };
    p.g = [](double, double x) { return x; };
    p.u0 = FuzzyNumber::crisp(-1.0, AlphaGrid::uniform(4));
    const auto b = solve(p);
    EXPECT_TRUE(b.stacking_valid);
    const auto ref = oracle::hybrid_crisp_rk4(p.f, p.g, -1.0, 1.0, 200, 20);
    for (const auto& s : b.levels) {
        for (std::size_t k = 0; k < s.times.size(); ++k) {
            EXPECT_NEAR(s.u1[k], ref[k], 1e-5);
            EXPECT_EQ(s.u1[k], s.u2[k]);
        }
        EXPECT_NEAR(s.u1.back(), -std::exp(1.0), 1e-5);
    }
}

TEST(Hybrid, CrispQuadraticPerturbationMatchesOracle) {
    HybridProblem p;
    p.f = [](double t, double x) { return 1.0 + 0.1 * std::sin(t) + 0.05 * x; };
    p.g = [](double t, double x) { return 0.3 * std::cos(x) - t; };
    p.u0 = FuzzyNumber::crisp(2.0, AlphaGrid::uniform(2));
    const auto s = picard_solve_level(p, 0.0);
    EXPECT_TRUE(s.converged);
    const auto ref = oracle::hybrid_crisp_rk4(p.f, p.g, 2.0, 1.0, 200, 20);
    for (std::size_t k = 0; k < s.times.size(); ++k) EXPECT_NEAR(s.u1[k], ref[k], 1e-5) << k;
}

TEST(Hybrid, CrispInitialGivesIdenticalLevels) {
    HybridProblem p = closed_form(1.5);
    p.u0 = FuzzyNumber::crisp(-2.0, AlphaGrid::uniform(10));
    const auto b = solve(p);
    for (const auto& s : b.levels) {
        EXPECT_EQ(s.u1, b.levels.front().u1);
        EXPECT_EQ(s.u2, b.levels.front().u1);
    }
    EXPECT_TRUE(b.at(5, p.u0.grid()).is_crisp());
}

TEST(Hybrid, CaseTwoViolationIsReported) {
    const auto b = solve(case_two_violation());
    EXPECT_FALSE(b.stacking_valid);
    bool some_invalid = false;
    for (const auto& d : b.diagnostics) some_invalid = some_invalid || !d.is_valid;
    EXPECT_TRUE(some_invalid);
    EXPECT_TRUE(b.diagnostics.front().is_valid);
    EXPECT_THROW(b.at(b.times.size() - 1, AlphaGrid::uniform(20)), ValidationError);
}

TEST(Hybrid, ResidualShrinksWithRefinement) {
    HybridProblem p;
    p.f = [](double, double) { return 1.0; };
    p.g = [](double, double x) { return x; };
    p.u0 = FuzzyNumber::crisp(-1.0, AlphaGrid::uniform(2));
    p.steps = 50;
    const double coarse = picard_solve_level(p, 0.0).residual;
    p.steps = 100;
    const double fine = picard_solve_level(p, 0.0).residual;
    EXPECT_GE(coarse / fine, 3.0);

    HybridProblem q = closed_form(1.0);
    q.g = [](double t, double) { return -std::cos(3 * t); };
    q.steps = 50;
    const double c2 = picard_solve_level(q, 0.3).residual;
    q.steps = 100;
    EXPECT_GE(c2 / picard_solve_level(q, 0.3).residual, 3.0);
}

TEST(Hybrid, PerturbedSolutionHasLargeResidual) {
    const auto p = closed_form(1.0);
    auto s = picard_solve_level(p, 0.25);
    EXPECT_LE(residual(p, s), 1e-8);
    s.u1[80] += 0.1;
    EXPECT_GE(residual(p, s), 0.05);
}

TEST(Hybrid, SingleStepHorizon) {
    HybridProblem p = closed_form(1.0);
    p.horizon = 1e-9;
    p.steps = 2;
    const auto s = picard_solve_level(p, 0.5);
    EXPECT_LE(s.residual, 1e-12);
}

TEST(Hybrid, LevelsNestWhenValid) {
    const auto b = solve(closed_form(1.0));
    for (std::size_t i = 0; i + 1 < b.levels.size(); ++i) {
        for (std::size_t k = 0; k < b.times.size(); ++k) {
            EXPECT_LE(b.levels[i].u1[k], b.levels[i + 1].u1[k] + 1e-12);
            EXPECT_GE(b.levels[i].u2[k], b.levels[i + 1].u2[k] - 1e-12);
        }
    }
    for (bool lc : b.left_continuous) EXPECT_TRUE(lc);
}

TEST(Hybrid, Errors) {
    HybridProblem p = closed_form(1.0);
    p.f = [](double t, double) { return 0.5 - t; };
    try {
        solve(p);
        FAIL() << "expected DomainViolation";
    } catch (const DomainViolation& e) {
        EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
    }

    HybridProblem z = closed_form(1.0);
    z.f = [](double, double x) { return x + 2.0; };  // vanishes inside u0's support
    EXPECT_THROW(solve(z), DomainViolation);

    HybridProblem big = closed_form(1.0);
    big.g = [](double, double x) { return 40.0 * x * x; };
    big.horizon = 2.0;
    EXPECT_THROW(solve(big), Error);

    HybridProblem bad = closed_form(1.0);
    bad.steps = 1;
    EXPECT_THROW(picard_solve_level(bad, 0.0), DomainError);
    bad.steps = 10;
    bad.horizon = 0.0;
    EXPECT_THROW(picard_solve_level(bad, 0.0), DomainError);
}

TEST(Hybrid, RandomAffineContractiveProblemsConverge) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> d(-1.0, 1.0), pos(0.5, 1.5);
    for (int k = 0; k < 30; ++k) {
        const double f0 = pos(rng) * (k % 2 ? 1 : -1), f1 = 0.05 * d(rng), g0 = d(rng), g1 = 0.2 * d(rng);
        HybridProblem p;
        p.f = [=](double, double x) { return f0 + f1 * x; };
        p.g = [=](double, double x) { return g0 + g1 * x; };
        const double c = d(rng);
        p.u0 = FuzzyNumber::triangular(c - 0.2, c, c + 0.2, AlphaGrid::uniform(4));
        p.horizon = 0.5;
        p.steps = 100;
        try {
            const auto b = solve(p);
            for (const auto& s : b.levels) {
                EXPECT_TRUE(s.converged);
                EXPECT_LE(s.residual, 1e-6);
            }
        } catch (const NonContraction& e) {
            ADD_FAILURE() << e.what();
        } catch (const DomainViolation&) {
            // bracket reached zero for this draw; allowed
        }
    }
}

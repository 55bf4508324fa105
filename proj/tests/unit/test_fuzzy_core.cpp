#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "fuzzyfrac/alpha_grid.hpp"
#include "fuzzyfrac/discrete_fuzzy_set.hpp"
#include "fuzzyfrac/extension.hpp"
#include "fuzzyfrac/fuzzy_number.hpp"
#include "oracles.hpp"

using namespace fuzzyfrac;

namespace {

using Set = DiscreteFuzzySet<std::string>;

Set ages(std::initializer_list<double> grades) {
    Set s;
    int age = 10;
    for (double g : grades) {
        s.set(std::to_string(age), g);
        age += 10;
    }
    return s;
}

Set random_set(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Set s;
    for (char c = 'a'; c <= 'h'; ++c) {
        if (unit(rng) < 0.8) s.set(std::string(1, c), unit(rng));
    }
    return s;
}

}  // namespace

TEST(DiscreteSet, UnionIsIdempotent) {
    const Set a{{"x", 0.3}, {"y", 1.0}, {"z", 0.6}};
    EXPECT_EQ(combine(a, a, SetOp::union_), a);
}

TEST(DiscreteSet, YoungOrOldAtThirty) {
    const Set young = ages({1, 0.8, 0.6, 0.2, 0.1, 0, 0});
    const Set old = ages({0, 0.1, 0.3, 0.5, 0.7, 0.9, 1});
    EXPECT_DOUBLE_EQ(combine(young, old, SetOp::union_).grade("30"), 0.6);
    EXPECT_DOUBLE_EQ(combine(young, old, SetOp::intersection).grade("30"), 0.3);
    EXPECT_DOUBLE_EQ(combine(young, old, SetOp::difference).grade("30"), 0.6);
    EXPECT_DOUBLE_EQ(combine(young, old, SetOp::alg_sum).grade("30"), 0.6 + 0.3 - 0.18);
}

TEST(DiscreteSet, IntersectionWithEmpty) {
    const Set a{{"x", 0.3}, {"y", 1.0}};
    const Set none = combine(a, Set{}, SetOp::intersection);
    EXPECT_EQ(none.size(), 2u);
    for (const auto& [k, mu] : none.entries()) EXPECT_EQ(mu, 0.0) << k;
}

TEST(DiscreteSet, Complement) {
    const Set a{{"x", 0.3}};
    EXPECT_DOUBLE_EQ(complement(a).grade("x"), 0.7);
    const Set young = ages({1, 0.8, 0.6, 0.2, 0.1, 0, 0});
    const Set twice = complement(complement(young));
    for (const auto& [k, mu] : young.entries()) EXPECT_NEAR(twice.grade(k), mu, 1e-15);
    EXPECT_NEAR(cardinality(young) + cardinality(complement(young)), 7.0, 1e-12);
}

TEST(DiscreteSet, AlphaCuts) {
    const Set a{{"x", 0.3}, {"y", 1.0}, {"z", 0.6}};
    EXPECT_EQ(alpha_cut(a, 0.6), (std::set<std::string>{"y", "z"}));
    EXPECT_EQ(alpha_cut(a, 0.6, true), (std::set<std::string>{"y"}));
    EXPECT_EQ(alpha_cut(a, 0.0).size(), 3u);
    EXPECT_THROW(alpha_cut(a, 1.5), DomainError);
}

TEST(DiscreteSet, Cartesian) {
    const Set a{{"x", 0.7}, {"y", 0.5}, {"z", 1.0}};
    const Set b{{"alpha", 0.7}, {"beta", 0.4}};
    const auto p = cartesian(a, b);
    EXPECT_DOUBLE_EQ(p.grade({"x", "alpha"}), 0.7);
    EXPECT_DOUBLE_EQ(p.grade({"y", "beta"}), 0.4);
    EXPECT_DOUBLE_EQ(p.grade({"z", "beta"}), 0.4);

    const Set ones{{"u", 1.0}};
    const auto projected = cartesian(a, ones);
    for (const auto& [k, mu] : projected.entries()) EXPECT_EQ(mu, a.grade(k.first));
    const Set zero{{"u", 0.0}};
    const auto zeroed = cartesian(a, zero);
    for (const auto& [k, mu] : zeroed.entries()) EXPECT_EQ(mu, 0.0);
}

TEST(DiscreteSet, Cardinality) {
    EXPECT_NEAR(cardinality(Set{{"x", 0.3}, {"y", 1.0}, {"z", 0.6}}), 1.9, 1e-15);
    EXPECT_EQ(cardinality(Set{}), 0.0);
}

TEST(DiscreteSet, RandomLaws) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Set a = random_set(rng), b = random_set(rng), c = random_set(rng);
        EXPECT_NEAR(cardinality(a) + cardinality(b),
                    cardinality(combine(a, b, SetOp::intersection)) + cardinality(combine(a, b, SetOp::union_)), 1e-12);
        EXPECT_EQ(combine(a, b, SetOp::union_), combine(b, a, SetOp::union_));
        EXPECT_EQ(combine(a, b, SetOp::intersection), combine(b, a, SetOp::intersection));
        EXPECT_EQ(combine(combine(a, b, SetOp::union_), c, SetOp::union_),
                  combine(a, combine(b, c, SetOp::union_), SetOp::union_));
        EXPECT_EQ(combine(combine(a, b, SetOp::intersection), c, SetOp::intersection),
                  combine(a, combine(b, c, SetOp::intersection), SetOp::intersection));
        // De Morgan over the common universe: pad both with explicit zeros first
        Set pa = a, pb = b;
        for (const auto& [k, _] : b.entries()) pa.set(k, a.grade(k));
        for (const auto& [k, _] : a.entries()) pb.set(k, b.grade(k));
        EXPECT_EQ(complement(combine(pa, pb, SetOp::union_)),
                  combine(complement(pa), complement(pb), SetOp::intersection));
    }
}

TEST(AlphaGrid, Invariants) {
    const AlphaGrid g = AlphaGrid::uniform();
    EXPECT_EQ(g.size(), 101u);
    EXPECT_EQ(g[0], 0.0);
    EXPECT_EQ(g[100], 1.0);
    EXPECT_THROW(AlphaGrid({0.0, 0.5, 0.5, 1.0}), DomainError);
    EXPECT_THROW(AlphaGrid({0.1, 1.0}), DomainError);
    EXPECT_THROW(AlphaGrid({0.0}), DomainError);
    EXPECT_EQ(g.bracket(1.0), 99u);
    EXPECT_EQ(g.bracket(0.255), 25u);
}

TEST(Convexity, Examples) {
    auto tri = SampledFunction::sample([](double x) { return std::max(0.0, 1.0 - std::abs(x - 1.0)); }, -1, 3, 80);
    EXPECT_TRUE(convexity_check(tri));
    auto bimodal = SampledFunction::sample(
        [](double x) { return std::max(std::exp(-20 * (x - 0.5) * (x - 0.5)), std::exp(-20 * (x - 2.5) * (x - 2.5))); }, 0,
        3, 90);
    EXPECT_FALSE(convexity_check(bimodal));
    auto tail = SampledFunction::sample(
        [](double x) { return x <= 10.0 ? 0.0 : 1.0 / (1.0 + 1.0 / ((x - 10.0) * (x - 10.0))); }, 0, 20, 200);
    EXPECT_TRUE(convexity_check(tail));
}

TEST(FuzzyNumber, Trapezoid) {
    const auto b = FuzzyNumber::trapezoid(20, 25, 35, 40);
    EXPECT_EQ(b.support(), (Interval{20, 40}));
    EXPECT_EQ(b.core(), (Interval{25, 35}));
    const auto s = FuzzyNumber::trapezoid(5, 5, 5, 5);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.cut(i), Interval(5.0));
    EXPECT_TRUE(s.is_crisp());
    const auto t = FuzzyNumber::trapezoid(12, 15, 15, 19);
    EXPECT_EQ(t.cut(50), (Interval{13.5, 17}));
    EXPECT_THROW(FuzzyNumber::trapezoid(1, 0, 2, 3), OrderingError);
    EXPECT_THROW(FuzzyNumber::trapezoid(0, 1, 3, 2), OrderingError);
}

TEST(FuzzyNumber, AlphaCutAndMembership) {
    const auto u = FuzzyNumber::triangular(0, 1, 2);
    EXPECT_EQ(u.alpha_cut(1.0), Interval(1.0));
    EXPECT_EQ(u.alpha_cut(0.0), (Interval{0, 2}));
    EXPECT_NEAR(u.alpha_cut(0.25).lo, 0.25, 1e-15);
    EXPECT_NEAR(u.alpha_cut(0.25).hi, 1.75, 1e-15);
    // off-grid on a coarse grid
    const auto c = FuzzyNumber::triangular(0, 1, 2, AlphaGrid::uniform(4));
    EXPECT_NEAR(c.alpha_cut(0.3).lo, 0.3, 1e-15);
    EXPECT_NEAR(c.alpha_cut(0.3).hi, 1.7, 1e-15);

    EXPECT_DOUBLE_EQ(u.membership(1.0), 1.0);
    EXPECT_NEAR(u.membership(0.5), 0.5, 1e-12);
    EXPECT_NEAR(u.membership(1.8), 0.2, 1e-12);
    EXPECT_EQ(u.membership(5.0), 0.0);
    EXPECT_EQ(u.membership(-0.1), 0.0);
}

TEST(FuzzyNumber, MembershipRoundTrip) {
    const auto u = FuzzyNumber::trapezoid(-1, 2, 3, 7);
    const double step = 1.0 / 100.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        EXPECT_GE(u.membership(u.lower()[i]), u.grid()[i] - step);
        EXPECT_GE(u.membership(u.upper()[i]), u.grid()[i] - step);
    }
}

TEST(Validate, Examples) {
    const auto u = FuzzyNumber::trapezoid(12, 15, 15, 19);
    EXPECT_TRUE(validate_endpoints(u.lower(), u.upper()).is_valid);

    std::vector<double> lo{0, 0.5}, hi{1, 0.4};
    auto r = validate_endpoints(lo, hi);
    ASSERT_FALSE(r.is_valid);
    EXPECT_EQ(r.violations.front().index, 1u);
    EXPECT_EQ(r.violations.front().kind, ViolationKind::crossing);

    lo = {0, -0.1};
    hi = {1, 1};
    r = validate_endpoints(lo, hi);
    ASSERT_FALSE(r.is_valid);
    EXPECT_EQ(r.violations.front().index, 1u);
    EXPECT_EQ(r.violations.front().kind, ViolationKind::lower_not_monotone);

    lo = {0, 0};
    hi = {1, 1.5};
    r = validate_endpoints(lo, hi);
    ASSERT_FALSE(r.is_valid);
    EXPECT_EQ(r.violations.front().kind, ViolationKind::upper_not_monotone);
}

TEST(Validate, SubToleranceNoiseIsClamped) {
    const AlphaGrid g({0.0, 0.5, 1.0});
    const auto u = FuzzyNumber::from_endpoints(g, {0.0, 1.0, 1.0 - 1e-12}, {2.0, 1.5, 1.5 + 1e-12});
    EXPECT_EQ(u.lower()[2], 1.0);
    EXPECT_EQ(u.upper()[2], 1.5);
    EXPECT_THROW(FuzzyNumber::from_endpoints(g, {0.0, 1.0, 0.9}, {2.0, 1.5, 1.5}), ValidationError);
}

TEST(Arith, Examples) {
    const auto a = FuzzyNumber::triangular(0, 1, 2), b = FuzzyNumber::triangular(1, 2, 3);
    EXPECT_LE(distance(a + b, FuzzyNumber::triangular(1, 3, 5)), 1e-14);
    EXPECT_LE(distance(scale(b, -1.0), FuzzyNumber::triangular(-3, -2, -1)), 1e-15);
    EXPECT_LE(distance(FuzzyNumber::crisp(2.0) * b, FuzzyNumber::triangular(2, 4, 6)), 1e-15);
    EXPECT_LE(distance(minkowski_sub(b, a), FuzzyNumber::triangular(-1, 1, 3)), 1e-15);
    EXPECT_THROW(a + FuzzyNumber::triangular(0, 1, 2, AlphaGrid::uniform(10)), GridMismatch);
    EXPECT_THROW(distance(a, FuzzyNumber::crisp(0.0, AlphaGrid::uniform(10))), GridMismatch);
}

TEST(Arith, ProductTakesFourEndpointProducts) {
    const auto a = FuzzyNumber::triangular(-1, 1, 2), b = FuzzyNumber::triangular(-3, -2, 4);
    const auto p = a * b;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto want = oracle::mul({a.lower()[i], a.upper()[i]}, {b.lower()[i], b.upper()[i]});
        EXPECT_EQ(p.cut(i), (Interval{want.lo, want.hi}));
    }
}

TEST(Arith, RandomLaws) {
    std::mt19937_64 rng(3);
    const AlphaGrid g = AlphaGrid::uniform();
    std::uniform_real_distribution<double> lam(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto u = oracle::random_fuzzy(rng, g), v = oracle::random_fuzzy(rng, g), w = oracle::random_fuzzy(rng, g);
        EXPECT_LE(distance(u + v, v + u), 1e-12);
        EXPECT_LE(distance((u + v) + w, u + (v + w)), 1e-12);
        EXPECT_EQ(scale(u, 1.0), u);
        const double l = lam(rng), m = lam(rng);
        EXPECT_LE(distance(scale(u, l * m), scale(scale(u, m), l)), 1e-12 * (1.0 + norm(u)) * 9.0);

        EXPECT_EQ(distance(u, u), 0.0);
        EXPECT_EQ(distance(u, v), distance(v, u));
        EXPECT_LE(distance(u, w), distance(u, v) + distance(v, w) + 1e-12);
        EXPECT_NEAR(distance(u + w, v + w), distance(u, v), 1e-12 * (1.0 + norm(u) + norm(v) + norm(w)));
        EXPECT_NEAR(distance(scale(u, l), scale(v, l)), std::abs(l) * distance(u, v), 1e-12 * (1.0 + norm(u) + norm(v)) * 3.0);
    }
}

TEST(Arith, Resample) {
    const auto u = FuzzyNumber::triangular(0, 1, 2);
    const auto c = resample(u, AlphaGrid::uniform(4));
    EXPECT_EQ(c.size(), 5u);
    EXPECT_NEAR(c.cut(1).lo, 0.25, 1e-15);
    EXPECT_NEAR(c.cut(1).hi, 1.75, 1e-15);
}

TEST(Zadeh, Examples) {
    const auto u = FuzzyNumber::triangular(0, 1, 2);
    EXPECT_LE(distance(zadeh_extend([](double x) { return x; }, u), u), 1e-15);
    EXPECT_LE(distance(zadeh_extend([](double x) { return 2 * x + 1; }, u), FuzzyNumber::triangular(1, 3, 5)), 1e-14);

    const auto sym = FuzzyNumber::triangular(-1, 0, 1);
    const auto sq = zadeh_extend([](double x) { return x * x; }, sym);
    for (std::size_t i = 0; i < sq.size(); ++i) {
        EXPECT_EQ(sq.lower()[i], 0.0);
        const double a = sq.grid()[i];
        EXPECT_NEAR(sq.upper()[i], (1 - a) * (1 - a), 1e-14);
    }
}

TEST(Zadeh, EnvelopeExamples) {
    auto e = envelope([](double x) { return x; }, {1, 3}, 2);
    EXPECT_EQ(e.min, 1.0);
    EXPECT_EQ(e.max, 3.0);
    e = envelope([](double x) { return x * x; }, {-1, 2}, 7);
    EXPECT_EQ(e.min, 0.0);
    EXPECT_EQ(e.max, 4.0);
    e = envelope([](double x) { return std::sin(x); }, {0, M_PI}, 65);
    EXPECT_NEAR(e.min, 0.0, 1e-3);
    EXPECT_NEAR(e.max, 1.0, 1e-3);
}

TEST(Zadeh, CoarseSamplingIsRejected) {
    // a narrow spike only the tighter cuts hit
    auto spike = [](double x) { return std::exp(-1e6 * (x - 0.5) * (x - 0.5)); };
    const auto u = FuzzyNumber::triangular(0.0, 0.5, 1.0);
    EXPECT_THROW(zadeh_extend(spike, u, 4), InvalidResult);
}

TEST(Stacking, OperationsProduceValidNumbers) {
    std::mt19937_64 rng(5);
    const AlphaGrid g = AlphaGrid::uniform(20);
    for (int trial = 0; trial < 100; ++trial) {
        const auto u = oracle::random_fuzzy(rng, g), v = oracle::random_fuzzy(rng, g);
        for (const auto& r : {u + v, minkowski_sub(u, v), u * v, scale(u, -2.5),
                              zadeh_extend([](double x) { return std::sin(x); }, u)}) {
            EXPECT_TRUE(validate_endpoints(r.lower(), r.upper()).is_valid);
        }
    }
}

#include "sprime/errors.hpp"
#include "sprime/evaluator.hpp"
#include "sprime/serialize.hpp"

#include "../support/generators.hpp"
#include "../support/oracle.hpp"

#include <gtest/gtest.h>

using namespace sprime;

namespace {

GaussianRational at(const Expr& f, const Point& n) { return eval(f, n.coords()); }

}  // namespace

TEST(Eval, ConstantIgnoresPoint) { EXPECT_EQ(at(one(2), Point{5, -3}), GaussianRational(1)); }

TEST(Eval, DiracIsIndicator) {
    Expr d = dirac(Point{2, 2});
    EXPECT_EQ(at(d, Point{2, 2}), GaussianRational(1));
    EXPECT_EQ(at(d, Point{0, 0}), GaussianRational(0));
}

TEST(Eval, MaskVanishesAtThirtyTwo) { EXPECT_EQ(at(pattern_mask(1, 1), Point{32}), GaussianRational(0)); }

TEST(Eval, QuotientFillsZero) {
    Expr q = quotient(one(1), dirac(Point{0}));
    EXPECT_EQ(at(q, Point{0}), GaussianRational(1));
    EXPECT_EQ(at(q, Point{3}), GaussianRational(0));
}

TEST(Eval, ShiftTranslates) {
    Expr f = shift(Point{2, -1}, dirac(Point{0, 0}));
    EXPECT_EQ(at(f, Point{2, -1}), GaussianRational(1));
    EXPECT_EQ(at(f, Point{0, 0}), GaussianRational(0));
}

TEST(Eval, MagnitudeMaxSquared) {
    Expr f = magnitude_max_sq({constant(1, GaussianRational(3, 4)), coordinate(1, 0)});
    EXPECT_EQ(at(f, Point{2}), GaussianRational(25));
    EXPECT_EQ(at(f, Point{-6}), GaussianRational(36));
}

TEST(Eval, InverseNormPower) {
    EXPECT_EQ(at(inv_norm_power(2, 2), Point{1, -2}), GaussianRational(Rational(1, 16)));
}

TEST(Eval, WrongDimensionThrows) {
    EXPECT_THROW(at(dirac(Point{1, 1}), Point{1}), DimensionMismatch);
    EXPECT_THROW(sum(one(1), one(2)), DimensionMismatch);
}

TEST(Eval, HalfRootIsNotExact) {
    EXPECT_THROW(at(half_root(constant(1, 4)), Point{0}), HalfRootNotExact);
}

TEST(Approx, HalfRootOfFour) {
    auto v = eval_approx(half_root(constant(1, 4)), Point{7}.coords(), 128);
    EXPECT_NEAR(v.re(), 2.0, 1e-30);
    EXPECT_NEAR(v.im(), 0.0, 1e-30);
}

TEST(Approx, HalfRootOfMinusOneIsI) {
    auto v = eval_approx(half_root(constant(1, -1)), Point{0}.coords(), 128);
    EXPECT_NEAR(v.re(), 0.0, 1e-30);
    EXPECT_NEAR(v.im(), 1.0, 1e-30);
}

TEST(Approx, HalfRootOfDirac) {
    Expr f = half_root(dirac(Point{3}));
    EXPECT_NEAR(eval_approx(f, Point{3}.coords(), 64).re(), 1.0, 1e-15);
    EXPECT_EQ(eval_approx(f, Point{4}.coords(), 64).re(), 0.0);
}

TEST(Approx, AgreesWithExactValues) {
    gen::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        Expr f = gen::pool(rng, 2);
        Point n = gen::point(rng, 2, 6);
        GaussianRational exact = at(f, n);
        auto approx = eval_approx(f, n.coords(), 96);
        EXPECT_NEAR(approx.re(), exact.re().get_d(), 1e-9 * (1 + std::abs(exact.re().get_d())));
        EXPECT_NEAR(approx.im(), exact.im().get_d(), 1e-9 * (1 + std::abs(exact.im().get_d())));
    }
}

TEST(ZeroTest, ThroughHalfRoots) {
    Expr f = product(half_root(dirac_complement(Point{1})), one(1));
    Evaluator ev(f);
    EXPECT_TRUE(ev.is_zero(Point{1}.coords()));
    EXPECT_FALSE(ev.is_zero(Point{2}.coords()));
    Evaluator bad(sum(half_root(one(1)), one(1)));
    EXPECT_THROW(bad.is_zero(Point{0}.coords()), HalfRootNotExact);
}

TEST(AbsPower, DoublesPerHalfRoot) {
    AbsPower a = abs_power(half_root(constant(1, GaussianRational(3, 4))), Point{0}.coords());
    EXPECT_EQ(a.power, 4u);
    EXPECT_EQ(a.value, 25);
    AbsPower b = abs_power(product(half_root(constant(1, 2)), half_root(constant(1, 8))), Point{0}.coords());
    EXPECT_EQ(b.power, 4u);
    EXPECT_EQ(b.value, 256);  // |sqrt2 * sqrt8|^4
}

TEST(AbsPower, ProbeMatchesRecursiveEvaluation) {
    Expr f = half_root(half_root(product(coordinate(1, 0), constant(1, GaussianRational(1, 1)))));
    MagnitudeProbe probe(f);
    for (Coord x = -5; x <= 5; ++x) {
        AbsPower want = abs_power(f, Point{x}.coords());
        AbsPower got = probe.at(Point{x}.coords());
        EXPECT_EQ(got.power, want.power);
        EXPECT_EQ(got.value, want.value);
    }
}

// Compiled evaluation against the tree-walking reference on random expressions.
TEST(EvalProperty, MatchesReferenceEvaluator) {
    gen::Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = static_cast<std::size_t>(rng.between(1, 3));
        Expr f = gen::pool(rng, d, 3);
        if (rng.between(0, 3) == 0) f = quotient(f, gen::pool(rng, d, 1));
        Evaluator ev(f);
        for (int s = 0; s < 20; ++s) {
            Point n = gen::point(rng, d, 8);
            ASSERT_EQ(ev.eval(n.coords()), *oracle::eval(f, n)) << serialize(f) << " at " << n.to_string();
        }
    }
}

TEST(EvalProperty, SharedSubtreesEvaluateOnce) {
    Expr base = sum(coordinate(1, 0), one(1));
    Expr f = product(base, base);
    for (int i = 0; i < 8; ++i) f = product(f, f);  // tree size explodes, DAG stays small
    EXPECT_GT(tree_size(f), 1000u);
    Evaluator ev(f);
    EXPECT_EQ(ev.eval(Point{1}.coords()), GaussianRational(pow(Rational(2), 512)));
}

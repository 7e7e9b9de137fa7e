#include "sprime/errors.hpp"
#include "sprime/evaluator.hpp"
#include "sprime/ideals.hpp"
#include "sprime/serialize.hpp"

#include "../support/generators.hpp"
#include "../support/oracle.hpp"

#include <gtest/gtest.h>

using namespace sprime;

namespace {

const ScanConfig kCfg{Window{1, 50}, kDefaultMCap};

}  // namespace

TEST(FixedMaximal, Membership) {
    Point k{1, 2};
    EXPECT_FALSE(fixed_maximal_member(dirac(k), k));
    EXPECT_TRUE(fixed_maximal_member(dirac_complement(k), k));
}

TEST(Witness, ConstantTwo) {
    MaximalityWitness w = maximality_witness(Point{0}, constant(1, 2), Window{1, 20});
    EXPECT_TRUE(w.unit_check);
    EXPECT_TRUE(is_identically_zero(w.g));
}

TEST(Witness, DiracGivesComplement) {
    Point k{3, -1};
    MaximalityWitness w = maximality_witness(k, dirac(k), Window{2, 15});
    EXPECT_TRUE(w.unit_check);
    for (const Point& n : oracle::ball(2, 15)) {
        EXPECT_EQ(*oracle::eval(w.g, n), *oracle::eval(dirac_complement(k), n));
    }
}

TEST(Witness, VanishingAtKThrows) {
    Point k{4};
    EXPECT_THROW(maximality_witness(k, dirac_complement(k), Window{1, 5}), VanishesAtK);
}

TEST(Witness, ReconstructsOneOnRandomInputs) {
    gen::Rng rng(9);
    int done = 0;
    while (done < 40) {
        Expr f = gen::pool(rng, 2, 2);
        Point k = gen::point(rng, 2, 5);
        if (oracle::eval(f, k)->is_zero()) continue;
        ++done;
        MaximalityWitness w = maximality_witness(k, f, Window{2, 10});
        EXPECT_TRUE(w.unit_check);
        EXPECT_TRUE(oracle::eval(w.g, k)->is_zero());
        const GaussianRational fk = *oracle::eval(f, k);
        for (const Point& n : oracle::ball(2, 10)) {
            EXPECT_EQ(*oracle::eval(w.g, n) + *oracle::eval(f, n) / fk, GaussianRational(1)) << serialize(f);
        }
    }
}

TEST(Nonfixed, DiracIsIn) {
    auto v = nonfixed_ideal_member(dirac(Point{3, 3}), Subsequence::linear(1, 0), 12);
    EXPECT_EQ(v.kind, NonfixedVerdict::Kind::CertifiedYes);
}

TEST(Nonfixed, OneIsOut) {
    auto v = nonfixed_ideal_member(one(1), Subsequence::linear(2, 1), 12);
    EXPECT_EQ(v.kind, NonfixedVerdict::Kind::CertifiedNo);
    ASSERT_TRUE(v.j);
    EXPECT_EQ(*v.j, 1u);
}

TEST(Nonfixed, DiagonalFiniteSupportIsIn) {
    Expr f = finite_support(2, {{Point{1, 1}, 1}, {Point{2, 2}, 5}, {Point{3, 3}, -1}});
    EXPECT_EQ(nonfixed_ideal_member(f, Subsequence::linear(1, 0), 12).kind, NonfixedVerdict::Kind::CertifiedYes);
}

TEST(Nonfixed, SmallConstantFailsLater) {
    // e^k / 1000 > 1 first at k = 7
    auto v = nonfixed_ideal_member(constant(1, Rational(1, 1000)), Subsequence::linear(1, 0), 12);
    EXPECT_EQ(v.kind, NonfixedVerdict::Kind::CertifiedNo);
    ASSERT_TRUE(v.j);
    EXPECT_EQ(*v.j, 7u);
}

TEST(Nonfixed, PolynomialDecayIsOut) {
    // e^k / (1+k)^2 first exceeds 1 at k = 3
    auto v = nonfixed_ideal_member(inv_norm_power(1, 2), Subsequence::linear(1, 0), 12);
    EXPECT_EQ(v.kind, NonfixedVerdict::Kind::CertifiedNo);
    ASSERT_TRUE(v.j);
    EXPECT_EQ(*v.j, 3u);
}

TEST(Nonfixed, NoLowerBoundStaysEmpirical) {
    auto w = nonfixed_ideal_member(product(inv_norm_power(1, 2), coordinate(1, 0)), Subsequence::explicit_terms({1, 2, 3}), 3);
    EXPECT_EQ(w.kind, NonfixedVerdict::Kind::EmpiricalNo);
    EXPECT_EQ(w.samples.size(), 3u);
}

TEST(Subsequences, Indexing) {
    Subsequence s = Subsequence::linear(3, 2);
    EXPECT_EQ(*s.at(1), 5);
    EXPECT_EQ(*s.at(4), 14);
    Subsequence t = Subsequence::explicit_terms({2, 7, 9});
    EXPECT_EQ(*t.at(2), 7);
    EXPECT_FALSE(t.at(4).has_value());
    EXPECT_ANY_THROW(Subsequence::explicit_terms({3, 3}));
    EXPECT_ANY_THROW(Subsequence::explicit_terms({0, 1}));
}

TEST(Classify, OneIsNotProper) {
    EXPECT_TRUE(std::holds_alternative<NotProper>(classify_principal_prime(one(1), kCfg)));
}

TEST(Classify, TwoZerosAreNotPrime) {
    Point k1{0}, k2{5};
    Expr d = product(dirac_complement(k1), dirac_complement(k2));
    auto c = classify_principal_prime(d, kCfg);
    ASSERT_TRUE(std::holds_alternative<NotPrime>(c));
    const auto& np = std::get<NotPrime>(c);
    EXPECT_TRUE(np.identity_checked);
    for (const Point& n : oracle::ball(1, 50)) {
        EXPECT_EQ(*oracle::eval(np.a, n) * *oracle::eval(np.b, n), *oracle::eval(d, n));
    }
    EXPECT_TRUE(oracle::eval(d, np.m)->is_zero());
    EXPECT_EQ(*oracle::eval(np.a, np.m), GaussianRational(1));
    EXPECT_TRUE(oracle::eval(d, np.n)->is_zero());
    EXPECT_EQ(*oracle::eval(np.b, np.n), GaussianRational(1));
}

TEST(Classify, SingleZeroIsFixedMaximal) {
    Point k{2, -3};
    auto c = classify_principal_prime(dirac_complement(k), ScanConfig{Window{2, 20}, kDefaultMCap});
    ASSERT_TRUE(std::holds_alternative<FixedMaximal>(c));
    const auto& fm = std::get<FixedMaximal>(c);
    EXPECT_EQ(fm.point, k);
    EXPECT_EQ(fm.inverse_cert.M, 1);
    EXPECT_EQ(fm.inverse_cert.m, 0u);
}

TEST(Separator, BasicPair) {
    Expr s = separator(Point{0, 0}, Point{1, 0});
    EXPECT_TRUE(structurally_equal(s, dirac(Point{1, 0})));
    EXPECT_TRUE(fixed_maximal_member(s, Point{0, 0}));
    EXPECT_FALSE(fixed_maximal_member(s, Point{1, 0}));
    Expr t = separator(Point{1, 0}, Point{0, 0});
    EXPECT_TRUE(structurally_equal(t, dirac(Point{0, 0})));
}

TEST(Separator, Errors) {
    EXPECT_THROW(separator(Point{1, 1}, Point{1, 1}), EqualPoints);
    EXPECT_THROW(separator(Point{1}, Point{1, 1}), DimensionMismatch);
}

TEST(Separator, ThreeDimensions) {
    Point a{1, 2, 3}, b{1, 2, 4};
    Expr s = separator(a, b);
    EXPECT_TRUE(fixed_maximal_member(s, a));
    EXPECT_FALSE(fixed_maximal_member(s, b));
}

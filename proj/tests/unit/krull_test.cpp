#include "sprime/evaluator.hpp"
#include "sprime/krull.hpp"
#include "sprime/pattern_mask.hpp"
#include "sprime/serialize.hpp"

#include "../support/generators.hpp"
#include "../support/oracle.hpp"

#include <gtest/gtest.h>

using namespace sprime;

namespace {

Point dyadic(std::size_t d, unsigned k) { return Point::axis(d, 0, Coord{1} << k); }

void expect_matches_oracle(const Expr& f, const Point& n, std::uint64_t cap) {
    ZeroOrder got = zero_order(f, n, cap);
    oracle::Order want = oracle::zero_order(f, n, cap);
    EXPECT_EQ(got.value, want.value) << serialize(f) << " at " << n.to_string();
    EXPECT_EQ(got.at_least, want.at_least) << serialize(f) << " at " << n.to_string();
}

}  // namespace

TEST(ZeroOrder, NonzeroIsZero) {
    EXPECT_EQ(zero_order(one(2), Point{4, -1}, 10), (ZeroOrder{0, false}));
}

TEST(ZeroOrder, ZeroFunctionHitsCap) {
    EXPECT_EQ(zero_order(zero(1), Point{3}, 10), (ZeroOrder{10, true}));
}

TEST(ZeroOrder, MaskAtThirtyTwo) {
    // the run j = 0..25 holds 26 zeros
    EXPECT_EQ(zero_order(pattern_mask(1, 1), Point{32}, 100), (ZeroOrder{26, false}));
}

TEST(ZeroOrder, MaskFamilyOnAxis) {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (unsigned k = 0; k <= 8; ++k) expect_matches_oracle(pattern_mask(d, n), dyadic(d, k), 4096);
        }
    }
}

TEST(ZeroOrder, MaskValueInStatedInterval) {
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned k = 1; k <= 20; ++k) {
            const std::uint64_t s = saturating_pow(k, n + 1);
            if ((std::uint64_t{1} << k) <= s + 1 || s + 2 > 200000) continue;
            ZeroOrder z = zero_order(pattern_mask(1, n), dyadic(1, k), 200000);
            ASSERT_FALSE(z.at_least);
            EXPECT_TRUE(z.value == s || z.value == s + 1) << "n=" << n << " k=" << k;
            EXPECT_EQ(z.value, s + 1);
        }
    }
}

TEST(ZeroOrder, RandomFiniteSupportsMatchOracle) {
    gen::Rng rng(500);
    for (int i = 0; i < 300; ++i) {
        const std::size_t d = static_cast<std::size_t>(rng.between(1, 3));
        Expr f = gen::finite_support(rng, d, 4, 6, rng.coin());
        if (rng.coin()) f = sum(one(d), scalar_mul(-1, f));  // mostly zero near the support
        expect_matches_oracle(f, gen::point(rng, d, 4), 64);
    }
}

TEST(MaskPattern, MatchesIndependentEnumeration) {
    for (unsigned n = 1; n <= 3; ++n) {
        for (Coord x = -3; x <= 700; ++x) {
            ASSERT_EQ(pattern_mask_vanishes(n, Point{x}.coords()), oracle::mask_vanishes(n, Point{x})) << x;
        }
        for (const Point& p : oracle::ball(2, 40)) {
            ASSERT_EQ(pattern_mask_vanishes(n, p.coords()), oracle::mask_vanishes(n, p)) << p.to_string();
        }
    }
}

TEST(MaskPattern, Examples) {
    Expr f = pattern_mask(1, 1);
    EXPECT_EQ(eval(f, Point{32}.coords()), GaussianRational(0));
    EXPECT_EQ(eval(f, Point{57}.coords()), GaussianRational(0));
    EXPECT_EQ(eval(f, Point{58}.coords()), GaussianRational(1));
}

TEST(Properties, SumExamples) {
    Point n{2};
    EXPECT_TRUE(check_P1(zero(1), zero(1), n, 10));
    EXPECT_TRUE(check_P1(dirac(n), scalar_mul(-1, dirac(n)), n, 10));
}

TEST(Properties, ProductExamples) {
    Point n{1, 1};
    Expr g = pattern_mask(2, 1);
    EXPECT_TRUE(check_P2(one(2), g, n, 64));
    EXPECT_EQ(zero_order(product(one(2), g), n, 64), zero_order(g, n, 64));
    EXPECT_TRUE(check_P2(dirac_complement(n), dirac_complement(n), n, 64));
}

TEST(Properties, HoldOnRandomPairs) {
    gen::Rng rng(600);
    for (int i = 0; i < 200; ++i) {
        const std::size_t d = static_cast<std::size_t>(rng.between(1, 2));
        Expr f = gen::finite_support(rng, d, 3, 5, rng.coin());
        Expr g = rng.coin() ? gen::finite_support(rng, d, 3, 5, rng.coin()) : gen::pool(rng, d, 1);
        Point n = gen::point(rng, d, 3);
        EXPECT_TRUE(check_P1(f, g, n, 64)) << serialize(f) << " " << serialize(g);
        EXPECT_TRUE(check_P2(f, g, n, 64)) << serialize(f) << " " << serialize(g);
    }
}

TEST(IStar, Examples) {
    EXPECT_EQ(membership_i_star(pattern_mask(1, 2)).kind, KrullVerdict::Kind::CertifiedIn);
    EXPECT_EQ(membership_i_star(one(1)).kind, KrullVerdict::Kind::CertifiedOut);
    EXPECT_EQ(membership_i_star(finite_support(1, {{Point{64}, 3}})).kind, KrullVerdict::Kind::CertifiedIn);
    EXPECT_EQ(membership_i_star(inv_norm_power(1, 3)).kind, KrullVerdict::Kind::CertifiedOut);
}

TEST(IN, MaskLevels) {
    for (unsigned n = 1; n <= 3; ++n) {
        EXPECT_EQ(membership_i_n(pattern_mask(1, n), n).kind, KrullVerdict::Kind::CertifiedIn);
        EXPECT_EQ(membership_i_n(pattern_mask(1, n), n + 1).kind, KrullVerdict::Kind::CertifiedOut);
        EXPECT_EQ(membership_i_n(zero(1), n).kind, KrullVerdict::Kind::CertifiedIn);
    }
}

TEST(MN, MaskLevels) {
    for (unsigned n = 1; n <= 3; ++n) {
        EXPECT_EQ(membership_M_n(pattern_mask(1, n), n + 1).kind, KrullVerdict::Kind::CertifiedIn);
        EXPECT_EQ(membership_M_n(pattern_mask(1, n), n).kind, KrullVerdict::Kind::CertifiedOut);
        EXPECT_EQ(membership_M_n(one(1), n).kind, KrullVerdict::Kind::CertifiedIn);
    }
}

TEST(Chain, SmallReport) {
    ChainReport r = chain_report(1, 10);
    ASSERT_EQ(r.levels.size(), 2u);
    const ChainLevel& f1 = r.levels[0];
    for (const RatioRow& row : f1.rows) {
        if (row.k < 5) continue;
        EXPECT_TRUE(row.gap);
        EXPECT_GE(row.over_k_n1, 1);
        EXPECT_LE(row.over_k_n1, 1 + Rational(2, row.k * row.k));
        EXPECT_EQ(row.order.value, row.k * row.k + 1);
    }
    for (const auto& d : r.disjointness) {
        EXPECT_TRUE(d.violations.empty());
        EXPECT_TRUE(d.nesting_violations.empty());
    }
}

TEST(Chain, SecondMaskMemberships) {
    ChainReport r = chain_report(2, 8);
    const ChainLevel& f2 = r.levels[1];
    EXPECT_EQ(f2.n, 2u);
    EXPECT_EQ(f2.in_i_n.kind, KrullVerdict::Kind::CertifiedIn);
    EXPECT_EQ(f2.in_M_n.kind, KrullVerdict::Kind::CertifiedOut);
}

TEST(Chain, ConstantOneSeparatesSets) {
    EXPECT_EQ(membership_M_n(one(1), 1).kind, KrullVerdict::Kind::CertifiedIn);
    EXPECT_EQ(membership_i_n(one(1), 1).kind, KrullVerdict::Kind::CertifiedOut);
}

TEST(Chain, RejectsBadArguments) {
    EXPECT_ANY_THROW(chain_report(0, 10));
    EXPECT_ANY_THROW(chain_report(1, 7));
}

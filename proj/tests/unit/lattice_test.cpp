#include "sprime/gaussian.hpp"
#include "sprime/lattice.hpp"

#include "../support/generators.hpp"
#include "../support/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace sprime;

TEST(Norm, ZeroPoint) { EXPECT_EQ(norm1(Point{0, 0}), 0); }
TEST(Norm, MixedSigns) { EXPECT_EQ(norm1(Point{3, -4}), 7); }
TEST(Norm, ThreeOnes) { EXPECT_EQ(norm1(Point{1, 1, 1}), 3); }

TEST(Window, OneDimensionalOrder) {
    PointBlock b = enumerate_window({1, 1});
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b.point(0), Point{0});
    EXPECT_EQ(b.point(1), Point{-1});
    EXPECT_EQ(b.point(2), Point{1});
}

TEST(Window, RadiusZeroIsOrigin) {
    PointBlock b = enumerate_window({2, 0});
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b.point(0), (Point{0, 0}));
}

TEST(Window, UnitBallInPlaneHasFivePoints) { EXPECT_EQ(enumerate_window({2, 1}).size(), 5u); }

TEST(Window, MatchesNestedLoopBall) {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (Coord r = 0; r <= 6; ++r) {
            auto expected = oracle::ball(d, r);
            PointBlock b = enumerate_window({d, r});
            ASSERT_EQ(b.size(), expected.size()) << "d=" << d << " r=" << r;
            EXPECT_EQ(crosspolytope_count(d, r), expected.size());
            std::vector<Point> got;
            for (std::size_t i = 0; i < b.size(); ++i) got.push_back(b.point(i));
            EXPECT_TRUE(std::is_sorted(got.begin(), got.end(),
                                       [](const Point& a, const Point& c) { return canonical_less(a, c); }));
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            EXPECT_EQ(got, expected);
        }
    }
}

TEST(Window, ShellsPartitionTheBall) {
    for (Coord r = 0; r <= 5; ++r) {
        std::size_t total = 0;
        for (Coord s = 0; s <= r; ++s) {
            PointBlock shell = enumerate_shell(3, s);
            for (std::size_t i = 0; i < shell.size(); ++i) EXPECT_EQ(norm1(shell[i]), s);
            total += shell.size();
        }
        EXPECT_EQ(total, crosspolytope_count(3, r));
    }
}

TEST(Gaussian, SquaredMagnitude) {
    EXPECT_EQ(squared_magnitude(GaussianRational(0)), 0);
    EXPECT_EQ(squared_magnitude(GaussianRational(3, 4)), 25);
    EXPECT_EQ(squared_magnitude(GaussianRational(Rational(1, 2), Rational(1, 3))), Rational(13, 36));
}

TEST(Gaussian, FieldAxiomsOnRandomValues) {
    gen::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        GaussianRational a = gen::scalar(rng), b = gen::scalar(rng), c = gen::scalar(rng, true);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ(squared_magnitude(a * b), squared_magnitude(a) * squared_magnitude(b));
    }
}

TEST(Gaussian, DivisionByZeroThrows) {
    EXPECT_THROW(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST(RationalText, CanonicalRoundTrip) {
    for (const char* s : {"0", "-3", "7/2", "-1/3"}) EXPECT_EQ(to_canonical_string(parse_rational(s)), s);
    EXPECT_EQ(to_canonical_string(parse_rational("6/4")), "3/2");
    EXPECT_ANY_THROW(parse_rational("1/0"));
    EXPECT_ANY_THROW(parse_rational("abc"));
}

TEST(RationalRoots, CeilRootIsTight) {
    gen::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        Rational q(rng.between(1, 100000), rng.between(1, 50));
        q.canonicalize();
        for (unsigned p : {1u, 2u, 4u}) {
            Integer r = ceil_root(q, p);
            EXPECT_GE(pow(Rational(r), p), q);
            if (r > 1) EXPECT_LT(pow(Rational(r - 1), p), q);
        }
        EXPECT_GE(sqrt_upper(q) * sqrt_upper(q), q);
        EXPECT_LE(sqrt_lower(q) * sqrt_lower(q), q);
    }
}

#include "sprime/errors.hpp"
#include "sprime/evaluator.hpp"
#include "sprime/serialize.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

using namespace sprime;

TEST(Serialize, ConstantOne) {
    EXPECT_EQ(to_json(one(1)), Json::parse(R"({"kind":"const","re":"1","im":"0"})"));
    Expr back = parse_expr(R"({"kind":"const","re":"1","im":"0"})");
    EXPECT_TRUE(structurally_equal(back, one(1)));
}

TEST(Serialize, AcceptsIntegersAndFractions) {
    Expr e = parse_expr(R"({"kind":"const","re":3,"im":"-1/2"})");
    EXPECT_EQ(e.as<node::Const>()->value, GaussianRational(3, Rational(-1, 2)));
}

TEST(Serialize, InfersDimensionFromPoints) {
    Expr e = parse_expr(R"({"kind":"dirac","point":[1,2,3]})");
    EXPECT_EQ(e.dim(), 3u);
    EXPECT_EQ(parse_expr(R"({"kind":"pattern_mask","n":1})").dim(), 1u);
    EXPECT_EQ(parse_expr(R"({"kind":"pattern_mask","n":1})", 2).dim(), 2u);
}

TEST(Serialize, RoundTripIsStable) {
    gen::Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        const std::size_t d = static_cast<std::size_t>(rng.between(1, 3));
        Expr f = gen::pool(rng, d, 3);
        if (rng.coin()) f = half_root(quotient(f, gen::pool(rng, d, 1)));
        const std::string text = serialize(f);
        Expr back = parse_expr(text, d);
        EXPECT_TRUE(structurally_equal(back, f)) << text;
        EXPECT_EQ(serialize(back), text);
    }
}

TEST(ParseErrors, ReportLocation) {
    try {
        parse_expr(R"({"kind":"sum","left":{"kind":"const","re":1,"im":0},"right":{"kind":"nope"}})");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.where(), "/right/kind");
    }
}

TEST(ParseErrors, RejectBadInput) {
    EXPECT_THROW(parse_expr(R"({"kind":"const","re":1,"im":0,"extra":1})"), ParseError);
    EXPECT_THROW(parse_expr(R"({"kind":"pattern_mask","n":0})"), ParseError);
    EXPECT_THROW(parse_expr(R"({"kind":"dirac","point":[1.5]})"), ParseError);
    EXPECT_THROW(parse_expr(R"({"kind":"const","re":"1/0","im":0})"), ParseError);
    EXPECT_THROW(parse_expr(R"({"kind":"sum","left":{"kind":"dirac","point":[1]},"right":{"kind":"dirac","point":[1,1]}})"),
                 ParseError);
    EXPECT_THROW(parse_expr(R"({"kind":"magnitude_max_sq","args":[]})"), ParseError);
    EXPECT_THROW(parse_expr(R"([1,2])"), ParseError);
    EXPECT_THROW(parse_expr(R"({"kind":"coord_poly","terms":[{"exp":[65],"re":1,"im":0}]})"), ParseError);
}

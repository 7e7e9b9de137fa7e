#include "sprime/pattern_mask.hpp"
#include "sprime/report.hpp"
#include "sprime/ring_ops.hpp"

#include "../support/generators.hpp"
#include "../support/oracle.hpp"

#include <gtest/gtest.h>

using namespace sprime;

namespace {

const ScanConfig kCfg{Window{1, 12}, kDefaultMCap};

bool scope_ok(const Json& j) { return j.contains("scope") && (j["scope"] == "global" || j["scope"] == "window"); }

}  // namespace

TEST(Report, ScopeOnEveryVerdict) {
    gen::Rng rng(71);
    for (int i = 0; i < 40; ++i) {
        Expr f = gen::pool(rng, 1, 2);
        Expr g = gen::pool(rng, 1, 2);
        const ScanConfig cfg{Window{1, 12}, kDefaultMCap};
        const Json d = to_json(divides(g, f, cfg));
        const Json inv = to_json(is_invertible(f, cfg));
        const Json mem = to_json(ideal_member(f, {g}, cfg));
        ASSERT_TRUE(scope_ok(d)) << d.dump();
        ASSERT_TRUE(scope_ok(inv)) << inv.dump();
        ASSERT_TRUE(scope_ok(mem)) << mem.dump();
        ASSERT_TRUE(scope_ok(to_json(principal_generator({f, g}, cfg))));
        ASSERT_TRUE(scope_ok(to_json(classify_principal_prime(f, cfg))));
        ASSERT_TRUE(scope_ok(to_json(infer_certificate(f))));
    }
}

TEST(Report, DecidedMatchesGlobalScope) {
    gen::Rng rng(72);
    for (int i = 0; i < 40; ++i) {
        Expr f = gen::pool(rng, 1, 2);
        auto v = is_invertible(f, kCfg);
        EXPECT_EQ(is_decided(v), to_json(v)["scope"] == "global");
        auto d = divides(gen::pool(rng, 1, 1), f, kCfg);
        EXPECT_EQ(is_decided(d), to_json(d)["scope"] == "global");
    }
}

TEST(Report, RefutationCarriesPoint) {
    const Json j = to_json(divides(dirac_complement(Point{3}), one(1), kCfg));
    EXPECT_EQ(j["verdict"], "refuted_at_zero");
    EXPECT_EQ(j["point"], Json::array({3}));
    EXPECT_EQ(j["scope"], "global");
}

TEST(Report, ZeroOrderScope) {
    EXPECT_EQ(to_json(ZeroOrder{5, false})["scope"], "global");
    EXPECT_EQ(to_json(ZeroOrder{64, true})["scope"], "window");
}

// Chain rows agree with a direct scan of each mask along the dyadic points.
TEST(Report, ChainRowsAgainstOracle) {
    const ChainReport r = chain_report(2, 10);
    const Json j = to_json(r);
    ASSERT_EQ(j["levels"].size(), 3u);  // masks 1..N+1
    for (const auto& level : j["levels"]) {
        const unsigned n = level["n"];
        for (const auto& row : level["ratios"]) {
            const unsigned k = row["k"];
            const std::uint64_t cap = row["cap"];
            const auto want = oracle::zero_order(pattern_mask(1, n), Point{Coord{1} << k}, cap);
            EXPECT_EQ(row["zero_order"].get<std::uint64_t>(), want.value) << "n=" << n << " k=" << k;
            EXPECT_EQ(row["at_least"].get<bool>(), want.at_least) << "n=" << n << " k=" << k;
        }
    }
    EXPECT_EQ(j["scope"], "global");
}

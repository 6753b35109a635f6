#include <gtest/gtest.h>

#include <random>

#include "ineqlab/error.hpp"
#include "ineqlab/zonogon.hpp"
#include "support/oracles.hpp"

namespace ineqlab {
namespace {

using testing::dense_grid;
using testing::interp;

void expect_vertices(const Zonogon& z, const std::vector<Point>& expected, double tol = 1e-12) {
    const auto& vs = z.vertices();
    ASSERT_EQ(vs.size(), expected.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        EXPECT_NEAR(vs[i].x, expected[i].x, tol) << "vertex " << i;
        EXPECT_NEAR(vs[i].y, expected[i].y, tol) << "vertex " << i;
    }
}

Zonogon chain_of(std::vector<double> values) { return canonical_chain(population_matrix(values)); }

// Random canonical chain from a handful of random generators.
Zonogon random_zonogon(std::mt19937_64& rng, int max_gens = 6) {
    std::uniform_int_distribution<int> count(1, max_gens);
    return chain_of(testing::random_values(rng, static_cast<std::size_t>(count(rng)), 0.0, 10.0));
}

TEST(CanonicalChain, SortsBySlope) {
    expect_vertices(canonical_chain(WeightedColumns({{0.5, 0.25}, {0.5, 0.75}})), {{0, 0}, {0.5, 0.75}, {1, 1}});
}

TEST(CanonicalChain, Bottom) { expect_vertices(canonical_chain(bottom()), {{0, 0}, {1, 1}}); }

TEST(CanonicalChain, EqualSlopesMerge) {
    expect_vertices(canonical_chain(WeightedColumns({{0.25, 0.25}, {0.25, 0.25}, {0.5, 0.5}})), {{0, 0}, {1, 1}});
}

TEST(CanonicalChain, ZeroWeightColumnIsInitialVerticalEdge) {
    const auto z = canonical_chain(WeightedColumns({{0.0, 0.2}, {1.0, 0.8}}));
    expect_vertices(z, {{0, 0}, {0, 0.2}, {1, 1}});
    EXPECT_DOUBLE_EQ(z.upper(0.0), 0.2);
    EXPECT_DOUBLE_EQ(z.upper(0.5), 0.6);
}

TEST(CanonicalChain, MatchesConvexHullOracle) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto vals = testing::random_values(rng, 1 + trial % 6);
        const auto cols = population_matrix(vals);
        std::vector<Vec2> gens;
        for (const auto& c : cols) gens.push_back({c.weight, c.share});
        const auto pts = testing::subset_sums(gens);
        const auto z = canonical_chain(cols);
        for (double x : dense_grid(101)) EXPECT_NEAR(z.upper(x), testing::hull_height(pts, x), 1e-12);
    }
}

TEST(CanonicalChain, SlopesStrictlyDecreasing) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const auto z = chain_of(testing::random_values(rng, 1 + trial % 30));
        const auto es = z.edges();
        for (std::size_t i = 1; i < es.size(); ++i) EXPECT_GT(es[i - 1].y * es[i].x, es[i].y * es[i - 1].x);
    }
}

TEST(FromVertices, Validation) {
    EXPECT_NO_THROW(Zonogon::from_vertices({{0, 0}, {0.2, 0.6}, {1, 1}}));
    EXPECT_THROW(Zonogon::from_vertices({{0, 0}, {0.2, 0.1}, {1, 1}}), InputError); // convex, not concave
    EXPECT_THROW(Zonogon::from_vertices({{0.1, 0}, {1, 1}}), InputError);
    EXPECT_THROW(Zonogon::from_vertices({{0, 0}, {0.5, 0.9}}), InputError);
}

TEST(Order, BottomBelowEverything) {
    EXPECT_EQ(order(Zonogon(), Zonogon()), OrderRelation::Equal);
    EXPECT_EQ(order(Zonogon(), chain_of({1, 3})), OrderRelation::StrictlyBelow);
    EXPECT_EQ(order(chain_of({1, 3}), Zonogon()), OrderRelation::StrictlyAbove);
}

TEST(Order, PigouDaltonTransferIsBelow) {
    EXPECT_EQ(order(chain_of({1.5, 2.5}), chain_of({1, 3})), OrderRelation::StrictlyBelow);
}

TEST(Order, CrossingChainsIncomparable) {
    const auto a = Zonogon::from_vertices({{0, 0}, {0.2, 0.6}, {1, 1}});
    const auto b = Zonogon::from_vertices({{0, 0}, {0.6, 0.9}, {1, 1}});
    EXPECT_EQ(order(a, b), OrderRelation::Incomparable);
    // Dense pointwise oracle agrees that the chains cross.
    bool a_above = false, b_above = false;
    for (double x : dense_grid()) {
        a_above |= a.upper(x) > b.upper(x) + 1e-9;
        b_above |= b.upper(x) > a.upper(x) + 1e-9;
    }
    EXPECT_TRUE(a_above && b_above);
}

TEST(Order, PartialOrderProperties) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_zonogon(rng);
        const auto b = random_zonogon(rng);
        const auto c = random_zonogon(rng);
        EXPECT_EQ(order(a, a), OrderRelation::Equal);
        const auto ab = order(a, b);
        const auto ba = order(b, a);
        if (ab == OrderRelation::StrictlyBelow) {
            EXPECT_EQ(ba, OrderRelation::StrictlyAbove);
        }
        if (ab == OrderRelation::Incomparable) {
            EXPECT_EQ(ba, OrderRelation::Incomparable);
        }
        if (below_or_equal(a, b) && below_or_equal(b, c)) {
            EXPECT_TRUE(below_or_equal(a, c));
        }
    }
}

TEST(Meet, CrossingExample) {
    const auto a = Zonogon::from_vertices({{0, 0}, {0.2, 0.6}, {1, 1}});
    const auto b = Zonogon::from_vertices({{0, 0}, {0.6, 0.9}, {1, 1}});
    const auto m = meet(a, b);
    expect_vertices(m, {{0, 0}, {0.5, 0.75}, {1, 1}});
    for (double x : dense_grid()) EXPECT_NEAR(m.upper(x), std::min(a.upper(x), b.upper(x)), 1e-12);
}

TEST(Meet, IdempotentAndBottomAbsorbs) {
    const auto z = chain_of({1, 2, 7});
    expect_vertices(meet(z, z), z.vertices());
    EXPECT_TRUE(meet(z, Zonogon()).is_bottom());
}

TEST(Meet, GreatestLowerBoundProperties) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_zonogon(rng);
        const auto b = random_zonogon(rng);
        const auto m = meet(a, b);
        EXPECT_TRUE(below_or_equal(m, a));
        EXPECT_TRUE(below_or_equal(m, b));
        EXPECT_EQ(order(m, meet(b, a)), OrderRelation::Equal);
        for (double x : dense_grid(501)) EXPECT_NEAR(m.upper(x), std::min(a.upper(x), b.upper(x)), 1e-12);
        if (below_or_equal(a, b)) {
            EXPECT_EQ(order(m, a), OrderRelation::Equal);
        }
        // Any chain below both lies below the meet.
        const auto c = meet(random_zonogon(rng), m);
        EXPECT_TRUE(below_or_equal(c, m));
    }
}

TEST(Join, UpperHullOfBoth) {
    const auto a = Zonogon::from_vertices({{0, 0}, {0.2, 0.6}, {1, 1}});
    const auto b = Zonogon::from_vertices({{0, 0}, {0.6, 0.9}, {1, 1}});
    const auto j = join(a, b);
    expect_vertices(j, {{0, 0}, {0.2, 0.6}, {0.6, 0.9}, {1, 1}});
    EXPECT_TRUE(below_or_equal(a, j));
    EXPECT_TRUE(below_or_equal(b, j));
}

TEST(Join, LeastUpperBoundProperties) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_zonogon(rng);
        const auto b = random_zonogon(rng);
        const auto j = join(a, b);
        EXPECT_TRUE(below_or_equal(a, j));
        EXPECT_TRUE(below_or_equal(b, j));
        // Hull oracle over the union of vertices.
        std::vector<Point> pts = a.vertices();
        pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
        for (double x : dense_grid(201)) EXPECT_NEAR(j.upper(x), testing::hull_height(pts, x), 1e-12);
    }
}

TEST(MinkowskiSum, Examples) {
    const auto z = chain_of({1, 3});
    const Zonogon single[] = {z};
    expect_vertices(minkowski_sum(single), z.vertices());
    const Zonogon bots[] = {Zonogon(), Zonogon()};
    EXPECT_TRUE(minkowski_sum(bots).is_bottom());
    const Zonogon pair[] = {z, Zonogon()};
    expect_vertices(minkowski_sum(pair), {{0, 0}, {0.25, 0.375}, {0.75, 0.875}, {1, 1}});
}

TEST(MinkowskiSum, MatchesSubsetSumOracle) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_zonogon(rng, 3);
        const auto b = random_zonogon(rng, 3);
        const Zonogon zs[] = {a, b};
        const auto sum = minkowski_sum(zs);
        std::vector<Vec2> gens;
        for (const auto& z : zs) {
            for (const auto& e : z.edges()) gens.push_back({e.x / 2, e.y / 2});
        }
        const auto pts = testing::subset_sums(gens);
        for (double x : dense_grid(101)) EXPECT_NEAR(sum.upper(x), testing::hull_height(pts, x), 1e-12);
    }
}

TEST(ZonogonInvariance, RelabelDuplicateScale) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto vals = testing::random_values(rng, 1 + trial % 25);
        const auto z = chain_of(vals);
        auto perm = vals;
        std::shuffle(perm.begin(), perm.end(), rng);
        auto dup = vals;
        dup.insert(dup.end(), vals.begin(), vals.end());
        auto scaled = vals;
        for (auto& v : scaled) v *= 3.7;
        EXPECT_EQ(order(z, chain_of(perm)), OrderRelation::Equal);
        EXPECT_EQ(order(z, chain_of(dup)), OrderRelation::Equal);
        EXPECT_EQ(order(z, chain_of(scaled)), OrderRelation::Equal);
        const Zonogon twice[] = {z, z};
        EXPECT_EQ(order(z, minkowski_sum(twice)), OrderRelation::Equal);
    }
}

} // namespace
} // namespace ineqlab

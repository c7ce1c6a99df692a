#include "oracles.hh"

#include <l21/colouring.hh>
#include <l21/errors.hh>

#include <gtest/gtest.h>

#include <algorithm>

using namespace l21;

namespace {

constexpr Colour B = Colour::Black;
constexpr Colour W = Colour::White;

Graph cycle(int n)
{
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(Role::Original);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

std::uint64_t mask_of(const TwoColouring& c)
{
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < c.size(); ++v)
        if (c[v] == W)
            m |= std::uint64_t{1} << v;
    return m;
}

} // namespace

TEST(Colouring, VerifyOnCycles)
{
    EXPECT_TRUE(verify_2cpm(cycle(4), {B, B, W, W}));
    EXPECT_FALSE(verify_2cpm(cycle(4), {B, W, B, W}));
    EXPECT_FALSE(verify_2cpm(cycle(4), {B, B, B, W}));
    EXPECT_FALSE(verify_2cpm(cycle(3), {B, B, W}));
    EXPECT_THROW(verify_2cpm(cycle(4), {B, B}), ValidationError);
}

TEST(Colouring, AlmostModeIgnoresLeaves)
{
    Graph g = cycle(4);
    const VertexId leaf = g.add_vertex(Role::Pendant);
    g.add_edge(0, leaf);
    // Vertex 0 has one same-coloured neighbour on the cycle; the leaf is free.
    EXPECT_TRUE(verify_almost_2cpm(g, {B, B, W, W, W}));
    EXPECT_FALSE(verify_2cpm(g, {B, B, W, W, W}));
}

TEST(Colouring, EnumerationMatchesSweepOracleOnRandomGraphs)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 15;
        const Graph g = oracle::random_graph(rng, n, trial % 2 ? 0.25 : 0.4);
        const auto want = oracle::almost_matchings(g);

        std::vector<std::uint64_t> got;
        for (const auto& c : enumerate_almost_2cpm(g))
            got.push_back(mask_of(c));
        EXPECT_EQ(got, want) << "trial " << trial;

        std::vector<std::uint64_t> swept;
        for (const auto& c : enumerate_almost_2cpm_sweep(g, Exec::Serial))
            swept.push_back(mask_of(c));
        EXPECT_EQ(swept, want);
        EXPECT_EQ(enumerate_almost_2cpm_sweep(g, Exec::Parallel), enumerate_almost_2cpm_sweep(g, Exec::Serial));
    }
}

TEST(Colouring, SolveAgreesWithSweepOracleOnRandomGraphs)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 15;
        const Graph g = oracle::random_graph(rng, n, 0.15 + 0.05 * (trial % 5));
        const auto found = solve_2cpm(g);
        ASSERT_EQ(found.has_value(), oracle::has_perfect_matching_colouring(g)) << "trial " << trial;
        if (found) {
            EXPECT_TRUE(oracle::matching_ok(g, mask_of(*found), 0));
        }
    }
}

TEST(Colouring, PinsAreRespected)
{
    const Graph g = cycle(8);
    for (Colour c : {B, W}) {
        const auto found = solve_2cpm(g, {{3, c}, {6, opposite(c)}});
        ASSERT_TRUE(found);
        EXPECT_EQ((*found)[3], c);
        EXPECT_EQ((*found)[6], opposite(c));
    }
    // On C4 opposite vertices differ in every 2CPM.
    EXPECT_FALSE(is_extendable(cycle(4), MatchingMode::Perfect, {{0, B}, {2, B}}));
    EXPECT_TRUE(is_extendable(cycle(4), MatchingMode::Perfect, {{0, B}, {2, W}}));
}

TEST(Colouring, EnumerationIsCanonicallyOrdered)
{
    const auto all = enumerate_almost_2cpm(cycle(8));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), canonical_less));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(Colouring, CapacityGuards)
{
    EXPECT_THROW(enumerate_almost_2cpm_sweep(cycle(max_sweep_vertices + 1)), CapacityError);
    EXPECT_THROW(enumerate_almost_2cpm(cycle(max_enumeration_vertices + 1)), CapacityError);
}

TEST(ColouredOrientation, DirectedMonochromaticCycle)
{
    const Graph g = cycle(4);
    ColouredOrientation co{{B, B, B, B}, {}};
    for (int e = 0; e < g.num_edges(); ++e)
        co.orientation.push_back(g.edge(e).u == e ? Orient::Forward : Orient::Backward);
    EXPECT_TRUE(verify_coloured_orientation(g, co, {}));
    EXPECT_TRUE(is_good_orientation(g, co, {}));

    // An out-vertex may not have an incoming arc.
    const std::vector<VertexId> outs{2};
    EXPECT_FALSE(verify_coloured_orientation(g, co, outs));

    co.orientation[0] = Orient::Unoriented;
    EXPECT_FALSE(verify_coloured_orientation(g, co, {}));
    EXPECT_THROW(is_good_orientation(g, co, {}), ValidationError);
}

TEST(ColouredOrientation, OrientedDichromaticEdgeIsStructural)
{
    const Graph g = cycle(4);
    ColouredOrientation co{{B, B, W, W}, std::vector<Orient>(4, Orient::Forward)};
    EXPECT_THROW(verify_coloured_orientation(g, co, {}), InvariantError);
}

TEST(ColouredOrientation, ArcOfFollowsStoredEdgeForm)
{
    const Graph g = cycle(3);
    ColouredOrientation co{{B, B, B}, {Orient::Forward, Orient::Backward, Orient::Unoriented}};
    EXPECT_EQ(arc_of(g, co, 0), (std::pair<VertexId, VertexId>{g.edge(0).u, g.edge(0).v}));
    EXPECT_EQ(arc_of(g, co, 1), (std::pair<VertexId, VertexId>{g.edge(1).v, g.edge(1).u}));
    EXPECT_FALSE(arc_of(g, co, 2));
}

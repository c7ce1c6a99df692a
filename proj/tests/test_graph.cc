#include "oracles.hh"

#include <l21/embedding.hh>
#include <l21/errors.hh>
#include <l21/graph.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace l21;

namespace {

Graph complete(int n)
{
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(Role::Original);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

Graph k33()
{
    Graph g;
    for (int v = 0; v < 6; ++v)
        g.add_vertex(Role::Original);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            g.add_edge(a, b);
    return g;
}

// Triangulated grid drawn on integer points; planar by construction.
std::pair<Graph, std::vector<Point>> grid(int w, int h)
{
    Graph g;
    std::vector<Point> at;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            g.add_vertex(Role::Original);
            at.push_back({double(x), double(y)});
        }
    auto id = [w](int x, int y) { return y * w + x; };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w)
                g.add_edge(id(x, y), id(x + 1, y));
            if (y + 1 < h)
                g.add_edge(id(x, y), id(x, y + 1));
            if (x + 1 < w && y + 1 < h)
                g.add_edge(id(x, y), id(x + 1, y + 1));
        }
    return {g, at};
}

RotationSystem sorted_rotation(const Graph& g)
{
    std::vector<std::vector<VertexId>> order(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        order[v].assign(g.neighbours(v).begin(), g.neighbours(v).end());
        std::sort(order[v].begin(), order[v].end());
    }
    return RotationSystem(order);
}

} // namespace

TEST(Graph, RejectsLoopsParallelEdgesAndUnknownVertices)
{
    Graph g;
    g.add_vertex(Role::Original, "x");
    g.add_vertex(Role::Pendant, "y");
    EXPECT_EQ(g.add_edge(1, 0), 0);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
    EXPECT_THROW(g.add_edge(0, 1), ValidationError);
    EXPECT_THROW(g.add_edge(1, 1), ValidationError);
    EXPECT_THROW(g.add_edge(0, 5), ValidationError);
    EXPECT_EQ(g.role(1), Role::Pendant);
    EXPECT_EQ(g.name(0), "x");
}

TEST(Graph, RoleNamesRoundTrip)
{
    for (Role r : {Role::Original, Role::CycleVertex, Role::InVertex, Role::OutVertex, Role::GadgetInternal,
             Role::Pendant, Role::Port, Role::Gate})
        EXPECT_EQ(role_from_name(role_name(r)), r);
    EXPECT_THROW(role_from_name("nonsense"), ValidationError);
}

TEST(Graph, DistanceTwoListsMatchAdjacencyOracle)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(rng, 3 + trial % 10, 0.3);
        const auto adj = oracle::adjacency(g);
        const auto lists = g.distance_two_lists();
        for (int v = 0; v < g.num_vertices(); ++v) {
            std::vector<VertexId> want;
            for (int w = 0; w < g.num_vertices(); ++w) {
                if (w == v || adj[v][w])
                    continue;
                for (int x = 0; x < g.num_vertices(); ++x)
                    if (adj[v][x] && adj[w][x]) {
                        want.push_back(w);
                        break;
                    }
            }
            EXPECT_EQ(lists[v], want);
        }
    }
}

TEST(Graph, ComponentsAndRegularity)
{
    Graph g = complete(4);
    const VertexId a = g.add_vertex(Role::Original);
    const VertexId b = g.add_vertex(Role::Original);
    g.add_edge(a, b);
    const auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], (std::vector<VertexId>{0, 1, 2, 3}));
    EXPECT_EQ(comps[1], (std::vector<VertexId>{4, 5}));
    EXPECT_TRUE(check_regular(complete(4), 3));
    EXPECT_FALSE(check_regular(g, 3));
    EXPECT_TRUE(check_regular(Graph{}, 3));
}

TEST(Graph, WithoutEdgeAndInduced)
{
    const Graph g = complete(4);
    const Graph h = g.without_edge(2, 1);
    EXPECT_EQ(h.num_edges(), 5);
    EXPECT_FALSE(h.has_edge(1, 2));
    EXPECT_THROW(h.without_edge(1, 2), ValidationError);
    const std::vector<VertexId> keep{3, 0, 2};
    const Graph t = g.induced(keep);
    EXPECT_EQ(t.num_vertices(), 3);
    EXPECT_EQ(t.num_edges(), 3);
}

TEST(Embedding, DrawingOfK4IsPlanarWithFourFaces)
{
    const Graph g = complete(4);
    const std::vector<Point> at{{0, 0}, {4, 0}, {2, 4}, {2, 1}};
    const auto rot = rotation_from_drawing(g, at);
    EXPECT_TRUE(verify_planar(g, rot));
    EXPECT_EQ(faces(g, rot).size(), 4u);
}

TEST(Embedding, EveryDartLiesOnExactlyOneFace)
{
    auto [g, at] = grid(5, 4);
    const auto rot = rotation_from_drawing(g, at);
    std::vector<Dart> seen;
    for (const auto& walk : faces(g, rot))
        seen.insert(seen.end(), walk.begin(), walk.end());
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen.size(), 2u * g.num_edges());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
    EXPECT_TRUE(verify_planar(g, rot));
}

TEST(Embedding, NonPlanarGraphsFailForAnyRotation)
{
    for (const Graph& g : {complete(5), k33()}) {
        RotationSystem rot = sorted_rotation(g);
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            EXPECT_FALSE(verify_planar(g, rot));
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                std::shuffle(rot.mutable_around(v).begin(), rot.mutable_around(v).end(), rng);
        }
    }
}

TEST(Embedding, SwappingTwoNeighboursBreaksAPlanarDrawing)
{
    auto [g, at] = grid(4, 4);
    auto rot = rotation_from_drawing(g, at);
    const VertexId centre = 5;
    ASSERT_GE(g.degree(centre), 4);
    std::swap(rot.mutable_around(centre)[0], rot.mutable_around(centre)[1]);
    EXPECT_FALSE(verify_planar(g, rot));
}

TEST(Embedding, ComponentsAreCheckedSeparately)
{
    // Two disjoint drawn triangles: Euler holds per component, not for the union taken whole.
    Graph g;
    std::vector<Point> at;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < 3; ++i) {
            g.add_vertex(Role::Original);
            const double t = 2 * std::numbers::pi * i / 3;
            at.push_back({10.0 * c + std::cos(t), std::sin(t)});
        }
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < 3; ++i)
            g.add_edge(3 * c + i, 3 * c + (i + 1) % 3);
    EXPECT_TRUE(verify_planar(g, rotation_from_drawing(g, at)));
}

TEST(Embedding, ValidateRejectsForeignNeighbours)
{
    const Graph g = complete(3);
    const RotationSystem bad({{1, 2}, {0, 2}, {0, 0}});
    EXPECT_THROW(bad.validate(g), ValidationError);
    EXPECT_THROW(verify_planar(g, RotationSystem({{1, 2}})), ValidationError);
}

#include "oracles.hh"

#include <l21/errors.hh>
#include <l21/gadgets.hh>
#include <l21/labelling.hh>

#include <gtest/gtest.h>

using namespace l21;

namespace {

Graph path(int n)
{
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(Role::Original);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n)
{
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

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

Graph star(int leaves)
{
    Graph g;
    g.add_vertex(Role::Original);
    for (int i = 0; i < leaves; ++i)
        g.add_edge(0, g.add_vertex(Role::Original));
    return g;
}

int oracle_min_span(const Graph& g)
{
    for (int k = 0;; ++k)
        if (oracle::LabelSearch(g, k).feasible())
            return k;
}

} // namespace

TEST(Labelling, VerifierReportsTheFirstConflict)
{
    const Graph g = path(3);
    EXPECT_TRUE(verify_labelling(g, {4, {0, 2, 4}}));
    EXPECT_FALSE(verify_labelling(g, {4, {0, 1, 3}}));
    EXPECT_FALSE(verify_labelling(g, {4, {0, 3, 0}}));
    EXPECT_NE(explain_labelling(g, {4, {0, 3, 0}}), "");
    EXPECT_THROW(verify_labelling(g, {4, {0, 2, 5}}), ValidationError);
    EXPECT_THROW(verify_labelling(g, {4, {0, 2}}), ValidationError);
}

TEST(Labelling, KnownSpansOfSmallFamilies)
{
    // Griggs and Yeh: paths, cycles, complete graphs and stars.
    EXPECT_EQ(compute_min_span(path(2)), 2);
    EXPECT_EQ(compute_min_span(path(4)), 3);
    EXPECT_EQ(compute_min_span(path(5)), 4);
    for (int n = 3; n <= 9; ++n)
        EXPECT_EQ(compute_min_span(cycle(n)), 4) << n;
    for (int n = 2; n <= 6; ++n)
        EXPECT_EQ(compute_min_span(complete(n)), 2 * (n - 1)) << n;
    for (int d = 1; d <= 6; ++d)
        EXPECT_EQ(compute_min_span(star(d)), d + 1) << d;
}

TEST(Labelling, SolverBruteForceAndOracleAgreeOnRandomGraphs)
{
    std::mt19937_64 rng(42);
    int sat = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 9;
        const int k = 4 + trial % 3;
        const Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (trial % 4));
        const bool want = oracle::LabelSearch(g, k).feasible();

        const auto fast = solve_labelling(g, k);
        const auto brute = solve_labelling_bruteforce(g, k, {}, Exec::Serial);
        const auto brute_par = solve_labelling_bruteforce(g, k, {}, Exec::Parallel);
        ASSERT_NE(fast.outcome, Outcome::Exhausted);
        EXPECT_EQ(fast.outcome == Outcome::Sat, want) << "trial " << trial;
        EXPECT_EQ(brute.outcome == Outcome::Sat, want) << "trial " << trial;
        EXPECT_EQ(brute.witness, brute_par.witness);
        if (fast.witness) {
            EXPECT_TRUE(oracle::labelling_ok(g, fast.witness->labels, k));
        }
        sat += want;
    }
    // The sample should exercise both outcomes.
    EXPECT_GT(sat, 20);
    EXPECT_LT(sat, 180);
}

TEST(Labelling, BruteForceFindsTheLexicographicallyFirstLabelling)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(rng, 3 + trial % 5, 0.4);
        std::optional<std::vector<int>> first;
        oracle::LabelSearch(g, 5).run([&](const std::vector<int>& labels) {
            first = labels;
            return false;
        });
        const auto brute = solve_labelling_bruteforce(g, 5);
        ASSERT_EQ(brute.witness.has_value(), first.has_value());
        if (first) {
            EXPECT_EQ(brute.witness->labels, *first);
        }
    }
}

TEST(Labelling, EnumerationCountMatchesOracle)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(rng, 3 + trial % 4, 0.5);
        std::int64_t want = 0;
        oracle::LabelSearch(g, 4).run([&](const std::vector<int>&) {
            ++want;
            return true;
        });
        std::int64_t got = 0;
        for_each_labelling(g, 4, {}, unlimited, [&](const std::vector<int>& labels) {
            EXPECT_TRUE(oracle::labelling_ok(g, labels, 4));
            ++got;
            return true;
        });
        EXPECT_EQ(got, want);
    }
}

TEST(Labelling, PinsAreHonouredAndChecked)
{
    const Graph g = cycle(6);
    // 4,2,0,4,2,0 is the only way round C6 within span 4 that starts at 4.
    const auto r = solve_labelling(g, 4, {{0, 4}, {3, 4}});
    ASSERT_EQ(r.outcome, Outcome::Sat);
    EXPECT_EQ(r.witness->labels[0], 4);
    EXPECT_EQ(r.witness->labels[3], 4);
    EXPECT_EQ(solve_labelling(g, 4, {{0, 4}, {3, 0}}).outcome, Outcome::Unsat);
    // Adjacent vertices pinned one apart.
    EXPECT_EQ(solve_labelling(g, 4, {{0, 1}, {1, 2}}).outcome, Outcome::Unsat);
    EXPECT_THROW(solve_labelling(g, 4, {{9, 1}}), ValidationError);
    EXPECT_THROW(solve_labelling(g, 4, {{0, 5}}), ValidationError);
}

TEST(Labelling, BudgetExhaustionIsReported)
{
    // K6 needs span 10; refuting span 9 takes more than a handful of tries.
    const auto r = solve_labelling(complete(6), 9, {}, 5);
    EXPECT_EQ(r.outcome, Outcome::Exhausted);
    EXPECT_LE(r.nodes, 5);
    EXPECT_FALSE(r.witness);
    EXPECT_EQ(compute_min_span(complete(6), 3), std::nullopt);
    EXPECT_THROW(solve_labelling(complete(3), 4, {}, 0), ValidationError);
}

TEST(Labelling, CapacityGuards)
{
    EXPECT_THROW(solve_labelling(path(3), max_span + 1), CapacityError);
    EXPECT_THROW(solve_labelling_bruteforce(path(20), 4), CapacityError);
}

TEST(Labelling, OutcomeNames)
{
    EXPECT_EQ(outcome_name(Outcome::Sat), "Sat");
    EXPECT_EQ(outcome_name(Outcome::Unsat), "Unsat");
    EXPECT_EQ(outcome_name(Outcome::Exhausted), "Exhausted");
}

TEST(Labelling, BoundaryBehaviourOfThePathGadgetMatchesOracle)
{
    const auto g4 = build_edge_gadget(4);
    const auto got = enumerate_boundary_behaviour(g4.graph, g4.ports, 4, {0, 4}, Exec::Serial);
    std::set<BoundaryTuple> want;
    const VertexId u = port(g4.ports, "u"), v = port(g4.ports, "v"), au = port(g4.ports, "a_u"),
                   av = port(g4.ports, "a_v");
    oracle::LabelSearch(g4.graph, 4).run([&](const std::vector<int>& L) {
        if ((L[u] == 0 || L[u] == 4) && (L[v] == 0 || L[v] == 4))
            want.insert({L[u], L[v], L[au], L[av]});
        return true;
    });
    EXPECT_EQ(std::set<BoundaryTuple>(got.begin(), got.end()), want);
    EXPECT_EQ(enumerate_boundary_behaviour(g4.graph, g4.ports, 4, {0, 4}, Exec::Parallel), got);
}

TEST(Labelling, MinimumSpanMatchesOracleOnRandomGraphs)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 6, 0.45);
        EXPECT_EQ(compute_min_span(g), oracle_min_span(g)) << "trial " << trial;
    }
}

#include "corpus.hh"
#include "oracles.hh"

#include <l21/chords.hh>
#include <l21/errors.hh>
#include <l21/reduction.hh>
#include <l21/witness.hh>

#include <gtest/gtest.h>

using namespace l21;

namespace {

Nae3SatFormula formula(const std::string& text) { return parse_formula(text); }

Nae3SatFormula random_formula(std::mt19937_64& rng, int vars, int clauses)
{
    std::uniform_int_distribution<int> pick(1, vars);
    std::bernoulli_distribution sign(0.5);
    Nae3SatFormula f;
    f.num_vars = vars;
    for (int c = 0; c < clauses; ++c) {
        Clause clause;
        for (auto& lit : clause)
            lit = {pick(rng), sign(rng)};
        f.clauses.push_back(clause);
    }
    return f;
}

bool identifying_monochromatic(const PlanarStage& planar, const TwoColouring& c)
{
    for (int e : planar.identifying)
        if (c[planar.graph.edge(e).u] != c[planar.graph.edge(e).v])
            return false;
    return true;
}

} // namespace

TEST(Monotone, PreservesSatisfiabilityAndSolutions)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_formula(rng, 1 + trial % 4, 1 + trial % 3);
        const auto m = monotonize(f);
        for (const auto& clause : m.formula.clauses)
            for (const auto& lit : clause)
                EXPECT_TRUE(lit.positive);
        // Each partner variable is forced, so solutions correspond one to one.
        EXPECT_EQ(oracle::nae_solutions(m.formula).size(), oracle::nae_solutions(f).size());
        for (const auto& value : oracle::nae_solutions(f)) {
            const Assignment a{value};
            const Assignment ext = extend_assignment(m, a);
            EXPECT_TRUE(oracle::nae_ok(m.formula, ext.values));
            EXPECT_EQ(project_assignment(m, ext), a);
        }
    }
}

TEST(Cubic, SingleClauseFormulaIsOneBlock)
{
    const auto cubic = nae_to_cubic(formula("p cnf 1 1\n1 1 1 0\n"));
    EXPECT_EQ(cubic.graph.num_vertices(), block_size);
    EXPECT_EQ(cubic.identifying.size(), 3u);
    EXPECT_TRUE(check_regular(cubic.graph, 3));
    EXPECT_TRUE(verify_planar(cubic.graph, cubic.rot));
    EXPECT_NO_THROW(validate_chords(cubic.chords));
}

TEST(Cubic, RejectsNegativeLiteralsAndEmptyFormulas)
{
    EXPECT_THROW(nae_to_cubic(formula("p cnf 3 1\n1 -2 3 0\n")), ValidationError);
    EXPECT_THROW(nae_to_cubic(formula("p cnf 3 0\n")), ValidationError);
}

TEST(Cubic, ChordsLinkConsecutiveOccurrences)
{
    const auto m = monotonize(formula("p cnf 4 3\n1 2 3 0\n2 3 4 0\n3 4 1 0\n"));
    const auto cubic = nae_to_cubic(m.formula);
    const auto& cs = cubic.chords;
    EXPECT_EQ(cs.num_blocks, 3);
    EXPECT_EQ(cs.chords.size(), 9u);
    for (const auto& chord : cs.chords) {
        EXPECT_LT(chord.low, chord.high);
        EXPECT_EQ(cubic.literal[cs.slot_vertex[chord.low]], chord.var);
        EXPECT_EQ(cubic.literal[cs.slot_vertex[chord.high]], chord.var);
    }
    // Chord endpoints are joined in G.
    for (std::size_t i = 0; i < cs.chords.size(); ++i) {
        const Edge& e = cubic.graph.edge(cubic.identifying[i]);
        EXPECT_EQ(e, make_edge(cs.slot_vertex[cs.chords[i].low], cs.slot_vertex[cs.chords[i].high]));
    }
}

TEST(Chords, InterleavingAndCrossingSigns)
{
    ChordSystem cs;
    cs.num_blocks = 1;
    cs.slot_x = {0, 1, 2, 3, 4, 5};
    cs.chords = {{0, 2, 1}, {1, 4, 2}, {3, 5, 3}};
    cs.chord_of_slot = {0, 1, 0, 2, 1, 2};
    cs.slot_port.assign(6, "q");
    cs.slot_vertex.assign(6, 0);
    EXPECT_TRUE(chords_interleave(cs.chords[0], cs.chords[1]));
    EXPECT_TRUE(chords_interleave(cs.chords[1], cs.chords[2]));
    EXPECT_FALSE(chords_interleave(cs.chords[0], cs.chords[2]));
    EXPECT_EQ(count_interleaving(cs), 2);
    EXPECT_EQ(crossing_sign(cs, cs.chords[0], cs.chords[1]), -crossing_sign(cs, cs.chords[1], cs.chords[0]));
    EXPECT_NE(compare_along(cs, cs.chords[1], cs.chords[0], cs.chords[2]), 0);
    EXPECT_EQ(compare_along(cs, cs.chords[1], cs.chords[0], cs.chords[2]),
        -compare_along(cs, cs.chords[1], cs.chords[2], cs.chords[0]));

    cs.chord_of_slot[5] = 0;
    EXPECT_THROW(validate_chords(cs), ValidationError);
}

TEST(Planarize, OneUncrossingGadgetPerCrossing)
{
    for (const auto& entry : corpus::load()) {
        const auto m = monotonize(entry.formula);
        const auto cubic = nae_to_cubic(m.formula);
        const auto planar = planarize(cubic);
        EXPECT_EQ(static_cast<int>(planar.crossings.size()), count_interleaving(cubic.chords)) << entry.name;
        EXPECT_EQ(planar.graph.num_vertices(), cubic.graph.num_vertices() + 24 * static_cast<int>(planar.crossings.size()));
        EXPECT_TRUE(check_regular(planar.graph, 3)) << entry.name;
        EXPECT_TRUE(verify_planar(planar.graph, planar.rot)) << entry.name;
        // Each crossing cuts both chords once more.
        EXPECT_EQ(planar.identifying.size(), cubic.identifying.size() + 2 * planar.crossings.size());
        for (VertexId v = 0; v < cubic.graph.num_vertices(); ++v)
            EXPECT_EQ(planar.literal[v], cubic.literal[v]);
    }
}

TEST(Planarize, NoCrossingsLeavesTheGraphUnchanged)
{
    const auto cubic = nae_to_cubic(formula("p cnf 3 1\n1 2 3 0\n"));
    ASSERT_EQ(count_interleaving(cubic.chords), 0);
    const auto planar = planarize(cubic);
    EXPECT_EQ(planar.graph, cubic.graph);
    EXPECT_EQ(planar.rot, cubic.rot);
}

TEST(Auxiliary, CountsAndStructure)
{
    for (const auto& entry : corpus::load()) {
        const auto trace = reduce(entry.formula, 4, Stage::Aux);
        const int n = trace.planar.graph.num_vertices();
        const Graph& h = trace.aux.graph;
        EXPECT_EQ(h.num_vertices(), 10 * n) << entry.name;
        EXPECT_EQ(h.num_edges(), 12 * n) << entry.name;
        EXPECT_TRUE(verify_planar(h, trace.aux.rot));
        EXPECT_EQ(static_cast<int>(out_vertices_of(h).size()), trace.planar.graph.num_edges());
        const auto aux = aux_edges_of(h);
        ASSERT_EQ(aux.size(), trace.aux.aux.size());
        for (const auto& a : aux) {
            EXPECT_TRUE(h.has_edge(a.x, a.cx));
            EXPECT_TRUE(h.has_edge(a.cy, a.y));
            EXPECT_TRUE(h.has_edge(a.cx, a.top) && h.has_edge(a.top, a.cy));
            EXPECT_TRUE(h.has_edge(a.cx, a.bottom) && h.has_edge(a.bottom, a.cy));
            EXPECT_EQ(h.role(a.in), Role::InVertex);
            EXPECT_EQ(h.role(a.out), Role::OutVertex);
            EXPECT_EQ(h.degree(a.in), 1);
            EXPECT_EQ(h.degree(a.out), 1);
        }
        EXPECT_FALSE(trace.instance.has_value());
    }
}

TEST(Instance, DegreesAndPlanarity)
{
    const auto f = corpus::load().front().formula;
    for (int k = 4; k <= 7; ++k) {
        const auto trace = reduce(f, k);
        ASSERT_TRUE(trace.instance);
        const auto& st = *trace.instance;
        EXPECT_TRUE(verify_planar(st.graph, st.rot));
        for (VertexId v = 0; v < st.h_vertices; ++v)
            EXPECT_EQ(st.graph.degree(v), k - 1) << "k=" << k << " v=" << v;
        EXPECT_EQ(st.h_vertices, trace.aux.graph.num_vertices());
        EXPECT_EQ(static_cast<int>(st.gadget_base.size()), trace.aux.graph.num_edges());
    }
}

TEST(Reduce, StageNamesAndValidation)
{
    for (Stage s : {Stage::Cubic, Stage::Planar, Stage::Aux, Stage::Instance})
        EXPECT_EQ(stage_from_name(stage_name(s)), s);
    EXPECT_THROW(stage_from_name("final"), ValidationError);
    EXPECT_THROW(reduce(formula("p cnf 3 1\n1 2 3 0\n"), 3), ValidationError);
    const auto trace = reduce(formula("p cnf 3 1\n1 2 3 0\n"), 4, Stage::Planar);
    EXPECT_EQ(trace.reached, Stage::Planar);
    const auto manifest = provenance_manifest(trace);
    EXPECT_TRUE(manifest.contains("crossings"));
    EXPECT_FALSE(manifest["stages"].contains("aux"));
}

TEST(Reduce, CensusOfTheRepeatedLiteralClause)
{
    const auto trace = reduce(parse_formula(read_file(corpus::path_of("xxx"))), 4);
    EXPECT_EQ(trace.cubic.graph.num_vertices(), 40);
    EXPECT_EQ(trace.planar.crossings.size(), 0u);
    EXPECT_EQ(trace.aux.graph.num_vertices(), 400);
    EXPECT_EQ(trace.aux.graph.num_edges(), 480);
    EXPECT_EQ(trace.instance->graph.num_vertices(), 1720);
}

TEST(Reduce, IsDeterministic)
{
    const auto f = formula("p cnf 4 3\n1 -2 3 0\n-1 2 4 0\n2 -3 -4 0\n");
    const auto a = reduce(f, 5);
    const auto b = reduce(f, 5);
    EXPECT_EQ(a.instance->graph, b.instance->graph);
    EXPECT_EQ(a.instance->rot, b.instance->rot);
    EXPECT_EQ(provenance_manifest(a), provenance_manifest(b));
}

// Forward and backward witness chains over every NAE solution of every corpus formula.
class Chain : public ::testing::TestWithParam<int> {};

TEST_P(Chain, ForwardAndBackwardOverTheCorpus)
{
    const int k = GetParam();
    int runs = 0;
    for (const auto& entry : corpus::load()) {
        const auto solutions = oracle::nae_solutions(entry.formula);
        if (solutions.empty())
            continue;
        const auto trace = reduce(entry.formula, k);
        const Graph& h = trace.aux.graph;
        for (const auto& value : solutions) {
            SCOPED_TRACE(entry.name + " " + format_assignment({value}));
            const auto c = assignment_to_matching(trace, {value});
            ASSERT_TRUE(oracle::colouring_ok(trace.planar.graph, c, 1));
            EXPECT_TRUE(identifying_monochromatic(trace.planar, c));

            const auto co = matching_to_good_orientation(trace.planar.graph, c, h);
            ASSERT_TRUE(is_good_orientation(h, co, out_vertices_of(h)));
            EXPECT_TRUE(oriented_components_ok(h, co));

            const auto L = orientation_to_labelling(trace, co, k);
            ASSERT_TRUE(oracle::labelling_ok_sparse(trace.instance->graph, L.labels, k));

            const auto back = labelling_to_orientation(trace, L);
            const auto good = canonicalize_orientation(h, back);
            ASSERT_TRUE(is_good_orientation(h, good, out_vertices_of(h)));
            const auto matching = orientation_to_matching(trace, good);
            EXPECT_TRUE(oracle::colouring_ok(trace.planar.graph, matching, 1));
            EXPECT_TRUE(identifying_monochromatic(trace.planar, matching));
            const auto recovered = matching_to_assignment(trace, matching);
            EXPECT_TRUE(oracle::nae_ok(entry.formula, recovered.values));
            EXPECT_EQ(recovered.values, value);
            ++runs;
        }
    }
    EXPECT_GE(runs, 10);
}

INSTANTIATE_TEST_SUITE_P(Spans, Chain, ::testing::Values(4, 5, 6));

TEST(Witness, ComplementedMatchingGivesComplementedAssignment)
{
    const auto f = parse_formula(read_file(corpus::path_of("mixed3")));
    const auto trace = reduce(f, 4);
    const auto value = oracle::nae_solutions(f).front();
    auto c = assignment_to_matching(trace, {value});
    for (auto& x : c)
        x = opposite(x);
    auto flipped = value;
    flipped.flip();
    EXPECT_EQ(matching_to_assignment(trace, c).values, flipped);
}

TEST(Witness, RefusesBrokenInputs)
{
    const auto f = parse_formula(read_file(corpus::path_of("xyz")));
    const auto trace = reduce(f, 4);
    EXPECT_THROW(assignment_to_matching(trace, {{true, true, true}}), ValidationError);

    const auto value = oracle::nae_solutions(f).front();
    const auto c = assignment_to_matching(trace, {value});
    auto broken = c;
    broken[0] = opposite(broken[0]);
    EXPECT_THROW(matching_to_assignment(trace, broken), ValidationError);

    const Graph& h = trace.aux.graph;
    auto co = matching_to_good_orientation(trace.planar.graph, c, h);
    auto L = orientation_to_labelling(trace, co, 4);

    // A vertex of H labelled strictly between 0 and k has no colour.
    auto middle = L;
    const VertexId v = 0;
    middle.labels[v] = 2;
    EXPECT_ANY_THROW(labelling_to_orientation(trace, middle));

    auto wrong_span = L;
    wrong_span.k = 5;
    EXPECT_THROW(labelling_to_orientation(trace, wrong_span), ValidationError);

    auto unoriented = co;
    std::fill(unoriented.orientation.begin(), unoriented.orientation.end(), Orient::Unoriented);
    EXPECT_ANY_THROW(orientation_to_labelling(trace, unoriented, 4));
    EXPECT_ANY_THROW(orientation_to_matching(trace, unoriented));
}

TEST(Witness, CanonicalizeKeepsGoodOrientationsGood)
{
    const auto f = parse_formula(read_file(corpus::path_of("chain3")));
    const auto trace = reduce(f, 4);
    const Graph& h = trace.aux.graph;
    for (const auto& value : oracle::nae_solutions(f)) {
        const auto co = matching_to_good_orientation(trace.planar.graph, assignment_to_matching(trace, {value}), h);
        const auto again = canonicalize_orientation(h, co);
        EXPECT_TRUE(is_good_orientation(h, again, out_vertices_of(h)));
        EXPECT_EQ(canonicalize_orientation(h, again), again);
    }
}

#include <l21/errors.hh>
#include <l21/gadgets.hh>
#include <l21/reduction.hh>
#include <l21/serialization.hh>

#include <gtest/gtest.h>

#include <filesystem>

using namespace l21;

namespace {

Instance gadget_instance(const GadgetInstance& g, std::optional<int> k = std::nullopt)
{
    return {k, g.graph, g.rot, g.ports};
}

} // namespace

TEST(Serialization, InstanceRoundTripsThroughText)
{
    for (const auto& g : {build_H(), build_clause_gadget(), build_uncrossing(), build_edge_gadget(5),
             build_edge_gadget(7), build_aux_edge()}) {
        const Instance inst = gadget_instance(g, 5);
        const std::string text = canonical_text(instance_to_json(inst));
        const Instance back = instance_from_json(parse_json_text(text));
        EXPECT_EQ(back, inst);
        EXPECT_EQ(canonical_text(instance_to_json(back)), text);
    }
}

TEST(Serialization, EveryReductionStageRoundTrips)
{
    const auto trace = reduce(parse_formula("p cnf 3 2\n1 2 3 0\n1 -2 3 0\n"), 4);
    for (Stage s : {Stage::Cubic, Stage::Planar, Stage::Aux, Stage::Instance}) {
        const Instance inst = stage_instance(trace, s);
        const Instance back = instance_from_json(parse_json_text(canonical_text(instance_to_json(inst))));
        EXPECT_EQ(back, inst) << stage_name(s);
    }
}

TEST(Serialization, InstanceWithoutEmbedding)
{
    Instance inst;
    inst.graph.add_vertex(Role::Original, "a");
    inst.graph.add_vertex(Role::Original, "b");
    inst.graph.add_edge(0, 1);
    const auto back = instance_from_json(instance_to_json(inst));
    EXPECT_EQ(back, inst);
    EXPECT_TRUE(back.rot.empty());
    EXPECT_FALSE(back.k.has_value());
}

TEST(Serialization, ColouringOrientationAndLabellingRoundTrip)
{
    const auto aux = build_aux_edge();
    const Graph& g = aux.graph;
    TwoColouring c(g.num_vertices());
    ColouredOrientation co{c, std::vector<Orient>(g.num_edges(), Orient::Unoriented)};
    for (int v = 0; v < g.num_vertices(); ++v)
        co.colouring[v] = v % 3 ? Colour::White : Colour::Black;
    for (int e = 0; e < g.num_edges(); ++e)
        co.orientation[e] = static_cast<Orient>(e % 3);
    EXPECT_EQ(colouring_from_json(colouring_to_json(co.colouring), g.num_vertices()), co.colouring);
    EXPECT_EQ(orientation_from_json(g, orientation_to_json(g, co)), co);

    const Labelling L{6, {0, 6, 2, 4, 1, 3, 5, 0}};
    EXPECT_EQ(labelling_from_json(labelling_to_json(L), 8), L);
}

TEST(Serialization, RejectsMalformedDocuments)
{
    EXPECT_THROW(parse_json_text("{\n\"k\": 3,\n oops}"), ParseError);
    try {
        parse_json_text("{\n\"k\": 3,\n oops}");
    }
    catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(instance_from_json(json::parse(R"({"k":null,"vertices":[{"id":1,"role":"original","name":""}],"edges":[],"rotation":{},"ports":{}})")),
        ValidationError);
    EXPECT_THROW(instance_from_json(json::parse(R"({"k":null,"vertices":[{"id":0,"role":"original","name":""}],"edges":[[0,0]],"rotation":{},"ports":{}})")),
        ValidationError);
    EXPECT_THROW(instance_from_json(json::parse(R"({"vertices":[]})")), ValidationError);
    EXPECT_THROW(labelling_from_json(json::parse(R"({"k":4,"labels":{"0":1}})"), 2), ValidationError);
    EXPECT_THROW(colouring_from_json(json::parse(R"({"colours":{"0":"R"}})"), 1), ValidationError);
}

TEST(Serialization, DotListsVerticesThenEdges)
{
    const auto inst = gadget_instance(build_H());
    const std::string dot = to_dot(inst);
    EXPECT_EQ(dot.rfind("graph G {\n", 0), 0u);
    EXPECT_NE(dot.find("label=\"a\""), std::string::npos);
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'),
        2 + inst.graph.num_vertices() + inst.graph.num_edges());
    EXPECT_EQ(to_dot(inst), dot);
}

TEST(Serialization, FilesRoundTrip)
{
    const auto path = (std::filesystem::temp_directory_path() / "l21_serialization_test.json").string();
    const std::string text = canonical_text(instance_to_json(gadget_instance(build_uncrossing())));
    write_file(path, text);
    EXPECT_EQ(read_file(path), text);
    std::filesystem::remove(path);
    EXPECT_THROW(read_file(path), std::ios_base::failure);
}

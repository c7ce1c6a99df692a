#pragma once

#include <l21/chords.hh>
#include <l21/embedding.hh>
#include <l21/gadgets.hh>
#include <l21/graph.hh>
#include <l21/nae.hh>
#include <l21/serialization.hh>

#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace l21 {

/// One crossing of chords gamma < delta, replaced by a copy of the uncrossing gadget whose
/// 24 non-pendant vertices start at `base`. `sign` is the orientation of (gamma, delta).
struct Crossing {
    int gamma;
    int delta;
    int sign;
    VertexId base;
};

/// The planar cubic graph G'. Ids below the cubic stage's vertex count are unchanged.
struct PlanarStage {
    Graph graph;
    RotationSystem rot;
    std::vector<int> literal;
    std::vector<int> identifying; // edge indices, including the segments through each U copy
    std::vector<Crossing> crossings;
    std::vector<VertexId> u_offset; // uncrossing-gadget id to offset within a copy, -1 for pendants
};

/// Replaces every crossing of two chords by an uncrossing gadget, cutting the chords into
/// identifying segments.
PlanarStage planarize(const CubicStage& cubic);

/// Vertices of one auxiliary edge; cx is the cycle vertex next to x, and x < y.
struct AuxEdgeIds {
    VertexId x, cx, top, bottom, cy, y, in, out;
};

/// The auxiliary graph H. Edge e = xy of G' contributes vertices n + 6e + (0..5) in the
/// order cx, top, bottom, cy, in, out.
struct AuxStage {
    Graph graph;
    RotationSystem rot;
    std::vector<AuxEdgeIds> aux; // indexed by edge of G'
};

AuxStage build_auxiliary(const Graph& gprime, const RotationSystem& rot);

/// Recovers the auxiliary edges of H from its role tags, ordered by outvertex.
std::vector<AuxEdgeIds> aux_edges_of(const Graph& h);

/// The labelling instance K. Ids below |V(H)| are the vertices of H.
struct InstanceStage {
    int k = 0;
    Graph graph;
    RotationSystem rot;
    int h_vertices = 0;
    std::vector<std::vector<VertexId>> pendants; // per vertex of H
    std::map<VertexId, VertexId> w_of;            // outvertex to its designated pendant
    std::map<VertexId, std::vector<VertexId>> leaves; // designated pendant to its leaves
    GadgetInstance gadget;
    std::vector<VertexId> gadget_base; // per edge of H, first interior vertex of its copy
    std::vector<int> interior_offset;  // gadget id to offset in a copy, -1 for u and v
};

InstanceStage build_instance(const Graph& h, const RotationSystem& rot, int k);

/// K's id of gadget vertex `id` in the copy replacing edge `h_edge` of H.
VertexId gadget_vertex(const InstanceStage& st, const Graph& h, int h_edge, VertexId id);

enum class Stage { Cubic, Planar, Aux, Instance };

std::string_view stage_name(Stage stage);
Stage stage_from_name(std::string_view name);

struct ReductionTrace {
    Nae3SatFormula formula;
    MonotoneFormula monotone;
    CubicStage cubic;
    PlanarStage planar;
    AuxStage aux;
    std::optional<InstanceStage> instance;
    Stage reached = Stage::Cubic;
};

/// Runs the stages up to stop_at, checking each stage's postconditions (InvariantError).
ReductionTrace reduce(const Nae3SatFormula& formula, int k, Stage stop_at = Stage::Instance);

/// Stage as an Instance for serialization.
Instance stage_instance(const ReductionTrace& trace, Stage stage);

/// Sizes, id prefixes and per-crossing and per-edge provenance of every stage reached.
json provenance_manifest(const ReductionTrace& trace);

} // namespace l21

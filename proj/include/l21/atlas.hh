#pragma once

#include <l21/colouring.hh>
#include <l21/embedding.hh>
#include <l21/graph.hh>

#include <map>
#include <span>
#include <string>

namespace l21 {

struct AtlasVertex {
    const char* name;
    double x;
    double y;
};

struct AtlasEdge {
    const char* a;
    const char* b;
};

/// A gadget as drawn: vertex names with plane coordinates and the edge list.
struct AtlasFigure {
    std::span<const AtlasVertex> vertices;
    std::span<const AtlasEdge> edges;
};

AtlasFigure atlas_H();
AtlasFigure atlas_clause_gadget();
AtlasFigure atlas_uncrossing();
AtlasFigure atlas_G5();
AtlasFigure atlas_aux_edge();
AtlasFigure atlas_Hprime6();
AtlasFigure atlas_G6();
AtlasFigure atlas_G7();

/// Graph in figure order, rotation read off the drawing, and ids by name. Repeated edges
/// in the transcription are merged.
struct DrawnFigure {
    Graph graph;
    RotationSystem rot;
    std::map<std::string, VertexId> ids;
};

DrawnFigure draw(const AtlasFigure& figure, Role role = Role::GadgetInternal);

/// Colour classes of U's extendable colourings: alpha is the colour of a, b, z3, z4 and
/// beta the colour of w, v, z1, z2; the primed classes take the other colour.
enum class UClass { Alpha, AlphaBar, Beta, BetaBar };

UClass uncrossing_class(const std::string& name);

/// The colouring of U determined by the two class colours.
TwoColouring uncrossing_colouring(const DrawnFigure& u, Colour alpha, Colour beta);

} // namespace l21

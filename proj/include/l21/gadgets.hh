#pragma once

#include <l21/atlas.hh>
#include <l21/embedding.hh>
#include <l21/graph.hh>

#include <map>
#include <string>
#include <string_view>

namespace l21 {

enum class GadgetKind { H, ClauseK, UncrossU, G4, G5, Hprime, Gk, AuxEdge };

std::string_view kind_name(GadgetKind kind);

struct GadgetInstance {
    GadgetKind kind;
    int k = 0; // span for H', G_k; zero otherwise
    Graph graph;
    RotationSystem rot;
    PortMap ports;

    /// Vertex by display name; throws ValidationError if absent.
    VertexId named(std::string_view name) const;
};

/// Ports a, b, m, n, i, l, o, p, q, r.
GadgetInstance build_H();

/// Ports a and o1..o3, p1..p3, q1..q3, r1..r3; the q and r ports have degree one.
GadgetInstance build_clause_gadget();

/// Pendant ports a, w, z2, z4 and gate ports b, v, z1, z3.
GadgetInstance build_uncrossing();

/// Ports c, d, g; k >= 6.
GadgetInstance build_Hprime(int k);

/// Ports u, v, a_u, a_v; k >= 4. For k >= 6 the copies of H' hanging off b<j> are named
/// like "c(l,j)" and "f2(r,j)".
GadgetInstance build_edge_gadget(int k);

/// Ports u, v, in, out, cu, cv, top, bottom.
GadgetInstance build_aux_edge();

/// Expected degree of each port within its gadget.
std::map<std::string, int> port_degrees(const GadgetInstance& gadget);

/// The graph with one named edge removed; embedding and ports are dropped from the
/// rotation at the two endpoints.
GadgetInstance without_edge(const GadgetInstance& gadget, std::string_view a, std::string_view b);

} // namespace l21

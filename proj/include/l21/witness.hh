#pragma once

#include <l21/colouring.hh>
#include <l21/labelling.hh>
#include <l21/nae.hh>
#include <l21/reduction.hh>

#include <vector>

namespace l21 {

// Witness translations along the reduction, in both directions. Each one checks its
// precondition (ValidationError) and its postcondition (InvariantError).

/// Literal vertices white for true; clause blocks completed by search, crossing gadgets by
/// their two class colours.
TwoColouring assignment_to_matching(const ReductionTrace& trace, const Assignment& a);

/// Monochromatic edges of G' get a directed 4-cycle; dichromatic edges are threaded into
/// paths from an outvertex, through an original vertex, to the next invertex.
ColouredOrientation matching_to_good_orientation(const Graph& gprime, const TwoColouring& c, const Graph& h);

/// Recolours in/out vertices of single-coloured 4-cycles and drops their arcs; the result
/// must be good.
ColouredOrientation canonicalize_orientation(const Graph& h, const ColouredOrientation& co);

/// Every component of the oriented subgraph is a directed circuit or a directed path from
/// an outvertex to an invertex.
bool oriented_components_ok(const Graph& h, const ColouredOrientation& co);

/// White is 0 and Black is k; gadget interiors and pendants filled constructively.
Labelling orientation_to_labelling(const ReductionTrace& trace, const ColouredOrientation& co, int k);

ColouredOrientation labelling_to_orientation(const ReductionTrace& trace, const Labelling& L);

TwoColouring orientation_to_matching(const ReductionTrace& trace, const ColouredOrientation& co);

/// Reads each variable off its literal vertices (white for true), projected to the
/// original variables.
Assignment matching_to_assignment(const ReductionTrace& trace, const TwoColouring& c);

/// Labels of one edge-gadget copy for the boundary (L(u), L(v), L(a_u), L(a_v)), indexed by
/// gadget id. Throws InvariantError on a tuple outside the gadget's behaviour table.
std::vector<int> fill_edge_gadget(const GadgetInstance& gadget, const BoundaryTuple& boundary);

} // namespace l21

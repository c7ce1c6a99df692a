#pragma once

#include <l21/embedding.hh>
#include <l21/graph.hh>
#include <l21/nae.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace l21 {

/// A formula without negative literals. Each negated variable v gets a fresh partner v'
/// and the clause (v, v', v'), which forces v' = not v under NAE.
struct MonotoneFormula {
    Nae3SatFormula formula;
    /// source[i] describes monotone variable i + 1: the original variable, negated when the
    /// variable stands for a negative literal.
    std::vector<Literal> source;
};

MonotoneFormula monotonize(const Nae3SatFormula& formula);

/// Monotone assignment agreeing with a on the original variables.
Assignment extend_assignment(const MonotoneFormula& m, const Assignment& a);
/// Restriction to the original variables.
Assignment project_assignment(const MonotoneFormula& m, const Assignment& a);

/// An identifying edge drawn as a straight chord between two port slots, low < high.
struct Chord {
    int low;
    int high;
    int var;

    friend bool operator==(const Chord&, const Chord&) = default;
};

/// Clause gadgets placed along a convex arc. Slot 6c + i is port i of block c in the order
/// r3, q3, r2, q2, r1, q1, which is the block's outer face read clockwise. Slot s sits at
/// (x[s], x[s]^2).
struct ChordSystem {
    int num_blocks = 0;
    std::vector<std::string> slot_port;
    std::vector<VertexId> slot_vertex; // the o or p vertex the port hung from
    std::vector<std::int64_t> slot_x;
    std::vector<Chord> chords;
    std::vector<int> chord_of_slot;

    friend bool operator==(const ChordSystem&, const ChordSystem&) = default;
};

/// Throws ValidationError unless every slot lies on exactly one chord and chord ends are
/// ordered.
void validate_chords(const ChordSystem& cs);

bool chords_interleave(const Chord& a, const Chord& b);
int count_interleaving(const ChordSystem& cs);

/// Position of the crossing with `other` along `chord`, compared exactly: negative when the
/// crossing with a lies nearer chord's low end than the crossing with b.
int compare_along(const ChordSystem& cs, const Chord& chord, const Chord& a, const Chord& b);

/// Sign of the cross product of the two chord directions (low to high).
int crossing_sign(const ChordSystem& cs, const Chord& a, const Chord& b);

/// The cubic graph G. Vertex 40c + j is the j-th surviving vertex of block c.
struct CubicStage {
    Graph graph;
    RotationSystem rot; // block rotations with each port replaced by its chord partner
    std::vector<int> literal; // monotone variable carried by o and p vertices, else 0
    std::vector<int> identifying; // edge indices of the chords
    ChordSystem chords;
    std::vector<std::vector<VertexId>> block_ids; // per block, clause-gadget id to G id or -1
};

inline constexpr int block_size = 40;

/// Expects a monotone formula with at least one clause.
CubicStage nae_to_cubic(const Nae3SatFormula& monotone);

} // namespace l21

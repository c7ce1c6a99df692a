#pragma once

#include <l21/graph.hh>
#include <l21/parallel.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace l21 {

/// Black encodes as 0, White as 1.
enum class Colour : std::uint8_t { Black = 0, White = 1 };

inline Colour opposite(Colour c) { return c == Colour::Black ? Colour::White : Colour::Black; }

using TwoColouring = std::vector<Colour>;

/// Forward means edge(i).u -> edge(i).v in the graph's stored (u < v) form.
enum class Orient : std::uint8_t { Unoriented, Forward, Backward };

struct ColouredOrientation {
    TwoColouring colouring;
    std::vector<Orient> orientation; // indexed by edge index

    friend bool operator==(const ColouredOrientation&, const ColouredOrientation&) = default;
};

/// Which vertices must have exactly one same-coloured neighbour.
enum class MatchingMode { Perfect, Almost };

using ColourPins = std::vector<std::pair<VertexId, Colour>>;

bool verify_2cpm(const Graph& graph, const TwoColouring& c);
bool verify_almost_2cpm(const Graph& graph, const TwoColouring& c);

/// Little-endian comparison by vertex id: the highest differing id decides, Black < White.
bool canonical_less(const TwoColouring& a, const TwoColouring& b);

/// Visits every valid colouring extending the pins in search order; the callback returns
/// false to stop. BFS vertex order from the lowest id, Black tried before White.
void for_each_colouring(const Graph& graph, MatchingMode mode, const ColourPins& pins,
    const std::function<bool(const TwoColouring&)>& visit);

bool is_extendable(const Graph& graph, MatchingMode mode, const ColourPins& pins);

inline constexpr int max_enumeration_vertices = 60;
inline constexpr int max_sweep_vertices = 20;

/// All almost two-coloured perfect matchings in canonical order, by backtracking.
std::vector<TwoColouring> enumerate_almost_2cpm(const Graph& graph);

/// Same set by plain 2^n sweep; the cross-check for small graphs.
std::vector<TwoColouring> enumerate_almost_2cpm_sweep(const Graph& graph, Exec exec = Exec::Parallel);

/// First completion in search order passing verify_2cpm, or nullopt.
std::optional<TwoColouring> solve_2cpm(const Graph& graph, const ColourPins& pins = {});

/// True iff the four coloured-orientation conditions hold. An oriented dichromatic edge is a
/// structural error and throws InvariantError.
bool verify_coloured_orientation(const Graph& graph, const ColouredOrientation& co,
    std::span<const VertexId> out_vertices);

/// Adds the degree-three conditions. Throws ValidationError if co is not a coloured orientation.
bool is_good_orientation(const Graph& graph, const ColouredOrientation& co, std::span<const VertexId> out_vertices);

/// Vertices tagged OutVertex.
std::vector<VertexId> out_vertices_of(const Graph& graph);

/// Head and tail of an oriented edge; nullopt when unoriented.
std::optional<std::pair<VertexId, VertexId>> arc_of(const Graph& graph, const ColouredOrientation& co, int edge);

} // namespace l21

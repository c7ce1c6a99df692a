#pragma once

#include <l21/graph.hh>
#include <l21/parallel.hh>

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace l21 {

struct Labelling {
    int k = 0;
    std::vector<int> labels;

    friend bool operator==(const Labelling&, const Labelling&) = default;
};

/// Throws ValidationError on a label outside [0, k] or a size mismatch.
bool verify_labelling(const Graph& graph, const Labelling& L);

/// First violated constraint in words, or empty when valid.
std::string explain_labelling(const Graph& graph, const Labelling& L);

enum class Outcome { Sat, Unsat, Exhausted };

std::string_view outcome_name(Outcome outcome);

struct SolveResult {
    Outcome outcome = Outcome::Unsat;
    std::optional<Labelling> witness;
    std::int64_t nodes = 0;
    std::string reason;
};

using LabelPins = std::vector<std::pair<VertexId, int>>;

inline constexpr int max_span = 63;
inline constexpr std::int64_t unlimited = std::numeric_limits<std::int64_t>::max();

/// Propagating backtracking search. Branches on the smallest open domain, ties broken by
/// descending degree then id; values ascending. The budget counts value assignments tried.
SolveResult solve_labelling(const Graph& graph, int k, const LabelPins& pins = {}, std::int64_t budget = unlimited);

/// Visits every valid labelling extending the pins; the callback returns false to stop.
/// Outcome is Exhausted if the budget ran out, else Sat iff anything was visited.
SolveResult for_each_labelling(const Graph& graph, int k, const LabelPins& pins, std::int64_t budget,
    const std::function<bool(const std::vector<int>&)>& visit);

inline constexpr double max_bruteforce_space = 1e9;

/// Chronological backtracking in id order, lexicographically first witness. Throws
/// CapacityError when (k+1)^n exceeds max_bruteforce_space.
SolveResult solve_labelling_bruteforce(const Graph& graph, int k, const LabelPins& pins = {},
    Exec exec = Exec::Parallel);

/// (L(u), L(v), L(a_u), L(a_v))
using BoundaryTuple = std::array<int, 4>;

/// Every boundary tuple realised by a full labelling with L(u), L(v) in the domain, ascending.
std::vector<BoundaryTuple> enumerate_boundary_behaviour(const Graph& gadget, const PortMap& ports, int k,
    const std::vector<int>& boundary_domain, Exec exec = Exec::Parallel, std::int64_t budget = unlimited);

/// Smallest span with a labelling, searching upward from the maximum degree; nullopt when a
/// level exhausts its budget.
std::optional<int> compute_min_span(const Graph& graph, std::int64_t budget = unlimited);

} // namespace l21

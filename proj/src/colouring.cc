#include <l21/colouring.hh>
#include <l21/errors.hh>

#include <algorithm>
#include <cstdint>
#include <queue>

namespace l21 {

namespace {
    void check_total(const Graph& graph, const TwoColouring& c)
    {
        if (static_cast<int>(c.size()) != graph.num_vertices())
            throw ValidationError("colouring covers " + std::to_string(c.size()) + " vertices, graph has "
                + std::to_string(graph.num_vertices()));
    }

    int same_coloured_neighbours(const Graph& graph, const TwoColouring& c, VertexId v)
    {
        int s = 0;
        for (VertexId u : graph.neighbours(v))
            s += c[u] == c[v];
        return s;
    }

    bool verify(const Graph& graph, const TwoColouring& c, MatchingMode mode)
    {
        check_total(graph, c);
        for (VertexId v = 0; v < graph.num_vertices(); ++v) {
            if (mode == MatchingMode::Almost && graph.degree(v) < 2)
                continue;
            if (same_coloured_neighbours(graph, c, v) != 1)
                return false;
        }
        return true;
    }

    constexpr std::uint8_t unset = 2;

    class ColourSearch {
    public:
        ColourSearch(const Graph& graph, MatchingMode mode, const ColourPins& pins,
            const std::function<bool(const TwoColouring&)>& visit)
            : graph_(graph), mode_(mode), visit_(visit), state_(graph.num_vertices(), unset)
        {
            for (const auto& [v, c] : pins) {
                if (!graph.contains(v))
                    throw ValidationError("pin on unknown vertex " + std::to_string(v));
                if (state_[v] != unset)
                    throw ValidationError("vertex " + std::to_string(v) + " pinned twice");
                state_[v] = static_cast<std::uint8_t>(c);
            }
            order_ = bfs_order();
        }

        void run()
        {
            for (VertexId v = 0; v < graph_.num_vertices(); ++v)
                if (state_[v] != unset && !locally_consistent(v))
                    return;
            for (VertexId v = 0; v < graph_.num_vertices(); ++v)
                if (!feasible(v))
                    return;
            search(0);
        }

    private:
        std::vector<VertexId> bfs_order() const
        {
            const int n = graph_.num_vertices();
            std::vector<bool> seen(n, false);
            std::vector<VertexId> order;
            for (VertexId start = 0; start < n; ++start) {
                if (seen[start])
                    continue;
                std::queue<VertexId> queue;
                queue.push(start);
                seen[start] = true;
                while (!queue.empty()) {
                    VertexId v = queue.front();
                    queue.pop();
                    if (state_[v] == unset)
                        order.push_back(v);
                    for (VertexId u : graph_.neighbours(v))
                        if (!seen[u]) {
                            seen[u] = true;
                            queue.push(u);
                        }
                }
            }
            return order;
        }

        bool constrained(VertexId v) const { return mode_ == MatchingMode::Perfect || graph_.degree(v) >= 2; }

        // A coloured vertex must keep at most one, and be able to reach exactly one,
        // same-coloured neighbour; an uncoloured one must admit some colour.
        bool feasible(VertexId v) const
        {
            if (!constrained(v))
                return true;
            int count[2] = {0, 0}, open = 0;
            for (VertexId u : graph_.neighbours(v)) {
                if (state_[u] == unset)
                    ++open;
                else
                    ++count[state_[u]];
            }
            auto ok = [&](int s) { return s <= 1 && s + open >= 1; };
            if (state_[v] != unset)
                return ok(count[state_[v]]);
            return ok(count[0]) || ok(count[1]);
        }

        bool locally_consistent(VertexId v) const
        {
            if (!feasible(v))
                return false;
            for (VertexId u : graph_.neighbours(v))
                if (!feasible(u))
                    return false;
            return true;
        }

        bool search(std::size_t depth)
        {
            if (depth == order_.size()) {
                TwoColouring c(state_.size());
                for (std::size_t i = 0; i < state_.size(); ++i)
                    c[i] = static_cast<Colour>(state_[i]);
                return visit_(c);
            }
            VertexId v = order_[depth];
            for (std::uint8_t colour : {std::uint8_t{0}, std::uint8_t{1}}) {
                state_[v] = colour;
                if (locally_consistent(v) && !search(depth + 1)) {
                    state_[v] = unset;
                    return false;
                }
            }
            state_[v] = unset;
            return true;
        }

        const Graph& graph_;
        MatchingMode mode_;
        const std::function<bool(const TwoColouring&)>& visit_;
        std::vector<std::uint8_t> state_;
        std::vector<VertexId> order_;
    };
}

bool verify_2cpm(const Graph& graph, const TwoColouring& c) { return verify(graph, c, MatchingMode::Perfect); }

bool verify_almost_2cpm(const Graph& graph, const TwoColouring& c) { return verify(graph, c, MatchingMode::Almost); }

bool canonical_less(const TwoColouring& a, const TwoColouring& b)
{
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

void for_each_colouring(const Graph& graph, MatchingMode mode, const ColourPins& pins,
    const std::function<bool(const TwoColouring&)>& visit)
{
    ColourSearch(graph, mode, pins, visit).run();
}

bool is_extendable(const Graph& graph, MatchingMode mode, const ColourPins& pins)
{
    bool found = false;
    for_each_colouring(graph, mode, pins, [&](const TwoColouring&) {
        found = true;
        return false;
    });
    return found;
}

std::vector<TwoColouring> enumerate_almost_2cpm(const Graph& graph)
{
    if (graph.num_vertices() > max_enumeration_vertices)
        throw CapacityError("colouring enumeration is limited to " + std::to_string(max_enumeration_vertices)
            + " vertices, graph has " + std::to_string(graph.num_vertices()));
    std::vector<TwoColouring> result;
    for_each_colouring(graph, MatchingMode::Almost, {}, [&](const TwoColouring& c) {
        result.push_back(c);
        return true;
    });
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

std::vector<TwoColouring> enumerate_almost_2cpm_sweep(const Graph& graph, Exec exec)
{
    const int n = graph.num_vertices();
    if (n > max_sweep_vertices)
        throw CapacityError("bitmask sweep is limited to " + std::to_string(max_sweep_vertices) + " vertices, graph has "
            + std::to_string(n));
    const std::int64_t total = std::int64_t{1} << n;
    auto decode = [n](std::int64_t mask) {
        TwoColouring c(n);
        for (int v = 0; v < n; ++v)
            c[v] = static_cast<Colour>((mask >> v) & 1);
        return c;
    };

    std::vector<char> valid(total, 0);
    if (exec == Exec::Serial) {
        for (std::int64_t m = 0; m < total; ++m)
            valid[m] = verify_almost_2cpm(graph, decode(m));
    }
    else {
#pragma omp parallel for num_threads(worker_count()) schedule(static)
        for (std::int64_t m = 0; m < total; ++m)
            valid[m] = verify_almost_2cpm(graph, decode(m));
    }

    // Ascending masks are ascending little-endian bit vectors.
    std::vector<TwoColouring> result;
    for (std::int64_t m = 0; m < total; ++m)
        if (valid[m])
            result.push_back(decode(m));
    return result;
}

std::optional<TwoColouring> solve_2cpm(const Graph& graph, const ColourPins& pins)
{
    std::optional<TwoColouring> result;
    for_each_colouring(graph, MatchingMode::Perfect, pins, [&](const TwoColouring& c) {
        result = c;
        return false;
    });
    return result;
}

std::optional<std::pair<VertexId, VertexId>> arc_of(const Graph& graph, const ColouredOrientation& co, int edge)
{
    const Edge& e = graph.edge(edge);
    switch (co.orientation[edge]) {
    case Orient::Forward: return std::pair{e.u, e.v};
    case Orient::Backward: return std::pair{e.v, e.u};
    case Orient::Unoriented: break;
    }
    return std::nullopt;
}

namespace {
    struct Degrees {
        std::vector<int> in, out, opposite;
        bool every_mono_oriented = true;
    };

    Degrees tally(const Graph& graph, const ColouredOrientation& co)
    {
        check_total(graph, co.colouring);
        if (static_cast<int>(co.orientation.size()) != graph.num_edges())
            throw ValidationError("orientation covers " + std::to_string(co.orientation.size()) + " edges, graph has "
                + std::to_string(graph.num_edges()));
        const int n = graph.num_vertices();
        Degrees d{std::vector<int>(n, 0), std::vector<int>(n, 0), std::vector<int>(n, 0)};
        for (int i = 0; i < graph.num_edges(); ++i) {
            const Edge& e = graph.edge(i);
            bool mono = co.colouring[e.u] == co.colouring[e.v];
            auto arc = arc_of(graph, co, i);
            if (!mono) {
                if (arc)
                    throw InvariantError("dichromatic edge {" + std::to_string(e.u) + "," + std::to_string(e.v)
                        + "} is oriented");
                ++d.opposite[e.u];
                ++d.opposite[e.v];
            }
            else if (!arc)
                d.every_mono_oriented = false;
            else {
                ++d.out[arc->first];
                ++d.in[arc->second];
            }
        }
        return d;
    }

    std::vector<bool> membership(const Graph& graph, std::span<const VertexId> vertices)
    {
        std::vector<bool> in(graph.num_vertices(), false);
        for (VertexId v : vertices) {
            if (!graph.contains(v))
                throw ValidationError("out-vertex " + std::to_string(v) + " is not in the graph");
            in[v] = true;
        }
        return in;
    }

    bool coloured_orientation_holds(const Graph& graph, const Degrees& d, const std::vector<bool>& is_out)
    {
        if (!d.every_mono_oriented)
            return false;
        for (VertexId v = 0; v < graph.num_vertices(); ++v) {
            if (d.opposite[v] > 1)
                return false;
            if (is_out[v] ? d.in[v] != 0 : (d.in[v] > 1 || d.out[v] > 2))
                return false;
        }
        return true;
    }
}

bool verify_coloured_orientation(const Graph& graph, const ColouredOrientation& co,
    std::span<const VertexId> out_vertices)
{
    auto is_out = membership(graph, out_vertices);
    return coloured_orientation_holds(graph, tally(graph, co), is_out);
}

bool is_good_orientation(const Graph& graph, const ColouredOrientation& co, std::span<const VertexId> out_vertices)
{
    auto is_out = membership(graph, out_vertices);
    auto d = tally(graph, co);
    if (!coloured_orientation_holds(graph, d, is_out))
        throw ValidationError("input is not a coloured orientation");
    for (VertexId v = 0; v < graph.num_vertices(); ++v)
        if (graph.degree(v) == 3 && (d.opposite[v] != 1 || d.in[v] != 1 || d.out[v] != 1))
            return false;
    return true;
}

std::vector<VertexId> out_vertices_of(const Graph& graph)
{
    std::vector<VertexId> result;
    for (VertexId v = 0; v < graph.num_vertices(); ++v)
        if (graph.role(v) == Role::OutVertex)
            result.push_back(v);
    return result;
}

} // namespace l21

#include <l21/errors.hh>
#include <l21/labelling.hh>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

namespace l21 {

namespace {
    void check_labels(const Graph& graph, const Labelling& L)
    {
        if (static_cast<int>(L.labels.size()) != graph.num_vertices())
            throw ValidationError("labelling covers " + std::to_string(L.labels.size()) + " vertices, graph has "
                + std::to_string(graph.num_vertices()));
        for (VertexId v = 0; v < graph.num_vertices(); ++v)
            if (L.labels[v] < 0 || L.labels[v] > L.k)
                throw ValidationError("label " + std::to_string(L.labels[v]) + " of vertex " + std::to_string(v)
                    + " is outside [0," + std::to_string(L.k) + "]");
    }
}

std::string explain_labelling(const Graph& graph, const Labelling& L)
{
    check_labels(graph, L);
    for (const Edge& e : graph.edges())
        if (std::abs(L.labels[e.u] - L.labels[e.v]) < 2)
            return "adjacent vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) + " have labels "
                + std::to_string(L.labels[e.u]) + " and " + std::to_string(L.labels[e.v]);
    auto d2 = graph.distance_two_lists();
    for (VertexId v = 0; v < graph.num_vertices(); ++v)
        for (VertexId w : d2[v])
            if (v < w && L.labels[v] == L.labels[w])
                return "vertices " + std::to_string(v) + " and " + std::to_string(w) + " at distance two share label "
                    + std::to_string(L.labels[v]);
    return {};
}

bool verify_labelling(const Graph& graph, const Labelling& L) { return explain_labelling(graph, L).empty(); }

std::string_view outcome_name(Outcome outcome)
{
    switch (outcome) {
    case Outcome::Sat: return "Sat";
    case Outcome::Unsat: return "Unsat";
    case Outcome::Exhausted: return "Exhausted";
    }
    return "Unsat";
}

namespace {
    using Mask = std::uint64_t;

    void check_span(int k)
    {
        if (k < 0)
            throw ValidationError("span must be nonnegative, got " + std::to_string(k));
        if (k > max_span)
            throw CapacityError("span " + std::to_string(k) + " exceeds the supported maximum " + std::to_string(max_span));
    }

    void check_pins(const Graph& graph, int k, const LabelPins& pins)
    {
        for (const auto& [v, x] : pins) {
            if (!graph.contains(v))
                throw ValidationError("pin on unknown vertex " + std::to_string(v));
            if (x < 0 || x > k)
                throw ValidationError("pinned label " + std::to_string(x) + " of vertex " + std::to_string(v)
                    + " is outside [0," + std::to_string(k) + "]");
        }
    }

    // Reason string if two pins already violate a constraint.
    std::string pin_conflict(const Graph& graph, const LabelPins& pins)
    {
        std::vector<int> pinned(graph.num_vertices(), -1);
        for (const auto& [v, x] : pins) {
            if (pinned[v] >= 0 && pinned[v] != x)
                return "vertex " + std::to_string(v) + " pinned to both " + std::to_string(pinned[v]) + " and "
                    + std::to_string(x);
            pinned[v] = x;
        }
        for (const auto& [v, x] : pins) {
            for (VertexId u : graph.neighbours(v))
                if (pinned[u] >= 0 && std::abs(pinned[u] - x) < 2)
                    return "pins on adjacent vertices " + std::to_string(v) + " and " + std::to_string(u) + " differ by "
                        + std::to_string(std::abs(pinned[u] - x));
            for (VertexId u : graph.neighbours(v))
                for (VertexId w : graph.neighbours(u))
                    if (w != v && !graph.has_edge(v, w) && pinned[w] == x)
                        return "pins on vertices " + std::to_string(v) + " and " + std::to_string(w)
                            + " at distance two share label " + std::to_string(x);
        }
        return {};
    }

    class LabelSearch {
    public:
        LabelSearch(const Graph& graph, int k, std::int64_t budget)
            : graph_(graph), k_(k), budget_(budget), d2_(graph.distance_two_lists()),
              dom_(graph.num_vertices(), full_mask(k)), queued_(graph.num_vertices(), false)
        {
            for (int x = 0; x <= k; ++x) {
                Mask m = Mask{1} << x;
                if (x > 0)
                    m |= Mask{1} << (x - 1);
                if (x < k)
                    m |= Mask{1} << (x + 1);
                near_.push_back(m);
            }
            order_.resize(graph.num_vertices());
            for (VertexId v = 0; v < graph.num_vertices(); ++v)
                order_[v] = v;
            std::stable_sort(order_.begin(), order_.end(),
                [&](VertexId a, VertexId b) { return graph.degree(a) > graph.degree(b); });
        }

        static Mask full_mask(int k) { return k == 63 ? ~Mask{0} : (Mask{1} << (k + 1)) - 1; }

        SolveResult run(const LabelPins& pins, const std::function<bool(const std::vector<int>&)>& visit)
        {
            SolveResult result;
            for (VertexId v = 0; v < graph_.num_vertices(); ++v)
                enqueue(v);
            bool ok = true;
            for (const auto& [v, x] : pins)
                ok = ok && narrow(v, dom_[v] & (Mask{1} << x));
            ok = ok && propagate();
            if (!ok) {
                result.reason = "propagation refutes the pinned labels";
                return result;
            }

            bool any = false;
            std::vector<Frame> stack;
            auto descend = [&](std::size_t from) {
                std::size_t first = next_open(from);
                if (first == order_.size()) {
                    any = true;
                    return visit(current_labels());
                }
                std::size_t pos = tightest(first);
                stack.push_back({pos, first, dom_[order_[pos]], trail_.size()});
                return true;
            };

            if (!descend(0))
                return finish(result, any, false);
            while (!stack.empty()) {
                Frame& frame = stack.back();
                undo(frame.mark);
                if (frame.remaining == 0) {
                    stack.pop_back();
                    continue;
                }
                int x = std::countr_zero(frame.remaining);
                frame.remaining &= frame.remaining - 1;
                if (nodes_ >= budget_)
                    return finish(result, any, true);
                ++nodes_;
                VertexId v = order_[frame.pos];
                std::size_t from = frame.first_open;
                if (!narrow(v, Mask{1} << x)) {
                    clear_queue(0);
                    continue;
                }
                if (!propagate())
                    continue;
                if (!descend(from))
                    return finish(result, any, false);
            }
            return finish(result, any, false);
        }

    private:
        struct Frame {
            std::size_t pos;
            std::size_t first_open;
            Mask remaining;
            std::size_t mark;
        };

        SolveResult& finish(SolveResult& result, bool any, bool exhausted)
        {
            result.nodes = nodes_;
            result.outcome = exhausted ? Outcome::Exhausted : any ? Outcome::Sat : Outcome::Unsat;
            return result;
        }

        std::size_t next_open(std::size_t from) const
        {
            while (from < order_.size() && std::has_single_bit(dom_[order_[from]]))
                ++from;
            return from;
        }

        // Smallest open domain, ties to the earlier position in the degree order.
        std::size_t tightest(std::size_t first) const
        {
            std::size_t best = first;
            int best_size = std::popcount(dom_[order_[first]]);
            for (std::size_t p = first + 1; p < order_.size() && best_size > 2; ++p) {
                int size = std::popcount(dom_[order_[p]]);
                if (size > 1 && size < best_size) {
                    best = p;
                    best_size = size;
                }
            }
            return best;
        }

        std::vector<int> current_labels() const
        {
            std::vector<int> labels(dom_.size());
            for (std::size_t v = 0; v < dom_.size(); ++v)
                labels[v] = std::countr_zero(dom_[v]);
            return labels;
        }

        void enqueue(VertexId v)
        {
            if (!queued_[v]) {
                queued_[v] = true;
                queue_.push_back(v);
            }
        }

        bool narrow(VertexId v, Mask m)
        {
            if (m == dom_[v])
                return true;
            trail_.emplace_back(v, dom_[v]);
            dom_[v] = m;
            if (m == 0)
                return false;
            enqueue(v);
            for (VertexId u : graph_.neighbours(v))
                enqueue(u);
            return true;
        }

        void undo(std::size_t mark)
        {
            while (trail_.size() > mark) {
                dom_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
        }

        bool propagate()
        {
            std::size_t head = 0;
            bool ok = true;
            while (ok && head < queue_.size()) {
                VertexId v = queue_[head++];
                queued_[v] = false;
                ok = revise(v);
            }
            clear_queue(head);
            return ok;
        }

        void clear_queue(std::size_t head)
        {
            for (std::size_t i = head; i < queue_.size(); ++i)
                queued_[queue_[i]] = false;
            queue_.clear();
        }

        bool revise(VertexId v)
        {
            const Mask d = dom_[v];
            if (std::has_single_bit(d)) {
                const int x = std::countr_zero(d);
                for (VertexId u : graph_.neighbours(v))
                    if (!narrow(u, dom_[u] & ~near_[x]))
                        return false;
                for (VertexId u : d2_[v])
                    if (!narrow(u, dom_[u] & ~(Mask{1} << x)))
                        return false;
            }

            // The neighbours of v are pairwise within distance two, so they need deg(v)
            // distinct labels clear of L(v) and its two neighbours on the line.
            const int deg = graph_.degree(v);
            if (deg == 0)
                return true;
            Mask offered = 0;
            for (VertexId u : graph_.neighbours(v))
                offered |= dom_[u];
            Mask keep = 0;
            for (Mask rest = dom_[v]; rest; rest &= rest - 1) {
                int x = std::countr_zero(rest);
                if (std::popcount(offered & ~near_[x]) >= deg)
                    keep |= Mask{1} << x;
            }
            return narrow(v, keep);
        }

        const Graph& graph_;
        int k_;
        std::int64_t budget_;
        std::int64_t nodes_ = 0;
        std::vector<std::vector<VertexId>> d2_;
        std::vector<Mask> dom_;
        std::vector<Mask> near_;
        std::vector<VertexId> order_;
        std::vector<std::pair<VertexId, Mask>> trail_;
        std::vector<VertexId> queue_;
        std::vector<bool> queued_;
    };
}

SolveResult for_each_labelling(const Graph& graph, int k, const LabelPins& pins, std::int64_t budget,
    const std::function<bool(const std::vector<int>&)>& visit)
{
    check_span(k);
    check_pins(graph, k, pins);
    if (budget <= 0)
        throw ValidationError("budget must be positive");
    if (auto conflict = pin_conflict(graph, pins); !conflict.empty()) {
        SolveResult result;
        result.reason = conflict;
        return result;
    }
    return LabelSearch(graph, k, budget).run(pins, [&](const std::vector<int>& labels) {
        if (!verify_labelling(graph, Labelling{k, labels}))
            throw InvariantError("search produced an invalid labelling: " + explain_labelling(graph, {k, labels}));
        return visit(labels);
    });
}

SolveResult solve_labelling(const Graph& graph, int k, const LabelPins& pins, std::int64_t budget)
{
    std::optional<Labelling> witness;
    auto result = for_each_labelling(graph, k, pins, budget, [&](const std::vector<int>& labels) {
        witness = Labelling{k, labels};
        return false;
    });
    result.witness = std::move(witness);
    return result;
}

namespace {
    // Deliberately plain: adjacency matrix, id order, checks only against earlier vertices.
    class BruteForce {
    public:
        BruteForce(const Graph& graph, int k, const LabelPins& pins) : n_(graph.num_vertices()), k_(k), fixed_(n_, -1)
        {
            adj_.assign(n_, std::vector<char>(n_, 0));
            for (const Edge& e : graph.edges())
                adj_[e.u][e.v] = adj_[e.v][e.u] = 1;
            dist2_.assign(n_, std::vector<char>(n_, 0));
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    if (a != b && !adj_[a][b])
                        for (int m = 0; m < n_; ++m)
                            if (adj_[a][m] && adj_[m][b]) {
                                dist2_[a][b] = 1;
                                break;
                            }
            for (const auto& [v, x] : pins) {
                if (fixed_[v] >= 0 && fixed_[v] != x)
                    contradictory_ = true;
                fixed_[v] = x;
            }
        }

        /// Lexicographically first labelling with vertex 0 labelled first_label.
        std::optional<std::vector<int>> first_with(int first_label) const
        {
            if (contradictory_)
                return std::nullopt;
            std::vector<int> labels(n_, -1);
            if (n_ == 0)
                return labels;
            if (fixed_[0] >= 0 && fixed_[0] != first_label)
                return std::nullopt;
            labels[0] = first_label;
            if (extend(labels, 1))
                return labels;
            return std::nullopt;
        }

        int n() const { return n_; }

    private:
        bool compatible(const std::vector<int>& labels, int v, int x) const
        {
            for (int u = 0; u < v; ++u) {
                if (adj_[u][v] && std::abs(labels[u] - x) < 2)
                    return false;
                if (dist2_[u][v] && labels[u] == x)
                    return false;
            }
            return true;
        }

        bool extend(std::vector<int>& labels, int v) const
        {
            if (!compatible(labels, v - 1, labels[v - 1]))
                return false;
            if (v == n_)
                return true;
            for (int x = 0; x <= k_; ++x) {
                if (fixed_[v] >= 0 && fixed_[v] != x)
                    continue;
                labels[v] = x;
                if (extend(labels, v + 1))
                    return true;
            }
            return false;
        }

        int n_, k_;
        std::vector<int> fixed_;
        std::vector<std::vector<char>> adj_, dist2_;
        bool contradictory_ = false;
    };
}

SolveResult solve_labelling_bruteforce(const Graph& graph, int k, const LabelPins& pins, Exec exec)
{
    check_span(k);
    check_pins(graph, k, pins);
    if (std::pow(k + 1.0, graph.num_vertices()) > max_bruteforce_space)
        throw CapacityError("brute-force labelling space (k+1)^n exceeds 1e9");

    BruteForce oracle(graph, k, pins);
    SolveResult result;
    std::optional<std::vector<int>> found;
    if (oracle.n() == 0)
        found = oracle.first_with(0);
    else if (exec == Exec::Serial) {
        for (int x = 0; x <= k && !found; ++x)
            found = oracle.first_with(x);
    }
    else {
        std::vector<std::optional<std::vector<int>>> branch(k + 1);
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic)
        for (int x = 0; x <= k; ++x)
            branch[x] = oracle.first_with(x);
        for (int x = 0; x <= k && !found; ++x)
            found = branch[x];
    }
    if (found) {
        result.outcome = Outcome::Sat;
        result.witness = Labelling{k, *found};
        if (!verify_labelling(graph, *result.witness))
            throw InvariantError("brute force produced an invalid labelling");
    }
    return result;
}

std::vector<BoundaryTuple> enumerate_boundary_behaviour(const Graph& gadget, const PortMap& ports, int k,
    const std::vector<int>& boundary_domain, Exec exec, std::int64_t budget)
{
    const VertexId u = port(ports, "u"), v = port(ports, "v"), au = port(ports, "a_u"), av = port(ports, "a_v");
    std::vector<VertexId> distinct{u, v, au, av};
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
        throw ValidationError("ports u, v, a_u, a_v must be four distinct vertices");
    check_span(k);
    for (int x : boundary_domain)
        if (x < 0 || x > k)
            throw ValidationError("boundary label " + std::to_string(x) + " is outside [0," + std::to_string(k) + "]");

    std::vector<BoundaryTuple> candidates;
    for (int lu : boundary_domain)
        for (int lv : boundary_domain)
            for (int x = 0; x <= k; ++x)
                for (int y = 0; y <= k; ++y)
                    candidates.push_back({lu, lv, x, y});
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Outcome> verdict(candidates.size());
    auto decide = [&](std::size_t i) {
        const auto& t = candidates[i];
        verdict[i] = solve_labelling(gadget, k, {{u, t[0]}, {v, t[1]}, {au, t[2]}, {av, t[3]}}, budget).outcome;
    };
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            decide(i);
    }
    else {
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic)
        for (std::size_t i = 0; i < candidates.size(); ++i)
            decide(i);
    }

    std::vector<BoundaryTuple> result;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (verdict[i] == Outcome::Exhausted)
            throw CapacityError("boundary enumeration ran out of budget");
        if (verdict[i] == Outcome::Sat)
            result.push_back(candidates[i]);
    }
    return result;
}

std::optional<int> compute_min_span(const Graph& graph, std::int64_t budget)
{
    if (graph.num_vertices() == 0)
        throw ValidationError("minimum span of the empty graph is undefined");
    for (int k = graph.max_degree(); k <= max_span; ++k) {
        auto result = solve_labelling(graph, k, {}, budget);
        if (result.outcome == Outcome::Sat)
            return k;
        if (result.outcome == Outcome::Exhausted)
            return std::nullopt;
    }
    throw CapacityError("minimum span exceeds the supported maximum " + std::to_string(max_span));
}

} // namespace l21

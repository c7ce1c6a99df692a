#include <l21/atlas.hh>
#include <l21/errors.hh>
#include <l21/witness.hh>

#include <algorithm>
#include <map>
#include <optional>

namespace l21 {

namespace {
    Colour colour_of(bool value) { return value ? Colour::White : Colour::Black; }

    void set_arc(const Graph& g, ColouredOrientation& co, VertexId from, VertexId to)
    {
        auto index = g.edge_index(from, to);
        if (!index)
            throw InvariantError("no edge " + std::to_string(from) + "-" + std::to_string(to) + " to orient");
        co.orientation[*index] = from == g.edge(*index).u ? Orient::Forward : Orient::Backward;
    }

    void check_identifying(const PlanarStage& planar, const TwoColouring& c)
    {
        for (int e : planar.identifying) {
            const Edge& edge = planar.graph.edge(e);
            if (c[edge.u] != c[edge.v])
                throw InvariantError("identifying edge " + std::to_string(edge.u) + "-" + std::to_string(edge.v)
                    + " is dichromatic");
        }
    }

    const InstanceStage& instance_for(const ReductionTrace& trace, int k)
    {
        if (!trace.instance)
            throw ValidationError("the trace has no labelling instance");
        if (trace.instance->k != k)
            throw ValidationError("the trace was built for k = " + std::to_string(trace.instance->k));
        return *trace.instance;
    }
}

TwoColouring assignment_to_matching(const ReductionTrace& trace, const Assignment& a)
{
    if (auto bad = first_violated_clause(trace.formula, a))
        throw ValidationError("assignment leaves clause " + std::to_string(*bad + 1) + " all equal");
    const Assignment ma = extend_assignment(trace.monotone, a);
    const PlanarStage& planar = trace.planar;
    TwoColouring c(planar.graph.num_vertices(), Colour::Black);

    const GadgetInstance k = build_clause_gadget();
    std::map<int, TwoColouring> patterns;
    for (std::size_t block = 0; block < trace.monotone.formula.clauses.size(); ++block) {
        const Clause& clause = trace.monotone.formula.clauses[block];
        int key = 0, whites = 0;
        for (int t = 0; t < 3; ++t) {
            key |= ma[clause[t].var] << t;
            whites += ma[clause[t].var];
        }
        auto it = patterns.find(key);
        if (it == patterns.end()) {
            ColourPins pins{{k.ports.at("a"), colour_of(whites >= 2)}};
            for (int t = 0; t < 3; ++t)
                for (const char* p : {"o", "p", "q", "r"})
                    pins.emplace_back(k.ports.at(p + std::to_string(t + 1)), colour_of((key >> t) & 1));
            std::optional<TwoColouring> found;
            for_each_colouring(k.graph, MatchingMode::Almost, pins, [&](const TwoColouring& kc) {
                found = kc;
                return false;
            });
            if (!found)
                throw InvariantError("clause gadget has no colouring for an NAE pattern");
            it = patterns.emplace(key, *found).first;
        }
        const auto& ids = trace.cubic.block_ids[block];
        for (VertexId x = 0; x < k.graph.num_vertices(); ++x)
            if (ids[x] >= 0)
                c[ids[x]] = it->second[x];
    }

    const DrawnFigure u = draw(atlas_uncrossing());
    const auto& chords = trace.cubic.chords.chords;
    for (const Crossing& x : planar.crossings) {
        const Colour alpha = colour_of(ma[chords[x.delta].var]);
        const Colour beta = colour_of(ma[chords[x.gamma].var]);
        const TwoColouring uc = uncrossing_colouring(u, alpha, beta);
        for (VertexId j = 0; j < u.graph.num_vertices(); ++j)
            if (planar.u_offset[j] >= 0)
                c[x.base + planar.u_offset[j]] = uc[j];
    }

    if (!verify_2cpm(planar.graph, c))
        throw InvariantError("assembled colouring is not a two-coloured perfect matching");
    check_identifying(planar, c);
    return c;
}

ColouredOrientation matching_to_good_orientation(const Graph& gprime, const TwoColouring& c, const Graph& h)
{
    if (static_cast<int>(c.size()) != gprime.num_vertices())
        throw ValidationError("colouring covers " + std::to_string(c.size()) + " vertices, G' has "
            + std::to_string(gprime.num_vertices()));
    if (!verify_2cpm(gprime, c))
        throw ValidationError("colouring is not a two-coloured perfect matching");
    const auto aux = aux_edges_of(h);
    std::vector<int> aux_of_edge(gprime.num_edges(), -1);
    for (std::size_t i = 0; i < aux.size(); ++i) {
        auto e = gprime.contains(aux[i].y) ? gprime.edge_index(aux[i].x, aux[i].y) : std::nullopt;
        if (!e)
            throw ValidationError("H does not belong to this G'");
        aux_of_edge[*e] = static_cast<int>(i);
    }
    if (std::count(aux_of_edge.begin(), aux_of_edge.end(), -1) != 0)
        throw ValidationError("H does not belong to this G'");

    std::vector<std::optional<Colour>> col(h.num_vertices());
    for (VertexId v = 0; v < gprime.num_vertices(); ++v)
        col[v] = c[v];
    std::vector<std::pair<VertexId, VertexId>> arcs;
    auto path = [&](Colour colour, std::initializer_list<VertexId> vs) {
        const VertexId* prev = nullptr;
        for (const VertexId& v : vs) {
            col[v] = colour;
            if (prev)
                arcs.emplace_back(*prev, v);
            prev = &v;
        }
    };

    for (const AuxEdgeIds& a : aux)
        if (c[a.x] == c[a.y]) {
            const Colour same = c[a.x];
            col[a.in] = col[a.out] = same;
            path(opposite(same), {a.cx, a.top, a.cy, a.bottom, a.cx});
        }

    // The other dichromatic edge of G' at x.
    auto next_dichromatic = [&](VertexId x, int current) {
        for (int e : gprime.incident_edges(x)) {
            const int i = aux_of_edge[e];
            const Edge& edge = gprime.edge(e);
            if (i != current && c[edge.u] != c[edge.v])
                return i;
        }
        throw InvariantError("vertex " + std::to_string(x) + " lacks a second dichromatic edge");
    };

    for (std::size_t start = 0; start < aux.size(); ++start) {
        if (c[aux[start].x] == c[aux[start].y] || col[aux[start].out])
            continue;
        int i = static_cast<int>(start);
        Colour colour = Colour::Black;
        while (true) {
            const AuxEdgeIds& a = aux[i];
            const VertexId x = c[a.x] == colour ? a.x : a.y;
            path(colour, {a.out, a.bottom, x == a.x ? a.cx : a.cy, x});
            const int j = next_dichromatic(x, i);
            const AuxEdgeIds& b = aux[j];
            path(colour, {x, x == b.x ? b.cx : b.cy, b.top, b.in});
            if (col[b.out])
                break;
            i = j;
            colour = opposite(colour);
        }
    }

    ColouredOrientation co;
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        if (!col[v])
            throw InvariantError("vertex " + std::to_string(v) + " of H was left uncoloured");
        co.colouring.push_back(*col[v]);
    }
    co.orientation.assign(h.num_edges(), Orient::Unoriented);
    for (auto [from, to] : arcs)
        set_arc(h, co, from, to);
    if (!is_good_orientation(h, co, out_vertices_of(h)))
        throw InvariantError("constructed orientation is not good");
    return co;
}

bool oriented_components_ok(const Graph& h, const ColouredOrientation& co)
{
    const int n = h.num_vertices();
    std::vector<VertexId> succ(n, -1), pred(n, -1);
    for (int e = 0; e < h.num_edges(); ++e)
        if (auto arc = arc_of(h, co, e)) {
            if (succ[arc->first] >= 0 || pred[arc->second] >= 0)
                return false;
            succ[arc->first] = arc->second;
            pred[arc->second] = arc->first;
        }
    std::vector<bool> seen(n, false);
    for (VertexId v = 0; v < n; ++v) {
        if (seen[v] || succ[v] < 0 || pred[v] >= 0)
            continue;
        if (h.role(v) != Role::OutVertex)
            return false;
        VertexId w = v;
        while (succ[w] >= 0) {
            seen[w] = true;
            w = succ[w];
        }
        seen[w] = true;
        if (h.role(w) != Role::InVertex)
            return false;
    }
    // Whatever remains with arcs lies on a circuit: in and out degree are both one.
    for (VertexId v = 0; v < n; ++v)
        if (!seen[v] && (succ[v] >= 0) != (pred[v] >= 0))
            return false;
    return true;
}

ColouredOrientation canonicalize_orientation(const Graph& h, const ColouredOrientation& co)
{
    const auto outs = out_vertices_of(h);
    if (!verify_coloured_orientation(h, co, outs))
        throw ValidationError("input is not a coloured orientation");
    ColouredOrientation result = co;
    for (const AuxEdgeIds& a : aux_edges_of(h)) {
        const Colour c = co.colouring[a.cx];
        if (co.colouring[a.top] != c || co.colouring[a.bottom] != c || co.colouring[a.cy] != c)
            continue;
        result.colouring[a.in] = result.colouring[a.out] = opposite(c);
        result.orientation[*h.edge_index(a.top, a.in)] = Orient::Unoriented;
        result.orientation[*h.edge_index(a.bottom, a.out)] = Orient::Unoriented;
    }
    if (!is_good_orientation(h, result, outs))
        throw InvariantError("canonical orientation is not good");
    if (!oriented_components_ok(h, result))
        throw InvariantError("oriented subgraph has a component that is neither a circuit nor an out-in path");
    return result;
}

namespace {
    struct G5Witness {
        BoundaryTuple boundary;
        std::array<int, 10> interior; // b_u, b_v, c, d, e3, e2, e1, f, g1, g2
    };

    constexpr std::array<const char*, 10> g5_interior{"b_u", "b_v", "c", "d", "e3", "e2", "e1", "f", "g1", "g2"};
    constexpr G5Witness g5_witnesses[] = {
        {{0, 0, 5, 2}, {3, 4, 0, 5, 1, 2, 3, 0, 5, 4}},
        {{0, 5, 4, 1}, {2, 3, 0, 5, 1, 2, 3, 0, 5, 4}},
        {{0, 0, 3, 5}, {1, 2, 4, 0, 5, 3, 2, 5, 0, 1}},
    };

    std::vector<int> fill_G5(const GadgetInstance& g, const BoundaryTuple& t)
    {
        const int k = 5;
        for (const G5Witness& w : g5_witnesses)
            for (bool mirror : {false, true})
                for (bool complement : {false, true}) {
                    auto lab = [&](int x) { return complement ? k - x : x; };
                    std::map<std::string, int> by_name;
                    by_name[mirror ? "v" : "u"] = lab(w.boundary[0]);
                    by_name[mirror ? "u" : "v"] = lab(w.boundary[1]);
                    by_name[mirror ? "a_v" : "a_u"] = lab(w.boundary[2]);
                    by_name[mirror ? "a_u" : "a_v"] = lab(w.boundary[3]);
                    for (int i = 0; i < 10; ++i) {
                        std::string name = g5_interior[i];
                        if (mirror && name == "b_u")
                            name = "b_v";
                        else if (mirror && name == "b_v")
                            name = "b_u";
                        by_name[name] = lab(w.interior[i]);
                    }
                    if (BoundaryTuple{by_name["u"], by_name["v"], by_name["a_u"], by_name["a_v"]} != t)
                        continue;
                    std::vector<int> labels(g.graph.num_vertices());
                    for (VertexId x = 0; x < g.graph.num_vertices(); ++x)
                        labels[x] = by_name.at(g.graph.name(x));
                    return labels;
                }
        throw InvariantError("no G5 witness for the requested boundary");
    }

    std::vector<int> fill_Gk(const GadgetInstance& g, BoundaryTuple t)
    {
        const int k = g.k, m = k - 5;
        const bool complement = t[0] == k && t[1] == k;
        if (complement)
            for (int& x : t)
                x = k - x;
        std::map<std::string, int> by_name{{"u", t[0]}, {"v", t[1]}, {"a_u", t[2]}, {"a_v", t[3]}};
        const int lo = std::min(t[2], t[3]), hi = std::max(t[2], t[3]);
        int shift;
        std::array<int, 4> cd; // c_l, d_l, c_r, d_r
        if (lo == 2 && hi == k && t[0] == 0 && t[1] == 0) {
            shift = 3;
            cd = {0, k, 1, k};
        }
        else if (lo == k - 2 && hi == k && t[0] == 0 && t[1] == 0) {
            shift = 1;
            cd = {k - 1, 0, 0, k};
        }
        else if (lo == 1 && hi == k - 1 && t[0] != t[1] && (t[0] == 0 || t[0] == k) && (t[1] == 0 || t[1] == k)) {
            shift = 2;
            cd = {0, k, k, 0};
        }
        else
            throw InvariantError("boundary outside the edge-gadget table");

        for (int j = 1; j <= m; ++j) {
            by_name["b" + std::to_string(j)] = j + shift;
            for (int side = 0; side < 2; ++side) {
                const std::string suffix = "(" + std::string(side == 0 ? "l" : "r") + "," + std::to_string(j) + ")";
                const int c = cd[2 * side], d = cd[2 * side + 1];
                by_name["c" + suffix] = c;
                by_name["d" + suffix] = d;
                if (d == k) {
                    by_name["g" + suffix] = 0;
                    by_name["e" + suffix] = c == 0 ? 1 : 0;
                    by_name["h" + suffix] = k - 1;
                    by_name["i" + suffix] = k;
                }
                else {
                    by_name["g" + suffix] = k;
                    by_name["e" + suffix] = c == k ? k - 1 : k;
                    by_name["h" + suffix] = 0;
                    by_name["i" + suffix] = 1;
                }
                for (int f = 1; f <= k - 3; ++f)
                    by_name["f" + std::to_string(f) + suffix] = f + 1;
            }
        }
        std::vector<int> labels(g.graph.num_vertices());
        for (VertexId x = 0; x < g.graph.num_vertices(); ++x) {
            const int value = by_name.at(g.graph.name(x));
            labels[x] = complement ? k - value : value;
        }
        return labels;
    }
}

std::vector<int> fill_edge_gadget(const GadgetInstance& gadget, const BoundaryTuple& boundary)
{
    std::vector<int> labels;
    switch (gadget.kind) {
    case GadgetKind::G4:
        labels.resize(4);
        for (auto [name, i] : {std::pair{"u", 0}, {"v", 1}, {"a_u", 2}, {"a_v", 3}})
            labels[gadget.ports.at(name)] = boundary[i];
        break;
    case GadgetKind::G5: labels = fill_G5(gadget, boundary); break;
    case GadgetKind::Gk: labels = fill_Gk(gadget, boundary); break;
    default: throw ValidationError("not an edge gadget");
    }
    // The Gk fill only inspects the sorted pair of a-labels, so check the result in every case.
    if (!verify_labelling(gadget.graph, {gadget.k, labels}))
        throw InvariantError("boundary tuple is outside the edge gadget table");
    return labels;
}

namespace {
    // Label of the gadget neighbour of an endpoint labelled `end`, by how the H edge meets it.
    int neighbour_label(int end, int k, bool leaves, bool enters)
    {
        const int label = enters ? k : leaves ? 2 : k - 1;
        return end == 0 ? label : k - label;
    }
}

Labelling orientation_to_labelling(const ReductionTrace& trace, const ColouredOrientation& co, int k)
{
    const InstanceStage& st = instance_for(trace, k);
    const Graph& h = trace.aux.graph;
    if (!is_good_orientation(h, co, out_vertices_of(h)))
        throw ValidationError("orientation is not good");

    Labelling L{k, std::vector<int>(st.graph.num_vertices(), -1)};
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        L.labels[v] = co.colouring[v] == Colour::White ? 0 : k;

    const GadgetInstance& gk = st.gadget;
    std::map<BoundaryTuple, std::vector<int>> fills;
    for (int e = 0; e < h.num_edges(); ++e) {
        const Edge& edge = h.edge(e);
        auto arc = arc_of(h, co, e);
        const bool forward = arc && arc->first == edge.u;
        const bool backward = arc && arc->first == edge.v;
        const BoundaryTuple t{L.labels[edge.u], L.labels[edge.v], neighbour_label(L.labels[edge.u], k, forward, backward),
            neighbour_label(L.labels[edge.v], k, backward, forward)};
        auto it = fills.find(t);
        if (it == fills.end())
            it = fills.emplace(t, fill_edge_gadget(gk, t)).first;
        for (VertexId j = 0; j < gk.graph.num_vertices(); ++j)
            L.labels[gadget_vertex(st, h, e, j)] = it->second[j];
    }

    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        // Work as if v were labelled 0 and mirror afterwards.
        const bool flip = L.labels[v] == k;
        auto norm = [&](int x) { return flip ? k - x : x; };
        std::vector<bool> used(k + 1, false);
        for (VertexId w : st.graph.neighbours(v))
            if (L.labels[w] >= 0)
                used[norm(L.labels[w])] = true;
        std::vector<int> free;
        for (int x = 2; x <= k; ++x)
            if (!used[x])
                free.push_back(x);
        const auto& pend = st.pendants[v];
        std::size_t next = 0;
        if (auto w = st.w_of.find(v); w != st.w_of.end()) {
            if (used[k])
                throw InvariantError("outvertex " + std::to_string(v) + " has an arc into it");
            free.erase(std::find(free.begin(), free.end(), k));
            L.labels[w->second] = norm(k);
            int leaf = 1;
            for (VertexId x : st.leaves.at(w->second))
                L.labels[x] = norm(leaf++);
            next = 1;
        }
        if (free.size() < pend.size() - next)
            throw InvariantError("vertex " + std::to_string(v) + " has too few labels left for its pendants");
        for (std::size_t i = next; i < pend.size(); ++i)
            L.labels[pend[i]] = norm(free[i - next]);
    }

    if (!verify_labelling(st.graph, L))
        throw InvariantError("constructed labelling is invalid: " + explain_labelling(st.graph, L));
    return L;
}

ColouredOrientation labelling_to_orientation(const ReductionTrace& trace, const Labelling& L)
{
    if (!trace.instance)
        throw ValidationError("the trace has no labelling instance");
    const InstanceStage& st = *trace.instance;
    const int k = st.k;
    if (L.k != k)
        throw ValidationError("labelling span " + std::to_string(L.k) + " differs from the instance's " + std::to_string(k));
    if (!verify_labelling(st.graph, L))
        throw ValidationError("labelling is invalid: " + explain_labelling(st.graph, L));

    const Graph& h = trace.aux.graph;
    ColouredOrientation co;
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        if (L.labels[v] != 0 && L.labels[v] != k)
            throw InvariantError("vertex " + std::to_string(v) + " of H is labelled " + std::to_string(L.labels[v]));
        co.colouring.push_back(L.labels[v] == 0 ? Colour::White : Colour::Black);
    }
    co.orientation.assign(h.num_edges(), Orient::Unoriented);
    const VertexId au = st.gadget.ports.at("a_u"), av = st.gadget.ports.at("a_v");
    auto extreme = [&](int x) { return x == 0 || x == k; };
    for (int e = 0; e < h.num_edges(); ++e) {
        const bool to_v = extreme(L.labels[gadget_vertex(st, h, e, av)]);
        const bool to_u = extreme(L.labels[gadget_vertex(st, h, e, au)]);
        if (to_v && to_u)
            throw InvariantError("edge " + std::to_string(e) + " of H would be oriented both ways");
        if (to_v)
            co.orientation[e] = Orient::Forward;
        else if (to_u)
            co.orientation[e] = Orient::Backward;
    }
    if (!verify_coloured_orientation(h, co, out_vertices_of(h)))
        throw InvariantError("labelling does not induce a coloured orientation");
    return co;
}

TwoColouring orientation_to_matching(const ReductionTrace& trace, const ColouredOrientation& co)
{
    const Graph& h = trace.aux.graph;
    if (!is_good_orientation(h, co, out_vertices_of(h)))
        throw ValidationError("orientation is not good");
    const Graph& gprime = trace.planar.graph;
    TwoColouring c(co.colouring.begin(), co.colouring.begin() + gprime.num_vertices());
    if (!verify_2cpm(gprime, c))
        throw InvariantError("restricted colouring is not a two-coloured perfect matching");
    return c;
}

Assignment matching_to_assignment(const ReductionTrace& trace, const TwoColouring& c)
{
    const PlanarStage& planar = trace.planar;
    if (static_cast<int>(c.size()) != planar.graph.num_vertices() || !verify_2cpm(planar.graph, c))
        throw ValidationError("colouring is not a two-coloured perfect matching of G'");
    check_identifying(planar, c);

    const int vars = trace.monotone.formula.num_vars;
    std::vector<std::optional<Colour>> seen(vars + 1);
    for (VertexId v = 0; v < planar.graph.num_vertices(); ++v) {
        const int var = planar.literal[v];
        if (var == 0)
            continue;
        if (seen[var] && *seen[var] != c[v])
            throw InvariantError("literal vertices of variable " + std::to_string(var) + " disagree in colour");
        seen[var] = c[v];
    }
    Assignment ma;
    for (int var = 1; var <= vars; ++var)
        ma.values.push_back(seen[var] == Colour::White);
    const Assignment a = project_assignment(trace.monotone, ma);
    if (!check_nae(trace.formula, a))
        throw InvariantError("recovered assignment is not NAE-satisfying");
    return a;
}

} // namespace l21

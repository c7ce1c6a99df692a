#include <l21/errors.hh>
#include <l21/reduction.hh>

#include <algorithm>

namespace l21 {

namespace {
    void require(bool ok, const std::string& what)
    {
        if (!ok)
            throw InvariantError(what);
    }

    // Rotation entry of `old` at v becomes `now`.
    void replace_in(std::vector<VertexId>& around, VertexId old, VertexId now)
    {
        auto it = std::find(around.begin(), around.end(), old);
        if (it == around.end())
            throw InvariantError("rotation lost an edge during splicing");
        *it = now;
    }

    std::vector<std::vector<VertexId>> rotation_copy(const RotationSystem& rot)
    {
        std::vector<std::vector<VertexId>> order;
        for (VertexId v = 0; v < rot.num_vertices(); ++v)
            order.emplace_back(rot.around(v).begin(), rot.around(v).end());
        return order;
    }
}

PlanarStage planarize(const CubicStage& cubic)
{
    validate_chords(cubic.chords);
    const Graph& g = cubic.graph;
    const ChordSystem& cs = cubic.chords;
    const int n0 = g.num_vertices();
    const GadgetInstance u = build_uncrossing();

    PlanarStage st;
    std::vector<bool> pendant(u.graph.num_vertices(), false);
    for (const char* p : {"a", "w", "z2", "z4"})
        pendant[u.ports.at(p)] = true;
    st.u_offset.assign(u.graph.num_vertices(), -1);
    int copy_size = 0;
    for (VertexId j = 0; j < u.graph.num_vertices(); ++j)
        if (!pendant[j])
            st.u_offset[j] = copy_size++;

    const int num_chords = static_cast<int>(cs.chords.size());
    std::vector<std::vector<int>> along(num_chords);
    for (int i = 0; i < num_chords; ++i)
        for (int j = i + 1; j < num_chords; ++j)
            if (chords_interleave(cs.chords[i], cs.chords[j])) {
                const int index = static_cast<int>(st.crossings.size());
                st.crossings.push_back(
                    {i, j, crossing_sign(cs, cs.chords[i], cs.chords[j]), n0 + copy_size * index});
                along[i].push_back(index);
                along[j].push_back(index);
            }
    for (int c = 0; c < num_chords; ++c) {
        auto other = [&](int x) {
            const Crossing& X = st.crossings[x];
            return cs.chords[X.gamma == c ? X.delta : X.gamma];
        };
        std::sort(along[c].begin(), along[c].end(),
            [&](int x, int y) { return compare_along(cs, cs.chords[c], other(x), other(y)) < 0; });
        for (std::size_t i = 1; i < along[c].size(); ++i)
            require(compare_along(cs, cs.chords[c], other(along[c][i - 1]), other(along[c][i])) != 0,
                "three chords meet in one point");
    }

    // Around a crossing the half-chords run +gamma, +delta, -gamma, -delta counter-clockwise
    // when sign > 0, matching the outer pendants z2, a, w, z4 of the gadget.
    auto pendant_for = [&](const Crossing& X, int chord, int side) -> VertexId {
        if (chord == X.gamma)
            return u.ports.at(side > 0 ? "z2" : "w");
        return u.ports.at((side > 0) == (X.sign > 0) ? "a" : "z4");
    };
    auto gate_of = [&](const Crossing& X, VertexId p) { return X.base + st.u_offset[u.graph.neighbours(p)[0]]; };

    std::vector<std::map<VertexId, VertexId>> gate_link(st.crossings.size());
    std::vector<std::vector<VertexId>> paths(num_chords);
    for (int c = 0; c < num_chords; ++c) {
        auto& seq = paths[c];
        seq.push_back(cs.slot_vertex[cs.chords[c].low]);
        for (int x : along[c]) {
            const Crossing& X = st.crossings[x];
            const VertexId in = pendant_for(X, c, -1), out = pendant_for(X, c, +1);
            gate_link[x][in] = seq.back();
            seq.push_back(gate_of(X, in));
            seq.push_back(gate_of(X, out));
            gate_link[x][out] = -1; // filled once the next node is known
        }
        seq.push_back(cs.slot_vertex[cs.chords[c].high]);
        std::size_t pos = 2;
        for (int x : along[c]) {
            const Crossing& X = st.crossings[x];
            gate_link[x][pendant_for(X, c, +1)] = seq[pos + 1];
            pos += 2;
        }
    }

    for (VertexId v = 0; v < n0; ++v)
        st.graph.add_vertex(g.role(v), g.name(v));
    for (std::size_t x = 0; x < st.crossings.size(); ++x)
        for (VertexId j = 0; j < u.graph.num_vertices(); ++j)
            if (!pendant[j])
                st.graph.add_vertex(Role::Original, u.graph.name(j) + ".x" + std::to_string(x));

    std::vector<int> chord_of_edge(g.num_edges(), -1);
    for (int c = 0; c < num_chords; ++c)
        chord_of_edge[cubic.identifying[c]] = c;
    for (int e = 0; e < g.num_edges(); ++e) {
        const int c = chord_of_edge[e];
        if (c >= 0 && !along[c].empty())
            continue;
        const int index = st.graph.add_edge(g.edge(e).u, g.edge(e).v);
        if (c >= 0)
            st.identifying.push_back(index);
    }
    for (const Crossing& X : st.crossings)
        for (const Edge& e : u.graph.edges())
            if (!pendant[e.u] && !pendant[e.v])
                st.graph.add_edge(X.base + st.u_offset[e.u], X.base + st.u_offset[e.v]);
    for (int c = 0; c < num_chords; ++c) {
        if (along[c].empty())
            continue;
        for (std::size_t i = 0; i + 1 < paths[c].size(); i += 2)
            st.identifying.push_back(st.graph.add_edge(paths[c][i], paths[c][i + 1]));
    }

    auto order = rotation_copy(cubic.rot);
    for (int c = 0; c < num_chords; ++c) {
        if (along[c].empty())
            continue;
        const auto& seq = paths[c];
        replace_in(order[seq.front()], seq.back(), seq[1]);
        replace_in(order[seq.back()], seq.front(), seq[seq.size() - 2]);
    }
    for (std::size_t x = 0; x < st.crossings.size(); ++x)
        for (VertexId j = 0; j < u.graph.num_vertices(); ++j) {
            if (pendant[j])
                continue;
            std::vector<VertexId> around;
            for (VertexId y : u.rot.around(j))
                around.push_back(pendant[y] ? gate_link[x].at(y) : st.crossings[x].base + st.u_offset[y]);
            order.push_back(std::move(around));
        }
    st.rot = RotationSystem(std::move(order));
    st.rot.validate(st.graph);

    st.literal = cubic.literal;
    st.literal.resize(st.graph.num_vertices(), 0);
    require(check_regular(st.graph, 3), "planar stage: graph is not 3-regular");
    require(verify_planar(st.graph, st.rot), "planar stage: embedding fails the Euler check");
    return st;
}

AuxStage build_auxiliary(const Graph& gprime, const RotationSystem& rot)
{
    if (!check_regular(gprime, 3))
        throw ValidationError("build_auxiliary expects a cubic graph");
    rot.validate(gprime);
    const GadgetInstance fig = build_aux_edge();
    const int n = gprime.num_vertices();
    const std::map<std::string, int> offset{{"cu", 0}, {"top", 1}, {"bottom", 2}, {"cv", 3}, {"in", 4}, {"out", 5}};
    const VertexId fu = fig.ports.at("u"), fv = fig.ports.at("v");

    AuxStage st;
    for (VertexId v = 0; v < n; ++v)
        st.graph.add_vertex(Role::Original, gprime.name(v));
    std::vector<std::pair<std::string, Role>> added;
    for (VertexId j = 0; j < fig.graph.num_vertices(); ++j)
        if (j != fu && j != fv)
            added.emplace_back(fig.graph.name(j), fig.graph.role(j));
    std::sort(added.begin(), added.end(),
        [&](const auto& a, const auto& b) { return offset.at(a.first) < offset.at(b.first); });

    auto map = [&](VertexId j, int e) {
        const Edge& edge = gprime.edge(e);
        if (j == fu)
            return edge.u;
        if (j == fv)
            return edge.v;
        return n + 6 * e + offset.at(fig.graph.name(j));
    };
    for (int e = 0; e < gprime.num_edges(); ++e) {
        for (const auto& [name, role] : added)
            st.graph.add_vertex(role, name + "." + std::to_string(e));
        for (const Edge& fe : fig.graph.edges())
            st.graph.add_edge(map(fe.u, e), map(fe.v, e));
        const VertexId base = n + 6 * e;
        st.aux.push_back({gprime.edge(e).u, base, base + 1, base + 2, base + 3, gprime.edge(e).v, base + 4, base + 5});
    }

    std::vector<std::vector<VertexId>> order(st.graph.num_vertices());
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y : rot.around(x)) {
            const int e = *gprime.edge_index(x, y);
            order[x].push_back(x == gprime.edge(e).u ? st.aux[e].cx : st.aux[e].cy);
        }
    for (int e = 0; e < gprime.num_edges(); ++e)
        for (VertexId j = 0; j < fig.graph.num_vertices(); ++j) {
            if (j == fu || j == fv)
                continue;
            auto& around = order[map(j, e)];
            for (VertexId y : fig.rot.around(j))
                around.push_back(map(y, e));
        }
    st.rot = RotationSystem(std::move(order));
    st.rot.validate(st.graph);

    require(st.graph.num_vertices() == 10 * n, "aux stage: vertex count is not 10n");
    require(2 * st.graph.num_edges() == 24 * n, "aux stage: edge count is not 12n");
    require(verify_planar(st.graph, st.rot), "aux stage: embedding fails the Euler check");
    return st;
}

std::vector<AuxEdgeIds> aux_edges_of(const Graph& h)
{
    auto fail = [](VertexId v) {
        return ValidationError("vertex " + std::to_string(v) + " does not sit in an auxiliary edge");
    };
    auto with_role = [&](VertexId v, Role role, VertexId except) {
        std::vector<VertexId> r;
        for (VertexId w : h.neighbours(v))
            if (h.role(w) == role && w != except)
                r.push_back(w);
        return r;
    };
    std::vector<AuxEdgeIds> result;
    for (VertexId out = 0; out < h.num_vertices(); ++out) {
        if (h.role(out) != Role::OutVertex)
            continue;
        if (h.degree(out) != 1 || h.role(h.neighbours(out)[0]) != Role::CycleVertex)
            throw fail(out);
        const VertexId bottom = h.neighbours(out)[0];
        auto sides = with_role(bottom, Role::CycleVertex, -1);
        if (sides.size() != 2)
            throw fail(bottom);
        VertexId top = -1;
        for (VertexId t : with_role(sides[0], Role::CycleVertex, bottom))
            if (h.has_edge(t, sides[1]))
                top = t;
        if (top < 0)
            throw fail(bottom);
        auto in = with_role(top, Role::InVertex, -1);
        auto x = with_role(sides[0], Role::Original, -1);
        auto y = with_role(sides[1], Role::Original, -1);
        if (in.size() != 1 || x.size() != 1 || y.size() != 1)
            throw fail(top);
        AuxEdgeIds ids{x[0], sides[0], top, bottom, sides[1], y[0], in[0], out};
        if (ids.x > ids.y) {
            std::swap(ids.x, ids.y);
            std::swap(ids.cx, ids.cy);
        }
        result.push_back(ids);
    }
    return result;
}

VertexId gadget_vertex(const InstanceStage& st, const Graph& h, int h_edge, VertexId id)
{
    if (id == st.gadget.ports.at("u"))
        return h.edge(h_edge).u;
    if (id == st.gadget.ports.at("v"))
        return h.edge(h_edge).v;
    return st.gadget_base[h_edge] + st.interior_offset[id];
}

InstanceStage build_instance(const Graph& h, const RotationSystem& rot, int k)
{
    if (k < 4)
        throw ValidationError("k must be at least 4, got " + std::to_string(k));
    if (aux_edges_of(h).empty())
        throw ValidationError("input lacks the auxiliary-edge role structure");
    rot.validate(h);
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (h.degree(v) > k - 1)
            throw ValidationError("vertex " + std::to_string(v) + " has degree above k-1");

    InstanceStage st;
    st.k = k;
    st.h_vertices = h.num_vertices();
    st.gadget = build_edge_gadget(k);
    Graph& g = st.graph;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        g.add_vertex(h.role(v), h.name(v));

    st.pendants.resize(h.num_vertices());
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        for (int j = 0; j < k - 1 - h.degree(v); ++j) {
            const VertexId p = g.add_vertex(Role::Pendant, "pend" + std::to_string(j) + "." + std::to_string(v));
            g.add_edge(v, p);
            st.pendants[v].push_back(p);
        }
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        if (h.role(v) != Role::OutVertex)
            continue;
        const VertexId w = st.pendants[v].at(0);
        st.w_of[v] = w;
        auto& leaves = st.leaves[w];
        for (int j = 0; j < k - 2; ++j) {
            leaves.push_back(g.add_vertex(Role::Pendant, "leaf" + std::to_string(j) + "." + std::to_string(v)));
            g.add_edge(w, leaves.back());
        }
    }

    const GadgetInstance& gk = st.gadget;
    const VertexId gu = gk.ports.at("u"), gv = gk.ports.at("v");
    st.interior_offset.assign(gk.graph.num_vertices(), -1);
    int interior = 0;
    for (VertexId j = 0; j < gk.graph.num_vertices(); ++j)
        if (j != gu && j != gv)
            st.interior_offset[j] = interior++;
    for (int e = 0; e < h.num_edges(); ++e) {
        st.gadget_base.push_back(g.num_vertices());
        for (VertexId j = 0; j < gk.graph.num_vertices(); ++j)
            if (j != gu && j != gv)
                g.add_vertex(Role::GadgetInternal, gk.graph.name(j) + "#" + std::to_string(e));
        for (const Edge& ge : gk.graph.edges())
            g.add_edge(gadget_vertex(st, h, e, ge.u), gadget_vertex(st, h, e, ge.v));
    }

    std::vector<std::vector<VertexId>> order(g.num_vertices());
    const VertexId au = gk.ports.at("a_u"), av = gk.ports.at("a_v");
    for (VertexId x = 0; x < h.num_vertices(); ++x) {
        for (VertexId y : rot.around(x)) {
            const int e = *h.edge_index(x, y);
            order[x].push_back(gadget_vertex(st, h, e, x == h.edge(e).u ? au : av));
        }
        for (VertexId p : st.pendants[x]) {
            order[x].push_back(p);
            order[p].push_back(x);
        }
    }
    for (const auto& [w, leaves] : st.leaves)
        for (VertexId leaf : leaves) {
            order[w].push_back(leaf);
            order[leaf].push_back(w);
        }
    for (int e = 0; e < h.num_edges(); ++e)
        for (VertexId j = 0; j < gk.graph.num_vertices(); ++j) {
            if (j == gu || j == gv)
                continue;
            auto& around = order[gadget_vertex(st, h, e, j)];
            for (VertexId y : gk.rot.around(j))
                around.push_back(gadget_vertex(st, h, e, y));
        }
    st.rot = RotationSystem(std::move(order));
    st.rot.validate(g);

    for (VertexId v = 0; v < h.num_vertices(); ++v)
        require(g.degree(v) == k - 1, "instance stage: vertex " + std::to_string(v) + " of H lacks degree k-1");
    require(verify_planar(g, st.rot), "instance stage: embedding fails the Euler check");
    return st;
}

std::string_view stage_name(Stage stage)
{
    switch (stage) {
    case Stage::Cubic: return "cubic";
    case Stage::Planar: return "planar";
    case Stage::Aux: return "aux";
    case Stage::Instance: return "instance";
    }
    return "instance";
}

Stage stage_from_name(std::string_view name)
{
    for (Stage s : {Stage::Cubic, Stage::Planar, Stage::Aux, Stage::Instance})
        if (stage_name(s) == name)
            return s;
    throw ValidationError("unknown stage '" + std::string(name) + "'");
}

ReductionTrace reduce(const Nae3SatFormula& formula, int k, Stage stop_at)
{
    if (k < 4)
        throw ValidationError("k must be at least 4, got " + std::to_string(k));
    ReductionTrace trace;
    trace.formula = formula;
    trace.monotone = monotonize(formula);
    trace.cubic = nae_to_cubic(trace.monotone.formula);
    if (stop_at == Stage::Cubic)
        return trace;
    trace.planar = planarize(trace.cubic);
    require(count_interleaving(trace.cubic.chords) == static_cast<int>(trace.planar.crossings.size()),
        "planar stage: one gadget per crossing");
    trace.reached = Stage::Planar;
    if (stop_at == Stage::Planar)
        return trace;
    trace.aux = build_auxiliary(trace.planar.graph, trace.planar.rot);
    trace.reached = Stage::Aux;
    if (stop_at == Stage::Aux)
        return trace;
    trace.instance = build_instance(trace.aux.graph, trace.aux.rot, k);
    trace.reached = Stage::Instance;
    return trace;
}

Instance stage_instance(const ReductionTrace& trace, Stage stage)
{
    if (static_cast<int>(stage) > static_cast<int>(trace.reached))
        throw ValidationError("stage " + std::string(stage_name(stage)) + " was not built");
    switch (stage) {
    case Stage::Cubic: return {std::nullopt, trace.cubic.graph, trace.cubic.rot, {}};
    case Stage::Planar: return {std::nullopt, trace.planar.graph, trace.planar.rot, {}};
    case Stage::Aux: return {std::nullopt, trace.aux.graph, trace.aux.rot, {}};
    case Stage::Instance: return {trace.instance->k, trace.instance->graph, trace.instance->rot, {}};
    }
    return {};
}

json provenance_manifest(const ReductionTrace& trace)
{
    json j;
    j["formula"] = {{"variables", trace.formula.num_vars}, {"clauses", trace.formula.clauses.size()}};
    json source = json::array();
    for (const Literal& s : trace.monotone.source)
        source.push_back(s.positive ? s.var : -s.var);
    j["monotone"] = {{"variables", trace.monotone.formula.num_vars},
        {"clauses", trace.monotone.formula.clauses.size()}, {"source", source}};

    auto sizes = [](const Graph& g) { return json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}}; };
    j["stages"]["cubic"] = sizes(trace.cubic.graph);
    json chords = json::array();
    for (const Chord& c : trace.cubic.chords.chords)
        chords.push_back({{"low", c.low}, {"high", c.high}, {"var", c.var},
            {"ends", {trace.cubic.chords.slot_vertex[c.low], trace.cubic.chords.slot_vertex[c.high]}}});
    j["chords"] = chords;
    j["slot_x"] = trace.cubic.chords.slot_x;
    json literal = json::object();
    for (VertexId v = 0; v < trace.cubic.graph.num_vertices(); ++v)
        if (trace.cubic.literal[v] != 0)
            literal[std::to_string(v)] = trace.cubic.literal[v];
    j["literal"] = literal;

    if (trace.reached == Stage::Cubic)
        return j;
    j["stages"]["planar"] = sizes(trace.planar.graph);
    json crossings = json::array();
    for (const Crossing& x : trace.planar.crossings)
        crossings.push_back({{"gamma", x.gamma}, {"delta", x.delta}, {"sign", x.sign}, {"base", x.base}});
    j["crossings"] = crossings;
    json identifying = json::array();
    for (int e : trace.planar.identifying)
        identifying.push_back({trace.planar.graph.edge(e).u, trace.planar.graph.edge(e).v});
    j["identifying"] = identifying;
    j["prefix"]["cubic_in_planar"] = trace.cubic.graph.num_vertices();

    if (static_cast<int>(trace.reached) < static_cast<int>(Stage::Aux))
        return j;
    j["stages"]["aux"] = sizes(trace.aux.graph);
    j["prefix"]["planar_in_aux"] = trace.planar.graph.num_vertices();
    json aux = json::array();
    for (const AuxEdgeIds& a : trace.aux.aux)
        aux.push_back({{"x", a.x}, {"y", a.y}, {"cx", a.cx}, {"top", a.top}, {"bottom", a.bottom}, {"cy", a.cy},
            {"in", a.in}, {"out", a.out}});
    j["aux_edges"] = aux;

    if (!trace.instance)
        return j;
    const InstanceStage& st = *trace.instance;
    j["stages"]["instance"] = sizes(st.graph);
    j["stages"]["instance"]["k"] = st.k;
    j["prefix"]["aux_in_instance"] = st.h_vertices;
    j["gadget"] = {{"kind", std::string(kind_name(st.gadget.kind))}, {"vertices", st.gadget.graph.num_vertices()},
        {"bases", st.gadget_base}};
    json w = json::object();
    for (const auto& [out, pend] : st.w_of)
        w[std::to_string(out)] = pend;
    j["designated_pendant"] = w;
    return j;
}

} // namespace l21

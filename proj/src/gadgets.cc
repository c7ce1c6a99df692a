#include <l21/errors.hh>
#include <l21/gadgets.hh>

#include <algorithm>

namespace l21 {

std::string_view kind_name(GadgetKind kind)
{
    switch (kind) {
    case GadgetKind::H: return "H";
    case GadgetKind::ClauseK: return "ClauseK";
    case GadgetKind::UncrossU: return "UncrossU";
    case GadgetKind::G4: return "G4";
    case GadgetKind::G5: return "G5";
    case GadgetKind::Hprime: return "Hprime";
    case GadgetKind::Gk: return "Gk";
    case GadgetKind::AuxEdge: return "AuxEdge";
    }
    return "H";
}

VertexId GadgetInstance::named(std::string_view name) const
{
    for (VertexId v = 0; v < graph.num_vertices(); ++v)
        if (graph.name(v) == name)
            return v;
    throw ValidationError("gadget " + std::string(kind_name(kind)) + " has no vertex '" + std::string(name) + "'");
}

namespace {
    GadgetInstance from_figure(GadgetKind kind, const AtlasFigure& figure, std::initializer_list<const char*> ports,
        Role port_role = Role::Port)
    {
        auto drawn = draw(figure);
        GadgetInstance g{kind, 0, std::move(drawn.graph), std::move(drawn.rot), {}};
        for (const char* p : ports) {
            g.ports[p] = drawn.ids.at(p);
            g.graph.set_role(drawn.ids.at(p), port_role);
        }
        return g;
    }
}

GadgetInstance build_H()
{
    return from_figure(GadgetKind::H, atlas_H(), {"a", "b", "m", "n", "i", "l", "o", "p", "q", "r"});
}

GadgetInstance build_clause_gadget()
{
    return from_figure(GadgetKind::ClauseK, atlas_clause_gadget(),
        {"a", "o1", "p1", "q1", "r1", "o2", "p2", "q2", "r2", "o3", "p3", "q3", "r3"});
}

GadgetInstance build_uncrossing()
{
    auto g = from_figure(GadgetKind::UncrossU, atlas_uncrossing(), {"a", "w", "z2", "z4"});
    for (const char* gate : {"b", "v", "z1", "z3"}) {
        VertexId id = g.named(gate);
        g.ports[gate] = id;
        g.graph.set_role(id, Role::Gate);
    }
    return g;
}

GadgetInstance build_Hprime(int k)
{
    if (k < 6)
        throw ValidationError("H' needs k >= 6, got " + std::to_string(k));
    const int fans = k - 3;
    std::vector<AtlasVertex> vertices{{"c", 0, 3}, {"d", 0, 2}, {"e", 1, 2}};
    std::vector<std::string> fan_names;
    for (int j = 1; j <= fans; ++j)
        fan_names.push_back("f" + std::to_string(j));
    for (int j = 0; j < fans; ++j)
        vertices.push_back({fan_names[j].c_str(), -1.0 + 2.0 * j / (fans - 1), 1});
    vertices.insert(vertices.end(), {{"g", 0, 0}, {"h", -1, -1}, {"i", 1, -1}});

    std::vector<AtlasEdge> edges{{"c", "d"}, {"d", "e"}};
    for (const auto& f : fan_names) {
        edges.push_back({"d", f.c_str()});
        edges.push_back({"g", f.c_str()});
    }
    edges.insert(edges.end(), {{"g", "h"}, {"g", "i"}});

    auto g = from_figure(GadgetKind::Hprime, {vertices, edges}, {"c", "d", "g"});
    g.k = k;
    return g;
}

namespace {
    GadgetInstance build_G4()
    {
        GadgetInstance g{GadgetKind::G4, 4, {}, {}, {}};
        for (const char* name : {"u", "a_u", "a_v", "v"})
            g.ports[name] = g.graph.add_vertex(Role::Port, name);
        g.graph.add_edge(0, 1);
        g.graph.add_edge(1, 2);
        g.graph.add_edge(2, 3);
        g.rot = RotationSystem({{1}, {2, 0}, {3, 1}, {2}});
        return g;
    }

    GadgetInstance build_G5()
    {
        auto g = from_figure(GadgetKind::G5, atlas_G5(), {"u", "v", "a_u", "a_v"});
        g.k = 5;
        return g;
    }

    GadgetInstance build_Gk(int k)
    {
        GadgetInstance g{GadgetKind::Gk, k, {}, {}, {}};
        Graph& graph = g.graph;
        const VertexId u = graph.add_vertex(Role::Port, "u");
        const VertexId au = graph.add_vertex(Role::Port, "a_u");
        const VertexId av = graph.add_vertex(Role::Port, "a_v");
        const VertexId v = graph.add_vertex(Role::Port, "v");
        g.ports = {{"u", u}, {"a_u", au}, {"a_v", av}, {"v", v}};
        graph.add_edge(u, au);
        graph.add_edge(au, av);
        graph.add_edge(av, v);

        const int m = k - 5;
        std::vector<VertexId> b;
        for (int j = 1; j <= m; ++j) {
            b.push_back(graph.add_vertex(Role::GadgetInternal, "b" + std::to_string(j)));
            graph.add_edge(b.back(), au);
            graph.add_edge(b.back(), av);
        }

        const auto hp = build_Hprime(k);
        std::vector<std::vector<VertexId>> order(graph.num_vertices());
        order[u] = {au};
        order[v] = {av};
        // b1 sits nearest the path u-a_u-a_v-v and each later b<j> encloses the earlier ones.
        order[au] = {av, u};
        for (int j = m - 1; j >= 0; --j)
            order[au].push_back(b[j]);
        order[av] = {v, au};
        for (int j = 0; j < m; ++j)
            order[av].push_back(b[j]);

        for (int j = 0; j < m; ++j) {
            order[b[j]] = {av, au};
            for (const char* side : {"l", "r"}) {
                const VertexId base = graph.num_vertices();
                const std::string suffix = "(" + std::string(side) + "," + std::to_string(j + 1) + ")";
                for (VertexId x = 0; x < hp.graph.num_vertices(); ++x)
                    graph.add_vertex(Role::GadgetInternal, hp.graph.name(x) + suffix);
                for (const Edge& e : hp.graph.edges())
                    graph.add_edge(base + e.u, base + e.v);
                const VertexId c = base + hp.ports.at("c");
                graph.add_edge(b[j], c);
                for (VertexId x = 0; x < hp.graph.num_vertices(); ++x) {
                    std::vector<VertexId> around;
                    for (VertexId y : hp.rot.around(x))
                        around.push_back(base + y);
                    order.push_back(std::move(around));
                }
                order[c].push_back(b[j]);
                order[b[j]].push_back(c);
            }
        }
        g.rot = RotationSystem(std::move(order));
        return g;
    }
}

GadgetInstance build_edge_gadget(int k)
{
    if (k < 4)
        throw ValidationError("edge gadget needs k >= 4, got " + std::to_string(k));
    if (k == 4)
        return build_G4();
    if (k == 5)
        return build_G5();
    return build_Gk(k);
}

GadgetInstance build_aux_edge()
{
    auto g = from_figure(GadgetKind::AuxEdge, atlas_aux_edge(), {"u", "v", "in", "out", "cu", "cv", "top", "bottom"});
    g.graph.set_role(g.ports["u"], Role::Original);
    g.graph.set_role(g.ports["v"], Role::Original);
    g.graph.set_role(g.ports["in"], Role::InVertex);
    g.graph.set_role(g.ports["out"], Role::OutVertex);
    for (const char* c : {"cu", "cv", "top", "bottom"})
        g.graph.set_role(g.ports[c], Role::CycleVertex);
    return g;
}

std::map<std::string, int> port_degrees(const GadgetInstance& gadget)
{
    switch (gadget.kind) {
    case GadgetKind::H:
        return {{"a", 1}, {"b", 3}, {"m", 1}, {"n", 1}, {"i", 3}, {"l", 3}, {"o", 3}, {"p", 3}, {"q", 1}, {"r", 1}};
    case GadgetKind::ClauseK: {
        std::map<std::string, int> d{{"a", 3}};
        for (int t = 1; t <= 3; ++t)
            for (auto [p, deg] : {std::pair{"o", 3}, {"p", 3}, {"q", 1}, {"r", 1}})
                d[p + std::to_string(t)] = deg;
        return d;
    }
    case GadgetKind::UncrossU:
        return {{"a", 1}, {"w", 1}, {"z2", 1}, {"z4", 1}, {"b", 3}, {"v", 3}, {"z1", 3}, {"z3", 3}};
    case GadgetKind::Hprime:
        return {{"c", 1}, {"d", gadget.k - 1}, {"g", gadget.k - 1}};
    case GadgetKind::G4: return {{"u", 1}, {"v", 1}, {"a_u", 2}, {"a_v", 2}};
    case GadgetKind::G5: return {{"u", 1}, {"v", 1}, {"a_u", 3}, {"a_v", 3}};
    case GadgetKind::Gk: return {{"u", 1}, {"v", 1}, {"a_u", gadget.k - 3}, {"a_v", gadget.k - 3}};
    case GadgetKind::AuxEdge:
        return {{"u", 1}, {"v", 1}, {"in", 1}, {"out", 1}, {"cu", 3}, {"cv", 3}, {"top", 3}, {"bottom", 3}};
    }
    return {};
}

GadgetInstance without_edge(const GadgetInstance& gadget, std::string_view a, std::string_view b)
{
    VertexId x = gadget.named(a), y = gadget.named(b);
    GadgetInstance g = gadget;
    g.graph = gadget.graph.without_edge(x, y);
    std::vector<std::vector<VertexId>> order;
    for (VertexId v = 0; v < gadget.graph.num_vertices(); ++v) {
        auto around = gadget.rot.around(v);
        std::vector<VertexId> kept;
        for (VertexId w : around)
            if (!((v == x && w == y) || (v == y && w == x)))
                kept.push_back(w);
        order.push_back(kept);
    }
    g.rot = RotationSystem(std::move(order));
    return g;
}

} // namespace l21

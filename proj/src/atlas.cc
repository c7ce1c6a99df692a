#include <l21/atlas.hh>
#include <l21/errors.hh>

namespace l21 {

namespace {
    constexpr AtlasVertex kHVertices[] = {
        {"a", 5.0, 7.0},
        {"b", 5.0, 6.0},
        {"c", 3.0, 5.3},
        {"d", 7.0, 5.3},
        {"e", 2.5, 4.5},
        {"h", 7.5, 4.5},
        {"f", 3.5, 4.5},
        {"g", 6.5, 4.5},
        {"i", 2.5, 2.5},
        {"l", 7.5, 2.5},
        {"j", 3.5, 2.5},
        {"k", 6.5, 2.5},
        {"o", 3.0, 1.5},
        {"p", 7.0, 1.5},
        {"q", 3.0, 0.5},
        {"r", 7.0, 0.5},
        {"m", 1.5, 2.5},
        {"n", 8.5, 2.5},
    };
    constexpr AtlasEdge kHEdges[] = {
        {"a", "b"}, {"b", "c"}, {"b", "d"}, {"c", "e"}, {"c", "f"}, {"d", "g"},
        {"d", "h"}, {"e", "i"}, {"f", "j"}, {"g", "k"}, {"h", "l"}, {"e", "f"},
        {"g", "h"}, {"i", "o"}, {"j", "o"}, {"o", "q"}, {"p", "l"}, {"k", "p"},
        {"p", "r"}, {"m", "i"}, {"n", "l"}, {"j", "k"},
    };

    constexpr AtlasVertex kKVertices[] = {
        {"a", 3.5, 3.5},
        {"b1", 3.5, 4.5},
        {"b2", 2.793, 2.793},
        {"b3", 4.207, 2.793},
        {"d1", 3.0, 5.0},
        {"c1", 4.0, 5.0},
        {"h1", 2.75, 5.5},
        {"g1", 3.25, 5.5},
        {"f1", 3.75, 5.5},
        {"e1", 4.25, 5.5},
        {"l1", 2.75, 6.0},
        {"k1", 3.25, 6.0},
        {"j1", 3.75, 6.0},
        {"i1", 4.25, 6.0},
        {"p1", 3.0, 6.5},
        {"o1", 4.0, 6.5},
        {"r1", 3.0, 7.0},
        {"q1", 4.0, 7.0},
        {"d3", 4.91, 2.793},
        {"c3", 4.207, 2.08},
        {"h3", 5.4, 2.693},
        {"g3", 5.0, 2.293},
        {"f3", 4.7, 2.0},
        {"e3", 4.31, 1.58},
        {"l3", 5.75, 2.343},
        {"k3", 5.35, 1.943},
        {"p3", 5.85, 1.85},
        {"j3", 5.05, 1.65},
        {"i3", 4.66, 1.23},
        {"o3", 5.15, 1.14},
        {"q3", 5.5, 0.85},
        {"r3", 6.2, 1.5},
        {"c2", 2.08, 2.793},
        {"d2", 2.793, 2.08},
        {"e2", 1.6, 2.693},
        {"f2", 2.0, 2.293},
        {"i2", 1.25, 2.343},
        {"j2", 1.65, 1.943},
        {"o2", 1.15, 1.8},
        {"q2", 0.8, 1.45},
        {"g2", 2.3, 2.0},
        {"h2", 2.693, 1.6},
        {"k2", 1.95, 1.65},
        {"l2", 2.343, 1.25},
        {"p2", 1.85, 1.15},
        {"r2", 1.5, 0.8},
    };
    constexpr AtlasEdge kKEdges[] = {
        {"a", "b1"}, {"a", "b2"}, {"a", "b3"}, {"b1", "d1"}, {"b1", "c1"},
        {"h1", "d1"}, {"d1", "g1"}, {"f1", "c1"}, {"e1", "c1"}, {"f1", "e1"},
        {"g1", "h1"}, {"h1", "l1"}, {"k1", "g1"}, {"f1", "j1"}, {"e1", "i1"},
        {"j1", "k1"}, {"p1", "l1"}, {"k1", "p1"}, {"o1", "j1"}, {"o1", "i1"},
        {"o1", "q1"}, {"r1", "p1"}, {"b3", "d3"}, {"b3", "c3"}, {"h3", "d3"},
        {"g3", "d3"}, {"h3", "g3"}, {"f3", "c3"}, {"e3", "c3"}, {"f3", "e3"},
        {"h3", "l3"}, {"g3", "k3"}, {"p3", "l3"}, {"p3", "k3"}, {"j3", "f3"},
        {"i3", "e3"}, {"j3", "o3"}, {"i3", "o3"}, {"q3", "o3"}, {"p3", "r3"},
        {"j3", "k3"}, {"b2", "c2"}, {"b2", "d2"}, {"e2", "c2"}, {"f2", "c2"},
        {"f2", "e2"}, {"e2", "i2"}, {"f2", "j2"}, {"o2", "i2"}, {"o2", "j2"},
        {"o2", "q2"}, {"g2", "d2"}, {"h2", "d2"}, {"h2", "g2"}, {"g2", "k2"},
        {"h2", "l2"}, {"p2", "k2"}, {"p2", "l2"}, {"p2", "r2"}, {"k2", "j2"},
        {"l2", "i3"}, {"i2", "l1"}, {"l3", "i1"},
    };

    constexpr AtlasVertex kUVertices[] = {
        {"z4", 4.0, 0.5},
        {"z3", 4.0, 1.5},
        {"u", 3.0, 2.5},
        {"x", 5.0, 2.5},
        {"n", 3.0, 3.5},
        {"q", 5.0, 3.5},
        {"l", 2.5, 4.0},
        {"m", 3.5, 4.0},
        {"r", 5.5, 4.0},
        {"p", 4.5, 4.0},
        {"v", 1.5, 5.0},
        {"w", 0.5, 5.0},
        {"k", 3.0, 4.5},
        {"o", 5.0, 4.5},
        {"f", 3.0, 5.5},
        {"i", 5.0, 5.5},
        {"e", 2.5, 6.0},
        {"d", 3.5, 6.0},
        {"j", 5.5, 6.0},
        {"h", 4.5, 6.0},
        {"c", 3.0, 6.5},
        {"g", 5.0, 6.5},
        {"b", 4.0, 7.5},
        {"a", 4.0, 8.5},
        {"s", 6.5, 6.0},
        {"t", 6.5, 4.0},
        {"z1", 7.5, 5.0},
        {"z2", 8.5, 5.0},
    };
    constexpr AtlasEdge kUEdges[] = {
        {"z4", "z3"}, {"z3", "u"}, {"z3", "x"}, {"u", "x"}, {"u", "n"}, {"q", "x"},
        {"n", "l"}, {"n", "m"}, {"p", "q"}, {"r", "q"}, {"p", "m"}, {"v", "l"},
        {"v", "w"}, {"k", "l"}, {"k", "m"}, {"p", "o"}, {"r", "o"}, {"f", "k"},
        {"o", "i"}, {"f", "e"}, {"f", "d"}, {"h", "i"}, {"j", "i"}, {"h", "d"},
        {"c", "e"}, {"c", "d"}, {"h", "g"}, {"j", "g"}, {"e", "v"}, {"c", "b"},
        {"a", "b"}, {"b", "g"}, {"s", "t"}, {"s", "j"}, {"t", "r"}, {"z1", "z2"},
        {"s", "z1"}, {"t", "z1"},
    };

    constexpr AtlasVertex kG5Vertices[] = {
        {"u", 0.5, 3.5},
        {"v", 3.5, 3.5},
        {"a_u", 1.5, 3.5},
        {"a_v", 2.5, 3.5},
        {"b_v", 2.5, 3.0},
        {"b_u", 1.5, 3.0},
        {"c", 2.0, 2.5},
        {"d", 2.0, 2.0},
        {"e3", 2.5, 2.0},
        {"e1", 2.5, 1.5},
        {"e2", 1.5, 1.5},
        {"f", 2.0, 1.0},
        {"g1", 1.5, 0.5},
        {"g2", 2.5, 0.5},
    };
    constexpr AtlasEdge kG5Edges[] = {
        {"u", "a_u"}, {"a_u", "a_v"}, {"a_v", "v"}, {"b_v", "a_v"}, {"b_u", "a_u"},
        {"b_v", "c"}, {"b_u", "c"}, {"d", "c"}, {"d", "e3"}, {"d", "e1"},
        {"d", "e2"}, {"f", "e2"}, {"f", "e1"}, {"d", "e2"}, {"g1", "f"},
        {"g2", "f"},
    };

    constexpr AtlasVertex kAuxEdgeVertices[] = {
        {"u", 0.5, 7.5},
        {"cu", 3.5, 7.5},
        {"top", 6.5, 10.5},
        {"bottom", 6.5, 4.5},
        {"cv", 9.5, 7.5},
        {"v", 12.5, 7.5},
        {"in", 6.5, 13.5},
        {"out", 6.5, 1.5},
    };
    constexpr AtlasEdge kAuxEdgeEdges[] = {
        {"cu", "u"}, {"cu", "bottom"}, {"top", "cu"}, {"cv", "top"},
        {"bottom", "cv"}, {"cv", "v"}, {"top", "in"}, {"bottom", "out"},
    };

    constexpr AtlasVertex kHprime6Vertices[] = {
        {"c", 2.0, 4.5},
        {"d", 2.0, 3.75},
        {"e", 2.75, 3.75},
        {"f1", 2.75, 3.0},
        {"f2", 2.0, 3.0},
        {"f3", 1.25, 3.0},
        {"g", 2.0, 2.25},
        {"h", 1.25, 1.5},
        {"i", 2.75, 1.5},
    };
    constexpr AtlasEdge kHprime6Edges[] = {
        {"c", "d"}, {"d", "e"}, {"f1", "d"}, {"f2", "d"}, {"f3", "d"}, {"g", "f1"},
        {"g", "f2"}, {"f3", "g"}, {"h", "g"}, {"i", "g"},
    };

    constexpr AtlasVertex kG6Vertices[] = {
        {"u", 0.5, 3.5},
        {"v", 3.5, 3.5},
        {"a_u", 1.5, 3.5},
        {"a_v", 2.5, 3.5},
        {"b1", 2.0, 2.5},
        {"c(l,1)", 1.0, 2.5},
        {"d(l,1)", 1.0, 2.0},
        {"e(l,1)", 0.5, 2.0},
        {"f1(l,1)", 0.5, 1.5},
        {"f2(l,1)", 1.0, 1.5},
        {"f3(l,1)", 1.5, 1.5},
        {"g(l,1)", 1.0, 1.0},
        {"h(l,1)", 0.5, 0.5},
        {"i(l,1)", 1.5, 0.5},
        {"c(r,1)", 3.0, 2.5},
        {"d(r,1)", 3.0, 2.0},
        {"e(r,1)", 3.5, 2.0},
        {"f3(r,1)", 3.5, 1.5},
        {"f2(r,1)", 3.0, 1.5},
        {"f1(r,1)", 2.5, 1.5},
        {"g(r,1)", 3.0, 1.0},
        {"h(r,1)", 2.5, 0.5},
        {"i(r,1)", 3.5, 0.5},
    };
    constexpr AtlasEdge kG6Edges[] = {
        {"u", "a_u"}, {"a_u", "a_v"}, {"a_v", "v"}, {"b1", "a_u"}, {"b1", "a_v"},
        {"b1", "c(l,1)"}, {"c(l,1)", "d(l,1)"}, {"e(l,1)", "d(l,1)"},
        {"f1(l,1)", "d(l,1)"}, {"f2(l,1)", "d(l,1)"}, {"f3(l,1)", "d(l,1)"},
        {"f1(l,1)", "g(l,1)"}, {"f2(l,1)", "g(l,1)"}, {"f3(l,1)", "g(l,1)"},
        {"h(l,1)", "g(l,1)"}, {"i(l,1)", "g(l,1)"}, {"b1", "c(r,1)"},
        {"d(r,1)", "c(r,1)"}, {"d(r,1)", "e(r,1)"}, {"d(r,1)", "f3(r,1)"},
        {"d(r,1)", "f2(r,1)"}, {"d(r,1)", "f1(r,1)"}, {"g(r,1)", "f2(r,1)"},
        {"g(r,1)", "f1(r,1)"}, {"g(r,1)", "f3(r,1)"}, {"h(r,1)", "g(r,1)"},
        {"i(r,1)", "g(r,1)"},
    };

    constexpr AtlasVertex kG7Vertices[] = {
        {"u", 0.5, 2.5},
        {"v", 3.5, 2.5},
        {"a_u", 1.0, 2.5},
        {"a_v", 3.0, 2.5},
        {"b2", 2.0, 1.0},
        {"c(l,2)", 1.5, 1.0},
        {"d(l,2)", 1.5, 0.75},
        {"e(l,2)", 1.25, 0.75},
        {"f1(l,2)", 1.35, 0.5},
        {"f2(l,2)", 1.46, 0.5},
        {"f3(l,2)", 1.54, 0.5},
        {"f4(l,2)", 1.65, 0.5},
        {"g(l,2)", 1.5, 0.25},
        {"h(l,2)", 1.4, 0.15},
        {"i(l,2)", 1.6, 0.15},
        {"c(r,2)", 2.5, 1.0},
        {"d(r,2)", 2.5, 0.75},
        {"e(r,2)", 2.75, 0.75},
        {"f1(r,2)", 2.35, 0.5},
        {"f2(r,2)", 2.46, 0.5},
        {"f3(r,2)", 2.54, 0.5},
        {"f4(r,2)", 2.65, 0.5},
        {"g(r,2)", 2.5, 0.25},
        {"h(r,2)", 2.4, 0.15},
        {"i(r,2)", 2.6, 0.15},
        {"b1", 2.0, 2.25},
        {"c(l,1)", 1.75, 2.25},
        {"d(l,1)", 1.75, 2.15},
        {"e(l,1)", 1.65, 2.15},
        {"f1(l,1)", 1.65, 2.0},
        {"f2(l,1)", 1.72, 2.0},
        {"f3(l,1)", 1.78, 2.0},
        {"f4(l,1)", 1.85, 2.0},
        {"g(l,1)", 1.75, 1.85},
        {"h(l,1)", 1.65, 1.75},
        {"i(l,1)", 1.85, 1.75},
        {"c(r,1)", 2.25, 2.25},
        {"d(r,1)", 2.25, 2.15},
        {"e(r,1)", 2.35, 2.15},
        {"f1(r,1)", 2.15, 2.0},
        {"f2(r,1)", 2.22, 2.0},
        {"f3(r,1)", 2.28, 2.0},
        {"f4(r,1)", 2.35, 2.0},
        {"g(r,1)", 2.25, 1.85},
        {"h(r,1)", 2.15, 1.75},
        {"i(r,1)", 2.35, 1.75},
    };
    constexpr AtlasEdge kG7Edges[] = {
        {"u", "a_u"}, {"a_u", "a_v"}, {"a_v", "v"}, {"b2", "a_u"}, {"b2", "a_v"},
        {"b2", "c(l,2)"}, {"c(l,2)", "d(l,2)"}, {"e(l,2)", "d(l,2)"},
        {"f1(l,2)", "d(l,2)"}, {"f2(l,2)", "d(l,2)"}, {"f3(l,2)", "d(l,2)"},
        {"f4(l,2)", "d(l,2)"}, {"f1(l,2)", "g(l,2)"}, {"f2(l,2)", "g(l,2)"},
        {"f3(l,2)", "g(l,2)"}, {"f4(l,2)", "g(l,2)"}, {"h(l,2)", "g(l,2)"},
        {"i(l,2)", "g(l,2)"}, {"b2", "c(r,2)"}, {"d(r,2)", "c(r,2)"},
        {"d(r,2)", "e(r,2)"}, {"d(r,2)", "f1(r,2)"}, {"d(r,2)", "f2(r,2)"},
        {"d(r,2)", "f3(r,2)"}, {"d(r,2)", "f4(r,2)"}, {"g(r,2)", "f2(r,2)"},
        {"g(r,2)", "f3(r,2)"}, {"g(r,2)", "f4(r,2)"}, {"g(r,2)", "f1(r,2)"},
        {"h(r,2)", "g(r,2)"}, {"i(r,2)", "g(r,2)"}, {"b1", "a_u"}, {"b1", "a_v"},
        {"b1", "c(l,1)"}, {"c(l,1)", "d(l,1)"}, {"e(l,1)", "d(l,1)"},
        {"f1(l,1)", "d(l,1)"}, {"f2(l,1)", "d(l,1)"}, {"f3(l,1)", "d(l,1)"},
        {"f4(l,1)", "d(l,1)"}, {"f1(l,1)", "g(l,1)"}, {"f2(l,1)", "g(l,1)"},
        {"f4(l,1)", "g(l,1)"}, {"f3(l,1)", "g(l,1)"}, {"h(l,1)", "g(l,1)"},
        {"i(l,1)", "g(l,1)"}, {"b1", "c(r,1)"}, {"d(r,1)", "c(r,1)"},
        {"d(r,1)", "e(r,1)"}, {"d(r,1)", "f1(r,1)"}, {"d(r,1)", "f2(r,1)"},
        {"d(r,1)", "f3(r,1)"}, {"d(r,1)", "f4(r,1)"}, {"g(r,1)", "f2(r,1)"},
        {"g(r,1)", "f4(r,1)"}, {"g(r,1)", "f1(r,1)"}, {"g(r,1)", "f3(r,1)"},
        {"h(r,1)", "g(r,1)"}, {"i(r,1)", "g(r,1)"},
    };

}

AtlasFigure atlas_H() { return {kHVertices, kHEdges}; }
AtlasFigure atlas_clause_gadget() { return {kKVertices, kKEdges}; }
AtlasFigure atlas_uncrossing() { return {kUVertices, kUEdges}; }
AtlasFigure atlas_G5() { return {kG5Vertices, kG5Edges}; }
AtlasFigure atlas_aux_edge() { return {kAuxEdgeVertices, kAuxEdgeEdges}; }
AtlasFigure atlas_Hprime6() { return {kHprime6Vertices, kHprime6Edges}; }
AtlasFigure atlas_G6() { return {kG6Vertices, kG6Edges}; }
AtlasFigure atlas_G7() { return {kG7Vertices, kG7Edges}; }

DrawnFigure draw(const AtlasFigure& figure, Role role)
{
    DrawnFigure d;
    std::vector<Point> position;
    for (const auto& v : figure.vertices) {
        if (d.ids.contains(v.name))
            throw InvariantError(std::string("atlas repeats vertex ") + v.name);
        d.ids[v.name] = d.graph.add_vertex(role, v.name);
        position.push_back({v.x, v.y});
    }
    auto id = [&](const char* name) {
        auto it = d.ids.find(name);
        if (it == d.ids.end())
            throw InvariantError(std::string("atlas edge names unknown vertex ") + name);
        return it->second;
    };
    for (const auto& e : figure.edges) {
        VertexId a = id(e.a), b = id(e.b);
        if (!d.graph.has_edge(a, b))
            d.graph.add_edge(a, b);
    }
    d.rot = rotation_from_drawing(d.graph, position);
    return d;
}

namespace {
    const std::map<std::string, UClass, std::less<>> uncrossing_classes = [] {
        std::map<std::string, UClass, std::less<>> m;
        for (const char* n : {"z4", "z3", "n", "q", "f", "i", "b", "a"})
            m[n] = UClass::Alpha;
        for (const char* n : {"u", "x", "k", "o", "c", "g"})
            m[n] = UClass::AlphaBar;
        for (const char* n : {"m", "r", "v", "w", "d", "j", "z1", "z2"})
            m[n] = UClass::Beta;
        for (const char* n : {"l", "p", "e", "h", "s", "t"})
            m[n] = UClass::BetaBar;
        return m;
    }();
}

UClass uncrossing_class(const std::string& name)
{
    auto it = uncrossing_classes.find(name);
    if (it == uncrossing_classes.end())
        throw ValidationError("no vertex '" + name + "' in the uncrossing gadget");
    return it->second;
}

TwoColouring uncrossing_colouring(const DrawnFigure& u, Colour alpha, Colour beta)
{
    TwoColouring c(u.graph.num_vertices());
    for (const auto& [name, v] : u.ids) {
        switch (uncrossing_class(name)) {
        case UClass::Alpha: c[v] = alpha; break;
        case UClass::AlphaBar: c[v] = opposite(alpha); break;
        case UClass::Beta: c[v] = beta; break;
        case UClass::BetaBar: c[v] = opposite(beta); break;
        }
    }
    return c;
}

} // namespace l21

#include <l21/errors.hh>
#include <l21/serialization.hh>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace l21 {

namespace {
    int id_key(const std::string& key, int num_vertices)
    {
        try {
            std::size_t used = 0;
            int id = std::stoi(key, &used);
            if (used == key.size() && id >= 0 && id < num_vertices)
                return id;
        }
        catch (const std::exception&) {
        }
        throw ValidationError("'" + key + "' is not a vertex id");
    }

    template <typename F>
    auto guarded(const char* what, F&& f)
    {
        try {
            return f();
        }
        catch (const json::exception& e) {
            throw ValidationError(std::string(what) + ": " + e.what());
        }
    }
}

json instance_to_json(const Instance& instance)
{
    const Graph& g = instance.graph;
    json j;
    j["k"] = instance.k ? json(*instance.k) : json(nullptr);
    j["vertices"] = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        j["vertices"].push_back({{"id", v}, {"role", std::string(role_name(g.role(v)))}, {"name", g.name(v)}});
    j["edges"] = json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({e.u, e.v});
    j["rotation"] = json::object();
    if (!instance.rot.empty())
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            json around = json::array();
            for (VertexId u : instance.rot.around(v))
                around.push_back({v, u});
            j["rotation"][std::to_string(v)] = around;
        }
    j["ports"] = json::object();
    for (const auto& [name, v] : instance.ports)
        j["ports"][name] = v;
    return j;
}

Instance instance_from_json(const json& j)
{
    return guarded("malformed instance", [&] {
        Instance instance;
        if (!j.at("k").is_null())
            instance.k = j.at("k").get<int>();
        const auto& vertices = j.at("vertices");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const auto& rec = vertices[i];
            if (rec.at("id").get<int>() != static_cast<int>(i))
                throw ValidationError("vertex ids must be dense and in order; record " + std::to_string(i) + " has id "
                    + std::to_string(rec.at("id").get<int>()));
            instance.graph.add_vertex(role_from_name(rec.at("role").get<std::string>()), rec.at("name").get<std::string>());
        }
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2)
                throw ValidationError("edge record must have two endpoints");
            instance.graph.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        const auto& rotation = j.at("rotation");
        if (!rotation.empty()) {
            const int n = instance.graph.num_vertices();
            std::vector<std::vector<VertexId>> order(n);
            std::vector<bool> seen(n, false);
            for (const auto& [key, around] : rotation.items()) {
                int v = id_key(key, n);
                seen[v] = true;
                for (const auto& dart : around) {
                    if (dart.size() != 2 || dart[0].get<int>() != v)
                        throw ValidationError("rotation entry at vertex " + key + " must list edges as [" + key + ",w]");
                    order[v].push_back(dart[1].get<int>());
                }
            }
            for (VertexId v = 0; v < n; ++v)
                if (!seen[v])
                    throw ValidationError("rotation at vertex " + std::to_string(v) + " is missing");
            instance.rot = RotationSystem(std::move(order));
            instance.rot.validate(instance.graph);
        }
        for (const auto& [name, v] : j.at("ports").items()) {
            int id = v.get<int>();
            if (!instance.graph.contains(id))
                throw ValidationError("port '" + name + "' names unknown vertex " + std::to_string(id));
            instance.ports[name] = id;
        }
        return instance;
    });
}

std::string canonical_text(const json& j) { return j.dump() + "\n"; }

json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        std::size_t upto = std::min(e.byte, text.size());
        int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
        throw ParseError(line, e.what());
    }
}

json colouring_to_json(const TwoColouring& c)
{
    json colours = json::object();
    for (std::size_t v = 0; v < c.size(); ++v)
        colours[std::to_string(v)] = c[v] == Colour::Black ? "B" : "W";
    return {{"colours", colours}};
}

TwoColouring colouring_from_json(const json& j, int num_vertices)
{
    return guarded("malformed colouring", [&] {
        TwoColouring c(num_vertices, Colour::Black);
        std::vector<bool> seen(num_vertices, false);
        for (const auto& [key, value] : j.at("colours").items()) {
            int v = id_key(key, num_vertices);
            auto s = value.get<std::string>();
            if (s != "B" && s != "W")
                throw ValidationError("colour of vertex " + key + " must be \"B\" or \"W\"");
            c[v] = s == "B" ? Colour::Black : Colour::White;
            seen[v] = true;
        }
        for (int v = 0; v < num_vertices; ++v)
            if (!seen[v])
                throw ValidationError("colouring omits vertex " + std::to_string(v));
        return c;
    });
}

json orientation_to_json(const Graph& graph, const ColouredOrientation& co)
{
    json j = colouring_to_json(co.colouring);
    json edges = json::object();
    for (int i = 0; i < graph.num_edges(); ++i) {
        const Edge& e = graph.edge(i);
        const char* tag = co.orientation[i] == Orient::Forward ? "F" : co.orientation[i] == Orient::Backward ? "B" : "U";
        edges[std::to_string(e.u) + "-" + std::to_string(e.v)] = tag;
    }
    j["edges"] = edges;
    return j;
}

ColouredOrientation orientation_from_json(const Graph& graph, const json& j)
{
    return guarded("malformed orientation", [&] {
        ColouredOrientation co;
        co.colouring = colouring_from_json(j, graph.num_vertices());
        co.orientation.assign(graph.num_edges(), Orient::Unoriented);
        std::vector<bool> seen(graph.num_edges(), false);
        for (const auto& [key, value] : j.at("edges").items()) {
            auto dash = key.find('-');
            if (dash == std::string::npos)
                throw ValidationError("edge key '" + key + "' must read u-v");
            int u = id_key(key.substr(0, dash), graph.num_vertices());
            int v = id_key(key.substr(dash + 1), graph.num_vertices());
            auto index = graph.edge_index(u, v);
            if (!index || u > v)
                throw ValidationError("edge key '" + key + "' is not an edge in u<v form");
            auto s = value.get<std::string>();
            if (s == "F")
                co.orientation[*index] = Orient::Forward;
            else if (s == "B")
                co.orientation[*index] = Orient::Backward;
            else if (s != "U")
                throw ValidationError("orientation of " + key + " must be F, B or U");
            seen[*index] = true;
        }
        for (int i = 0; i < graph.num_edges(); ++i)
            if (!seen[i])
                throw ValidationError("orientation omits edge " + std::to_string(graph.edge(i).u) + "-"
                    + std::to_string(graph.edge(i).v));
        return co;
    });
}

json labelling_to_json(const Labelling& L)
{
    json labels = json::object();
    for (std::size_t v = 0; v < L.labels.size(); ++v)
        labels[std::to_string(v)] = L.labels[v];
    return {{"k", L.k}, {"labels", labels}};
}

Labelling labelling_from_json(const json& j, int num_vertices)
{
    return guarded("malformed labelling", [&] {
        Labelling L;
        L.k = j.at("k").get<int>();
        L.labels.assign(num_vertices, 0);
        std::vector<bool> seen(num_vertices, false);
        for (const auto& [key, value] : j.at("labels").items()) {
            int v = id_key(key, num_vertices);
            L.labels[v] = value.get<int>();
            seen[v] = true;
        }
        for (int v = 0; v < num_vertices; ++v)
            if (!seen[v])
                throw ValidationError("labelling omits vertex " + std::to_string(v));
        return L;
    });
}

std::string to_dot(const Instance& instance)
{
    auto shape = [](Role role) {
        switch (role) {
        case Role::Original: return "circle";
        case Role::CycleVertex: return "box";
        case Role::InVertex: return "triangle";
        case Role::OutVertex: return "invtriangle";
        case Role::GadgetInternal: return "point";
        case Role::Pendant: return "plaintext";
        case Role::Port: return "doublecircle";
        case Role::Gate: return "diamond";
        }
        return "point";
    };
    const Graph& g = instance.graph;
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        out << "  " << v << " [shape=" << shape(g.role(v)) << ", label=\"" << (g.name(v).empty() ? std::to_string(v) : g.name(v))
            << "\"];\n";
    for (const Edge& e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw std::ios_base::failure("cannot write " + path);
}

} // namespace l21

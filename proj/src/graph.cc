#include <l21/errors.hh>
#include <l21/graph.hh>

#include <algorithm>
#include <array>
#include <queue>

namespace l21 {

namespace {
    constexpr std::array<std::pair<Role, std::string_view>, 8> role_names{{
        {Role::Original, "Original"},
        {Role::CycleVertex, "CycleVertex"},
        {Role::InVertex, "InVertex"},
        {Role::OutVertex, "OutVertex"},
        {Role::GadgetInternal, "GadgetInternal"},
        {Role::Pendant, "Pendant"},
        {Role::Port, "Port"},
        {Role::Gate, "Gate"},
    }};
}

std::string_view role_name(Role role)
{
    for (const auto& [r, n] : role_names)
        if (r == role)
            return n;
    return "GadgetInternal";
}

Role role_from_name(std::string_view name)
{
    for (const auto& [r, n] : role_names)
        if (n == name)
            return r;
    throw ValidationError("unknown vertex role '" + std::string(name) + "'");
}

VertexId Graph::add_vertex(Role role, std::string name)
{
    roles_.push_back(role);
    names_.push_back(std::move(name));
    adj_.emplace_back();
    adj_edges_.emplace_back();
    return num_vertices() - 1;
}

int Graph::add_edge(VertexId a, VertexId b)
{
    if (!contains(a) || !contains(b))
        throw ValidationError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} names an undeclared vertex");
    if (a == b)
        throw ValidationError("self-loop at vertex " + std::to_string(a));
    if (has_edge(a, b))
        throw ValidationError("parallel edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    const int index = num_edges();
    edges_.push_back(make_edge(a, b));
    adj_[a].push_back(b);
    adj_edges_[a].push_back(index);
    adj_[b].push_back(a);
    adj_edges_[b].push_back(index);
    return index;
}

std::optional<int> Graph::edge_index(VertexId a, VertexId b) const
{
    if (!contains(a) || !contains(b))
        return std::nullopt;
    if (adj_[a].size() > adj_[b].size())
        std::swap(a, b);
    for (std::size_t i = 0; i < adj_[a].size(); ++i)
        if (adj_[a][i] == b)
            return adj_edges_[a][i];
    return std::nullopt;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& nbrs : adj_)
        best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

std::vector<std::vector<VertexId>> Graph::distance_two_lists() const
{
    const int n = num_vertices();
    std::vector<std::vector<VertexId>> result(n);
    std::vector<int> stamp(n, -1);
    for (VertexId v = 0; v < n; ++v) {
        stamp[v] = v;
        for (VertexId u : adj_[v])
            stamp[u] = v;
        for (VertexId u : adj_[v])
            for (VertexId w : adj_[u])
                if (stamp[w] != v) {
                    stamp[w] = v;
                    result[v].push_back(w);
                }
        std::sort(result[v].begin(), result[v].end());
    }
    return result;
}

Graph Graph::without_edge(VertexId a, VertexId b) const
{
    if (!has_edge(a, b))
        throw ValidationError("no edge {" + std::to_string(a) + "," + std::to_string(b) + "} to remove");
    Graph result;
    for (VertexId v = 0; v < num_vertices(); ++v)
        result.add_vertex(roles_[v], names_[v]);
    const Edge gone = make_edge(a, b);
    for (const Edge& e : edges_)
        if (e != gone)
            result.add_edge(e.u, e.v);
    return result;
}

Graph Graph::induced(std::span<const VertexId> keep) const
{
    std::vector<int> index(num_vertices(), -1);
    Graph result;
    for (VertexId v : keep) {
        if (!contains(v) || index[v] >= 0)
            throw ValidationError("induced subgraph: bad or repeated vertex " + std::to_string(v));
        index[v] = result.add_vertex(roles_[v], names_[v]);
    }
    for (const Edge& e : edges_)
        if (index[e.u] >= 0 && index[e.v] >= 0)
            result.add_edge(index[e.u], index[e.v]);
    return result;
}

bool operator==(const Graph& a, const Graph& b)
{
    if (a.roles_ != b.roles_ || a.names_ != b.names_ || a.num_edges() != b.num_edges())
        return false;
    auto ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

bool check_regular(const Graph& graph, int d)
{
    for (VertexId v = 0; v < graph.num_vertices(); ++v)
        if (graph.degree(v) != d)
            return false;
    return true;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& graph)
{
    const int n = graph.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> components;
    for (VertexId start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> queue;
        queue.push(start);
        seen[start] = true;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            comp.push_back(v);
            for (VertexId u : graph.neighbours(v))
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

VertexId port(const PortMap& ports, const std::string& name)
{
    auto it = ports.find(name);
    if (it == ports.end())
        throw ValidationError("missing port '" + name + "'");
    return it->second;
}

} // namespace l21

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace l21 {

using VertexId = int;

enum class Role { Original, CycleVertex, InVertex, OutVertex, GadgetInternal, Pendant, Port, Gate };

std::string_view role_name(Role role);
Role role_from_name(std::string_view name);

/// Unordered edge, always stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph with dense ids. Vertices carry a role tag and a display name.
class Graph {
public:
    Graph() = default;

    VertexId add_vertex(Role role, std::string name = {});

    /// Returns the edge index. Rejects loops, parallel edges and unknown endpoints.
    int add_edge(VertexId a, VertexId b);

    int num_vertices() const { return static_cast<int>(roles_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    std::span<const VertexId> neighbours(VertexId v) const { return adj_[v]; }
    /// Edge indices parallel to neighbours(v).
    std::span<const int> incident_edges(VertexId v) const { return adj_edges_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[index]; }

    bool has_edge(VertexId a, VertexId b) const { return edge_index(a, b).has_value(); }
    std::optional<int> edge_index(VertexId a, VertexId b) const;

    Role role(VertexId v) const { return roles_[v]; }
    const std::string& name(VertexId v) const { return names_[v]; }
    void set_role(VertexId v, Role role) { roles_[v] = role; }
    void set_name(VertexId v, std::string name) { names_[v] = std::move(name); }

    bool contains(VertexId v) const { return v >= 0 && v < num_vertices(); }

    /// For each vertex, the vertices at distance exactly two (ascending ids).
    std::vector<std::vector<VertexId>> distance_two_lists() const;

    /// Copy of this graph with one edge deleted (ids unchanged).
    Graph without_edge(VertexId a, VertexId b) const;

    /// Subgraph induced by the given vertices, renumbered in the order given.
    Graph induced(std::span<const VertexId> keep) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<Role> roles_;
    std::vector<std::string> names_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::vector<int>> adj_edges_;
    std::vector<Edge> edges_;
};

/// Every vertex has degree exactly d. Vacuously true on the empty graph.
bool check_regular(const Graph& graph, int d);

/// Connected components as lists of vertices, each ascending, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& graph);

/// Named vertices of a gadget or instance.
using PortMap = std::map<std::string, VertexId>;

/// Looks a port up, throwing ValidationError with the port name if absent.
VertexId port(const PortMap& ports, const std::string& name);

} // namespace l21

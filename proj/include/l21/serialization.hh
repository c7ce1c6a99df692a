#pragma once

#include <l21/colouring.hh>
#include <l21/embedding.hh>
#include <l21/graph.hh>
#include <l21/labelling.hh>

#include <json.hpp>

#include <optional>
#include <string>

namespace l21 {

using json = nlohmann::json;

/// A graph with its optional span, embedding and named ports; the unit the CLI reads and writes.
struct Instance {
    std::optional<int> k;
    Graph graph;
    RotationSystem rot; // empty when no embedding is attached
    PortMap ports;

    friend bool operator==(const Instance&, const Instance&) = default;
};

json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& j);

/// Key-sorted compact dump with a trailing newline.
std::string canonical_text(const json& j);

/// Parses JSON text, reporting syntax errors as ParseError with a line number.
json parse_json_text(const std::string& text);

json colouring_to_json(const TwoColouring& c);
TwoColouring colouring_from_json(const json& j, int num_vertices);

/// {"colours": ..., "edges": {"u-v": "F"|"B"|"U"}} with u < v.
json orientation_to_json(const Graph& graph, const ColouredOrientation& co);
ColouredOrientation orientation_from_json(const Graph& graph, const json& j);

json labelling_to_json(const Labelling& L);
Labelling labelling_from_json(const json& j, int num_vertices);

/// Graphviz text; vertices in id order with a shape per role, then edges in index order.
std::string to_dot(const Instance& instance);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace l21

#pragma once

#include <l21/graph.hh>

#include <span>
#include <vector>

namespace l21 {

/// Combinatorial embedding: for every vertex, its neighbours in counter-clockwise order.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(std::vector<std::vector<VertexId>> order) : order_(std::move(order)) {}

    std::span<const VertexId> around(VertexId v) const { return order_[v]; }
    std::vector<VertexId>& mutable_around(VertexId v) { return order_[v]; }
    int num_vertices() const { return static_cast<int>(order_.size()); }
    bool empty() const { return order_.empty(); }

    /// Throws ValidationError naming the first vertex whose cyclic order is not a
    /// permutation of its neighbourhood.
    void validate(const Graph& graph) const;

    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

private:
    std::vector<std::vector<VertexId>> order_;
};

/// Directed edge side.
struct Dart {
    VertexId from;
    VertexId to;

    friend auto operator<=>(const Dart&, const Dart&) = default;
};

using FaceWalk = std::vector<Dart>;

/// Traces every face; each dart appears in exactly one walk. Isolated vertices contribute none.
std::vector<FaceWalk> faces(const Graph& graph, const RotationSystem& rot);

/// Genus-zero check by Euler's formula on every connected component.
bool verify_planar(const Graph& graph, const RotationSystem& rot);

struct Point {
    double x;
    double y;
};

/// Rotation read off a straight-line drawing: neighbours sorted by angle.
RotationSystem rotation_from_drawing(const Graph& graph, std::span<const Point> position);

} // namespace l21

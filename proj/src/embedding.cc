#include <l21/embedding.hh>
#include <l21/errors.hh>

#include <algorithm>
#include <cmath>

namespace l21 {

void RotationSystem::validate(const Graph& graph) const
{
    if (num_vertices() != graph.num_vertices())
        throw ValidationError("rotation covers " + std::to_string(num_vertices()) + " vertices, graph has "
            + std::to_string(graph.num_vertices()));
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
        std::vector<VertexId> have(order_[v].begin(), order_[v].end());
        std::vector<VertexId> want(graph.neighbours(v).begin(), graph.neighbours(v).end());
        std::sort(have.begin(), have.end());
        std::sort(want.begin(), want.end());
        if (have != want)
            throw ValidationError("rotation at vertex " + std::to_string(v) + " is not a permutation of its incident edges");
    }
}

namespace {
    // Dart ids: offset[v] + position of the dart in v's rotation.
    struct DartIndex {
        std::vector<int> offset;
        std::vector<std::vector<std::pair<VertexId, int>>> position;

        explicit DartIndex(const RotationSystem& rot)
        {
            const int n = rot.num_vertices();
            offset.assign(n + 1, 0);
            position.resize(n);
            for (VertexId v = 0; v < n; ++v) {
                auto around = rot.around(v);
                offset[v + 1] = offset[v] + static_cast<int>(around.size());
                for (int i = 0; i < static_cast<int>(around.size()); ++i)
                    position[v].emplace_back(around[i], i);
                std::sort(position[v].begin(), position[v].end());
            }
        }

        int pos(VertexId at, VertexId nbr) const
        {
            const auto& p = position[at];
            auto it = std::lower_bound(p.begin(), p.end(), std::pair{nbr, -1});
            return it->second;
        }
    };
}

std::vector<FaceWalk> faces(const Graph& graph, const RotationSystem& rot)
{
    rot.validate(graph);
    const DartIndex index(rot);
    const int n = graph.num_vertices();
    std::vector<bool> used(index.offset[n], false);
    std::vector<FaceWalk> result;

    for (VertexId v = 0; v < n; ++v) {
        auto around = rot.around(v);
        for (int i = 0; i < static_cast<int>(around.size()); ++i) {
            if (used[index.offset[v] + i])
                continue;
            FaceWalk walk;
            VertexId from = v, to = around[i];
            int id = index.offset[v] + i;
            while (!used[id]) {
                used[id] = true;
                walk.push_back({from, to});
                auto next_around = rot.around(to);
                int p = index.pos(to, from);
                VertexId next = next_around[(p + 1) % next_around.size()];
                from = to;
                to = next;
                id = index.offset[from] + index.pos(from, to);
            }
            result.push_back(std::move(walk));
        }
    }
    return result;
}

bool verify_planar(const Graph& graph, const RotationSystem& rot)
{
    auto walks = faces(graph, rot);
    auto comps = connected_components(graph);
    std::vector<int> comp_of(graph.num_vertices());
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (VertexId v : comps[c])
            comp_of[v] = c;

    std::vector<long> vcount(comps.size(), 0), ecount(comps.size(), 0), fcount(comps.size(), 0);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        vcount[c] = static_cast<long>(comps[c].size());
    for (const Edge& e : graph.edges())
        ++ecount[comp_of[e.u]];
    for (const auto& walk : walks)
        ++fcount[comp_of[walk.front().from]];
    for (std::size_t c = 0; c < comps.size(); ++c) {
        long f = ecount[c] == 0 ? 1 : fcount[c];
        if (vcount[c] - ecount[c] + f != 2)
            return false;
    }
    return true;
}

RotationSystem rotation_from_drawing(const Graph& graph, std::span<const Point> position)
{
    if (static_cast<int>(position.size()) != graph.num_vertices())
        throw ValidationError("drawing has " + std::to_string(position.size()) + " points for "
            + std::to_string(graph.num_vertices()) + " vertices");
    std::vector<std::vector<VertexId>> order(graph.num_vertices());
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
        auto& around = order[v];
        around.assign(graph.neighbours(v).begin(), graph.neighbours(v).end());
        auto angle = [&](VertexId u) {
            return std::atan2(position[u].y - position[v].y, position[u].x - position[v].x);
        };
        std::sort(around.begin(), around.end(), [&](VertexId a, VertexId b) { return angle(a) < angle(b); });
    }
    return RotationSystem(std::move(order));
}

} // namespace l21

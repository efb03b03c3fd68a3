#include "chainlayer/layering.hpp"

#include <deque>
#include <optional>

namespace chainlayer {

const char* to_string(Side side) {
    return side == Side::Upstream ? "upstream" : "downstream";
}

std::string to_string(LayerCoord coord) {
    return (coord.side == Side::Upstream ? "S" : "D") + std::to_string(coord.depth);
}

int LayerAssignment::upstream_depth() const {
    int deepest = 0;
    for (const auto& [coord, size] : layer_sizes) {
        if (coord.side == Side::Upstream && coord.depth > deepest) deepest = coord.depth;
    }
    return deepest;
}

int LayerAssignment::downstream_depth() const {
    int deepest = 0;
    for (const auto& [coord, size] : layer_sizes) {
        if (coord.side == Side::Downstream && coord.depth > deepest) deepest = coord.depth;
    }
    return deepest;
}

namespace {

// BFS over one side's traversal relation; returns shortest hop counts.
std::map<std::string, int> bfs_depths(const SupplyChainGraph& graph, Side side) {
    // adjacency: reached actor -> next actors one hop further out
    std::multimap<std::string, std::string> next;
    for (const auto& [key, edge] : graph.edges()) {
        if (side == Side::Upstream && edge.kind == EdgeKind::OrderSupply) {
            next.emplace(key.second, key.first);  // against edge direction
        } else if (side == Side::Downstream && edge.kind != EdgeKind::OrderSupply) {
            next.emplace(key.first, key.second);  // with edge direction
        }
    }
    std::map<std::string, int> depth;
    std::deque<std::string> queue;
    depth[graph.manufacturer_id()] = 0;
    queue.push_back(graph.manufacturer_id());
    while (!queue.empty()) {
        std::string current = queue.front();
        queue.pop_front();
        auto [lo, hi] = next.equal_range(current);
        for (auto it = lo; it != hi; ++it) {
            if (!depth.contains(it->second)) {
                depth[it->second] = depth[current] + 1;
                queue.push_back(it->second);
            }
        }
    }
    depth.erase(graph.manufacturer_id());
    return depth;
}

}  // namespace

LayerAssignment assign_layers(const SupplyChainGraph& graph) {
    auto violations = validate(graph);
    for (const auto& v : violations) {
        if (v.severity == ViolationSeverity::Error) {
            if (v.code == ViolationCode::Disconnected) {
                throw ChainError(Errc::Disconnected, v.message);
            }
            throw ChainError(Errc::LayeringInconsistency, v.message);
        }
    }

    auto upstream = bfs_depths(graph, Side::Upstream);
    auto downstream = bfs_depths(graph, Side::Downstream);

    for (const auto& [id, d] : upstream) {
        if (downstream.contains(id)) {
            throw ChainError(Errc::SideConflict,
                             "actor '" + id + "' is reachable on both sides of the manufacturer");
        }
    }

    LayerAssignment assignment;
    for (const auto& [id, actor] : graph.actors()) {
        if (id == graph.manufacturer_id()) continue;
        std::optional<LayerCoord> coord;
        if (auto it = upstream.find(id); it != upstream.end()) {
            coord = LayerCoord{Side::Upstream, it->second};
        } else if (auto jt = downstream.find(id); jt != downstream.end()) {
            coord = LayerCoord{Side::Downstream, jt->second};
        }
        if (!coord) {
            throw ChainError(Errc::Disconnected,
                             "actor '" + id + "' is unreachable by layer traversal");
        }
        // Kind/side rule: suppliers upstream, warehouses and customers
        // downstream.
        bool ok = actor.kind == ActorKind::Supplier ? coord->side == Side::Upstream
                                                    : coord->side == Side::Downstream;
        if (!ok) {
            throw ChainError(Errc::LayeringInconsistency,
                             std::string(to_string(actor.kind)) + " '" + id + "' landed on the " +
                                 to_string(coord->side) + " side");
        }
        assignment.coords.emplace(id, *coord);
        assignment.layer_sizes[*coord] += 1;
    }

    // Every edge must stay within the layer architecture: manufacturer to
    // depth 1, same layer, or adjacent depths on one side; order edges live
    // upstream, transport/distribution edges downstream.
    for (const auto& [key, edge] : graph.edges()) {
        const std::string label = key.first + "->" + key.second;
        bool from_origin = key.first == graph.manufacturer_id();
        bool to_origin = key.second == graph.manufacturer_id();
        if (from_origin || to_origin) {
            const auto& other = from_origin ? key.second : key.first;
            LayerCoord c = assignment.coords.at(other);
            if (c.depth != 1) {
                throw ChainError(Errc::LayeringInconsistency,
                                 "edge '" + label + "' links the manufacturer to depth " +
                                     std::to_string(c.depth));
            }
            Side expected = edge.kind == EdgeKind::OrderSupply ? Side::Upstream : Side::Downstream;
            if (c.side != expected) {
                throw ChainError(Errc::LayeringInconsistency,
                                 "edge '" + label + "' has kind " + to_string(edge.kind) +
                                     " on the " + to_string(c.side) + " side");
            }
            continue;
        }
        LayerCoord a = assignment.coords.at(key.first);
        LayerCoord b = assignment.coords.at(key.second);
        if (a.side != b.side) {
            throw ChainError(Errc::LayeringInconsistency,
                             "edge '" + label + "' crosses sides away from the manufacturer");
        }
        if (a.depth - b.depth > 1 || b.depth - a.depth > 1) {
            throw ChainError(Errc::LayeringInconsistency,
                             "edge '" + label + "' spans non-adjacent layers " + to_string(a) +
                                 " and " + to_string(b));
        }
        Side expected = edge.kind == EdgeKind::OrderSupply ? Side::Upstream : Side::Downstream;
        if (a.side != expected) {
            throw ChainError(Errc::LayeringInconsistency,
                             "edge '" + label + "' has kind " + to_string(edge.kind) + " on the " +
                                 to_string(a.side) + " side");
        }
    }

    return assignment;
}

SupplyChainMatrix build_matrix(const LayerAssignment& assignment) {
    SupplyChainMatrix matrix;
    // Upstream deepest-first.
    for (int d = assignment.upstream_depth(); d >= 1; --d) {
        LayerCoord coord{Side::Upstream, d};
        if (assignment.layer_sizes.contains(coord)) {
            matrix.columns.push_back({coord, {}});
        }
    }
    // Downstream shallowest-first.
    for (int d = 1; d <= assignment.downstream_depth(); ++d) {
        LayerCoord coord{Side::Downstream, d};
        if (assignment.layer_sizes.contains(coord)) {
            matrix.columns.push_back({coord, {}});
        }
    }
    // coords is id-sorted, so each column comes out id-sorted.
    for (const auto& [id, coord] : assignment.coords) {
        for (auto& column : matrix.columns) {
            if (column.coord == coord) {
                column.actor_ids.push_back(id);
                break;
            }
        }
    }
    return matrix;
}

std::vector<LayerNeighbor> adjacent_layers(const LayerAssignment& assignment, LayerCoord coord) {
    if (!assignment.layer_sizes.contains(coord)) {
        throw ChainError(Errc::UnknownLayer, "no layer " + to_string(coord));
    }
    std::vector<LayerNeighbor> neighbors;
    if (coord.depth == 1) {
        neighbors.push_back({.origin = true});
    } else {
        neighbors.push_back({.origin = false, .coord = {coord.side, coord.depth - 1}});
    }
    LayerCoord outward{coord.side, coord.depth + 1};
    if (assignment.layer_sizes.contains(outward)) {
        neighbors.push_back({.origin = false, .coord = outward});
    }
    return neighbors;
}

}  // namespace chainlayer

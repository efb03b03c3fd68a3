#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "chainlayer/model.hpp"

namespace chainlayer {

// The manufacturer is the reference mark: procurement on one side,
// distribution on the other.
enum class Side { Upstream, Downstream };

const char* to_string(Side side);

struct LayerCoord {
    Side side = Side::Upstream;
    int depth = 1;  // 1 = adjacent to the manufacturer

    friend constexpr auto operator<=>(const LayerCoord&, const LayerCoord&) = default;
};

// "S3" / "D1" labels, upstream / downstream.
std::string to_string(LayerCoord coord);

struct LayerAssignment {
    std::map<std::string, LayerCoord> coords;  // actor id -> layer; manufacturer excluded
    std::map<LayerCoord, int> layer_sizes;

    int upstream_depth() const;    // deepest upstream layer, 0 when none
    int downstream_depth() const;  // deepest downstream layer, 0 when none
};

struct MatrixColumn {
    LayerCoord coord;
    std::vector<std::string> actor_ids;  // sorted by id
};

// Ragged matrix of actor ids: upstream columns deepest-first, then
// downstream columns shallowest-first.
struct SupplyChainMatrix {
    std::vector<MatrixColumn> columns;
};

// Breadth-first depths from the manufacturer. Upstream follows OrderSupply
// edges against their direction (the manufacturer's suppliers sit at depth
// 1), downstream follows Transport/Distribution edges with their direction;
// depth is the shortest such path. Throws SideConflict when an actor is
// reachable on both sides, Disconnected when it is reachable on neither,
// and LayeringInconsistency when an edge spans non-adjacent layers, crosses
// sides away from the manufacturer, or an actor kind lands on the wrong
// side.
LayerAssignment assign_layers(const SupplyChainGraph& graph);

SupplyChainMatrix build_matrix(const LayerAssignment& assignment);

// Neighbor of a layer in the architecture; depth-1 layers border the
// manufacturer origin.
struct LayerNeighbor {
    bool origin = false;   // true: the manufacturer origin marker
    LayerCoord coord{};    // meaningful when !origin

    friend bool operator==(const LayerNeighbor&, const LayerNeighbor&) = default;
};

std::vector<LayerNeighbor> adjacent_layers(const LayerAssignment& assignment, LayerCoord coord);

}  // namespace chainlayer

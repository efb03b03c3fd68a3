#pragma once

#include "chainlayer/layering.hpp"
#include "chainlayer/model.hpp"

namespace chainlayer {

// The objective F and its eight components. total is always the exact sum
// of the components.
struct CostBreakdown {
    Money added_supplier;
    Money added_warehouse;
    Money added_customer;
    Money production;
    Money storage;
    Money order_interaction;
    Money transport_interaction;
    Money distribution_interaction;
    Money total;

    friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

struct AddedCosts {
    Money supplier;
    Money warehouse;
    Money customer;

    friend bool operator==(const AddedCosts&, const AddedCosts&) = default;
};

struct ActionCosts {
    Money production;
    Money storage;

    friend bool operator==(const ActionCosts&, const ActionCosts&) = default;
};

struct InteractionCosts {
    Money order;
    Money transport;
    Money distribution;

    friend bool operator==(const InteractionCosts&, const InteractionCosts&) = default;
};

// Sum of added_cost per actor kind across all layers; the manufacturer
// contributes nothing. Throws LayeringInconsistency when the assignment
// does not cover the graph.
AddedCosts total_added_cost(const SupplyChainGraph& graph, const LayerAssignment& assignment);

// Production over producers (the manufacturer's PMC always counts) and
// storage over storage-capable actors; everyone else contributes zero via
// the q gate.
ActionCosts total_action_cost(const SupplyChainGraph& graph);

// Per-kind sums of edge interaction costs over the whole graph.
InteractionCosts total_interaction_cost(const SupplyChainGraph& graph);

// Min F: added + action + interaction, assembled exactly.
CostBreakdown objective(const SupplyChainGraph& graph, const LayerAssignment& assignment);

}  // namespace chainlayer

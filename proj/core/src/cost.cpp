#include "chainlayer/cost.hpp"

namespace chainlayer {

namespace {

void require_consistent(const SupplyChainGraph& graph, const LayerAssignment& assignment) {
    for (const auto& [id, actor] : graph.actors()) {
        if (id == graph.manufacturer_id()) continue;
        if (!assignment.coords.contains(id)) {
            throw ChainError(Errc::LayeringInconsistency,
                             "assignment does not cover actor '" + id + "'");
        }
    }
    for (const auto& [id, coord] : assignment.coords) {
        if (!graph.has_actor(id)) {
            throw ChainError(Errc::LayeringInconsistency,
                             "assignment names unknown actor '" + id + "'");
        }
    }
}

}  // namespace

AddedCosts total_added_cost(const SupplyChainGraph& graph, const LayerAssignment& assignment) {
    require_consistent(graph, assignment);
    AddedCosts added;
    for (const auto& [id, actor] : graph.actors()) {
        switch (actor.kind) {
            case ActorKind::Supplier: added.supplier += actor.added_cost; break;
            case ActorKind::Warehouse: added.warehouse += actor.added_cost; break;
            case ActorKind::Customer: added.customer += actor.added_cost; break;
            case ActorKind::Manufacturer: break;  // no added cost for the reference mark
        }
    }
    return added;
}

ActionCosts total_action_cost(const SupplyChainGraph& graph) {
    ActionCosts action;
    for (const auto& [id, actor] : graph.actors()) {
        if (actor.capabilities.is_producer || actor.kind == ActorKind::Manufacturer) {
            action.production += actor.production_cost;
        }
        if (actor.capabilities.is_storage) {
            action.storage += actor.storage_cost;
        }
    }
    return action;
}

InteractionCosts total_interaction_cost(const SupplyChainGraph& graph) {
    InteractionCosts interaction;
    for (const auto& [key, edge] : graph.edges()) {
        switch (edge.kind) {
            case EdgeKind::OrderSupply: interaction.order += edge.interaction_cost; break;
            case EdgeKind::Transport: interaction.transport += edge.interaction_cost; break;
            case EdgeKind::Distribution: interaction.distribution += edge.interaction_cost; break;
        }
    }
    return interaction;
}

CostBreakdown objective(const SupplyChainGraph& graph, const LayerAssignment& assignment) {
    AddedCosts added = total_added_cost(graph, assignment);
    ActionCosts action = total_action_cost(graph);
    InteractionCosts interaction = total_interaction_cost(graph);
    CostBreakdown breakdown{
        .added_supplier = added.supplier,
        .added_warehouse = added.warehouse,
        .added_customer = added.customer,
        .production = action.production,
        .storage = action.storage,
        .order_interaction = interaction.order,
        .transport_interaction = interaction.transport,
        .distribution_interaction = interaction.distribution,
        .total = Money{},
    };
    breakdown.total = breakdown.added_supplier + breakdown.added_warehouse +
                      breakdown.added_customer + breakdown.production + breakdown.storage +
                      breakdown.order_interaction + breakdown.transport_interaction +
                      breakdown.distribution_interaction;
    return breakdown;
}

}  // namespace chainlayer

#include <doctest.h>

#include <random>

#include "chainlayer/cost.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace chainlayer;
using namespace chainlayer::testing;

TEST_CASE("added costs are zero without non-manufacturer actors") {
    SupplyChainGraph graph{make_manufacturer()};
    AddedCosts added = total_added_cost(graph, assign_layers(graph));
    CHECK(added == AddedCosts{});
}

TEST_CASE("added costs sum per kind") {
    SupplyChainGraph graph{make_manufacturer()};
    const char* costs[] = {"1.00", "2.00", "3.00"};
    for (int i = 0; i < 3; ++i) {
        Actor supplier = make_actor("s" + std::to_string(i), ActorKind::Supplier);
        supplier.added_cost = m(costs[i]);
        graph.add_actor(supplier);
        graph.add_edge({supplier.id, "Man", EdgeKind::OrderSupply, {}});
    }
    AddedCosts added = total_added_cost(graph, assign_layers(graph));
    CHECK(added.supplier == m("6.00"));
    CHECK(added.warehouse == m("0.00"));
    CHECK(added.customer == m("0.00"));
}

TEST_CASE("example chain with unit added costs splits 5/3/6") {
    SupplyChainGraph graph = example_fixture();
    // Every actor, the manufacturer included: its 1.00 must not leak into
    // any bucket.
    for (const auto& [id, actor] : graph.actors()) {
        graph.set_actor_cost(id, SupplyChainGraph::CostField::Added, m("1.00"));
    }
    AddedCosts added = total_added_cost(graph, assign_layers(graph));
    CHECK(added.supplier == m("5.00"));
    CHECK(added.warehouse == m("3.00"));
    CHECK(added.customer == m("6.00"));
}

TEST_CASE("the q gate zeroes non-capable actors") {
    SupplyChainGraph graph{make_manufacturer("Man", "10.00")};
    Actor idle = make_actor("idle", ActorKind::Supplier);
    idle.production_cost = m("99.00");  // stored but never counted
    idle.storage_cost = m("99.00");
    graph.add_actor(idle);
    graph.add_edge({"idle", "Man", EdgeKind::OrderSupply, {}});

    ActionCosts action = total_action_cost(graph);
    CHECK(action.production == m("10.00"));
    CHECK(action.storage == m("0.00"));
}

TEST_CASE("gated production and storage sums") {
    SupplyChainGraph graph{make_manufacturer("Man", "7.00")};
    Actor d = make_actor("D", ActorKind::Supplier);
    d.capabilities.is_producer = true;
    d.production_cost = m("4.00");
    Actor g = make_actor("G", ActorKind::Warehouse);
    g.capabilities.is_storage = true;
    g.storage_cost = m("2.50");
    Actor n = make_actor("N", ActorKind::Customer);
    n.capabilities.is_storage = true;
    n.storage_cost = m("1.50");
    graph.add_actor(d);
    graph.add_actor(g);
    graph.add_actor(n);
    graph.add_edge({"D", "Man", EdgeKind::OrderSupply, {}});
    graph.add_edge({"Man", "G", EdgeKind::Transport, {}});
    graph.add_edge({"G", "N", EdgeKind::Distribution, {}});

    ActionCosts action = total_action_cost(graph);
    CHECK(action.production == m("11.00"));  // 4.00 + PMC 7.00
    CHECK(action.storage == m("4.00"));

    // Flipping D's gate removes exactly its production cost.
    graph.set_capability("D", SupplyChainGraph::Capability::Producer, false);
    ActionCosts gated = total_action_cost(graph);
    CHECK(action.production.cents() - gated.production.cents() == 400);
    CHECK(gated.storage == action.storage);
}

TEST_CASE("interaction costs bucket by edge kind") {
    SupplyChainGraph empty{make_manufacturer()};
    CHECK(total_interaction_cost(empty) == InteractionCosts{});

    SupplyChainGraph graph{make_manufacturer()};
    graph.add_actor(make_actor("A", ActorKind::Supplier));
    graph.add_actor(make_actor("E", ActorKind::Supplier));
    graph.add_actor(make_actor("G", ActorKind::Warehouse));
    graph.add_actor(make_actor("N", ActorKind::Customer));
    graph.add_edge({"A", "E", EdgeKind::OrderSupply, m("5.00")});
    graph.add_edge({"E", "Man", EdgeKind::OrderSupply, m("3.00")});
    graph.add_edge({"Man", "G", EdgeKind::Transport, m("7.00")});
    graph.add_edge({"G", "N", EdgeKind::Distribution, m("2.00")});

    InteractionCosts interaction = total_interaction_cost(graph);
    CHECK(interaction.order == m("8.00"));
    CHECK(interaction.transport == m("7.00"));
    CHECK(interaction.distribution == m("2.00"));

    // Doubling every edge doubles every component.
    SupplyChainGraph doubled = graph;
    for (const auto& [key, edge] : graph.edges()) {
        doubled.set_edge_cost(key.first, key.second,
                              edge.interaction_cost + edge.interaction_cost);
    }
    InteractionCosts twice = total_interaction_cost(doubled);
    CHECK(twice.order.cents() == 2 * interaction.order.cents());
    CHECK(twice.transport.cents() == 2 * interaction.transport.cents());
    CHECK(twice.distribution.cents() == 2 * interaction.distribution.cents());
}

TEST_CASE("the example chain objective matches the hand-derived table") {
    SupplyChainGraph graph = example_fixture();
    CostBreakdown breakdown = objective(graph, assign_layers(graph));
    CHECK(breakdown.added_supplier == m("23.00"));
    CHECK(breakdown.added_warehouse == m("16.00"));
    CHECK(breakdown.added_customer == m("10.00"));
    CHECK(breakdown.production == m("40.00"));
    CHECK(breakdown.storage == m("8.75"));
    CHECK(breakdown.order_interaction == m("14.25"));
    CHECK(breakdown.transport_interaction == m("137.50"));
    CHECK(breakdown.distribution_interaction == m("13.25"));
    CHECK(breakdown.total == m("262.75"));
    CHECK(breakdown.total.cents() == oracle_total_cents(graph));
}

TEST_CASE("all-zero costs evaluate to zero") {
    SupplyChainGraph graph = example_fixture();
    for (const auto& [id, actor] : graph.actors()) {
        graph.set_actor_cost(id, SupplyChainGraph::CostField::Added, {});
        graph.set_actor_cost(id, SupplyChainGraph::CostField::Production, {});
        graph.set_actor_cost(id, SupplyChainGraph::CostField::Storage, {});
    }
    for (const auto& [key, edge] : graph.edges()) {
        graph.set_edge_cost(key.first, key.second, {});
    }
    CHECK(objective(graph, assign_layers(graph)).total == m("0.00"));
}

TEST_CASE("breakdown total always equals the sum of its components") {
    std::mt19937 rng(101);
    for (int i = 0; i < 200; ++i) {
        SupplyChainGraph graph = random_graph(rng);
        CostBreakdown b = objective(graph, assign_layers(graph));
        Money sum = b.added_supplier + b.added_warehouse + b.added_customer + b.production +
                    b.storage + b.order_interaction + b.transport_interaction +
                    b.distribution_interaction;
        CHECK(b.total == sum);
    }
}

TEST_CASE("objective equals the flat-sum oracle on random graphs") {
    std::mt19937 rng(202);
    for (int i = 0; i < 300; ++i) {
        SupplyChainGraph graph = random_graph(rng, 3, 20);
        CostBreakdown b = objective(graph, assign_layers(graph));
        CHECK(b.total.cents() == oracle_total_cents(graph));

        OracleBreakdown o = oracle_breakdown(graph);
        CHECK(b.added_supplier.cents() == o.added_supplier);
        CHECK(b.added_warehouse.cents() == o.added_warehouse);
        CHECK(b.added_customer.cents() == o.added_customer);
        CHECK(b.production.cents() == o.production);
        CHECK(b.storage.cents() == o.storage);
        CHECK(b.order_interaction.cents() == o.order);
        CHECK(b.transport_interaction.cents() == o.transport);
        CHECK(b.distribution_interaction.cents() == o.distribution);
    }
}

TEST_CASE("adding positive cost strictly increases the total") {
    std::mt19937 rng(303);
    for (int i = 0; i < 50; ++i) {
        SupplyChainGraph graph = random_graph(rng);
        std::int64_t before = objective(graph, assign_layers(graph)).total.cents();

        SupplyChainGraph more = graph;
        Actor extra = make_actor("extra", ActorKind::Supplier);
        extra.added_cost = Money::from_cents(
            std::uniform_int_distribution<int>(1, 10000)(rng));
        more.add_actor(extra);
        more.add_edge({"extra", more.manufacturer_id(), EdgeKind::OrderSupply, {}});
        CHECK(objective(more, assign_layers(more)).total.cents() > before);

        SupplyChainGraph same = graph;
        same.add_actor(make_actor("extra", ActorKind::Supplier));
        same.add_edge({"extra", same.manufacturer_id(), EdgeKind::OrderSupply, {}});
        CHECK(objective(same, assign_layers(same)).total.cents() == before);
    }
}

TEST_CASE("the total ignores the layer assignment's labels") {
    std::mt19937 rng(404);
    SupplyChainGraph graph = random_graph(rng, 8, 16);
    CostBreakdown original = objective(graph, assign_layers(graph));

    Actor man = graph.manufacturer();
    man.id = "renamed_" + man.id;
    SupplyChainGraph renamed{man};
    for (const auto& [id, actor] : graph.actors()) {
        if (id == graph.manufacturer_id()) continue;
        Actor copy = actor;
        copy.id = "renamed_" + id;
        renamed.add_actor(copy);
    }
    for (const auto& [key, edge] : graph.edges()) {
        Edge copy = edge;
        copy.from = "renamed_" + edge.from;
        copy.to = "renamed_" + edge.to;
        renamed.add_edge(copy);
    }
    CHECK(objective(renamed, assign_layers(renamed)) == original);
}

TEST_CASE("an inconsistent assignment is rejected") {
    SupplyChainGraph graph = example_fixture();
    LayerAssignment assignment = assign_layers(graph);
    assignment.coords.erase("A");
    CHECK_THROWS_AS(total_added_cost(graph, assignment), ChainError);
    CHECK_THROWS_AS(objective(graph, assignment), ChainError);

    LayerAssignment bogus = assign_layers(graph);
    bogus.coords.emplace("ghost", LayerCoord{Side::Upstream, 1});
    CHECK_THROWS_AS(objective(graph, bogus), ChainError);
}

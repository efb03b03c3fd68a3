#include <benchmark/benchmark.h>

#include <string>

#include "chainlayer/agents.hpp"
#include "chainlayer/cost.hpp"
#include "chainlayer/layering.hpp"
#include "chainlayer/model.hpp"
#include "chainlayer/scenario.hpp"

namespace {

using namespace chainlayer;

// Symmetric chain: `depth` supplier layers and `depth` customer layers,
// `width` actors per layer, each wired to one parent in the previous layer.
SupplyChainGraph ladder_chain(int depth, int width) {
    Actor man;
    man.id = "man";
    man.name = "man";
    man.kind = ActorKind::Manufacturer;
    man.production_cost = Money::from_cents(2500);
    SupplyChainGraph graph{man};

    Money added = Money::from_cents(125);
    Money edge_cost = Money::from_cents(75);
    for (int d = 1; d <= depth; ++d) {
        for (int w = 0; w < width; ++w) {
            std::string id = "s" + std::to_string(d) + "_" + std::to_string(w);
            Actor actor;
            actor.id = id;
            actor.name = id;
            actor.kind = ActorKind::Supplier;
            actor.capabilities.is_producer = (w % 2) == 0;
            actor.added_cost = added;
            actor.production_cost = Money::from_cents(310);
            graph.add_actor(actor);
            std::string parent =
                d == 1 ? "man" : "s" + std::to_string(d - 1) + "_" + std::to_string(w % width);
            graph.add_edge({id, parent, EdgeKind::OrderSupply, edge_cost});
        }
    }
    for (int d = 1; d <= depth; ++d) {
        for (int w = 0; w < width; ++w) {
            std::string id = "c" + std::to_string(d) + "_" + std::to_string(w);
            Actor actor;
            actor.id = id;
            actor.name = id;
            actor.kind = d == 1 ? ActorKind::Warehouse : ActorKind::Customer;
            actor.capabilities.is_storage = d == 1;
            actor.added_cost = added;
            actor.storage_cost = Money::from_cents(220);
            graph.add_actor(actor);
            std::string parent =
                d == 1 ? "man" : "c" + std::to_string(d - 1) + "_" + std::to_string(w % width);
            graph.add_edge({parent, id, d == 1 ? EdgeKind::Transport : EdgeKind::Distribution,
                            edge_cost});
        }
    }
    return graph;
}

void BM_AssignLayers(benchmark::State& state) {
    SupplyChainGraph graph = ladder_chain(static_cast<int>(state.range(0)), 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assign_layers(graph));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(graph.actors().size()));
}
BENCHMARK(BM_AssignLayers)->Arg(3)->Arg(8)->Arg(16);

void BM_Objective(benchmark::State& state) {
    SupplyChainGraph graph = ladder_chain(static_cast<int>(state.range(0)), 8);
    LayerAssignment assignment = assign_layers(graph);
    for (auto _ : state) {
        benchmark::DoNotOptimize(objective(graph, assignment));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(graph.actors().size()));
}
BENCHMARK(BM_Objective)->Arg(3)->Arg(8)->Arg(16);

void BM_CostCollection(benchmark::State& state) {
    SupplyChainGraph graph = ladder_chain(static_cast<int>(state.range(0)), 8);
    LayerAssignment assignment = assign_layers(graph);
    for (auto _ : state) {
        AgentSystem system(graph, assignment);
        benchmark::DoNotOptimize(run_cost_collection(system));
    }
}
BENCHMARK(BM_CostCollection)->Arg(3)->Arg(8);

void BM_CompareScenario(benchmark::State& state) {
    SupplyChainGraph graph = ladder_chain(static_cast<int>(state.range(0)), 8);
    Scenario scenario{"reprice",
                      {delta::SetActorCost{"s1_0", SupplyChainGraph::CostField::Added,
                                           Money::from_cents(999)},
                       delta::SetEdgeCost{"s1_0", "man", Money::from_cents(5)}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare(graph, scenario));
    }
}
BENCHMARK(BM_CompareScenario)->Arg(3)->Arg(8);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}

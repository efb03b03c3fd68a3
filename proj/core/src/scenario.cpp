#include "chainlayer/scenario.hpp"

namespace chainlayer {

const char* to_string(Decision decision) {
    return decision == Decision::KeepBaseline ? "keep-baseline" : "adopt-scenario";
}

SupplyChainGraph apply(const SupplyChainGraph& graph, const Scenario& scenario) {
    SupplyChainGraph result = graph;
    for (std::size_t i = 0; i < scenario.deltas.size(); ++i) {
        try {
            std::visit(
                [&result](const auto& d) {
                    using D = std::decay_t<decltype(d)>;
                    if constexpr (std::is_same_v<D, delta::AddActor>) {
                        result.add_actor(d.actor);
                    } else if constexpr (std::is_same_v<D, delta::RemoveActor>) {
                        result.remove_actor(d.id);
                    } else if constexpr (std::is_same_v<D, delta::AddEdge>) {
                        result.add_edge(d.edge);
                    } else if constexpr (std::is_same_v<D, delta::RemoveEdge>) {
                        result.remove_edge(d.from, d.to);
                    } else if constexpr (std::is_same_v<D, delta::SetActorCost>) {
                        result.set_actor_cost(d.id, d.field, d.value);
                    } else if constexpr (std::is_same_v<D, delta::SetEdgeCost>) {
                        result.set_edge_cost(d.from, d.to, d.value);
                    } else {
                        result.set_capability(d.id, d.flag, d.value);
                    }
                },
                scenario.deltas[i]);
        } catch (const ChainError& e) {
            throw ScenarioError(e.code(), "delta " + std::to_string(i) + ": " + e.what(), i);
        }
    }
    auto violations = validate(result);
    for (const auto& v : violations) {
        if (v.severity == ViolationSeverity::Error) {
            throw ScenarioError(Errc::InvalidScenario,
                                "scenario '" + scenario.name + "' leaves the chain invalid: " +
                                    v.message,
                                std::nullopt);
        }
    }
    return result;
}

Decision decide(const CostBreakdown& cost_st1, const CostBreakdown& cost_st2) {
    return cost_st1.total > cost_st2.total ? Decision::AdoptScenario : Decision::KeepBaseline;
}

ComparisonReport compare(const SupplyChainGraph& graph, const Scenario& scenario,
                         const std::string& baseline_name) {
    SupplyChainGraph applied = apply(graph, scenario);
    CostBreakdown cost_st1 = objective(graph, assign_layers(graph));
    CostBreakdown cost_st2 = objective(applied, assign_layers(applied));
    return ComparisonReport{
        .baseline_name = baseline_name,
        .scenario_name = scenario.name,
        .cost_st1 = cost_st1,
        .cost_st2 = cost_st2,
        .decision = decide(cost_st1, cost_st2),
        .delta_total = cost_st2.total - cost_st1.total,
    };
}

}  // namespace chainlayer

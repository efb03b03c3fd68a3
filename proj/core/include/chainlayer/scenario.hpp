#pragma once

#include <string>
#include <variant>
#include <vector>

#include "chainlayer/cost.hpp"
#include "chainlayer/model.hpp"

namespace chainlayer {

namespace delta {

struct AddActor {
    Actor actor;
};
struct RemoveActor {
    std::string id;
};
struct AddEdge {
    Edge edge;
};
struct RemoveEdge {
    std::string from;
    std::string to;
};
struct SetActorCost {
    std::string id;
    SupplyChainGraph::CostField field = SupplyChainGraph::CostField::Added;
    Money value;
};
struct SetEdgeCost {
    std::string from;
    std::string to;
    Money value;
};
struct SetCapability {
    std::string id;
    SupplyChainGraph::Capability flag = SupplyChainGraph::Capability::Producer;
    bool value = false;
};

}  // namespace delta

using Delta = std::variant<delta::AddActor, delta::RemoveActor, delta::AddEdge, delta::RemoveEdge,
                           delta::SetActorCost, delta::SetEdgeCost, delta::SetCapability>;

// An ordered edit script over a baseline graph; the applied result must
// pass validate with no error-class violations.
struct Scenario {
    std::string name;
    std::vector<Delta> deltas;
};

enum class Decision { KeepBaseline, AdoptScenario };

const char* to_string(Decision decision);

// Two-state dimensioning comparison: CSt1 vs CSt2 and the resulting call.
struct ComparisonReport {
    std::string baseline_name;
    std::string scenario_name;
    CostBreakdown cost_st1;
    CostBreakdown cost_st2;
    Decision decision = Decision::KeepBaseline;
    SignedMoney delta_total;  // cost_st2.total - cost_st1.total
};

// Applies deltas strictly in order to a copy; the baseline is untouched.
// Per-delta failures carry the delta index (ScenarioError); a structurally
// invalid result raises InvalidScenario.
SupplyChainGraph apply(const SupplyChainGraph& graph, const Scenario& scenario);

// AdoptScenario iff the applied state is strictly cheaper; ties keep the
// baseline. Pure and centralized — the agent runtime must agree with it.
ComparisonReport compare(const SupplyChainGraph& graph, const Scenario& scenario,
                         const std::string& baseline_name = "baseline");

// The sign rule by itself, shared by compare and the agent controller.
Decision decide(const CostBreakdown& cost_st1, const CostBreakdown& cost_st2);

}  // namespace chainlayer

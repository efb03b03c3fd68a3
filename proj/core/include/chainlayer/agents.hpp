#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chainlayer/cost.hpp"
#include "chainlayer/layering.hpp"
#include "chainlayer/model.hpp"
#include "chainlayer/scenario.hpp"

namespace chainlayer {

// Three-tier population: one reactive agent per actor, one manager per
// occupied layer, one controller. The manufacturer's agent reports to the
// controller directly; it belongs to no layer.
enum class RoleKind { Controller, LayerManager, ActorAgent };

struct AgentRole {
    RoleKind kind = RoleKind::Controller;
    LayerCoord layer{};      // meaningful for LayerManager
    std::string actor_id{};  // meaningful for ActorAgent

    static AgentRole controller() { return {}; }
    static AgentRole manager(LayerCoord coord) { return {RoleKind::LayerManager, coord, {}}; }
    static AgentRole actor(std::string id) { return {RoleKind::ActorAgent, {}, std::move(id)}; }

    friend auto operator<=>(const AgentRole&, const AgentRole&) = default;
};

// "controller", "manager:S1", "actor:A"
std::string to_string(const AgentRole& role);

struct CostQuery {};

struct OutgoingInteraction {
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::OrderSupply;
    Money cost;

    friend bool operator==(const OutgoingInteraction&, const OutgoingInteraction&) = default;
};

// Truthful, capability-gated self-report: production/storage are 0.00
// unless the actor's q flag is set (the manufacturer's production always
// counts). Outgoing edges are reported by their source, so the population
// covers every edge exactly once.
struct CostReport {
    Money added;
    Money production;
    Money storage;
    std::vector<OutgoingInteraction> outgoing;

    friend bool operator==(const CostReport&, const CostReport&) = default;
};

struct LayerCostAggregate {
    LayerCoord layer{};
    CostBreakdown subtotal;

    friend bool operator==(const LayerCostAggregate&, const LayerCostAggregate&) = default;
};

struct ScenarioDirective {
    std::string scenario_name;
};

struct DecisionAnnouncement {
    Decision decision = Decision::KeepBaseline;
};

using MessagePayload =
    std::variant<CostQuery, CostReport, LayerCostAggregate, ScenarioDirective, DecisionAnnouncement>;

const char* payload_kind(const MessagePayload& payload);

struct Envelope {
    AgentRole from;
    AgentRole to;
    int round = 0;  // the round in which the sender acted; delivery is one step later
    MessagePayload payload;
};

// `round|from|to|payload_kind|payload_summary`, byte-stable across runs.
std::string trace_line(const Envelope& envelope);
std::string format_trace(const std::vector<Envelope>& trace);

// Legal routes: controller<->manager, controller<->manufacturer's actor
// agent, manager<->actor of its own layer, actor<->actor within the same
// or an adjacent layer (the manufacturer's agent borders both depth-1
// layers).
bool route_legal(const AgentRole& from, const AgentRole& to, const LayerAssignment& assignment,
                 const std::string& manufacturer_id);

class AgentSystem;

struct CollectionResult {
    CostBreakdown breakdown;
    std::vector<Envelope> trace;
};

// The five-round protocol: the controller queries managers and the
// manufacturer's agent (round 1), managers fan out (round 2), actor agents
// report (round 3), managers aggregate (round 4), the controller assembles
// the breakdown (round 5). The result equals the cost engine's objective
// exactly.
CollectionResult run_cost_collection(AgentSystem& system);

struct DimensioningResult {
    Decision decision = Decision::KeepBaseline;
    ComparisonReport report;
    std::vector<Envelope> trace;
};

// Collects the baseline cost (CSt1), broadcasts a scenario directive,
// evaluates the applied graph through a second agent system (CSt2), and
// has the controller announce the profitable state. Completes within 8
// rounds on the baseline system.
DimensioningResult run_dimensioning(AgentSystem& system, const Scenario& scenario,
                                    const std::string& baseline_name = "baseline");

// Deterministic round-based scheduler over the agent population. Messages
// enqueued in round r are delivered in round r+1, sorted by sender role,
// then receiver role, then enqueue order; every delivered envelope is
// appended to the trace exactly once.
class AgentSystem {
public:
    AgentSystem(SupplyChainGraph graph, LayerAssignment assignment);

    // Delivers the previous round's messages, lets every agent process its
    // inbox, and advances the round counter. Returns what was delivered.
    std::vector<Envelope> step();

    // Enqueues an externally built envelope for the next round. Throws
    // RoutingViolation for illegal routes.
    void post(Envelope envelope);

    int round() const noexcept { return round_; }
    bool quiescent() const noexcept { return pending_.empty(); }
    const std::vector<Envelope>& trace() const noexcept { return trace_; }
    const SupplyChainGraph& graph() const noexcept { return graph_; }
    const LayerAssignment& assignment() const noexcept { return assignment_; }

    std::vector<AgentRole> roles() const;

private:
    friend CollectionResult run_cost_collection(AgentSystem& system);
    friend DimensioningResult run_dimensioning(AgentSystem& system, const Scenario& scenario,
                                               const std::string& baseline_name);

    struct StartCollection {};
    struct EvaluateScenario {
        std::string scenario_name;
    };
    struct Decide {
        CostBreakdown cost_st2;
    };
    using Command = std::variant<StartCollection, EvaluateScenario, Decide>;

    struct ManagerState {
        std::vector<std::string> members;  // sorted actor ids
        std::map<std::string, CostReport> reports;
        bool aggregate_sent = false;
    };

    struct ControllerState {
        std::map<LayerCoord, CostBreakdown> aggregates;
        std::optional<CostReport> manufacturer_report;
        std::optional<CostBreakdown> assembled;
        std::optional<Decision> decision;
        std::deque<Command> commands;
    };

    void send(AgentRole from, AgentRole to, MessagePayload payload);
    CostReport report_for(const Actor& actor) const;

    void process_controller(const std::vector<Envelope>& inbox);
    void process_manager(LayerCoord coord, const std::vector<Envelope>& inbox);
    void process_actor(const std::string& actor_id, const std::vector<Envelope>& inbox);

    void begin_collection();
    void post_command(Command command);

    SupplyChainGraph graph_;
    LayerAssignment assignment_;
    std::map<LayerCoord, ManagerState> managers_;
    ControllerState controller_;
    std::vector<Envelope> pending_;
    std::vector<Envelope> trace_;
    int round_ = 0;
};

AgentSystem instantiate(const SupplyChainGraph& graph, const LayerAssignment& assignment);

}  // namespace chainlayer

#include "chainlayer/agents.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainlayer {

std::string to_string(const AgentRole& role) {
    switch (role.kind) {
        case RoleKind::Controller: return "controller";
        case RoleKind::LayerManager: return "manager:" + to_string(role.layer);
        case RoleKind::ActorAgent: return "actor:" + role.actor_id;
    }
    return "?";
}

const char* payload_kind(const MessagePayload& payload) {
    switch (payload.index()) {
        case 0: return "cost_query";
        case 1: return "cost_report";
        case 2: return "layer_cost_aggregate";
        case 3: return "scenario_directive";
        case 4: return "decision_announcement";
    }
    return "?";
}

namespace {

std::string payload_summary(const MessagePayload& payload) {
    struct Visitor {
        std::string operator()(const CostQuery&) const { return "-"; }
        std::string operator()(const CostReport& report) const {
            std::string out = "added=" + report.added.str() +
                              ";production=" + report.production.str() +
                              ";storage=" + report.storage.str() + ";outgoing=";
            if (report.outgoing.empty()) {
                out += "-";
            } else {
                for (std::size_t i = 0; i < report.outgoing.size(); ++i) {
                    const auto& e = report.outgoing[i];
                    if (i > 0) out += ',';
                    out += e.from + "->" + e.to + ":" + to_string(e.kind) + ":" + e.cost.str();
                }
            }
            return out;
        }
        std::string operator()(const LayerCostAggregate& aggregate) const {
            const CostBreakdown& s = aggregate.subtotal;
            return "layer=" + to_string(aggregate.layer) +
                   ";added_supplier=" + s.added_supplier.str() +
                   ";added_warehouse=" + s.added_warehouse.str() +
                   ";added_customer=" + s.added_customer.str() +
                   ";production=" + s.production.str() + ";storage=" + s.storage.str() +
                   ";order=" + s.order_interaction.str() +
                   ";transport=" + s.transport_interaction.str() +
                   ";distribution=" + s.distribution_interaction.str() + ";total=" + s.total.str();
        }
        std::string operator()(const ScenarioDirective& directive) const {
            return "scenario=" + directive.scenario_name;
        }
        std::string operator()(const DecisionAnnouncement& announcement) const {
            return std::string("decision=") + to_string(announcement.decision);
        }
    };
    return std::visit(Visitor{}, payload);
}

Money sum_components(const CostBreakdown& b) {
    return b.added_supplier + b.added_warehouse + b.added_customer + b.production + b.storage +
           b.order_interaction + b.transport_interaction + b.distribution_interaction;
}

}  // namespace

std::string trace_line(const Envelope& envelope) {
    return std::to_string(envelope.round) + "|" + to_string(envelope.from) + "|" +
           to_string(envelope.to) + "|" + payload_kind(envelope.payload) + "|" +
           payload_summary(envelope.payload);
}

std::string format_trace(const std::vector<Envelope>& trace) {
    std::string out;
    for (const auto& envelope : trace) {
        out += trace_line(envelope);
        out += '\n';
    }
    return out;
}

bool route_legal(const AgentRole& from, const AgentRole& to, const LayerAssignment& assignment,
                 const std::string& manufacturer_id) {
    if (from == to) return false;
    const AgentRole* a = &from;
    const AgentRole* b = &to;
    if (b->kind < a->kind) std::swap(a, b);  // order by role rank, the rules are symmetric

    if (a->kind == RoleKind::Controller) {
        if (b->kind == RoleKind::LayerManager) return true;
        if (b->kind == RoleKind::ActorAgent) return b->actor_id == manufacturer_id;
        return false;
    }
    if (a->kind == RoleKind::LayerManager) {
        if (b->kind != RoleKind::ActorAgent) return false;
        auto it = assignment.coords.find(b->actor_id);
        return it != assignment.coords.end() && it->second == a->layer;
    }
    // actor <-> actor: same or adjacent layer; the manufacturer's agent
    // borders the depth-1 layers of both sides.
    bool a_is_man = a->actor_id == manufacturer_id;
    bool b_is_man = b->actor_id == manufacturer_id;
    if (a_is_man || b_is_man) {
        const auto& other = a_is_man ? b->actor_id : a->actor_id;
        auto it = assignment.coords.find(other);
        return it != assignment.coords.end() && it->second.depth == 1;
    }
    auto ia = assignment.coords.find(a->actor_id);
    auto ib = assignment.coords.find(b->actor_id);
    if (ia == assignment.coords.end() || ib == assignment.coords.end()) return false;
    if (ia->second.side != ib->second.side) return false;
    int diff = ia->second.depth - ib->second.depth;
    return diff >= -1 && diff <= 1;
}

AgentSystem::AgentSystem(SupplyChainGraph graph, LayerAssignment assignment)
    : graph_(std::move(graph)), assignment_(std::move(assignment)) {
    auto violations = validate(graph_);
    if (has_error_violation(violations)) {
        throw ChainError(Errc::LayeringInconsistency, "graph fails validation");
    }
    for (const auto& [id, actor] : graph_.actors()) {
        if (id == graph_.manufacturer_id()) continue;
        auto it = assignment_.coords.find(id);
        if (it == assignment_.coords.end()) {
            throw ChainError(Errc::LayeringInconsistency,
                             "assignment does not cover actor '" + id + "'");
        }
        managers_[it->second].members.push_back(id);
    }
    for (const auto& [id, coord] : assignment_.coords) {
        if (!graph_.has_actor(id)) {
            throw ChainError(Errc::LayeringInconsistency,
                             "assignment names unknown actor '" + id + "'");
        }
    }
    for (auto& [coord, manager] : managers_) {
        std::sort(manager.members.begin(), manager.members.end());
    }
}

AgentSystem instantiate(const SupplyChainGraph& graph, const LayerAssignment& assignment) {
    return AgentSystem(graph, assignment);
}

std::vector<AgentRole> AgentSystem::roles() const {
    std::vector<AgentRole> out;
    out.push_back(AgentRole::controller());
    for (const auto& [coord, manager] : managers_) {
        out.push_back(AgentRole::manager(coord));
    }
    for (const auto& [id, actor] : graph_.actors()) {
        out.push_back(AgentRole::actor(id));
    }
    return out;
}

void AgentSystem::send(AgentRole from, AgentRole to, MessagePayload payload) {
    if (!route_legal(from, to, assignment_, graph_.manufacturer_id())) {
        throw ChainError(Errc::RoutingViolation,
                         to_string(from) + " -> " + to_string(to) + " is not a legal route");
    }
    pending_.push_back(Envelope{std::move(from), std::move(to), round_, std::move(payload)});
}

void AgentSystem::post(Envelope envelope) {
    // send() stamps the current round; the caller-provided stamp is ignored.
    send(std::move(envelope.from), std::move(envelope.to), std::move(envelope.payload));
}

void AgentSystem::post_command(Command command) {
    controller_.commands.push_back(std::move(command));
}

void AgentSystem::begin_collection() {
    controller_.aggregates.clear();
    controller_.manufacturer_report.reset();
    controller_.assembled.reset();
    for (auto& [coord, manager] : managers_) {
        manager.reports.clear();
        manager.aggregate_sent = false;
    }
    post_command(StartCollection{});
}

CostReport AgentSystem::report_for(const Actor& actor) const {
    CostReport report;
    report.added = actor.added_cost;
    if (actor.capabilities.is_producer || actor.kind == ActorKind::Manufacturer) {
        report.production = actor.production_cost;
    }
    if (actor.capabilities.is_storage) {
        report.storage = actor.storage_cost;
    }
    for (const auto& [key, edge] : graph_.edges()) {
        if (key.first == actor.id) {
            report.outgoing.push_back({edge.from, edge.to, edge.kind, edge.interaction_cost});
        }
    }
    return report;
}

std::vector<Envelope> AgentSystem::step() {
    round_ += 1;

    std::vector<Envelope> batch = std::move(pending_);
    pending_.clear();
    std::stable_sort(batch.begin(), batch.end(), [](const Envelope& a, const Envelope& b) {
        if (a.from != b.from) return a.from < b.from;
        return a.to < b.to;
    });

    std::map<AgentRole, std::vector<Envelope>> inboxes;
    for (const auto& envelope : batch) {
        trace_.push_back(envelope);
        inboxes[envelope.to].push_back(envelope);
    }

    // Process phase, canonical role order: controller, managers, actors.
    // The controller also runs with an empty inbox so that externally
    // posted commands take effect this round.
    process_controller(inboxes[AgentRole::controller()]);
    for (auto& [coord, manager] : managers_) {
        auto it = inboxes.find(AgentRole::manager(coord));
        if (it != inboxes.end()) {
            process_manager(coord, it->second);
        }
    }
    for (const auto& [id, actor] : graph_.actors()) {
        auto it = inboxes.find(AgentRole::actor(id));
        if (it != inboxes.end()) {
            process_actor(id, it->second);
        }
    }

    return batch;
}

void AgentSystem::process_controller(const std::vector<Envelope>& inbox) {
    const AgentRole self = AgentRole::controller();

    for (const auto& envelope : inbox) {
        if (const auto* aggregate = std::get_if<LayerCostAggregate>(&envelope.payload)) {
            controller_.aggregates[aggregate->layer] = aggregate->subtotal;
        } else if (const auto* report = std::get_if<CostReport>(&envelope.payload)) {
            controller_.manufacturer_report = *report;
        }
    }

    // Assemble once every layer aggregate and the manufacturer's own
    // report are in.
    if (!controller_.assembled && controller_.manufacturer_report &&
        controller_.aggregates.size() == managers_.size()) {
        CostBreakdown total{};
        for (const auto& [coord, subtotal] : controller_.aggregates) {
            total.added_supplier += subtotal.added_supplier;
            total.added_warehouse += subtotal.added_warehouse;
            total.added_customer += subtotal.added_customer;
            total.production += subtotal.production;
            total.storage += subtotal.storage;
            total.order_interaction += subtotal.order_interaction;
            total.transport_interaction += subtotal.transport_interaction;
            total.distribution_interaction += subtotal.distribution_interaction;
        }
        const CostReport& man = *controller_.manufacturer_report;
        // The manufacturer's added cost has no bucket: the reference mark
        // never contributes an added cost.
        total.production += man.production;
        total.storage += man.storage;
        for (const auto& interaction : man.outgoing) {
            switch (interaction.kind) {
                case EdgeKind::OrderSupply: total.order_interaction += interaction.cost; break;
                case EdgeKind::Transport: total.transport_interaction += interaction.cost; break;
                case EdgeKind::Distribution:
                    total.distribution_interaction += interaction.cost;
                    break;
            }
        }
        total.total = sum_components(total);
        controller_.assembled = total;
    }

    while (!controller_.commands.empty()) {
        Command command = std::move(controller_.commands.front());
        controller_.commands.pop_front();
        if (std::holds_alternative<StartCollection>(command)) {
            for (const auto& [coord, manager] : managers_) {
                send(self, AgentRole::manager(coord), CostQuery{});
            }
            send(self, AgentRole::actor(graph_.manufacturer_id()), CostQuery{});
        } else if (const auto* evaluate = std::get_if<EvaluateScenario>(&command)) {
            for (const auto& [coord, manager] : managers_) {
                send(self, AgentRole::manager(coord), ScenarioDirective{evaluate->scenario_name});
            }
        } else if (const auto* decideCmd = std::get_if<Decide>(&command)) {
            if (!controller_.assembled) {
                throw ChainError(Errc::ProtocolTimeout,
                                 "decision requested before the baseline cost was assembled");
            }
            controller_.decision = decide(*controller_.assembled, decideCmd->cost_st2);
            for (const auto& [coord, manager] : managers_) {
                send(self, AgentRole::manager(coord), DecisionAnnouncement{*controller_.decision});
            }
        }
    }
}

void AgentSystem::process_manager(LayerCoord coord, const std::vector<Envelope>& inbox) {
    const AgentRole self = AgentRole::manager(coord);
    ManagerState& state = managers_.at(coord);

    for (const auto& envelope : inbox) {
        if (std::holds_alternative<CostQuery>(envelope.payload)) {
            for (const auto& member : state.members) {
                send(self, AgentRole::actor(member), CostQuery{});
            }
        } else if (const auto* report = std::get_if<CostReport>(&envelope.payload)) {
            state.reports[envelope.from.actor_id] = *report;
        }
        // ScenarioDirective / DecisionAnnouncement carry no follow-up for a
        // manager in this protocol.
    }

    // Occupied layers always have members, so the aggregate goes out in the
    // round after the last member report arrived.
    if (!state.aggregate_sent && state.reports.size() == state.members.size()) {
        LayerCostAggregate aggregate{coord, CostBreakdown{}};
        CostBreakdown& s = aggregate.subtotal;
        for (const auto& member : state.members) {
            const CostReport& report = state.reports.at(member);
            switch (graph_.actor(member).kind) {
                case ActorKind::Supplier: s.added_supplier += report.added; break;
                case ActorKind::Warehouse: s.added_warehouse += report.added; break;
                case ActorKind::Customer: s.added_customer += report.added; break;
                case ActorKind::Manufacturer: break;  // never a layer member
            }
            s.production += report.production;
            s.storage += report.storage;
            for (const auto& interaction : report.outgoing) {
                switch (interaction.kind) {
                    case EdgeKind::OrderSupply: s.order_interaction += interaction.cost; break;
                    case EdgeKind::Transport: s.transport_interaction += interaction.cost; break;
                    case EdgeKind::Distribution:
                        s.distribution_interaction += interaction.cost;
                        break;
                }
            }
        }
        s.total = sum_components(s);
        state.aggregate_sent = true;
        send(self, AgentRole::controller(), std::move(aggregate));
    }
}

void AgentSystem::process_actor(const std::string& actor_id, const std::vector<Envelope>& inbox) {
    const AgentRole self = AgentRole::actor(actor_id);
    for (const auto& envelope : inbox) {
        if (std::holds_alternative<CostQuery>(envelope.payload)) {
            send(self, envelope.from, report_for(graph_.actor(actor_id)));
        }
    }
}

CollectionResult run_cost_collection(AgentSystem& system) {
    if (!system.quiescent()) {
        throw std::logic_error("run_cost_collection requires a quiescent system");
    }
    system.begin_collection();
    for (int i = 0; i < 5; ++i) {
        system.step();
    }
    if (!system.controller_.assembled) {
        throw ChainError(Errc::ProtocolTimeout, "cost collection did not complete in 5 rounds");
    }
    return CollectionResult{*system.controller_.assembled, system.trace()};
}

DimensioningResult run_dimensioning(AgentSystem& system, const Scenario& scenario,
                                    const std::string& baseline_name) {
    CostBreakdown cost_st1 = run_cost_collection(system).breakdown;

    // Round 6: the controller announces the what-if evaluation.
    system.post_command(AgentSystem::EvaluateScenario{scenario.name});
    system.step();

    // The alternative state St2 runs as its own agent system over the
    // applied graph; its five collection rounds are separate.
    SupplyChainGraph applied = apply(system.graph(), scenario);
    AgentSystem scenario_system(applied, assign_layers(applied));
    CostBreakdown cost_st2 = run_cost_collection(scenario_system).breakdown;

    // Round 7: directive reaches the managers; the controller compares
    // CSt1 with CSt2 and emits its decision. Round 8 delivers it.
    system.post_command(AgentSystem::Decide{cost_st2});
    system.step();
    system.step();

    Decision decision = *system.controller_.decision;
    ComparisonReport report{
        .baseline_name = baseline_name,
        .scenario_name = scenario.name,
        .cost_st1 = cost_st1,
        .cost_st2 = cost_st2,
        .decision = decision,
        .delta_total = cost_st2.total - cost_st1.total,
    };
    return DimensioningResult{decision, std::move(report), system.trace()};
}

}  // namespace chainlayer

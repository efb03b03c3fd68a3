#include "chainlayer/model.hpp"

#include <deque>

namespace chainlayer {

const char* to_string(ActorKind kind) {
    switch (kind) {
        case ActorKind::Supplier: return "supplier";
        case ActorKind::Manufacturer: return "manufacturer";
        case ActorKind::Warehouse: return "warehouse";
        case ActorKind::Customer: return "customer";
    }
    return "?";
}

const char* to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::OrderSupply: return "order_supply";
        case EdgeKind::Transport: return "transport";
        case EdgeKind::Distribution: return "distribution";
    }
    return "?";
}

const char* to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::UnknownActor: return "UnknownActor";
        case ViolationCode::SelfLoop: return "SelfLoop";
        case ViolationCode::KindMismatch: return "KindMismatch";
        case ViolationCode::Disconnected: return "Disconnected";
        case ViolationCode::NoCustomers: return "NoCustomers";
        case ViolationCode::ZeroCostProducer: return "ZeroCostProducer";
    }
    return "?";
}

SupplyChainGraph::SupplyChainGraph(Actor manufacturer) {
    if (manufacturer.kind != ActorKind::Manufacturer) {
        throw ChainError(Errc::KindMismatch,
                         "graph root '" + manufacturer.id + "' must be a manufacturer");
    }
    // The manufacturer's production gate is always on: its production cost
    // enters the action sum unconditionally.
    manufacturer.capabilities.is_producer = true;
    manufacturer_id_ = manufacturer.id;
    actors_.emplace(manufacturer.id, std::move(manufacturer));
}

void SupplyChainGraph::add_actor(Actor actor) {
    if (actor.kind == ActorKind::Manufacturer) {
        throw ChainError(Errc::KindMismatch,
                         "'" + actor.id + "' would be a second manufacturer");
    }
    if (actors_.contains(actor.id)) {
        throw ChainError(Errc::DuplicateActor, "actor '" + actor.id + "' already present");
    }
    actors_.emplace(actor.id, std::move(actor));
}

void SupplyChainGraph::add_edge(Edge edge) {
    if (edge.from == edge.to) {
        throw ChainError(Errc::SelfLoop, "edge '" + edge.from + "->" + edge.to + "'");
    }
    if (!actors_.contains(edge.from)) {
        throw ChainError(Errc::UnknownActor, "edge endpoint '" + edge.from + "'");
    }
    if (!actors_.contains(edge.to)) {
        throw ChainError(Errc::UnknownActor, "edge endpoint '" + edge.to + "'");
    }
    EdgeKey key{edge.from, edge.to};
    if (edges_.contains(key)) {
        throw ChainError(Errc::DuplicateEdge, "edge '" + edge.from + "->" + edge.to + "' already present");
    }
    edges_.emplace(std::move(key), std::move(edge));
}

void SupplyChainGraph::remove_actor(const std::string& id) {
    if (id == manufacturer_id_) {
        throw ChainError(Errc::KindMismatch, "the manufacturer '" + id + "' cannot be removed");
    }
    if (actors_.erase(id) == 0) {
        throw ChainError(Errc::UnknownActor, "no actor '" + id + "'");
    }
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first.first == id || it->first.second == id) {
            it = edges_.erase(it);
        } else {
            ++it;
        }
    }
}

void SupplyChainGraph::remove_edge(const std::string& from, const std::string& to) {
    if (edges_.erase({from, to}) == 0) {
        throw ChainError(Errc::UnknownEdge, "no edge '" + from + "->" + to + "'");
    }
}

void SupplyChainGraph::set_actor_cost(const std::string& id, CostField field, Money value) {
    auto it = actors_.find(id);
    if (it == actors_.end()) {
        throw ChainError(Errc::UnknownActor, "no actor '" + id + "'");
    }
    switch (field) {
        case CostField::Added: it->second.added_cost = value; break;
        case CostField::Production: it->second.production_cost = value; break;
        case CostField::Storage: it->second.storage_cost = value; break;
    }
}

void SupplyChainGraph::set_edge_cost(const std::string& from, const std::string& to, Money value) {
    auto it = edges_.find({from, to});
    if (it == edges_.end()) {
        throw ChainError(Errc::UnknownEdge, "no edge '" + from + "->" + to + "'");
    }
    it->second.interaction_cost = value;
}

void SupplyChainGraph::set_capability(const std::string& id, Capability flag, bool value) {
    auto it = actors_.find(id);
    if (it == actors_.end()) {
        throw ChainError(Errc::UnknownActor, "no actor '" + id + "'");
    }
    if (id == manufacturer_id_ && flag == Capability::Producer && !value) {
        throw ChainError(Errc::KindMismatch, "the manufacturer must remain a producer");
    }
    if (flag == Capability::Producer) {
        it->second.capabilities.is_producer = value;
    } else {
        it->second.capabilities.is_storage = value;
    }
}

const Actor& SupplyChainGraph::actor(const std::string& id) const {
    auto it = actors_.find(id);
    if (it == actors_.end()) {
        throw ChainError(Errc::UnknownActor, "no actor '" + id + "'");
    }
    return it->second;
}

const Edge& SupplyChainGraph::edge(const std::string& from, const std::string& to) const {
    auto it = edges_.find({from, to});
    if (it == edges_.end()) {
        throw ChainError(Errc::UnknownEdge, "no edge '" + from + "->" + to + "'");
    }
    return it->second;
}

std::vector<Violation> validate(const SupplyChainGraph& graph) {
    std::vector<Violation> out;
    const auto& actors = graph.actors();

    // Structural checks. Construction already rejects these; they are
    // repeated here so that validate() stands on its own as the invariant
    // oracle.
    auto man_it = actors.find(graph.manufacturer_id());
    if (man_it == actors.end()) {
        out.push_back({ViolationSeverity::Error, ViolationCode::UnknownActor,
                       graph.manufacturer_id(), "manufacturer_id does not resolve"});
    } else {
        if (man_it->second.kind != ActorKind::Manufacturer) {
            out.push_back({ViolationSeverity::Error, ViolationCode::KindMismatch,
                           man_it->first, "manufacturer_id resolves to a non-manufacturer"});
        }
        if (!man_it->second.capabilities.is_producer) {
            out.push_back({ViolationSeverity::Error, ViolationCode::KindMismatch,
                           man_it->first, "manufacturer must be a producer"});
        }
    }
    for (const auto& [id, actor] : actors) {
        if (actor.kind == ActorKind::Manufacturer && id != graph.manufacturer_id()) {
            out.push_back({ViolationSeverity::Error, ViolationCode::KindMismatch, id,
                           "second manufacturer '" + id + "'"});
        }
    }
    for (const auto& [key, edge] : graph.edges()) {
        const std::string subject = key.first + "->" + key.second;
        if (key.first == key.second) {
            out.push_back({ViolationSeverity::Error, ViolationCode::SelfLoop, subject, "self loop"});
        }
        if (!actors.contains(key.first) || !actors.contains(key.second)) {
            out.push_back({ViolationSeverity::Error, ViolationCode::UnknownActor, subject,
                           "dangling edge endpoint"});
        }
    }

    // Connectivity, ignoring direction, from the manufacturer.
    std::set<std::string> seen;
    std::deque<std::string> queue;
    if (actors.contains(graph.manufacturer_id())) {
        seen.insert(graph.manufacturer_id());
        queue.push_back(graph.manufacturer_id());
    }
    std::multimap<std::string, std::string> undirected;
    for (const auto& [key, edge] : graph.edges()) {
        undirected.emplace(key.first, key.second);
        undirected.emplace(key.second, key.first);
    }
    while (!queue.empty()) {
        std::string current = queue.front();
        queue.pop_front();
        auto [lo, hi] = undirected.equal_range(current);
        for (auto it = lo; it != hi; ++it) {
            if (seen.insert(it->second).second) {
                queue.push_back(it->second);
            }
        }
    }
    for (const auto& [id, actor] : actors) {
        if (!seen.contains(id)) {
            out.push_back({ViolationSeverity::Error, ViolationCode::Disconnected, id,
                           "actor '" + id + "' is not connected to the manufacturer"});
        }
    }

    // Warning-class checks: semantically odd but workable states.
    bool any_customer = false;
    for (const auto& [id, actor] : actors) {
        if (actor.kind == ActorKind::Customer) any_customer = true;
        if (actor.capabilities.is_producer && actor.production_cost.is_zero()) {
            out.push_back({ViolationSeverity::Warning, ViolationCode::ZeroCostProducer, id,
                           "producer '" + id + "' has zero production cost"});
        }
    }
    if (!any_customer) {
        out.push_back({ViolationSeverity::Warning, ViolationCode::NoCustomers, "",
                       "chain has no customers"});
    }
    return out;
}

}  // namespace chainlayer

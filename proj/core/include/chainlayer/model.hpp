#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chainlayer/errors.hpp"
#include "chainlayer/money.hpp"

namespace chainlayer {

enum class ActorKind { Supplier, Manufacturer, Warehouse, Customer };
enum class EdgeKind { OrderSupply, Transport, Distribution };

const char* to_string(ActorKind kind);
const char* to_string(EdgeKind kind);

// The q coefficients: whether an actor's production / storage costs count.
struct CapabilityFlags {
    bool is_producer = false;
    bool is_storage = false;

    friend bool operator==(const CapabilityFlags&, const CapabilityFlags&) = default;
};

struct Actor {
    std::string id;
    std::string name;
    ActorKind kind = ActorKind::Supplier;
    CapabilityFlags capabilities;
    Money added_cost;
    Money production_cost;   // counted only while is_producer (manufacturer always)
    Money storage_cost;      // counted only while is_storage
    std::set<std::string> commodities;

    friend bool operator==(const Actor&, const Actor&) = default;
};

struct Edge {
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::OrderSupply;
    Money interaction_cost;

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class ViolationSeverity { Error, Warning };

enum class ViolationCode {
    UnknownActor,            // edge endpoint does not resolve
    SelfLoop,
    KindMismatch,            // manufacturer_id wrong kind / duplicate manufacturer / non-producer manufacturer
    Disconnected,            // actor unreachable from the manufacturer (ignoring direction)
    NoCustomers,             // warning: chain has nobody to deliver to
    ZeroCostProducer,        // warning: is_producer with production_cost 0.00
};

const char* to_string(ViolationCode code);

struct Violation {
    ViolationSeverity severity = ViolationSeverity::Error;
    ViolationCode code = ViolationCode::UnknownActor;
    std::string subject;   // actor id or "from->to"
    std::string message;
};

// Directed supply-chain graph around a single manufacturer. Construction
// and mutation reject anything validate() would flag structurally, so a
// graph object is structurally sound by construction; connectivity and the
// warning-class checks live in validate().
class SupplyChainGraph {
public:
    using EdgeKey = std::pair<std::string, std::string>;

    explicit SupplyChainGraph(Actor manufacturer);

    void add_actor(Actor actor);
    void add_edge(Edge edge);

    // Scenario support. remove_actor drops all incident edges; the
    // manufacturer itself can never be removed or stripped of production
    // capability.
    void remove_actor(const std::string& id);
    void remove_edge(const std::string& from, const std::string& to);
    enum class CostField { Added, Production, Storage };
    void set_actor_cost(const std::string& id, CostField field, Money value);
    void set_edge_cost(const std::string& from, const std::string& to, Money value);
    enum class Capability { Producer, Storage };
    void set_capability(const std::string& id, Capability flag, bool value);

    const std::map<std::string, Actor>& actors() const noexcept { return actors_; }
    const std::map<EdgeKey, Edge>& edges() const noexcept { return edges_; }
    const std::string& manufacturer_id() const noexcept { return manufacturer_id_; }
    const Actor& manufacturer() const { return actors_.at(manufacturer_id_); }

    bool has_actor(const std::string& id) const { return actors_.contains(id); }
    bool has_edge(const std::string& from, const std::string& to) const {
        return edges_.contains({from, to});
    }
    const Actor& actor(const std::string& id) const;
    const Edge& edge(const std::string& from, const std::string& to) const;

private:
    std::map<std::string, Actor> actors_;
    std::map<EdgeKey, Edge> edges_;
    std::string manufacturer_id_;
};

// Empty result iff every structural invariant holds and every actor is
// connected (ignoring direction) to the manufacturer. Warnings never block
// downstream operations.
std::vector<Violation> validate(const SupplyChainGraph& graph);

inline bool has_error_violation(const std::vector<Violation>& violations) {
    for (const auto& v : violations) {
        if (v.severity == ViolationSeverity::Error) return true;
    }
    return false;
}

}  // namespace chainlayer

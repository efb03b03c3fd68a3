#include "chainlayer/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace chainlayer {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view origin, const std::string& path, const std::string& what) {
    throw ChainError(Errc::ParseError, std::string(origin) + ": " + path + ": " + what);
}

const json& member(std::string_view origin, const json& object, const std::string& path,
                   const char* key) {
    auto it = object.find(key);
    if (it == object.end()) {
        fail(origin, path, std::string("missing field '") + key + "'");
    }
    return *it;
}

void reject_unknown_keys(std::string_view origin, const json& object, const std::string& path,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : object.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            fail(origin, path, "unknown field '" + key + "'");
        }
    }
}

std::string get_string(std::string_view origin, const json& value, const std::string& path) {
    if (!value.is_string()) {
        fail(origin, path, "expected a string");
    }
    return value.get<std::string>();
}

bool get_bool(std::string_view origin, const json& value, const std::string& path) {
    if (!value.is_boolean()) {
        fail(origin, path, "expected a boolean");
    }
    return value.get<bool>();
}

Money get_money(std::string_view origin, const json& value, const std::string& path) {
    try {
        if (value.is_string()) {
            return Money::parse(value.get<std::string>());
        }
        if (value.is_number_unsigned()) {
            std::int64_t units = value.get<std::int64_t>();
            if (units > INT64_MAX / 100) {
                fail(origin, path, "amount out of range");
            }
            return Money::from_cents(units * 100);
        }
    } catch (const ChainError&) {
        throw;
    } catch (const std::exception& e) {
        fail(origin, path, e.what());
    }
    fail(origin, path, "expected a decimal string like \"12.00\"");
}

ActorKind parse_actor_kind(std::string_view origin, const json& value, const std::string& path) {
    std::string text = get_string(origin, value, path);
    if (text == "supplier") return ActorKind::Supplier;
    if (text == "manufacturer") return ActorKind::Manufacturer;
    if (text == "warehouse") return ActorKind::Warehouse;
    if (text == "customer") return ActorKind::Customer;
    fail(origin, path, "unknown actor kind '" + text + "'");
}

EdgeKind parse_edge_kind(std::string_view origin, const json& value, const std::string& path) {
    std::string text = get_string(origin, value, path);
    if (text == "order_supply") return EdgeKind::OrderSupply;
    if (text == "transport") return EdgeKind::Transport;
    if (text == "distribution") return EdgeKind::Distribution;
    fail(origin, path, "unknown edge kind '" + text + "'");
}

Actor parse_actor(std::string_view origin, const json& value, const std::string& path) {
    if (!value.is_object()) {
        fail(origin, path, "expected an actor object");
    }
    reject_unknown_keys(origin, value, path,
                        {"id", "name", "kind", "is_producer", "is_storage", "added_cost",
                         "production_cost", "storage_cost", "commodities"});
    Actor actor;
    actor.id = get_string(origin, member(origin, value, path, "id"), path + ".id");
    if (actor.id.empty()) {
        fail(origin, path + ".id", "actor id must not be empty");
    }
    actor.kind = parse_actor_kind(origin, member(origin, value, path, "kind"), path + ".kind");
    actor.name = value.contains("name")
                     ? get_string(origin, value.at("name"), path + ".name")
                     : actor.id;
    if (value.contains("is_producer")) {
        actor.capabilities.is_producer =
            get_bool(origin, value.at("is_producer"), path + ".is_producer");
    }
    if (value.contains("is_storage")) {
        actor.capabilities.is_storage =
            get_bool(origin, value.at("is_storage"), path + ".is_storage");
    }
    if (value.contains("added_cost")) {
        actor.added_cost = get_money(origin, value.at("added_cost"), path + ".added_cost");
    }
    if (value.contains("production_cost")) {
        actor.production_cost =
            get_money(origin, value.at("production_cost"), path + ".production_cost");
    }
    if (value.contains("storage_cost")) {
        actor.storage_cost = get_money(origin, value.at("storage_cost"), path + ".storage_cost");
    }
    if (value.contains("commodities")) {
        const json& tags = value.at("commodities");
        if (!tags.is_array()) {
            fail(origin, path + ".commodities", "expected an array of strings");
        }
        for (std::size_t i = 0; i < tags.size(); ++i) {
            actor.commodities.insert(get_string(origin, tags[i],
                                                path + ".commodities[" + std::to_string(i) + "]"));
        }
    }
    return actor;
}

Edge parse_edge(std::string_view origin, const json& value, const std::string& path) {
    if (!value.is_object()) {
        fail(origin, path, "expected an edge object");
    }
    reject_unknown_keys(origin, value, path, {"from", "to", "kind", "cost"});
    Edge edge;
    edge.from = get_string(origin, member(origin, value, path, "from"), path + ".from");
    edge.to = get_string(origin, member(origin, value, path, "to"), path + ".to");
    edge.kind = parse_edge_kind(origin, member(origin, value, path, "kind"), path + ".kind");
    if (value.contains("cost")) {
        edge.interaction_cost = get_money(origin, value.at("cost"), path + ".cost");
    }
    return edge;
}

json parse_document(const std::string& text, std::string_view origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports "parse error at line L, column C: ..."
        throw ChainError(Errc::ParseError, std::string(origin) + ": " + e.what());
    }
}

SupplyChainGraph::CostField parse_cost_field(std::string_view origin, const json& value,
                                             const std::string& path) {
    std::string text = get_string(origin, value, path);
    if (text == "added") return SupplyChainGraph::CostField::Added;
    if (text == "production") return SupplyChainGraph::CostField::Production;
    if (text == "storage") return SupplyChainGraph::CostField::Storage;
    fail(origin, path, "unknown cost field '" + text + "' (added/production/storage)");
}

SupplyChainGraph::Capability parse_capability(std::string_view origin, const json& value,
                                              const std::string& path) {
    std::string text = get_string(origin, value, path);
    if (text == "is_producer") return SupplyChainGraph::Capability::Producer;
    if (text == "is_storage") return SupplyChainGraph::Capability::Storage;
    fail(origin, path, "unknown capability flag '" + text + "' (is_producer/is_storage)");
}

Delta parse_delta(std::string_view origin, const json& value, const std::string& path) {
    if (!value.is_object()) {
        fail(origin, path, "expected a delta object");
    }
    std::string op = get_string(origin, member(origin, value, path, "op"), path + ".op");
    if (op == "add_actor") {
        reject_unknown_keys(origin, value, path, {"op", "actor"});
        return delta::AddActor{
            parse_actor(origin, member(origin, value, path, "actor"), path + ".actor")};
    }
    if (op == "remove_actor") {
        reject_unknown_keys(origin, value, path, {"op", "id"});
        return delta::RemoveActor{get_string(origin, member(origin, value, path, "id"), path + ".id")};
    }
    if (op == "add_edge") {
        reject_unknown_keys(origin, value, path, {"op", "edge"});
        return delta::AddEdge{parse_edge(origin, member(origin, value, path, "edge"), path + ".edge")};
    }
    if (op == "remove_edge") {
        reject_unknown_keys(origin, value, path, {"op", "from", "to"});
        return delta::RemoveEdge{
            get_string(origin, member(origin, value, path, "from"), path + ".from"),
            get_string(origin, member(origin, value, path, "to"), path + ".to")};
    }
    if (op == "set_actor_cost") {
        reject_unknown_keys(origin, value, path, {"op", "id", "field", "value"});
        return delta::SetActorCost{
            get_string(origin, member(origin, value, path, "id"), path + ".id"),
            parse_cost_field(origin, member(origin, value, path, "field"), path + ".field"),
            get_money(origin, member(origin, value, path, "value"), path + ".value")};
    }
    if (op == "set_edge_cost") {
        reject_unknown_keys(origin, value, path, {"op", "from", "to", "value"});
        return delta::SetEdgeCost{
            get_string(origin, member(origin, value, path, "from"), path + ".from"),
            get_string(origin, member(origin, value, path, "to"), path + ".to"),
            get_money(origin, member(origin, value, path, "value"), path + ".value")};
    }
    if (op == "set_capability") {
        reject_unknown_keys(origin, value, path, {"op", "id", "flag", "value"});
        return delta::SetCapability{
            get_string(origin, member(origin, value, path, "id"), path + ".id"),
            parse_capability(origin, member(origin, value, path, "flag"), path + ".flag"),
            get_bool(origin, member(origin, value, path, "value"), path + ".value")};
    }
    fail(origin, path + ".op", "unknown delta op '" + op + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ChainError(Errc::ParseError, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

SupplyChainGraph parse_chain(const std::string& text, std::string_view origin) {
    json doc = parse_document(text, origin);
    if (!doc.is_object()) {
        fail(origin, "$", "chain document must be an object");
    }
    reject_unknown_keys(origin, doc, "$", {"manufacturer", "actors", "edges"});

    Actor manufacturer =
        parse_actor(origin, member(origin, doc, "$", "manufacturer"), "manufacturer");
    if (manufacturer.kind != ActorKind::Manufacturer) {
        fail(origin, "manufacturer.kind", "the manufacturer record must have kind \"manufacturer\"");
    }
    SupplyChainGraph graph{std::move(manufacturer)};

    if (doc.contains("actors")) {
        const json& actors = doc.at("actors");
        if (!actors.is_array()) {
            fail(origin, "actors", "expected an array");
        }
        for (std::size_t i = 0; i < actors.size(); ++i) {
            const std::string path = "actors[" + std::to_string(i) + "]";
            Actor actor = parse_actor(origin, actors[i], path);
            try {
                graph.add_actor(std::move(actor));
            } catch (const ChainError& e) {
                throw ChainError(e.code(), std::string(origin) + ": " + path + ": " + e.what());
            }
        }
    }
    if (doc.contains("edges")) {
        const json& edges = doc.at("edges");
        if (!edges.is_array()) {
            fail(origin, "edges", "expected an array");
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string path = "edges[" + std::to_string(i) + "]";
            Edge edge = parse_edge(origin, edges[i], path);
            try {
                graph.add_edge(std::move(edge));
            } catch (const ChainError& e) {
                throw ChainError(e.code(), std::string(origin) + ": " + path + ": " + e.what());
            }
        }
    }
    return graph;
}

SupplyChainGraph load_chain(const std::filesystem::path& path) {
    return parse_chain(read_file(path), path.string());
}

Scenario parse_scenario(const std::string& text, std::string_view origin) {
    json doc = parse_document(text, origin);
    if (!doc.is_object()) {
        fail(origin, "$", "scenario document must be an object");
    }
    reject_unknown_keys(origin, doc, "$", {"name", "deltas"});
    Scenario scenario;
    scenario.name = get_string(origin, member(origin, doc, "$", "name"), "name");
    if (doc.contains("deltas")) {
        const json& deltas = doc.at("deltas");
        if (!deltas.is_array()) {
            fail(origin, "deltas", "expected an array");
        }
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            scenario.deltas.push_back(
                parse_delta(origin, deltas[i], "deltas[" + std::to_string(i) + "]"));
        }
    }
    return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
    return parse_scenario(read_file(path), path.string());
}

}  // namespace chainlayer

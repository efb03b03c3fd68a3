#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace chainlayer {

enum class Errc {
    KindMismatch,
    DuplicateActor,
    DuplicateEdge,
    UnknownActor,
    UnknownEdge,
    SelfLoop,
    SideConflict,
    LayeringInconsistency,
    Disconnected,
    UnknownLayer,
    RoutingViolation,
    ProtocolTimeout,
    InvalidScenario,
    ParseError,
};

constexpr const char* to_string(Errc code) {
    switch (code) {
        case Errc::KindMismatch: return "KindMismatch";
        case Errc::DuplicateActor: return "DuplicateActor";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::UnknownActor: return "UnknownActor";
        case Errc::UnknownEdge: return "UnknownEdge";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::SideConflict: return "SideConflict";
        case Errc::LayeringInconsistency: return "LayeringInconsistency";
        case Errc::Disconnected: return "Disconnected";
        case Errc::UnknownLayer: return "UnknownLayer";
        case Errc::RoutingViolation: return "RoutingViolation";
        case Errc::ProtocolTimeout: return "ProtocolTimeout";
        case Errc::InvalidScenario: return "InvalidScenario";
        case Errc::ParseError: return "ParseError";
    }
    return "?";
}

// Base exception for every failure the library reports. The code is the
// machine-checkable part; the message carries the offending ids.
class ChainError : public std::runtime_error {
public:
    ChainError(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Scenario application failure. delta_index identifies the failing delta;
// it is empty when the scenario as a whole is invalid (final validation).
class ScenarioError : public ChainError {
public:
    ScenarioError(Errc code, const std::string& message, std::optional<std::size_t> delta_index)
        : ChainError(code, message), delta_index_(delta_index) {}

    std::optional<std::size_t> delta_index() const noexcept { return delta_index_; }

private:
    std::optional<std::size_t> delta_index_;
};

}  // namespace chainlayer

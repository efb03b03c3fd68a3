// chainlayer: validate, layer, price and simulate supply chains, and
// compare dimensioning scenarios.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chainlayer/agents.hpp"
#include "chainlayer/cost.hpp"
#include "chainlayer/io.hpp"
#include "chainlayer/layering.hpp"
#include "chainlayer/model.hpp"
#include "chainlayer/scenario.hpp"

namespace {

using namespace chainlayer;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSelfCheck = 3;
constexpr int kExitAdoptScenario = 10;

bool color_enabled() {
    if (const char* env = std::getenv("CHAINLAYER_COLOR")) {
        return std::string_view(env) == "1";
    }
    return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code) {
    if (!color_enabled()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

int exit_code_for(const ChainError& e) {
    return e.code() == Errc::ParseError ? kExitParse : kExitInvalid;
}

int report_error(const ChainError& e) {
    std::cerr << paint("error", "31") << ": " << e.what() << "\n";
    return exit_code_for(e);
}

void print_violation(const Violation& v) {
    if (v.severity == ViolationSeverity::Error) {
        std::cout << paint("error", "31") << ": " << to_string(v.code) << ": " << v.message << "\n";
    } else {
        std::cout << paint("warning", "33") << ": " << to_string(v.code) << ": " << v.message
                  << "\n";
    }
}

// Loads and structurally checks a chain; error-class violations are
// printed and the exit code is returned through `code` when the chain is
// unusable. Warnings stay quiet here to keep report output clean.
std::optional<SupplyChainGraph> load_checked(const std::string& path, int& code) {
    SupplyChainGraph graph = load_chain(path);  // ChainError propagates
    auto violations = validate(graph);
    bool bad = false;
    for (const auto& v : violations) {
        if (v.severity == ViolationSeverity::Error) {
            print_violation(v);
            bad = true;
        }
    }
    if (bad) {
        code = kExitInvalid;
        return std::nullopt;
    }
    return graph;
}

int cmd_validate(const std::string& path, bool verbose) {
    SupplyChainGraph graph = load_chain(path);
    auto violations = validate(graph);
    for (const auto& v : violations) {
        print_violation(v);
    }
    if (has_error_violation(violations)) {
        return kExitInvalid;
    }
    if (verbose) {
        std::cout << "ok: " << path << ": " << graph.actors().size() << " actors, "
                  << graph.edges().size() << " edges\n";
    }
    return kExitOk;
}

struct MatrixView {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> cells;
    std::size_t manufacturer_column = 0;
};

MatrixView matrix_view(const SupplyChainGraph& graph, const SupplyChainMatrix& matrix) {
    MatrixView view;
    for (const auto& column : matrix.columns) {
        if (column.coord.side == Side::Downstream) break;
        view.labels.push_back(to_string(column.coord));
        view.cells.push_back(column.actor_ids);
    }
    view.manufacturer_column = view.labels.size();
    view.labels.push_back("M");
    view.cells.push_back({graph.manufacturer_id()});
    for (const auto& column : matrix.columns) {
        if (column.coord.side == Side::Upstream) continue;
        view.labels.push_back(to_string(column.coord));
        view.cells.push_back(column.actor_ids);
    }
    return view;
}

void print_matrix(const MatrixView& view) {
    std::vector<std::size_t> widths(view.labels.size());
    std::size_t rows = 0;
    for (std::size_t i = 0; i < view.labels.size(); ++i) {
        widths[i] = view.labels[i].size();
        for (const auto& id : view.cells[i]) {
            widths[i] = std::max(widths[i], id.size());
        }
        rows = std::max(rows, view.cells[i].size());
    }
    bool only_origin = view.labels.size() == 1;
    auto emit_row = [&](auto text_of) {
        std::string line;
        for (std::size_t i = 0; i < view.labels.size(); ++i) {
            if (i > 0) {
                line += ' ';
            }
            if (!only_origin && i == view.manufacturer_column) {
                line += "| ";
            }
            std::string text = text_of(i);
            text.resize(widths[i], ' ');
            line += text;
            if (!only_origin && i == view.manufacturer_column) {
                line += " |";
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        std::cout << line << "\n";
    };
    emit_row([&](std::size_t i) { return view.labels[i]; });
    for (std::size_t r = 0; r < rows; ++r) {
        emit_row([&](std::size_t i) {
            return r < view.cells[i].size() ? view.cells[i][r] : std::string();
        });
    }
}

int cmd_layers(const std::string& path, bool as_json) {
    int code = kExitOk;
    auto graph = load_checked(path, code);
    if (!graph) return code;
    LayerAssignment assignment = assign_layers(*graph);
    SupplyChainMatrix matrix = build_matrix(assignment);
    if (as_json) {
        ordered_json doc;
        doc["manufacturer"] = graph->manufacturer_id();
        doc["columns"] = ordered_json::array();
        for (const auto& column : matrix.columns) {
            ordered_json col;
            col["label"] = to_string(column.coord);
            col["side"] = to_string(column.coord.side);
            col["depth"] = column.coord.depth;
            col["actors"] = column.actor_ids;
            doc["columns"].push_back(std::move(col));
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        print_matrix(matrix_view(*graph, matrix));
    }
    return kExitOk;
}

void print_cost_report(const CostBreakdown& breakdown, bool with_breakdown) {
    if (with_breakdown) {
        std::cout << "added_supplier: " << breakdown.added_supplier.str() << "\n"
                  << "added_warehouse: " << breakdown.added_warehouse.str() << "\n"
                  << "added_customer: " << breakdown.added_customer.str() << "\n"
                  << "production: " << breakdown.production.str() << "\n"
                  << "storage: " << breakdown.storage.str() << "\n"
                  << "order_interaction: " << breakdown.order_interaction.str() << "\n"
                  << "transport_interaction: " << breakdown.transport_interaction.str() << "\n"
                  << "distribution_interaction: " << breakdown.distribution_interaction.str()
                  << "\n";
    }
    std::cout << "total: " << paint(breakdown.total.str(), "1") << "\n";
}

ordered_json breakdown_json(const CostBreakdown& breakdown) {
    ordered_json doc;
    doc["added_supplier"] = breakdown.added_supplier.str();
    doc["added_warehouse"] = breakdown.added_warehouse.str();
    doc["added_customer"] = breakdown.added_customer.str();
    doc["production"] = breakdown.production.str();
    doc["storage"] = breakdown.storage.str();
    doc["order_interaction"] = breakdown.order_interaction.str();
    doc["transport_interaction"] = breakdown.transport_interaction.str();
    doc["distribution_interaction"] = breakdown.distribution_interaction.str();
    doc["total"] = breakdown.total.str();
    return doc;
}

int cmd_cost(const std::string& path, bool with_breakdown, bool as_json) {
    int code = kExitOk;
    auto graph = load_checked(path, code);
    if (!graph) return code;
    CostBreakdown breakdown = objective(*graph, assign_layers(*graph));
    if (as_json) {
        std::cout << breakdown_json(breakdown).dump(2) << "\n";
    } else {
        print_cost_report(breakdown, with_breakdown);
    }
    return kExitOk;
}

int cmd_simulate(const std::string& path, const std::string& trace_path) {
    int code = kExitOk;
    auto graph = load_checked(path, code);
    if (!graph) return code;
    LayerAssignment assignment = assign_layers(*graph);

    AgentSystem system = instantiate(*graph, assignment);
    CollectionResult result = run_cost_collection(system);

    // The distributed total must reproduce the centralized objective; a
    // mismatch is a bug in this binary, not in the input.
    CostBreakdown check = objective(*graph, assignment);
    if (result.breakdown != check) {
        std::cerr << paint("error", "31")
                  << ": agent aggregation diverged from the cost engine (" +
                         result.breakdown.total.str() + " vs " + check.total.str() + ")\n";
        return kExitSelfCheck;
    }

    if (!trace_path.empty()) {
        std::ofstream out(trace_path, std::ios::binary);
        if (!out) {
            std::cerr << paint("error", "31") << ": cannot write '" << trace_path << "'\n";
            return kExitParse;
        }
        out << format_trace(result.trace);
    }
    print_cost_report(result.breakdown, false);
    return kExitOk;
}

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

void print_comparison(const ComparisonReport& report) {
    std::cout << "CSt1 (" << report.baseline_name << "): " << report.cost_st1.total.str() << "\n"
              << "CSt2 (" << report.scenario_name << "): " << report.cost_st2.total.str() << "\n"
              << "delta: " << report.delta_total.str() << "\n"
              << "decision: "
              << paint(to_string(report.decision),
                       report.decision == Decision::AdoptScenario ? "32" : "36")
              << "\n";
}

int cmd_compare(const std::string& chain_path, const std::string& scenario_path, bool as_json,
                bool via_agents) {
    int code = kExitOk;
    auto graph = load_checked(chain_path, code);
    if (!graph) return code;
    Scenario scenario = load_scenario(scenario_path);

    ComparisonReport report = compare(*graph, scenario, file_stem(chain_path));
    if (via_agents) {
        AgentSystem system = instantiate(*graph, assign_layers(*graph));
        DimensioningResult agents = run_dimensioning(system, scenario, file_stem(chain_path));
        if (agents.decision != report.decision ||
            agents.report.cost_st1 != report.cost_st1 ||
            agents.report.cost_st2 != report.cost_st2) {
            std::cerr << paint("error", "31")
                      << ": agent dimensioning diverged from the centralized comparison\n";
            return kExitSelfCheck;
        }
        report = agents.report;
    }

    if (as_json) {
        ordered_json doc;
        doc["baseline_name"] = report.baseline_name;
        doc["scenario_name"] = report.scenario_name;
        doc["cost_st1"] = breakdown_json(report.cost_st1);
        doc["cost_st2"] = breakdown_json(report.cost_st2);
        doc["delta_total"] = report.delta_total.str();
        doc["decision"] = to_string(report.decision);
        std::cout << doc.dump(2) << "\n";
    } else {
        print_comparison(report);
    }
    return report.decision == Decision::AdoptScenario ? kExitAdoptScenario : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Layered supply-chain cost evaluation and dimensioning"};
    app.require_subcommand(1);

    std::string chain_path;
    std::string scenario_path;
    std::string trace_path;
    bool verbose = false;
    bool as_json = false;
    bool with_breakdown = false;
    bool via_agents = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check a chain file");
    validate_cmd->add_option("chain", chain_path, "chain file")->required();
    validate_cmd->add_flag("--verbose", verbose, "print a summary on success");

    auto* layers_cmd = app.add_subcommand("layers", "Print the supply chain matrix");
    layers_cmd->add_option("chain", chain_path, "chain file")->required();
    layers_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* cost_cmd = app.add_subcommand("cost", "Evaluate the total cost objective");
    cost_cmd->add_option("chain", chain_path, "chain file")->required();
    cost_cmd->add_flag("--breakdown", with_breakdown, "print all cost components");
    cost_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* simulate_cmd =
        app.add_subcommand("simulate", "Evaluate the cost through the agent protocol");
    simulate_cmd->add_option("chain", chain_path, "chain file")->required();
    simulate_cmd->add_option("--trace", trace_path, "write the envelope log to this file");

    auto* compare_cmd = app.add_subcommand("compare", "Compare a chain against a scenario");
    compare_cmd->add_option("chain", chain_path, "chain file")->required();
    compare_cmd->add_option("scenario", scenario_path, "scenario file")->required();
    compare_cmd->add_flag("--json", as_json, "machine-readable output");
    compare_cmd->add_flag("--via-agents", via_agents, "route through the agent protocol");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(chain_path, verbose);
        if (layers_cmd->parsed()) return cmd_layers(chain_path, as_json);
        if (cost_cmd->parsed()) return cmd_cost(chain_path, with_breakdown, as_json);
        if (simulate_cmd->parsed()) return cmd_simulate(chain_path, trace_path);
        if (compare_cmd->parsed())
            return cmd_compare(chain_path, scenario_path, as_json, via_agents);
    } catch (const ChainError& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << paint("error", "31") << ": " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

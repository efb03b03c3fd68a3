#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "chainlayer/io.hpp"
#include "chainlayer/model.hpp"

namespace chainlayer::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(CHAINLAYER_FIXTURE_DIR) / name;
}

inline std::filesystem::path golden_path(const std::string& name) {
    return std::filesystem::path(CHAINLAYER_GOLDEN_DIR) / name;
}

inline SupplyChainGraph example_fixture() {
    return load_chain(fixture_path("example_chain.json"));
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// Scratch file that cleans up after itself.
class TempFile {
public:
    explicit TempFile(const std::string& tag, const std::string& content = "") {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("chainlayer_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                 "_" + tag);
        if (!content.empty()) {
            write_file(path_, content);
        }
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

// Runs the built chainlayer binary. Color is pinned off unless the caller
// overrides CHAINLAYER_COLOR in env_prefix.
inline CliResult run_cli(const std::string& args, std::string env_prefix = "") {
    if (env_prefix.find("CHAINLAYER_COLOR") == std::string::npos) {
        env_prefix = "CHAINLAYER_COLOR=0 " + env_prefix;
    }
    std::string command = env_prefix + " " + std::string(CHAINLAYER_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = ::popen(command.c_str(), "r");
    CliResult result;
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> chunk{};
    std::size_t got = 0;
    while ((got = ::fread(chunk.data(), 1, chunk.size(), pipe)) > 0) {
        result.output.append(chunk.data(), got);
    }
    int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline Actor make_actor(std::string id, ActorKind kind) {
    Actor actor;
    actor.name = id;
    actor.id = std::move(id);
    actor.kind = kind;
    return actor;
}

inline Actor make_manufacturer(std::string id = "Man", const char* production = "0.00") {
    Actor actor = make_actor(std::move(id), ActorKind::Manufacturer);
    actor.capabilities.is_producer = true;
    actor.production_cost = Money::parse(production);
    return actor;
}

inline Money m(const char* literal) { return Money::parse(literal); }

}  // namespace chainlayer::testing

#pragma once

// Command dispatch shared by the bdalg tool and its tests. A request names a
// group and verb, carries its arguments as one JSON object, and yields a JSON
// document plus the process exit code (0 ok, 1 invalid input, 2 failed verification).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bdalg/json_io.hpp"
#include "bdalg/verify.hpp"

namespace bdalg {

struct CommandOptions {
    std::uint64_t seed = 1;
    int grid = 256;
    std::size_t depth = 8;
    Scale scale = Scale::full;
};

struct CommandRequest {
    std::string group;
    std::string verb;
    json args = json::object();
    CommandOptions options;
};

struct CommandResult {
    json document;
    int exit_code = 0;
};

struct FieldSpec {
    std::string name;
    bool required;
    std::string help;
};

struct VerbSpec {
    std::string group;
    std::string verb;
    std::string help;
    std::vector<FieldSpec> fields;
    std::function<CommandResult(const json& args, const CommandOptions& opt)> run;
};

const std::vector<VerbSpec>& verb_table();

/// Validates `args` against the verb's fields, then dispatches. Never throws.
CommandResult run_command(const CommandRequest& req);

std::string render(const json& doc, bool pretty);

} // namespace bdalg

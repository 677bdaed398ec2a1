// bdalg <group> <verb> [--field value …] [--json file|-] [--seed n] [--grid n] [--depth n] [--scale s] [--format f]

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "bdalg/cli.hpp"

using bdalg::json;

namespace {

// Inline values are JSON when they parse as JSON, plain strings otherwise.
json inline_value(const std::string& text)
{
    json v = json::parse(text, nullptr, false);
    return v.is_discarded() ? json(text) : v;
}

json read_document(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return json::parse(text);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact arithmetic for Bunce-Deddens algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    bdalg::CommandOptions opt;
    std::string scale = "full";
    std::string format = "pretty";
    app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
    app.add_option("--grid", opt.grid, "circle grid size for norms and spectra")->capture_default_str();
    app.add_option("--depth", opt.depth, "divisor chain depth")->capture_default_str();
    app.add_option("--scale", scale, "verification scale")->check(CLI::IsMember({"small", "full"}))->capture_default_str();
    app.add_option("--format", format, "output layout")->check(CLI::IsMember({"pretty", "compact"}))->capture_default_str();

    struct Slot {
        const bdalg::VerbSpec* spec;
        std::map<std::string, std::string> values;
        std::string json_path;
        CLI::App* cmd;
    };
    std::vector<std::unique_ptr<Slot>> slots;
    std::map<std::string, CLI::App*> groups;

    for (const auto& v : bdalg::verb_table()) {
        CLI::App*& g = groups[v.group];
        if (!g) {
            g = app.add_subcommand(v.group, v.group + " commands");
            g->require_subcommand(1);
            g->fallthrough();
        }
        auto slot = std::make_unique<Slot>();
        slot->spec = &v;
        slot->cmd = g->add_subcommand(v.verb, v.help);
        slot->cmd->fallthrough();
        for (const auto& f : v.fields)
            slot->cmd->add_option("--" + f.name, slot->values[f.name], f.help + (f.required ? "" : " (optional)"));
        slot->cmd->add_option("--json", slot->json_path, "read arguments from a JSON file, or - for stdin");
        slots.push_back(std::move(slot));
    }

    CLI11_PARSE(app, argc, argv);
    opt.scale = scale == "small" ? bdalg::Scale::small : bdalg::Scale::full;
    bool pretty = format == "pretty";

    for (const auto& slot : slots) {
        if (!slot->cmd->parsed())
            continue;
        bdalg::CommandRequest req{slot->spec->group, slot->spec->verb, json::object(), opt};
        try {
            if (!slot->json_path.empty())
                req.args = read_document(slot->json_path);
        } catch (const std::exception& e) {
            json err{{"error", {{"type", "invalid_argument"}, {"message", e.what()}}}};
            std::cout << bdalg::render(err, pretty) << '\n';
            return 1;
        }
        for (const auto& f : slot->spec->fields)
            if (slot->cmd->count("--" + f.name) > 0 && req.args.is_object())
                req.args[f.name] = inline_value(slot->values[f.name]);
        bdalg::CommandResult r = bdalg::run_command(req);
        std::cout << bdalg::render(r.document, pretty) << '\n';
        return r.exit_code;
    }
    return 1;
}

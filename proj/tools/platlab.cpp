#include "platlab/config.hpp"
#include "platlab/errors.hpp"
#include "platlab/report.hpp"
#include "platlab/svg.hpp"
#include "platlab/sweep.hpp"
#include "platlab/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace platlab;
using nlohmann::json;

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + p.string());
    out << text;
}

std::filesystem::path prepare_out(const RunConfig& cfg, const std::optional<std::string>& cli_out) {
    std::filesystem::path dir = resolve_out_dir(cfg, cli_out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create " + dir.string() + ": " + ec.message());
    return dir;
}

const TwistSpec& need_spec(const RunConfig& cfg) {
    if (!cfg.spec) throw ConfigError("config has no spec");
    return *cfg.spec;
}

int emit(const std::filesystem::path& dir, const std::string& name, const json& j, int code) {
    std::string text = j.dump(2) + "\n";
    write_file(dir / name, text);
    std::cout << text;
    return code;
}

int cmd_analyze(const RunConfig& cfg, const std::optional<std::string>& out) {
    const TwistSpec& spec = need_spec(cfg);
    auto dir = prepare_out(cfg, out);
    return emit(dir, "analyze.json", analyze_report(spec), kExitPass);
}

int cmd_verify(const RunConfig& cfg, const std::optional<std::string>& out) {
    auto dir = prepare_out(cfg, out);
    VerifyReport rep = run_verify(cfg);
    return emit(dir, "verify.json", rep.to_json(), rep.exit_code());
}

int cmd_render(const RunConfig& cfg, const std::optional<std::string>& out) {
    const TwistSpec& spec = need_spec(cfg);
    auto dir = prepare_out(cfg, out);
    json written = json::array();
    for (const auto& target : cfg.render) {
        if (target == "diagram") {
            auto d = resolve_crossings(transport(spec));
            write_file(dir / "diagram.svg", render_weighted_diagram(d));
            write_file(dir / "diagram.json", diagram_json(d).dump(2) + "\n");
            written.push_back("diagram.svg");
            written.push_back("diagram.json");
        } else if (target == "curve") {
            auto c = transport_explicit(spec, initial_boundary(spec.b), cfg.oracle);
            write_file(dir / "curve.svg", render_curve(c, spec.b));
            write_file(dir / "curve.json", curve_json(c).dump() + "\n");
            written.push_back("curve.svg");
            written.push_back("curve.json");
        } else if (target == "labyrinth") {
            auto lab = analyze_labyrinth(spec, cfg.oracle);
            write_file(dir / "labyrinth.svg", render_labyrinth(lab));
            write_file(dir / "labyrinth.json", labyrinth_json(lab).dump(2) + "\n");
            written.push_back("labyrinth.svg");
            written.push_back("labyrinth.json");
        }
    }
    json rep = {{"version", kReportVersion}, {"written", written}};
    std::cout << rep.dump(2) << "\n";
    return kExitPass;
}

int cmd_sweep(const RunConfig& cfg, const std::optional<std::string>& out) {
    auto dir = prepare_out(cfg, out);
    SweepReport rep = run_sweep(cfg);
    json j = rep.to_json();
    write_file(dir / "sweep.json", j.dump(2) + "\n");
    json brief = j;
    for (auto& s : brief["sections"]) s.erase("matrix");
    std::cout << brief.dump(2) << "\n";
    return rep.pass() ? kExitPass : kExitCheckFailure;
}

int exit_for(const Error& e) {
    if (dynamic_cast<const ShapeError*>(&e) || dynamic_cast<const TwistednessError*>(&e) ||
        dynamic_cast<const ConfigError*>(&e)) {
        return kExitInputError;
    }
    if (dynamic_cast<const BudgetExceeded*>(&e)) return kExitBudget;
    return kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"platlab: weighted-diagram calculus and labyrinth checks for 2-twisted (4,4)-plats"};
    app.require_subcommand(1);
    std::string config_path;
    std::optional<std::string> out;
    std::string command;
    const std::pair<const char*, const char*> commands[] = {
        {"analyze", "spec flags, components, weighted diagram and N summary"},
        {"verify", "run every per-spec check against the oracle"},
        {"render", "write SVG and JSON for the diagram, curve and labyrinth"},
        {"sweep", "inequality, oracle and labyrinth sweeps over magnitude bands"}};
    for (auto [name, about] : commands) {
        auto* sub = app.add_subcommand(name, about);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--out", out, "output directory");
        sub->callback([&command, name] { command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }
    try {
        RunConfig cfg = load_config(config_path);
        if (command == "analyze") return cmd_analyze(cfg, out);
        if (command == "verify") return cmd_verify(cfg, out);
        if (command == "render") return cmd_render(cfg, out);
        return cmd_sweep(cfg, out);
    } catch (const Error& e) {
        std::cout << error_json(e).dump(2) << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cout << json{{"error", "internal"}, {"message", e.what()}}.dump(2) << "\n";
        return kExitCheckFailure;
    }
}

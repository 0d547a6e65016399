#include "platlab/config.hpp"

#include "platlab/errors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace platlab {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) throw ConfigError(std::string(key) + " must be an integer");
    return j[key].get<int>();
}

MagnitudeBand band(const json& j, const char* key, MagnitudeBand fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j[key];
    if (!v.is_array()) throw ConfigError(std::string(key) + " must be [lo, hi] or []");
    if (v.empty()) return {0, -1, true};
    if (v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
        throw ConfigError(std::string(key) + " must be [lo, hi] or []");
    }
    MagnitudeBand b{v[0].get<int>(), v[1].get<int>(), false};
    if (b.lo < 1 || b.hi < b.lo) throw ConfigError(std::string(key) + " is not a valid range");
    return b;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

}  // namespace

TwistSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("spec must be an object");
    int n = get_int(j, "twistedness", 2);
    bool raw = j.value("raw", false);
    if (j.contains("uniform")) {
        int m = get_int(j, "uniform", 2);
        return validate_spec(4, 4, {{2, {m, m, m}}, {3, {-m, -m, -m, -m}}, {4, {m, m, m}}}, n, raw);
    }
    if (j.contains("magnitudes")) {
        auto mags = j["magnitudes"].get<std::vector<int>>();
        if (mags.size() != 10) throw ShapeError("magnitudes needs 10 entries, got " + std::to_string(mags.size()));
        return validate_spec(4, 4,
                             {{2, {mags[0], mags[1], mags[2]}},
                              {3, {-mags[3], -mags[4], -mags[5], -mags[6]}},
                              {4, {mags[7], mags[8], mags[9]}}},
                             n, raw);
    }
    if (!j.contains("rows") || !j["rows"].is_object()) throw ConfigError("spec needs rows, magnitudes or uniform");
    TwistRows rows;
    for (const auto& [key, row] : j["rows"].items()) {
        int level = 0;
        try {
            level = std::stoi(key);
        } catch (const std::exception&) {
            throw ShapeError("row key " + key + " is not a level number");
        }
        if (!row.is_array()) throw ShapeError("row " + key + " must be an array");
        rows[level] = row.get<std::vector<int>>();
    }
    return validate_spec(get_int(j, "h", 4), get_int(j, "b", 4), rows, n, raw);
}

json spec_to_json(const TwistSpec& s) {
    json rows = json::object();
    for (const auto& [i, row] : s.rows) rows[std::to_string(i)] = row;
    return {{"h", s.h}, {"b", s.b}, {"rows", rows}};
}

RunConfig parse_config(const json& j, const std::string& base_dir) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig cfg;
    if (j.contains("spec")) {
        json s = j["spec"];
        if (s.is_string()) {
            std::filesystem::path p = s.get<std::string>();
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            s = read_json(p.string());
        }
        try {
            cfg.spec = spec_from_json(s);
        } catch (const json::exception& e) {
            throw ConfigError(std::string("spec: ") + e.what());
        }
        cfg.spec_json = s;
    }
    if (j.contains("oracle")) {
        const json& o = j["oracle"];
        cfg.oracle.vertex_cap = o.value("vertex_cap", cfg.oracle.vertex_cap);
        cfg.oracle.epsilon = o.value("epsilon", cfg.oracle.epsilon);
        cfg.oracle.step = o.value("step", cfg.oracle.step);
        cfg.oracle.magnitude_budget = o.value("magnitude_budget", cfg.oracle.magnitude_budget);
        if (cfg.oracle.vertex_cap == 0 || cfg.oracle.epsilon <= 0 || cfg.oracle.step <= 0 ||
            cfg.oracle.magnitude_budget <= 0) {
            throw ConfigError("oracle budgets must be positive");
        }
    }
    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        cfg.sweep.exhaustive = band(s, "exhaustive", cfg.sweep.exhaustive);
        cfg.sweep.sampled = band(s, "sampled", cfg.sweep.sampled);
        cfg.sweep.oracle = band(s, "oracle", cfg.sweep.oracle);
        cfg.sweep.labyrinth = band(s, "labyrinth", cfg.sweep.labyrinth);
        cfg.sweep.samples = get_int(s, "samples", cfg.sweep.samples);
        cfg.sweep.seed = s.value("seed", cfg.sweep.seed);
        cfg.sweep.threads = get_int(s, "threads", cfg.sweep.threads);
        if (cfg.sweep.samples < 0 || cfg.sweep.threads < 0) throw ConfigError("sweep counts must be non-negative");
    }
    if (j.contains("cases")) {
        cfg.cases.max_gap = get_int(j["cases"], "max_gap", cfg.cases.max_gap);
        cfg.cases.max_brown = get_int(j["cases"], "max_brown", cfg.cases.max_brown);
        if (cfg.cases.max_gap < 0 || cfg.cases.max_brown < 0) throw ConfigError("case bounds must be non-negative");
    }
    if (j.contains("render")) {
        cfg.render = j["render"].get<std::vector<std::string>>();
        for (const auto& r : cfg.render) {
            if (r != "diagram" && r != "curve" && r != "labyrinth") throw ConfigError("unknown render target " + r);
        }
    }
    cfg.fault = j.value("fault", std::string());
    if (!cfg.fault.empty() && cfg.fault != "corrupt_n2") throw ConfigError("unknown fault " + cfg.fault);
    cfg.refinement = j.value("refinement", true);
    cfg.out_dir = j.value("out", cfg.out_dir);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    json j = read_json(path);
    std::string dir = std::filesystem::path(path).parent_path().string();
    RunConfig cfg;
    try {
        cfg = parse_config(j, dir.empty() ? "." : dir);
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    cfg.source = path;
    return cfg;
}

std::string resolve_out_dir(const RunConfig& cfg, const std::optional<std::string>& cli_out) {
    if (cli_out && !cli_out->empty()) return *cli_out;
    if (const char* env = std::getenv(kOutDirVariable); env && *env) return env;
    return cfg.out_dir;
}

}  // namespace platlab

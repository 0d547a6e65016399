#include "platlab/config.hpp"
#include "platlab/errors.hpp"
#include "platlab/report.hpp"
#include "platlab/svg.hpp"
#include "platlab/sweep.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>

using namespace platlab;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "platlab_unit";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

int count_matches(const std::string& text, const std::string& pattern) {
    std::regex re(pattern);
    return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(PLATLAB_SOURCE_DIR) + "/schemas/" + name + ".schema.json");
    return json::parse(in);
}

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

// Covers the keywords the report schemas use.
void conforms(const json& schema, const json& v, const json& root, const std::string& at, std::vector<std::string>& errs) {
    if (schema.contains("$ref")) {
        std::string name = schema["$ref"].get<std::string>().substr(std::string("#/$defs/").size());
        return conforms(root["$defs"][name], v, root, at, errs);
    }
    if (schema.contains("const") && schema["const"] != v) errs.push_back(at + ": const");
    if (schema.contains("enum") && std::find(schema["enum"].begin(), schema["enum"].end(), v) == schema["enum"].end())
        errs.push_back(at + ": enum");
    if (schema.contains("type")) {
        bool ok = false;
        if (schema["type"].is_array()) {
            for (const auto& t : schema["type"]) ok = ok || type_matches(t, v);
        } else {
            ok = type_matches(schema["type"], v);
        }
        if (!ok) return errs.push_back(at + ": type");
    }
    if (v.is_object()) {
        for (const auto& k : schema.value("required", json::array()))
            if (!v.contains(k)) errs.push_back(at + ": missing " + k.get<std::string>());
        for (const auto& [k, x] : v.items()) {
            if (schema.contains("properties") && schema["properties"].contains(k))
                conforms(schema["properties"][k], x, root, at + "." + k, errs);
            else if (schema.contains("additionalProperties"))
                conforms(schema["additionalProperties"], x, root, at + "." + k, errs);
        }
    }
    if (v.is_array()) {
        if (schema.contains("minItems") && v.size() < schema["minItems"]) errs.push_back(at + ": minItems");
        if (schema.contains("maxItems") && v.size() > schema["maxItems"]) errs.push_back(at + ": maxItems");
        if (schema.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i) conforms(schema["items"], v[i], root, at + "[" + std::to_string(i) + "]", errs);
    }
}

std::vector<std::string> violations(const std::string& name, const json& report) {
    json schema = load_schema(name);
    std::vector<std::string> errs;
    conforms(schema, report, schema, "$", errs);
    return errs;
}

const Labyrinth& lab_two() {
    static Labyrinth lab = analyze_labyrinth(uniform_spec(2));
    return lab;
}

}  // namespace

TEST(Config, SpecForms) {
    auto u = spec_from_json(json{{"uniform", 3}});
    EXPECT_EQ(u.rows, uniform_spec(3).rows);
    auto m = spec_from_json(json{{"magnitudes", {2, 2, 2, 2, 2, 2, 2, 2, 2, 2}}});
    EXPECT_EQ(m.rows, uniform_spec(2).rows);
    auto r = spec_from_json(json::parse(R"({"rows": {"2": [2,2,2], "3": [-2,-2,-2,-2], "4": [2,2,2]}})"));
    EXPECT_EQ(r.rows, uniform_spec(2).rows);
    EXPECT_EQ(spec_from_json(spec_to_json(r)).rows, r.rows);
}

TEST(Config, SpecErrors) {
    EXPECT_THROW(spec_from_json(json::parse(R"({"rows": {"2": [2,2,2,2], "3": [-2,-2,-2,-2], "4": [2,2,2]}})")),
                 ShapeError);
    EXPECT_THROW(spec_from_json(json{{"magnitudes", {2, 2}}}), ShapeError);
    EXPECT_THROW(spec_from_json(json{{"uniform", 1}}), TwistednessError);
    EXPECT_THROW(spec_from_json(json::array()), ConfigError);
}

TEST(Config, DefaultsAndBands) {
    auto cfg = parse_config(json::parse(R"({"sweep": {"exhaustive": [], "sampled": [3, 5]}})"));
    EXPECT_TRUE(cfg.sweep.exhaustive.empty);
    EXPECT_EQ(cfg.sweep.exhaustive.width(), 0);
    EXPECT_EQ(cfg.sweep.sampled.lo, 3);
    EXPECT_EQ(cfg.sweep.sampled.hi, 5);
    EXPECT_EQ(cfg.sweep.seed, 20240917u);
    EXPECT_EQ(cfg.sweep.samples, 10000);
    EXPECT_EQ(cfg.cases.max_gap, 3);
    EXPECT_FALSE(cfg.spec.has_value());
    EXPECT_THROW(parse_config(json::parse(R"({"sweep": {"oracle": [4, 2]}})")), ConfigError);
    EXPECT_THROW(parse_config(json::parse(R"({"oracle": {"step": 0}})")), ConfigError);
    EXPECT_THROW(parse_config(json::parse(R"({"fault": "other"})")), ConfigError);
    EXPECT_THROW(parse_config(json::parse(R"({"render": ["movie"]})")), ConfigError);
}

TEST(Config, SpecFileIsRelativeToConfig) {
    write(scratch("spec3.json"), R"({"uniform": 3})");
    write(scratch("run.json"), R"({"spec": "spec3.json", "out": "o"})");
    auto cfg = load_config(scratch("run.json").string());
    ASSERT_TRUE(cfg.spec.has_value());
    EXPECT_EQ(cfg.spec->rows, uniform_spec(3).rows);
}

TEST(Config, MalformedJsonIsConfigError) {
    write(scratch("broken.json"), "{\"spec\": ");
    EXPECT_THROW(load_config(scratch("broken.json").string()), ConfigError);
    EXPECT_THROW(load_config(scratch("missing.json").string()), ConfigError);
}

TEST(Config, OutputDirectoryPrecedence) {
    RunConfig cfg;
    cfg.out_dir = "from_config";
    ::unsetenv(kOutDirVariable);
    EXPECT_EQ(resolve_out_dir(cfg, std::nullopt), "from_config");
    ::setenv(kOutDirVariable, "from_env", 1);
    EXPECT_EQ(resolve_out_dir(cfg, std::nullopt), "from_env");
    EXPECT_EQ(resolve_out_dir(cfg, std::string("from_cli")), "from_cli");
    ::unsetenv(kOutDirVariable);
}

TEST(Render, WeightedDiagram) {
    auto svg = render_weighted_diagram(resolve_crossings(transport(uniform_spec(2))));
    EXPECT_EQ(count_matches(svg, "<g id=\"family-[0-9]+\">"), 4);
    for (const char* label : {">8</text>", ">4</text>", ">20</text>", ">5</text>"}) {
        EXPECT_NE(svg.find(label), std::string::npos) << label;
    }
    EXPECT_EQ(svg, render_weighted_diagram(resolve_crossings(transport(uniform_spec(2)))));
}

TEST(Render, Curve) {
    auto c = transport_explicit(uniform_spec(2), initial_boundary(4));
    auto svg = render_curve(c, 4);
    EXPECT_EQ(count_matches(svg, "id=\"curve\""), 1);
    EXPECT_EQ(count_matches(svg, "id=\"point-[1-8]\""), 8);
    std::smatch m;
    std::string rest = svg;
    std::set<std::string> ys;
    std::regex point("id=\"point-[1-8]\" cx=\"[0-9.]+\" cy=\"([0-9.]+)\"");
    while (std::regex_search(rest, m, point)) {
        ys.insert(m[1]);
        rest = m.suffix();
    }
    EXPECT_EQ(ys.size(), 1u);
    EXPECT_EQ(svg, render_curve(c, 4));
}

TEST(Render, Labyrinth) {
    auto svg = render_labyrinth(lab_two());
    EXPECT_EQ(count_matches(svg, "<g id=\"region-[0-9]+\""), 5);
    EXPECT_EQ(count_matches(svg, "id=\"gate-(orange|purple|brown)\"[^>]*stroke-dasharray"), 3);
    EXPECT_EQ(svg, render_labyrinth(analyze_labyrinth(uniform_spec(2))));
}

TEST(Report, GoldenDiagramDump) {
    std::ifstream in(std::string(PLATLAB_SOURCE_DIR) + "/tests/golden/diagram_t2.json");
    ASSERT_TRUE(in.good());
    json golden = json::parse(in);
    EXPECT_EQ(diagram_json(resolve_crossings(transport(uniform_spec(2)))), golden);
}

TEST(Report, AnalyzeFlags) {
    auto rep = analyze_report(uniform_spec(2));
    EXPECT_EQ(rep["version"], kReportVersion);
    EXPECT_EQ(rep["flags"]["family"], true);
    EXPECT_EQ(rep["summary"]["N"], json({8, 4, 20, 5}));
    EXPECT_EQ(rep["alternating"], true);
    EXPECT_EQ(rep["split"], false);
}

TEST(Sweep, MagnitudeGenerators) {
    auto ex = exhaustive_magnitudes({2, 3});
    EXPECT_EQ(ex.size(), 32u);
    EXPECT_TRUE(exhaustive_magnitudes({2, 4, true}).empty());
    auto a = sampled_magnitudes({2, 6}, 50, 5);
    auto b = sampled_magnitudes({2, 6}, 50, 5);
    EXPECT_EQ(a, b);
    for (const auto& v : a) {
        for (int x : v) {
            EXPECT_GE(x, 2);
            EXPECT_LE(x, 6);
        }
    }
}

TEST(Sweep, CorruptedCountIsCaught) {
    EXPECT_TRUE(compare_counts(uniform_spec(2), {}).pass);
    auto bad = compare_counts(uniform_spec(2), {}, true);
    EXPECT_FALSE(bad.pass);
    EXPECT_FALSE(bad.failure.empty());
}

TEST(Sweep, ParallelForVisitsEachSlotOnce) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST(Report, ReportsMatchSchemas) {
    EXPECT_EQ(violations("analyze", analyze_report(uniform_spec(2))), std::vector<std::string>{});
    EXPECT_EQ(violations("analyze", analyze_report(pattern_spec({2, 2, 3, 3, 3, 3, 3, 3, 2, 3}))),
              std::vector<std::string>{});
    EXPECT_FALSE(violations("analyze", json{{"version", 1}}).empty());
    EXPECT_FALSE(violations("sweep", json{{"version", 2}, {"pass", true}, {"seed", 1}, {"sections", json::array()}}).empty());
}

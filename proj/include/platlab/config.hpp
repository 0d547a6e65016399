#pragma once

#include "platlab/curve_oracle.hpp"
#include "platlab/matching.hpp"
#include "platlab/plat_model.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace platlab {

// Closed magnitude range; an explicit empty list in the config gives an
// empty range.
struct MagnitudeBand {
    int lo = 2;
    int hi = 4;
    bool empty = false;
    int width() const { return empty ? 0 : hi - lo + 1; }
};

struct SweepConfig {
    MagnitudeBand exhaustive{2, 4};
    MagnitudeBand sampled{2, 6};
    int samples = 10000;
    std::uint64_t seed = 20240917;
    MagnitudeBand oracle{2, 4};
    MagnitudeBand labyrinth{2, 4};
    int threads = 0;  // 0: hardware concurrency
};

struct RunConfig {
    std::string source;  // config path
    std::optional<TwistSpec> spec;
    nlohmann::json spec_json;
    OracleConfig oracle;
    SweepConfig sweep;
    CaseOptions cases;
    std::vector<std::string> render{"diagram", "curve", "labyrinth"};
    std::string fault;  // verify fault injection: "", "corrupt_n2"
    bool refinement = true;
    std::string out_dir = "out";
};

constexpr const char* kOutDirVariable = "PLATLAB_OUT_DIR";

TwistSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const TwistSpec& s);

// Throws ConfigError (or the spec's ShapeError / TwistednessError).
RunConfig parse_config(const nlohmann::json& j, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

// Command-line value beats the environment, which beats the config file.
std::string resolve_out_dir(const RunConfig& cfg, const std::optional<std::string>& cli_out);

}  // namespace platlab

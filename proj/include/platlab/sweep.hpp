#pragma once

#include "platlab/config.hpp"
#include "platlab/labyrinth.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace platlab {

// Positions of t_2^3, t_3^3, t_3^4, t_4^2, t_4^3 among the ten sign-pattern
// magnitudes; the only entries the transported curve depends on.
constexpr int kRelevant[5] = {2, 5, 6, 8, 9};

// All magnitude vectors with the relevant entries ranging over the band and
// the rest fixed at the band's low end.
std::vector<std::vector<int>> exhaustive_magnitudes(const MagnitudeBand& band);
std::vector<std::vector<int>> sampled_magnitudes(const MagnitudeBand& band, int count, std::uint64_t seed);

// Runs fn(i) for i in [0, n) on a worker pool; each call writes only its own slot.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

struct SpecResult {
    std::vector<int> magnitudes;
    bool pass = true;
    std::string failure;
    nlohmann::json detail;
};

struct SweepSection {
    std::string name;
    std::vector<SpecResult> results;
    int failures() const;
    nlohmann::json to_json(bool full) const;
};

SweepSection inequality_sweep(const std::vector<std::vector<int>>& specs, int threads);
SweepSection oracle_sweep(const std::vector<std::vector<int>>& specs, const OracleConfig& cfg, int threads);
SweepSection labyrinth_sweep(const std::vector<std::vector<int>>& specs, const OracleConfig& cfg,
                             const CaseOptions& cases, int threads);

// Oracle and calculus agree on the beta-arc counts and lane counts.
SpecResult compare_counts(const TwistSpec& spec, const OracleConfig& cfg, bool corrupt_n2 = false);

struct SweepReport {
    std::uint64_t seed = 0;
    std::vector<SweepSection> sections;
    bool pass() const;
    nlohmann::json to_json() const;
};

SweepReport run_sweep(const RunConfig& cfg);

}  // namespace platlab

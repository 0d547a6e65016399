#pragma once

#include "platlab/plat_model.hpp"
#include "platlab/weight.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace platlab {

struct LoopId {
    int level = 0;
    int index = 0;
    bool operator==(const LoopId&) const = default;
    auto operator<=>(const LoopId&) const = default;
};

std::string loop_name(LoopId l);

// Marked sphere of a b-bridge frame: points (k,0) for k = 1..2b.
// Axis segments s = 1..2b: s joins (s,0)-(s+1,0) for s < 2b; s = 2b is the
// arc from 2b through infinity back to 1.
struct MarkedSphere {
    int b = 4;

    static constexpr double loop_radius = 0.75;

    int point_count() const { return 2 * b; }
    int omega() const { return 2 * b; }
    double center(LoopId l) const;
    std::pair<int, int> punctures(LoopId l) const;
    // axis segment of beta^j / gamma^j
    int beta_segment(int j) const { return 2 * j - 1; }
    int gamma_segment(int j) const { return 2 * j; }
    // 0 if the segment is not a beta arc
    int beta_index(int segment) const { return segment % 2 == 1 && segment < 2 * b ? (segment + 1) / 2 : 0; }
    std::vector<LoopId> loops(int level) const;
    // segments incident to marked point p
    std::pair<int, int> incident_segments(int p) const;
};

enum class Flag { base, under, over };
std::string flag_name(Flag f);

// A base curve or a bundle of parallel copies of one l-loop, drawn as a
// circle about a point of the axis.
struct Bundle {
    std::string name;
    std::optional<LoopId> loop;
    double center = 0;
    double radius = MarkedSphere::loop_radius;
    Weight weight;
    Flag flag = Flag::base;
    int depth = 0;
    int added_at_level = 1;

    // enclosed marked points, as the closed range [first, last]
    int first_point() const;
    int last_point() const;
};

struct BundleCrossing {
    int a = 0;  // bundle added later
    int b = 0;
    bool a_over = false;
    int points = 2;
};

struct Family {
    double center = 0;
    int first_point = 0;
    int last_point = 0;
    Weight weight;
    std::vector<int> members;  // bundle indices, outermost first
};

struct Rerouting {
    int under = 0;  // family index
    int over = 0;
    Weight under_weight;
    Weight over_weight;
    Weight reroute;  // the smaller weight
    Weight pass;     // larger minus smaller
    bool higher_under = false;
    int points = 2;
};

struct WeightedDiagram {
    int b = 4;
    int level = 1;
    bool symbolic = false;
    MagnitudeRanges ranges;
    std::vector<Bundle> bundles;
    std::vector<BundleCrossing> crossings;
    bool resolved = false;
    std::vector<Family> families;
    std::vector<Rerouting> reroutes;
    std::vector<std::string> log;
};

// Base curve: the boundary of a small neighbourhood of the axis interval
// [first, last] (first < last, marked points).
WeightedDiagram base_diagram(int b, int first, int last, bool symbolic = false);
// The canonical start: boundary of a neighbourhood of [2b-1, 2b].
WeightedDiagram initial_diagram(int b, bool symbolic = false);

Weight strands_through(const WeightedDiagram& d, LoopId disk);
WeightedDiagram apply_level(const WeightedDiagram& d, int level, const TwistSpec& spec);

struct ResolvedPair {
    Weight reroute;
    Weight pass;
    bool first_larger = false;
};
// Crossing of a bundle of weight big with one of weight small.
ResolvedPair resolve_pair(const Weight& big, const Weight& small, const MagnitudeRanges& ranges);

WeightedDiagram resolve_crossings(const WeightedDiagram& d);

struct TransportOptions {
    bool symbolic = false;
    MagnitudeRanges ranges;
};

WeightedDiagram transport(const TwistSpec& spec, const TransportOptions& opts = {});

struct LabyrinthSummary {
    std::vector<Weight> N;
    std::vector<std::int64_t> values;
    bool applicable = false;  // exactly four families
    bool positive = false;
    bool n1_gt_n2 = false;
    bool n2_lt_n3 = false;
    bool n3_gt_n4 = false;
    // symbolic proofs over the declared ranges (only for symbolic diagrams)
    bool proved_positive = false;
    bool proved_inequalities = false;
    bool all_hold() const { return applicable && positive && n1_gt_n2 && n2_lt_n3 && n3_gt_n4; }
};

LabyrinthSummary summary(const WeightedDiagram& d, const TwistSpec& spec);

// Predicted intersection counts with each axis segment (1..2b) of the
// resolved curve, read off the families.
std::map<int, Weight> predicted_axis_counts(const WeightedDiagram& d);

// Predicted lane counts per beta arc for the transported arc beta' whose
// endpoints move by the strand permutation.
std::map<int, std::int64_t> predicted_lane_counts(const WeightedDiagram& d, const TwistSpec& spec);

// JSON-ready dump rows: (loop id, weight expression, flag, depth).
struct BundleRow {
    std::string loop;
    std::string weight;
    std::string flag;
    int depth = 0;
};
std::vector<BundleRow> dump_rows(const WeightedDiagram& d);

}  // namespace platlab

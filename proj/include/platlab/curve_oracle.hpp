#pragma once

#include "platlab/plat_model.hpp"
#include "platlab/twist_calculus.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace platlab {

struct Point {
    double x = 0;
    double y = 0;
};

struct PlanarCurve {
    std::string name;
    std::vector<Point> pts;
    bool closed = true;
};

struct OracleConfig {
    double core_radius = 0.6;
    double epsilon = 1e-9;
    double step = 0.01;  // resampling step inside a disk, divided by |k|
    std::size_t vertex_cap = 20'000'000;
    int magnitude_budget = 6;
};

// Circle about the axis interval [first, last] with the given margin.
PlanarCurve neighbourhood_circle(int first, int last, double margin = 0.12, int samples = 400, double phase = 0.0123);
PlanarCurve initial_boundary(int b);       // boundary of a neighbourhood of [2b-1, 2b]
PlanarCurve initial_arc(int b);            // the arc [2b-1, 2b], bowed into the upper half-plane
PlanarCurve lower_disk_boundary();         // boundary of a neighbourhood of [1, 2]

PlanarCurve half_twist(const PlanarCurve& c, double center, int k, const OracleConfig& cfg = {});
PlanarCurve half_twist(const PlanarCurve& c, const MarkedSphere& sphere, LoopId l, int k, const OracleConfig& cfg = {});
// Applies levels 2..upto (default: all) in order.
PlanarCurve transport_explicit(const TwistSpec& spec, const PlanarCurve& c, const OracleConfig& cfg = {}, int upto = 0);

// Final positions of the marked points, as a permutation of columns.
std::vector<int> track_marked_points(const TwistSpec& spec, const OracleConfig& cfg = {});

// One transverse crossing of the axis: the segment and the side the curve
// enters (+1 upper half-plane, -1 lower).
struct AxisHit {
    int segment = 0;
    int dir = 0;
    bool operator==(const AxisHit&) const = default;
};

struct AxisWord {
    int b = 4;
    bool closed = true;
    std::vector<AxisHit> hits;
    // open arcs with endpoints at marked points
    int start_point = 0;
    int end_point = 0;
    int start_side = 0;  // half-plane of the first sub-arc
};

AxisWord axis_word(const PlanarCurve& c, int b, const OracleConfig& cfg = {});

// Removes bigons with the axis (and, for arcs ending at marked points,
// half-bigons at the ends) leftmost-first. The result is the normal form.
AxisWord reduce_minimal(const AxisWord& w);
// Same reduction with bigons removed in random order; used to test confluence.
AxisWord reduce_random_order(const AxisWord& w, std::mt19937_64& rng);
// True when two closed words agree up to cyclic rotation.
bool same_cyclic_word(const AxisWord& a, const AxisWord& b);

std::map<int, int> segment_counts(const AxisWord& w);
// Hits restricted to the given segments, in curve order.
std::vector<AxisHit> restrict_word(const AxisWord& w, const std::vector<int>& segments);
// Number of cyclically adjacent equal letters in a restricted closed word.
int adjacent_repeats(const std::vector<AxisHit>& hits);

// Ordering of the hits of a normal-form multicurve on every segment.
struct Realization {
    int b = 4;
    std::vector<AxisWord> curves;
    // per segment: (curve, hit) in increasing axis parameter
    std::map<int, std::vector<std::pair<int, int>>> on_segment;
    std::vector<std::vector<int>> rank;  // rank[curve][hit] within its segment
    bool planar = false;
};

Realization realize(const std::vector<AxisWord>& closed_words);

// True iff the curves can be made disjoint. Closed curves are compared through
// a joint realization; an axis segment is compared by its hit count.
bool disjointness(const PlanarCurve& c1, const PlanarCurve& c2, int b, const OracleConfig& cfg = {});
bool disjoint_from_segment(const PlanarCurve& c, int segment, int b, const OracleConfig& cfg = {});

}  // namespace platlab

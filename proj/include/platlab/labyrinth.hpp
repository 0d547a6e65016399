#pragma once

#include "platlab/curve_oracle.hpp"
#include "platlab/lab_map.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace platlab {

enum class Color { orange = 0, purple = 1, brown = 2 };
std::string color_name(Color c);
constexpr std::array<Color, 3> kColors = {Color::orange, Color::purple, Color::brown};

struct Gate {
    Color color = Color::orange;
    int edge = -1;       // gate edge in the map
    int lane_edge = -1;  // the lane the gate runs beside
    int lane_half = -1;  // lane half-edge on the inner-boundary side
    int entry_half = -1;  // curve half-edge entering the lane's first vertex
    int region = -1;     // census region of the colored disk
    int puncture = 0;
};

struct LaneId {
    int beta = 0;
    int ordinal = 0;
    auto operator<=>(const LaneId&) const = default;
};

struct Lane {
    LaneId id;
    std::string tag;  // orange, purple, brown, annulus, inner, exterior
    bool crosses_exterior = false;
    bool interior = false;  // both ends on the transported arc
    std::vector<int> edges;  // map edges outside the inner disk
};

struct LaneDecomposition {
    std::map<int, std::vector<Lane>> by_beta;
    std::map<int, LaneId> lane_of_edge;
    LaneId leftmost_beta2{2, 0};
    std::size_t count(int beta) const { return by_beta.count(beta) ? by_beta.at(beta).size() : 0; }
};

struct TrackEntry {
    int number = 0;
    LaneId lane;
    bool operator==(const TrackEntry& o) const { return number == o.number && lane == o.lane; }
};

struct TrackSequence {
    Color color = Color::orange;
    int puncture = 0;
    std::vector<TrackEntry> entries;

    std::vector<int> numbers() const;
    bool palindrome() const;
    bool alternates() const;  // 3-points and other points alternate
    std::pair<int, int> outermost() const;
    bool has_fours() const;
};

struct EscapeRoute {
    std::vector<int> faces;  // from the puncture's face to the gate's face
    std::vector<int> lanes;  // map edges crossed, in the same order
};

struct Labyrinth {
    TwistSpec spec;
    OracleConfig config;
    PlanarCurve curve;
    AxisWord raw_word;
    AxisWord word;
    AxisWord arc_word;
    LabMap plain;  // without gates
    LabMap map;    // with gates
    FaceCensus plain_census;
    FaceCensus census;
    int inner_region = -1;
    std::vector<Gate> gates;
    LaneDecomposition lanes;
    std::array<TrackSequence, 3> tracks;
    std::array<EscapeRoute, 3> routes;

    const Gate& gate(Color c) const { return gates[static_cast<std::size_t>(c)]; }
    const TrackSequence& track(Color c) const { return tracks[static_cast<std::size_t>(c)]; }
};

// Adds the three gates to the map, colored by their order along the inner
// boundary, and checks the resulting census. Throws CensusMismatch.
std::vector<Gate> locate_gates(LabMap& m);

// Shortest path in a face graph; edges are (face, face, lane edge).
EscapeRoute shortest_route(const std::vector<std::tuple<int, int, int>>& adjacency, int from, int to);
EscapeRoute escape_route(const LabMap& m, const FaceCensus& census, const Gate& g);

// Doubling of the escape route around the puncture.
TrackSequence track_sequence(const Labyrinth& lab, Color c);
// Pushes the curve side of the colored disk's boundary inward and cancels
// adjacent repeats.
TrackSequence track_by_reduction(const Labyrinth& lab, Color c);
std::pair<int, int> outermost_labels(const TrackSequence& t);

LaneDecomposition decompose_lanes(const LabMap& m, const FaceCensus& census, int inner_region,
                                  const std::vector<Gate>& gates);

struct LaneCoverage {
    bool ok = true;
    std::vector<LaneId> uncovered;
    std::vector<LaneId> vacuous;  // interior lanes lying in the annulus
    int interior_lanes = 0;
};
LaneCoverage check_lane_coverage(const LaneDecomposition& lanes, const std::array<TrackSequence, 3>& tracks);
LaneCoverage lanes_meet_tracks(const Labyrinth& lab);

// Full pipeline for a spec: transport, normal form, map, gates, lanes, tracks.
Labyrinth analyze_labyrinth(const TwistSpec& spec, const OracleConfig& cfg = {});

}  // namespace platlab

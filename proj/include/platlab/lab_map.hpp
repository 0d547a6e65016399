#pragma once

#include "platlab/curve_oracle.hpp"

#include <string>
#include <vector>

namespace platlab {

// Planar map of the labyrinth: the beta arcs beta^2..beta^b cut at the
// crossings of the normal-form curve, the curve's arcs, and the boundary of
// the labyrinth (a circle about [1,3] crossing beta^2 first and the arc
// through infinity last). Half-edge h runs tail -> head; h ^ 1 is its twin.
// Faces are traced with the face on the left.
struct MapVertex {
    enum class Kind { marked, crossing, lab };
    Kind kind = Kind::crossing;
    int segment = 0;
    int point = 0;  // marked point number
    int hit = -1;   // index into the curve word
    int slot = 0;   // order along the segment
};

struct MapEdge {
    enum class Kind { beta, curve, lab, gate };
    Kind kind = Kind::beta;
    int v0 = 0;
    int v1 = 0;
    int beta = 0;     // beta index for beta edges
    int ordinal = 0;  // position along the beta arc
    int hit = -1;     // curve edges: the hit the arc leaves from
    int side = 0;     // +1 upper half-plane, -1 lower
    int gate = -1;
};

struct LabMap {
    int b = 4;
    AxisWord curve;
    Realization realization;
    std::vector<MapVertex> vertices;
    std::vector<MapEdge> edges;
    std::vector<std::vector<int>> rotation;  // ccw outgoing half-edges per vertex
    std::vector<std::vector<int>> segment_vertices;
    std::vector<int> crossing_vertex;  // by hit
    std::vector<int> face_of;          // by half-edge
    std::vector<std::vector<int>> faces;
    int exterior = -1;  // face outside the labyrinth
    int lab_inner = -1;  // face inside the labyrinth along its boundary

    int tail(int h) const { return h % 2 == 0 ? edges[static_cast<std::size_t>(h / 2)].v0 : edges[static_cast<std::size_t>(h / 2)].v1; }
    int head(int h) const { return tail(h ^ 1); }
    const MapEdge& edge(int h) const { return edges[static_cast<std::size_t>(h / 2)]; }
    int next(int h) const;
    void trace_faces();
};

// The curve must be closed, in normal form and must avoid beta^1 and gamma^1.
LabMap build_lab_map(const AxisWord& curve);

// Inserts a gate chord between two corners; a corner is named by the
// half-edge entering it. Both corners must lie on one face.
int add_gate(LabMap& m, int corner_a, int corner_b, int gate_id);

struct CensusFace {
    std::vector<int> faces;
    std::vector<int> points;
    int boundary_cycles = 0;
    std::string tag;  // disk, annulus or other
    int punctures() const { return static_cast<int>(points.size()); }
};

struct FaceCensus {
    std::vector<CensusFace> regions;
    std::vector<int> region_of_face;  // -1 for the exterior
    int interior_points = 0;
    int puncture_sum() const;
};

// Regions of the labyrinth cut by the curve, its boundary and the gates.
FaceCensus face_census(const LabMap& m);

// Throws CensusMismatch unless the census is three once-punctured disks, one
// unpunctured annulus and one twice-punctured disk.
void check_census(const FaceCensus& census);

}  // namespace platlab

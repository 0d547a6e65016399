#include "platlab/lab_map.hpp"

#include "platlab/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace platlab {

namespace {

enum Slot { kForward = 0, kUpper = 1, kBackward = 2, kLower = 3 };

void label_faces(LabMap& m) {
    m.exterior = -1;
    m.lab_inner = -1;
    int first = m.segment_vertices[3].front();
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind == MapEdge::Kind::beta && m.edges[e].v0 == first) m.exterior = m.face_of[2 * e];
    }
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind != MapEdge::Kind::lab) continue;
        for (std::size_t d = 0; d < 2; ++d) {
            int f = m.face_of[2 * e + d];
            if (f == m.exterior) continue;
            if (m.lab_inner >= 0 && m.lab_inner != f) throw CensusMismatch("labyrinth boundary meets two inner faces");
            m.lab_inner = f;
        }
    }
}

}  // namespace

int LabMap::next(int h) const {
    const auto& list = rotation[static_cast<std::size_t>(head(h))];
    auto it = std::find(list.begin(), list.end(), h ^ 1);
    std::size_t i = static_cast<std::size_t>(it - list.begin());
    return list[(i + list.size() - 1) % list.size()];
}

void LabMap::trace_faces() {
    face_of.assign(edges.size() * 2, -1);
    faces.clear();
    for (int h = 0; h < static_cast<int>(edges.size() * 2); ++h) {
        if (face_of[static_cast<std::size_t>(h)] >= 0) continue;
        int id = static_cast<int>(faces.size());
        std::vector<int> cycle;
        int x = h;
        while (face_of[static_cast<std::size_t>(x)] < 0) {
            face_of[static_cast<std::size_t>(x)] = id;
            cycle.push_back(x);
            x = next(x);
        }
        faces.push_back(cycle);
    }
}

LabMap build_lab_map(const AxisWord& curve) {
    if (!curve.closed) throw DegenerateSubdivision("labyrinth map needs a closed curve");
    LabMap m;
    m.b = curve.b;
    m.curve = curve;
    const int omega = 2 * m.b;
    for (const auto& h : curve.hits) {
        if (h.segment == 1 || h.segment == 2) {
            throw CensusMismatch("curve meets the neighbourhood of beta^1 and gamma^1");
        }
    }
    m.realization = realize({curve});
    if (!m.realization.planar) throw DegenerateSubdivision("curve word admits no planar realization");

    std::vector<std::array<int, 4>> slots;
    auto add_vertex = [&](MapVertex v) {
        m.vertices.push_back(v);
        slots.push_back({-1, -1, -1, -1});
        return static_cast<int>(m.vertices.size()) - 1;
    };
    auto add_edge = [&](MapEdge e, Slot s0, Slot s1) {
        int id = static_cast<int>(m.edges.size());
        slots[static_cast<std::size_t>(e.v0)][s0] = 2 * id;
        slots[static_cast<std::size_t>(e.v1)][s1] = 2 * id + 1;
        m.edges.push_back(e);
        return id;
    };
    MarkedSphere sphere{m.b};
    m.segment_vertices.assign(static_cast<std::size_t>(omega + 1), {});
    m.crossing_vertex.assign(curve.hits.size(), -1);
    int lab_first = -1, lab_last = -1;
    for (int s = 1; s <= omega; ++s) {
        auto& verts = m.segment_vertices[static_cast<std::size_t>(s)];
        bool beta = sphere.beta_index(s) >= 2;
        auto push = [&](MapVertex v) {
            v.segment = s;
            v.slot = static_cast<int>(verts.size());
            int id = add_vertex(v);
            verts.push_back(id);
            return id;
        };
        if (beta) push({MapVertex::Kind::marked, s, s, -1, 0});
        if (s == 3) lab_first = push({MapVertex::Kind::lab, s, 0, -1, 0});
        auto it = m.realization.on_segment.find(s);
        if (it != m.realization.on_segment.end()) {
            for (auto [c, hit] : it->second) {
                (void)c;
                m.crossing_vertex[static_cast<std::size_t>(hit)] = push({MapVertex::Kind::crossing, s, 0, hit, 0});
            }
        }
        if (s == omega) lab_last = push({MapVertex::Kind::lab, s, 0, -1, 0});
        if (beta) push({MapVertex::Kind::marked, s, s + 1, -1, 0});
    }
    for (int s = 3; s < omega; s += 2) {
        const auto& verts = m.segment_vertices[static_cast<std::size_t>(s)];
        for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
            MapEdge e;
            e.kind = MapEdge::Kind::beta;
            e.v0 = verts[k];
            e.v1 = verts[k + 1];
            e.beta = sphere.beta_index(s);
            e.ordinal = static_cast<int>(k);
            add_edge(e, kForward, kBackward);
        }
    }
    std::size_t n = curve.hits.size();
    for (std::size_t a = 0; a < n; ++a) {
        MapEdge e;
        e.kind = MapEdge::Kind::curve;
        e.v0 = m.crossing_vertex[a];
        e.v1 = m.crossing_vertex[(a + 1) % n];
        e.hit = static_cast<int>(a);
        e.side = curve.hits[a].dir;
        Slot s = e.side > 0 ? kUpper : kLower;
        add_edge(e, s, s);
    }
    for (int side : {1, -1}) {
        MapEdge e;
        e.kind = MapEdge::Kind::lab;
        e.v0 = lab_last;
        e.v1 = lab_first;
        e.side = side;
        Slot s = side > 0 ? kUpper : kLower;
        add_edge(e, s, s);
    }
    m.rotation.resize(m.vertices.size());
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
        for (int h : slots[v]) {
            if (h >= 0) m.rotation[v].push_back(h);
        }
    }
    m.trace_faces();

    label_faces(m);
    return m;
}

int add_gate(LabMap& m, int corner_a, int corner_b, int gate_id) {
    if (m.face_of[static_cast<std::size_t>(corner_a)] != m.face_of[static_cast<std::size_t>(corner_b)]) {
        throw DegenerateSubdivision("gate corners lie on different faces");
    }
    MapEdge e;
    e.kind = MapEdge::Kind::gate;
    e.v0 = m.head(corner_a);
    e.v1 = m.head(corner_b);
    e.gate = gate_id;
    int id = static_cast<int>(m.edges.size());
    int ins_a = corner_a ^ 1, ins_b = corner_b ^ 1;
    m.edges.push_back(e);
    auto insert = [&](int v, int before, int h) {
        auto& list = m.rotation[static_cast<std::size_t>(v)];
        list.insert(std::find(list.begin(), list.end(), before), h);
    };
    insert(e.v0, ins_a, 2 * id);
    insert(e.v1, ins_b, 2 * id + 1);
    m.trace_faces();
    label_faces(m);
    return id;
}

int FaceCensus::puncture_sum() const {
    int s = 0;
    for (const auto& r : regions) s += r.punctures();
    return s;
}

FaceCensus face_census(const LabMap& m) {
    std::size_t nf = m.faces.size();
    std::vector<std::size_t> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind != MapEdge::Kind::beta) continue;
        int f0 = m.face_of[2 * e], f1 = m.face_of[2 * e + 1];
        if (f0 == m.exterior || f1 == m.exterior) continue;
        parent[find(static_cast<std::size_t>(f0))] = find(static_cast<std::size_t>(f1));
    }
    // without a curve the beta arcs float inside the one region
    if (m.curve.hits.empty()) {
        for (std::size_t f = 0; f < nf; ++f) {
            if (static_cast<int>(f) != m.exterior && m.lab_inner >= 0) {
                parent[find(f)] = find(static_cast<std::size_t>(m.lab_inner));
            }
        }
    }
    FaceCensus census;
    census.region_of_face.assign(nf, -1);
    std::map<std::size_t, int> region_of_root;
    for (std::size_t f = 0; f < nf; ++f) {
        if (static_cast<int>(f) == m.exterior) continue;
        std::size_t r = find(f);
        auto it = region_of_root.find(r);
        if (it == region_of_root.end()) {
            it = region_of_root.emplace(r, static_cast<int>(census.regions.size())).first;
            census.regions.emplace_back();
        }
        census.region_of_face[f] = it->second;
        census.regions[static_cast<std::size_t>(it->second)].faces.push_back(static_cast<int>(f));
    }
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        const auto& ed = m.edges[e];
        if (ed.kind != MapEdge::Kind::beta) continue;
        for (std::size_t d = 0; d < 2; ++d) {
            int h = static_cast<int>(2 * e + d);
            const auto& v = m.vertices[static_cast<std::size_t>(m.head(h))];
            if (v.kind != MapVertex::Kind::marked) continue;
            int region = census.region_of_face[static_cast<std::size_t>(m.face_of[static_cast<std::size_t>(h)])];
            if (region < 0) continue;
            auto& pts = census.regions[static_cast<std::size_t>(region)].points;
            if (std::find(pts.begin(), pts.end(), v.point) == pts.end()) pts.push_back(v.point);
        }
    }
    for (auto& r : census.regions) {
        std::sort(r.points.begin(), r.points.end());
        census.interior_points += r.punctures();
    }
    // boundary walks of the wall-only map
    auto wall = [&](int h) { return m.edge(h).kind != MapEdge::Kind::beta; };
    std::vector<std::vector<int>> wall_rot(m.vertices.size());
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
        for (int h : m.rotation[v]) {
            if (wall(h)) wall_rot[v].push_back(h);
        }
    }
    auto wall_next = [&](int h) {
        const auto& list = wall_rot[static_cast<std::size_t>(m.head(h))];
        auto it = std::find(list.begin(), list.end(), h ^ 1);
        std::size_t i = static_cast<std::size_t>(it - list.begin());
        return list[(i + list.size() - 1) % list.size()];
    };
    std::vector<char> seen(m.edges.size() * 2, 0);
    for (int h = 0; h < static_cast<int>(m.edges.size() * 2); ++h) {
        if (!wall(h) || seen[static_cast<std::size_t>(h)]) continue;
        int x = h;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            x = wall_next(x);
        }
        int region = census.region_of_face[static_cast<std::size_t>(m.face_of[static_cast<std::size_t>(h)])];
        if (region >= 0) ++census.regions[static_cast<std::size_t>(region)].boundary_cycles;
    }
    for (auto& r : census.regions) {
        if (r.boundary_cycles == 0) throw DegenerateSubdivision("a beta arc meets no curve and floats in an unknown face");
        r.tag = r.boundary_cycles == 1 ? "disk" : r.boundary_cycles == 2 ? "annulus" : "other";
    }
    return census;
}

void check_census(const FaceCensus& census) {
    int once = 0, annulus = 0, twice = 0;
    for (const auto& r : census.regions) {
        if (r.tag == "disk" && r.punctures() == 1) ++once;
        if (r.tag == "annulus" && r.punctures() == 0) ++annulus;
        if (r.tag == "disk" && r.punctures() == 2) ++twice;
    }
    if (census.regions.size() != 5 || once != 3 || annulus != 1 || twice != 1) {
        std::ostringstream os;
        os << census.regions.size() << " regions:";
        for (const auto& r : census.regions) os << " (" << r.tag << ", " << r.punctures() << ")";
        throw CensusMismatch(os.str());
    }
}

}  // namespace platlab

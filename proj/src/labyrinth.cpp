#include "platlab/labyrinth.hpp"

#include "platlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace platlab {

std::string color_name(Color c) {
    switch (c) {
        case Color::orange: return "orange";
        case Color::purple: return "purple";
        case Color::brown: return "brown";
    }
    return "?";
}

std::vector<int> TrackSequence::numbers() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.number);
    return out;
}

bool TrackSequence::palindrome() const {
    auto n = numbers();
    return std::equal(n.begin(), n.end(), n.rbegin());
}

bool TrackSequence::alternates() const {
    if (entries.empty() || entries.size() % 2 == 0) return false;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if ((entries[i].number == 3) == (entries[i + 1].number == 3)) return false;
    }
    return true;
}

std::pair<int, int> TrackSequence::outermost() const { return outermost_labels(*this); }

bool TrackSequence::has_fours() const {
    return std::any_of(entries.begin(), entries.end(), [](const TrackEntry& e) { return e.number == 4; });
}

std::pair<int, int> outermost_labels(const TrackSequence& t) {
    int a = t.entries.empty() ? 0 : t.entries[0].number;
    int b = t.entries.size() < 2 ? 0 : t.entries[1].number;
    return {a, b};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

bool is_kind(const LabMap& m, int h, MapEdge::Kind k) { return m.edge(h).kind == k; }

int marked_vertex(const LabMap& m, int point) {
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
        if (m.vertices[v].kind == MapVertex::Kind::marked && m.vertices[v].point == point) return static_cast<int>(v);
    }
    throw CensusMismatch("no vertex for marked point " + std::to_string(point));
}

// The single beta half-edge leaving a marked point.
int puncture_half(const LabMap& m, int point) {
    int v = marked_vertex(m, point);
    const auto& rot = m.rotation[static_cast<std::size_t>(v)];
    if (rot.size() != 1) throw CensusMismatch("marked point with more than one edge");
    return rot.front();
}

}  // namespace

std::vector<Gate> locate_gates(LabMap& m) {
    if (m.lab_inner < 0) throw CensusMismatch("labyrinth has no inner face");
    const int R0 = m.lab_inner;
    std::vector<int> cyc = m.faces[static_cast<std::size_t>(R0)];
    // start right after the run along the labyrinth boundary
    std::size_t n = cyc.size(), start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_kind(m, cyc[i], MapEdge::Kind::lab) && !is_kind(m, cyc[(i + 1) % n], MapEdge::Kind::lab)) {
            start = (i + 1) % n;
            break;
        }
    }
    if (start == n) throw CensusMismatch("inner face does not run along the labyrinth boundary");
    std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(start), cyc.end());

    UnionFind uf(m.faces.size());
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind != MapEdge::Kind::beta) continue;
        int a = m.face_of[2 * e], b = m.face_of[2 * e + 1];
        if (a == R0 || b == R0 || a == m.exterior || b == m.exterior) continue;
        uf.join(a, b);
    }

    struct Group {
        int comp;
        std::vector<std::size_t> positions;  // lane half-edges in cyc
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < n; ++i) {
        int h = cyc[i];
        if (!is_kind(m, h, MapEdge::Kind::beta)) continue;
        int far = m.face_of[static_cast<std::size_t>(h ^ 1)];
        if (far == R0 || far == m.exterior) continue;
        int comp = uf.find(far);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.comp == comp; });
        if (it == groups.end()) {
            groups.push_back({comp, {i}});
        } else {
            it->positions.push_back(i);
        }
    }
    if (groups.size() != 3) {
        throw CensusMismatch("inner boundary meets " + std::to_string(groups.size()) + " far components, expected 3");
    }
    std::vector<Gate> gates;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::size_t i = groups[g].positions.front();
        int lane = cyc[i];
        int entry = cyc[(i + n - 1) % n];
        if (!is_kind(m, entry, MapEdge::Kind::curve) || !is_kind(m, cyc[(i + 1) % n], MapEdge::Kind::curve)) {
            throw CensusMismatch("gate lane is not flanked by the curve");
        }
        Gate gate;
        gate.color = kColors[g];
        gate.lane_half = lane;
        gate.lane_edge = lane / 2;
        gate.entry_half = entry;
        gate.edge = add_gate(m, entry, lane, static_cast<int>(g));
        gates.push_back(gate);
    }
    FaceCensus census = face_census(m);
    check_census(census);
    std::set<int> used;
    for (auto& gate : gates) {
        gate.region = census.region_of_face[static_cast<std::size_t>(m.face_of[static_cast<std::size_t>(gate.lane_half)])];
        const auto& r = census.regions[static_cast<std::size_t>(gate.region)];
        if (r.punctures() != 1 || r.tag != "disk" || !used.insert(gate.region).second) {
            throw CensusMismatch("gate " + color_name(gate.color) + " does not close off a once-punctured disk");
        }
        gate.puncture = r.points.front();
    }
    return gates;
}

EscapeRoute shortest_route(const std::vector<std::tuple<int, int, int>>& adjacency, int from, int to) {
    std::map<int, std::vector<std::pair<int, int>>> adj;
    for (auto [a, b, e] : adjacency) {
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }
    std::map<int, std::pair<int, int>> prev;
    prev[from] = {-1, -1};
    std::deque<int> queue{from};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == to) break;
        for (auto [y, e] : adj[x]) {
            if (prev.count(y)) continue;
            prev[y] = {x, e};
            queue.push_back(y);
        }
    }
    if (!prev.count(to)) throw CensusMismatch("no route between faces");
    EscapeRoute r;
    for (int x = to; x != -1; x = prev[x].first) {
        r.faces.push_back(x);
        if (prev[x].second >= 0) r.lanes.push_back(prev[x].second);
    }
    std::reverse(r.faces.begin(), r.faces.end());
    std::reverse(r.lanes.begin(), r.lanes.end());
    return r;
}

EscapeRoute escape_route(const LabMap& m, const FaceCensus& census, const Gate& g) {
    std::vector<std::tuple<int, int, int>> adjacency;
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind != MapEdge::Kind::beta) continue;
        int a = m.face_of[2 * e], b = m.face_of[2 * e + 1];
        if (census.region_of_face[static_cast<std::size_t>(a)] != g.region) continue;
        if (census.region_of_face[static_cast<std::size_t>(b)] != g.region) continue;
        adjacency.emplace_back(a, b, static_cast<int>(e));
    }
    int from = m.face_of[static_cast<std::size_t>(puncture_half(m, g.puncture))];
    int to = m.face_of[static_cast<std::size_t>(g.lane_half)];
    return shortest_route(adjacency, from, to);
}

namespace {

TrackSequence make_track(const Labyrinth& lab, Color c, const std::vector<int>& edges) {
    TrackSequence t;
    t.color = c;
    t.puncture = lab.gate(c).puncture;
    for (int e : edges) {
        auto it = lab.lanes.lane_of_edge.find(e);
        if (it == lab.lanes.lane_of_edge.end()) throw CensusMismatch("track crosses a beta edge with no lane");
        t.entries.push_back({lab.map.edges[static_cast<std::size_t>(e)].beta, it->second});
    }
    return t;
}

}  // namespace

TrackSequence track_sequence(const Labyrinth& lab, Color c) {
    const auto& route = lab.routes[static_cast<std::size_t>(c)];
    std::vector<int> edges(route.lanes.rbegin(), route.lanes.rend());
    edges.push_back(puncture_half(lab.map, lab.gate(c).puncture) / 2);
    edges.insert(edges.end(), route.lanes.begin(), route.lanes.end());
    return make_track(lab, c, edges);
}

TrackSequence track_by_reduction(const Labyrinth& lab, Color c) {
    const LabMap& m = lab.map;
    const Gate& g = lab.gate(c);
    int v = m.head(g.entry_half), w = m.head(g.lane_half);
    int hv = m.vertices[static_cast<std::size_t>(v)].hit, hw = m.vertices[static_cast<std::size_t>(w)].hit;
    // entry runs from hit a to a+1 when it is the forward half-edge
    int dir = (g.entry_half % 2 == 0) ? 1 : -1;
    int n = static_cast<int>(m.curve.hits.size());
    std::vector<int> stack;
    for (int x = hv, steps = 0; steps <= n; x = ((x + dir) % n + n) % n, ++steps) {
        int vx = m.crossing_vertex[static_cast<std::size_t>(x)];
        int outside = -1;
        bool on_beta = false;
        for (int h : m.rotation[static_cast<std::size_t>(vx)]) {
            if (m.edge(h).kind != MapEdge::Kind::beta) continue;
            on_beta = true;
            int f = m.face_of[static_cast<std::size_t>(h)];
            if (lab.census.region_of_face[static_cast<std::size_t>(f)] != lab.inner_region) outside = h / 2;
        }
        if (!on_beta) {
            if (x == hw) break;
            continue;
        }
        if (outside < 0) throw CensusMismatch("curve vertex with no beta edge outside the inner disk");
        if (!stack.empty() && stack.back() == outside) {
            stack.pop_back();
        } else {
            stack.push_back(outside);
        }
        if (x == hw) break;
    }
    return make_track(lab, c, stack);
}

LaneDecomposition decompose_lanes(const LabMap& m, const FaceCensus& census, int inner_region,
                                  const std::vector<Gate>& gates) {
    LaneDecomposition out;
    out.by_beta[1].push_back({{1, 0}, "exterior", true, false, {}});
    std::map<int, std::vector<int>> edges_of;
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind == MapEdge::Kind::beta) edges_of[m.edges[e].beta].push_back(static_cast<int>(e));
    }
    auto region = [&](int h) {
        int f = m.face_of[static_cast<std::size_t>(h)];
        return f == m.exterior ? -1 : census.region_of_face[static_cast<std::size_t>(f)];
    };
    for (int i = 2; i <= m.b; ++i) {
        auto& list = edges_of[i];
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            return m.edges[static_cast<std::size_t>(a)].ordinal < m.edges[static_cast<std::size_t>(b)].ordinal;
        });
        auto& lanes = out.by_beta[i];
        lanes.push_back({{i, 0}, "", false, false, {}});
        std::vector<std::set<int>> regions(1);
        for (int e : list) {
            const MapEdge& ed = m.edges[static_cast<std::size_t>(e)];
            bool inner = region(2 * e) == inner_region && inner_region >= 0;
            bool ends_cross = m.vertices[static_cast<std::size_t>(ed.v0)].kind == MapVertex::Kind::crossing &&
                              m.vertices[static_cast<std::size_t>(ed.v1)].kind == MapVertex::Kind::crossing;
            if (inner) {
                if (ends_cross) {
                    lanes.push_back({{i, static_cast<int>(lanes.size())}, "", false, false, {}});
                    regions.emplace_back();
                }
                continue;
            }
            lanes.back().edges.push_back(e);
            out.lane_of_edge[e] = lanes.back().id;
            for (int d = 0; d < 2; ++d) {
                int r = region(2 * e + d);
                if (r < 0) {
                    lanes.back().crosses_exterior = true;
                } else {
                    regions.back().insert(r);
                }
            }
        }
        for (std::size_t k = 0; k < lanes.size(); ++k) {
            auto& lane = lanes[k];
            lane.interior = k > 0 && k + 1 < lanes.size();
            std::string tag;
            for (const auto& g : gates) {
                if (regions[k].count(g.region)) tag = color_name(g.color);
            }
            if (tag.empty()) {
                for (int r : regions[k]) {
                    if (census.regions[static_cast<std::size_t>(r)].tag == "annulus") tag = "annulus";
                }
            }
            if (tag.empty()) tag = lane.edges.empty() ? "inner_disk" : (lane.crosses_exterior ? "exterior" : "other");
            lane.tag = tag;
        }
    }
    return out;
}

LaneCoverage check_lane_coverage(const LaneDecomposition& lanes, const std::array<TrackSequence, 3>& tracks) {
    LaneCoverage cov;
    std::set<LaneId> met;
    for (const auto& t : tracks) {
        for (const auto& e : t.entries) met.insert(e.lane);
    }
    for (const auto& [beta, list] : lanes.by_beta) {
        for (const auto& lane : list) {
            if (!lane.interior) continue;
            ++cov.interior_lanes;
            if (lane.tag == "annulus") cov.vacuous.push_back(lane.id);
            if (!met.count(lane.id)) cov.uncovered.push_back(lane.id);
        }
    }
    cov.ok = cov.uncovered.empty() && cov.vacuous.empty();
    return cov;
}

LaneCoverage lanes_meet_tracks(const Labyrinth& lab) { return check_lane_coverage(lab.lanes, lab.tracks); }

Labyrinth analyze_labyrinth(const TwistSpec& spec, const OracleConfig& cfg) {
    Labyrinth lab;
    lab.spec = spec;
    lab.config = cfg;
    lab.curve = transport_explicit(spec, initial_boundary(spec.b), cfg);
    lab.raw_word = axis_word(lab.curve, spec.b, cfg);
    lab.word = reduce_minimal(lab.raw_word);
    lab.arc_word = reduce_minimal(axis_word(transport_explicit(spec, initial_arc(spec.b), cfg), spec.b, cfg));
    lab.plain = build_lab_map(lab.word);
    lab.plain_census = face_census(lab.plain);
    lab.map = lab.plain;
    lab.gates = locate_gates(lab.map);
    lab.census = face_census(lab.map);
    for (std::size_t r = 0; r < lab.census.regions.size(); ++r) {
        if (lab.census.regions[r].punctures() == 2) lab.inner_region = static_cast<int>(r);
    }
    lab.lanes = decompose_lanes(lab.map, lab.census, lab.inner_region, lab.gates);
    for (Color c : kColors) {
        auto k = static_cast<std::size_t>(c);
        lab.routes[k] = escape_route(lab.map, lab.census, lab.gate(c));
        lab.tracks[k] = track_sequence(lab, c);
    }
    return lab;
}

}  // namespace platlab

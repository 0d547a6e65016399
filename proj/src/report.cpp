#include "platlab/report.hpp"

#include "platlab/config.hpp"

namespace platlab {

using nlohmann::json;

json summary_json(const LabyrinthSummary& s) {
    json n = json::array(), sym = json::array();
    for (auto v : s.values) n.push_back(v);
    for (const auto& w : s.N) sym.push_back(w.str());
    return {{"N", n},
            {"symbolic", sym},
            {"applicable", s.applicable},
            {"positive", s.positive},
            {"inequalities", {{"N1>N2", s.n1_gt_n2}, {"N2<N3", s.n2_lt_n3}, {"N3>N4", s.n3_gt_n4}}},
            {"all_hold", s.all_hold()}};
}

json diagram_json(const WeightedDiagram& d) {
    json rows = json::array();
    for (const auto& r : dump_rows(d)) {
        rows.push_back({{"loop", r.loop}, {"weight", r.weight}, {"flag", r.flag}, {"depth", r.depth}});
    }
    json fams = json::array();
    for (const auto& f : d.families) {
        fams.push_back({{"center", f.center}, {"points", {f.first_point, f.last_point}}, {"weight", f.weight.str()}});
    }
    return {{"level", d.level}, {"symbolic", d.symbolic}, {"bundles", rows}, {"resolved", d.resolved}, {"families", fams}};
}

json analyze_report(const TwistSpec& spec) {
    LinkDiagram diag = build_diagram(spec);
    FamilyReport fam = family_membership(spec);
    WeightedDiagram numeric = resolve_crossings(transport(spec));
    TransportOptions sym;
    sym.symbolic = true;
    json symbolic;
    try {
        symbolic = summary_json(summary(resolve_crossings(transport(spec, sym)), spec));
    } catch (const AmbiguousOrder& e) {
        symbolic = error_json(e);
    }
    json parts = json::array();
    for (const auto& c : component_partition(spec)) parts.push_back(c);
    return {{"version", kReportVersion},
            {"spec", spec_to_json(spec)},
            {"flags",
             {{"twisted", spec.twisted},
              {"min_magnitude", spec.min_magnitude},
              {"sign_pattern", spec.sign_pattern},
              {"family", fam.member},
              {"family_reasons", fam.reasons},
              {"evenness", {{"t2_2", spec.at(2, 2)}, {"t4_2", spec.at(4, 2)}}}}},
            {"components", parts},
            {"component_count", fam.component_count},
            {"crossings", diag.crossings.size()},
            {"alternating", is_alternating(diag)},
            {"split", is_split_diagram(diag)},
            {"diagram", diagram_json(numeric)},
            {"summary", summary_json(summary(numeric, spec))},
            {"symbolic_summary", symbolic}};
}

json curve_json(const PlanarCurve& c) {
    json pts = json::array();
    for (const auto& p : c.pts) pts.push_back({p.x, p.y});
    return {{"name", c.name}, {"closed", c.closed}, {"points", pts}};
}

json word_json(const AxisWord& w) {
    json hits = json::array();
    for (const auto& h : w.hits) hits.push_back({h.segment, h.dir});
    json counts = json::object();
    for (auto [s, c] : segment_counts(w)) counts[std::to_string(s)] = c;
    return {{"closed", w.closed}, {"hits", hits}, {"counts", counts}};
}

json census_json(const FaceCensus& c) {
    json regions = json::array();
    for (const auto& r : c.regions) {
        regions.push_back({{"tag", r.tag}, {"punctures", r.points}, {"faces", r.faces.size()}});
    }
    return {{"regions", regions}, {"interior_points", c.interior_points}};
}

json lane_id_json(const LaneId& id) { return {id.beta, id.ordinal}; }

json lanes_json(const LaneDecomposition& l) {
    json out = json::object();
    for (const auto& [beta, list] : l.by_beta) {
        json arr = json::array();
        for (const auto& lane : list) {
            arr.push_back({{"ordinal", lane.id.ordinal},
                           {"tag", lane.tag},
                           {"interior", lane.interior},
                           {"crosses_exterior", lane.crosses_exterior}});
        }
        out[std::to_string(beta)] = arr;
    }
    return out;
}

json track_json(const TrackSequence& t) {
    json lanes = json::array();
    for (const auto& e : t.entries) lanes.push_back(lane_id_json(e.lane));
    auto [a, b] = t.outermost();
    return {{"color", color_name(t.color)},
            {"puncture", t.puncture},
            {"sequence", t.numbers()},
            {"lanes", lanes},
            {"palindrome", t.palindrome()},
            {"alternates", t.alternates()},
            {"outermost", {a, b}},
            {"has_fours", t.has_fours()}};
}

json gate_json(const Gate& g) {
    return {{"color", color_name(g.color)}, {"puncture", g.puncture}, {"lane_edge", g.lane_edge}, {"region", g.region}};
}

json labyrinth_json(const Labyrinth& lab) {
    json gates = json::array(), tracks = json::array();
    for (const auto& g : lab.gates) gates.push_back(gate_json(g));
    for (const auto& t : lab.tracks) tracks.push_back(track_json(t));
    return {{"word", word_json(lab.word)},
            {"arc_word", word_json(lab.arc_word)},
            {"census", census_json(lab.census)},
            {"gates", gates},
            {"lanes", lanes_json(lab.lanes)},
            {"tracks", tracks}};
}

json problem_json(const MatchingProblem& p) {
    json word = json::array();
    for (const auto& t : p.word) {
        json track = t.track == kOffTrack ? json("off") : json(t.track);
        word.push_back({{"number", t.number}, {"lane", lane_id_json(t.lane)}, {"track", track}});
    }
    return {{"word", word},
            {"constraints",
             {{"same_lane", p.constraints.same_lane},
              {"same_track", p.constraints.same_track},
              {"two_arc", p.constraints.two_arc}}}};
}

json verdict_json(const Verdict& v) {
    json trace = json::array();
    for (const auto& r : v.trace) trace.push_back({{"interval", {r.lo, r.hi}}, {"rule", rule_name(r.rule)}});
    json out = {{"feasible", v.feasible}, {"trace", trace}};
    if (v.feasible) {
        out["matching"] = v.chords;
    } else {
        out["cause"] = rule_name(v.cause);
    }
    return out;
}

json case_json(const CaseVerdict& v) {
    json steps = json::array();
    for (const auto& s : v.steps) {
        steps.push_back({{"label", s.label}, {"numbers", s.numbers}, {"verdict", verdict_json(s.verdict)}});
    }
    return {{"case", v.which},
            {"infeasible", v.infeasible},
            {"schematic", v.schematic},
            {"variants", v.variants},
            {"notes", v.notes},
            {"steps", steps}};
}

json error_json(const Error& e) { return {{"error", e.kind()}, {"message", e.what()}}; }

}  // namespace platlab

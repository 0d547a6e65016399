#include "platlab/verify.hpp"

#include "platlab/errors.hpp"
#include "platlab/labyrinth.hpp"
#include "platlab/matching.hpp"
#include "platlab/report.hpp"
#include "platlab/sweep.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace platlab {

using nlohmann::json;

const std::vector<int> kReferenceBrown = {3, 2, 3};
const std::vector<int> kReferenceOrange = {3, 4, 3, 4, 3, 2, 3, 2, 3, 4, 3, 4, 3};
const std::vector<int> kReferencePurple = {4, 3, 4, 3, 4, 3, 4, 3, 4, 3, 4, 3, 4, 3, 2, 3, 2, 3, 4, 3,
                                           4, 3, 2, 3, 2, 3, 4, 3, 4, 3, 4, 3, 4, 3, 4, 3, 4, 3, 4};

bool VerifyReport::pass() const {
    return !budget_exceeded && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int VerifyReport::exit_code() const {
    if (budget_exceeded) return kExitBudget;
    return pass() ? kExitPass : kExitCheckFailure;
}

json VerifyReport::to_json() const {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"version", kReportVersion}, {"pass", pass()}, {"budget_exceeded", budget_exceeded}, {"checks", arr}};
}

namespace {

json track_numbers(const Labyrinth& lab) {
    json out = json::object();
    for (Color c : kColors) out[color_name(c)] = lab.track(c).numbers();
    return out;
}

json reduced_counts(const TwistSpec& spec, const OracleConfig& cfg) {
    int b = spec.b;
    auto curve = reduce_minimal(axis_word(transport_explicit(spec, initial_boundary(b), cfg), b, cfg));
    auto arc = reduce_minimal(axis_word(transport_explicit(spec, initial_arc(b), cfg), b, cfg));
    json out = {{"curve", json::object()}, {"arc", json::object()}};
    for (auto [s, c] : segment_counts(curve)) out["curve"][std::to_string(s)] = c;
    for (auto [s, c] : segment_counts(arc)) out["arc"][std::to_string(s)] = c;
    return out;
}

bool is_uniform_two(const TwistSpec& s) {
    if (s.h != 4 || s.b != 4) return false;
    return s.rows == uniform_spec(2).rows;
}

}  // namespace

VerifyReport run_verify(const RunConfig& cfg) {
    if (!cfg.spec) throw ConfigError("verify needs a spec");
    const TwistSpec& spec = *cfg.spec;
    VerifyReport rep;
    auto run = [&](const std::string& name, const std::function<void(Check&)>& body) {
        Check c;
        c.name = name;
        try {
            body(c);
        } catch (const BudgetExceeded& e) {
            rep.budget_exceeded = true;
            c.pass = false;
            c.detail = error_json(e);
        } catch (const Error& e) {
            c.pass = false;
            c.detail = error_json(e);
        }
        rep.checks.push_back(std::move(c));
    };

    run("summary", [&](Check& c) {
        auto s = summary(transport(spec), spec);
        c.detail = summary_json(s);
        c.pass = s.all_hold();
    });
    run("symbolic", [&](Check& c) {
        TransportOptions opts;
        opts.symbolic = true;
        auto sym = summary(transport(spec, opts), spec);
        auto num = summary(transport(spec), spec);
        json polys = json::array();
        for (const auto& w : sym.N) polys.push_back(w.str());
        c.detail = {{"polynomials", polys}, {"evaluated", sym.values}, {"numeric", num.values}};
        c.pass = sym.applicable && sym.values == num.values;
    });
    run("oracle_counts", [&](Check& c) {
        auto r = compare_counts(spec, cfg.oracle, cfg.fault == "corrupt_n2");
        c.detail = r.detail;
        if (!r.pass) c.detail["failure"] = r.failure;
        c.pass = r.pass;
    });

    Labyrinth lab;
    bool have_lab = false;
    run("census", [&](Check& c) {
        lab = analyze_labyrinth(spec, cfg.oracle);
        have_lab = true;
        c.detail = census_json(lab.census);
        check_census(lab.census);
        c.pass = lab.gates.size() == 3;
    });
    if (!have_lab) return rep;

    run("minimal_position", [&](Check& c) {
        auto restricted = restrict_word(lab.word, {3, 5, 7});
        int repeats = adjacent_repeats(restricted);
        auto raw = restrict_word(lab.raw_word, {3, 5, 7});
        c.detail = {{"reduced_beta_hits", restricted.size()},
                    {"adjacent_repeats", repeats},
                    {"raw_beta_hits", raw.size()},
                    {"raw_adjacent_repeats", adjacent_repeats(raw)},
                    {"raw_hits", lab.raw_word.hits.size()},
                    {"reduced_hits", lab.word.hits.size()},
                    {"realization_planar", lab.plain.realization.planar}};
        c.pass = repeats == 0 && lab.raw_word.hits == lab.word.hits && lab.plain.realization.planar;
    });
    run("gates", [&](Check& c) {
        json merged = json::array();
        bool ok = true;
        for (std::size_t skip = 0; skip < lab.gates.size(); ++skip) {
            LabMap m = lab.plain;
            for (std::size_t g = 0; g < lab.gates.size(); ++g) {
                if (g != skip) add_gate(m, lab.gates[g].entry_half, lab.gates[g].lane_half, static_cast<int>(g));
            }
            auto n = face_census(m).regions.size();
            merged.push_back({{"removed", color_name(lab.gates[skip].color)}, {"regions", n}});
            ok = ok && n == 4;
        }
        json gates = json::array();
        for (const auto& g : lab.gates) gates.push_back(gate_json(g));
        c.detail = {{"gates", gates}, {"without_one", merged}};
        c.pass = ok && lab.gates.size() == 3;
    });
    run("tracks", [&](Check& c) {
        const std::map<Color, std::pair<int, int>> table = {
            {Color::brown, {3, 2}}, {Color::orange, {3, 4}}, {Color::purple, {4, 3}}};
        json tracks = json::array();
        bool ok = true;
        for (Color col : kColors) {
            const auto& t = lab.track(col);
            bool agree = track_by_reduction(lab, col).entries == t.entries;
            json tj = track_json(t);
            tj["methods_agree"] = agree;
            tracks.push_back(tj);
            ok = ok && agree && t.palindrome() && t.alternates() && t.outermost() == table.at(col);
        }
        c.detail = {{"tracks", tracks}};
        if (is_uniform_two(spec)) {
            bool ref = lab.track(Color::brown).numbers() == kReferenceBrown &&
                       lab.track(Color::orange).numbers() == kReferenceOrange &&
                       lab.track(Color::purple).numbers() == kReferencePurple;
            c.detail["reference_match"] = ref;
            ok = ok && ref;
        }
        c.pass = ok;
    });
    run("lanes", [&](Check& c) {
        auto arc = segment_counts(lab.arc_word);
        json rows = json::array();
        bool ok = lab.lanes.count(1) == 1;
        for (int j = 2; j <= spec.b; ++j) {
            auto want = static_cast<std::size_t>(arc[2 * j - 1] + 1);
            rows.push_back({{"beta", j}, {"lanes", lab.lanes.count(j)}, {"arc_hits", arc[2 * j - 1]}});
            ok = ok && lab.lanes.count(j) == want;
        }
        json misplaced = json::array();
        for (const auto& [beta, list] : lab.lanes.by_beta) {
            for (const auto& lane : list) {
                if (beta == 1 || lane.id == lab.lanes.leftmost_beta2) continue;
                bool inside = lane.tag == "inner_disk" || lane.tag == "orange" || lane.tag == "purple" || lane.tag == "brown";
                if (!inside) misplaced.push_back(lane_id_json(lane.id));
            }
        }
        c.detail = {{"counts", rows}, {"outside_colored_or_inner", misplaced}};
        c.pass = ok && misplaced.empty();
    });
    run("lanes_meet_tracks", [&](Check& c) {
        auto cov = lanes_meet_tracks(lab);
        json unc = json::array(), vac = json::array();
        for (const auto& id : cov.uncovered) unc.push_back(lane_id_json(id));
        for (const auto& id : cov.vacuous) vac.push_back(lane_id_json(id));
        c.detail = {{"interior_lanes", cov.interior_lanes}, {"uncovered", unc}, {"vacuous", vac}};
        c.pass = cov.ok;
    });
    run("cases", [&](Check& c) {
        bool ok = true;
        c.detail = json::object();
        for (int k = 1; k <= 3; ++k) {
            try {
                auto v = replay_case(k, lab, cfg.cases);
                json vj = case_json(v);
                vj.erase("steps");
                if (!v.steps.empty()) vj["first_cause"] = rule_name(v.steps.front().verdict.cause);
                c.detail[std::to_string(k)] = vj;
                ok = ok && v.infeasible;
            } catch (const CaseInapplicable& e) {
                c.detail[std::to_string(k)] = error_json(e);
            }
        }
        c.pass = ok;
    });
    if (cfg.refinement) {
        run("refinement", [&](Check& c) {
            OracleConfig fine = cfg.oracle;
            fine.step /= 2;
            json base = reduced_counts(spec, cfg.oracle);
            json dense = reduced_counts(spec, fine);
            Labyrinth lab2 = analyze_labyrinth(spec, fine);
            json t1 = track_numbers(lab), t2 = track_numbers(lab2);
            c.detail = {{"step", cfg.oracle.step}, {"fine_step", fine.step}, {"counts", base}, {"tracks_equal", t1 == t2}};
            c.pass = base == dense && t1 == t2;
        });
    }
    return rep;
}

}  // namespace platlab

#include "platlab/sweep.hpp"

#include "platlab/errors.hpp"
#include "platlab/matching.hpp"
#include "platlab/report.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

namespace platlab {

using nlohmann::json;

std::vector<std::vector<int>> exhaustive_magnitudes(const MagnitudeBand& band) {
    std::vector<std::vector<int>> out;
    if (band.empty) return out;
    std::vector<int> idx(5, band.lo);
    while (true) {
        std::vector<int> mags(10, band.lo);
        for (int k = 0; k < 5; ++k) mags[static_cast<std::size_t>(kRelevant[k])] = idx[static_cast<std::size_t>(k)];
        out.push_back(mags);
        int k = 4;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == band.hi) idx[static_cast<std::size_t>(k--)] = band.lo;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
    }
    return out;
}

std::vector<std::vector<int>> sampled_magnitudes(const MagnitudeBand& band, int count, std::uint64_t seed) {
    std::vector<std::vector<int>> out;
    if (band.empty) return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(band.lo, band.hi);
    for (int i = 0; i < count; ++i) {
        std::vector<int> mags(10);
        for (auto& m : mags) m = pick(rng);
        out.push_back(mags);
    }
    return out;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(n, 1));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

int SweepSection::failures() const {
    return static_cast<int>(std::count_if(results.begin(), results.end(), [](const SpecResult& r) { return !r.pass; }));
}

json SweepSection::to_json(bool full) const {
    json out = {{"name", name}, {"specs", results.size()}, {"failures", failures()}};
    auto first = std::find_if(results.begin(), results.end(), [](const SpecResult& r) { return !r.pass; });
    if (first != results.end()) {
        out["first_counterexample"] = {{"magnitudes", first->magnitudes}, {"failure", first->failure}, {"detail", first->detail}};
    } else {
        out["first_counterexample"] = nullptr;
    }
    if (full) {
        json matrix = json::array();
        for (const auto& r : results) matrix.push_back({{"magnitudes", r.magnitudes}, {"pass", r.pass}});
        out["matrix"] = matrix;
    }
    return out;
}

namespace {

template <typename F>
SweepSection run_section(const std::string& name, const std::vector<std::vector<int>>& specs, int threads, F&& check) {
    SweepSection s;
    s.name = name;
    s.results.resize(specs.size());
    parallel_for(specs.size(), threads, [&](std::size_t i) {
        SpecResult& r = s.results[i];
        r.magnitudes = specs[i];
        try {
            check(pattern_spec(specs[i]), r);
        } catch (const Error& e) {
            r.pass = false;
            r.failure = std::string(e.kind()) + ": " + e.what();
        }
    });
    return s;
}

void fail(SpecResult& r, const std::string& why) {
    if (r.pass) r.failure = why;
    r.pass = false;
}

}  // namespace

SweepSection inequality_sweep(const std::vector<std::vector<int>>& specs, int threads) {
    return run_section("inequalities", specs, threads, [](const TwistSpec& spec, SpecResult& r) {
        auto s = summary(transport(spec), spec);
        r.detail = {{"N", s.values}};
        if (!s.applicable) fail(r, "diagram does not resolve to four families");
        if (!s.positive) fail(r, "some N is not positive");
        if (!s.n1_gt_n2) fail(r, "N1 > N2 fails");
        if (!s.n2_lt_n3) fail(r, "N2 < N3 fails");
        if (!s.n3_gt_n4) fail(r, "N3 > N4 fails");
    });
}

SpecResult compare_counts(const TwistSpec& spec, const OracleConfig& cfg, bool corrupt_n2) {
    SpecResult r;
    WeightedDiagram d = resolve_crossings(transport(spec));
    if (corrupt_n2 && d.families.size() > 1) d.families[1].weight += Weight(1);
    auto predicted = predicted_axis_counts(d);
    auto lanes = predicted_lane_counts(d, spec);
    int b = spec.b;
    auto curve = reduce_minimal(axis_word(transport_explicit(spec, initial_boundary(b), cfg), b, cfg));
    auto arc = reduce_minimal(axis_word(transport_explicit(spec, initial_arc(b), cfg), b, cfg));
    auto seen = segment_counts(curve);
    auto arc_seen = segment_counts(arc);
    json segs = json::array();
    for (const auto& [s, w] : predicted) {
        auto want = w.evaluate(spec);
        auto got = seen[s];
        segs.push_back({{"segment", s}, {"predicted", want}, {"oracle", got}});
        if (want != got) fail(r, "segment " + std::to_string(s) + " count " + std::to_string(want) + " vs oracle " + std::to_string(got));
    }
    json rows = json::array();
    for (int j = 2; j <= b; ++j) {
        int s = 2 * j - 1;
        auto want = predicted[s].evaluate(spec);
        auto got = seen[s];
        auto lane_want = lanes[j];
        auto lane_got = arc_seen[s] + 1;
        rows.push_back({{"beta", j}, {"predicted", want}, {"oracle", got}, {"lanes_predicted", lane_want}, {"lanes_oracle", lane_got}});
        if (want != got) fail(r, "beta^" + std::to_string(j) + " count " + std::to_string(want) + " vs oracle " + std::to_string(got));
        if (lane_want != lane_got) {
            fail(r, "beta^" + std::to_string(j) + " lanes " + std::to_string(lane_want) + " vs oracle " + std::to_string(lane_got));
        }
    }
    r.detail = {{"counts", rows}, {"segments", segs}};
    return r;
}

SweepSection oracle_sweep(const std::vector<std::vector<int>>& specs, const OracleConfig& cfg, int threads) {
    return run_section("oracle", specs, threads, [&](const TwistSpec& spec, SpecResult& r) {
        auto c = compare_counts(spec, cfg);
        r.pass = c.pass;
        r.failure = c.failure;
        r.detail = c.detail;
    });
}

SweepSection labyrinth_sweep(const std::vector<std::vector<int>>& specs, const OracleConfig& cfg,
                             const CaseOptions& cases, int threads) {
    const std::map<Color, std::pair<int, int>> table = {
        {Color::brown, {3, 2}}, {Color::orange, {3, 4}}, {Color::purple, {4, 3}}};
    SweepSection s = run_section("labyrinth", specs, threads, [&](const TwistSpec& spec, SpecResult& r) {
        Labyrinth lab = analyze_labyrinth(spec, cfg);
        json lengths = json::object();
        for (Color c : kColors) {
            const auto& t = lab.track(c);
            lengths[color_name(c)] = t.entries.size();
            if (t.outermost() != table.at(c)) fail(r, color_name(c) + " outermost labels differ from the table");
            if (!t.palindrome()) fail(r, color_name(c) + " track is not a palindrome");
            if (!t.alternates()) fail(r, color_name(c) + " track does not alternate");
            if (track_by_reduction(lab, c).entries != t.entries) fail(r, color_name(c) + " track methods disagree");
        }
        auto cov = lanes_meet_tracks(lab);
        if (!cov.ok) fail(r, "some interior lane meets no track");
        json verdicts = json::object();
        for (int k = 1; k <= 3; ++k) {
            try {
                auto v = replay_case(k, lab, cases);
                verdicts[std::to_string(k)] = v.infeasible ? "infeasible" : "feasible";
                if (!v.infeasible) fail(r, "case " + std::to_string(k) + " admits a matching");
            } catch (const CaseInapplicable&) {
                verdicts[std::to_string(k)] = "inapplicable";
            }
        }
        r.detail = {{"lengths", lengths}, {"brown_fours", lab.track(Color::brown).has_fours()}, {"cases", verdicts}};
    });
    // track lengths never shrink when one magnitude grows
    std::map<std::vector<int>, const SpecResult*> by_mags;
    for (const auto& r : s.results) {
        if (r.detail.contains("lengths")) by_mags[r.magnitudes] = &r;
    }
    for (auto& r : s.results) {
        if (!r.detail.contains("lengths")) continue;
        for (std::size_t k = 0; k < 10; ++k) {
            auto up = r.magnitudes;
            ++up[k];
            auto it = by_mags.find(up);
            if (it == by_mags.end()) continue;
            for (Color c : kColors) {
                auto name = color_name(c);
                if (it->second->detail["lengths"][name].get<int>() < r.detail["lengths"][name].get<int>()) {
                    fail(r, name + " track shrinks when magnitude " + std::to_string(k) + " grows");
                }
            }
        }
    }
    return s;
}

bool SweepReport::pass() const {
    return std::all_of(sections.begin(), sections.end(), [](const SweepSection& s) { return s.failures() == 0; });
}

json SweepReport::to_json() const {
    json secs = json::array();
    for (const auto& s : sections) secs.push_back(s.to_json(s.name != "inequalities_sampled"));
    return {{"version", kReportVersion}, {"seed", seed}, {"pass", pass()}, {"sections", secs}};
}

SweepReport run_sweep(const RunConfig& cfg) {
    SweepReport rep;
    rep.seed = cfg.sweep.seed;
    int th = cfg.sweep.threads;
    auto ex = inequality_sweep(exhaustive_magnitudes(cfg.sweep.exhaustive), th);
    ex.name = "inequalities_exhaustive";
    rep.sections.push_back(std::move(ex));
    auto sm = inequality_sweep(sampled_magnitudes(cfg.sweep.sampled, cfg.sweep.samples, cfg.sweep.seed), th);
    sm.name = "inequalities_sampled";
    rep.sections.push_back(std::move(sm));
    rep.sections.push_back(oracle_sweep(exhaustive_magnitudes(cfg.sweep.oracle), cfg.oracle, th));
    rep.sections.push_back(labyrinth_sweep(exhaustive_magnitudes(cfg.sweep.labyrinth), cfg.oracle, cfg.cases, th));
    return rep;
}

}  // namespace platlab

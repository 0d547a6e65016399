#include "platlab/twist_calculus.hpp"

#include "platlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace platlab {

namespace {

constexpr double kTiny = 1e-9;
constexpr double kBaseMargin = 0.12;

std::string fmt_center(double c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace

std::string loop_name(LoopId l) { return "l" + std::to_string(l.level) + "_" + std::to_string(l.index); }

double MarkedSphere::center(LoopId l) const { return l.level % 2 == 0 ? 2 * l.index + 0.5 : 2 * l.index - 0.5; }

std::pair<int, int> MarkedSphere::punctures(LoopId l) const {
    int c = TwistSpec::region_column(l.level, l.index);
    return {c, c + 1};
}

std::vector<LoopId> MarkedSphere::loops(int level) const {
    std::vector<LoopId> out;
    for (int j = 1; j <= TwistSpec::row_length(level, b); ++j) out.push_back({level, j});
    return out;
}

std::pair<int, int> MarkedSphere::incident_segments(int p) const {
    int left = p == 1 ? omega() : p - 1;
    int right = p == 2 * b ? omega() : p;
    return {left, right};
}

std::string flag_name(Flag f) {
    switch (f) {
        case Flag::base: return "base";
        case Flag::under: return "under";
        case Flag::over: return "over";
    }
    return "?";
}

int Bundle::first_point() const { return static_cast<int>(std::ceil(center - radius + kTiny)); }
int Bundle::last_point() const { return static_cast<int>(std::floor(center + radius - kTiny)); }

WeightedDiagram base_diagram(int b, int first, int last, bool symbolic) {
    WeightedDiagram d;
    d.b = b;
    d.level = 1;
    d.symbolic = symbolic;
    Bundle base;
    base.name = "base";
    base.center = 0.5 * (first + last);
    base.radius = 0.5 * (last - first) + kBaseMargin;
    base.weight = Weight(1);
    base.flag = Flag::base;
    d.bundles.push_back(base);
    return d;
}

WeightedDiagram initial_diagram(int b, bool symbolic) { return base_diagram(b, 2 * b - 1, 2 * b, symbolic); }

Weight strands_through(const WeightedDiagram& d, LoopId disk) {
    if (disk.level != d.level + 1) {
        throw UnresolvedDiagram("diagram is at level " + std::to_string(d.level) + "; " + loop_name(disk) +
                                " is not on the next level");
    }
    MarkedSphere sphere{d.b};
    auto [p, q] = sphere.punctures(disk);
    Weight total;
    for (const auto& bd : d.bundles) {
        int hits = 0;
        for (double x : {bd.center - bd.radius, bd.center + bd.radius}) {
            if (x > p + kTiny && x < q - kTiny) ++hits;
        }
        if (hits > 0) total += Weight(hits) * bd.weight;
    }
    return total;
}

WeightedDiagram apply_level(const WeightedDiagram& d, int level, const TwistSpec& spec) {
    if (level != d.level + 1) {
        throw UnresolvedDiagram("cannot apply level " + std::to_string(level) + " to a diagram at level " +
                                std::to_string(d.level));
    }
    MarkedSphere sphere{d.b};
    WeightedDiagram out = d;
    out.level = level;
    out.resolved = false;
    out.families.clear();
    out.reroutes.clear();
    for (LoopId l : sphere.loops(level)) {
        int t = spec.at(l.level, l.index);
        if (t == 0) continue;
        Weight n = strands_through(d, l);
        if (n.is_zero()) continue;
        Bundle bd;
        bd.name = loop_name(l);
        bd.loop = l;
        bd.center = sphere.center(l);
        bd.weight = n * (d.symbolic ? Weight::var(l.level, l.index) : Weight(std::abs(t)));
        bd.flag = t > 0 ? Flag::under : Flag::over;
        bd.added_at_level = level;
        for (const auto& e : out.bundles) {
            if (e.loop && std::abs(e.center - bd.center) < kTiny) ++bd.depth;
        }
        int id = static_cast<int>(out.bundles.size());
        for (int k = 0; k < id; ++k) {
            const auto& e = out.bundles[static_cast<std::size_t>(k)];
            double dist = std::abs(e.center - bd.center);
            if (dist > std::abs(e.radius - bd.radius) + kTiny && dist < e.radius + bd.radius - kTiny) {
                out.crossings.push_back({id, k, t < 0, 2});
            }
        }
        out.log.push_back("level " + std::to_string(level) + ": " + bd.name + " weight " + bd.weight.str() + " " +
                          flag_name(bd.flag) + " depth " + std::to_string(bd.depth));
        out.bundles.push_back(bd);
    }
    return out;
}

ResolvedPair resolve_pair(const Weight& big, const Weight& small, const MagnitudeRanges& ranges) {
    Order o = compare(big, small, ranges);
    if (o == Order::less) {
        auto r = resolve_pair(small, big, ranges);
        r.first_larger = false;
        return r;
    }
    return {small, big - small, o == Order::greater};
}

WeightedDiagram resolve_crossings(const WeightedDiagram& d) {
    WeightedDiagram out = d;
    out.families.clear();
    out.reroutes.clear();
    std::map<std::pair<int, int>, int> family_of_key;
    std::vector<int> family_of(d.bundles.size());
    for (std::size_t k = 0; k < d.bundles.size(); ++k) {
        const auto& bd = d.bundles[k];
        std::pair<int, int> key{bd.first_point(), bd.last_point()};
        auto it = family_of_key.find(key);
        if (it == family_of_key.end()) {
            Family f;
            f.first_point = key.first;
            f.last_point = key.second;
            f.center = 0.5 * (key.first + key.second);
            it = family_of_key.emplace(key, static_cast<int>(out.families.size())).first;
            out.families.push_back(f);
        }
        auto& f = out.families[static_cast<std::size_t>(it->second)];
        if (!f.members.empty()) {
            out.log.push_back("merge " + bd.name + " into family about " + fmt_center(f.center));
        }
        f.members.push_back(static_cast<int>(k));
        f.weight += bd.weight;
        family_of[k] = it->second;
    }
    // order families left to right
    std::vector<int> order(out.families.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return out.families[static_cast<std::size_t>(a)].center < out.families[static_cast<std::size_t>(b)].center;
    });
    std::vector<int> rank(order.size());
    std::vector<Family> sorted;
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
        sorted.push_back(out.families[static_cast<std::size_t>(order[r])]);
    }
    out.families = sorted;
    for (auto& f : family_of) f = rank[static_cast<std::size_t>(f)];

    // over/under relation per family pair must be consistent across members
    std::map<std::pair<int, int>, int> over_of;
    for (const auto& c : d.crossings) {
        int fa = family_of[static_cast<std::size_t>(c.a)];
        int fb = family_of[static_cast<std::size_t>(c.b)];
        if (fa == fb) throw AmbiguousOrder("bundles of one family cross each other");
        int over = c.a_over ? fa : fb;
        std::pair<int, int> key{std::min(fa, fb), std::max(fa, fb)};
        auto [it, fresh] = over_of.emplace(key, over);
        if (!fresh && it->second != over) {
            throw AmbiguousOrder("families about " + fmt_center(out.families[static_cast<std::size_t>(fa)].center) +
                                 " and " + fmt_center(out.families[static_cast<std::size_t>(fb)].center) +
                                 " disagree on over/under after merging");
        }
    }
    for (const auto& [key, over] : over_of) {
        int under = key.first == over ? key.second : key.first;
        Rerouting r;
        r.under = under;
        r.over = over;
        r.under_weight = out.families[static_cast<std::size_t>(under)].weight;
        r.over_weight = out.families[static_cast<std::size_t>(over)].weight;
        auto p = resolve_pair(r.under_weight, r.over_weight, d.ranges);
        r.reroute = p.reroute;
        r.pass = p.pass;
        r.higher_under = p.first_larger;
        out.reroutes.push_back(r);
    }
    out.resolved = true;
    return out;
}

WeightedDiagram transport(const TwistSpec& spec, const TransportOptions& opts) {
    WeightedDiagram d = initial_diagram(spec.b, opts.symbolic);
    d.ranges = opts.ranges;
    for (int level = 2; level <= spec.h; ++level) d = apply_level(d, level, spec);
    return resolve_crossings(d);
}

LabyrinthSummary summary(const WeightedDiagram& in, const TwistSpec& spec) {
    WeightedDiagram d = in.resolved ? in : resolve_crossings(in);
    LabyrinthSummary s;
    for (const auto& f : d.families) {
        s.N.push_back(f.weight);
        s.values.push_back(f.weight.evaluate(spec));
    }
    s.applicable = s.N.size() == 4;
    s.positive = !s.values.empty() && std::all_of(s.values.begin(), s.values.end(), [](auto v) { return v > 0; });
    if (s.applicable) {
        s.n1_gt_n2 = s.values[0] > s.values[1];
        s.n2_lt_n3 = s.values[1] < s.values[2];
        s.n3_gt_n4 = s.values[2] > s.values[3];
        if (d.symbolic) {
            s.proved_positive = std::all_of(s.N.begin(), s.N.end(),
                                            [&](const Weight& w) { return provably_positive(w, d.ranges); });
            s.proved_inequalities = provably_positive(s.N[0] - s.N[1], d.ranges) &&
                                    provably_positive(s.N[2] - s.N[1], d.ranges) &&
                                    provably_positive(s.N[2] - s.N[3], d.ranges);
        }
    }
    return s;
}

std::map<int, Weight> predicted_axis_counts(const WeightedDiagram& in) {
    WeightedDiagram d = in.resolved ? in : resolve_crossings(in);
    MarkedSphere sphere{d.b};
    std::map<int, Weight> counts;
    for (int s = 1; s <= sphere.omega(); ++s) counts[s] = Weight();
    for (const auto& f : d.families) {
        int left = f.first_point == 1 ? sphere.omega() : f.first_point - 1;
        int right = f.last_point == sphere.point_count() ? sphere.omega() : f.last_point;
        counts[left] += f.weight;
        counts[right] += f.weight;
    }
    return counts;
}

std::map<int, std::int64_t> predicted_lane_counts(const WeightedDiagram& d, const TwistSpec& spec) {
    auto counts = predicted_axis_counts(d);
    auto perm = strand_permutation(spec);
    int n = 2 * spec.b;
    std::vector<int> inner = {perm[n - 1], perm[n]};
    std::map<int, std::int64_t> lanes;
    for (int j = 1; j <= spec.b; ++j) {
        int s = 2 * j - 1;
        std::int64_t c = counts[s].evaluate(spec);
        int ends = static_cast<int>(std::count(inner.begin(), inner.end(), s)) +
                   static_cast<int>(std::count(inner.begin(), inner.end(), s + 1));
        lanes[j] = (c - ends) / 2 + 1;
    }
    return lanes;
}

std::vector<BundleRow> dump_rows(const WeightedDiagram& d) {
    std::vector<BundleRow> rows;
    for (const auto& bd : d.bundles) {
        rows.push_back({bd.loop ? loop_name(*bd.loop) : bd.name, bd.weight.str(), flag_name(bd.flag), bd.depth});
    }
    return rows;
}

}  // namespace platlab

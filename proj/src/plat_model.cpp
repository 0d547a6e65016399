#include "platlab/plat_model.hpp"

#include "platlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

namespace platlab {

int TwistSpec::magnitude(int i, int j) const { return std::abs(at(i, j)); }

TwistSpec validate_spec(int h, int b, const TwistRows& rows, int n, bool raw) {
    if (h < 2) throw ShapeError("h must be at least 2, got " + std::to_string(h));
    if (b < 3) throw ShapeError("b must be at least 3, got " + std::to_string(b));
    for (const auto& [i, row] : rows) {
        if (i < 2 || i > h) throw ShapeError("row " + std::to_string(i) + " outside levels 2.." + std::to_string(h));
        (void)row;
    }
    TwistSpec spec;
    spec.h = h;
    spec.b = b;
    spec.raw = raw;
    spec.twistedness = n;
    int min_mag = -1;
    for (int i = 2; i <= h; ++i) {
        auto it = rows.find(i);
        if (it == rows.end()) throw ShapeError("missing row " + std::to_string(i));
        int want = TwistSpec::row_length(i, b);
        if (static_cast<int>(it->second.size()) != want) {
            throw ShapeError("row " + std::to_string(i) + " has " + std::to_string(it->second.size()) +
                             " entries, expected " + std::to_string(want));
        }
        for (int t : it->second) {
            if (t == 0 && !raw) throw TwistednessError("zero twist at level " + std::to_string(i));
            int m = std::abs(t);
            min_mag = min_mag < 0 ? m : std::min(min_mag, m);
        }
        spec.rows[i] = it->second;
    }
    spec.min_magnitude = min_mag;
    if (n > 0 && min_mag < n) {
        throw TwistednessError("some |t| = " + std::to_string(min_mag) + " < " + std::to_string(n));
    }
    spec.twisted = min_mag >= 2;
    if (h == 4) {
        bool ok = true;
        for (int t : spec.rows[2]) ok = ok && t > 0;
        for (int t : spec.rows[3]) ok = ok && t < 0;
        for (int t : spec.rows[4]) ok = ok && t > 0;
        spec.sign_pattern = ok;
        spec.family = spec.twisted && ok && b >= 3 && spec.at(2, 2) % 2 == 0 && spec.at(4, 2) % 2 == 0;
    }
    return spec;
}

TwistSpec uniform_spec(int m) {
    return validate_spec(4, 4, {{2, {m, m, m}}, {3, {-m, -m, -m, -m}}, {4, {m, m, m}}});
}

TwistSpec pattern_spec(const std::vector<int>& mag) {
    if (mag.size() != 10) throw ShapeError("pattern spec needs 10 magnitudes");
    return validate_spec(4, 4,
                         {{2, {mag[0], mag[1], mag[2]}},
                          {3, {-mag[3], -mag[4], -mag[5], -mag[6]}},
                          {4, {mag[7], mag[8], mag[9]}}});
}

std::vector<int> strand_permutation(const TwistSpec& spec) {
    int n = 2 * spec.b;
    // at[col] = strand (bottom column) currently at col
    std::vector<int> at(n + 1);
    std::iota(at.begin(), at.end(), 0);
    for (int i = 2; i <= spec.h; ++i) {
        for (int j = 1; j <= TwistSpec::row_length(i, spec.b); ++j) {
            if (spec.at(i, j) % 2 != 0) {
                int c = TwistSpec::region_column(i, j);
                std::swap(at[c], at[c + 1]);
            }
        }
    }
    std::vector<int> perm(n + 1, 0);
    for (int col = 1; col <= n; ++col) perm[at[col]] = col;
    return perm;
}

std::vector<std::pair<int, int>> bottom_caps(int b) {
    std::vector<std::pair<int, int>> caps;
    for (int k = 1; k <= b; ++k) caps.emplace_back(2 * k - 1, 2 * k);
    return caps;
}

std::vector<std::pair<int, int>> top_caps(int h, int b) {
    if (h % 2 == 0) return bottom_caps(b);
    std::vector<std::pair<int, int>> caps;
    for (int k = 1; k < b; ++k) caps.emplace_back(2 * k, 2 * k + 1);
    caps.emplace_back(1, 2 * b);
    return caps;
}

namespace {

std::vector<int> partner_table(const std::vector<std::pair<int, int>>& caps, int n) {
    std::vector<int> p(n + 1, 0);
    for (auto [a, c] : caps) {
        p[a] = c;
        p[c] = a;
    }
    return p;
}

struct Walk {
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;
    std::vector<std::vector<int>> order;  // per component: (strand, +1 up / -1 down) encoded as strand * dir
};

Walk walk_components(int h, int b, const std::vector<int>& perm) {
    int n = 2 * b;
    std::vector<int> inv(n + 1, 0);
    for (int k = 1; k <= n; ++k) inv[perm[k]] = k;
    auto bottom = partner_table(bottom_caps(b), n);
    auto top = partner_table(top_caps(h, b), n);
    Walk w;
    w.component_of.assign(n + 1, -1);
    for (int start = 1; start <= n; ++start) {
        if (w.component_of[start] >= 0) continue;
        int id = static_cast<int>(w.components.size());
        std::vector<int> pts;
        std::vector<int> order;
        int p = start;
        do {
            // up along strand p, across the top cap, down the partner strand
            order.push_back(p);
            int q = inv[top[perm[p]]];
            order.push_back(-q);
            w.component_of[p] = id;
            w.component_of[q] = id;
            pts.push_back(p);
            pts.push_back(q);
            p = bottom[q];
        } while (p != start);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        w.components.push_back(pts);
        w.order.push_back(order);
    }
    return w;
}

}  // namespace

std::vector<std::vector<int>> component_partition(const TwistSpec& spec) {
    auto w = walk_components(spec.h, spec.b, strand_permutation(spec));
    auto parts = w.components;
    std::sort(parts.begin(), parts.end());
    return parts;
}

namespace {

// Builds the diagram for a braid given as (level rows) over 2b columns.
LinkDiagram assemble(int h, int b, const std::vector<std::tuple<int, int, int, int>>& regions,
                     const std::vector<int>& perm) {
    int n = 2 * b;
    LinkDiagram d;
    d.h = h;
    d.b = b;
    std::vector<int> at(n + 1);
    std::iota(at.begin(), at.end(), 0);
    // crossings met by each strand going up
    std::vector<std::vector<StrandVisit>> up(n + 1);
    for (auto [level, j, col, t] : regions) {
        int m = std::abs(t);
        int sign = t > 0 ? 1 : -1;
        for (int k = 1; k <= m; ++k) {
            Crossing c;
            c.level = level;
            c.region = j;
            c.index = k;
            c.sign = sign;
            c.left_strand = at[col];
            c.right_strand = at[col + 1];
            c.left_over = sign > 0;
            int id = static_cast<int>(d.crossings.size());
            d.crossings.push_back(c);
            up[c.left_strand].push_back({id, c.left_over});
            up[c.right_strand].push_back({id, !c.left_over});
            std::swap(at[col], at[col + 1]);
        }
    }
    auto w = walk_components(h, b, perm);
    d.components = w.components;
    d.component_of = w.component_of;
    for (const auto& order : w.order) {
        std::vector<StrandVisit> trav;
        for (int s : order) {
            if (s > 0) {
                trav.insert(trav.end(), up[s].begin(), up[s].end());
            } else {
                trav.insert(trav.end(), up[-s].rbegin(), up[-s].rend());
            }
            d.endpoints_matched += 2;
        }
        d.traversal.push_back(trav);
    }
    return d;
}

}  // namespace

LinkDiagram build_diagram(const TwistSpec& spec) {
    std::vector<std::tuple<int, int, int, int>> regions;
    for (int i = 2; i <= spec.h; ++i) {
        for (int j = 1; j <= TwistSpec::row_length(i, spec.b); ++j) {
            if (spec.at(i, j) != 0) regions.emplace_back(i, j, TwistSpec::region_column(i, j), spec.at(i, j));
        }
    }
    return assemble(spec.h, spec.b, regions, strand_permutation(spec));
}

LinkDiagram single_region_diagram(int t) {
    std::vector<int> perm = {0, 1, 2};
    if (t % 2 != 0) std::swap(perm[1], perm[2]);
    return assemble(2, 1, {{2, 1, 1, t}}, perm);
}

bool is_alternating(const LinkDiagram& d) {
    for (const auto& trav : d.traversal) {
        std::size_t n = trav.size();
        for (std::size_t k = 0; k < n; ++k) {
            if (trav[k].over == trav[(k + 1) % n].over && n > 1) return false;
        }
    }
    return true;
}

bool is_split_diagram(const LinkDiagram& d) {
    std::size_t nc = d.components.size();
    if (nc < 2) return false;
    std::vector<std::size_t> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : d.crossings) {
        auto a = static_cast<std::size_t>(d.component_of[c.left_strand]);
        auto b = static_cast<std::size_t>(d.component_of[c.right_strand]);
        parent[find(a)] = find(b);
    }
    for (std::size_t k = 1; k < nc; ++k) {
        if (find(k) != find(0)) return true;
    }
    return false;
}

int subdiagram_crossings(const LinkDiagram& d, const std::vector<int>& ids) {
    auto in = [&](int strand) {
        return std::find(ids.begin(), ids.end(), d.component_of[strand]) != ids.end();
    };
    int count = 0;
    for (const auto& c : d.crossings) {
        if (in(c.left_strand) && in(c.right_strand)) ++count;
    }
    return count;
}

FamilyReport family_membership(const TwistSpec& spec) {
    FamilyReport r;
    if (spec.h != 4) r.reasons.push_back("h != 4");
    if (!spec.twisted) r.reasons.push_back("not 2-twisted");
    if (!spec.sign_pattern) r.reasons.push_back("sign pattern violated");
    if (spec.h == 4) {
        r.t22 = spec.at(2, 2);
        r.t42 = spec.at(4, 2);
        if (r.t22 % 2 != 0) r.reasons.push_back("t_2^2 odd");
        if (r.t42 % 2 != 0) r.reasons.push_back("t_4^2 odd");
    }
    r.member = r.reasons.empty();
    auto d = build_diagram(spec);
    r.component_count = static_cast<int>(d.components.size());
    for (int k = 0; k < r.component_count; ++k) r.component_crossings.push_back(subdiagram_crossings(d, {k}));
    std::vector<int> left;
    for (int p = 1; p <= spec.b; ++p) {
        int c = d.component_of[p];
        if (std::find(left.begin(), left.end(), c) == left.end()) left.push_back(c);
    }
    r.l1_crossings = subdiagram_crossings(d, left);
    int n = 2 * spec.b;
    r.separated = d.component_of[1] != d.component_of[n] && d.component_of[2] != d.component_of[n - 1] &&
                  d.component_of[1] != d.component_of[n - 1] && d.component_of[2] != d.component_of[n];
    return r;
}

}  // namespace platlab

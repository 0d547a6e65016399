#include "platlab/curve_oracle.hpp"

#include "platlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace platlab {

AxisWord axis_word(const PlanarCurve& c, int b, const OracleConfig& cfg) {
    AxisWord w;
    w.b = b;
    w.closed = c.closed;
    std::size_t n = c.pts.size();
    int omega = 2 * b;
    auto hit_at = [&](Point p, Point q) {
        double x = p.x + (q.x - p.x) * (0.0 - p.y) / (q.y - p.y);
        double k = std::round(x);
        if (std::abs(x - k) < cfg.epsilon && k >= 1 && k <= omega) {
            throw DegenerateSubdivision("curve " + c.name + " crosses the axis at marked point " +
                                        std::to_string(static_cast<int>(k)));
        }
        int s = (x < 1 || x > omega) ? omega : static_cast<int>(std::floor(x));
        w.hits.push_back({s, q.y > 0 ? 1 : -1});
    };
    if (c.closed) {
        for (std::size_t a = 0; a < n; ++a) {
            Point p = c.pts[a], q = c.pts[(a + 1) % n];
            if ((p.y > 0) != (q.y > 0)) hit_at(p, q);
        }
        return w;
    }
    if (n < 3) throw DegenerateSubdivision("open curve " + c.name + " needs an interior vertex");
    w.start_point = static_cast<int>(std::lround(c.pts.front().x));
    w.end_point = static_cast<int>(std::lround(c.pts.back().x));
    w.start_side = c.pts[1].y > 0 ? 1 : -1;
    for (std::size_t a = 1; a + 2 < n; ++a) {
        Point p = c.pts[a], q = c.pts[a + 1];
        if ((p.y > 0) != (q.y > 0)) hit_at(p, q);
    }
    return w;
}

namespace {

bool incident(int segment, int point, int b) {
    int omega = 2 * b;
    int left = point == 1 ? omega : point - 1;
    int right = point == omega ? omega : point;
    return segment == left || segment == right;
}

void trim_ends(AxisWord& w) {
    bool changed = true;
    while (changed && !w.hits.empty()) {
        changed = false;
        if (incident(w.hits.front().segment, w.start_point, w.b)) {
            w.start_side = w.hits.front().dir;
            w.hits.erase(w.hits.begin());
            changed = true;
            continue;
        }
        if (incident(w.hits.back().segment, w.end_point, w.b)) {
            w.hits.pop_back();
            changed = true;
        }
    }
}

}  // namespace

AxisWord reduce_minimal(const AxisWord& w) {
    AxisWord out = w;
    std::vector<AxisHit> st;
    st.reserve(w.hits.size());
    for (const auto& h : w.hits) {
        if (!st.empty() && st.back().segment == h.segment) {
            st.pop_back();
        } else {
            st.push_back(h);
        }
    }
    if (w.closed) {
        std::size_t lo = 0, hi = st.size();
        while (hi - lo >= 2 && st[lo].segment == st[hi - 1].segment) {
            ++lo;
            --hi;
        }
        out.hits.assign(st.begin() + static_cast<std::ptrdiff_t>(lo), st.begin() + static_cast<std::ptrdiff_t>(hi));
    } else {
        out.hits = st;
        trim_ends(out);
    }
    return out;
}

AxisWord reduce_random_order(const AxisWord& w, std::mt19937_64& rng) {
    AxisWord out = w;
    auto& h = out.hits;
    while (true) {
        std::vector<std::size_t> moves;  // index of the first letter of a removable pair
        std::size_t n = h.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (h[i].segment == h[i + 1].segment) moves.push_back(i);
        }
        if (w.closed && n >= 2 && h[n - 1].segment == h[0].segment) moves.push_back(n - 1);
        // end trims are encoded past the pair moves
        std::size_t pairs = moves.size();
        if (!w.closed && n > 0) {
            if (incident(h.front().segment, out.start_point, out.b)) moves.push_back(n + 1);
            if (incident(h.back().segment, out.end_point, out.b)) moves.push_back(n + 2);
        }
        if (moves.empty()) break;
        std::size_t pick = std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng);
        std::size_t m = moves[pick];
        if (pick >= pairs) {
            if (m == n + 1) {
                out.start_side = h.front().dir;
                h.erase(h.begin());
            } else {
                h.pop_back();
            }
        } else if (m == n - 1) {  // wraps around a closed word
            h.pop_back();
            h.erase(h.begin());
        } else {
            h.erase(h.begin() + static_cast<std::ptrdiff_t>(m), h.begin() + static_cast<std::ptrdiff_t>(m + 2));
        }
    }
    return out;
}

bool same_cyclic_word(const AxisWord& a, const AxisWord& b) {
    if (a.hits.size() != b.hits.size()) return false;
    std::size_t n = a.hits.size();
    if (n == 0) return true;
    for (std::size_t r = 0; r < n; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = a.hits[i] == b.hits[(i + r) % n];
        if (ok) return true;
    }
    return false;
}

std::map<int, int> segment_counts(const AxisWord& w) {
    std::map<int, int> counts;
    for (int s = 1; s <= 2 * w.b; ++s) counts[s] = 0;
    for (const auto& h : w.hits) ++counts[h.segment];
    return counts;
}

std::vector<AxisHit> restrict_word(const AxisWord& w, const std::vector<int>& segments) {
    std::vector<AxisHit> out;
    for (const auto& h : w.hits) {
        if (std::find(segments.begin(), segments.end(), h.segment) != segments.end()) out.push_back(h);
    }
    return out;
}

int adjacent_repeats(const std::vector<AxisHit>& hits) {
    int count = 0;
    std::size_t n = hits.size();
    if (n < 2) return 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (hits[i].segment == hits[(i + 1) % n].segment) ++count;
    }
    return count;
}

}  // namespace platlab

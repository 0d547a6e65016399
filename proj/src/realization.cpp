#include "platlab/curve_oracle.hpp"

#include "platlab/errors.hpp"

#include <algorithm>
#include <functional>

namespace platlab {

namespace {

struct Occ {
    int curve;
    int hit;
};

class Comparator {
public:
    Comparator(const std::vector<AxisWord>& words, int b) : words_(words), omega_(2 * b) {}

    // +1 if a lies after b on their common segment, -1 if before.
    int operator()(Occ a, Occ b) const {
        const auto& wa = words_[static_cast<std::size_t>(a.curve)].hits;
        const auto& wb = words_[static_cast<std::size_t>(b.curve)].hits;
        int la = static_cast<int>(wa.size()), lb = static_cast<int>(wb.size());
        int da = wa[static_cast<std::size_t>(a.hit)].dir > 0 ? 1 : -1;
        int db = wb[static_cast<std::size_t>(b.hit)].dir > 0 ? 1 : -1;
        int pa = a.hit, pb = b.hit;
        int s = wa[static_cast<std::size_t>(a.hit)].segment;
        int sigma = 1, half = 1;
        for (int step = 0; step < la + lb + 2; ++step) {
            int na = ((pa + da) % la + la) % la;
            int nb = ((pb + db) % lb + lb) % lb;
            int ta = wa[static_cast<std::size_t>(na)].segment;
            int tb = wb[static_cast<std::size_t>(nb)].segment;
            if (ta == tb) {
                sigma = -sigma;
                pa = na;
                pb = nb;
                s = ta;
                half = -half;
                continue;
            }
            int o;
            if (half > 0) {
                o = dist(s, ta) < dist(s, tb) ? 1 : -1;
            } else {
                o = dist(ta, s) < dist(tb, s) ? -1 : 1;
            }
            return sigma * o;
        }
        if (a.curve == b.curve) throw DegenerateSubdivision("curve runs parallel to itself");
        // parallel copies: the higher-indexed curve sits to the left of the lower one
        if (a.curve < b.curve) return wa[static_cast<std::size_t>(a.hit)].dir > 0 ? 1 : -1;
        return wb[static_cast<std::size_t>(b.hit)].dir > 0 ? -1 : 1;
    }

private:
    int dist(int from, int to) const { return ((to - from) % omega_ + omega_) % omega_; }
    const std::vector<AxisWord>& words_;
    int omega_;
};

void merge_sort(std::vector<Occ>& v, const std::function<bool(Occ, Occ)>& before) {
    if (v.size() < 2) return;
    std::vector<Occ> tmp(v.size());
    for (std::size_t width = 1; width < v.size(); width *= 2) {
        for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
            std::size_t mid = std::min(lo + width, v.size()), hi = std::min(lo + 2 * width, v.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) tmp[k++] = before(v[j], v[i]) ? v[j++] : v[i++];
            while (i < mid) tmp[k++] = v[i++];
            while (j < hi) tmp[k++] = v[j++];
        }
        v.swap(tmp);
    }
}

bool laminar(std::vector<std::pair<long long, long long>> iv) {
    for (auto& p : iv) {
        if (p.first > p.second) std::swap(p.first, p.second);
    }
    std::sort(iv.begin(), iv.end());
    std::vector<long long> stack;
    for (auto [l, r] : iv) {
        while (!stack.empty() && stack.back() < l) stack.pop_back();
        if (!stack.empty() && stack.back() < r) return false;
        stack.push_back(r);
    }
    return true;
}

}  // namespace

Realization realize(const std::vector<AxisWord>& words) {
    Realization R;
    R.b = words.empty() ? 4 : words.front().b;
    R.curves = words;
    Comparator cmp(R.curves, R.b);
    std::map<int, std::vector<Occ>> by_seg;
    R.rank.resize(words.size());
    for (std::size_t c = 0; c < words.size(); ++c) {
        if (!words[c].closed) throw DegenerateSubdivision("realization expects closed curves");
        R.rank[c].assign(words[c].hits.size(), 0);
        for (std::size_t i = 0; i < words[c].hits.size(); ++i) {
            by_seg[words[c].hits[i].segment].push_back({static_cast<int>(c), static_cast<int>(i)});
        }
    }
    for (auto& [s, occ] : by_seg) {
        merge_sort(occ, [&](Occ x, Occ y) { return cmp(x, y) < 0; });
        auto& list = R.on_segment[s];
        for (std::size_t r = 0; r < occ.size(); ++r) {
            list.emplace_back(occ[r].curve, occ[r].hit);
            R.rank[static_cast<std::size_t>(occ[r].curve)][static_cast<std::size_t>(occ[r].hit)] = static_cast<int>(r);
        }
    }
    const long long big = 1LL << 32;
    for (int half : {1, -1}) {
        std::vector<std::pair<long long, long long>> arcs;
        for (std::size_t c = 0; c < words.size(); ++c) {
            const auto& h = words[c].hits;
            std::size_t n = h.size();
            for (std::size_t i = 0; i < n; ++i) {
                if (h[i].dir != half) continue;
                std::size_t j = (i + 1) % n;
                long long a = h[i].segment * big + R.rank[c][i];
                long long bpos = h[j].segment * big + R.rank[c][j];
                arcs.emplace_back(a, bpos);
            }
        }
        if (!laminar(arcs)) return R;
    }
    R.planar = true;
    return R;
}

bool disjoint_from_segment(const PlanarCurve& c, int segment, int b, const OracleConfig& cfg) {
    auto w = reduce_minimal(axis_word(c, b, cfg));
    return segment_counts(w)[segment] == 0;
}

bool disjointness(const PlanarCurve& c1, const PlanarCurve& c2, int b, const OracleConfig& cfg) {
    auto w1 = reduce_minimal(axis_word(c1, b, cfg));
    auto w2 = reduce_minimal(axis_word(c2, b, cfg));
    if (w1.hits.empty() || w2.hits.empty()) return true;
    return realize({w1, w2}).planar;
}

}  // namespace platlab

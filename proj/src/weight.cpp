#include "platlab/weight.hpp"

#include "platlab/errors.hpp"
#include "platlab/plat_model.hpp"

#include <algorithm>
#include <set>

namespace platlab {

std::string var_name(int var) { return "m" + std::to_string(var / 100) + "_" + std::to_string(var % 100); }

Weight::Weight(std::int64_t c) {
    if (c != 0) terms_[{}] = c;
}

Weight Weight::var(int i, int j) {
    Weight w;
    w.terms_[{{magnitude_var(i, j), 1}}] = 1;
    return w;
}

Weight Weight::signed_var(const TwistSpec& spec, int i, int j) {
    return Weight(spec.at(i, j) > 0 ? 1 : -1) * var(i, j);
}

void Weight::add_term(const Monomial& m, std::int64_t c) {
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    r += o;
    return r;
}

Weight& Weight::operator+=(const Weight& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Weight Weight::operator-(const Weight& o) const { return *this + Weight(-1) * o; }

Weight Weight::operator*(const Weight& o) const {
    Weight r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            std::map<int, int> e;
            for (auto [v, k] : ma) e[v] += k;
            for (auto [v, k] : mb) e[v] += k;
            r.add_term(Monomial(e.begin(), e.end()), ca * cb);
        }
    }
    return r;
}

bool Weight::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

std::int64_t Weight::constant() const {
    auto it = terms_.find({});
    return it == terms_.end() ? 0 : it->second;
}

std::vector<int> Weight::variables() const {
    std::set<int> vs;
    for (const auto& [m, c] : terms_) {
        for (auto [v, k] : m) vs.insert(v);
    }
    return {vs.begin(), vs.end()};
}

std::int64_t Weight::evaluate(const std::map<int, std::int64_t>& values) const {
    std::int64_t total = 0;
    for (const auto& [m, c] : terms_) {
        std::int64_t p = c;
        for (auto [v, k] : m) {
            for (int e = 0; e < k; ++e) p *= values.at(v);
        }
        total += p;
    }
    return total;
}

std::int64_t Weight::evaluate(const TwistSpec& spec) const {
    std::map<int, std::int64_t> values;
    for (int v : variables()) values[v] = spec.magnitude(v / 100, v % 100);
    return evaluate(values);
}

namespace {

int degree(const Weight::Monomial& m) {
    int d = 0;
    for (auto [v, k] : m) d += k;
    return d;
}

}  // namespace

std::string Weight::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, std::int64_t>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        int da = degree(a.first), db = degree(b.first);
        if (da != db) return da > db;
        return a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : order) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        for (auto [v, k] : m) {
            for (int e = 0; e < k; ++e) body += (body.empty() ? "" : "*") + var_name(v);
        }
        if (body.empty()) {
            out += std::to_string(mag);
        } else if (mag != 1) {
            out += std::to_string(mag) + "*" + body;
        } else {
            out += body;
        }
    }
    return out;
}

const MagnitudeRange& MagnitudeRanges::of(int var) const {
    auto it = per_var.find(var);
    return it == per_var.end() ? fallback : it->second;
}

namespace {

// Substitutes m_v = lo_v + x_v for every variable.
Weight shifted(const Weight& w, const MagnitudeRanges& ranges) {
    Weight out;
    for (const auto& [m, c] : w.terms()) {
        Weight term(c);
        for (auto [v, k] : m) {
            Weight factor = Weight(ranges.of(v).lo);
            Weight x;
            x += Weight::var(v / 100, v % 100);
            factor += x;
            for (int e = 0; e < k; ++e) term = term * factor;
        }
        out += term;
    }
    return out;
}

int uniform_sign(const Weight& w) {
    bool pos = false, neg = false;
    for (const auto& [m, c] : w.terms()) {
        (c > 0 ? pos : neg) = true;
    }
    std::int64_t c0 = w.constant();
    if (pos && !neg && c0 > 0) return 1;
    if (neg && !pos && c0 < 0) return -1;
    return 0;
}

struct Interval {
    double lo, hi;
};

Interval interval_eval(const Weight& w, const MagnitudeRanges& ranges) {
    Interval total{0, 0};
    for (const auto& [m, c] : w.terms()) {
        Interval p{static_cast<double>(c), static_cast<double>(c)};
        for (auto [v, k] : m) {
            const auto& r = ranges.of(v);
            for (int e = 0; e < k; ++e) {
                double a = p.lo * static_cast<double>(r.lo), b = p.lo * static_cast<double>(r.hi);
                double cc = p.hi * static_cast<double>(r.lo), d = p.hi * static_cast<double>(r.hi);
                p = {std::min({a, b, cc, d}), std::max({a, b, cc, d})};
            }
        }
        total = {total.lo + p.lo, total.hi + p.hi};
    }
    return total;
}

int decide(const Weight& d, const MagnitudeRanges& ranges) {
    if (d.is_zero()) return 0;
    if (d.is_constant()) return d.constant() > 0 ? 1 : -1;
    int s = uniform_sign(shifted(d, ranges));
    if (s != 0) return s;
    bool bounded = true;
    for (int v : d.variables()) bounded = bounded && ranges.of(v).bounded();
    if (bounded) {
        auto iv = interval_eval(d, ranges);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
    }
    return 2;
}

}  // namespace

Order compare(const Weight& a, const Weight& b, const MagnitudeRanges& ranges) {
    Weight d = a - b;
    int s = decide(d, ranges);
    if (s == 2) throw AmbiguousOrder("cannot order " + a.str() + " against " + b.str() + " over the declared ranges");
    if (s == 0) return Order::equal;
    return s > 0 ? Order::greater : Order::less;
}

bool provably_positive(const Weight& w, const MagnitudeRanges& ranges) { return decide(w, ranges) == 1; }

}  // namespace platlab

#include "platlab/curve_oracle.hpp"

#include "platlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace platlab {

PlanarCurve neighbourhood_circle(int first, int last, double margin, int samples, double phase) {
    PlanarCurve c;
    c.name = "circle[" + std::to_string(first) + "," + std::to_string(last) + "]";
    double cx = 0.5 * (first + last);
    double r = 0.5 * (last - first) + margin;
    for (int a = 0; a < samples; ++a) {
        double th = 2 * std::numbers::pi * a / samples + phase;
        c.pts.push_back({cx + r * std::cos(th), r * std::sin(th)});
    }
    return c;
}

PlanarCurve initial_boundary(int b) {
    auto c = neighbourhood_circle(2 * b - 1, 2 * b, 0.12);
    c.name = "boundary_B'";
    return c;
}

PlanarCurve initial_arc(int b) {
    PlanarCurve c;
    c.name = "beta'";
    c.closed = false;
    const int n = 40;
    for (int a = 0; a <= n; ++a) {
        double s = static_cast<double>(a) / n;
        c.pts.push_back({2 * b - 1 + s, a == 0 || a == n ? 0.0 : 0.1 * std::sin(std::numbers::pi * s)});
    }
    return c;
}

PlanarCurve lower_disk_boundary() {
    auto c = neighbourhood_circle(1, 2, 0.12);
    c.name = "boundary_B";
    return c;
}

namespace {

constexpr double kChordTolerance = 0.05;
constexpr int kMaxRefineDepth = 16;

double dist_to_segment(Point p, Point q, double cx, double cy) {
    double dx = q.x - p.x, dy = q.y - p.y;
    double L2 = dx * dx + dy * dy;
    double t = L2 > 0 ? ((cx - p.x) * dx + (cy - p.y) * dy) / L2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x + t * dx - cx, p.y + t * dy - cy);
}

Point twist_point(Point p, double center, int k, const OracleConfig& cfg) {
    const double rl = MarkedSphere::loop_radius;
    double x = p.x - center, y = p.y;
    double r = std::hypot(x, y);
    if (r <= cfg.core_radius) {
        if (k % 2 == 0) return p;
        return {center - x, -y};
    }
    if (r >= rl) return p;
    double ang = k * std::numbers::pi * (1.0 - (r - cfg.core_radius) / (rl - cfg.core_radius));
    double ca = std::cos(ang), sa = std::sin(ang);
    return {center + ca * x - sa * y, sa * x + ca * y};
}

}  // namespace

PlanarCurve half_twist(const PlanarCurve& c, double center, int k, const OracleConfig& cfg) {
    if (k == 0) return c;
    const double rl = MarkedSphere::loop_radius;
    const double step = cfg.step / std::abs(k);
    std::size_t n = c.pts.size();
    std::size_t segs = c.closed ? n : (n == 0 ? 0 : n - 1);
    std::vector<Point> fine;
    fine.reserve(n * 2);
    // emits the image of a and of enough interior points that every image
    // chord stays within tol of the true image arc
    const double tol = cfg.step * kChordTolerance;
    std::function<void(Point, Point, int)> refine = [&](Point a, Point z, int depth) {
        Point fa = twist_point(a, center, k, cfg), fz = twist_point(z, center, k, cfg);
        Point mid{0.5 * (a.x + z.x), 0.5 * (a.y + z.y)};
        Point fm = twist_point(mid, center, k, cfg);
        if (depth < kMaxRefineDepth && dist_to_segment(fa, fz, fm.x, fm.y) > tol) {
            refine(a, mid, depth + 1);
            refine(mid, z, depth + 1);
            return;
        }
        fine.push_back(fa);
    };
    for (std::size_t a = 0; a < segs; ++a) {
        Point p = c.pts[a], q = c.pts[(a + 1) % n];
        bool pinned_p = !c.closed && a == 0;
        bool pinned_q = !c.closed && a + 1 == n - 1;
        for (double px : {center - 0.5, center + 0.5}) {
            bool at_end = (pinned_p && std::hypot(p.x - px, p.y) < cfg.epsilon) ||
                          (pinned_q && std::hypot(q.x - px, q.y) < cfg.epsilon);
            if (!at_end && dist_to_segment(p, q, px, 0.0) < cfg.epsilon) {
                throw TangencyError("curve " + c.name + " touches the puncture at " + std::to_string(px));
            }
        }
        int m = 1;
        if (dist_to_segment(p, q, center, 0.0) < rl + cfg.epsilon) {
            double L = std::hypot(q.x - p.x, q.y - p.y);
            m = std::max(1, static_cast<int>(std::ceil(L / step)));
        }
        for (int s = 0; s < m; ++s) {
            double t0 = static_cast<double>(s) / m, t1 = static_cast<double>(s + 1) / m;
            Point a{p.x + (q.x - p.x) * t0, p.y + (q.y - p.y) * t0};
            Point z{p.x + (q.x - p.x) * t1, p.y + (q.y - p.y) * t1};
            refine(a, z, 0);
        }
    }
    if (!c.closed && n > 0) fine.push_back(twist_point(c.pts.back(), center, k, cfg));
    PlanarCurve out;
    out.name = c.name;
    out.closed = c.closed;
    out.pts = std::move(fine);
    if (!c.closed && !out.pts.empty()) {
        for (Point* e : {&out.pts.front(), &out.pts.back()}) *e = {std::round(e->x), 0.0};
    }
    return out;
}

PlanarCurve half_twist(const PlanarCurve& c, const MarkedSphere& sphere, LoopId l, int k, const OracleConfig& cfg) {
    return half_twist(c, sphere.center(l), k, cfg);
}

PlanarCurve transport_explicit(const TwistSpec& spec, const PlanarCurve& c, const OracleConfig& cfg, int upto) {
    MarkedSphere sphere{spec.b};
    int last = upto > 0 ? upto : spec.h;
    PlanarCurve cur = c;
    for (int level = 2; level <= last; ++level) {
        for (LoopId l : sphere.loops(level)) {
            int t = spec.at(l.level, l.index);
            if (std::abs(t) > cfg.magnitude_budget) {
                throw BudgetExceeded("|t| = " + std::to_string(std::abs(t)) + " exceeds the magnitude budget " +
                                     std::to_string(cfg.magnitude_budget));
            }
            cur = half_twist(cur, sphere, l, t, cfg);
            if (cur.pts.size() > cfg.vertex_cap) {
                throw BudgetExceeded("vertex count " + std::to_string(cur.pts.size()) + " exceeds cap " +
                                     std::to_string(cfg.vertex_cap));
            }
        }
    }
    return cur;
}

std::vector<int> track_marked_points(const TwistSpec& spec, const OracleConfig& cfg) {
    MarkedSphere sphere{spec.b};
    int n = 2 * spec.b;
    std::vector<int> perm(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        Point p{static_cast<double>(k), 0.0};
        for (int level = 2; level <= spec.h; ++level) {
            for (LoopId l : sphere.loops(level)) p = twist_point(p, sphere.center(l), spec.at(l.level, l.index), cfg);
        }
        perm[k] = static_cast<int>(std::lround(p.x));
    }
    return perm;
}

}  // namespace platlab

#include "platlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace platlab {

namespace {

constexpr double kScale = 60.0;
constexpr double kPi = 3.14159265358979323846;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') {
            out += "&lt;";
        } else if (c == '>') {
            out += "&gt;";
        } else if (c == '&') {
            out += "&amp;";
        } else {
            out += c;
        }
    }
    return out;
}

// Plane coordinates to SVG: y flips, x offset by one unit.
struct Frame {
    double x0;
    double x1;
    double half_height;
    double px(double x) const { return (x - x0) * kScale; }
    double py(double y) const { return (half_height - y) * kScale; }
    std::string open() const {
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num((x1 - x0) * kScale)
           << "\" height=\"" << num(2 * half_height * kScale) << "\" viewBox=\"0 0 " << num((x1 - x0) * kScale) << " "
           << num(2 * half_height * kScale) << "\">\n"
           << "<rect id=\"background\" x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        return os.str();
    }
};

void axis(std::ostringstream& os, const Frame& f, int b) {
    os << "<line id=\"axis\" x1=\"" << num(f.px(f.x0)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.px(f.x1))
       << "\" y2=\"" << num(f.py(0)) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    os << "<g id=\"beta-arcs\">\n";
    for (int j = 1; j <= b; ++j) {
        os << "<line id=\"beta-" << j << "\" x1=\"" << num(f.px(2 * j - 1)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\""
           << num(f.px(2 * j)) << "\" y2=\"" << num(f.py(0)) << "\" stroke=\"#333333\" stroke-width=\"3\"/>\n";
    }
    os << "</g>\n";
}

void marked_points(std::ostringstream& os, const Frame& f, int b) {
    os << "<g id=\"marked-points\">\n";
    for (int k = 1; k <= 2 * b; ++k) {
        os << "<circle id=\"point-" << k << "\" cx=\"" << num(f.px(k)) << "\" cy=\"" << num(f.py(0))
           << "\" r=\"4\" fill=\"black\"/>\n";
        os << "<text x=\"" << num(f.px(k)) << "\" y=\"" << num(f.py(-0.3)) << "\" font-size=\"12\" text-anchor=\"middle\">"
           << k << "</text>\n";
    }
    os << "</g>\n";
}

void boxed_label(std::ostringstream& os, const Frame& f, double x, double y, const std::string& text) {
    double w = 8.0 + 7.0 * static_cast<double>(text.size());
    os << "<rect x=\"" << num(f.px(x) - w / 2) << "\" y=\"" << num(f.py(y) - 9) << "\" width=\"" << num(w)
       << "\" height=\"18\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.py(y) + 4) << "\" font-size=\"12\" text-anchor=\"middle\">"
       << escape(text) << "</text>\n";
}

const char* flag_stroke(Flag fl) {
    switch (fl) {
        case Flag::base: return "#000000";
        case Flag::under: return "#1f77b4";
        case Flag::over: return "#d62728";
    }
    return "#000000";
}

}  // namespace

std::string render_weighted_diagram(const WeightedDiagram& d) {
    Frame f{0.0, 2.0 * d.b + 1.0, d.b / 2.0 + 1.0};
    std::ostringstream os;
    os << f.open();
    axis(os, f, d.b);
    if (d.resolved) {
        os << "<g id=\"families\">\n";
        for (std::size_t k = 0; k < d.families.size(); ++k) {
            const auto& fam = d.families[k];
            double r = (fam.last_point - fam.first_point) / 2.0 + 0.3;
            double c = (fam.first_point + fam.last_point) / 2.0;
            os << "<g id=\"family-" << k << "\">\n";
            os << "<circle cx=\"" << num(f.px(c)) << "\" cy=\"" << num(f.py(0)) << "\" r=\"" << num(r * kScale)
               << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
            boxed_label(os, f, c, r, fam.weight.str());
            os << "</g>\n";
        }
        os << "</g>\n";
    } else {
        os << "<g id=\"bundles\">\n";
        for (std::size_t k = 0; k < d.bundles.size(); ++k) {
            const auto& bd = d.bundles[k];
            os << "<g id=\"bundle-" << k << "\" class=\"" << flag_name(bd.flag) << "\">\n";
            os << "<circle cx=\"" << num(f.px(bd.center)) << "\" cy=\"" << num(f.py(0)) << "\" r=\""
               << num(bd.radius * kScale) << "\" fill=\"none\" stroke=\"" << flag_stroke(bd.flag)
               << "\" stroke-width=\"2\"/>\n";
            boxed_label(os, f, bd.center, bd.radius + 0.15 * bd.depth, bd.weight.str());
            os << "</g>\n";
        }
        os << "</g>\n";
    }
    marked_points(os, f, d.b);
    os << "</svg>\n";
    return os.str();
}

std::string render_curve(const PlanarCurve& c, int b) {
    double lo = 0.0, hi = 2.0 * b + 1.0, h = 1.5;
    for (const auto& p : c.pts) {
        lo = std::min(lo, p.x - 0.5);
        hi = std::max(hi, p.x + 0.5);
        h = std::max(h, std::abs(p.y) + 0.5);
    }
    Frame f{std::floor(lo), std::ceil(hi), std::ceil(h)};
    std::ostringstream os;
    os << f.open();
    axis(os, f, b);
    os << "<" << (c.closed ? "polygon" : "polyline") << " id=\"curve\" points=\"";
    for (std::size_t i = 0; i < c.pts.size(); ++i) {
        if (i) os << ' ';
        os << num(f.px(c.pts[i].x)) << ',' << num(f.py(c.pts[i].y));
    }
    os << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\"/>\n";
    marked_points(os, f, b);
    os << "</svg>\n";
    return os.str();
}

namespace {

struct Placement {
    std::vector<double> x;  // per map vertex
};

Placement place(const LabMap& m) {
    Placement p;
    p.x.assign(m.vertices.size(), 0.0);
    int omega = 2 * m.b;
    for (int s = 1; s <= omega; ++s) {
        const auto& verts = m.segment_vertices[static_cast<std::size_t>(s)];
        std::size_t n = verts.size();
        bool beta = !verts.empty() && m.vertices[static_cast<std::size_t>(verts.front())].kind == MapVertex::Kind::marked;
        for (std::size_t k = 0; k < n; ++k) {
            const auto& v = m.vertices[static_cast<std::size_t>(verts[k])];
            double x;
            if (s == omega) {
                x = v.kind == MapVertex::Kind::lab ? 0.5 : omega + 0.35 * static_cast<double>(k + 1);
            } else if (beta) {
                x = s + static_cast<double>(k) / static_cast<double>(n - 1);
            } else {
                x = s + static_cast<double>(k + 1) / static_cast<double>(n + 1);
            }
            p.x[static_cast<std::size_t>(verts[k])] = x;
        }
    }
    return p;
}

// Points along half-edge h, excluding its head.
void trace_half(const LabMap& m, const Placement& pl, int h, std::vector<Point>& out) {
    const MapEdge& e = m.edge(h);
    double xa = pl.x[static_cast<std::size_t>(m.tail(h))], xb = pl.x[static_cast<std::size_t>(m.head(h))];
    if (e.kind == MapEdge::Kind::beta) {
        out.push_back({xa, 0});
        return;
    }
    double side = e.side;
    double squash = e.kind == MapEdge::Kind::gate ? 0.25 : 1.0;
    double c = (xa + xb) / 2, r = std::abs(xb - xa) / 2;
    double ta = xa > c ? 0.0 : kPi, tb = kPi - ta;
    const int steps = 24;
    for (int i = 0; i < steps; ++i) {
        double t = ta + (tb - ta) * i / steps;
        out.push_back({c + r * std::cos(t), side * squash * r * std::sin(t)});
    }
}

const char* region_fill(const std::string& tag) {
    if (tag == "orange") return "#e08a2c";
    if (tag == "purple") return "#8a4fbf";
    if (tag == "brown") return "#8b5a2b";
    if (tag == "annulus") return "#cccccc";
    return "#9ecae1";
}

}  // namespace

std::string render_labyrinth(const Labyrinth& lab) {
    LabMap m = lab.map;
    Placement pl = place(m);
    // gates hug their lane on the inner-boundary side
    for (const auto& g : lab.gates) {
        auto& e = m.edges[static_cast<std::size_t>(g.edge)];
        bool forward = pl.x[static_cast<std::size_t>(m.head(g.lane_half))] > pl.x[static_cast<std::size_t>(m.tail(g.lane_half))];
        e.side = forward ? 1 : -1;
    }
    double lo = 0.0, hi = 2.0 * m.b + 1.0, h = 1.0;
    for (double x : pl.x) hi = std::max(hi, x + 0.5);
    for (const auto& e : m.edges) {
        if (e.kind == MapEdge::Kind::curve || e.kind == MapEdge::Kind::lab) {
            h = std::max(h, std::abs(pl.x[static_cast<std::size_t>(e.v0)] - pl.x[static_cast<std::size_t>(e.v1)]) / 2 + 0.5);
        }
    }
    Frame f{lo, std::ceil(hi), std::ceil(h)};
    std::ostringstream os;
    os << f.open();

    std::map<int, std::string> tag_of_region;
    for (std::size_t r = 0; r < lab.census.regions.size(); ++r) {
        tag_of_region[static_cast<int>(r)] = static_cast<int>(r) == lab.inner_region ? "inner_disk" : lab.census.regions[r].tag;
    }
    for (const auto& g : lab.gates) tag_of_region[g.region] = color_name(g.color);
    os << "<g id=\"regions\">\n";
    for (std::size_t r = 0; r < lab.census.regions.size(); ++r) {
        const std::string& tag = tag_of_region[static_cast<int>(r)];
        os << "<g id=\"region-" << r << "\" class=\"" << tag << "\" fill=\"" << region_fill(tag)
           << "\" fill-opacity=\"0.45\" stroke=\"none\">\n";
        std::vector<int> faces = lab.census.regions[r].faces;
        std::sort(faces.begin(), faces.end());
        for (int face : faces) {
            std::vector<Point> pts;
            for (int hh : m.faces[static_cast<std::size_t>(face)]) trace_half(m, pl, hh, pts);
            os << "<path fill-rule=\"evenodd\" d=\"";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                os << (i ? " L" : "M") << num(f.px(pts[i].x)) << ',' << num(f.py(pts[i].y));
            }
            os << " Z\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</g>\n";
    axis(os, f, m.b);

    auto stroke_edge = [&](std::size_t e, const std::string& id, const char* color, const char* extra) {
        std::vector<Point> pts;
        trace_half(m, pl, static_cast<int>(2 * e), pts);
        pts.push_back({pl.x[static_cast<std::size_t>(m.edges[e].v1)], 0});
        os << "<path id=\"" << id << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << extra << " d=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            os << (i ? " L" : "M") << num(f.px(pts[i].x)) << ',' << num(f.py(pts[i].y));
        }
        os << "\"/>\n";
    };
    os << "<g id=\"curve\">\n";
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind == MapEdge::Kind::curve) stroke_edge(e, "arc-" + std::to_string(m.edges[e].hit), "#d62728", "");
    }
    os << "</g>\n<g id=\"labyrinth-boundary\">\n";
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind == MapEdge::Kind::lab) {
            stroke_edge(e, m.edges[e].side > 0 ? "lab-upper" : "lab-lower", "#000000", "");
        }
    }
    os << "</g>\n<g id=\"gates\">\n";
    for (const auto& g : lab.gates) {
        stroke_edge(static_cast<std::size_t>(g.edge), "gate-" + color_name(g.color), region_fill(color_name(g.color)),
                    " stroke-dasharray=\"4 3\"");
    }
    os << "</g>\n";
    marked_points(os, f, m.b);
    os << "</svg>\n";
    return os.str();
}

}  // namespace platlab

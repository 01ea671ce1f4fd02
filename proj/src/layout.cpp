#include "pentact/layout.hpp"

#include "pentact/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <sstream>

namespace pentact {

namespace {

const Q5 kTau(mpq_class(-1, 2), mpq_class(1, 2));  // (sqrt5 - 1) / 2 = 2 cos 72
const double kSin72 = std::sqrt((5.0 + std::sqrt(5.0)) / 8.0);

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double seg_dist(Point p, Point a, Point b) {
    Point ab = b - a;
    double l2 = dot(ab, ab);
    double u = l2 > 0 ? std::clamp(dot(p - a, ab) / l2, 0.0, 1.0) : 0.0;
    return dist(p, a + u * ab);
}

// side c of a pentagon runs from corner c+3 to corner c+2 when the gap is traversed clockwise
std::pair<Point, Point> pentagon_side(const PentagonShape& s, int c) {
    return {s.corners[cmod(c + 3) - 1], s.corners[cmod(c + 2) - 1]};
}

std::pair<Point, Point> frame_side(const PentagonLayout& l, int i) {
    return {l.frame[cmod(i - 1) - 1], l.frame[i - 1]};
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v == 0 ? 0.0 : v);
    return buf;
}

}  // namespace

ExactPoint side_direction(int c) {
    switch (cmod(c)) {
        case 1: return {Q5(1), Q5(0)};
        case 2: return {kTau, Q5(-1)};
        case 3: return {-kTau, -kTau};
        case 4: return {Q5(-1), kTau};
        default: return {Q5(0), Q5(1)};
    }
}

Point to_point(const ExactPoint& p) {
    Q5 x = p.a + p.b * kTau * Q5(mpq_class(1, 2));
    return {to_float(x), to_float(p.b) * kSin72};
}

Point side_direction_float(int c) {
    const double a = -2.0 * M_PI * (cmod(c) - 1) / 5.0;
    return {std::cos(a), std::sin(a)};
}

PentagonLayout realize(const Skeleton& s, const std::vector<Q5>& sol) {
    const Triangulation& t = s.graph();
    for (size_t i = 0; i < sol.size(); ++i)
        if (sol[i].sign() < 0) throw Error(ErrorKind::NegativeInput, s.variable_name(static_cast<int>(i)) + " is negative");
    const auto vals = segment_values(s, sol);
    const int M = s.num_nodes();
    std::vector<std::vector<std::pair<int, int>>> adj(M);  // (segment, +1 forward / -1 backward)
    for (int k = 0; k < static_cast<int>(s.segments().size()); ++k) {
        const auto& sg = s.segments()[k];
        adj[sg.from].emplace_back(k, 1);
        adj[sg.to].emplace_back(k, -1);
    }
    auto vec = [&](int k) {
        ExactPoint d = side_direction(s.segments()[k].side);
        return ExactPoint{d.a * vals[k], d.b * vals[k]};
    };
    std::vector<ExactPoint> pos(M);
    std::vector<char> placed(M, 0);
    const int root = s.frame_corner_node(5);
    placed[root] = 1;
    std::deque<int> q = {root};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto [k, dir] : adj[u]) {
            const auto& sg = s.segments()[k];
            int w = dir > 0 ? sg.to : sg.from;
            ExactPoint d = vec(k);
            ExactPoint p = dir > 0 ? ExactPoint{pos[u].a + d.a, pos[u].b + d.b} : ExactPoint{pos[u].a - d.a, pos[u].b - d.b};
            if (!placed[w]) {
                placed[w] = 1;
                pos[w] = p;
                q.push_back(w);
            } else if (!(pos[w] == p)) {
                throw Error(ErrorKind::ClosureFailure, "skeleton cycle through segment " + std::to_string(k) +
                                                           " does not close");
            }
        }
    }
    for (int v = 0; v < M; ++v)
        if (!placed[v]) throw Error(ErrorKind::ClosureFailure, "skeleton is disconnected");

    PentagonLayout l;
    l.nodes.resize(M);
    for (int v = 0; v < M; ++v) l.nodes[v] = to_point(pos[v]);
    for (int i = 1; i <= 5; ++i) l.frame[i - 1] = l.nodes[s.frame_corner_node(i)];
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (t.is_outer(v)) continue;
        PentagonShape p;
        p.vertex = v;
        p.side = sol[s.vertex_var(v)];
        p.side_float = to_float(p.side);
        for (const auto& re : s.ring(v))
            if (re.color) p.corners[re.color - 1] = l.nodes[re.node];
        p.apex = p.corners[0];
        l.pentagons.push_back(p);
    }
    const auto& se = s.extension();
    for (int e = 0; e < t.num_edges(); ++e) {
        const auto& a = s.forest().arcs[e];
        l.contacts.push_back({tail(se, s.orientation(), e), head(se, s.orientation(), e), a.color, l.nodes[e]});
    }
    return l;
}

GeometryReport verify(const PentagonLayout& l, const Triangulation& t, double tol) {
    GeometryReport r;
    auto bad = [&](std::string m) {
        r.ok = false;
        r.violations.push_back(std::move(m));
    };
    auto lab = [&](int v) { return std::to_string(t.label(v)); };
    std::vector<int> idx(t.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(l.pentagons.size()); ++i) idx[l.pentagons[i].vertex] = i;
    for (int v = 0; v < t.num_vertices(); ++v)
        if (!t.is_outer(v) && idx[v] < 0) bad("(a) vertex " + lab(v) + " has no pentagon");
    if (!r.ok) return r;

    // (c) regular, horizontal bottom side
    for (const auto& p : l.pentagons) {
        const double L = p.side_float;
        if (!(L > tol)) bad("(c) pentagon " + lab(p.vertex) + " has non-positive side length");
        Point c = p.apex;
        for (int k = 1; k <= 5; ++k) {
            if (dist(c, p.corners[k - 1]) > tol * std::max(1.0, L))
                bad("(c) pentagon " + lab(p.vertex) + " corner " + std::to_string(k) + " is off the regular shape");
            c = c - L * side_direction_float(k + 3);
        }
        for (int k = 1; k <= 5; ++k) {
            double len = dist(p.corners[k - 1], p.corners[k % 5]);
            if (std::abs(len - L) > tol * std::max(1.0, L))
                bad("(c) pentagon " + lab(p.vertex) + " side deviates from " + std::to_string(L));
        }
    }

    // (a)/(d) contacts
    auto side_of = [&](int w, int c) {
        return t.is_outer(w) ? frame_side(l, t.outer_index(w)) : pentagon_side(l.pentagons[idx[w]], c);
    };
    for (auto [u, w] : t.edges()) {
        bool proper = false, wrong = false;
        for (auto [a, b] : {std::pair{u, w}, std::pair{w, u}}) {
            if (t.is_outer(a)) continue;
            const auto& pa = l.pentagons[idx[a]];
            for (int c = 1; c <= 5; ++c)
                for (int d = 1; d <= 5; ++d) {
                    if (t.is_outer(b) && d != t.outer_index(b)) continue;
                    auto [s0, s1] = side_of(b, d);
                    if (seg_dist(pa.corners[c - 1], s0, s1) <= tol) (c == d ? proper : wrong) = true;
                }
        }
        if (!proper) bad(std::string(wrong ? "(d)" : "(a)") + " edge " + lab(u) + "-" + lab(w) +
                         (wrong ? " touches a side that is not opposite the corner" : " has no corner-on-side contact"));
    }

    // (b) disjoint interiors; all five side normals of the common shape separate
    std::array<Point, 5> normals;
    for (int c = 1; c <= 5; ++c) {
        Point d = side_direction_float(c);
        normals[c - 1] = {-d.y, d.x};
    }
    auto project = [&](const PentagonShape& p, Point n) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& c : p.corners) {
            double v = dot(c, n);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::pair{lo, hi};
    };
    for (size_t i = 0; i < l.pentagons.size(); ++i)
        for (size_t j = i + 1; j < l.pentagons.size(); ++j) {
            bool separated = false;
            for (const auto& n : normals) {
                auto [a0, a1] = project(l.pentagons[i], n);
                auto [b0, b1] = project(l.pentagons[j], n);
                if (std::min(a1, b1) - std::max(a0, b0) <= tol) {
                    separated = true;
                    break;
                }
            }
            if (!separated)
                bad("(b) pentagons " + lab(l.pentagons[i].vertex) + " and " + lab(l.pentagons[j].vertex) + " overlap");
        }
    // containment in the frame: clockwise frame, interior on the right of each side
    for (const auto& p : l.pentagons)
        for (int i = 1; i <= 5; ++i) {
            auto [a, b] = frame_side(l, i);
            Point d = b - a;
            double len = std::hypot(d.x, d.y);
            for (const auto& c : p.corners) {
                double cross = (d.x * (c.y - a.y) - d.y * (c.x - a.x)) / (len > 0 ? len : 1);
                if (cross > tol) {
                    bad("(b) pentagon " + lab(p.vertex) + " leaves the frame at side " + std::to_string(i));
                    break;
                }
            }
        }
    return r;
}

FiveColorForest induced_fcf(const PentagonLayout& l, const Triangulation& t, double tol) {
    std::vector<int> idx(t.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(l.pentagons.size()); ++i) idx[l.pentagons[i].vertex] = i;
    auto lab = [&](int v) { return std::to_string(t.label(v)); };
    FiveColorForest f;
    f.arcs.resize(t.num_edges());
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [u, w] = t.edge(e);
        std::vector<ColoredArc> found;
        for (auto [a, b] : {std::pair{u, w}, std::pair{w, u}}) {
            if (t.is_outer(a)) continue;
            const auto& pa = l.pentagons[idx[a]];
            for (int c = 1; c <= 5; ++c) {
                if (t.is_outer(b) && c != t.outer_index(b)) continue;
                auto [s0, s1] = t.is_outer(b) ? frame_side(l, c) : pentagon_side(l.pentagons[idx[b]], c);
                const Point& pc = pa.corners[c - 1];
                if (seg_dist(pc, s0, s1) > tol) continue;
                if (dist(pc, s0) <= tol || dist(pc, s1) <= tol)
                    throw Error(ErrorKind::DegenerateContact, "corner-corner contact on edge " + lab(u) + "-" + lab(w));
                found.push_back({a, b, c});
            }
        }
        if (found.size() != 1)
            throw Error(ErrorKind::DegenerateContact, "edge " + lab(u) + "-" + lab(w) + " has " +
                                                          std::to_string(found.size()) + " corner-side contacts");
        f.arcs[e] = found.front();
    }
    return f;
}

namespace {

std::vector<std::vector<ColoredArc>> contact_candidates(const PentagonLayout& l, const Triangulation& t, double tol,
                                                        bool* corner) {
    std::vector<int> idx(t.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(l.pentagons.size()); ++i) idx[l.pentagons[i].vertex] = i;
    std::vector<std::vector<ColoredArc>> out(t.num_edges());
    if (corner) *corner = false;
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [u, w] = t.edge(e);
        for (auto [a, b] : {std::pair{u, w}, std::pair{w, u}}) {
            if (t.is_outer(a)) continue;
            const auto& pa = l.pentagons[idx[a]];
            for (int c = 1; c <= 5; ++c) {
                if (t.is_outer(b) && c != t.outer_index(b)) continue;
                auto [s0, s1] = t.is_outer(b) ? frame_side(l, c) : pentagon_side(l.pentagons[idx[b]], c);
                const Point& pc = pa.corners[c - 1];
                if (seg_dist(pc, s0, s1) > tol) continue;
                if (corner && (dist(pc, s0) <= tol || dist(pc, s1) <= tol)) *corner = true;
                out[e].push_back({a, b, c});
            }
        }
    }
    return out;
}

}  // namespace

bool has_corner_contact(const PentagonLayout& l, const Triangulation& t, double tol) {
    bool corner = false;
    contact_candidates(l, t, tol, &corner);
    return corner;
}

std::vector<FiveColorForest> induced_fcfs(const PentagonLayout& l, const Triangulation& t, double tol) {
    auto cand = contact_candidates(l, t, tol, nullptr);
    double combos = 1;
    for (const auto& c : cand) {
        if (c.empty()) return {};
        combos *= static_cast<double>(c.size());
    }
    if (combos > 65536) throw Error(ErrorKind::TooLarge, "too many contact readings");
    std::vector<FiveColorForest> res;
    std::vector<size_t> pick(cand.size(), 0);
    for (;;) {
        FiveColorForest f;
        for (size_t e = 0; e < cand.size(); ++e) f.arcs.push_back(cand[e][pick[e]]);
        if (validate_fcf(t, f).ok) res.push_back(std::move(f));
        size_t k = 0;
        while (k < cand.size() && ++pick[k] == cand[k].size()) pick[k++] = 0;
        if (k == cand.size()) break;
    }
    return res;
}

std::string layout_svg(const PentagonLayout& l, const Triangulation& t, bool contact_graph) {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (const auto& p : l.frame) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, -p.y);
        y1 = std::max(y1, -p.y);
    }
    const double m = 0.02 * std::max(x1 - x0, y1 - y0);
    auto P = [](Point p) { return fmt(p.x) + "," + fmt(-p.y); };
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(x0 - m) << " " << fmt(y0 - m)
      << " " << fmt(x1 - x0 + 2 * m) << " " << fmt(y1 - y0 + 2 * m) << "\">\n";
    o << "<g stroke-linejoin=\"round\" stroke-width=\"" << fmt(0.004 * (x1 - x0)) << "\">\n";
    for (int i = 1; i <= 5; ++i) {
        auto [a, b] = frame_side(l, i);
        o << "<path class=\"frame\" id=\"s" << i << "\" d=\"M" << P(a) << " L" << P(b)
          << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (const auto& p : l.pentagons) {
        o << "<path class=\"pentagon\" id=\"v" << t.label(p.vertex) << "\" d=\"M" << P(p.corners[0]);
        for (int k = 1; k < 5; ++k) o << " L" << P(p.corners[k]);
        o << " Z\" fill=\"#c6dbef\" stroke=\"#08306b\"/>\n";
    }
    if (contact_graph) {
        std::vector<Point> centre(t.num_vertices());
        for (const auto& p : l.pentagons) {
            Point c{0, 0};
            for (const auto& q : p.corners) c = c + 0.2 * q;
            centre[p.vertex] = c;
        }
        for (int i = 1; i <= 5; ++i) {
            auto [a, b] = frame_side(l, i);
            centre[t.outer()[i - 1]] = 0.5 * (a + b);
        }
        o << "<g class=\"contact-graph\" stroke=\"#cb181d\" stroke-width=\"" << fmt(0.002 * (x1 - x0)) << "\">\n";
        for (auto [u, w] : t.edges())
            o << "<line x1=\"" << fmt(centre[u].x) << "\" y1=\"" << fmt(-centre[u].y) << "\" x2=\"" << fmt(centre[w].x)
              << "\" y2=\"" << fmt(-centre[w].y) << "\"/>\n";
        o << "</g>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

std::string layout_json(const PentagonLayout& l, const Triangulation& t) {
    using nlohmann::json;
    auto pt = [](Point p) { return json::array({p.x, p.y}); };
    json j;
    j["frame"] = json::array();
    for (const auto& p : l.frame) j["frame"].push_back(pt(p));
    j["pentagons"] = json::array();
    for (const auto& p : l.pentagons) {
        json c = json::array();
        for (const auto& q : p.corners) c.push_back(pt(q));
        j["pentagons"].push_back({{"vertex", t.label(p.vertex)},
                                  {"side", q5_to_json(p.side)},
                                  {"side_float", p.side_float},
                                  {"apex", pt(p.apex)},
                                  {"corners", c}});
    }
    j["contacts"] = json::array();
    for (const auto& c : l.contacts)
        j["contacts"].push_back(
            {{"from", t.label(c.tail)}, {"to", t.label(c.head)}, {"color", c.color}, {"at", pt(c.at)}});
    return j.dump(2) + "\n";
}

void emit(const PentagonLayout& l, const Triangulation& t, Format format, const std::string& path) {
    write_file(path, format == Format::Svg ? layout_svg(l, t) : layout_json(l, t));
}

}  // namespace pentact

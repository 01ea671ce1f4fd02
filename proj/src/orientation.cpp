#include "pentact/orientation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace pentact {

StackExtension::StackExtension(Triangulation t) : t_(std::move(t)) {
    const int N = t_.num_vertices();
    const int E = t_.num_edges();
    face_stack_.assign(t_.num_faces(), -1);
    for (int f = 0; f < t_.num_faces(); ++f)
        if (t_.face_outer_count(f) <= 1) {
            face_stack_[f] = N + static_cast<int>(stack_face_.size());
            stack_face_.push_back(f);
        }
    ends_.assign(t_.edges().begin(), t_.edges().end());
    for (int k = 0; k < num_stack(); ++k) {
        const auto& fv = t_.face(stack_face_[k]);
        for (int j = 0; j < 3; ++j) ends_.emplace_back(fv[j], N + k);
    }
    rot_.assign(num_vertices(), {});
    for (int v = 0; v < N; ++v)
        for (int x : t_.rotation(v)) {
            rot_[v].push_back({x, t_.edge_index(v, x)});
            int f = t_.face_of(v, x);
            if (f >= 0 && face_stack_[f] >= 0) rot_[v].push_back({face_stack_[f], stack_edge(f, v)});
        }
    for (int k = 0; k < num_stack(); ++k) {
        const auto& fv = t_.face(stack_face_[k]);
        for (int j = 0; j < 3; ++j) rot_[N + k].push_back({fv[j], E + 3 * k + j});
    }
    // faces by the next-around-face rule
    std::map<std::pair<int, int>, bool> used;
    const int a1 = t_.outer()[0], a2 = t_.outer()[1];
    for (int v = 0; v < num_vertices(); ++v)
        for (const auto& arc : rot_[v]) {
            if (used.count({v, arc.to})) continue;
            std::vector<int> cyc, eds;
            int a = v, b = arc.to, ed = arc.edge;
            bool outer = false;
            while (!used.count({a, b})) {
                used[{a, b}] = true;
                if (a == a2 && b == a1) outer = true;
                cyc.push_back(a);
                eds.push_back(ed);
                const auto& rb = rot_[b];
                int j = 0;
                while (rb[j].to != a) ++j;
                const auto& nx = rb[(j + rb.size() - 1) % rb.size()];
                a = b;
                b = nx.to;
                ed = nx.edge;
            }
            if (outer) continue;
            if (cyc.size() != 3) throw Error(ErrorKind::NotTriangulated, "stack extension face is not a triangle");
            faces_.push_back({{cyc[0], cyc[1], cyc[2]}, {eds[0], eds[1], eds[2]}});
        }
}

int StackExtension::stack_edge(int f, int corner) const {
    int s = face_stack_[f];
    if (s < 0) return -1;
    const auto& fv = t_.face(f);
    for (int j = 0; j < 3; ++j)
        if (fv[j] == corner) return t_.num_edges() + 3 * (s - num_normal()) + j;
    return -1;
}

int StackExtension::edge_between(int u, int v) const {
    if (is_stack(u)) std::swap(u, v);
    if (is_stack(u)) return -1;
    if (!is_stack(v)) return t_.edge_index(u, v);
    return stack_edge(face_of_stack(v), u);
}

std::uint64_t orientation_hash(const Alpha5Orientation& x) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : x.fwd) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

bool is_alpha5(const StackExtension& se, const Alpha5Orientation& x, std::string* why) {
    if (static_cast<int>(x.fwd.size()) != se.num_edges()) {
        if (why) *why = "orientation size mismatch";
        return false;
    }
    std::vector<int> out(se.num_vertices(), 0);
    for (int e = 0; e < se.num_edges(); ++e) ++out[tail(se, x, e)];
    for (int v = 0; v < se.num_vertices(); ++v)
        if (out[v] != se.alpha(v)) {
            if (why) *why = "vertex " + std::to_string(v) + " has outdegree " + std::to_string(out[v]);
            return false;
        }
    return true;
}

Alpha5Orientation chi(const StackExtension& se, const FiveColorForest& f) {
    const Triangulation& t = se.base();
    Alpha5Orientation x;
    x.fwd.assign(se.num_edges(), 0);
    for (int e = 0; e < t.num_edges(); ++e) x.fwd[e] = f.arcs[e].from == se.endpoints(e).first ? 1 : 0;
    std::vector<std::array<bool, 6>> has_out(t.num_vertices());
    for (auto& h : has_out) h.fill(false);
    for (const auto& a : f.arcs) has_out[a.from][a.color] = true;
    auto slot = [&](int v, int u) {
        const auto& a = f.arcs[t.edge_index(v, u)];
        return a.from == v ? out_slot(a.color) : in_slot(a.color);
    };
    for (int k = 0; k < se.num_stack(); ++k) {
        int s = se.num_normal() + k;
        int fi = se.face_of_stack(s);
        const auto& fv = t.face(fi);
        int p = -1, count = 0;
        for (int j = 0; j < 3; ++j) {
            int v = fv[j];
            if (t.is_outer(v)) continue;
            int s1 = slot(v, fv[(j + 1) % 3]), s2 = slot(v, fv[(j + 2) % 3]);
            for (int q = (s1 + 1) % 10; q != s2 && s1 != s2; q = (q + 1) % 10)
                if (q % 2 == 1 && !has_out[v][slot_out_color(q)]) {
                    ++count;
                    p = v;
                }
        }
        if (count != 1)
            throw Error(ErrorKind::MissingEdgeAmbiguous,
                        "face " + std::to_string(fi) + " has " + std::to_string(count) + " missing outgoing edges");
        for (int j = 0; j < 3; ++j) x.fwd[se.stack_edge(fi, fv[j])] = fv[j] == p ? 1 : 0;
    }
    return x;
}

namespace {

int rot_index(const std::vector<StarArc>& r, int edge) {
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i].edge == edge) return i;
    return -1;
}

// k-th outgoing edge of v after the arc with index edge, walking clockwise (dir=+1) or counterclockwise (dir=-1)
int kth_out(const StackExtension& se, const Alpha5Orientation& x, int v, int edge, int k, int dir) {
    const auto& r = se.rotation(v);
    int j = rot_index(r, edge);
    const int d = static_cast<int>(r.size());
    for (int step = 1; step < d; ++step) {
        const auto& a = r[((j + dir * step) % d + d) % d];
        if (a.edge < 0 || tail(se, x, a.edge) != v) continue;
        if (--k == 0) return a.edge;
    }
    throw Error(ErrorKind::PathCycled, "not enough outgoing edges at vertex " + std::to_string(v));
}

}  // namespace

std::vector<int> trace_path(const StackExtension& se, const Alpha5Orientation& x, int e, Branch b) {
    std::vector<int> path;
    std::vector<char> seen(se.num_vertices(), 0);
    auto visit = [&](int v) {
        if (seen[v]) throw Error(ErrorKind::PathCycled, "walk revisits vertex " + std::to_string(v));
        seen[v] = 1;
        path.push_back(v);
    };
    visit(tail(se, x, e));
    int cur = e;
    for (;;) {
        int h = head(se, x, cur);
        visit(h);
        if (se.is_outer(h)) return path;
        if (!se.is_stack(h)) {
            cur = kth_out(se, x, h, cur, 3, +1);
            continue;
        }
        const auto& r = se.rotation(h);
        int j = rot_index(r, cur);
        const StarArc& left = r[(j + 1) % 3];
        const StarArc& right = r[(j + 2) % 3];
        bool use_left = (b == Branch::Left) ? !se.is_outer(left.to) : se.is_outer(right.to);
        if (use_left) {
            visit(left.to);
            cur = kth_out(se, x, left.to, left.edge, 2, -1);
        } else {
            visit(right.to);
            cur = kth_out(se, x, right.to, right.edge, 2, +1);
        }
    }
}

FiveColorForest psi(const StackExtension& se, const Alpha5Orientation& x) {
    const Triangulation& t = se.base();
    FiveColorForest f;
    f.arcs.resize(t.num_edges());
    for (int e = 0; e < t.num_edges(); ++e) {
        auto p = trace_path(se, x, e, Branch::Left);
        f.arcs[e] = {tail(se, x, e), head(se, x, e), t.outer_index(p.back())};
    }
    return f;
}

std::vector<Alpha5Orientation> enumerate_alpha5(const StackExtension& se) {
    const int m = se.num_edges();
    if (m > 30) throw Error(ErrorKind::TooLarge, "stack extension has " + std::to_string(m) + " inner edges (limit 30)");
    const int V = se.num_vertices();
    std::vector<int> out(V, 0), rem(V, 0);
    for (int e = 0; e < m; ++e) {
        ++rem[se.endpoints(e).first];
        ++rem[se.endpoints(e).second];
    }
    std::vector<Alpha5Orientation> res;
    Alpha5Orientation cur;
    cur.fwd.assign(m, 0);
    std::function<void(int)> rec = [&](int e) {
        if (e == m) {
            res.push_back(cur);
            return;
        }
        auto [a, b] = se.endpoints(e);
        --rem[a];
        --rem[b];
        for (int dir : {1, 0}) {
            int from = dir ? a : b, to = dir ? b : a;
            ++out[from];
            bool ok = out[from] <= se.alpha(from) && out[from] + rem[from] >= se.alpha(from) &&
                      out[to] + rem[to] >= se.alpha(to);
            if (ok) {
                cur.fwd[e] = static_cast<std::uint8_t>(dir);
                rec(e + 1);
            }
            --out[from];
        }
        ++rem[a];
        ++rem[b];
    };
    rec(0);
    std::sort(res.begin(), res.end());
    return res;
}

std::vector<FacialCycle> directed_facial_cycles(const StackExtension& se, const Alpha5Orientation& x) {
    std::vector<FacialCycle> res;
    const auto& faces = se.faces();
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        if (f.edges[0] < 0 || f.edges[1] < 0 || f.edges[2] < 0) continue;
        int along = 0;
        for (int k = 0; k < 3; ++k)
            if (tail(se, x, f.edges[k]) == f.verts[k]) ++along;
        if (along == 3) {
            res.push_back({fi, false, f.verts, f.edges});
        } else if (along == 0) {
            FacialCycle c{fi, true, {f.verts[0], f.verts[2], f.verts[1]}, {f.edges[2], f.edges[1], f.edges[0]}};
            res.push_back(c);
        }
    }
    return res;
}

std::vector<FacialCycle> ccw_facial_cycles(const StackExtension& se, const Alpha5Orientation& x) {
    auto all = directed_facial_cycles(se, x);
    std::vector<FacialCycle> res;
    for (auto& c : all)
        if (c.ccw) res.push_back(c);
    return res;
}

Alpha5Orientation reverse_edges(const Alpha5Orientation& x, const std::vector<int>& edges) {
    Alpha5Orientation y = x;
    for (int e : edges) y.fwd[e] ^= 1;
    return y;
}

Alpha5Orientation flip(const StackExtension& se, const Alpha5Orientation& x, const FacialCycle& c) {
    for (int k = 0; k < 3; ++k)
        if (c.edges[k] < 0 || tail(se, x, c.edges[k]) != c.verts[k] || head(se, x, c.edges[k]) != c.verts[(k + 1) % 3])
            throw Error(ErrorKind::NotDirectedFace, "cycle is not directed in this orientation");
    return reverse_edges(x, {c.edges[0], c.edges[1], c.edges[2]});
}

std::vector<Alpha5Orientation> flip_closure(const StackExtension& se, const Alpha5Orientation& x0,
                                            std::size_t limit) {
    std::set<Alpha5Orientation> seen = {x0};
    std::deque<Alpha5Orientation> q = {x0};
    while (!q.empty()) {
        auto x = q.front();
        q.pop_front();
        for (const auto& c : directed_facial_cycles(se, x)) {
            auto y = flip(se, x, c);
            if (seen.insert(y).second) {
                if (seen.size() > limit) throw Error(ErrorKind::TooLarge, "flip closure exceeds limit");
                q.push_back(y);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

LatticeStats lattice_stats(const StackExtension& se) {
    LatticeStats st;
    auto all = enumerate_alpha5(se);
    st.orientations = all.size();
    for (const auto& x : all) {
        auto cyc = directed_facial_cycles(se, x);
        bool any_cw = false, any_ccw = false;
        for (const auto& c : cyc) {
            if (c.ccw) {
                any_ccw = true;
                ++st.flip_edges;
            } else {
                any_cw = true;
            }
        }
        if (!any_cw) ++st.sources;
        if (!any_ccw) ++st.sinks;
    }
    if (!all.empty()) st.closure_matches = flip_closure(se, all.front()) == all;
    return st;
}

std::vector<std::pair<int, int>> corner_colors(const StackExtension& se, const Alpha5Orientation& x,
                                               const FiveColorForest& f, int v) {
    const auto& r = se.rotation(v);
    std::vector<int> outs;
    std::vector<int> k_of(r.size(), -1);
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (tail(se, x, r[i].edge) == v) {
            k_of[i] = static_cast<int>(outs.size());
            outs.push_back(r[i].edge);
        }
    if (outs.size() != 5) throw Error(ErrorKind::InvalidForest, "vertex without five outgoing edges");
    int offset = -1;
    auto put = [&](int o) {
        o = ((o % 5) + 5) % 5;
        if (offset >= 0 && offset != o)
            throw Error(ErrorKind::InvalidForest, "inconsistent corner colors at vertex " + std::to_string(v));
        offset = o;
    };
    int last = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (k_of[i] >= 0) last = k_of[i];
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
        int e = r[i].edge;
        if (k_of[i] >= 0) {
            last = k_of[i];
            if (!se.is_stack_edge(e)) put(f.arcs[e].color - 1 - k_of[i]);
        } else if (!se.is_stack_edge(e)) {
            // side between corners last and last+1 carries incoming color c(last)+3
            put(f.arcs[e].color - 3 - 1 - last);
        }
    }
    if (offset < 0) throw Error(ErrorKind::InvalidForest, "no colored edge at vertex " + std::to_string(v));
    std::vector<std::pair<int, int>> res;
    for (int k = 0; k < 5; ++k) res.emplace_back(outs[k], cmod(k + offset + 1));
    return res;
}

}  // namespace pentact

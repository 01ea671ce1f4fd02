#include "pentact/forest.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pentact {

namespace {

int pos_in(const std::vector<int>& r, int u) {
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == u) return i;
    return -1;
}

// number of cyclic descents; a clockwise slot sequence is admissible iff this is <= 1
int cyclic_descents(const std::vector<int>& s) {
    int d = 0;
    for (size_t k = 0; k < s.size(); ++k)
        if (s[(k + 1) % s.size()] < s[k]) ++d;
    return d;
}

bool acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> out(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : arcs) {
        out[a].push_back(b);
        ++indeg[b];
    }
    std::vector<int> st;
    for (int v = 0; v < n; ++v)
        if (!indeg[v]) st.push_back(v);
    int seen = 0;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        ++seen;
        for (int u : out[v])
            if (--indeg[u] == 0) st.push_back(u);
    }
    return seen == n;
}

}  // namespace

SchnyderWood schnyder_wood(const Rotation& rot, std::array<int, 3> outer, std::array<int, 3> colors) {
    const int n = static_cast<int>(rot.size());
    const int top = outer[0], right = outer[1], left = outer[2];
    std::vector<char> removed(n, 0), on(n, 0);
    std::vector<int> cprev(n, -1), cnext(n, -1), chords(n, 0);
    std::vector<char> member(n, 0);
    for (int v = 0; v < n; ++v)
        if (!rot[v].empty()) member[v] = 1;
    std::set<int> eligible;
    SchnyderWood w;

    auto refresh = [&](int v) {
        bool e = on[v] && !removed[v] && v != left && v != right && chords[v] == 0;
        if (e)
            eligible.insert(v);
        else
            eligible.erase(v);
    };
    // neighbours of v strictly between r and l, clockwise from r
    auto below = [&](int v, int r, int l) {
        std::vector<int> out;
        const auto& rv = rot[v];
        int j = pos_in(rv, r);
        for (int k = 1; k < static_cast<int>(rv.size()); ++k) {
            int u = rv[(j + k) % rv.size()];
            if (u == l) break;
            if (!removed[u]) out.push_back(u);
        }
        return out;
    };

    auto peel = [&](int v, int l, int r) {
        std::vector<int> W = below(v, r, l);
        removed[v] = 1;
        on[v] = 0;
        eligible.erase(v);
        if (v != top) {
            w.arcs.push_back({v, l, colors[2]});
            w.arcs.push_back({v, r, colors[1]});
        }
        for (int u : W) w.arcs.push_back({u, v, colors[0]});
        // contour l, reverse(W), r
        std::vector<int> seq;
        seq.push_back(l);
        for (auto it = W.rbegin(); it != W.rend(); ++it) seq.push_back(*it);
        seq.push_back(r);
        for (size_t k = 0; k + 1 < seq.size(); ++k) {
            cnext[seq[k]] = seq[k + 1];
            cprev[seq[k + 1]] = seq[k];
        }
        std::set<int> touched = {l, r};
        if (W.empty()) {
            --chords[l];
            --chords[r];
        } else {
            for (int u : W) on[u] = 1;
            std::set<int> inW(W.begin(), W.end());
            for (int u : W) {
                touched.insert(u);
                for (int y : rot[u]) {
                    if (removed[y] || !on[y] || y == cprev[u] || y == cnext[u]) continue;
                    if (inW.count(y) && y < u) continue;
                    ++chords[u];
                    ++chords[y];
                    touched.insert(y);
                }
            }
        }
        for (int x : touched) refresh(x);
    };

    // first step: remove the top vertex; contour left .. right
    on[top] = 1;
    cnext[left] = top;
    cprev[top] = left;
    cnext[top] = right;
    cprev[right] = top;
    on[left] = on[right] = 1;
    peel(top, left, right);
    int count = 0;
    for (int v = 0; v < n; ++v) count += member[v];
    for (int step = 0; step < count - 3; ++step) {
        if (eligible.empty()) throw Error(ErrorKind::NotTriangulated, "canonical ordering stuck");
        int v = *eligible.begin();
        peel(v, cprev[v], cnext[v]);
    }
    return w;
}

namespace {

std::vector<std::vector<int>> trace_faces(const Rotation& rot) {
    const int n = static_cast<int>(rot.size());
    std::map<std::pair<int, int>, int> id;
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < n; ++v)
        for (int u : rot[v]) {
            if (id.count({v, u})) continue;
            std::vector<int> cyc;
            int a = v, b = u;
            while (!id.count({a, b})) {
                id[{a, b}] = static_cast<int>(faces.size());
                cyc.push_back(a);
                const auto& rb = rot[b];
                int j = pos_in(rb, a);
                int c = rb[(j + rb.size() - 1) % rb.size()];
                a = b;
                b = c;
            }
            faces.push_back(cyc);
        }
    return faces;
}

}  // namespace

ForestReport validate_triangle_map(const Rotation& rot, std::array<int, 3> outer) {
    ForestReport r;
    int V = 0;
    long long H = 0;
    for (const auto& x : rot) {
        if (!x.empty()) ++V;
        H += static_cast<long long>(x.size());
        for (int u : x)
            if (u < 0 || u >= static_cast<int>(rot.size()) || pos_in(rot[u], static_cast<int>(&x - &rot[0])) < 0) {
                r = {false, "structure", static_cast<int>(&x - &rot[0]), "asymmetric rotation"};
                return r;
            }
    }
    auto faces = trace_faces(rot);
    if (V - H / 2 + static_cast<long long>(faces.size()) != 2) return {false, "structure", -1, "Euler fails"};
    bool outer_found = false;
    const std::vector<int> want = {outer[1], outer[0], outer[2]};
    for (const auto& f : faces) {
        if (f.size() != 3) return {false, "structure", f[0], "non-triangular face"};
        for (int k = 0; k < 3; ++k)
            if (f[k] == want[0] && f[(k + 1) % 3] == want[1] && f[(k + 2) % 3] == want[2]) outer_found = true;
    }
    if (!outer_found) return {false, "structure", -1, "outer triangle not clockwise"};
    return r;
}

ForestReport validate_schnyder(const Rotation& rot, std::array<int, 3> outer, std::array<int, 3> colors,
                               const SchnyderWood& w) {
    const int n = static_cast<int>(rot.size());
    std::map<std::pair<int, int>, const ColoredArc*> at;
    for (const auto& a : w.arcs) {
        auto key = std::minmax(a.from, a.to);
        if (at.count(key)) return {false, "structure", a.from, "edge colored twice"};
        at[key] = &a;
    }
    for (int v = 0; v < n; ++v)
        for (int u : rot[v]) {
            bool ov = std::find(outer.begin(), outer.end(), v) != outer.end();
            bool ou = std::find(outer.begin(), outer.end(), u) != outer.end();
            if (ov && ou) continue;
            if (!at.count(std::minmax(u, v))) return {false, "structure", v, "uncolored inner edge"};
        }
    for (int i = 0; i < 3; ++i) {
        int b = outer[i];
        for (int u : rot[b]) {
            auto it = at.find(std::minmax(u, b));
            if (it == at.end()) continue;
            if (it->second->to != b || it->second->color != colors[i]) return {false, "S1", b, "edge not into b"};
        }
    }
    for (int v = 0; v < n; ++v) {
        if (rot[v].empty() || std::find(outer.begin(), outer.end(), v) != outer.end()) continue;
        std::vector<int> s;
        int outs[3] = {0, 0, 0};
        for (int u : rot[v]) {
            const ColoredArc* a = at[std::minmax(u, v)];
            int k = static_cast<int>(std::find(colors.begin(), colors.end(), a->color) - colors.begin());
            if (k == 3) return {false, "S2", v, "unknown color"};
            if (a->from == v) {
                ++outs[k];
                s.push_back(2 * k);
            } else {
                // incoming top between right and left, left between top and right, right between left and top
                static const int in_pos[3] = {3, 5, 1};
                s.push_back(in_pos[k]);
            }
        }
        if (outs[0] != 1 || outs[1] != 1 || outs[2] != 1) return {false, "S2", v, "outdegree per color not one"};
        if (cyclic_descents(s) > 1) return {false, "S2", v, "clockwise order violated"};
    }
    return {};
}

FiveColorForest fcf_from_schnyder(const Triangulation& t) {
    require_valid(t);
    const auto& o = t.outer();
    SchnyderContraction con = contract_for_schnyder(t);
    FiveColorForest f;
    f.arcs.assign(t.num_edges(), ColoredArc{});

    auto sub = [&](const std::vector<int>& interior, std::array<int, 3> tri, std::array<int, 3> cols) {
        if (interior.empty()) return;
        std::vector<int> verts(tri.begin(), tri.end());
        verts.insert(verts.end(), interior.begin(), interior.end());
        std::map<int, int> loc;
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) loc[verts[i]] = i;
        Rotation rot(verts.size());
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
            for (int u : t.rotation(verts[i])) {
                auto it = loc.find(u);
                if (it != loc.end()) rot[i].push_back(it->second);
            }
        // restricted rotations of the triangle corners start anywhere; fine for peeling
        SchnyderWood sw = schnyder_wood(rot, {0, 1, 2}, cols);
        for (const auto& a : sw.arcs) {
            int u = verts[a.from], v = verts[a.to];
            f.arcs[t.edge_index(u, v)] = {u, v, a.color};
        }
    };
    sub(con.removed5, {o[1], o[2], con.c5}, {2, 3, 5});
    sub(con.removed2, {o[4], con.c2, o[3]}, {5, 2, 4});

    SchnyderWood wt = schnyder_wood(con.rot, con.outer, {1, 3, 4});
    std::map<std::pair<int, int>, ColoredArc> tarcs;
    for (const auto& a : wt.arcs) tarcs[std::minmax(a.from, a.to)] = a;

    for (int e = 0; e < t.num_edges(); ++e) {
        if (f.arcs[e].color) continue;
        auto [u, v] = t.edge(e);
        if (v == o[1] || u == o[1]) {
            int x = (u == o[1]) ? v : u;
            f.arcs[e] = {x, o[1], 2};
        } else if (v == o[4] || u == o[4]) {
            int x = (u == o[4]) ? v : u;
            f.arcs[e] = {x, o[4], 5};
        } else {
            int tu = con.to_t[u], tv = con.to_t[v];
            auto it = tarcs.find(std::minmax(tu, tv));
            if (tu < 0 || tv < 0 || it == tarcs.end())
                throw Error(ErrorKind::InvalidForest, "edge missing from contraction");
            const auto& a = it->second;
            if (a.from == tu)
                f.arcs[e] = {u, v, a.color};
            else
                f.arcs[e] = {v, u, a.color};
        }
    }
    return f;
}

ForestReport validate_fcf(const Triangulation& t, const FiveColorForest& f) {
    if (static_cast<int>(f.arcs.size()) != t.num_edges()) return {false, "structure", -1, "arc count mismatch"};
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [u, v] = t.edge(e);
        const auto& a = f.arcs[e];
        if (!((a.from == u && a.to == v) || (a.from == v && a.to == u)))
            return {false, "structure", u, "arc does not match edge " + std::to_string(e)};
        if (a.color < 1 || a.color > 5) return {false, "structure", u, "color out of range"};
    }
    for (int e = 0; e < t.num_edges(); ++e) {
        const auto& a = f.arcs[e];
        for (int w : {a.from, a.to}) {
            int i = t.outer_index(w);
            if (!i) continue;
            if (a.to != w || a.color != i)
                return {false, "F1", w,
                        "edge " + std::to_string(t.label(a.from)) + "-" + std::to_string(t.label(a.to)) +
                            " at a" + std::to_string(i)};
        }
    }
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (t.is_outer(v)) continue;
        std::vector<int> s;
        bool out[6] = {};
        bool block[6] = {};
        for (int u : t.rotation(v)) {
            const auto& a = f.arcs[t.edge_index(v, u)];
            if (a.from == v) {
                if (out[a.color]) return {false, "F2", v, "two outgoing edges of color " + std::to_string(a.color)};
                out[a.color] = true;
                s.push_back(out_slot(a.color));
            } else {
                block[a.color] = true;
                s.push_back(in_slot(a.color));
            }
        }
        if (cyclic_descents(s) > 1) return {false, "F2", v, "clockwise block order violated"};
        for (int i = 1; i <= 5; ++i)
            if (!block[i] && !out[cmod(i - 2)] && !out[cmod(i + 2)])
                return {false, "F3", v, "block " + std::to_string(i) + " empty without outgoing i-2 or i+2"};
    }
    return {};
}

bool color_forests_acyclic(const Triangulation& t, const FiveColorForest& f) {
    for (int c = 1; c <= 5; ++c) {
        std::vector<std::pair<int, int>> arcs;
        for (const auto& a : f.arcs)
            if (a.color == c) arcs.emplace_back(a.from, a.to);
        if (!acyclic(t.num_vertices(), arcs)) return false;
    }
    return true;
}

bool mixed_orientations_acyclic(const Triangulation& t, const FiveColorForest& f) {
    for (int i = 1; i <= 5; ++i) {
        std::vector<std::pair<int, int>> arcs;
        for (const auto& a : f.arcs) {
            if (a.color == cmod(i - 2) || a.color == cmod(i + 2))
                arcs.emplace_back(a.to, a.from);
            else
                arcs.emplace_back(a.from, a.to);
        }
        if (!acyclic(t.num_vertices(), arcs)) return false;
    }
    return true;
}

}  // namespace pentact

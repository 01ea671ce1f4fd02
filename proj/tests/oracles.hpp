#pragma once

// Brute-force checkers shared by the unit tests and the acceptance binary.
// They use only the public rotation/face data, not the algorithms under test.

#include "pentact/io.hpp"
#include "pentact/layout.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using namespace pentact;

inline std::string data_path(const std::string& f) { return std::string(PENTACT_TEST_DATA) + "/" + f; }

inline nlohmann::json fig1_doc() { return nlohmann::json::parse(read_file(data_path("fig1.json"))); }
inline Triangulation fig1() { return build_from_edges(graph_input_from_json(fig1_doc())); }
inline FiveColorForest fig1_forest(const Triangulation& t) { return forest_from_json(t, fig1_doc()["forest"]); }

inline int vertex_with_label(const Triangulation& t, long long lab) {
    for (int v = 0; v < t.num_vertices(); ++v)
        if (t.label(v) == lab) return v;
    return -1;
}

// Undirected simple cycles of length >= 3 in an adjacency list, each reported once.
inline std::vector<std::vector<int>> simple_cycles(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on(n, 0);
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int w : adj[v]) {
            if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            if (w <= s || on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            dfs(s, w);
            path.pop_back();
            on[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on[s] = 1;
        dfs(s, s);
        on[s] = 0;
    }
    return out;
}

// Directed simple cycles of G* in x (vertex sequences starting at their smallest vertex).
inline std::vector<std::vector<int>> directed_cycles(const StackExtension& se, const Alpha5Orientation& x) {
    const int n = se.num_vertices();
    std::vector<std::vector<int>> out_adj(n);
    for (int e = 0; e < se.num_edges(); ++e) out_adj[tail(se, x, e)].push_back(head(se, x, e));
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on(n, 0);
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int w : out_adj[v]) {
            if (w == s) out.push_back(path);
            if (w <= s || on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            dfs(s, w);
            path.pop_back();
            on[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on[s] = 1;
        dfs(s, s);
        on[s] = 0;
    }
    return out;
}

// Faces of G* enclosed by the closed vertex sequence `cyc`: flood the dual from the outer face
// without crossing cycle edges.
inline std::vector<char> inside_faces(const StackExtension& se, const std::vector<int>& cyc) {
    const auto& faces = se.faces();
    const int F = static_cast<int>(faces.size());
    auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
    std::set<std::pair<int, int>> on_c;
    for (size_t i = 0; i < cyc.size(); ++i) on_c.insert(key(cyc[i], cyc[(i + 1) % cyc.size()]));
    std::map<std::pair<int, int>, std::vector<int>> by_pair;  // face F = outer face
    for (int f = 0; f < F; ++f)
        for (int k = 0; k < 3; ++k) by_pair[key(faces[f].verts[k], faces[f].verts[(k + 1) % 3])].push_back(f);
    const auto& o = se.base().outer();
    for (int i = 0; i < 5; ++i) by_pair[key(o[i], o[(i + 1) % 5])].push_back(F);
    std::vector<std::vector<int>> dual(F + 1);
    for (const auto& [p, fs] : by_pair) {
        if (on_c.count(p) || fs.size() != 2) continue;
        dual[fs[0]].push_back(fs[1]);
        dual[fs[1]].push_back(fs[0]);
    }
    std::vector<char> out(F + 1, 0);
    std::vector<int> st = {F};
    out[F] = 1;
    while (!st.empty()) {
        int f = st.back();
        st.pop_back();
        for (int g : dual[f])
            if (!out[g]) out[g] = 1, st.push_back(g);
    }
    std::vector<char> in(F);
    for (int f = 0; f < F; ++f) in[f] = !out[f];
    return in;
}

// G* inner edges lying inside the cycle (on an enclosed face, not on the cycle itself)
inline std::vector<int> edges_inside(const StackExtension& se, const std::vector<int>& cyc) {
    auto in = inside_faces(se, cyc);
    std::set<std::pair<int, int>> on_c;
    for (size_t i = 0; i < cyc.size(); ++i) on_c.insert(std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]));
    std::set<int> res;
    const auto& faces = se.faces();
    for (size_t f = 0; f < faces.size(); ++f) {
        if (!in[f]) continue;
        for (int k = 0; k < 3; ++k) {
            int a = faces[f].verts[k], b = faces[f].verts[(k + 1) % 3];
            int e = se.edge_between(a, b);
            if (e >= 0 && !on_c.count(std::minmax(a, b))) res.insert(e);
        }
    }
    return {res.begin(), res.end()};
}

inline int outer_edges_on(const Triangulation& t, const std::vector<int>& cyc) {
    int k = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (t.is_outer(a) && t.is_outer(b)) ++k;
    }
    return k;
}

// edges pointing from the cycle into its interior
inline int inward_edges(const StackExtension& se, const Alpha5Orientation& x, const std::vector<int>& cyc,
                        const std::vector<int>& inside) {
    std::set<int> on(cyc.begin(), cyc.end());
    int k = 0;
    for (int e : inside) k += on.count(tail(se, x, e)) > 0;
    return k;
}

inline bool has_chordal_path(const StackExtension& se, const Alpha5Orientation& x, const std::vector<int>& cyc) {
    auto inside = edges_inside(se, cyc);
    std::vector<std::vector<int>> adj(se.num_vertices());
    for (int e : inside) adj[tail(se, x, e)].push_back(head(se, x, e));
    std::set<int> on(cyc.begin(), cyc.end());
    for (int s : cyc) {
        std::vector<char> seen(se.num_vertices(), 0);
        std::vector<int> st = {s};
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : adj[v]) {
                if (on.count(w)) return true;
                if (!seen[w]) seen[w] = 1, st.push_back(w);
            }
        }
    }
    return false;
}

inline bool is_facial(const StackExtension& se, const std::vector<int>& cyc) {
    if (cyc.size() != 3) return false;
    std::set<int> c(cyc.begin(), cyc.end());
    for (const auto& f : se.faces())
        if (std::set<int>(f.verts.begin(), f.verts.end()) == c) return true;
    return false;
}

// All forests of t, one per alpha5-orientation.
inline std::vector<FiveColorForest> all_forests(const StackExtension& se) {
    std::vector<FiveColorForest> res;
    for (const auto& x : enumerate_alpha5(se)) res.push_back(psi(se, x));
    return res;
}

}  // namespace oracle

#include "pentact/triangulation.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace pentact {

namespace {

int pos_in(const std::vector<int>& r, int u) {
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == u) return i;
    return -1;
}

}  // namespace

Triangulation::Triangulation(std::array<int, 5> outer, Rotation rot, std::vector<long long> labels)
    : outer_(outer), rot_(std::move(rot)), labels_(std::move(labels)) {
    const int n = num_vertices();
    if (labels_.empty()) {
        labels_.resize(n);
        for (int v = 0; v < n; ++v) labels_[v] = v;
    }
    outer_idx_.assign(n, 0);
    for (int i = 0; i < 5; ++i) {
        if (outer_[i] < 0 || outer_[i] >= n) throw Error(ErrorKind::OuterFaceMismatch, "outer vertex out of range");
        if (outer_idx_[outer_[i]] != 0) throw Error(ErrorKind::OuterFaceMismatch, "outer vertex repeated");
        outer_idx_[outer_[i]] = i + 1;
    }
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (int u : rot_[v]) {
            if (u < 0 || u >= n) throw Error(ErrorKind::Parse, "neighbour out of range");
            if (u == v) throw Error(ErrorKind::MultiEdge, "loop at vertex " + std::to_string(labels_[v]));
            if (!seen.insert(u).second)
                throw Error(ErrorKind::MultiEdge, "repeated neighbour at vertex " + std::to_string(labels_[v]));
        }
    }
    offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rot_[v].size());
    he_.resize(offset_[n]);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
            int u = rot_[v][i];
            int j = pos_in(rot_[u], v);
            if (j < 0)
                throw Error(ErrorKind::Parse, "rotation not symmetric at " + std::to_string(labels_[v]) + "-" +
                                                  std::to_string(labels_[u]));
            HalfEdge& h = he_[offset_[v] + i];
            h.origin = v;
            h.target = u;
            h.twin = offset_[u] + j;
            h.face = -1;
            h.edge = -1;
        }
    }
    for (auto& h : he_) {
        int v = h.target;
        int u = h.origin;
        int j = pos_in(rot_[v], u);
        int k = static_cast<int>(rot_[v].size());
        h.next = offset_[v] + (j + k - 1) % k;
    }
    // faces
    std::vector<int> raw(he_.size(), -1);
    int outer_start = half_edge(outer_[1], outer_[0]);
    for (int s = 0; s < static_cast<int>(he_.size()); ++s) {
        if (raw[s] >= 0) continue;
        std::vector<int> cyc;
        int h = s;
        int id = static_cast<int>(raw_faces_.size());
        while (raw[h] < 0) {
            raw[h] = id;
            cyc.push_back(he_[h].origin);
            h = he_[h].next;
        }
        raw_faces_.push_back(cyc);
    }
    if (outer_start >= 0) outer_face_raw_ = raw[outer_start];
    raw_to_face_.assign(raw_faces_.size(), -1);
    for (int r = 0; r < static_cast<int>(raw_faces_.size()); ++r) {
        if (r == outer_face_raw_ || raw_faces_[r].size() != 3) continue;
        auto c = raw_faces_[r];
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        raw_to_face_[r] = static_cast<int>(faces_.size());
        faces_.push_back({c[0], c[1], c[2]});
    }
    for (int h = 0; h < static_cast<int>(he_.size()); ++h) he_[h].face = raw_to_face_[raw[h]];
    // edges
    for (int v = 0; v < n; ++v)
        for (int u : rot_[v]) {
            if (u < v) continue;
            int a = outer_idx_[v], b = outer_idx_[u];
            if (a && b && ((a % 5) + 1 == b || (b % 5) + 1 == a)) continue;
            edges_.emplace_back(v, u);
        }
    std::sort(edges_.begin(), edges_.end());
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        he_[half_edge(u, v)].edge = e;
        he_[half_edge(v, u)].edge = e;
    }
}

int Triangulation::half_edge(int u, int v) const {
    int j = pos_in(rot_[u], v);
    return j < 0 ? -1 : offset_[u] + j;
}

int Triangulation::next_cw(int v, int u) const {
    const auto& r = rot_[v];
    int j = pos_in(r, u);
    return r[(j + 1) % r.size()];
}

int Triangulation::prev_cw(int v, int u) const {
    const auto& r = rot_[v];
    int j = pos_in(r, u);
    return r[(j + r.size() - 1) % r.size()];
}

int Triangulation::face_outer_count(int f) const {
    int c = 0;
    for (int v : faces_[f]) c += is_outer(v) ? 1 : 0;
    return c;
}

int Triangulation::face_of(int u, int v) const {
    int h = half_edge(u, v);
    return h < 0 ? -1 : he_[h].face;
}

int Triangulation::edge_index(int u, int v) const {
    int h = half_edge(u, v);
    return h < 0 ? -1 : he_[h].edge;
}

ValidationReport validate(const Triangulation& t) {
    ValidationReport r;
    auto fail = [&](ErrorKind k, std::string msg) {
        r.ok = false;
        r.kind = k;
        r.message = std::move(msg);
        return r;
    };
    auto lab = [&](int v) { return std::to_string(t.label(v)); };
    const auto& o = t.outer();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == 4);
            if (!consecutive && t.adjacent(o[i], o[j]))
                return fail(ErrorKind::ChordPresent, "chord a" + std::to_string(i + 1) + "a" + std::to_string(j + 1) +
                                                         " (" + lab(o[i]) + "-" + lab(o[j]) + ")");
        }
    long long V = t.num_vertices();
    long long E2 = static_cast<long long>(t.half_edges().size());
    long long F = static_cast<long long>(t.raw_faces().size());
    if (V - E2 / 2 + F != 2) return fail(ErrorKind::NonPlanar, "rotation system is not a connected plane map (Euler)");
    if (t.outer_face_raw() < 0) return fail(ErrorKind::OuterFaceMismatch, "a1 and a2 are not adjacent");
    auto of = t.raw_faces()[t.outer_face_raw()];
    std::rotate(of.begin(), std::find(of.begin(), of.end(), o[1]), of.end());
    std::vector<int> expect = {o[1], o[0], o[4], o[3], o[2]};
    if (of != expect) return fail(ErrorKind::OuterFaceMismatch, "outer face is not a1..a5 in clockwise order");
    for (int f = 0; f < static_cast<int>(t.raw_faces().size()); ++f) {
        if (f == t.outer_face_raw()) continue;
        const auto& c = t.raw_faces()[f];
        if (c.size() != 3) {
            std::string s;
            for (int v : c) s += (s.empty() ? "" : ",") + lab(v);
            return fail(ErrorKind::NotTriangulated, std::to_string(c.size()) + "-gonal face (" + s + ")");
        }
    }
    int n = t.num_inner_vertices();
    if (n < 1) return fail(ErrorKind::InvalidSize, "no inner vertex");
    if (t.num_faces() != 2 * n + 3 || t.num_edges() != 3 * n + 2)
        return fail(ErrorKind::NotTriangulated, "face or edge count inconsistent with Euler");
    return r;
}

void require_valid(const Triangulation& t) {
    auto r = validate(t);
    if (!r.ok) throw Error(r.kind, r.message);
}

Triangulation build_from_edges(const GraphInput& in) {
    std::set<long long> ids(in.outer.begin(), in.outer.end());
    if (ids.size() != 5) throw Error(ErrorKind::OuterFaceMismatch, "outer vertices must be distinct");
    std::set<std::pair<long long, long long>> seen;
    for (auto [u, v] : in.edges) {
        if (u == v) throw Error(ErrorKind::MultiEdge, "loop at " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw Error(ErrorKind::MultiEdge, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        ids.insert(u);
        ids.insert(v);
    }
    std::vector<long long> labels(ids.begin(), ids.end());
    std::map<long long, int> idx;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) idx[labels[i]] = i;
    const int n = static_cast<int>(labels.size());
    std::array<int, 5> outer{};
    for (int i = 0; i < 5; ++i) outer[i] = idx[in.outer[i]];
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : in.edges) {
        adj[idx[u]].insert(idx[v]);
        adj[idx[v]].insert(idx[u]);
    }

    Rotation rot(n);
    bool computed = false, reflected = false;
    if (in.rotations) {
        for (const auto& [id, nb] : *in.rotations) {
            auto it = idx.find(id);
            if (it == idx.end()) throw Error(ErrorKind::Parse, "rotation for unknown vertex " + std::to_string(id));
            auto& r = rot[it->second];
            if (!r.empty()) throw Error(ErrorKind::Parse, "rotation given twice for " + std::to_string(id));
            for (long long w : nb) {
                auto jt = idx.find(w);
                if (jt == idx.end() || !adj[it->second].count(jt->second))
                    throw Error(ErrorKind::Parse, "rotation of " + std::to_string(id) + " lists non-neighbour " +
                                                      std::to_string(w));
                r.push_back(jt->second);
            }
            if (r.size() != adj[it->second].size())
                throw Error(ErrorKind::Parse, "rotation of " + std::to_string(id) + " misses neighbours");
        }
        for (int v = 0; v < n; ++v)
            if (rot[v].empty() && !adj[v].empty())
                throw Error(ErrorKind::Parse, "missing rotation for " + std::to_string(labels[v]));
    } else {
        using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                        boost::property<boost::edge_index_t, int>>;
        G g(n);
        int k = 0;
        for (int v = 0; v < n; ++v)
            for (int u : adj[v])
                if (u > v) boost::add_edge(v, u, k++, g);
        using Emb = std::vector<std::vector<boost::graph_traits<G>::edge_descriptor>>;
        Emb emb(n);
        if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                                 boost::boyer_myrvold_params::embedding = &emb[0]))
            throw Error(ErrorKind::NonPlanar, "graph is not planar");
        for (int v = 0; v < n; ++v)
            for (auto e : emb[v]) {
                int a = static_cast<int>(boost::source(e, g)), b = static_cast<int>(boost::target(e, g));
                rot[v].push_back(a == v ? b : a);
            }
        computed = true;
        Triangulation probe(outer, rot, labels);
        auto rep = validate(probe);
        if (!rep.ok && rep.kind == ErrorKind::OuterFaceMismatch) {
            for (auto& r : rot) std::reverse(r.begin(), r.end());
            reflected = true;
        }
    }
    Triangulation t(outer, std::move(rot), labels);
    t.set_embedding_origin(computed, reflected);
    require_valid(t);
    return t;
}

Triangulation wheel5() {
    Rotation rot(6);
    for (int i = 0; i < 5; ++i) rot[i] = {(i + 1) % 5, 5, (i + 4) % 5};
    rot[5] = {0, 1, 2, 3, 4};
    return Triangulation({0, 1, 2, 3, 4}, rot);
}

void stack_into_face(Rotation& rot, std::array<int, 3> f) {
    int w = static_cast<int>(rot.size());
    rot.push_back({f[0], f[1], f[2]});
    for (int j = 0; j < 3; ++j) {
        int v = f[j], after = f[(j + 1) % 3];
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), after);
        r.insert(it + 1, w);
    }
}

bool try_flip(Rotation& rot, const std::array<int, 5>& outer, int u, int w) {
    auto is_outer = [&](int v) { return std::find(outer.begin(), outer.end(), v) != outer.end(); };
    if (is_outer(u) && is_outer(w)) return false;
    auto nb = [&](int v, int a, int d) {
        auto& r = rot[v];
        int j = pos_in(r, a);
        int k = static_cast<int>(r.size());
        return r[(j + d + k) % k];
    };
    if (pos_in(rot[u], w) < 0) return false;
    int x = nb(u, w, +1), y = nb(u, w, -1);
    if (x == y || pos_in(rot[x], y) >= 0) return false;
    if (is_outer(x) && is_outer(y)) return false;
    rot[u].erase(std::find(rot[u].begin(), rot[u].end(), w));
    rot[w].erase(std::find(rot[w].begin(), rot[w].end(), u));
    auto& rx = rot[x];
    rx.insert(std::find(rx.begin(), rx.end(), u) + 1, y);
    auto& ry = rot[y];
    ry.insert(std::find(ry.begin(), ry.end(), w) + 1, x);
    return true;
}

Triangulation generate_random(int n_inner, std::uint64_t seed) {
    if (n_inner < 1) throw Error(ErrorKind::InvalidSize, "n_inner must be >= 1");
    std::mt19937_64 rng(seed);
    Rotation rot = wheel5().rotations();
    const std::array<int, 5> outer = {0, 1, 2, 3, 4};
    for (int k = 1; k < n_inner; ++k) {
        Triangulation cur(outer, rot);
        int f = static_cast<int>(rng() % static_cast<std::uint64_t>(cur.num_faces()));
        stack_into_face(rot, cur.face(f));
    }
    if (n_inner > 1) {
        const int attempts = 3 * n_inner;
        for (int a = 0; a < attempts; ++a) {
            Triangulation cur(outer, rot);
            auto [u, w] = cur.edge(static_cast<int>(rng() % static_cast<std::uint64_t>(cur.num_edges())));
            try_flip(rot, outer, u, w);
        }
    }
    Triangulation t(outer, rot);
    require_valid(t);
    return t;
}

std::string canonical_code(const Triangulation& t) {
    const int n = t.num_vertices();
    std::vector<int> lab(n, -1);
    std::deque<std::pair<int, int>> q;  // vertex, reference neighbour
    int next = 0;
    for (int i = 0; i < 5; ++i) {
        lab[t.outer()[i]] = next++;
    }
    for (int i = 0; i < 5; ++i) q.emplace_back(t.outer()[i], t.outer()[(i + 1) % 5]);
    std::vector<int> ref(n, -1);
    for (int i = 0; i < 5; ++i) ref[t.outer()[i]] = t.outer()[(i + 1) % 5];
    while (!q.empty()) {
        auto [v, r] = q.front();
        q.pop_front();
        const auto& rv = t.rotation(v);
        int j = pos_in(rv, r);
        for (int k = 0; k < static_cast<int>(rv.size()); ++k) {
            int u = rv[(j + k) % rv.size()];
            if (lab[u] < 0) {
                lab[u] = next++;
                ref[u] = v;
                q.emplace_back(u, v);
            }
        }
    }
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[lab[v]] = v;
    std::ostringstream os;
    for (int l = 0; l < n; ++l) {
        int v = inv[l];
        const auto& rv = t.rotation(v);
        int j = pos_in(rv, ref[v]);
        os << l << ':';
        for (int k = 0; k < static_cast<int>(rv.size()); ++k) os << lab[rv[(j + k) % rv.size()]] << ',';
        os << ';';
    }
    return os.str();
}

std::vector<Triangulation> enumerate_triangulations(int n_inner) {
    if (n_inner < 1) throw Error(ErrorKind::InvalidSize, "n_inner must be >= 1");
    std::map<std::string, Triangulation> level;
    auto w = wheel5();
    level.emplace(canonical_code(w), w);
    for (int k = 2; k <= n_inner; ++k) {
        std::map<std::string, Triangulation> nxt;
        std::deque<Triangulation> work;
        auto add = [&](const Rotation& rot) {
            Triangulation t(w.outer(), rot);
            auto code = canonical_code(t);
            if (nxt.count(code)) return;
            nxt.emplace(code, t);
            work.push_back(t);
        };
        for (auto& [code, t] : level)
            for (int f = 0; f < t.num_faces(); ++f) {
                Rotation rot = t.rotations();
                stack_into_face(rot, t.face(f));
                add(rot);
            }
        while (!work.empty()) {
            Triangulation t = work.front();
            work.pop_front();
            for (auto [u, v] : t.edges()) {
                Rotation rot = t.rotations();
                if (try_flip(rot, t.outer(), u, v)) add(rot);
            }
        }
        level = std::move(nxt);
    }
    std::vector<Triangulation> out;
    for (auto& [code, t] : level) out.push_back(t);
    return out;
}

std::pair<int, std::vector<int>> maximal_triangle(const Triangulation& t, int i) {
    const auto& o = t.outer();
    int x = o[(i - 1) % 5], y = o[i % 5], prev = o[(i + 3) % 5];
    std::vector<int> between;
    for (int u = t.next_cw(x, y); u != prev; u = t.next_cw(x, u)) between.push_back(u);
    int apex = -1, apos = -1;
    for (int k = 0; k < static_cast<int>(between.size()); ++k)
        if (t.adjacent(between[k], y)) {
            apex = between[k];
            apos = k;
        }
    if (apex < 0) throw Error(ErrorKind::NotTriangulated, "no common neighbour on an outer edge");
    std::vector<char> mark(t.num_vertices(), 0);
    mark[x] = mark[y] = mark[apex] = 1;
    std::vector<int> inside, stack;
    for (int k = 0; k < apos; ++k) {
        mark[between[k]] = 2;
        stack.push_back(between[k]);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        inside.push_back(v);
        for (int u : t.rotation(v))
            if (!mark[u]) {
                mark[u] = 2;
                stack.push_back(u);
            }
    }
    std::sort(inside.begin(), inside.end());
    return {apex, inside};
}

SchnyderContraction contract_for_schnyder(const Triangulation& t) {
    SchnyderContraction c;
    const auto& o = t.outer();
    auto [c5, in5] = maximal_triangle(t, 2);
    auto [c2, in2] = maximal_triangle(t, 4);
    c.c5 = c5;
    c.c2 = c2;
    c.removed5 = in5;
    c.removed2 = in2;
    const int n = t.num_vertices();
    c.to_t.assign(n, -2);
    for (int v : in5) c.to_t[v] = -1;
    for (int v : in2) c.to_t[v] = -1;
    int m = 0;
    for (int v = 0; v < n; ++v) {
        if (c.to_t[v] == -1 || v == o[2] || v == o[4]) continue;
        c.to_t[v] = m++;
        c.from_t.push_back(v);
    }
    c.to_t[o[2]] = c.to_t[o[1]];
    c.to_t[o[4]] = c.to_t[o[3]];
    c.rot.assign(m, {});
    auto push_mapped = [&](std::vector<int>& r, int u) {
        int tu = c.to_t[u];
        if (tu < 0) return;
        if (!r.empty() && r.back() == tu) return;
        r.push_back(tu);
    };
    auto finish = [](std::vector<int>& r) {
        while (r.size() > 1 && r.front() == r.back()) r.pop_back();
    };
    auto merged = [&](int x, int y, int apex, int before_x, int after_y) {
        std::vector<int> r;
        for (int u = apex;; u = t.next_cw(x, u)) {
            push_mapped(r, u);
            if (u == before_x) break;
        }
        for (int u = after_y; u != apex; u = t.next_cw(y, u)) push_mapped(r, u);
        finish(r);
        return r;
    };
    for (int tv = 0; tv < m; ++tv) {
        int v = c.from_t[tv];
        if (v == o[1]) {
            c.rot[tv] = merged(o[1], o[2], c5, o[0], o[3]);
        } else if (v == o[3]) {
            c.rot[tv] = merged(o[3], o[4], c2, o[2], o[0]);
        } else {
            std::vector<int> r;
            for (int u : t.rotation(v)) push_mapped(r, u);
            finish(r);
            c.rot[tv] = r;
        }
    }
    c.outer = {c.to_t[o[0]], c.to_t[o[1]], c.to_t[o[3]]};
    return c;
}

}  // namespace pentact

#include "pentact/system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pentact {

namespace {

bool neg(const Q5& v) { return v.sign() < 0; }

}  // namespace

Skeleton::Skeleton(const StackExtension& se, const FiveColorForest& f, const Alpha5Orientation& x)
    : se_(&se), f_(f), x_(x) {
    const Triangulation& t = se.base();
    const int N = t.num_vertices();
    const int F = t.num_faces();
    var_of_vertex_.assign(N, -1);
    for (int v = 0; v < N; ++v)
        if (!t.is_outer(v)) {
            var_of_vertex_[v] = num_inner_++;
            vertex_of_var_.push_back(v);
        }
    quads_.resize(F);
    segs_.resize(4 * F);
    for (int fi = 0; fi < F; ++fi) {
        const auto& fv = t.face(fi);
        FaceQuad& q = quads_[fi];
        q.stack = se.stack_of_face(fi);
        int pj = -1;
        if (q.stack >= 0) {
            for (int j = 0; j < 3; ++j)
                if (tail(se, x, se.stack_edge(fi, fv[j])) == fv[j]) {
                    if (pj >= 0) throw Error(ErrorKind::InvalidForest, "stack vertex with two incoming edges");
                    pj = j;
                }
        } else {
            q.corner = true;
            for (int j = 0; j < 3; ++j)
                if (t.is_outer(fv[j]) && t.is_outer(fv[(j + 1) % 3])) pj = (j + 1) % 3;
        }
        if (pj < 0) throw Error(ErrorKind::InvalidForest, "face " + std::to_string(fi) + " has no concave corner");
        q.pqr = {fv[pj], fv[(pj + 1) % 3], fv[(pj + 2) % 3]};
        auto [p, qq, r] = q.pqr;
        q.nodes = {contact_node(r, p), concave_node(fi), contact_node(p, qq), contact_node(qq, r)};
        const int owners[4] = {p, p, qq, r};
        for (int k = 0; k < 4; ++k) {
            SkeletonSegment& s = segs_[segment_id(fi, k + 1)];
            s.face = fi;
            s.role = k + 1;
            s.owner = owners[k];
            s.from = q.nodes[k];
            s.to = q.nodes[(k + 1) % 4];
            if (t.is_outer(s.owner)) {
                s.side = t.outer_index(s.owner);
                frame_segs_[s.side - 1].push_back(segment_id(fi, k + 1));
            }
        }
    }
    rings_.resize(N);
    for (int w = 0; w < N; ++w) {
        if (t.is_outer(w)) continue;
        std::map<int, int> color_of_edge;
        for (auto [e, c] : corner_colors(se, x, f, w)) color_of_edge[e] = c;
        auto& ring = rings_[w];
        for (int xk : t.rotation(w)) {
            int e = t.edge_index(w, xk);
            int fi = t.face_of(w, xk);
            const FaceQuad& q = quads_[fi];
            RingEntry c{contact_node(w, xk), tail(se, x, e) == w ? color_of_edge.at(e) : 0, -1};
            if (q.pqr[0] == w) {
                c.seg_after = segment_id(fi, 2);
                ring.push_back(c);
                ring.push_back({concave_node(fi), color_of_edge.at(se.stack_edge(fi, w)), segment_id(fi, 1)});
            } else {
                c.seg_after = segment_id(fi, q.pqr[1] == w ? 3 : 4);
                ring.push_back(c);
            }
        }
        const int L = static_cast<int>(ring.size());
        int start = 0;
        while (ring[start].color == 0) ++start;
        int last = 0;
        for (int k = 0; k < L; ++k) {
            const RingEntry& re = ring[(start + k) % L];
            if (re.color) last = re.color;
            segs_[re.seg_after].side = cmod(last + 3);
        }
    }
    for (const auto& s : segs_)
        if (s.side == 0) throw Error(ErrorKind::InvalidForest, "segment without side");
}

int Skeleton::contact_node(int u, int w) const {
    const Triangulation& t = graph();
    int e = t.edge_index(u, w);
    if (e >= 0) return e;
    int i = t.outer_index(u), j = t.outer_index(w);
    if (i && j) {
        if (j == i % 5 + 1) return frame_corner_node(i);
        if (i == j % 5 + 1) return frame_corner_node(j);
    }
    return -1;
}

std::string Skeleton::variable_name(int i) const {
    if (i < num_inner_) return "x_v" + std::to_string(graph().label(vertex_of_var_[i]));
    int k = i - num_inner_;
    return "x_f" + std::to_string(k / 2) + "_" + std::to_string(k % 2 + 1);
}

std::array<Q5, 2> role_coefficients(int role) {
    switch (role) {
        case 1: return {Q5(1), Q5(0)};
        case 2: return {Q5(0), Q5(1)};
        case 3: return {Q5(1), Q5::phi()};
        default: return {Q5::phi(), Q5(1)};
    }
}

LinearSystem assemble(const Skeleton& s) {
    const Triangulation& t = s.graph();
    LinearSystem sys;
    sys.dim = s.num_variables();
    auto add_segment = [&](std::map<int, Q5>& row, int seg) {
        const auto& sg = s.segments()[seg];
        auto c = role_coefficients(sg.role);
        for (int k = 0; k < 2; ++k)
            if (!c[k].is_zero()) row[s.face_var(sg.face, k + 1)] += c[k];
    };
    auto push = [&](const std::map<int, Q5>& row, Q5 rhs) {
        std::vector<std::pair<int, Q5>> r;
        for (const auto& [col, v] : row)
            if (!v.is_zero()) r.emplace_back(col, v);
        sys.rows.push_back(std::move(r));
        sys.rhs.push_back(std::move(rhs));
    };
    {
        std::map<int, Q5> row;
        for (int seg : s.frame_segments(1)) add_segment(row, seg);
        push(row, Q5(1));
    }
    for (int i = 0; i < t.num_inner_vertices(); ++i) {
        int v = s.vertex_of_var(i);
        std::array<std::map<int, Q5>, 5> rows;
        for (const auto& re : s.ring(v)) add_segment(rows[s.segments()[re.seg_after].side - 1], re.seg_after);
        for (auto& row : rows) {
            row[i] -= Q5(1);
            push(row, Q5(0));
        }
    }
    for (int f = 0; f < t.num_faces(); ++f)
        if (s.quads()[f].corner) push({{s.face_var(f, 1), Q5(1)}}, Q5(0));
    if (static_cast<int>(sys.rows.size()) != sys.dim)
        throw Error(ErrorKind::DimensionMismatch, std::to_string(sys.rows.size()) + " equations for " +
                                                      std::to_string(sys.dim) + " variables");
    return sys;
}

std::vector<Q5> solve(const LinearSystem& sys) {
    const int d = sys.dim;
    if (d > 4096) throw Error(ErrorKind::TooLarge, "system dimension " + std::to_string(d) + " exceeds 4096");
    std::vector<std::vector<Q5>> a(d, std::vector<Q5>(d + 1));
    for (int r = 0; r < d; ++r) {
        for (const auto& [c, v] : sys.rows[r]) {
            if (c < 0 || c >= d) throw Error(ErrorKind::DimensionMismatch, "column out of range");
            a[r][c] = v;
        }
        a[r][d] = sys.rhs[r];
    }
    for (int k = 0; k < d; ++k) {
        int piv = -1;
        double best = -1;
        for (int r = k; r < d; ++r) {
            if (a[r][k].is_zero()) continue;
            double m = std::abs(to_float(a[r][k]));
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (piv < 0) throw Error(ErrorKind::SingularMatrix, "no pivot in column " + std::to_string(k));
        std::swap(a[k], a[piv]);
        Q5 inv = a[k][k].inverse();
        std::vector<int> nz;
        for (int j = k + 1; j <= d; ++j)
            if (!a[k][j].is_zero()) {
                a[k][j] *= inv;
                nz.push_back(j);
            }
        a[k][k] = Q5(1);
        for (int r = k + 1; r < d; ++r) {
            if (a[r][k].is_zero()) continue;
            Q5 fac = a[r][k];
            for (int j : nz) a[r][j] -= fac * a[k][j];
            a[r][k] = Q5(0);
        }
    }
    std::vector<Q5> x(d);
    for (int k = d - 1; k >= 0; --k) {
        Q5 v = a[k][d];
        for (int j = k + 1; j < d; ++j)
            if (!a[k][j].is_zero()) v -= a[k][j] * x[j];
        x[k] = std::move(v);
    }
    for (const auto& r : residual(sys, x))
        if (!r.is_zero()) throw Error(ErrorKind::SingularMatrix, "non-zero residual after elimination");
    return x;
}

std::vector<Q5> residual(const LinearSystem& sys, const std::vector<Q5>& x) {
    std::vector<Q5> res(sys.dim);
    for (int r = 0; r < sys.dim; ++r) {
        Q5 v = -sys.rhs[r];
        for (const auto& [c, coef] : sys.rows[r]) v += coef * x[c];
        res[r] = std::move(v);
    }
    return res;
}

std::vector<Q5> segment_values(const Skeleton& s, const std::vector<Q5>& sol) {
    std::vector<Q5> out(s.segments().size());
    for (size_t i = 0; i < out.size(); ++i) {
        const auto& sg = s.segments()[i];
        auto c = role_coefficients(sg.role);
        out[i] = c[0] * sol[s.face_var(sg.face, 1)] + c[1] * sol[s.face_var(sg.face, 2)];
    }
    return out;
}

namespace {

// the segment of face f other than `seg` that ends or starts at node
int other_segment_at(const Skeleton& s, int f, int node, int seg) {
    const auto& q = s.quads()[f];
    for (int k = 0; k < 4; ++k)
        if (q.nodes[k] == node) {
            int a = s.segment_id(f, k == 0 ? 4 : k), b = s.segment_id(f, k + 1);
            if (a != seg && b != seg) continue;
            return a == seg ? b : a;
        }
    return -1;
}

int owned_segment_at(const Skeleton& s, int f, int node, int owner) {
    const auto& q = s.quads()[f];
    for (int k = 0; k < 4; ++k)
        if (q.nodes[k] == node) {
            int a = s.segment_id(f, k == 0 ? 4 : k), b = s.segment_id(f, k + 1);
            if (s.segments()[a].owner == owner) return a;
            if (s.segments()[b].owner == owner) return b;
        }
    return -1;
}

struct Linker {
    const Skeleton& s;
    const StackExtension& se;
    const Alpha5Orientation& x;
    const std::vector<bool>& segneg;
    const std::vector<Q5>& sol;

    [[noreturn]] void fail(const std::string& m) const { throw Error(ErrorKind::CycleLinkFailure, m); }

    bool vneg(int v) const { return neg(sol[s.vertex_var(v)]); }

    int checked(int e, int from) const {
        if (e < 0 || tail(se, x, e) != from) fail("expected edge missing or misdirected");
        return e;
    }

    // corner node of v where out-edge e starts
    int corner_node(int e) const {
        if (!se.is_stack_edge(e)) return e;
        int st = head(se, x, e);
        return s.concave_node(se.face_of_stack(st));
    }

    // edges (in forward order) leading into tail(e)
    std::vector<int> predecessors(int e) const {
        const int v = tail(se, x, e);
        const auto& ring = s.ring(v);
        const int L = static_cast<int>(ring.size());
        const int P = corner_node(e);
        int i = 0;
        while (i < L && ring[i].node != P) ++i;
        if (i == L) fail("corner node not on ring");
        const bool cv = vneg(v);
        int dir, cur;
        int before = ring[(i + L - 1) % L].seg_after, after = ring[i].seg_after;
        if (segneg[after] != cv)
            dir = 1, cur = after;
        else if (segneg[before] != cv)
            dir = -1, cur = before;
        else
            fail("no sign change at corner");
        int j = i, far = -1, qn = -1;
        for (int step = 0; step < L; ++step) {
            int k = ((j + dir) % L + L) % L;
            if (ring[k].color != 0) fail("walk along side reached a corner of vertex " + std::to_string(v));
            int beyond = dir > 0 ? ring[k].seg_after : ring[(k + L - 1) % L].seg_after;
            if (segneg[beyond] != segneg[cur]) {
                far = beyond;
                qn = ring[k].node;
                break;
            }
            cur = beyond;
            j = k;
        }
        if (qn < 0) fail("no sign change along side");
        const int near = cur;
        const int uv = qn;  // contact node of an inner edge u -> v
        const auto [e0, e1] = se.endpoints(uv);
        const int u = e0 == v ? e1 : e0;
        checked(uv, u);
        const int fnear = s.segments()[near].face, ffar = s.segments()[far].face;
        const int unear = other_segment_at(s, fnear, qn, near), ufar = other_segment_at(s, ffar, qn, far);
        if (unear < 0 || ufar < 0 || s.segments()[unear].owner != u || s.segments()[ufar].owner != u)
            fail("contact node does not separate the expected segments");
        int F;
        if (segneg[unear] != segneg[near])
            F = fnear;
        else if (segneg[ufar] == segneg[far])
            return {uv};
        else
            F = ffar;
        const auto& q = s.quads()[F];
        if (q.stack < 0) fail("sign change in a corner face");
        const int X = q.pqr[0];
        const int sx = checked(se.stack_edge(F, X), X);
        if (X == v) return {sx, checked(se.stack_edge(F, u), q.stack), uv};
        return {sx, checked(se.stack_edge(F, v), q.stack)};
    }
};

}  // namespace

SignedSolution classify_and_extract(const Skeleton& s, const std::vector<Q5>& sol) {
    const StackExtension& se = s.extension();
    const Triangulation& t = s.graph();
    const Alpha5Orientation& x = s.orientation();
    SignedSolution out;
    out.values = sol;
    out.signs.resize(sol.size());
    for (size_t i = 0; i < sol.size(); ++i) {
        out.signs[i] = sol[i].sign();
        if (out.signs[i] < 0) ++out.negatives;
    }
    out.segments = segment_values(s, sol);
    std::vector<bool> segneg(out.segments.size());
    for (size_t i = 0; i < segneg.size(); ++i) segneg[i] = neg(out.segments[i]);

    out.quad_changes.resize(t.num_faces());
    for (int f = 0; f < t.num_faces(); ++f) {
        const auto& q = s.quads()[f];
        std::vector<int> roles = q.corner ? std::vector<int>{2, 3, 4} : std::vector<int>{1, 2, 3, 4};
        auto& qc = out.quad_changes[f];
        for (size_t k = 0; k < roles.size(); ++k) {
            int a = s.segment_id(f, roles[(k + roles.size() - 1) % roles.size()]);
            int b = s.segment_id(f, roles[k]);
            if (segneg[a] != segneg[b]) {
                ++qc.changes;
                if (roles[k] == 2) qc.at_concave = true;
            }
        }
    }

    std::vector<int> sep;
    for (int e = 0; e < t.num_edges(); ++e) {
        const int u = tail(se, x, e), w = head(se, x, e);
        std::array<int, 2> us{}, ws{};
        int k = 0;
        for (int fi : {t.face_of(u, w), t.face_of(w, u)}) {
            us[k] = owned_segment_at(s, fi, e, u);
            ws[k] = owned_segment_at(s, fi, e, w);
            ++k;
        }
        if (segneg[us[0]] != segneg[us[1]] && segneg[us[0]] == segneg[ws[0]] && segneg[us[1]] == segneg[ws[1]])
            sep.push_back(e);
    }
    for (int f = 0; f < t.num_faces(); ++f) {
        const auto& q = s.quads()[f];
        if (q.stack < 0) continue;
        if (segneg[s.segment_id(f, 1)] != segneg[s.segment_id(f, 2)]) sep.push_back(se.stack_edge(f, q.pqr[0]));
    }
    std::sort(sep.begin(), sep.end());
    out.separating = sep;
    if (sep.empty()) return out;

    Linker lk{s, se, x, segneg, sol};
    std::map<int, int> pred;
    std::set<int> sepset(sep.begin(), sep.end());
    auto setp = [&](int e, int p) {
        auto [it, fresh] = pred.emplace(e, p);
        if (!fresh && it->second != p)
            lk.fail("edge " + std::to_string(e) + " gets two predecessors");
    };
    for (int e : sep) {
        auto L = lk.predecessors(e);
        if (!sepset.count(L.front())) lk.fail("predecessor chain starts at a non-separating edge");
        setp(e, L.back());
        for (size_t i = L.size() - 1; i > 0; --i) setp(L[i], L[i - 1]);
    }
    std::set<int> values;
    for (const auto& [e, p] : pred) {
        if (!pred.count(p)) lk.fail("predecessor chain does not close");
        if (!values.insert(p).second) lk.fail("predecessor assignment is not injective");
    }
    std::set<int> done;
    for (const auto& [e0, p0] : pred) {
        if (done.count(e0)) continue;
        std::vector<int> cyc;
        int e = e0;
        do {
            done.insert(e);
            cyc.push_back(e);
            e = pred.at(e);
            if (cyc.size() > pred.size()) lk.fail("step bound exceeded");
        } while (e != e0);
        std::reverse(cyc.begin(), cyc.end());
        out.cycles.push_back(std::move(cyc));
    }
    return out;
}

bool cycles_directed_simple_disjoint(const StackExtension& se, const Alpha5Orientation& x,
                                     const std::vector<std::vector<int>>& cycles, std::string* why) {
    auto bad = [&](std::string m) {
        if (why) *why = std::move(m);
        return false;
    };
    std::set<int> used;
    for (const auto& c : cycles) {
        if (c.size() < 3) return bad("cycle shorter than 3");
        std::set<int> mine;
        for (size_t i = 0; i < c.size(); ++i) {
            if (head(se, x, c[i]) != tail(se, x, c[(i + 1) % c.size()])) return bad("cycle is not directed");
            if (!mine.insert(tail(se, x, c[i])).second) return bad("cycle is not simple");
            if (!used.insert(c[i]).second) return bad("cycles share edge " + std::to_string(c[i]));
        }
    }
    return true;
}

int cycles_shared_vertices(const StackExtension& se, const Alpha5Orientation& x,
                           const std::vector<std::vector<int>>& cycles) {
    std::map<int, int> cnt;
    for (const auto& c : cycles) {
        std::set<int> mine;
        for (int e : c) mine.insert(tail(se, x, e));
        for (int v : mine) ++cnt[v];
    }
    int shared = 0;
    for (auto [v, k] : cnt) shared += k > 1;
    return shared;
}

std::vector<Q5> solve_forest(const StackExtension& se, const FiveColorForest& f, const Alpha5Orientation& x) {
    Skeleton s(se, f, x);
    return solve(assemble(s));
}

IterateResult iterate(const StackExtension& se, const FiveColorForest& f0, int max_iters) {
    if (max_iters < 1) throw Error(ErrorKind::InvalidSize, "max_iters must be at least 1");
    IterateResult res;
    FiveColorForest f = f0;
    Alpha5Orientation x = chi(se, f);
    std::set<Alpha5Orientation> seen_exact;
    for (int it = 1; it <= max_iters; ++it) {
        res.iterations = it;
        std::uint64_t h = orientation_hash(x);
        if (!seen_exact.insert(x).second) {
            res.reason = "orientation revisited";
            res.forest = f;
            res.orientation = x;
            return res;
        }
        Skeleton s(se, f, x);
        auto sol = solve(assemble(s));
        auto ss = classify_and_extract(s, sol);
        res.trace.push_back({it, ss.negatives, static_cast<int>(ss.cycles.size()), h});
        if (ss.negatives == 0) {
            res.realized = true;
            res.forest = f;
            res.orientation = x;
            res.solution = std::move(sol);
            return res;
        }
        if (ss.cycles.empty())
            throw Error(ErrorKind::CycleLinkFailure, "negative values without a sign-separating cycle");
        std::vector<int> rev;
        for (const auto& c : ss.cycles) rev.insert(rev.end(), c.begin(), c.end());
        x = reverse_edges(x, rev);
        f = psi(se, x);
    }
    res.reason = "iteration cap reached";
    res.forest = f;
    res.orientation = x;
    return res;
}

ProgressResult progress_check(const StackExtension& se, const FiveColorForest& f, const FacialCycle& g) {
    Alpha5Orientation x = chi(se, f);
    int st = -1;
    for (int v : g.verts)
        if (se.is_stack(v)) st = v;
    if (st < 0) throw Error(ErrorKind::NotDirectedFace, "facial cycle without stack vertex");
    Alpha5Orientation y = flip(se, x, g);
    const int F = se.face_of_stack(st);
    Skeleton before(se, f, x);
    auto sb = solve(assemble(before));
    const auto& q = before.quads()[F];
    int k = 0;
    while (g.verts[k] != st) ++k;
    const int next = g.verts[(k + 1) % 3];
    const bool via_q = next == q.pqr[1];
    ProgressResult r;
    r.face = F;
    r.before = sb[before.face_var(F, via_q ? 2 : 1)].sign();
    FiveColorForest f2 = psi(se, y);
    Skeleton after(se, f2, y);
    auto sa = solve(assemble(after));
    r.after = sa[after.face_var(F, via_q ? 1 : 2)].sign();
    return r;
}

}  // namespace pentact

#pragma once

#include "pentact/forest.hpp"
#include "pentact/orientation.hpp"
#include "pentact/q5.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pentact {

// A straight piece of the boundary of a face gap. Traversing the gap clockwise it runs
// from node `from` to node `to` along side `side` of pentagon (or frame segment) `owner`.
struct SkeletonSegment {
    int face = -1;
    int role = 0;  // 1..4
    int owner = -1;
    int side = 0;  // 1..5
    int from = -1;
    int to = -1;
};

// Gap of an inner face. pqr is the face in clockwise order with p owning the concave corner;
// nodes = (contact rp, concave corner, contact pq, contact qr), segment k joins nodes k and k+1.
struct FaceQuad {
    std::array<int, 3> pqr{};
    int stack = -1;       // stack vertex of G*, -1 for the five corner faces
    bool corner = false;  // incident to two outer vertices; role 1 has length 0
    std::array<int, 4> nodes{};
};

// One node of the clockwise boundary walk around an inner pentagon.
struct RingEntry {
    int node = -1;
    int color = 0;      // corner color, 0 if the node lies inside a side
    int seg_after = -1; // segment between this node and the next one clockwise
};

class Skeleton {
public:
    Skeleton(const StackExtension& se, const FiveColorForest& f, const Alpha5Orientation& x);

    const StackExtension& extension() const { return *se_; }
    const Triangulation& graph() const { return se_->base(); }
    const FiveColorForest& forest() const { return f_; }
    const Alpha5Orientation& orientation() const { return x_; }

    // contact node of a base edge: inner edge e -> e, outer edge (a_i, a_i+1) -> E + i - 1;
    // concave node of face f -> E + 5 + f
    int num_nodes() const { return graph().num_edges() + 5 + graph().num_faces(); }
    int contact_node(int u, int w) const;
    int concave_node(int f) const { return graph().num_edges() + 5 + f; }
    int frame_corner_node(int i) const { return graph().num_edges() + i - 1; }  // between a_i and a_i+1

    const std::vector<FaceQuad>& quads() const { return quads_; }
    const std::vector<SkeletonSegment>& segments() const { return segs_; }
    int segment_id(int f, int role) const { return 4 * f + role - 1; }

    // inner vertex -> clockwise ring; empty for outer vertices
    const std::vector<RingEntry>& ring(int v) const { return rings_[v]; }
    // segments owned by outer vertex a_i along its frame side, gap-clockwise order not guaranteed
    const std::vector<int>& frame_segments(int i) const { return frame_segs_[i - 1]; }

    // variable layout: x_v for inner vertices, then (x_f1, x_f2) per face
    int num_variables() const { return num_inner_ + 2 * graph().num_faces(); }
    int vertex_var(int v) const { return var_of_vertex_[v]; }
    int vertex_of_var(int i) const { return vertex_of_var_[i]; }
    int face_var(int f, int role) const { return num_inner_ + 2 * f + role - 1; }
    std::string variable_name(int i) const;

private:
    const StackExtension* se_;
    FiveColorForest f_;
    Alpha5Orientation x_;
    int num_inner_ = 0;
    std::vector<FaceQuad> quads_;
    std::vector<SkeletonSegment> segs_;
    std::vector<std::vector<RingEntry>> rings_;
    std::array<std::vector<int>, 5> frame_segs_;
    std::vector<int> var_of_vertex_;
    std::vector<int> vertex_of_var_;
};

// Value of a segment in terms of its face variables: role 1 -> x1, 2 -> x2,
// 3 -> x1 + phi x2, 4 -> phi x1 + x2.
std::array<Q5, 2> role_coefficients(int role);

struct LinearSystem {
    int dim = 0;
    // sparse rows: (column, coefficient)
    std::vector<std::vector<std::pair<int, Q5>>> rows;
    std::vector<Q5> rhs;
};

LinearSystem assemble(const Skeleton& s);
std::vector<Q5> solve(const LinearSystem& sys);
// A x - b, exactly
std::vector<Q5> residual(const LinearSystem& sys, const std::vector<Q5>& x);

std::vector<Q5> segment_values(const Skeleton& s, const std::vector<Q5>& sol);

struct QuadSignChanges {
    int changes = 0;
    bool at_concave = false;
};

struct SignedSolution {
    std::vector<Q5> values;          // per variable
    std::vector<int> signs;          // per variable
    std::vector<Q5> segments;        // per segment
    int negatives = 0;               // negative variables
    std::vector<int> separating;     // G* edges found sign-separating
    std::vector<std::vector<int>> cycles;  // directed simple cycles as G* edge lists in order
    std::vector<QuadSignChanges> quad_changes;  // per face
};

SignedSolution classify_and_extract(const Skeleton& s, const std::vector<Q5>& sol);

// each cycle directed and simple, no edge used twice across cycles
bool cycles_directed_simple_disjoint(const StackExtension& se, const Alpha5Orientation& x,
                                     const std::vector<std::vector<int>>& cycles, std::string* why = nullptr);
// number of vertices lying on more than one cycle
int cycles_shared_vertices(const StackExtension& se, const Alpha5Orientation& x,
                           const std::vector<std::vector<int>>& cycles);

struct TraceStep {
    int iteration = 0;
    int negatives = 0;
    int cycles = 0;
    std::uint64_t hash = 0;
};

struct IterateResult {
    bool realized = false;
    std::string reason;  // for non-terminated runs
    int iterations = 0;
    FiveColorForest forest;
    Alpha5Orientation orientation;
    std::vector<Q5> solution;
    std::vector<TraceStep> trace;
};

IterateResult iterate(const StackExtension& se, const FiveColorForest& f0, int max_iters);
inline int default_max_iters(int n_inner) { return 10 * n_inner + 100; }

struct ProgressResult {
    int before = 0;  // sign of the surrounded segment before the flip
    int after = 0;   // sign of the corresponding segment after
    int face = -1;
};

ProgressResult progress_check(const StackExtension& se, const FiveColorForest& f, const FacialCycle& g);

// exact Q5 solve of the system for a forest
std::vector<Q5> solve_forest(const StackExtension& se, const FiveColorForest& f, const Alpha5Orientation& x);

}  // namespace pentact

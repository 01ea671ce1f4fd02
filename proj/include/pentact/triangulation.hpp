#pragma once

#include "pentact/error.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pentact {

using Rotation = std::vector<std::vector<int>>;

struct HalfEdge {
    int origin;
    int target;
    int twin;
    int next;  // next half-edge around its face
    int face;
    int edge;  // undirected edge index, -1 for outer edges
};

// Inner triangulation of a 5-gon as a rotation system.
// Vertices are 0..N-1; rot[v] lists neighbours of v in clockwise order.
// Inner faces traversed by next() run clockwise.
class Triangulation {
public:
    Triangulation() = default;
    // Builds half-edge records. Throws on inconsistent rotations; call validate() for the rest.
    Triangulation(std::array<int, 5> outer, Rotation rot, std::vector<long long> labels = {});

    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_inner_vertices() const { return num_vertices() - 5; }
    const std::array<int, 5>& outer() const { return outer_; }
    // 1..5 for a_i, 0 for inner vertices
    int outer_index(int v) const { return outer_idx_[v]; }
    bool is_outer(int v) const { return outer_idx_[v] != 0; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const Rotation& rotations() const { return rot_; }
    long long label(int v) const { return labels_[v]; }
    const std::vector<long long>& labels() const { return labels_; }
    bool reflected() const { return reflected_; }
    bool embedding_computed() const { return computed_; }
    void set_embedding_origin(bool computed, bool reflected) {
        computed_ = computed;
        reflected_ = reflected;
    }

    // half-edges
    const std::vector<HalfEdge>& half_edges() const { return he_; }
    int half_edge(int u, int v) const;  // -1 if not adjacent
    bool adjacent(int u, int v) const { return half_edge(u, v) >= 0; }
    int next_cw(int v, int u) const;   // neighbour after u in rot[v]
    int prev_cw(int v, int u) const;   // neighbour before u in rot[v]

    // faces: clockwise vertex triples; the outer face is excluded
    int num_faces() const { return static_cast<int>(faces_.size()); }
    const std::array<int, 3>& face(int f) const { return faces_[f]; }
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }
    // number of outer vertices on face f
    int face_outer_count(int f) const;
    // inner face to the right of u->v when looking from u (the face traversed by u->v); -1 for outer face
    int face_of(int u, int v) const;

    // undirected inner edges (u < v), index order is lexicographic
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_index(int u, int v) const;  // -1 for outer or missing edges

    // raw face list from traversal including any non-triangular ones (for validation)
    const std::vector<std::vector<int>>& raw_faces() const { return raw_faces_; }
    int outer_face_raw() const { return outer_face_raw_; }

private:
    std::array<int, 5> outer_{};
    Rotation rot_;
    std::vector<long long> labels_;
    std::vector<int> outer_idx_;
    std::vector<int> offset_;
    std::vector<HalfEdge> he_;
    std::vector<std::vector<int>> raw_faces_;
    int outer_face_raw_ = -1;
    std::vector<std::array<int, 3>> faces_;
    std::vector<int> raw_to_face_;
    std::vector<std::pair<int, int>> edges_;
    bool reflected_ = false;
    bool computed_ = false;
};

struct ValidationReport {
    bool ok = true;
    ErrorKind kind = ErrorKind::Parse;
    std::string message;
};

ValidationReport validate(const Triangulation& t);

// Throws Error if validation fails.
void require_valid(const Triangulation& t);

struct GraphInput {
    std::array<long long, 5> outer{};
    std::vector<std::pair<long long, long long>> edges;
    std::optional<std::vector<std::pair<long long, std::vector<long long>>>> rotations;
};

Triangulation build_from_edges(const GraphInput& in);

Triangulation wheel5();
Triangulation generate_random(int n_inner, std::uint64_t seed);

// Mutation helpers on raw rotations, used by the generator and enumeration.
void stack_into_face(Rotation& rot, std::array<int, 3> face);
// Flips edge (u,w) if allowed; returns false otherwise.
bool try_flip(Rotation& rot, const std::array<int, 5>& outer, int u, int w);

// Labelling-independent code of the embedded map with outer vertices fixed.
std::string canonical_code(const Triangulation& t);

// All inner triangulations with exactly n inner vertices, up to relabelling of inner vertices.
std::vector<Triangulation> enumerate_triangulations(int n_inner);

struct SchnyderContraction {
    // triangle triangulation T on vertices 0..m-1, outer (b1, b3, b4) clockwise
    Rotation rot;
    std::array<int, 3> outer{};
    std::vector<int> to_t;    // G vertex -> T vertex or -1 (removed)
    std::vector<int> from_t;  // T vertex -> representative G vertex (a2 for b3, a4 for b4)
    int c5 = -1;
    int c2 = -1;
    std::vector<int> removed5;  // interior of triangle c5 a2 a3
    std::vector<int> removed2;  // interior of triangle c2 a4 a5
};

SchnyderContraction contract_for_schnyder(const Triangulation& t);

// Vertices strictly inside the maximal triangle over the outer edge a_i a_{i+1}; apex returned.
std::pair<int, std::vector<int>> maximal_triangle(const Triangulation& t, int i);

}  // namespace pentact

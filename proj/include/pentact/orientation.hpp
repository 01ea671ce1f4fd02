#pragma once

#include "pentact/forest.hpp"
#include "pentact/triangulation.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pentact {

struct StarArc {
    int to;
    int edge;  // inner edge of the stack extension, -1 for the five outer edges
};

// Stack extension G*: normal vertices 0..N-1 as in the base, stack vertices N..N+S-1.
// Inner edges: base edge e keeps index e (endpoints u < v), stack edge of stack k to
// corner j of its face has index E + 3k + j with endpoints (corner, stack).
class StackExtension {
public:
    explicit StackExtension(Triangulation t);

    const Triangulation& base() const { return t_; }
    int num_normal() const { return t_.num_vertices(); }
    int num_stack() const { return static_cast<int>(stack_face_.size()); }
    int num_vertices() const { return num_normal() + num_stack(); }
    bool is_stack(int v) const { return v >= num_normal(); }
    bool is_outer(int v) const { return !is_stack(v) && t_.is_outer(v); }
    int stack_of_face(int f) const { return face_stack_[f]; }
    int face_of_stack(int s) const { return stack_face_[s - num_normal()]; }

    int num_edges() const { return t_.num_edges() + 3 * num_stack(); }
    bool is_stack_edge(int e) const { return e >= t_.num_edges(); }
    const std::pair<int, int>& endpoints(int e) const { return ends_[e]; }
    int stack_edge(int f, int corner) const;
    int edge_between(int u, int v) const;  // -1 if none or outer edge

    const std::vector<StarArc>& rotation(int v) const { return rot_[v]; }
    int alpha(int v) const { return is_stack(v) ? 2 : (is_outer(v) ? 0 : 5); }

    // inner faces of G* (triangles), vertices clockwise, with their edges (edge k joins verts k, k+1)
    struct Face {
        std::array<int, 3> verts;
        std::array<int, 3> edges;
    };
    const std::vector<Face>& faces() const { return faces_; }

private:
    Triangulation t_;
    std::vector<int> face_stack_;
    std::vector<int> stack_face_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<StarArc>> rot_;
    std::vector<Face> faces_;
};

// fwd[e] != 0 means endpoints(e).first -> endpoints(e).second
struct Alpha5Orientation {
    std::vector<std::uint8_t> fwd;
    friend bool operator==(const Alpha5Orientation&, const Alpha5Orientation&) = default;
    friend auto operator<=>(const Alpha5Orientation&, const Alpha5Orientation&) = default;
};

std::uint64_t orientation_hash(const Alpha5Orientation& x);

inline int tail(const StackExtension& se, const Alpha5Orientation& x, int e) {
    return x.fwd[e] ? se.endpoints(e).first : se.endpoints(e).second;
}
inline int head(const StackExtension& se, const Alpha5Orientation& x, int e) {
    return x.fwd[e] ? se.endpoints(e).second : se.endpoints(e).first;
}

bool is_alpha5(const StackExtension& se, const Alpha5Orientation& x, std::string* why = nullptr);

Alpha5Orientation chi(const StackExtension& se, const FiveColorForest& f);
FiveColorForest psi(const StackExtension& se, const Alpha5Orientation& x);

enum class Branch { Left, Right };
// Vertex sequence of one walk of P(e) for an inner base edge e, from its tail to an outer vertex.
std::vector<int> trace_path(const StackExtension& se, const Alpha5Orientation& x, int e, Branch b = Branch::Left);

std::vector<Alpha5Orientation> enumerate_alpha5(const StackExtension& se);

struct FacialCycle {
    int face = -1;
    bool ccw = false;
    std::array<int, 3> verts{};  // in the direction of the cycle
    std::array<int, 3> edges{};  // edges[k] joins verts[k] -> verts[k+1]
};

std::vector<FacialCycle> directed_facial_cycles(const StackExtension& se, const Alpha5Orientation& x);
std::vector<FacialCycle> ccw_facial_cycles(const StackExtension& se, const Alpha5Orientation& x);
Alpha5Orientation flip(const StackExtension& se, const Alpha5Orientation& x, const FacialCycle& c);
Alpha5Orientation reverse_edges(const Alpha5Orientation& x, const std::vector<int>& edges);

// every orientation reachable by flips and flops
std::vector<Alpha5Orientation> flip_closure(const StackExtension& se, const Alpha5Orientation& x0,
                                            std::size_t limit = 2000000);

struct LatticeStats {
    std::size_t orientations = 0;
    std::size_t flip_edges = 0;
    std::size_t sources = 0;  // no clockwise facial cycle
    std::size_t sinks = 0;    // no counterclockwise facial cycle
    bool closure_matches = false;
};

LatticeStats lattice_stats(const StackExtension& se);

// colors of the five outgoing edges of an inner normal vertex, keyed by edge index
std::vector<std::pair<int, int>> corner_colors(const StackExtension& se, const Alpha5Orientation& x,
                                               const FiveColorForest& f, int v);

}  // namespace pentact

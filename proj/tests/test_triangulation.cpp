#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pentact;

namespace {

GraphInput w5_input() {
    GraphInput in;
    in.outer = {1, 2, 3, 4, 5};
    in.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
    return in;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::Parse;
}

void expect_euler(const Triangulation& t) {
    const int n = t.num_inner_vertices();
    EXPECT_EQ(t.num_faces(), 2 * n + 3);
    EXPECT_EQ(t.num_edges(), 3 * n + 2);
    // half-edge traversal partitions into the inner faces plus the outer face
    EXPECT_EQ(static_cast<int>(t.raw_faces().size()), 2 * n + 4);
    EXPECT_EQ(static_cast<int>(t.half_edges().size()), 2 * (3 * n + 7));
}

}  // namespace

TEST(Triangulation, WheelFromEdges) {
    Triangulation t = build_from_edges(w5_input());
    EXPECT_TRUE(validate(t).ok);
    EXPECT_EQ(t.num_inner_vertices(), 1);
    EXPECT_EQ(t.num_faces(), 5);
    EXPECT_EQ(t.num_edges(), 5);
    EXPECT_TRUE(t.embedding_computed());
    EXPECT_EQ(canonical_code(t), canonical_code(wheel5()));
}

TEST(Triangulation, Fig1Graph) {
    Triangulation t = oracle::fig1();
    EXPECT_TRUE(validate(t).ok);
    EXPECT_EQ(t.num_inner_vertices(), 5);
    EXPECT_EQ(t.num_faces(), 13);
    EXPECT_EQ(t.num_edges(), 17);
}

TEST(Triangulation, ChordRejected) {
    GraphInput in = w5_input();
    in.edges.push_back({1, 3});
    EXPECT_EQ(kind_of([&] { build_from_edges(in); }), ErrorKind::ChordPresent);
}

TEST(Triangulation, MissingEdgeNamesQuadrilateral) {
    Rotation rot = wheel5().rotations();
    // remove v-a1
    std::erase(rot[5], 0);
    std::erase(rot[0], 5);
    Triangulation t({0, 1, 2, 3, 4}, rot);
    ValidationReport r = validate(t);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.kind, ErrorKind::NotTriangulated);
    EXPECT_NE(r.message.find("4"), std::string::npos) << r.message;
}

TEST(Triangulation, MissingEdgeFromEdgeList) {
    GraphInput in = w5_input();
    in.edges.pop_back();
    EXPECT_EQ(kind_of([&] { build_from_edges(in); }), ErrorKind::NotTriangulated);
}

TEST(Triangulation, NonPlanarRejected) {
    GraphInput in = w5_input();
    // K_{3,3}-style additions between two extra vertices and the rim
    for (long long v : {1, 2, 3, 4, 5}) {
        in.edges.push_back({6, v});
        in.edges.push_back({7, v});
    }
    in.edges.push_back({6, 7});
    in.edges.push_back({0, 6});
    in.edges.push_back({0, 7});
    EXPECT_EQ(kind_of([&] { build_from_edges(in); }), ErrorKind::NonPlanar);
}

TEST(Triangulation, OuterFaceMismatch) {
    GraphInput in = w5_input();
    in.outer = {1, 3, 2, 4, 5};
    EXPECT_THROW(build_from_edges(in), Error);
}

TEST(Triangulation, RotationHintRoundTrip) {
    Triangulation t = generate_random(7, 5);
    GraphInput in = graph_input_from_json(graph_to_json(t));
    Triangulation u = build_from_edges(in);
    EXPECT_FALSE(u.embedding_computed());
    EXPECT_EQ(canonical_code(u), canonical_code(t));
    in.rotations.reset();
    Triangulation w = build_from_edges(in);
    EXPECT_TRUE(w.embedding_computed());
    EXPECT_EQ(canonical_code(w), canonical_code(t));
}

TEST(Triangulation, GeneratorExamples) {
    for (std::uint64_t s : {0ull, 1ull, 99ull}) EXPECT_EQ(canonical_code(generate_random(1, s)), canonical_code(wheel5()));
    EXPECT_EQ(generate_random(6, 42).rotations(), generate_random(6, 42).rotations());
    EXPECT_TRUE(validate(generate_random(50, 7)).ok);
    EXPECT_EQ(kind_of([] { generate_random(0, 1); }), ErrorKind::InvalidSize);
}

TEST(Triangulation, EulerCountsOnRandomInstances) {
    for (int n = 1; n <= 30; ++n)
        for (std::uint64_t s = 0; s < 5; ++s) {
            Triangulation t = generate_random(n, s);
            ASSERT_EQ(t.num_inner_vertices(), n);
            expect_euler(t);
        }
    expect_euler(oracle::fig1());
}

TEST(Triangulation, FacesClockwiseAndOuterOrder) {
    Triangulation t = generate_random(9, 3);
    for (int f = 0; f < t.num_faces(); ++f) {
        auto [a, b, c] = t.face(f);
        EXPECT_EQ(t.face_of(a, b), f);
        EXPECT_EQ(t.face_of(b, c), f);
        EXPECT_EQ(t.face_of(c, a), f);
    }
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(t.outer_index(t.outer()[i - 1]), i);
}

TEST(Triangulation, EnumerationCounts) {
    EXPECT_EQ(enumerate_triangulations(1).size(), 1u);
    EXPECT_EQ(enumerate_triangulations(2).size(), 10u);
    EXPECT_EQ(enumerate_triangulations(3).size(), 80u);
    for (const auto& t : enumerate_triangulations(3)) EXPECT_TRUE(validate(t).ok);
}

TEST(Triangulation, ContractionOfWheel) {
    Triangulation t = wheel5();
    SchnyderContraction c = contract_for_schnyder(t);
    EXPECT_EQ(c.c5, 5);
    EXPECT_EQ(c.c2, 5);
    EXPECT_TRUE(c.removed5.empty());
    EXPECT_TRUE(c.removed2.empty());
    EXPECT_EQ(c.rot.size(), 4u);
    EXPECT_TRUE(validate_triangle_map(c.rot, c.outer).ok);
}

TEST(Triangulation, ContractionValidates) {
    for (int n = 1; n <= 20; ++n)
        for (std::uint64_t s = 0; s < 4; ++s) {
            Triangulation t = generate_random(n, s);
            SchnyderContraction c = contract_for_schnyder(t);
            EXPECT_TRUE(validate_triangle_map(c.rot, c.outer).ok) << n << " " << s;
            int kept = 0;
            for (int v : c.to_t) kept += v >= 0;
            EXPECT_EQ(kept + static_cast<int>(c.removed5.size() + c.removed2.size()), t.num_vertices());
        }
}

TEST(Triangulation, MaximalTriangleIsFaceGivesEmptyRegion) {
    Triangulation t = wheel5();
    for (int i = 1; i <= 5; ++i) EXPECT_TRUE(maximal_triangle(t, i).second.empty());
}

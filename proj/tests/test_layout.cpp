#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <regex>

using namespace pentact;

namespace {

struct Realized {
    StackExtension se;
    FiveColorForest f;
    Alpha5Orientation x;
    Skeleton s;
    std::vector<Q5> sol;
    PentagonLayout layout;

    Realized(Triangulation t, FiveColorForest f0)
        : se(std::move(t)), f(std::move(f0)), x(chi(se, f)), s(se, f, x), sol(solve(assemble(s))),
          layout(realize(s, sol)) {}
};

Point polar(double deg, double len) { return {len * std::cos(deg * M_PI / 180), len * std::sin(deg * M_PI / 180)}; }
Point add(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

int count(const std::string& s, const std::string& pat) {
    std::regex re(pat);
    return static_cast<int>(std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Layout, WheelClosedForm) {
    Triangulation t = wheel5();
    Realized r(t, fcf_from_schnyder(t));
    const auto& L = r.layout;
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(dist(L.frame[i], L.frame[(i + 1) % 5]), 1.0, 1e-12);
    ASSERT_EQ(L.pentagons.size(), 1u);
    EXPECT_EQ(L.pentagons[0].side, Q5::phi() / Q5(2));
    // each corner sits at the midpoint of the frame side it touches
    for (int c = 1; c <= 5; ++c) {
        Point a = L.frame[cmod(c - 1) - 1], b = L.frame[c - 1];
        Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        EXPECT_NEAR(dist(L.pentagons[0].corners[c - 1], mid), 0, 1e-9) << c;
    }
    ASSERT_EQ(L.contacts.size(), 5u);
    EXPECT_TRUE(verify(L, t).ok);
    EXPECT_EQ(induced_fcf(L, t), r.f);
}

TEST(Layout, FrameShape) {
    Triangulation t = generate_random(7, 1);
    IterateResult it = iterate(StackExtension(t), fcf_from_schnyder(t), default_max_iters(7));
    ASSERT_TRUE(it.realized);
    Realized r(t, it.forest);
    const auto& F = r.layout.frame;
    EXPECT_NEAR(F[4].x, 0, 1e-15);
    EXPECT_NEAR(F[4].y, 0, 1e-15);
    EXPECT_NEAR(F[0].y, 0, 1e-12);
    EXPECT_NEAR(F[0].x, 1, 1e-12);
    for (int i = 1; i <= 5; ++i) {
        Point a = F[cmod(i - 1) - 1], b = F[i - 1];
        Point d = side_direction_float(i);
        double len = dist(a, b);
        EXPECT_NEAR(b.x - a.x, len * d.x, 1e-12);
        EXPECT_NEAR(b.y - a.y, len * d.y, 1e-12);
    }
}

TEST(Layout, ExactDirectionsMatchFloat) {
    for (int c = 1; c <= 5; ++c) {
        Point p = to_point(side_direction(c)), q = side_direction_float(c);
        EXPECT_NEAR(p.x, q.x, 1e-15);
        EXPECT_NEAR(p.y, q.y, 1e-15);
    }
}

TEST(Layout, Fig1MatchesDrawing) {
    Triangulation t = oracle::fig1();
    Realized r(t, oracle::fig1_forest(t));
    const auto& L = r.layout;
    ASSERT_EQ(L.pentagons.size(), 5u);
    EXPECT_TRUE(verify(L, t).ok);
    EXPECT_EQ(induced_fcf(L, t), r.f);
    auto shape = [&](long long lab) -> const PentagonShape& {
        int v = oracle::vertex_with_label(t, lab);
        for (const auto& p : L.pentagons)
            if (p.vertex == v) return p;
        throw std::logic_error("missing");
    };
    // reference points of the drawing, y up, frame corner s5/s1 at the origin
    Point c2 = polar(0, 0.2809764610791428 + 0.5517044438578933 + 0.167319095062964);
    Point At = polar(0, 0.2809764610791428);
    Point Bt = polar(0, 0.2809764610791428 + 0.5517044438578933);
    Point Ctr = add(c2, polar(-72, 0.167319095062964 + 0.3180558039029276));
    Point Dbr = add(add(c2, polar(-72, 0.167319095062964 + 0.3180558039029276 + 0.09316040941539433)),
                    polar(-144, 0.09316040941539433 + 0.296349178529731));
    Point Ebl = add(polar(-108, 2 * 0.2809764610791428), polar(-36, 0.2809764610791428 + 0.4585440344424989));
    EXPECT_LT(dist(shape(5).apex, At), 1e-12);
    EXPECT_LT(dist(shape(6).apex, Bt), 1e-12);
    EXPECT_LT(dist(shape(7).corners[1], Ctr), 1e-12);
    EXPECT_LT(dist(shape(8).corners[2], Dbr), 1e-12);
    EXPECT_LT(dist(shape(9).corners[3], Ebl), 1e-12);
}

TEST(Layout, SegmentVectorsClose) {
    for (int n = 2; n <= 10; ++n) {
        Triangulation t = generate_random(n, 60 + n);
        IterateResult it = iterate(StackExtension(t), fcf_from_schnyder(t), default_max_iters(n));
        ASSERT_TRUE(it.realized);
        Realized r(t, it.forest);
        auto vals = segment_values(r.s, r.sol);
        for (size_t k = 0; k < r.s.segments().size(); ++k) {
            const auto& sg = r.s.segments()[k];
            Point d = side_direction_float(sg.side);
            double len = vals[k].to_double();
            Point a = r.layout.nodes[sg.from], b = r.layout.nodes[sg.to];
            EXPECT_NEAR(b.x - a.x, len * d.x, 1e-9);
            EXPECT_NEAR(b.y - a.y, len * d.y, 1e-9);
        }
    }
}

TEST(Layout, NegativeInputRefused) {
    for (std::uint64_t sd = 0; sd < 200; ++sd) {
        Triangulation t = generate_random(5, sd);
        StackExtension se(t);
        FiveColorForest f = fcf_from_schnyder(t);
        auto x = chi(se, f);
        Skeleton s(se, f, x);
        auto sol = solve(assemble(s));
        if (std::none_of(sol.begin(), sol.end(), [](const Q5& v) { return v.sign() < 0; })) continue;
        try {
            realize(s, sol);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NegativeInput);
        }
        return;
    }
    FAIL() << "no negative instance found";
}

TEST(Layout, NonNegativeIffRealizableSmall) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_triangulations(n)) {
            StackExtension se(t);
            for (const auto& x : enumerate_alpha5(se)) {
                FiveColorForest f = psi(se, x);
                Skeleton s(se, f, x);
                auto sol = solve(assemble(s));
                bool nonneg = std::none_of(sol.begin(), sol.end(), [](const Q5& v) { return v.sign() < 0; });
                if (!nonneg) {
                    EXPECT_THROW(realize(s, sol), Error);
                    continue;
                }
                PentagonLayout L = realize(s, sol);
                GeometryReport g = verify(L, t);
                ASSERT_TRUE(g.ok) << (g.violations.empty() ? "" : g.violations[0]);
                auto readings = induced_fcfs(L, t);
                EXPECT_NE(std::find(readings.begin(), readings.end(), f), readings.end());
                // every reading solves back to the same lengths
                for (const auto& g2 : readings) {
                    auto sol2 = solve_forest(se, g2, chi(se, g2));
                    for (int v = 0; v < t.num_vertices(); ++v)
                        if (!t.is_outer(v)) EXPECT_EQ(sol2[s.vertex_var(v)], sol[s.vertex_var(v)]);
                }
            }
        }
}

TEST(Verify, ShrunkPentagonLosesContacts) {
    Triangulation t = oracle::fig1();
    Realized r(t, oracle::fig1_forest(t));
    PentagonLayout L = r.layout;
    auto& p = L.pentagons[0];
    Point c{0, 0};
    for (const auto& q : p.corners) c = {c.x + q.x / 5, c.y + q.y / 5};
    for (auto& q : p.corners) q = {c.x + 0.99 * (q.x - c.x), c.y + 0.99 * (q.y - c.y)};
    p.apex = p.corners[0];
    p.side_float *= 0.99;
    GeometryReport g = verify(L, t);
    EXPECT_FALSE(g.ok);
    EXPECT_FALSE(g.violations.empty());
}

TEST(Verify, IrregularPentagon) {
    Triangulation t = wheel5();
    Realized r(t, fcf_from_schnyder(t));
    PentagonLayout L = r.layout;
    L.pentagons[0].corners[2].x += 1e-3;
    EXPECT_FALSE(verify(L, t).ok);
}

TEST(Verify, OverlapDetected) {
    Triangulation t = oracle::fig1();
    Realized r(t, oracle::fig1_forest(t));
    PentagonLayout L = r.layout;
    auto& p = L.pentagons[1];
    for (auto& q : p.corners) q.x += 0.05;
    p.apex = p.corners[0];
    EXPECT_FALSE(verify(L, t).ok);
}

TEST(InducedForest, DegenerateContactRefusedButReadable) {
    // realized layout with a corner-corner contact
    Triangulation t = generate_random(3, 8);
    StackExtension se(t);
    IterateResult it = iterate(se, fcf_from_schnyder(t), default_max_iters(3));
    ASSERT_TRUE(it.realized);
    Skeleton s(se, it.forest, it.orientation);
    PentagonLayout L = realize(s, it.solution);
    EXPECT_TRUE(verify(L, t).ok);
    ASSERT_TRUE(has_corner_contact(L, t));
    try {
        induced_fcf(L, t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateContact);
    }
    auto readings = induced_fcfs(L, t);
    EXPECT_GE(readings.size(), 2u);
    EXPECT_NE(std::find(readings.begin(), readings.end(), it.forest), readings.end());
    for (const auto& g : readings) EXPECT_TRUE(validate_fcf(t, g).ok);
}

TEST(InducedForest, RoundTripNonDegenerate) {
    int checked = 0;
    for (int n = 1; n <= 12; ++n)
        for (std::uint64_t sd = 0; sd < 4; ++sd) {
            Triangulation t = generate_random(n, 300 + sd);
            StackExtension se(t);
            IterateResult it = iterate(se, fcf_from_schnyder(t), default_max_iters(n));
            ASSERT_TRUE(it.realized);
            Skeleton s(se, it.forest, it.orientation);
            PentagonLayout L = realize(s, it.solution);
            if (has_corner_contact(L, t)) continue;
            EXPECT_EQ(induced_fcf(L, t), it.forest);
            auto readings = induced_fcfs(L, t);
            ASSERT_EQ(readings.size(), 1u);
            EXPECT_EQ(readings[0], it.forest);
            ++checked;
        }
    EXPECT_GT(checked, 10);
}

TEST(Emit, WheelSvg) {
    Triangulation t = wheel5();
    Realized r(t, fcf_from_schnyder(t));
    std::string svg = layout_svg(r.layout, t);
    EXPECT_EQ(count(svg, "class=\"pentagon\""), 1);
    EXPECT_EQ(count(svg, "class=\"frame\""), 5);
    EXPECT_GE(count(svg, "class=\"contact-graph\""), 1);
    EXPECT_NE(svg.find("viewBox="), std::string::npos);
    EXPECT_EQ(count(layout_svg(r.layout, t, false), "contact-graph"), 0);
}

TEST(Emit, Fig1SvgAndJson) {
    Triangulation t = oracle::fig1();
    Realized r(t, oracle::fig1_forest(t));
    EXPECT_EQ(count(layout_svg(r.layout, t), "class=\"pentagon\""), 5);
    auto j = nlohmann::json::parse(layout_json(r.layout, t));
    ASSERT_EQ(j["pentagons"].size(), 5u);
    for (size_t i = 0; i < 5; ++i) EXPECT_EQ(q5_from_json(j["pentagons"][i]["side"]), r.layout.pentagons[i].side);
    EXPECT_EQ(j["contacts"].size(), 17u);
    EXPECT_EQ(layout_json(r.layout, t), layout_json(r.layout, t));
}

TEST(Emit, WritesFiles) {
    Triangulation t = wheel5();
    Realized r(t, fcf_from_schnyder(t));
    std::string base = ::testing::TempDir() + "pentact_emit";
    emit(r.layout, t, Format::Svg, base + ".svg");
    emit(r.layout, t, Format::Json, base + ".json");
    EXPECT_EQ(read_file(base + ".svg"), layout_svg(r.layout, t));
    EXPECT_EQ(read_file(base + ".json"), layout_json(r.layout, t));
    try {
        emit(r.layout, t, Format::Svg, "/nonexistent/dir/x.svg");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Io);
    }
}

#pragma once

#include "pentact/system.hpp"

#include <array>
#include <string>
#include <vector>

namespace pentact {

struct Point {
    double x = 0;
    double y = 0;
};

// Exact point a + b*w with w = exp(2 pi i / 5); both coordinates in Q(sqrt 5).
struct ExactPoint {
    Q5 a;
    Q5 b;
    friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

// unit vector of side color c (direction -72(c-1) degrees) in the exact basis
ExactPoint side_direction(int c);
Point to_point(const ExactPoint& p);
Point side_direction_float(int c);

struct PentagonShape {
    int vertex = -1;
    Q5 side;
    double side_float = 0;
    Point apex;                    // corner 1 (top)
    std::array<Point, 5> corners;  // corners[c-1] = corner c, clockwise from the apex
};

struct ContactInfo {
    int tail = -1;
    int head = -1;
    int color = 0;
    Point at;
};

// y axis points up; the frame's top-left corner (a5-a1) is the origin and s1 has length 1
struct PentagonLayout {
    std::vector<PentagonShape> pentagons;  // inner vertices in increasing id
    std::array<Point, 5> frame;            // frame[i-1] = corner between s_i and s_i+1
    std::vector<ContactInfo> contacts;     // inner edges in edge order
    std::vector<Point> nodes;              // skeleton node positions
};

PentagonLayout realize(const Skeleton& s, const std::vector<Q5>& sol);

struct GeometryReport {
    bool ok = true;
    std::vector<std::string> violations;
};

GeometryReport verify(const PentagonLayout& layout, const Triangulation& t, double tol = 1e-9);

// throws DegenerateContact unless every contact is a unique corner-in-side-interior touch
FiveColorForest induced_fcf(const PentagonLayout& layout, const Triangulation& t, double tol = 1e-9);
// every valid forest obtained by reading each corner-corner contact either way
std::vector<FiveColorForest> induced_fcfs(const PentagonLayout& layout, const Triangulation& t, double tol = 1e-9);
bool has_corner_contact(const PentagonLayout& layout, const Triangulation& t, double tol = 1e-9);

enum class Format { Svg, Json };

std::string layout_svg(const PentagonLayout& layout, const Triangulation& t, bool contact_graph = true);
std::string layout_json(const PentagonLayout& layout, const Triangulation& t);
void emit(const PentagonLayout& layout, const Triangulation& t, Format format, const std::string& path);

}  // namespace pentact

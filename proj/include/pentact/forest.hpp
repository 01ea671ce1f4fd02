#pragma once

#include "pentact/triangulation.hpp"

#include <array>
#include <string>
#include <vector>

namespace pentact {

// colors are 1..5 and wrap modulo 5
inline int cmod(int c) { return ((c - 1) % 5 + 5) % 5 + 1; }

struct ColoredArc {
    int from = -1;
    int to = -1;
    int color = 0;
    friend bool operator==(const ColoredArc&, const ColoredArc&) = default;
};

// Indexed by Triangulation::edge index.
struct FiveColorForest {
    std::vector<ColoredArc> arcs;
    friend bool operator==(const FiveColorForest&, const FiveColorForest&) = default;
};

struct SchnyderWood {
    // one arc per inner edge of the triangle triangulation; color is the label given by the caller
    std::vector<ColoredArc> arcs;
};

// Schnyder wood by canonical-order peeling. outer = (top, right, left) clockwise,
// colors = labels of the edges into top, right, left.
SchnyderWood schnyder_wood(const Rotation& rot, std::array<int, 3> outer, std::array<int, 3> colors = {1, 2, 3});

struct ForestReport {
    bool ok = true;
    std::string clause;  // "F1", "F2", "F3", "S1", "S2", "structure"
    int vertex = -1;
    std::string message;
};

ForestReport validate_triangle_map(const Rotation& rot, std::array<int, 3> outer);
ForestReport validate_schnyder(const Rotation& rot, std::array<int, 3> outer, std::array<int, 3> colors,
                               const SchnyderWood& w);

FiveColorForest fcf_from_schnyder(const Triangulation& t);
ForestReport validate_fcf(const Triangulation& t, const FiveColorForest& f);

// Position of an arc at vertex v in the ten-slot cyclic pattern
// B1 o4 B2 o5 B3 o1 B4 o2 B5 o3 (clockwise); incoming color c at 2(c-1), outgoing color i at 2(i+1)+1.
inline int in_slot(int c) { return 2 * (c - 1); }
inline int out_slot(int c) { return (2 * (c + 1) + 1) % 10; }
inline int slot_out_color(int s) { return cmod((s - 1) / 2 - 1); }

// Directed cycle checks from the structure properties.
bool color_forests_acyclic(const Triangulation& t, const FiveColorForest& f);
bool mixed_orientations_acyclic(const Triangulation& t, const FiveColorForest& f);

}  // namespace pentact

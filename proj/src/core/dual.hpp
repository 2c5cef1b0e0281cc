#pragma once

#include "tiling.hpp"
#include "words.hpp"

namespace rhombiflip {

// Pseudoline arrangement dual to a tiling: one arc per direction, running
// from boundary side i to side n+i through the midlines of every rhombus
// whose pair contains i. Two arcs cross exactly once, at a rhombus center.
struct DualDiagram {
    int n = 0;
    struct Arc {
        int label = 0;
        std::vector<Point2> points;  // ordered, boundary to boundary
    };
    struct Crossing {
        int i = 0, j = 0;
        Point2 at;
    };
    std::vector<Arc> arcs;            // sorted by label
    std::vector<Crossing> crossings;  // sorted by pair
};

DualDiagram dual_of(const DirectionSet& d, const PlanarTiling& t);

// The generator a flip traces in the dual picture: its axes triple, the three
// arcs whose pairwise crossings the flip moves across each other.
Gen triple_point_of_flip(const CubeFlip& f);

struct SvgStyle {
    bool tiles = true;
    bool dual = false;
    bool labels = false;
    int scale = 48;
};

// Deterministic: equal inputs give byte-identical output.
std::string render_svg(const DirectionSet& d, const PlanarTiling& t, const SvgStyle& style);

}  // namespace rhombiflip

#pragma once

#include <map>

#include "flip_graph.hpp"

namespace rhombiflip {

// One nonzero rational per tiling vertex, keyed by exact projected point.
using VertexVars = std::map<Point2, Rat>;

// "x/y"; integer coordinates print bare, fractional ones as num:den.
std::string point_key(const Point2& p);
Point2 parse_point_key(const std::string& s);

nlohmann::json vars_to_json(const VertexVars& vars);
VertexVars vars_from_json(const nlohmann::json& j);

VertexVars vars_all_ones(const DirectionSet& d, const PlanarTiling& t);

// Throws unless vars carries exactly the vertices of t, all values nonzero.
void validate_vars(const DirectionSet& d, const PlanarTiling& t, const VertexVars& vars);

// Exchange at the vertex the flip removes: with hexagon corner values a..f
// (opposite corners a,d then b,e then c,f) and x at the removed vertex, the
// added vertex gets x' = (ad + be + cf) / x. All other variables carry over.
VertexVars mutate(const DirectionSet& d, const PlanarTiling& t, const VertexVars& vars,
                  const CubeFlip& f);

// Folds mutate along a path; result is complete on the path's final tiling.
VertexVars transport(const DirectionSet& d, const FlipPath& p, const VertexVars& vars);

}  // namespace rhombiflip

#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace rhombiflip {

// Vertex of the cube [0,1]^n, packed as a bitmask: bit i-1 holds coordinate i.
using Mask = std::uint32_t;

constexpr int kMaxN = 16;

// n direction vectors v_1..v_n in the upper half plane, angles strictly
// increasing with the index.
struct DirectionSet {
    int n = 0;
    std::vector<Point2> v;  // v[i-1] is v_i

    const Point2& dir(int i) const { return v[static_cast<size_t>(i - 1)]; }
    void validate() const;  // throws Error

    static DirectionSet standard(int n);

    nlohmann::json to_json() const;
    static DirectionSet from_json(const nlohmann::json& j);
};

Point2 project(const DirectionSet& d, Mask p);
Point2 project(const DirectionSet& d, const std::vector<int>& coords);

// 2n boundary vertices in order: pi(0), pi(e1), pi(e1+e2), ..., pi(e1+..+en),
// pi(e2+..+en), ..., pi(en). Counterclockwise.
std::vector<Point2> zonogon_boundary(const DirectionSet& d);

Rat zonogon_area(const DirectionSet& d);

Rat polygon_area(const std::vector<Point2>& poly);  // signed, shoelace

// Open-interior intersection test for convex polygons (vertices in order).
// Shared edges or vertices do not count as intersection.
bool convex_interiors_intersect(const std::vector<Point2>& a, const std::vector<Point2>& b);

}  // namespace rhombiflip

#pragma once

// Independent reference computations the tests judge the library against.
// Nothing here calls the algorithms under test: reduced words are enumerated
// by descent recursion, overlap areas by half-plane clipping, and surface
// isomorphism by brute force over root flags.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/geometry.hpp"
#include "core/surface.hpp"

namespace oracle {

// All reduced words of the longest permutation of S_n, one byte per letter
// (values 1..n-1), in the order the descent recursion emits them.
std::vector<std::string> reduced_words_w0(int n);

struct CommutationClasses {
    std::size_t word_count = 0;
    std::vector<std::string> representatives;      // lexicographically least word per class
    std::set<std::pair<int, int>> braid_pairs;     // class pairs joined by a braid move
};

// Classes of reduced words of w0 under adjacent commutations s_i s_j = s_j s_i
// (|i-j| >= 2), plus the class pairs joined by braid moves
// s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}.
CommutationClasses commutation_classes(int n);

// Exact area of the intersection of two convex polygons (vertices in cyclic
// order, either orientation). Touching along edges or vertices gives 0.
rhombiflip::Rat convex_overlap_area(std::vector<rhombiflip::Point2> a,
                                    std::vector<rhombiflip::Point2> b);

// Exact signed area, shoelace.
rhombiflip::Rat shoelace(const std::vector<rhombiflip::Point2>& poly);

// Label-aware cell complex isomorphism by brute force over image flags.
bool surfaces_isomorphic(const rhombiflip::SurfaceTiling& a, const rhombiflip::SurfaceTiling& b);

}  // namespace oracle

#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace rhombiflip {

inline Mask bit_of(int axis) { return Mask(1) << (axis - 1); }

// Lexicographic order on the coordinate arrays (coordinate 1 first).
inline bool mask_lex_less(Mask a, Mask b) {
    Mask d = a ^ b;
    if (d == 0) return false;
    Mask low = d & (~d + 1);
    return (a & low) == 0;
}

// Projected face of the cube: base vertex I with I[i] = I[j] = 0, spanned by
// directions i < j.
struct Rhombus {
    Mask base = 0;
    int i = 0, j = 0;

    bool operator==(const Rhombus& o) const { return base == o.base && i == o.i && j == o.j; }
    bool operator<(const Rhombus& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return mask_lex_less(base, o.base);
    }
};

enum class FlipDir { Up, Down };

// One cube move: the 3-cube at base I spanned by axes j < k < l, flipped
// Down (top faces -> bottom faces) or Up (bottom -> top).
struct CubeFlip {
    Mask base = 0;
    std::array<int, 3> axes{};  // ascending
    FlipDir dir = FlipDir::Down;

    CubeFlip inverse() const {
        CubeFlip f = *this;
        f.dir = (dir == FlipDir::Down) ? FlipDir::Up : FlipDir::Down;
        return f;
    }
    bool operator==(const CubeFlip& o) const {
        return base == o.base && axes == o.axes && dir == o.dir;
    }
};

std::array<Rhombus, 3> cube_top_faces(Mask base, int j, int k, int l);
std::array<Rhombus, 3> cube_bottom_faces(Mask base, int j, int k, int l);

// The hexagon a flip acts on: six boundary vertices in cyclic order plus the
// interior vertex removed and the one added.
struct FlipHexagon {
    std::array<Mask, 6> ring{};  // I, I+ej, I+ej+ek, I+ej+ek+el, I+ek+el, I+el
    Mask center_removed = 0;
    Mask center_added = 0;
};
FlipHexagon flip_hexagon(const CubeFlip& f);

class PlanarTiling {
public:
    PlanarTiling(int n, std::vector<Rhombus> rhombi);  // sorts; checks structure

    int n() const { return n_; }
    const std::vector<Rhombus>& rhombi() const { return rhombi_; }
    const Rhombus& at_pair(int i, int j) const;

    bool operator==(const PlanarTiling& o) const { return n_ == o.n_ && rhombi_ == o.rhombi_; }
    std::string key() const;  // canonical byte encoding, usable as hash key

    nlohmann::json to_json() const;
    static PlanarTiling from_json(const nlohmann::json& j);

private:
    int n_;
    std::vector<Rhombus> rhombi_;
};

// Tiling swept from a reduced word of the longest permutation; throws if the
// word does not sweep (some letter is not a descent) or repeats a pair.
PlanarTiling tiling_from_reduced_word(int n, const std::vector<int>& word);

// Sweep of the staircase word s1 (s2 s1) ... (s_{n-1} .. s1), the smallest
// reduced word of the longest permutation.
PlanarTiling base_tiling(int n);

// Geometric validity: one rhombus per pair (structural), pairwise
// non-overlapping interiors, total area equal to the zonogon area.
bool validate(const DirectionSet& d, const PlanarTiling& t);

std::vector<Point2> rhombus_corners(const DirectionSet& d, const Rhombus& r);

// All available flips, sorted by axes triple. At most one flip exists per
// axes triple.
std::vector<CubeFlip> find_flips(const PlanarTiling& t);

// The unique flip candidate on axes j < k < l, if present.
bool flip_for_axes(const PlanarTiling& t, int j, int k, int l, CubeFlip* out);

bool flip_available(const PlanarTiling& t, const CubeFlip& f);

// Applies an available flip; throws Error if f is not available at t.
PlanarTiling apply_flip(const PlanarTiling& t, const CubeFlip& f);

// All cube vertices used by the tiling (corners of its rhombi).
std::set<Mask> tiling_vertices(const PlanarTiling& t);

nlohmann::json flip_to_json(const CubeFlip& f, int n);
CubeFlip flip_from_json(const nlohmann::json& j);

}  // namespace rhombiflip

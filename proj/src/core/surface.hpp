#pragma once

#include <optional>

#include "mn_index.hpp"
#include "tiling.hpp"
#include "words.hpp"

namespace rhombiflip {

enum class SurfaceKind { RP2, Klein };

// Labels e_1..e_n attached to the boundary sides; side i and its opposite
// carry label e_i. Must be a permutation of 1..n.
struct BoundaryLabeling {
    std::vector<int> labels;

    int of(int direction) const { return labels[static_cast<size_t>(direction - 1)]; }
    void validate(int n) const;
    static BoundaryLabeling identity(int n);
};

struct SurfacePartner {
    int face = -1;
    int slot = -1;
    bool reversed = false;  // true: the two darts run against each other

    bool operator==(const SurfacePartner& o) const {
        return face == o.face && slot == o.slot && reversed == o.reversed;
    }
};

// A marked point on the surface: the common image of one set of identified
// fundamental-polygon corners. Flips can sweep cells across such a point, so
// tracking where it sits keeps tilings apart that agree as bare complexes but
// not as pictures on the glued surface.
struct SurfaceMark {
    int type = 0;  // 0: at a vertex, 1: inside an edge, 2: inside a face
    int face = 0;  // anchor cell
    int slot = 0;  // corner for type 0, side for type 1, ignored for type 2
};

// Closed quadrangulated surface made of rhombus cells. Face slots 0..3 are
// the directed edges corner s -> corner s+1; opposite slots carry the same
// direction label. Every slot is glued to exactly one partner slot (possibly
// on the same face).
class SurfaceTiling {
public:
    struct Face {
        std::array<int, 4> label{};  // direction label per slot
    };

    SurfaceKind kind = SurfaceKind::RP2;
    int n = 0;
    std::vector<Face> faces;
    std::vector<std::array<SurfacePartner, 4>> glue;

    std::array<int, 2> face_pair(int f) const;  // the two labels, ascending

    void validate() const;  // throws Error
    int euler_characteristic() const;

    // corner id = 4*face + corner
    std::vector<int> corner_orbit_ids() const;           // orbit representative per corner
    std::vector<std::vector<int>> vertex_orbits() const;  // sorted orbits, sorted corners

    // invariant under complex isomorphism; minimal BFS certificate over all
    // root flags. The marked form appends each mark's position under the same
    // numbering, so keys agree only when an isomorphism also aligns the marks.
    std::string canonical_key() const;
    std::string canonical_key(const std::vector<SurfaceMark>& marks) const;

    nlohmann::json to_json() const;
    static SurfaceTiling from_json(const nlohmann::json& j);
};

// Quotient of the zonogon tiling: side i is identified with side n+i, by the
// antipodal map for RP2; for Klein, side 1 is glued by translation instead.
SurfaceTiling glue(const PlanarTiling& t, const BoundaryLabeling& e, SurfaceKind kind);

// A flippable hexagon: three distinct faces around a degree-3 vertex whose
// pair labels form a triangle {i,j},{i,k},{j,k}.
struct SurfaceHexagon {
    int face = -1, corner = -1;    // smallest corner of the center vertex orbit
    std::array<int, 3> labels{};   // ascending

    bool operator==(const SurfaceHexagon& o) const {
        return face == o.face && corner == o.corner && labels == o.labels;
    }
};

std::vector<SurfaceHexagon> find_surface_flips(const SurfaceTiling& s);

// Replaces the three faces around the hexagon's center by the opposite wheel.
// Face indices of the wheel are reused. inverse_out, when given, receives the
// hexagon of the result that flips back.
SurfaceTiling apply_surface_flip(const SurfaceTiling& s, const SurfaceHexagon& h,
                                 SurfaceHexagon* inverse_out = nullptr);

struct SurfacePath {
    SurfaceTiling start;
    std::vector<SurfaceHexagon> flips;  // each anchored in the complex it applies to

    nlohmann::json to_json() const;
    static SurfacePath from_json(const nlohmann::json& j);
};

std::vector<SurfaceTiling> replay_surface_path(const SurfacePath& p);

// One letter per flip: the hexagon's labels.
Gn3Word phi_S(const SurfacePath& p);

struct SurfaceSearchOutcome {
    SurfacePath path;         // closed as a marked tiling of the surface
    Gn3Word word;
    Certificate certificate;  // proves the word nontrivial
    std::size_t states_explored = 0;
};

// Scans walks of increasing length from every glued base tiling. A walk is
// closed when it returns to its start as a picture: same complex with every
// polygon corner point back at its vertex (marked canonical keys equal).
// A flip whose hexagon holds a corner point admits one outcome per position
// the redrawn interior can leave that point in; all outcomes are explored.
// Among the certified closed walks of the smallest closing length, the one
// with the lexicographically least word is returned; deterministic.
std::optional<SurfaceSearchOutcome> search_nontrivial_closed_path(int n, SurfaceKind kind,
                                                                  int max_len);

}  // namespace rhombiflip

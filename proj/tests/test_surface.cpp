#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "core/flip_graph.hpp"
#include "core/surface.hpp"
#include "oracles.hpp"

using namespace rhombiflip;

namespace {

SurfaceTiling glued(int n, SurfaceKind kind) {
    return glue(base_tiling(n), BoundaryLabeling::identity(n), kind);
}

// perm[old face] = new face
SurfaceTiling permute_faces(const SurfaceTiling& s, const std::vector<int>& perm) {
    SurfaceTiling r = s;
    for (size_t f = 0; f < s.faces.size(); ++f) {
        r.faces[static_cast<size_t>(perm[f])] = s.faces[f];
        for (int sl = 0; sl < 4; ++sl) {
            SurfacePartner p = s.glue[f][static_cast<size_t>(sl)];
            p.face = perm[static_cast<size_t>(p.face)];
            r.glue[static_cast<size_t>(perm[f])][static_cast<size_t>(sl)] = p;
        }
    }
    return r;
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("gluing closes the zonogon") {
    for (int n = 3; n <= 5; ++n) {
        for (SurfaceKind kind : {SurfaceKind::RP2, SurfaceKind::Klein}) {
            SurfaceTiling s = glued(n, kind);
            CHECK_NOTHROW(s.validate());
            CHECK(static_cast<int>(s.faces.size()) == n * (n - 1) / 2);
            CHECK(s.euler_characteristic() == (kind == SurfaceKind::RP2 ? 1 : 0));
            CHECK(s.euler_characteristic() ==
                  static_cast<int>(s.vertex_orbits().size()) - static_cast<int>(s.faces.size()));
        }
    }
}

TEST_CASE("boundary labelings") {
    CHECK_NOTHROW(BoundaryLabeling::identity(4).validate(4));
    BoundaryLabeling swapped{{2, 1, 3}};
    CHECK_NOTHROW(swapped.validate(3));
    CHECK(swapped.of(1) == 2);
    BoundaryLabeling repeated{{1, 1, 3}};
    CHECK_THROWS_AS(repeated.validate(3), Error);
    BoundaryLabeling out_of_range{{0, 2, 3}};
    CHECK_THROWS_AS(out_of_range.validate(3), Error);
    BoundaryLabeling short_list{{1, 2}};
    CHECK_THROWS_AS(short_list.validate(3), Error);

    SurfaceTiling s = glue(base_tiling(3), swapped, SurfaceKind::RP2);
    CHECK_NOTHROW(s.validate());
    CHECK(s.euler_characteristic() == 1);
}

TEST_CASE("face pairs cover all direction pairs") {
    SurfaceTiling s = glued(4, SurfaceKind::RP2);
    std::set<std::array<int, 2>> pairs;
    for (int f = 0; f < static_cast<int>(s.faces.size()); ++f) pairs.insert(s.face_pair(f));
    std::set<std::array<int, 2>> want;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) want.insert({i, j});
    CHECK(pairs == want);
}

TEST_CASE("validate rejects broken complexes") {
    SurfaceTiling s = glued(3, SurfaceKind::RP2);
    SurfaceTiling bad = s;
    bad.glue[0][0].slot = (bad.glue[0][0].slot + 1) % 4;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = s;
    bad.faces[0].label[0] = 99;
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("json round trip") {
    for (SurfaceKind kind : {SurfaceKind::RP2, SurfaceKind::Klein}) {
        SurfaceTiling s = glued(4, kind);
        SurfaceTiling r = SurfaceTiling::from_json(s.to_json());
        CHECK(r.kind == s.kind);
        CHECK(r.n == s.n);
        CHECK_NOTHROW(r.validate());
        CHECK(r.canonical_key() == s.canonical_key());
    }
}

TEST_CASE("corner orbits partition the corners") {
    SurfaceTiling s = glued(4, SurfaceKind::Klein);
    std::vector<int> ids = s.corner_orbit_ids();
    REQUIRE(ids.size() == 4 * s.faces.size());
    std::vector<std::vector<int>> orbits = s.vertex_orbits();
    std::set<int> covered;
    for (const auto& orb : orbits) {
        REQUIRE(!orb.empty());
        CHECK(std::is_sorted(orb.begin(), orb.end()));
        for (int c : orb) {
            CHECK(ids[static_cast<size_t>(c)] == orb.front());
            CHECK(covered.insert(c).second);
        }
    }
    CHECK(covered.size() == ids.size());
}

TEST_CASE("canonical key ignores the presentation") {
    SurfaceTiling s = glued(4, SurfaceKind::RP2);
    std::vector<int> perm(s.faces.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::reverse(perm.begin(), perm.end());
    SurfaceTiling shuffled = permute_faces(s, perm);
    CHECK_NOTHROW(shuffled.validate());
    CHECK(shuffled.canonical_key() == s.canonical_key());
}

TEST_CASE("canonical keys match the isomorphism oracle") {
    FlipGraph g = enumerate_tilings(4);
    std::vector<SurfaceTiling> glued4;
    for (const PlanarTiling& t : g.vertices)
        glued4.push_back(glue(t, BoundaryLabeling::identity(4), SurfaceKind::RP2));
    for (size_t a = 0; a < glued4.size(); ++a)
        for (size_t b = a; b < glued4.size(); ++b) {
            bool same_key = glued4[a].canonical_key() == glued4[b].canonical_key();
            CHECK(same_key == oracle::surfaces_isomorphic(glued4[a], glued4[b]));
        }

    // flips on the quotient are realized by symmetries: as bare complexes the
    // eight glued tilings collapse to a single isomorphism class, and only the
    // marked pictures tell them apart
    std::map<std::string, int> freq;
    for (const SurfaceTiling& s : glued4) ++freq[s.canonical_key()];
    CHECK(freq.size() == 1);
}

TEST_CASE("marked keys separate positions, not anchors") {
    SurfaceTiling s = glued(4, SurfaceKind::RP2);
    CHECK(s.canonical_key(std::vector<SurfaceMark>{}) == s.canonical_key());

    SurfaceMark at_vertex{0, 0, 0};
    SurfaceMark in_face{2, 0, 0};
    CHECK(s.canonical_key({at_vertex}) != s.canonical_key());
    CHECK(s.canonical_key({at_vertex}) != s.canonical_key({in_face}));

    // two anchors of the same corner orbit name the same point
    std::vector<std::vector<int>> orbits = s.vertex_orbits();
    auto big = std::find_if(orbits.begin(), orbits.end(),
                            [](const std::vector<int>& o) { return o.size() >= 2; });
    REQUIRE(big != orbits.end());
    SurfaceMark a{0, (*big)[0] / 4, (*big)[0] % 4};
    SurfaceMark b{0, (*big)[1] / 4, (*big)[1] % 4};
    CHECK(s.canonical_key({a}) == s.canonical_key({b}));
}

TEST_CASE("flips on the projective plane") {
    SurfaceTiling s = glued(3, SurfaceKind::RP2);
    std::vector<SurfaceHexagon> hs = find_surface_flips(s);
    REQUIRE(!hs.empty());
    for (const SurfaceHexagon& h : hs) {
        CHECK(h.labels == std::array<int, 3>{1, 2, 3});
        SurfaceHexagon inv;
        SurfaceTiling flipped = apply_surface_flip(s, h, &inv);
        CHECK_NOTHROW(flipped.validate());
        CHECK(flipped.euler_characteristic() == 1);
        // at n=3 the flip is realized by a deck transformation
        CHECK(flipped.canonical_key() == s.canonical_key());
        SurfaceTiling back = apply_surface_flip(flipped, inv);
        CHECK(back.canonical_key() == s.canonical_key());
    }
}

TEST_CASE("surface paths replay and map to words") {
    SurfaceTiling s = glued(4, SurfaceKind::RP2);
    std::vector<SurfaceHexagon> hs = find_surface_flips(s);
    REQUIRE(!hs.empty());
    SurfaceHexagon inv;
    apply_surface_flip(s, hs[0], &inv);
    SurfacePath p{s, {hs[0], inv}};

    std::vector<SurfaceTiling> states = replay_surface_path(p);
    REQUIRE(states.size() == 3);
    CHECK(states.back().canonical_key() == s.canonical_key());

    Gn3Word w = phi_S(p);
    REQUIRE(w.letters.size() == 2);
    CHECK(w.letters[0] == w.letters[1]);

    SurfacePath r = SurfacePath::from_json(p.to_json());
    CHECK(phi_S(r).text() == w.text());
    CHECK(replay_surface_path(r).back().canonical_key() == states.back().canonical_key());
}

TEST_CASE("search finds the length one projective loop") {
    auto out = search_nontrivial_closed_path(3, SurfaceKind::RP2, 3);
    REQUIRE(out.has_value());
    CHECK(out->word.text() == "123");
    CHECK(out->path.flips.size() == 1);
    CHECK(out->certificate.triple == std::array<int, 3>{1, 2, 3});
    CHECK(!out->certificate.fword.letters.empty());
    CHECK(out->states_explored > 0);
    std::vector<SurfaceTiling> states = replay_surface_path(out->path);
    CHECK(states.back().canonical_key() == states.front().canonical_key());
}

TEST_CASE("search budgets") {
    CHECK(!search_nontrivial_closed_path(3, SurfaceKind::RP2, 0).has_value());
    CHECK(!search_nontrivial_closed_path(4, SurfaceKind::RP2, 2).has_value());
    CHECK(!search_nontrivial_closed_path(2, SurfaceKind::RP2, 4).has_value());
    CHECK_THROWS_AS(search_nontrivial_closed_path(3, SurfaceKind::RP2, -1), Error);
}

}  // TEST_SUITE

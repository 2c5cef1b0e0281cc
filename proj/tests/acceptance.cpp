// Acceptance checks, one line of output each. Exits nonzero if any fail.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/dual.hpp"
#include "core/mutation.hpp"
#include "core/phi.hpp"
#include "core/rng.hpp"
#include "core/surface.hpp"
#include "oracles.hpp"

using namespace rhombiflip;

namespace {

void req(bool ok, const std::string& what) {
    if (!ok) throw Error(what);
}

PlanarTiling random_walk(int n, int steps, Rng& rng) {
    PlanarTiling t = base_tiling(n);
    for (int s = 0; s < steps; ++s) {
        auto fs = find_flips(t);
        if (fs.empty()) break;
        t = apply_flip(t, fs[static_cast<size_t>(rng.below(fs.size()))]);
    }
    return t;
}

Rat random_positive(Rng& rng) {
    return Rat(1 + static_cast<int>(rng.below(23)), 1 + static_cast<int>(rng.below(11)));
}

VertexVars random_vars(const DirectionSet& d, const PlanarTiling& t, Rng& rng) {
    VertexVars vars;
    for (Mask m : tiling_vertices(t)) vars.emplace(project(d, m), random_positive(rng));
    return vars;
}

std::vector<std::pair<CubeFlip, CubeFlip>> far_pairs(const std::vector<CubeFlip>& fs) {
    std::vector<std::pair<CubeFlip, CubeFlip>> out;
    for (size_t a = 0; a < fs.size(); ++a)
        for (size_t b = a + 1; b < fs.size(); ++b)
            if (far_commutes(Gen{fs[a].axes[0], fs[a].axes[1], fs[a].axes[2]},
                             Gen{fs[b].axes[0], fs[b].axes[1], fs[b].axes[2]}))
                out.emplace_back(fs[a], fs[b]);
    return out;
}

// does some relabeling of 1..4 take w letterwise to 124.123.124.123?
bool beta_up_to_relabeling(const Gn3Word& w) {
    Gn3Word beta = Gn3Word::parse(4, "124.123.124.123");
    if (w.n != 4 || w.letters.size() != beta.letters.size()) return false;
    std::array<int, 4> sigma{1, 2, 3, 4};
    do {
        bool all = true;
        for (size_t p = 0; p < w.letters.size() && all; ++p) {
            Gen img{sigma[static_cast<size_t>(w.letters[p][0] - 1)],
                    sigma[static_cast<size_t>(w.letters[p][1] - 1)],
                    sigma[static_cast<size_t>(w.letters[p][2] - 1)]};
            std::sort(img.begin(), img.end());
            all = img == beta.letters[p];
        }
        if (all) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

bool strictly_inside(const std::vector<Point2>& ccw, const Point2& p) {
    for (size_t k = 0; k < ccw.size(); ++k) {
        const Point2& a = ccw[k];
        const Point2& b = ccw[(k + 1) % ccw.size()];
        if (cross(b - a, p - a) <= 0) return false;
    }
    return true;
}

struct Runner {
    int failures = 0;

    template <class F>
    void criterion(int id, const std::string& what, long budget_ms, F body) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        try {
            body();
        } catch (const std::exception& e) {
            why = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (why.empty() && ms > budget_ms)
            why = "took " + std::to_string(ms) + " ms, budget " + std::to_string(budget_ms);
        if (why.empty()) {
            std::printf("PASS criterion %d: %s (%ld ms)\n", id, what.c_str(), static_cast<long>(ms));
        } else {
            std::printf("FAIL criterion %d: %s (%ld ms): %s\n", id, what.c_str(),
                        static_cast<long>(ms), why.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

}  // namespace

int main() {
    Runner r;

    r.criterion(1, "flip graph counts match the commutation class oracle", 60000, [] {
        const std::array<size_t, 5> want{1, 2, 8, 62, 908};
        for (int n = 2; n <= 6; ++n) {
            size_t expect = want[static_cast<size_t>(n - 2)];
            oracle::CommutationClasses cls = oracle::commutation_classes(n);
            req(cls.representatives.size() == expect,
                "oracle count off at n=" + std::to_string(n) + ": " +
                    std::to_string(cls.representatives.size()));
            FlipGraph g = enumerate_tilings(n, std::numeric_limits<size_t>::max(), 4);
            req(g.complete, "enumeration incomplete at n=" + std::to_string(n));
            req(g.vertices.size() == expect,
                "vertex count off at n=" + std::to_string(n) + ": " +
                    std::to_string(g.vertices.size()));
        }
    });

    r.criterion(2, "flip graphs are connected for n = 2..6", 60000, [] {
        for (int n = 2; n <= 6; ++n) {
            FlipGraph g = enumerate_tilings(n, std::numeric_limits<size_t>::max(), 4);
            req(is_connected(g), "graph disconnected at n=" + std::to_string(n));
        }
    });

    r.criterion(3, "flips are involutions and far pairs commute", 30000, [] {
        Rng rng(301);
        int far_checked = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 3 + static_cast<int>(rng.below(4));
            PlanarTiling t = random_walk(n, static_cast<int>(rng.below(13)), rng);
            auto fs = find_flips(t);
            req(!fs.empty(), "tiling without flips at n=" + std::to_string(n));
            CubeFlip f = fs[static_cast<size_t>(rng.below(fs.size()))];
            PlanarTiling u = apply_flip(t, f);
            req(!(u == t), "flip fixed the tiling");
            req(apply_flip(u, f.inverse()) == t, "flip inverse does not undo");

            auto pairs = far_pairs(fs);
            if (!pairs.empty()) {
                auto [a, b] = pairs[static_cast<size_t>(rng.below(pairs.size()))];
                req(apply_flip(apply_flip(t, a), b) == apply_flip(apply_flip(t, b), a),
                    "far pair does not commute");
                ++far_checked;
            }
        }
        req(far_checked >= 300, "too few far pairs seen: " + std::to_string(far_checked));
    });

    r.criterion(4, "octagon flip orders agree and octagon cells replay", 30000, [] {
        FlipGraph g = enumerate_tilings(4);
        int cells = 0;
        for (const PlanarTiling& t : g.vertices) {
            for (const TwoCell& cell : two_cells_at(g, t)) {
                if (cell.kind != TwoCell::Kind::Octagon) continue;
                ++cells;
                PlanarTiling v0 = g.vertices[static_cast<size_t>(cell.vertices[0])];
                FlipPath one{v0, {cell.flips[0], cell.flips[1], cell.flips[2], cell.flips[3]}};
                FlipPath other{v0,
                               {cell.flips[7].inverse(), cell.flips[6].inverse(),
                                cell.flips[5].inverse(), cell.flips[4].inverse()}};
                req(replay_path(one).back() == replay_path(other).back(),
                    "the two 4-flip orders disagree");
                FlipPath boundary{v0, cell.flips};
                req(replay_path(boundary).back() == v0, "octagon boundary does not close");
            }
        }
        req(cells >= 1, "no tesseract-supported octagon found at n=4");
    });

    r.criterion(5, "homotopic path pairs prove equal at the default budget", 120000, [] {
        std::map<int, FlipGraph> graphs;
        graphs.emplace(4, enumerate_tilings(4));
        graphs.emplace(5, enumerate_tilings(5));
        Rng rng(305);
        int done = 0, squares = 0, octagons = 0;
        while (done < 200) {
            int n = (done % 2) ? 5 : 4;
            const FlipGraph& g = graphs.at(n);
            PlanarTiling at = random_walk(n, static_cast<int>(rng.below(5)), rng);
            FlipPath a = find_path(g, base_tiling(n), at);
            FlipPath b = a;

            if (n == 5) {
                auto pairs = far_pairs(find_flips(at));
                if (pairs.empty()) continue;
                auto [f1, f2] = pairs[static_cast<size_t>(rng.below(pairs.size()))];
                a.flips.push_back(f1);
                a.flips.push_back(f2);
                b.flips.push_back(f2);
                b.flips.push_back(f1);
                ++squares;
            } else {
                auto cells = two_cells_at(g, at);
                const TwoCell* oct = nullptr;
                for (const TwoCell& c : cells)
                    if (c.kind == TwoCell::Kind::Octagon) oct = &c;
                if (!oct) continue;
                // rotate the cycle so it starts at the sampled vertex
                int tid = g.index_of(at);
                size_t rot = static_cast<size_t>(
                    std::find(oct->vertices.begin(), oct->vertices.end(), tid) -
                    oct->vertices.begin());
                req(rot < oct->vertices.size(), "cell does not pass through its own anchor");
                for (size_t s = 0; s < 4; ++s) a.flips.push_back(oct->flips[(rot + s) % 8]);
                for (size_t s = 1; s <= 4; ++s)
                    b.flips.push_back(oct->flips[(rot + 8 - s) % 8].inverse());
                ++octagons;
            }

            // a common tail keeps the difference in the middle
            PlanarTiling end = replay_path(a).back();
            req(end == replay_path(b).back(), "pair ends apart");
            auto fs = find_flips(end);
            for (std::uint64_t extra = rng.below(3); extra > 0; --extra) {
                CubeFlip f = fs[static_cast<size_t>(rng.below(fs.size()))];
                a.flips.push_back(f);
                b.flips.push_back(f);
                end = apply_flip(end, f);
                fs = find_flips(end);
            }

            BoundedEqualResult res = bounded_equal(phi(a), phi(b));
            req(res.equal, "pair " + std::to_string(done) + " not proven equal (" +
                               std::to_string(res.states_explored) + " states)");
            ++done;
        }
        req(squares > 0 && octagons > 0, "both cell kinds must appear");
    });

    r.criterion(6, "closed paths map to trivial words", 120000, [] {
        FlipGraph g = enumerate_tilings(4);
        Rng rng(306);
        const std::array<int, 6> lengths{2, 4, 6, 8, 10, 12};
        for (int trial = 0; trial < 100; ++trial) {
            int len = lengths[static_cast<size_t>(trial % lengths.size())];
            const PlanarTiling& t0 = g.vertices[static_cast<size_t>(rng.below(g.vertices.size()))];
            FlipPath p = sample_closed_path(g, t0, len, rng.next());
            Gn3Word w = phi(p);
            req(!certify_nontrivial(w).has_value(),
                "closed path of length " + std::to_string(len) + " certified nontrivial");
            if (len <= 6) {
                Gn3Word empty;
                empty.n = w.n;
                req(bounded_equal(w, empty).equal,
                    "length " + std::to_string(len) + " word did not reduce to empty");
            }
        }
    });

    r.criterion(7, "the four letter fixture has invariant (1,1)4 (0,0)4", 1000, [] {
        Gn3Word beta = Gn3Word::parse(4, "124.123.124.123");
        FWord inv = mn_invariant(beta, Gen{1, 2, 3});
        req(inv.text() == "(1,1)_4 (0,0)_4", "invariant text is " + inv.text());
        req(!inv.trivial(), "invariant reduced to empty");
        auto cert = certify_nontrivial(beta);
        req(cert.has_value(), "fixture not certified");
        req(cert->triple == Gen{1, 2, 3}, "certificate at the wrong triple");
    });

    r.criterion(8, "relation moves leave every invariant unchanged", 60000, [] {
        Rng rng(308);
        auto triples_of = [](int n) {
            std::vector<Gen> out;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
            return out;
        };
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 3 + static_cast<int>(rng.below(4));
            auto gens = triples_of(n);

            Gn3Word w;
            w.n = n;
            size_t len = rng.below(9);
            for (size_t p = 0; p < len; ++p)
                w.letters.push_back(gens[static_cast<size_t>(rng.below(gens.size()))]);

            Gn3Word v = w;
            int move = static_cast<int>(rng.below(3));
            if (move == 0) {
                size_t pos = rng.below(w.letters.size() + 1);
                v.letters.insert(v.letters.begin() + static_cast<long>(pos), 2,
                                 gens[static_cast<size_t>(rng.below(gens.size()))]);
            } else if (move == 1) {
                std::vector<size_t> spots;
                for (size_t p = 0; p + 1 < w.letters.size(); ++p)
                    if (far_commutes(w.letters[p], w.letters[p + 1]) &&
                        !(w.letters[p] == w.letters[p + 1]))
                        spots.push_back(p);
                if (spots.empty()) {
                    v.letters.insert(v.letters.begin(), 2, gens[0]);
                } else {
                    size_t pos = spots[static_cast<size_t>(rng.below(spots.size()))];
                    std::swap(v.letters[pos], v.letters[pos + 1]);
                }
            } else if (n >= 4) {
                // plant one octagon side, compare against the other
                std::array<int, 4> quad{};
                std::set<int> pickset;
                while (pickset.size() < 4) pickset.insert(1 + static_cast<int>(rng.below(n)));
                std::copy(pickset.begin(), pickset.end(), quad.begin());
                auto [lhs, rhs] = octagon_block(quad);
                size_t pos = rng.below(w.letters.size() + 1);
                w.letters.insert(w.letters.begin() + static_cast<long>(pos), lhs.begin(), lhs.end());
                v = w;
                std::copy(rhs.begin(), rhs.end(), v.letters.begin() + static_cast<long>(pos));
            }

            for (const Gen& c : triples_of(n))
                req(mn_invariant(w, c).letters == mn_invariant(v, c).letters,
                    "invariant moved at trial " + std::to_string(trial));
        }
    });

    r.criterion(9, "the projective plane search reproduces the four letter word", 300000, [] {
        auto out = search_nontrivial_closed_path(4, SurfaceKind::RP2, 8);
        req(out.has_value(), "no certified closed path within length 8");
        req(beta_up_to_relabeling(out->word),
            "word " + out->word.text() + " is not the fixture up to relabeling");
        req(!out->certificate.fword.letters.empty(), "certificate is empty");
        auto states = replay_surface_path(out->path);
        req(states.back().canonical_key() == states.front().canonical_key(),
            "found path does not return to its start complex");
    });

    r.criterion(10, "mutation is involutive and respects both cell kinds", 60000, [] {
        Rng rng(310);
        for (int trial = 0; trial < 500; ++trial) {
            int n = 3 + static_cast<int>(rng.below(3));
            DirectionSet d = DirectionSet::standard(n);
            PlanarTiling t = random_walk(n, static_cast<int>(rng.below(9)), rng);
            auto fs = find_flips(t);
            CubeFlip f = fs[static_cast<size_t>(rng.below(fs.size()))];
            VertexVars vars = random_vars(d, t, rng);
            FlipPath loop{t, {f, f.inverse()}};
            req(transport(d, loop, vars) == vars, "involution broke at trial " + std::to_string(trial));
        }

        DirectionSet d4 = DirectionSet::standard(4);
        FlipGraph g4 = enumerate_tilings(4);
        int octagons = 0;
        for (const PlanarTiling& t : g4.vertices)
            for (const TwoCell& cell : two_cells_at(g4, t)) {
                if (cell.kind != TwoCell::Kind::Octagon) continue;
                PlanarTiling v0 = g4.vertices[static_cast<size_t>(cell.vertices[0])];
                VertexVars vars = random_vars(d4, v0, rng);
                FlipPath around{v0, cell.flips};
                req(transport(d4, around, vars) == vars, "octagon transport is not the identity");
                ++octagons;
            }
        req(octagons >= 1, "no octagon exercised");

        DirectionSet d5 = DirectionSet::standard(5);
        int squares = 0;
        while (squares < 50) {
            PlanarTiling t = random_walk(5, static_cast<int>(rng.below(7)), rng);
            auto pairs = far_pairs(find_flips(t));
            if (pairs.empty()) continue;
            auto [a, b] = pairs[static_cast<size_t>(rng.below(pairs.size()))];
            VertexVars vars = random_vars(d5, t, rng);
            FlipPath ab{t, {a, b}}, ba{t, {b, a}};
            req(transport(d5, ab, vars) == transport(d5, ba, vars),
                "square transports disagree");
            ++squares;
        }
    });

    r.criterion(11, "dual diagrams have six crossings and flips act locally", 30000, [] {
        DirectionSet d = DirectionSet::standard(4);
        FlipGraph g = enumerate_tilings(4);
        for (const PlanarTiling& t : g.vertices) {
            DualDiagram dd = dual_of(d, t);
            req(dd.crossings.size() == 6, "crossing count is " + std::to_string(dd.crossings.size()));
            req(dd.arcs.size() == 4, "arc count off");
            for (int i = 1; i <= 4; ++i)
                req(dd.arcs[static_cast<size_t>(i - 1)].label == i, "arc labels not 1..4");
            for (const auto& cr : dd.crossings) {
                auto on_arc = [&](int label) {
                    const auto& pts = dd.arcs[static_cast<size_t>(label - 1)].points;
                    for (size_t k = 0; k + 1 < pts.size(); ++k) {
                        Point2 mid{(pts[k].x + pts[k + 1].x) / 2, (pts[k].y + pts[k + 1].y) / 2};
                        if (mid == cr.at) return true;
                    }
                    return false;
                };
                req(on_arc(cr.i) && on_arc(cr.j), "crossing is off its arcs");
            }
        }

        for (const FlipGraph::Edge& e : g.edges) {
            const PlanarTiling& before_t = g.vertices[static_cast<size_t>(e.a)];
            const PlanarTiling& after_t = g.vertices[static_cast<size_t>(e.b)];
            DualDiagram before = dual_of(d, before_t);
            DualDiagram after = dual_of(d, after_t);

            std::vector<Point2> hex;
            for (Mask m : flip_hexagon(e.flip).ring) hex.push_back(project(d, m));
            std::set<std::pair<int, int>> moved;
            for (size_t a = 0; a < 3; ++a)
                for (size_t b = a + 1; b < 3; ++b)
                    moved.insert({e.flip.axes[a], e.flip.axes[b]});

            for (size_t k = 0; k < before.crossings.size(); ++k) {
                const auto& x = before.crossings[k];
                const auto& y = after.crossings[k];
                bool inside = moved.count({x.i, x.j}) > 0;
                req(inside ? strictly_inside(hex, x.at) && strictly_inside(hex, y.at)
                           : x.at == y.at,
                    "a crossing moved outside the flipped hexagon");
            }
            for (int i = 1; i <= 4; ++i) {
                const auto& pa = before.arcs[static_cast<size_t>(i - 1)].points;
                const auto& pb = after.arcs[static_cast<size_t>(i - 1)].points;
                std::vector<Point2> oa, ob;
                for (const Point2& p : pa)
                    if (!strictly_inside(hex, p)) oa.push_back(p);
                for (const Point2& p : pb)
                    if (!strictly_inside(hex, p)) ob.push_back(p);
                req(oa == ob, "an arc changed outside the flipped hexagon");
            }
        }
    });

    if (r.failures == 0) std::printf("acceptance: all 11 criteria passed\n");
    else std::printf("acceptance: %d of 11 criteria failed\n", r.failures);
    return r.failures == 0 ? 0 : 1;
}

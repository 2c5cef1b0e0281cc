#include "tiling.hpp"

#include <algorithm>

namespace rhombiflip {

std::array<Rhombus, 3> cube_top_faces(Mask base, int j, int k, int l) {
    return {Rhombus{base | bit_of(l), j, k}, Rhombus{base, j, l}, Rhombus{base | bit_of(j), k, l}};
}

std::array<Rhombus, 3> cube_bottom_faces(Mask base, int j, int k, int l) {
    return {Rhombus{base, j, k}, Rhombus{base | bit_of(k), j, l}, Rhombus{base, k, l}};
}

FlipHexagon flip_hexagon(const CubeFlip& f) {
    Mask I = f.base;
    Mask ej = bit_of(f.axes[0]), ek = bit_of(f.axes[1]), el = bit_of(f.axes[2]);
    FlipHexagon h;
    h.ring = {I, I | ej, I | ej | ek, I | ej | ek | el, I | ek | el, I | el};
    if (f.dir == FlipDir::Down) {
        h.center_removed = I | ej | el;
        h.center_added = I | ek;
    } else {
        h.center_removed = I | ek;
        h.center_added = I | ej | el;
    }
    return h;
}

PlanarTiling::PlanarTiling(int n, std::vector<Rhombus> rhombi) : n_(n), rhombi_(std::move(rhombi)) {
    if (n < 2 || n > kMaxN) throw Error("tiling: n out of range");
    if (rhombi_.size() != static_cast<size_t>(n * (n - 1) / 2)) throw Error("tiling: wrong rhombus count");
    std::sort(rhombi_.begin(), rhombi_.end());
    for (size_t t = 0; t < rhombi_.size(); ++t) {
        const Rhombus& r = rhombi_[t];
        if (r.i < 1 || r.j <= r.i || r.j > n) throw Error("tiling: bad pair");
        if (t > 0 && rhombi_[t - 1].i == r.i && rhombi_[t - 1].j == r.j) throw Error("tiling: duplicate pair");
        if (r.base >> n) throw Error("tiling: base outside cube");
        if (r.base & (bit_of(r.i) | bit_of(r.j))) throw Error("tiling: base must vanish on its own pair");
    }
}

const Rhombus& PlanarTiling::at_pair(int i, int j) const {
    // rhombi_ is sorted by pair, one rhombus per pair
    size_t idx = static_cast<size_t>((i - 1) * (2 * n_ - i) / 2 + (j - i - 1));
    return rhombi_[idx];
}

std::string PlanarTiling::key() const {
    std::string s;
    s.reserve(rhombi_.size() * 3);
    for (const Rhombus& r : rhombi_) {
        s.push_back(static_cast<char>(r.base & 0xff));
        s.push_back(static_cast<char>(r.base >> 8 & 0xff));
    }
    return s;
}

nlohmann::json PlanarTiling::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rhombus& r : rhombi_) {
        nlohmann::json b = nlohmann::json::array();
        for (int c = 0; c < n_; ++c) b.push_back(r.base >> c & 1);
        arr.push_back({{"base", b}, {"pair", {r.i, r.j}}});
    }
    return {{"n", n_}, {"rhombi", arr}};
}

PlanarTiling PlanarTiling::from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    if (n < 2 || n > kMaxN) throw Error("tiling: n out of range");
    std::vector<Rhombus> rs;
    for (const auto& e : j.at("rhombi")) {
        Rhombus r;
        const auto& b = e.at("base");
        if (static_cast<int>(b.size()) != n) throw Error("tiling: base length mismatch");
        for (int c = 0; c < n; ++c) {
            int v = b[static_cast<size_t>(c)].get<int>();
            if (v != 0 && v != 1) throw Error("tiling: base entries must be 0/1");
            if (v) r.base |= Mask(1) << c;
        }
        const auto& p = e.at("pair");
        if (p.size() != 2) throw Error("tiling: pair must have two entries");
        r.i = p[0].get<int>();
        r.j = p[1].get<int>();
        rs.push_back(r);
    }
    return PlanarTiling(n, std::move(rs));
}

PlanarTiling tiling_from_reduced_word(int n, const std::vector<int>& word) {
    if (static_cast<int>(word.size()) != n * (n - 1) / 2) throw Error("sweep: word has wrong length");
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = n - i;
    std::vector<Rhombus> rs;
    for (int s : word) {
        if (s < 1 || s >= n) throw Error("sweep: letter out of range");
        int a = d[static_cast<size_t>(s - 1)], b = d[static_cast<size_t>(s)];
        if (a < b) throw Error("sweep: word is not reduced");
        Mask base = 0;
        for (int t = 0; t < s - 1; ++t) base |= bit_of(d[static_cast<size_t>(t)]);
        rs.push_back(Rhombus{base, b, a});
        std::swap(d[static_cast<size_t>(s - 1)], d[static_cast<size_t>(s)]);
    }
    return PlanarTiling(n, std::move(rs));
}

PlanarTiling base_tiling(int n) {
    std::vector<int> word;
    for (int b = 1; b < n; ++b)
        for (int s = b; s >= 1; --s) word.push_back(s);
    return tiling_from_reduced_word(n, word);
}

std::vector<Point2> rhombus_corners(const DirectionSet& d, const Rhombus& r) {
    Point2 p0 = project(d, r.base);
    Point2 p1 = p0 + d.dir(r.i);
    Point2 p2 = p1 + d.dir(r.j);
    Point2 p3 = p0 + d.dir(r.j);
    return {p0, p1, p2, p3};
}

bool validate(const DirectionSet& d, const PlanarTiling& t) {
    if (d.n != t.n()) return false;
    std::vector<std::vector<Point2>> polys;
    Rat total(0);
    for (const Rhombus& r : t.rhombi()) {
        polys.push_back(rhombus_corners(d, r));
        total += cross(d.dir(r.i), d.dir(r.j));
    }
    if (total != zonogon_area(d)) return false;
    for (size_t a = 0; a < polys.size(); ++a)
        for (size_t b = a + 1; b < polys.size(); ++b)
            if (convex_interiors_intersect(polys[a], polys[b])) return false;
    return true;
}

// Down needs the top faces present, Up the bottom faces; the two cases
// exclude each other.
bool flip_for_axes(const PlanarTiling& t, int j, int k, int l, CubeFlip* out) {
    Mask bjk = t.at_pair(j, k).base;
    Mask bjl = t.at_pair(j, l).base;
    Mask bkl = t.at_pair(k, l).base;
    Mask I = bjl;
    if (!(I & bit_of(k)) && bjk == (I | bit_of(l)) && bkl == (I | bit_of(j))) {
        *out = CubeFlip{I, {j, k, l}, FlipDir::Down};
        return true;
    }
    I = bjk;
    if (!(I & bit_of(l)) && bkl == I && bjl == (I | bit_of(k))) {
        *out = CubeFlip{I, {j, k, l}, FlipDir::Up};
        return true;
    }
    return false;
}

std::vector<CubeFlip> find_flips(const PlanarTiling& t) {
    std::vector<CubeFlip> out;
    int n = t.n();
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                CubeFlip f;
                if (flip_for_axes(t, j, k, l, &f)) out.push_back(f);
            }
    return out;
}

bool flip_available(const PlanarTiling& t, const CubeFlip& f) {
    int j = f.axes[0], k = f.axes[1], l = f.axes[2];
    if (j < 1 || j >= k || k >= l || l > t.n()) return false;
    CubeFlip cand;
    if (!flip_for_axes(t, j, k, l, &cand)) return false;
    return cand == f;
}

PlanarTiling apply_flip(const PlanarTiling& t, const CubeFlip& f) {
    if (!flip_available(t, f)) throw Error("flip not applicable");
    int j = f.axes[0], k = f.axes[1], l = f.axes[2];
    auto faces = (f.dir == FlipDir::Down) ? cube_bottom_faces(f.base, j, k, l)
                                          : cube_top_faces(f.base, j, k, l);
    std::vector<Rhombus> rs = t.rhombi();
    for (Rhombus& r : rs)
        for (const Rhombus& nf : faces)
            if (r.i == nf.i && r.j == nf.j) r.base = nf.base;
    return PlanarTiling(t.n(), std::move(rs));
}

std::set<Mask> tiling_vertices(const PlanarTiling& t) {
    std::set<Mask> vs;
    for (const Rhombus& r : t.rhombi()) {
        vs.insert(r.base);
        vs.insert(r.base | bit_of(r.i));
        vs.insert(r.base | bit_of(r.j));
        vs.insert(r.base | bit_of(r.i) | bit_of(r.j));
    }
    return vs;
}

nlohmann::json flip_to_json(const CubeFlip& f, int n) {
    nlohmann::json b = nlohmann::json::array();
    for (int c = 0; c < n; ++c) b.push_back(f.base >> c & 1);
    return {{"base", b},
            {"axes", {f.axes[0], f.axes[1], f.axes[2]}},
            {"dir", f.dir == FlipDir::Down ? "down" : "up"}};
}

CubeFlip flip_from_json(const nlohmann::json& j) {
    CubeFlip f;
    const auto& b = j.at("base");
    for (size_t c = 0; c < b.size(); ++c) {
        int v = b[c].get<int>();
        if (v != 0 && v != 1) throw Error("flip: base entries must be 0/1");
        if (v) f.base |= Mask(1) << c;
    }
    const auto& a = j.at("axes");
    if (a.size() != 3) throw Error("flip: axes must have three entries");
    for (size_t c = 0; c < 3; ++c) f.axes[c] = a[c].get<int>();
    if (!(f.axes[0] < f.axes[1] && f.axes[1] < f.axes[2])) throw Error("flip: axes must be ascending");
    std::string dir = j.at("dir").get<std::string>();
    if (dir == "down") f.dir = FlipDir::Down;
    else if (dir == "up") f.dir = FlipDir::Up;
    else throw Error("flip: dir must be up or down");
    return f;
}

}  // namespace rhombiflip

#include "geometry.hpp"

namespace rhombiflip {

void DirectionSet::validate() const {
    if (n < 1 || n > kMaxN) throw Error("direction set: n out of range");
    if (static_cast<int>(v.size()) != n) throw Error("direction set: wrong vector count");
    for (const auto& p : v) {
        if (p.y <= 0) throw Error("direction set: vectors must have positive y");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cross(v[i], v[j]) <= 0) throw Error("direction set: angles not strictly increasing");
}

DirectionSet DirectionSet::standard(int n) {
    if (n < 1 || n > kMaxN) throw Error("direction set: n out of range");
    DirectionSet d;
    d.n = n;
    for (int i = 1; i <= n; ++i) d.v.emplace_back(Rat(BigInt(1) << (n - i)), Rat(1));
    return d;
}

nlohmann::json DirectionSet::to_json() const {
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& p : v) {
        vecs.push_back({numerator(p.x).str(), denominator(p.x).str(),
                        numerator(p.y).str(), denominator(p.y).str()});
    }
    return {{"n", n}, {"vectors", vecs}};
}

DirectionSet DirectionSet::from_json(const nlohmann::json& j) {
    DirectionSet d;
    d.n = j.at("n").get<int>();
    for (const auto& e : j.at("vectors")) {
        if (!e.is_array() || e.size() != 4) throw Error("direction set: vector entry must be [numx,denx,numy,deny]");
        auto part = [&](size_t k) {
            const auto& c = e[k];
            return c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>());
        };
        BigInt dx = part(1), dy = part(3);
        if (dx == 0 || dy == 0) throw Error("direction set: zero denominator");
        d.v.emplace_back(Rat(part(0), dx), Rat(part(2), dy));
    }
    d.validate();
    return d;
}

Point2 project(const DirectionSet& d, Mask p) {
    if (p >> d.n) throw Error("project: point has coordinates beyond n");
    Point2 out{Rat(0), Rat(0)};
    for (int i = 0; i < d.n; ++i)
        if (p >> i & 1) out = out + d.v[static_cast<size_t>(i)];
    return out;
}

Point2 project(const DirectionSet& d, const std::vector<int>& coords) {
    if (static_cast<int>(coords.size()) != d.n) throw Error("project: dimension mismatch");
    Point2 out{Rat(0), Rat(0)};
    for (int i = 0; i < d.n; ++i) {
        if (coords[static_cast<size_t>(i)] == 1) out = out + d.v[static_cast<size_t>(i)];
        else if (coords[static_cast<size_t>(i)] != 0) throw Error("project: coordinates must be 0 or 1");
    }
    return out;
}

std::vector<Point2> zonogon_boundary(const DirectionSet& d) {
    std::vector<Point2> out;
    Point2 p{Rat(0), Rat(0)};
    out.push_back(p);
    for (int i = 1; i <= d.n; ++i) {
        p = p + d.dir(i);
        out.push_back(p);
    }
    for (int i = 1; i < d.n; ++i) {
        p = p - d.dir(i);
        out.push_back(p);
    }
    return out;
}

Rat zonogon_area(const DirectionSet& d) {
    Rat a(0);
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j) a += cross(d.v[static_cast<size_t>(i)], d.v[static_cast<size_t>(j)]);
    return a;
}

Rat polygon_area(const std::vector<Point2>& poly) {
    Rat a(0);
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) a += cross(poly[i], poly[(i + 1) % m]);
    return a / 2;
}

namespace {

// Projection interval of poly onto the normal of edge direction (dx,dy).
std::pair<Rat, Rat> axis_interval(const std::vector<Point2>& poly, const Point2& normal) {
    Rat lo = dot(poly[0], normal), hi = lo;
    for (size_t i = 1; i < poly.size(); ++i) {
        Rat t = dot(poly[i], normal);
        if (t < lo) lo = t;
        if (t > hi) hi = t;
    }
    return {lo, hi};
}

}  // namespace

bool convex_interiors_intersect(const std::vector<Point2>& a, const std::vector<Point2>& b) {
    auto separated_on = [&](const std::vector<Point2>& poly) {
        size_t m = poly.size();
        for (size_t i = 0; i < m; ++i) {
            Point2 e = poly[(i + 1) % m] - poly[i];
            Point2 normal{-e.y, e.x};
            auto [alo, ahi] = axis_interval(a, normal);
            auto [blo, bhi] = axis_interval(b, normal);
            if (ahi <= blo || bhi <= alo) return true;
        }
        return false;
    };
    return !separated_on(a) && !separated_on(b);
}

}  // namespace rhombiflip

#include "mutation.hpp"

namespace rhombiflip {

namespace {

std::string coord_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += ":" + denominator(r).str();
    return s;
}

Rat parse_coord(const std::string& s) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) return Rat(BigInt(s));
        BigInt den(s.substr(colon + 1));
        if (den == 0) throw Error("zero denominator");
        return Rat(BigInt(s.substr(0, colon)), den);
    } catch (const std::exception&) {
        throw Error("bad coordinate: " + s);
    }
}

}  // namespace

std::string point_key(const Point2& p) { return coord_str(p.x) + "/" + coord_str(p.y); }

Point2 parse_point_key(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw Error("bad point key: " + s);
    return Point2(parse_coord(s.substr(0, slash)), parse_coord(s.substr(slash + 1)));
}

nlohmann::json vars_to_json(const VertexVars& vars) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [p, v] : vars) j[point_key(p)] = rat_str(v);
    return j;
}

VertexVars vars_from_json(const nlohmann::json& j) {
    VertexVars vars;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Point2 p = parse_point_key(it.key());
        Rat v = it->is_string() ? parse_rat(it->get<std::string>()) : Rat(it->get<long long>());
        if (v == 0) throw Error("vars: zero variable");
        if (!vars.emplace(std::move(p), std::move(v)).second) throw Error("vars: duplicate vertex");
    }
    return vars;
}

VertexVars vars_all_ones(const DirectionSet& d, const PlanarTiling& t) {
    VertexVars vars;
    for (Mask m : tiling_vertices(t)) vars.emplace(project(d, m), Rat(1));
    return vars;
}

void validate_vars(const DirectionSet& d, const PlanarTiling& t, const VertexVars& vars) {
    std::set<Point2> pts;
    for (Mask m : tiling_vertices(t)) pts.insert(project(d, m));
    if (pts.size() != vars.size()) throw Error("vars: key set does not match tiling vertices");
    for (const auto& [p, v] : vars) {
        if (!pts.count(p)) throw Error("vars: key " + point_key(p) + " is not a tiling vertex");
        if (v == 0) throw Error("vars: zero variable");
    }
}

VertexVars mutate(const DirectionSet& d, const PlanarTiling& t, const VertexVars& vars,
                  const CubeFlip& f) {
    if (!flip_available(t, f)) throw Error("mutate: flip not applicable");
    validate_vars(d, t, vars);
    FlipHexagon h = flip_hexagon(f);
    auto val = [&](Mask m) {
        auto it = vars.find(project(d, m));
        if (it == vars.end()) throw Error("mutate: missing hexagon variable");
        return it->second;
    };
    Rat a = val(h.ring[0]), b = val(h.ring[1]), c = val(h.ring[2]);
    Rat dd = val(h.ring[3]), e = val(h.ring[4]), ff = val(h.ring[5]);
    Rat x = val(h.center_removed);
    Rat xp = (a * dd + b * e + c * ff) / x;
    if (xp == 0) throw Error("mutate: exchange produced a zero variable");
    VertexVars out = vars;
    out.erase(project(d, h.center_removed));
    out.emplace(project(d, h.center_added), std::move(xp));
    return out;
}

VertexVars transport(const DirectionSet& d, const FlipPath& p, const VertexVars& vars) {
    PlanarTiling t = p.start;
    VertexVars cur = vars;
    for (const CubeFlip& f : p.flips) {
        cur = mutate(d, t, cur, f);
        t = apply_flip(t, f);
    }
    return cur;
}

}  // namespace rhombiflip

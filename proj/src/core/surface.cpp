#include "surface.hpp"

#include <algorithm>

#include "flip_graph.hpp"
#include <deque>
#include <map>
#include <set>

namespace rhombiflip {

void BoundaryLabeling::validate(int n) const {
    if (static_cast<int>(labels.size()) != n) throw Error("labeling: wrong length");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int l : labels) {
        if (l < 1 || l > n || seen[static_cast<size_t>(l)]) throw Error("labeling: not a permutation of 1..n");
        seen[static_cast<size_t>(l)] = 1;
    }
}

BoundaryLabeling BoundaryLabeling::identity(int n) {
    BoundaryLabeling e;
    for (int i = 1; i <= n; ++i) e.labels.push_back(i);
    return e;
}

std::array<int, 2> SurfaceTiling::face_pair(int f) const {
    int a = faces[static_cast<size_t>(f)].label[0], b = faces[static_cast<size_t>(f)].label[1];
    return {std::min(a, b), std::max(a, b)};
}

namespace {

struct Dsu {
    std::vector<int> p;

    explicit Dsu(size_t m) : p(m) {
        for (size_t i = 0; i < m; ++i) p[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) {
            p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
            x = p[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

std::vector<int> SurfaceTiling::corner_orbit_ids() const {
    size_t m = faces.size() * 4;
    Dsu dsu(m);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (int s = 0; s < 4; ++s) {
            const SurfacePartner& p = glue[static_cast<size_t>(f)][static_cast<size_t>(s)];
            int tail1 = 4 * f + s, head1 = 4 * f + (s + 1) % 4;
            int tail2 = 4 * p.face + p.slot, head2 = 4 * p.face + (p.slot + 1) % 4;
            if (p.reversed) {
                dsu.unite(tail1, head2);
                dsu.unite(head1, tail2);
            } else {
                dsu.unite(tail1, tail2);
                dsu.unite(head1, head2);
            }
        }
    std::vector<int> out(m);
    for (size_t c = 0; c < m; ++c) out[c] = dsu.find(static_cast<int>(c));
    return out;
}

std::vector<std::vector<int>> SurfaceTiling::vertex_orbits() const {
    auto ids = corner_orbit_ids();
    std::map<int, std::vector<int>> groups;
    for (size_t c = 0; c < ids.size(); ++c) groups[ids[c]].push_back(static_cast<int>(c));
    std::vector<std::vector<int>> out;
    for (auto& [root, cs] : groups) out.push_back(std::move(cs));
    return out;
}

int SurfaceTiling::euler_characteristic() const {
    int F = static_cast<int>(faces.size());
    int V = static_cast<int>(vertex_orbits().size());
    return V - F;  // E = 2F
}

void SurfaceTiling::validate() const {
    if (n < 2 || n > kMaxN) throw Error("surface: n out of range");
    size_t want = static_cast<size_t>(n * (n - 1) / 2);
    if (faces.size() != want || glue.size() != want) throw Error("surface: wrong face count");
    std::set<std::array<int, 2>> pairs;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& lb = faces[static_cast<size_t>(f)].label;
        if (lb[0] != lb[2] || lb[1] != lb[3] || lb[0] == lb[1]) throw Error("surface: bad face labels");
        for (int s = 0; s < 4; ++s)
            if (lb[static_cast<size_t>(s)] < 1 || lb[static_cast<size_t>(s)] > n)
                throw Error("surface: label out of range");
        if (!pairs.insert(face_pair(f)).second) throw Error("surface: duplicate label pair");
    }
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (int s = 0; s < 4; ++s) {
            const SurfacePartner& p = glue[static_cast<size_t>(f)][static_cast<size_t>(s)];
            if (p.face < 0 || p.face >= static_cast<int>(faces.size()) || p.slot < 0 || p.slot > 3)
                throw Error("surface: partner out of range");
            if (p.face == f && p.slot == s) throw Error("surface: slot glued to itself");
            const SurfacePartner& q = glue[static_cast<size_t>(p.face)][static_cast<size_t>(p.slot)];
            if (q.face != f || q.slot != s || q.reversed != p.reversed)
                throw Error("surface: gluing is not an involution");
            if (faces[static_cast<size_t>(f)].label[static_cast<size_t>(s)] !=
                faces[static_cast<size_t>(p.face)].label[static_cast<size_t>(p.slot)])
                throw Error("surface: glued edges carry different labels");
        }
    // connectivity over face adjacency
    std::vector<char> seen(faces.size(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    size_t cnt = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int s = 0; s < 4; ++s) {
            int f2 = glue[static_cast<size_t>(f)][static_cast<size_t>(s)].face;
            if (!seen[static_cast<size_t>(f2)]) {
                seen[static_cast<size_t>(f2)] = 1;
                ++cnt;
                q.push_back(f2);
            }
        }
    }
    if (cnt != faces.size()) throw Error("surface: complex is not connected");
    int chi = euler_characteristic();
    int want_chi = (kind == SurfaceKind::RP2) ? 1 : 0;
    if (chi != want_chi) throw Error("surface: Euler characteristic " + std::to_string(chi) +
                                     " does not match the surface kind");
}

std::string SurfaceTiling::canonical_key() const { return canonical_key({}); }

std::string SurfaceTiling::canonical_key(const std::vector<SurfaceMark>& marks) const {
    int F = static_cast<int>(faces.size());
    std::vector<int> oid;
    std::map<int, std::vector<int>> orbit_corners;
    if (!marks.empty()) {
        for (const SurfaceMark& m : marks)
            if (m.type < 0 || m.type > 2 || m.face < 0 || m.face >= F || m.slot < 0 || m.slot > 3)
                throw Error("surface: invalid mark");
        oid = corner_orbit_ids();
        for (int c = 0; c < 4 * F; ++c) orbit_corners[oid[static_cast<size_t>(c)]].push_back(c);
    }
    std::string best;
    for (int root = 0; root < F; ++root)
        for (int rot = 0; rot < 4; ++rot)
            for (int oo = 0; oo < 2; ++oo) {
                std::vector<int> c0(static_cast<size_t>(F), -1), ori(static_cast<size_t>(F), 0),
                    cid(static_cast<size_t>(F), -1);
                std::vector<int> order{root};
                c0[static_cast<size_t>(root)] = rot;
                ori[static_cast<size_t>(root)] = oo;
                cid[static_cast<size_t>(root)] = 0;
                std::string cert;
                cert.push_back(kind == SurfaceKind::RP2 ? 0 : 1);
                cert.push_back(static_cast<char>(n));
                for (size_t qi = 0; qi < order.size(); ++qi) {
                    int f = order[qi];
                    for (int t = 0; t < 4; ++t) {
                        int s = ori[static_cast<size_t>(f)] == 0
                                    ? (c0[static_cast<size_t>(f)] + t) % 4
                                    : (c0[static_cast<size_t>(f)] - t + 7) % 4;
                        const SurfacePartner& p = glue[static_cast<size_t>(f)][static_cast<size_t>(s)];
                        bool eff = p.reversed ^ (ori[static_cast<size_t>(f)] == 1);
                        int f2 = p.face;
                        if (cid[static_cast<size_t>(f2)] < 0) {
                            int o2 = eff ? 0 : 1;  // make the tree edge anti-aligned
                            ori[static_cast<size_t>(f2)] = o2;
                            c0[static_cast<size_t>(f2)] = o2 == 0 ? p.slot : (p.slot + 1) % 4;
                            cid[static_cast<size_t>(f2)] = static_cast<int>(order.size());
                            order.push_back(f2);
                        }
                        bool eff2 = p.reversed ^ (ori[static_cast<size_t>(f)] == 1) ^
                                    (ori[static_cast<size_t>(f2)] == 1);
                        int t2 = ori[static_cast<size_t>(f2)] == 0
                                     ? (p.slot - c0[static_cast<size_t>(f2)] + 4) % 4
                                     : (c0[static_cast<size_t>(f2)] + 3 - p.slot + 4) % 4;
                        cert.push_back(static_cast<char>(faces[static_cast<size_t>(f)].label[static_cast<size_t>(s)]));
                        cert.push_back(static_cast<char>(cid[static_cast<size_t>(f2)]));
                        cert.push_back(static_cast<char>(t2));
                        cert.push_back(static_cast<char>(eff2));
                    }
                }
                auto enc_corner = [&](int f, int c) -> std::pair<int, int> {
                    int t = ori[static_cast<size_t>(f)] == 0 ? (c - c0[static_cast<size_t>(f)] + 4) % 4
                                                             : (c0[static_cast<size_t>(f)] - c + 4) % 4;
                    return {cid[static_cast<size_t>(f)], t};
                };
                auto enc_side = [&](int f, int s) -> std::pair<int, int> {
                    int t = ori[static_cast<size_t>(f)] == 0 ? (s - c0[static_cast<size_t>(f)] + 4) % 4
                                                             : (c0[static_cast<size_t>(f)] + 3 - s) % 4;
                    return {cid[static_cast<size_t>(f)], t};
                };
                for (const SurfaceMark& m : marks) {
                    std::pair<int, int> e{F, 4};
                    if (m.type == 0) {
                        for (int c : orbit_corners.at(oid[static_cast<size_t>(4 * m.face + m.slot)]))
                            e = std::min(e, enc_corner(c / 4, c % 4));
                    } else if (m.type == 1) {
                        const SurfacePartner& p = glue[static_cast<size_t>(m.face)][static_cast<size_t>(m.slot)];
                        e = std::min(enc_side(m.face, m.slot), enc_side(p.face, p.slot));
                    } else {
                        e = {cid[static_cast<size_t>(m.face)], 0};
                    }
                    cert.push_back(static_cast<char>(m.type));
                    cert.push_back(static_cast<char>(e.first));
                    cert.push_back(static_cast<char>(e.second));
                }
                if (best.empty() || cert < best) best = std::move(cert);
            }
    return best;
}

nlohmann::json SurfaceTiling::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        auto pr = face_pair(f);
        fs.push_back({{"pair", {pr[0], pr[1]}},
                      {"labels", {faces[static_cast<size_t>(f)].label[0], faces[static_cast<size_t>(f)].label[1],
                                  faces[static_cast<size_t>(f)].label[2], faces[static_cast<size_t>(f)].label[3]}}});
    }
    nlohmann::json gs = nlohmann::json::array();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (int s = 0; s < 4; ++s) {
            const SurfacePartner& p = glue[static_cast<size_t>(f)][static_cast<size_t>(s)];
            if (std::make_pair(f, s) <= std::make_pair(p.face, p.slot))
                gs.push_back({{"a", {f, s}}, {"b", {p.face, p.slot}}, {"reversed", p.reversed}});
        }
    return {{"kind", kind == SurfaceKind::RP2 ? "rp2" : "klein"}, {"n", n}, {"faces", fs}, {"gluing", gs}};
}

SurfaceTiling SurfaceTiling::from_json(const nlohmann::json& j) {
    SurfaceTiling s;
    std::string kd = j.at("kind").get<std::string>();
    if (kd == "rp2") s.kind = SurfaceKind::RP2;
    else if (kd == "klein") s.kind = SurfaceKind::Klein;
    else throw Error("surface: kind must be rp2 or klein");
    s.n = j.at("n").get<int>();
    for (const auto& fe : j.at("faces")) {
        Face f;
        const auto& lb = fe.at("labels");
        if (lb.size() != 4) throw Error("surface: labels must have four entries");
        for (size_t t = 0; t < 4; ++t) f.label[t] = lb[t].get<int>();
        s.faces.push_back(f);
    }
    s.glue.assign(s.faces.size(), {});
    std::vector<std::array<char, 4>> set(s.faces.size(), {0, 0, 0, 0});
    for (const auto& ge : j.at("gluing")) {
        int f = ge.at("a")[0].get<int>(), sl = ge.at("a")[1].get<int>();
        int f2 = ge.at("b")[0].get<int>(), sl2 = ge.at("b")[1].get<int>();
        bool rev = ge.at("reversed").get<bool>();
        if (f < 0 || f >= static_cast<int>(s.faces.size()) || f2 < 0 || f2 >= static_cast<int>(s.faces.size()) ||
            sl < 0 || sl > 3 || sl2 < 0 || sl2 > 3)
            throw Error("surface: gluing entry out of range");
        if (set[static_cast<size_t>(f)][static_cast<size_t>(sl)] || set[static_cast<size_t>(f2)][static_cast<size_t>(sl2)])
            throw Error("surface: slot glued twice");
        set[static_cast<size_t>(f)][static_cast<size_t>(sl)] = 1;
        set[static_cast<size_t>(f2)][static_cast<size_t>(sl2)] = 1;
        s.glue[static_cast<size_t>(f)][static_cast<size_t>(sl)] = {f2, sl2, rev};
        s.glue[static_cast<size_t>(f2)][static_cast<size_t>(sl2)] = {f, sl, rev};
    }
    for (size_t f = 0; f < s.faces.size(); ++f)
        for (int sl = 0; sl < 4; ++sl)
            if (!set[f][static_cast<size_t>(sl)]) throw Error("surface: free edge slot");
    s.validate();
    return s;
}

SurfaceTiling glue(const PlanarTiling& t, const BoundaryLabeling& e, SurfaceKind kind) {
    int n = t.n();
    e.validate(n);
    SurfaceTiling s;
    s.kind = kind;
    s.n = n;
    s.faces.resize(t.rhombi().size());
    s.glue.resize(t.rhombi().size());

    auto dart = [&](int f, int sl) -> std::pair<Mask, Mask> {
        const Rhombus& r = t.rhombi()[static_cast<size_t>(f)];
        Mask b = r.base, bp = r.base | bit_of(r.i), bpq = bp | bit_of(r.j), bq = r.base | bit_of(r.j);
        switch (sl) {
            case 0: return {b, bp};
            case 1: return {bp, bpq};
            case 2: return {bpq, bq};
            default: return {bq, b};
        }
    };

    std::map<std::pair<Mask, Mask>, std::vector<std::pair<int, int>>> edges;
    for (int f = 0; f < static_cast<int>(t.rhombi().size()); ++f) {
        const Rhombus& r = t.rhombi()[static_cast<size_t>(f)];
        s.faces[static_cast<size_t>(f)].label = {e.of(r.i), e.of(r.j), e.of(r.i), e.of(r.j)};
        for (int sl = 0; sl < 4; ++sl) {
            auto [a, b] = dart(f, sl);
            edges[std::minmax(a, b)].emplace_back(f, sl);
        }
    }

    auto set_pair = [&](std::pair<int, int> x, std::pair<int, int> y, bool rev) {
        s.glue[static_cast<size_t>(x.first)][static_cast<size_t>(x.second)] = {y.first, y.second, rev};
        s.glue[static_cast<size_t>(y.first)][static_cast<size_t>(y.second)] = {x.first, x.second, rev};
    };

    // interior edges: two incident faces with darts running against each other
    std::map<std::pair<Mask, Mask>, std::pair<int, int>> boundary;
    for (auto& [key, slots] : edges) {
        if (slots.size() == 2) {
            auto [a1, b1] = dart(slots[0].first, slots[0].second);
            auto [a2, b2] = dart(slots[1].first, slots[1].second);
            set_pair(slots[0], slots[1], a1 == b2 && b1 == a2);
        } else if (slots.size() == 1) {
            boundary[key] = slots[0];
        } else {
            throw Error("glue: edge shared by more than two rhombi");
        }
    }
    if (boundary.size() != static_cast<size_t>(2 * n)) throw Error("glue: unexpected boundary");

    Mask full = (Mask(1) << n) - 1;
    Mask prefix = 0;
    for (int i = 1; i <= n; ++i) {
        Mask lo0 = prefix, lo1 = prefix | bit_of(i);      // side i endpoints
        Mask hi0 = full ^ lo0, hi1 = full ^ lo1;          // side n+i endpoints
        auto itA = boundary.find(std::minmax(lo0, lo1));
        auto itB = boundary.find(std::minmax(hi0, hi1));
        if (itA == boundary.end() || itB == boundary.end()) throw Error("glue: missing boundary side");
        auto [fA, sA] = itA->second;
        auto [fB, sB] = itB->second;
        if (s.faces[static_cast<size_t>(fA)].label[static_cast<size_t>(sA)] !=
            s.faces[static_cast<size_t>(fB)].label[static_cast<size_t>(sB)])
            throw Error("glue: identified sides carry different labels");

        bool translation = (kind == SurfaceKind::Klein && i == 1);
        auto phi = [&](Mask x) { return translation ? ((full ^ bit_of(1)) | x) : (full ^ x); };
        auto [tA, hA] = dart(fA, sA);
        auto [tB, hB] = dart(fB, sB);
        bool rev;
        if (phi(tA) == tB && phi(hA) == hB) rev = false;
        else if (phi(tA) == hB && phi(hA) == tB) rev = true;
        else throw Error("glue: side identification does not match");
        set_pair({fA, sA}, {fB, sB}, rev);
        prefix |= bit_of(i);
    }
    s.validate();
    return s;
}

namespace {

struct CornerRef {
    int f, c;
};

// corners around the vertex at corner (f0,c0), starting there
std::vector<CornerRef> link_cycle(const SurfaceTiling& s, int f0, int c0) {
    std::vector<CornerRef> out{{f0, c0}};
    int f = f0, c = c0, slot = c0;  // cross the outgoing edge first
    while (true) {
        const SurfacePartner& p = s.glue[static_cast<size_t>(f)][static_cast<size_t>(slot)];
        bool from_tail = (c == slot);
        int c2 = from_tail ? (p.reversed ? (p.slot + 1) % 4 : p.slot)
                           : (p.reversed ? p.slot : (p.slot + 1) % 4);
        int f2 = p.face;
        if (f2 == f0 && c2 == c0) break;
        out.push_back({f2, c2});
        slot = (p.slot == c2) ? (c2 + 3) % 4 : c2;
        f = f2;
        c = c2;
        if (out.size() > 4 * s.faces.size()) throw Error("surface: vertex link does not close");
    }
    return out;
}

// reverses a face's corner order in place, updating every gluing reference
void flip_face(SurfaceTiling& s, int g) {
    auto old_label = s.faces[static_cast<size_t>(g)].label;
    for (int k = 0; k < 4; ++k) s.faces[static_cast<size_t>(g)].label[static_cast<size_t>(k)] = old_label[static_cast<size_t>(3 - k)];
    auto old_glue = s.glue;
    for (int f = 0; f < static_cast<int>(s.faces.size()); ++f)
        for (int sl = 0; sl < 4; ++sl) {
            SurfacePartner p = old_glue[static_cast<size_t>(f)][static_cast<size_t>(sl)];
            int nf = f, nsl = sl;
            if (f == g) nsl = 3 - sl;
            bool toggle = (f == g) ^ (p.face == g);
            if (p.face == g) p.slot = 3 - p.slot;
            p.reversed ^= toggle;
            s.glue[static_cast<size_t>(nf)][static_cast<size_t>(nsl)] = p;
        }
}

std::array<int, 3> hexagon_labels(const SurfaceTiling& s, const std::vector<CornerRef>& rot) {
    std::set<int> ls;
    for (const CornerRef& cr : rot) {
        auto pr = s.face_pair(cr.f);
        ls.insert(pr[0]);
        ls.insert(pr[1]);
    }
    if (ls.size() != 3) throw Error("surface: hexagon labels are not a triangle");
    auto it = ls.begin();
    std::array<int, 3> out;
    out[0] = *it++;
    out[1] = *it++;
    out[2] = *it;
    return out;
}

}  // namespace

std::vector<SurfaceHexagon> find_surface_flips(const SurfaceTiling& s) {
    std::vector<SurfaceHexagon> out;
    for (const auto& orbit : s.vertex_orbits()) {
        if (orbit.size() != 3) continue;
        std::set<int> fs;
        std::set<std::array<int, 2>> prs;
        std::set<int> ls;
        for (int id : orbit) {
            fs.insert(id / 4);
            auto pr = s.face_pair(id / 4);
            prs.insert(pr);
            ls.insert(pr[0]);
            ls.insert(pr[1]);
        }
        if (fs.size() != 3 || prs.size() != 3 || ls.size() != 3) continue;
        SurfaceHexagon h;
        h.face = orbit[0] / 4;
        h.corner = orbit[0] % 4;
        auto it = ls.begin();
        h.labels[0] = *it++;
        h.labels[1] = *it++;
        h.labels[2] = *it;
        out.push_back(h);
    }
    return out;
}

namespace {

// what the surgery did, so mark positions can be carried across it
struct SurgeryTrace {
    std::array<int, 3> wheel_face{}, wheel_corner{};  // surgery order: center at (wheel_face[k], wheel_corner[k])
    std::vector<int> reframed;                        // faces whose corner frame was reversed first
};

SurfaceTiling apply_flip_impl(const SurfaceTiling& s, const SurfaceHexagon& h,
                              SurfaceHexagon* inverse_out, SurgeryTrace* trace) {
    if (h.face < 0 || h.face >= static_cast<int>(s.faces.size()) || h.corner < 0 || h.corner > 3)
        throw Error("surface flip: anchor out of range");
    SurfaceTiling S = s;

    auto rot = link_cycle(S, h.face, h.corner);
    if (rot.size() != 3) throw Error("surface flip: center vertex does not have degree 3");
    if (rot[0].f == rot[1].f || rot[0].f == rot[2].f || rot[1].f == rot[2].f)
        throw Error("surface flip: wheel faces are not distinct");
    if (hexagon_labels(S, rot) != h.labels) throw Error("surface flip: labels do not match the hexagon");

    // orient the wheel consistently: each spoke should run out-slot to in-slot
    // against each other
    auto spoke_ok = [&](int a, int b) {
        const SurfacePartner& p = S.glue[static_cast<size_t>(rot[static_cast<size_t>(a)].f)]
                                        [static_cast<size_t>(rot[static_cast<size_t>(a)].c)];
        return p.face == rot[static_cast<size_t>(b)].f &&
               p.slot == (rot[static_cast<size_t>(b)].c + 3) % 4 && p.reversed;
    };
    if (!spoke_ok(0, 1)) {
        if (trace) trace->reframed.push_back(rot[1].f);
        flip_face(S, rot[1].f);
        rot = link_cycle(S, h.face, h.corner);
        if (!spoke_ok(0, 1)) throw Error("surface flip: failed to orient the wheel");
    }
    if (!spoke_ok(1, 2)) {
        if (trace) trace->reframed.push_back(rot[2].f);
        flip_face(S, rot[2].f);
        rot = link_cycle(S, h.face, h.corner);
        if (!spoke_ok(1, 2)) throw Error("surface flip: failed to orient the wheel");
    }
    if (!spoke_ok(2, 0)) throw Error("surface flip: wheel orientation parity is odd");

    // hexagon boundary order is the rotation reversed: f1, f3, f2
    std::array<int, 3> G{rot[0].f, rot[2].f, rot[1].f};
    std::array<int, 3> C{rot[0].c, rot[2].c, rot[1].c};
    if (trace) {
        trace->wheel_face = G;
        trace->wheel_corner = C;
    }

    struct OuterRef {
        int face, slot;
        SurfacePartner partner;
        int label;
    };
    std::array<OuterRef, 3> outA, outB;  // per k: A = G[k] slot cA+2, B = G[k+1] slot cB+1
    for (int k = 0; k < 3; ++k) {
        int A = G[static_cast<size_t>(k)], B = G[static_cast<size_t>((k + 1) % 3)];
        int sa = (C[static_cast<size_t>(k)] + 2) % 4, sb = (C[static_cast<size_t>((k + 1) % 3)] + 1) % 4;
        outA[static_cast<size_t>(k)] = {A, sa, S.glue[static_cast<size_t>(A)][static_cast<size_t>(sa)],
                                        S.faces[static_cast<size_t>(A)].label[static_cast<size_t>(sa)]};
        outB[static_cast<size_t>(k)] = {B, sb, S.glue[static_cast<size_t>(B)][static_cast<size_t>(sb)],
                                        S.faces[static_cast<size_t>(B)].label[static_cast<size_t>(sb)]};
    }

    // old outer slot -> its slot on the new wheel
    std::map<std::pair<int, int>, std::pair<int, int>> remap;
    for (int k = 0; k < 3; ++k) {
        remap[{outA[static_cast<size_t>(k)].face, outA[static_cast<size_t>(k)].slot}] = {G[static_cast<size_t>(k)], 0};
        remap[{outB[static_cast<size_t>(k)].face, outB[static_cast<size_t>(k)].slot}] = {G[static_cast<size_t>(k)], 1};
    }

    std::array<SurfaceTiling::Face, 3> newface;
    std::array<std::array<SurfacePartner, 4>, 3> newglue;
    for (int k = 0; k < 3; ++k) {
        int la = outA[static_cast<size_t>(k)].label, lb = outB[static_cast<size_t>(k)].label;
        if (la != outB[static_cast<size_t>((k + 1) % 3)].label)
            throw Error("surface flip: hexagon boundary labels do not alternate");
        newface[static_cast<size_t>(k)].label = {la, lb, la, lb};
        auto redirect = [&](const SurfacePartner& p) {
            auto it = remap.find({p.face, p.slot});
            if (it == remap.end()) return p;
            return SurfacePartner{it->second.first, it->second.second, p.reversed};
        };
        newglue[static_cast<size_t>(k)][0] = redirect(outA[static_cast<size_t>(k)].partner);
        newglue[static_cast<size_t>(k)][1] = redirect(outB[static_cast<size_t>(k)].partner);
        newglue[static_cast<size_t>(k)][2] = {G[static_cast<size_t>((k + 1) % 3)], 3, true};
        newglue[static_cast<size_t>(k)][3] = {G[static_cast<size_t>((k + 2) % 3)], 2, true};
    }

    // write the wheel, then point external partners back at it
    for (int k = 0; k < 3; ++k) {
        S.faces[static_cast<size_t>(G[static_cast<size_t>(k)])] = newface[static_cast<size_t>(k)];
        S.glue[static_cast<size_t>(G[static_cast<size_t>(k)])] = newglue[static_cast<size_t>(k)];
    }
    for (int k = 0; k < 3; ++k) {
        const SurfacePartner& p0 = newglue[static_cast<size_t>(k)][0];
        const SurfacePartner& p1 = newglue[static_cast<size_t>(k)][1];
        S.glue[static_cast<size_t>(p0.face)][static_cast<size_t>(p0.slot)] = {G[static_cast<size_t>(k)], 0, p0.reversed};
        S.glue[static_cast<size_t>(p1.face)][static_cast<size_t>(p1.slot)] = {G[static_cast<size_t>(k)], 1, p1.reversed};
    }
    S.validate();

    if (inverse_out) {
        int best = 4 * G[0] + 3;
        for (int k = 1; k < 3; ++k) best = std::min(best, 4 * G[static_cast<size_t>(k)] + 3);
        *inverse_out = SurfaceHexagon{best / 4, best % 4, h.labels};
    }
    return S;
}

}  // namespace

SurfaceTiling apply_surface_flip(const SurfaceTiling& s, const SurfaceHexagon& h,
                                 SurfaceHexagon* inverse_out) {
    return apply_flip_impl(s, h, inverse_out, nullptr);
}

nlohmann::json SurfacePath::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const SurfaceHexagon& h : flips)
        fs.push_back({{"anchor", {h.face, h.corner}}, {"labels", {h.labels[0], h.labels[1], h.labels[2]}}});
    return {{"start", start.to_json()}, {"flips", fs}};
}

SurfacePath SurfacePath::from_json(const nlohmann::json& j) {
    SurfacePath p{SurfaceTiling::from_json(j.at("start")), {}};
    for (const auto& fe : j.at("flips")) {
        SurfaceHexagon h;
        h.face = fe.at("anchor")[0].get<int>();
        h.corner = fe.at("anchor")[1].get<int>();
        for (size_t t = 0; t < 3; ++t) h.labels[t] = fe.at("labels")[t].get<int>();
        p.flips.push_back(h);
    }
    return p;
}

std::vector<SurfaceTiling> replay_surface_path(const SurfacePath& p) {
    std::vector<SurfaceTiling> out{p.start};
    for (const SurfaceHexagon& h : p.flips) out.push_back(apply_surface_flip(out.back(), h));
    return out;
}

Gn3Word phi_S(const SurfacePath& p) {
    replay_surface_path(p);
    Gn3Word w;
    w.n = p.start.n;
    for (const SurfaceHexagon& h : p.flips) w.letters.push_back(Gen{h.labels[0], h.labels[1], h.labels[2]});
    return w;
}

// Closure of a walk is judged on pictures, not bare complexes: the glued
// surface keeps the images of the fundamental polygon's corners as marked
// points, and a tiling must put every one of them back where it started.
// Flips are disc replacements, so a mark inside the flipped hexagon can end
// up in any cell, edge or the new center of the redrawn interior; each such
// position is a separate outcome of the flip.
namespace {

// marked points of the glued tiling, one per set of identified polygon
// corners, ordered by the boundary walk
std::vector<SurfaceMark> corner_marks(const PlanarTiling& t, const SurfaceTiling& s) {
    int n = s.n;
    Mask full = 0;
    for (int i = 1; i <= n; ++i) full |= bit_of(i);
    std::vector<Mask> bnd{0};
    Mask pref = 0;
    for (int i = 1; i < n; ++i) {
        pref |= bit_of(i);
        bnd.push_back(pref);
    }
    bnd.push_back(full);
    pref = 0;
    for (int i = 1; i < n; ++i) {
        pref |= bit_of(i);
        bnd.push_back(full ^ pref);
    }

    auto anchor = [&](Mask cm) -> SurfaceMark {
        const auto& rs = t.rhombi();
        for (int f = 0; f < static_cast<int>(rs.size()); ++f) {
            const Rhombus& r = rs[static_cast<size_t>(f)];
            std::array<Mask, 4> qm{r.base, r.base | bit_of(r.i), r.base | bit_of(r.i) | bit_of(r.j),
                                   r.base | bit_of(r.j)};
            for (int c = 0; c < 4; ++c)
                if (qm[static_cast<size_t>(c)] == cm) return SurfaceMark{0, f, c};
        }
        throw Error("surface: boundary corner not on any cell");
    };

    std::vector<int> oid = s.corner_orbit_ids();
    std::vector<SurfaceMark> marks;
    std::set<int> seen;
    for (Mask cm : bnd) {
        SurfaceMark mk = anchor(cm);
        if (seen.insert(oid[static_cast<size_t>(4 * mk.face + mk.slot)]).second) marks.push_back(mk);
    }
    return marks;
}

// Marks carried across one surgery. Marks that sat in the retiled interior
// (the removed center vertex, a removed spoke, or a wheel cell) come back in
// `pending`; every placement from wheel_placements is a valid outcome for
// them.
struct MarkUpdate {
    std::vector<SurfaceMark> marks;
    std::vector<size_t> pending;
};

MarkUpdate update_marks(std::vector<SurfaceMark> marks, const SurgeryTrace& tr) {
    for (int g : tr.reframed)
        for (SurfaceMark& m : marks)
            if (m.face == g) {
                if (m.type == 0) m.slot = (4 - m.slot) % 4;
                else if (m.type == 1) m.slot = 3 - m.slot;
            }
    MarkUpdate out;
    for (SurfaceMark m : marks) {
        int k = -1;
        for (int q = 0; q < 3; ++q)
            if (tr.wheel_face[static_cast<size_t>(q)] == m.face) k = q;
        if (k >= 0) {
            int r = (m.slot - tr.wheel_corner[static_cast<size_t>(k)] + 8) % 4;
            if (m.type == 2) {
                out.pending.push_back(out.marks.size());
            } else if (m.type == 0) {
                if (r == 0) out.pending.push_back(out.marks.size());  // the removed center
                else if (r == 1) m = SurfaceMark{0, tr.wheel_face[static_cast<size_t>((k + 2) % 3)], 1};
                else if (r == 2) m = SurfaceMark{0, tr.wheel_face[static_cast<size_t>(k)], 0};
                else m = SurfaceMark{0, tr.wheel_face[static_cast<size_t>(k)], 1};
            } else {
                if (r == 0 || r == 3) out.pending.push_back(out.marks.size());  // a removed spoke
                else if (r == 1) m = SurfaceMark{1, tr.wheel_face[static_cast<size_t>((k + 2) % 3)], 1};
                else m = SurfaceMark{1, tr.wheel_face[static_cast<size_t>(k)], 0};
            }
        }
        out.marks.push_back(m);
    }
    return out;
}

// positions the redrawn hexagon interior offers: three cells, three spokes,
// the new center vertex
std::array<SurfaceMark, 7> wheel_placements(const SurgeryTrace& tr) {
    std::array<SurfaceMark, 7> out;
    for (int k = 0; k < 3; ++k) {
        out[static_cast<size_t>(k)] = SurfaceMark{2, tr.wheel_face[static_cast<size_t>(k)], 0};
        out[static_cast<size_t>(3 + k)] = SurfaceMark{1, tr.wheel_face[static_cast<size_t>(k)], 2};
    }
    out[6] = SurfaceMark{0, tr.wheel_face[0], 3};
    return out;
}

}  // namespace

std::optional<SurfaceSearchOutcome> search_nontrivial_closed_path(int n, SurfaceKind kind,
                                                                  int max_len) {
    if (max_len < 0) throw Error("surface search: max_len must be nonnegative");
    FlipGraph g = enumerate_tilings(n);
    BoundaryLabeling e = BoundaryLabeling::identity(n);

    struct State {
        SurfaceTiling s;
        std::vector<SurfaceMark> marks;
    };

    std::vector<State> starts;
    std::vector<std::string> home;
    for (const PlanarTiling& t : g.vertices) {
        SurfaceTiling s = glue(t, e, kind);
        std::vector<SurfaceMark> mk = corner_marks(t, s);
        home.push_back(s.canonical_key(mk));
        starts.push_back(State{std::move(s), std::move(mk)});
    }

    std::size_t expanded = 0;
    std::optional<SurfaceSearchOutcome> found;
    std::vector<SurfaceHexagon> trail;

    auto try_close = [&](const State& st, const std::string& key0, size_t v0) {
        for (const SurfaceMark& m : st.marks)
            if (m.type != 0) return;  // home has every mark at a vertex
        if (st.s.canonical_key(st.marks) != key0) return;
        Gn3Word w;
        w.n = n;
        for (const SurfaceHexagon& h : trail) w.letters.push_back(Gen{h.labels[0], h.labels[1], h.labels[2]});
        if (found && !(w.letters < found->word.letters)) return;
        auto cert = certify_nontrivial(w);
        if (!cert) return;
        SurfaceSearchOutcome oc;
        oc.path = SurfacePath{starts[v0].s, trail};
        oc.word = std::move(w);
        oc.certificate = std::move(*cert);
        found = std::move(oc);
    };

    auto dfs = [&](auto&& self, const State& cur, const std::string& key0, int remaining, size_t v0,
                   const SurfaceHexagon* last) -> void {
        ++expanded;
        for (const SurfaceHexagon& h : find_surface_flips(cur.s)) {
            if (last && h.face == last->face && h.corner == last->corner) continue;  // undo move
            trail.push_back(h);
            bool leaf = remaining == 1;
            bool viable = true;
            if (leaf) {  // the word is fixed now; skip the surgery when it cannot certify
                Gn3Word w;
                w.n = n;
                for (const SurfaceHexagon& t2 : trail)
                    w.letters.push_back(Gen{t2.labels[0], t2.labels[1], t2.labels[2]});
                viable = certify_nontrivial(w).has_value();
            }
            if (viable) {
                SurfaceHexagon inv;
                SurgeryTrace tr;
                State nxt;
                nxt.s = apply_flip_impl(cur.s, h, &inv, &tr);
                MarkUpdate mu = update_marks(cur.marks, tr);
                auto opts = wheel_placements(tr);
                std::vector<size_t> pick(mu.pending.size(), 0);
                while (true) {
                    int at_center = 0;  // two marks are distinct points, never both the new vertex
                    for (size_t p : pick)
                        if (opts[p].type == 0) ++at_center;
                    if (at_center <= 1) {
                        nxt.marks = mu.marks;
                        for (size_t a = 0; a < pick.size(); ++a)
                            nxt.marks[mu.pending[a]] = opts[pick[a]];
                        if (leaf) try_close(nxt, key0, v0);
                        else self(self, nxt, key0, remaining - 1, v0, &inv);
                    }
                    size_t a = 0;
                    while (a < pick.size() && ++pick[a] == opts.size()) {
                        pick[a] = 0;
                        ++a;
                    }
                    if (a == pick.size()) break;
                }
            }
            trail.pop_back();
        }
    };

    // all walks of the smallest closing length; returns the least word of them
    for (int L = 1; L <= max_len && !found; ++L) {
        for (size_t v0 = 0; v0 < starts.size(); ++v0) {
            trail.clear();
            dfs(dfs, starts[v0], home[v0], L, v0, nullptr);
        }
        if (found) found->states_explored = expanded;
    }
    return found;
}

}  // namespace rhombiflip

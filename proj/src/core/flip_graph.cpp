#include "flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <thread>

#include "rng.hpp"

namespace rhombiflip {

int FlipGraph::index_of(const PlanarTiling& t) const {
    auto it = index.find(t.key());
    return it == index.end() ? -1 : it->second;
}

nlohmann::json FlipGraph::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& t : vertices) vs.push_back(t.to_json());
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : edges)
        es.push_back({{"a", e.a}, {"b", e.b}, {"flip", flip_to_json(e.flip, n)}});
    return {{"n", n}, {"complete", complete}, {"vertices", vs}, {"edges", es}};
}

FlipGraph FlipGraph::from_json(const nlohmann::json& j) {
    FlipGraph g;
    g.n = j.at("n").get<int>();
    g.complete = j.at("complete").get<bool>();
    for (const auto& v : j.at("vertices")) {
        PlanarTiling t = PlanarTiling::from_json(v);
        if (t.n() != g.n) throw Error("graph: vertex with mismatched n");
        g.index.emplace(t.key(), static_cast<int>(g.vertices.size()));
        g.vertices.push_back(std::move(t));
    }
    g.adj.resize(g.vertices.size());
    for (const auto& e : j.at("edges")) {
        FlipGraph::Edge edge{e.at("a").get<int>(), e.at("b").get<int>(), flip_from_json(e.at("flip"))};
        int m = static_cast<int>(g.vertices.size());
        if (edge.a < 0 || edge.a >= m || edge.b < 0 || edge.b >= m) throw Error("graph: edge index out of range");
        if (!flip_available(g.vertices[static_cast<size_t>(edge.a)], edge.flip))
            throw Error("graph: edge flip not applicable at its source");
        g.adj[static_cast<size_t>(edge.a)].emplace_back(edge.b, edge.flip);
        g.adj[static_cast<size_t>(edge.b)].emplace_back(edge.a, edge.flip.inverse());
        g.edges.push_back(std::move(edge));
    }
    return g;
}

FlipGraph enumerate_tilings(int n, std::size_t vertex_limit, int jobs) {
    if (jobs < 1) throw Error("enumerate: jobs must be >= 1");
    FlipGraph g;
    g.n = n;
    PlanarTiling t0 = base_tiling(n);
    g.index.emplace(t0.key(), 0);
    g.vertices.push_back(std::move(t0));
    g.adj.emplace_back();

    std::set<std::pair<int, int>> seen_edges;
    std::vector<int> frontier{0};

    auto expand = [&](int u) {
        std::vector<std::pair<CubeFlip, PlanarTiling>> out;
        for (const CubeFlip& f : find_flips(g.vertices[static_cast<size_t>(u)]))
            out.emplace_back(f, apply_flip(g.vertices[static_cast<size_t>(u)], f));
        return out;
    };

    while (!frontier.empty() && g.complete) {
        std::vector<std::vector<std::pair<CubeFlip, PlanarTiling>>> results(frontier.size());
        if (jobs == 1 || frontier.size() == 1) {
            for (size_t i = 0; i < frontier.size(); ++i) results[i] = expand(frontier[i]);
        } else {
            std::vector<std::thread> workers;
            std::size_t chunk = (frontier.size() + static_cast<size_t>(jobs) - 1) / static_cast<size_t>(jobs);
            for (int w = 0; w < jobs; ++w) {
                std::size_t lo = static_cast<size_t>(w) * chunk;
                std::size_t hi = std::min(frontier.size(), lo + chunk);
                if (lo >= hi) break;
                workers.emplace_back([&, lo, hi] {
                    for (size_t i = lo; i < hi; ++i) results[i] = expand(frontier[i]);
                });
            }
            for (auto& w : workers) w.join();
        }

        std::vector<int> next;
        for (size_t i = 0; i < frontier.size() && g.complete; ++i) {
            int u = frontier[i];
            for (auto& [f, child] : results[i]) {
                std::string key = child.key();
                auto it = g.index.find(key);
                int v;
                if (it == g.index.end()) {
                    if (g.vertices.size() >= vertex_limit) {
                        g.complete = false;
                        break;
                    }
                    v = static_cast<int>(g.vertices.size());
                    g.index.emplace(key, v);
                    g.vertices.push_back(child);
                    g.adj.emplace_back();
                    next.push_back(v);
                } else {
                    v = it->second;
                }
                auto ek = std::minmax(u, v);
                if (seen_edges.emplace(ek.first, ek.second).second) {
                    g.edges.push_back({u, v, f});
                    g.adj[static_cast<size_t>(u)].emplace_back(v, f);
                    g.adj[static_cast<size_t>(v)].emplace_back(u, f.inverse());
                }
            }
        }
        frontier = std::move(next);
    }
    return g;
}

bool is_connected(const FlipGraph& g) {
    if (!g.complete) throw Error("is_connected: graph is partial");
    std::vector<char> seen(g.vertices.size(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    size_t cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto& [v, f] : g.adj[static_cast<size_t>(u)])
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++cnt;
                q.push_back(v);
            }
    }
    return cnt == g.vertices.size();
}

nlohmann::json FlipPath::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const CubeFlip& f : flips) fs.push_back(flip_to_json(f, start.n()));
    return {{"start", start.to_json()}, {"flips", fs}};
}

FlipPath FlipPath::from_json(const nlohmann::json& j) {
    FlipPath p{PlanarTiling::from_json(j.at("start")), {}};
    for (const auto& f : j.at("flips")) p.flips.push_back(flip_from_json(f));
    return p;
}

std::vector<PlanarTiling> replay_path(const FlipPath& p) {
    std::vector<PlanarTiling> out{p.start};
    for (const CubeFlip& f : p.flips) out.push_back(apply_flip(out.back(), f));
    return out;
}

bool path_is_closed(const FlipPath& p) {
    auto ts = replay_path(p);
    return ts.front() == ts.back();
}

FlipPath find_path(const FlipGraph& g, const PlanarTiling& from, const PlanarTiling& to) {
    int s = g.index_of(from), d = g.index_of(to);
    if (s < 0 || d < 0) throw Error("find_path: tiling is not a graph vertex");
    std::vector<int> parent(g.vertices.size(), -1);
    std::vector<int> via(g.vertices.size(), -1);  // adj slot used to reach vertex
    std::deque<int> q{s};
    parent[static_cast<size_t>(s)] = s;
    while (!q.empty() && parent[static_cast<size_t>(d)] < 0) {
        int u = q.front();
        q.pop_front();
        const auto& nb = g.adj[static_cast<size_t>(u)];
        for (size_t i = 0; i < nb.size(); ++i) {
            int v = nb[i].first;
            if (parent[static_cast<size_t>(v)] < 0) {
                parent[static_cast<size_t>(v)] = u;
                via[static_cast<size_t>(v)] = static_cast<int>(i);
                q.push_back(v);
            }
        }
    }
    if (parent[static_cast<size_t>(d)] < 0) throw Error("find_path: no path");
    std::vector<CubeFlip> flips;
    for (int v = d; v != s; v = parent[static_cast<size_t>(v)])
        flips.push_back(g.adj[static_cast<size_t>(parent[static_cast<size_t>(v)])][static_cast<size_t>(via[static_cast<size_t>(v)])].second);
    std::reverse(flips.begin(), flips.end());
    return FlipPath{from, std::move(flips)};
}

FlipPath sample_closed_path(const FlipGraph& g, const PlanarTiling& t0, int length,
                            std::uint64_t seed, int retries) {
    if (length < 0) throw Error("sample_closed_path: negative length");
    int s = g.index_of(t0);
    if (s < 0) throw Error("sample_closed_path: tiling is not a graph vertex");
    Rng rng(seed);
    for (int attempt = 0; attempt < retries; ++attempt) {
        int v = s;
        std::vector<CubeFlip> flips;
        for (int step = 0; step < length; ++step) {
            const auto& nb = g.adj[static_cast<size_t>(v)];
            if (nb.empty()) break;
            const auto& [w, f] = nb[rng.below(nb.size())];
            flips.push_back(f);
            v = w;
        }
        if (v == s && static_cast<int>(flips.size()) == length)
            return FlipPath{t0, std::move(flips)};
    }
    throw Error("sample_closed_path: no closed walk found within retry budget");
}

namespace {

std::array<Rhombus, 3> faces_replaced(const CubeFlip& f) {
    return f.dir == FlipDir::Down ? cube_top_faces(f.base, f.axes[0], f.axes[1], f.axes[2])
                                  : cube_bottom_faces(f.base, f.axes[0], f.axes[1], f.axes[2]);
}

int shared_axes(const CubeFlip& a, const CubeFlip& b) {
    int c = 0;
    for (int x : a.axes)
        for (int y : b.axes)
            if (x == y) ++c;
    return c;
}

bool faces_disjoint(const CubeFlip& a, const CubeFlip& b) {
    auto fa = faces_replaced(a), fb = faces_replaced(b);
    for (const Rhombus& ra : fa)
        for (const Rhombus& rb : fb)
            if (ra == rb) return false;
    return true;
}

std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
    std::vector<int> best;
    size_t m = cyc.size();
    for (int refl = 0; refl < 2; ++refl) {
        std::vector<int> c = cyc;
        if (refl) std::reverse(c.begin(), c.end());
        for (size_t r = 0; r < m; ++r) {
            std::vector<int> rot(m);
            for (size_t i = 0; i < m; ++i) rot[i] = c[(i + r) % m];
            if (best.empty() || rot < best) best = rot;
        }
    }
    return best;
}

// Replays one side of an octagon inside the 4-cube at (I, axes4); flips must
// stay inside the support.
bool walk_octagon_side(const FlipGraph& g, int u, Mask I, const std::array<int, 4>& a4,
                       const std::vector<std::array<int, 3>>& seq,
                       std::vector<int>* ids, std::vector<CubeFlip>* flips) {
    PlanarTiling cur = g.vertices[static_cast<size_t>(u)];
    for (const auto& ax : seq) {
        int missing = a4[0] + a4[1] + a4[2] + a4[3] - ax[0] - ax[1] - ax[2];
        CubeFlip f;
        if (!flip_for_axes(cur, ax[0], ax[1], ax[2], &f)) return false;
        if (f.base != I && f.base != (I | bit_of(missing))) return false;
        cur = apply_flip(cur, f);
        int id = g.index_of(cur);
        if (id < 0) return false;
        flips->push_back(f);
        ids->push_back(id);
    }
    return true;
}

}  // namespace

std::vector<TwoCell> two_cells_at(const FlipGraph& g, const PlanarTiling& t) {
    int tid = g.index_of(t);
    if (tid < 0) throw Error("two_cells_at: tiling is not a graph vertex");
    std::vector<TwoCell> out;

    // squares: unordered pairs of far-commuting flips at t
    auto flips = find_flips(t);
    for (size_t a = 0; a < flips.size(); ++a)
        for (size_t b = a + 1; b < flips.size(); ++b) {
            if (shared_axes(flips[a], flips[b]) > 1) continue;
            const CubeFlip &fa = flips[a], &fb = flips[b];
            PlanarTiling ta = apply_flip(t, fa);
            PlanarTiling tb = apply_flip(t, fb);
            if (!flip_available(ta, fb) || !flip_available(tb, fa)) continue;
            PlanarTiling tab = apply_flip(ta, fb);
            if (!(tab == apply_flip(tb, fa))) continue;
            TwoCell cell;
            cell.kind = TwoCell::Kind::Square;
            cell.rhombus_disjoint = faces_disjoint(fa, fb);
            cell.vertices = {tid, g.index_of(ta), g.index_of(tab), g.index_of(tb)};
            if (cell.vertices[1] < 0 || cell.vertices[2] < 0 || cell.vertices[3] < 0) continue;
            cell.flips = {fa, fb, fa.inverse(), fb.inverse()};
            out.push_back(std::move(cell));
        }

    // octagons: replay both sides of each 4-cube support anywhere in the
    // graph, keep the cells through t
    std::set<std::vector<int>> seen;
    int n = g.n;
    for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    for (int m = l + 1; m <= n; ++m) {
                        std::array<int, 4> a4{j, k, l, m};
                        Mask span = bit_of(j) | bit_of(k) | bit_of(l) | bit_of(m);
                        for (Mask I = 0; I < (Mask(1) << n); ++I) {
                            if (I & span) continue;
                            std::vector<std::array<int, 3>> s1{{j, k, l}, {j, k, m}, {j, l, m}, {k, l, m}};
                            std::vector<std::array<int, 3>> s2(s1.rbegin(), s1.rend());
                            std::vector<int> ids1{u}, ids2{u};
                            std::vector<CubeFlip> fl1, fl2;
                            if (!walk_octagon_side(g, u, I, a4, s1, &ids1, &fl1)) continue;
                            if (!walk_octagon_side(g, u, I, a4, s2, &ids2, &fl2)) continue;
                            if (ids1.back() != ids2.back()) continue;
                            std::vector<int> cyc{ids1[0], ids1[1], ids1[2], ids1[3], ids1[4],
                                                 ids2[3], ids2[2], ids2[1]};
                            if (std::find(cyc.begin(), cyc.end(), tid) == cyc.end()) continue;
                            if (!seen.insert(canonical_cycle(cyc)).second) continue;
                            TwoCell cell;
                            cell.kind = TwoCell::Kind::Octagon;
                            cell.vertices = cyc;
                            cell.flips = {fl1[0], fl1[1], fl1[2], fl1[3],
                                          fl2[3].inverse(), fl2[2].inverse(), fl2[1].inverse(), fl2[0].inverse()};
                            out.push_back(std::move(cell));
                        }
                    }
    }
    return out;
}

}  // namespace rhombiflip

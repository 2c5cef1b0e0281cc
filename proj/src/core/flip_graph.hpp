#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "tiling.hpp"

namespace rhombiflip {

struct FlipGraph {
    int n = 0;
    bool complete = true;
    std::vector<PlanarTiling> vertices;
    struct Edge {
        int a, b;       // flip is applicable at a and lands at b
        CubeFlip flip;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<int, CubeFlip>>> adj;  // both directions
    std::unordered_map<std::string, int> index;              // tiling key -> vertex id

    int index_of(const PlanarTiling& t) const;  // -1 if absent

    nlohmann::json to_json() const;
    static FlipGraph from_json(const nlohmann::json& j);
};

// BFS closure of base_tiling(n) under flips. vertex_limit caps the vertex
// count; when exceeded the result has complete == false and holds the partial
// graph. jobs > 1 expands each BFS frontier with worker threads; results are
// merged in frontier order, so vertex numbering does not depend on jobs.
FlipGraph enumerate_tilings(int n,
                            std::size_t vertex_limit = std::numeric_limits<std::size_t>::max(),
                            int jobs = 1);

// Throws Error when called on a partial graph.
bool is_connected(const FlipGraph& g);

struct FlipPath {
    PlanarTiling start;
    std::vector<CubeFlip> flips;

    nlohmann::json to_json() const;
    static FlipPath from_json(const nlohmann::json& j);
};

// All tilings visited by the path (flips.size() + 1 of them); throws if some
// flip is not applicable where the path needs it.
std::vector<PlanarTiling> replay_path(const FlipPath& p);

bool path_is_closed(const FlipPath& p);

// Shortest flip sequence from `from` to `to`; both must be graph vertices.
FlipPath find_path(const FlipGraph& g, const PlanarTiling& from, const PlanarTiling& to);

// Seeded random closed walk of the given length from t0; rejection-sampled,
// throws if no attempt closes up within the retry budget.
FlipPath sample_closed_path(const FlipGraph& g, const PlanarTiling& t0, int length,
                            std::uint64_t seed, int retries = 100000);

struct TwoCell {
    enum class Kind { Square, Octagon } kind;
    bool rhombus_disjoint = false;     // squares: the two flips touch disjoint rhombi
    std::vector<int> vertices;         // cyclic, 4 or 8 entries
    std::vector<CubeFlip> flips;       // flips[i] leads vertices[i] -> vertices[i+1]
};

// 2-cells of the flip complex incident to t: squares from pairs of
// far-commuting flips at t and octagons from 3-cube quadruples inside a
// common 4-cube support.
std::vector<TwoCell> two_cells_at(const FlipGraph& g, const PlanarTiling& t);

}  // namespace rhombiflip

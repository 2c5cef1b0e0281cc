#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace rhombiflip {

// Generator a_{ijk} of G_n^3, subscripts ascending. Every generator is an
// involution.
using Gen = std::array<int, 3>;

struct Gn3Word {
    int n = 0;
    std::vector<Gen> letters;

    bool operator==(const Gn3Word& o) const { return n == o.n && letters == o.letters; }

    void validate() const;  // throws Error

    // dot-separated digit triples, e.g. "124.123"; empty string is the empty
    // word; needs n <= 9
    std::string text() const;
    static Gn3Word parse(int n, const std::string& text);
};

Gn3Word concat(const Gn3Word& a, const Gn3Word& b);
Gn3Word reversed(const Gn3Word& w);

// Cancels adjacent equal letters until none remain.
Gn3Word free_reduce(const Gn3Word& w);

// Letters sharing at most one subscript commute.
bool far_commutes(const Gen& a, const Gen& b);

// The two sides of the relation attached to a 4-set {i<j<k<l}:
// a_ijk a_ijl a_ikl a_jkl  =  a_jkl a_ikl a_ijl a_ijk.
std::pair<std::vector<Gen>, std::vector<Gen>> octagon_block(const std::array<int, 4>& quad);

struct RewriteMove {
    enum class Kind { CancelPair, InsertPair, FarCommute, Octagon } kind;
    std::size_t pos = 0;
    Gen gen{};  // InsertPair only

    nlohmann::json to_json() const;
};

// Applies a move to a word; throws Error when the move does not apply there.
std::vector<Gen> apply_move(const std::vector<Gen>& w, const RewriteMove& m);

struct BoundedEqualResult {
    bool equal = false;                // false means unknown, not inequality
    std::vector<RewriteMove> witness;  // rewrites w1 . reverse(w2) to empty
    std::size_t states_explored = 0;
};

// Budgeted search for equality in G_n^3: explores words reachable from
// free_reduce(w1 . reverse(w2)) by the four move kinds, shortest words first,
// up to max_states states and length len(start) + extra_len. A positive
// answer carries a verifiable move witness; exhausting the budget yields
// unknown.
BoundedEqualResult bounded_equal(const Gn3Word& w1, const Gn3Word& w2,
                                 std::size_t max_states = 200000, int extra_len = 4);

// Sum over subscript triples of the reduced invariant length; a lower bound
// for the length of any word representing the same element.
std::size_t mn_length_lower_bound(const Gn3Word& w);

}  // namespace rhombiflip

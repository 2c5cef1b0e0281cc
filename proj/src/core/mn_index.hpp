#pragma once

#include <optional>

#include "words.hpp"

namespace rhombiflip {

// One letter of the invariant word attached to a subscript triple: the pair
// (x, y) in Z2 x Z2 for every l outside the triple, in increasing order of l.
struct IndexLetter {
    std::vector<std::pair<int, int>> values;

    bool operator==(const IndexLetter& o) const { return values == o.values; }
    bool operator!=(const IndexLetter& o) const { return !(*this == o); }
};

struct FWord {
    int n = 0;
    Gen triple{};
    std::vector<IndexLetter> letters;  // reduced: no adjacent equal letters

    bool trivial() const { return letters.empty(); }
    std::string text() const;  // e.g. "(1,1)_4 (0,0)_4"; empty word -> "1"
};

// Index pair of the occurrence at position pos (letter must contain neither
// more nor less than the triple it names) against outside direction l:
//   x = N_{jkl} + N_{ijl},  y = N_{ikl} + N_{ijl}   (mod 2)
// with counts over the strict prefix before pos.
std::pair<int, int> occurrence_index(const Gn3Word& w, std::size_t pos, int l);

// The invariant word of w at a triple: one IndexLetter per occurrence of
// a_triple, then adjacent equal letters cancelled.
FWord mn_invariant(const Gn3Word& w, const Gen& triple);

struct Certificate {
    Gen triple{};
    FWord fword;
};

// Scans triples in lexicographic order; the first nontrivial invariant word
// proves w != 1 in G_n^3.
std::optional<Certificate> certify_nontrivial(const Gn3Word& w);

}  // namespace rhombiflip

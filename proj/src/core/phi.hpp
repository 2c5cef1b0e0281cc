#pragma once

#include "flip_graph.hpp"
#include "mn_index.hpp"
#include "words.hpp"

namespace rhombiflip {

// The word in G_n^3 read off a flip path: one letter per flip, the letter
// being the flip's axes triple. Replays the path; throws if it breaks.
Gn3Word phi(const FlipPath& p);

// An element of G_n^3 together with a flip path realising it.
struct RealisableElement {
    Gn3Word word;
    FlipPath path;
};

struct ClosedPathReport {
    std::optional<Certificate> certificate;  // nontrivial invariant, if any
    BoundedEqualResult reduction;            // search towards the empty word
};

// Checks that the image of a closed path is trivial: no triple certifies it
// nontrivial, and ideally the bounded search reduces it to the empty word.
// Throws if the path is not closed.
ClosedPathReport check_closed_path_trivial(const FlipPath& p, std::size_t max_states = 200000);

// True when the two paths map to provably equal words under the default
// budgets; meant for paths differing by one square or octagon cell.
bool homotopy_step_equal(const FlipPath& a, const FlipPath& b, std::size_t max_states = 200000);

}  // namespace rhombiflip

#include "phi.hpp"

namespace rhombiflip {

Gn3Word phi(const FlipPath& p) {
    replay_path(p);
    Gn3Word w;
    w.n = p.start.n();
    for (const CubeFlip& f : p.flips) w.letters.push_back(Gen{f.axes[0], f.axes[1], f.axes[2]});
    return w;
}

ClosedPathReport check_closed_path_trivial(const FlipPath& p, std::size_t max_states) {
    if (!path_is_closed(p)) throw Error("check_closed_path_trivial: path is not closed");
    Gn3Word w = phi(p);
    ClosedPathReport rep;
    rep.certificate = certify_nontrivial(w);
    Gn3Word empty;
    empty.n = w.n;
    rep.reduction = bounded_equal(w, empty, max_states);
    return rep;
}

bool homotopy_step_equal(const FlipPath& a, const FlipPath& b, std::size_t max_states) {
    return bounded_equal(phi(a), phi(b), max_states).equal;
}

}  // namespace rhombiflip

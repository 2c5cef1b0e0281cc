#include <doctest.h>

#include <set>

#include "core/mn_index.hpp"
#include "core/rng.hpp"

using namespace rhombiflip;

namespace {

Gn3Word random_word(int n, int len, Rng& rng) {
    Gn3Word w;
    w.n = n;
    for (int s = 0; s < len; ++s) {
        std::set<int> pick;
        while (pick.size() < 3) pick.insert(1 + static_cast<int>(rng.below(static_cast<uint64_t>(n))));
        Gen g{};
        std::copy(pick.begin(), pick.end(), g.begin());
        w.letters.push_back(g);
    }
    return w;
}

std::vector<Gen> all_triples(int n) {
    std::vector<Gen> ts;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) ts.push_back(Gen{i, j, k});
    return ts;
}

}  // namespace

TEST_SUITE("mn") {

TEST_CASE("the four letter fixture") {
    Gn3Word beta = Gn3Word::parse(4, "124.123.124.123");
    FWord f = mn_invariant(beta, Gen{1, 2, 3});
    CHECK(f.text() == "(1,1)_4 (0,0)_4");
    CHECK(!f.trivial());

    auto cert = certify_nontrivial(beta);
    REQUIRE(cert.has_value());
    CHECK(cert->triple == Gen{1, 2, 3});
    CHECK(cert->fword.text() == "(1,1)_4 (0,0)_4");
}

TEST_CASE("index pairs count prefix interlacements") {
    Gn3Word beta = Gn3Word::parse(4, "124.123.124.123");
    // occurrences of 123 sit at positions 1 and 3; their prefixes hold one
    // and two letters sharing two subscripts with (1,2,3)
    CHECK(occurrence_index(beta, 1, 4) == std::pair<int, int>{1, 1});
    CHECK(occurrence_index(beta, 3, 4) == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(occurrence_index(beta, 0, 4), Error);  // l inside the triple
}

TEST_CASE("empty and trivial words") {
    Gn3Word empty;
    empty.n = 4;
    CHECK(mn_invariant(empty, Gen{1, 2, 3}).trivial());
    CHECK(mn_invariant(empty, Gen{1, 2, 3}).text() == "1");
    CHECK(!certify_nontrivial(empty).has_value());

    // an adjacent involution pair cancels inside the invariant as well
    Gn3Word square = Gn3Word::parse(4, "123.123");
    for (const Gen& t : all_triples(4)) CHECK(mn_invariant(square, t).trivial());
    CHECK(!certify_nontrivial(square).has_value());
}

TEST_CASE("single letters are certified") {
    Gn3Word w = Gn3Word::parse(4, "134");
    auto cert = certify_nontrivial(w);
    REQUIRE(cert.has_value());
    CHECK(cert->triple == Gen{1, 3, 4});
    CHECK(cert->fword.text() == "(0,0)_2");

    // with n = 3 there is no outside direction; the letter still counts
    Gn3Word small = Gn3Word::parse(3, "123");
    auto c3 = certify_nontrivial(small);
    REQUIRE(c3.has_value());
    CHECK(c3->fword.text() == "()");
    CHECK(!c3->fword.trivial());
}

TEST_CASE("invariants ignore every defining relation") {
    Rng rng(41);
    auto check_same = [](const Gn3Word& a, const Gn3Word& b) {
        for (const Gen& t : all_triples(a.n)) {
            FWord fa = mn_invariant(a, t);
            FWord fb = mn_invariant(b, t);
            CHECK(fa.letters == fb.letters);
        }
    };
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        Gn3Word w = random_word(n, static_cast<int>(rng.below(8)), rng);

        // involution pair insertion
        Gn3Word ins = w;
        Gn3Word pair = random_word(n, 1, rng);
        size_t at = static_cast<size_t>(rng.below(w.letters.size() + 1));
        ins.letters.insert(ins.letters.begin() + static_cast<std::ptrdiff_t>(at),
                           {pair.letters[0], pair.letters[0]});
        check_same(w, ins);

        // far commutation where available
        std::vector<size_t> spots;
        for (size_t p = 0; p + 1 < w.letters.size(); ++p)
            if (far_commutes(w.letters[p], w.letters[p + 1])) spots.push_back(p);
        if (!spots.empty()) {
            Gn3Word sw = w;
            size_t p = spots[static_cast<size_t>(rng.below(spots.size()))];
            std::swap(sw.letters[p], sw.letters[p + 1]);
            check_same(w, sw);
        }

        // octagon block replacement on a planted quadruple
        std::set<int> qs;
        while (qs.size() < 4) qs.insert(1 + static_cast<int>(rng.below(static_cast<uint64_t>(n))));
        std::array<int, 4> quad{};
        std::copy(qs.begin(), qs.end(), quad.begin());
        auto [lhs, rhs] = octagon_block(quad);
        Gn3Word planted = w, replaced = w;
        size_t cut = static_cast<size_t>(rng.below(w.letters.size() + 1));
        planted.letters.insert(planted.letters.begin() + static_cast<std::ptrdiff_t>(cut),
                               lhs.begin(), lhs.end());
        replaced.letters.insert(replaced.letters.begin() + static_cast<std::ptrdiff_t>(cut),
                                rhs.begin(), rhs.end());
        check_same(planted, replaced);
    }
}

TEST_CASE("certification scans past trivial triples") {
    // no occurrence of 123 at all, so the scan must move on to (1,2,4)
    Gn3Word w = Gn3Word::parse(4, "124");
    CHECK(mn_invariant(w, Gen{1, 2, 3}).trivial());
    auto cert = certify_nontrivial(w);
    REQUIRE(cert.has_value());
    CHECK(cert->triple == Gen{1, 2, 4});

    // interlaced occurrences with distinct indices survive reduction
    Gn3Word mixed = Gn3Word::parse(4, "123.124.123");
    FWord f = mn_invariant(mixed, Gen{1, 2, 3});
    REQUIRE(f.letters.size() == 2);
    CHECK(f.letters[0] != f.letters[1]);
}

}  // TEST_SUITE

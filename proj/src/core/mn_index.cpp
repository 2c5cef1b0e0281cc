#include "mn_index.hpp"

#include <algorithm>
#include <set>

namespace rhombiflip {

std::string FWord::text() const {
    if (letters.empty()) return "1";
    std::vector<int> outside;
    for (int l = 1; l <= n; ++l)
        if (l != triple[0] && l != triple[1] && l != triple[2]) outside.push_back(l);
    std::string s;
    for (size_t t = 0; t < letters.size(); ++t) {
        if (t) s.push_back(' ');
        if (outside.empty()) s += "()";
        for (size_t q = 0; q < outside.size(); ++q) {
            auto [x, y] = letters[t].values[q];
            s += "(" + std::to_string(x) + "," + std::to_string(y) + ")_" + std::to_string(outside[q]);
        }
    }
    return s;
}

std::pair<int, int> occurrence_index(const Gn3Word& w, std::size_t pos, int l) {
    if (pos >= w.letters.size()) throw Error("occurrence_index: position out of range");
    const Gen& g = w.letters[pos];
    int i = g[0], j = g[1], k = g[2];
    if (l == i || l == j || l == k || l < 1 || l > w.n)
        throw Error("occurrence_index: l must lie outside the triple");
    auto sorted3 = [](int a, int b, int c) {
        Gen t{a, b, c};
        std::sort(t.begin(), t.end());
        return t;
    };
    Gen tjkl = sorted3(j, k, l), tijl = sorted3(i, j, l), tikl = sorted3(i, k, l);
    int njkl = 0, nijl = 0, nikl = 0;
    for (size_t p = 0; p < pos; ++p) {
        if (w.letters[p] == tjkl) ++njkl;
        if (w.letters[p] == tijl) ++nijl;
        if (w.letters[p] == tikl) ++nikl;
    }
    return {(njkl + nijl) % 2, (nikl + nijl) % 2};
}

FWord mn_invariant(const Gn3Word& w, const Gen& triple) {
    w.validate();
    if (!(1 <= triple[0] && triple[0] < triple[1] && triple[1] < triple[2] && triple[2] <= w.n))
        throw Error("mn_invariant: bad triple");
    FWord fw;
    fw.n = w.n;
    fw.triple = triple;
    for (size_t pos = 0; pos < w.letters.size(); ++pos) {
        if (!(w.letters[pos] == triple)) continue;
        IndexLetter letter;
        for (int l = 1; l <= w.n; ++l) {
            if (l == triple[0] || l == triple[1] || l == triple[2]) continue;
            letter.values.push_back(occurrence_index(w, pos, l));
        }
        if (!fw.letters.empty() && fw.letters.back() == letter) fw.letters.pop_back();
        else fw.letters.push_back(std::move(letter));
    }
    return fw;
}

std::optional<Certificate> certify_nontrivial(const Gn3Word& w) {
    w.validate();
    for (int i = 1; i <= w.n; ++i)
        for (int j = i + 1; j <= w.n; ++j)
            for (int k = j + 1; k <= w.n; ++k) {
                FWord fw = mn_invariant(w, Gen{i, j, k});
                if (!fw.trivial()) return Certificate{Gen{i, j, k}, std::move(fw)};
            }
    return std::nullopt;
}

std::size_t mn_length_lower_bound(const Gn3Word& w) {
    w.validate();
    std::set<Gen> triples(w.letters.begin(), w.letters.end());
    std::size_t total = 0;
    for (const Gen& t : triples) total += mn_invariant(w, t).letters.size();
    return total;
}

}  // namespace rhombiflip

#include "words.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace rhombiflip {

void Gn3Word::validate() const {
    if (n < 3) throw Error("word: n must be at least 3");
    for (const Gen& g : letters)
        if (!(1 <= g[0] && g[0] < g[1] && g[1] < g[2] && g[2] <= n))
            throw Error("word: generator subscripts must be ascending and within n");
}

std::string Gn3Word::text() const {
    if (n > 9) throw Error("word text: only supported for n <= 9");
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s.push_back('.');
        for (int a : letters[i]) s.push_back(static_cast<char>('0' + a));
    }
    return s;
}

Gn3Word Gn3Word::parse(int n, const std::string& text) {
    if (n > 9) throw Error("word text: only supported for n <= 9");
    Gn3Word w;
    w.n = n;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t dot = text.find('.', pos);
        std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (tok.size() != 3) throw Error("word text: each letter needs exactly three digits");
        Gen g;
        for (int c = 0; c < 3; ++c) {
            if (tok[static_cast<size_t>(c)] < '1' || tok[static_cast<size_t>(c)] > '9')
                throw Error("word text: subscripts must be digits 1-9");
            g[static_cast<size_t>(c)] = tok[static_cast<size_t>(c)] - '0';
        }
        w.letters.push_back(g);
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    w.validate();
    return w;
}

Gn3Word concat(const Gn3Word& a, const Gn3Word& b) {
    if (a.n != b.n) throw Error("concat: mismatched n");
    Gn3Word w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

Gn3Word reversed(const Gn3Word& w) {
    Gn3Word r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

Gn3Word free_reduce(const Gn3Word& w) {
    Gn3Word r;
    r.n = w.n;
    for (const Gen& g : w.letters) {
        if (!r.letters.empty() && r.letters.back() == g) r.letters.pop_back();
        else r.letters.push_back(g);
    }
    return r;
}

bool far_commutes(const Gen& a, const Gen& b) {
    int c = 0;
    for (int x : a)
        for (int y : b)
            if (x == y) ++c;
    return c < 2;
}

std::pair<std::vector<Gen>, std::vector<Gen>> octagon_block(const std::array<int, 4>& quad) {
    std::array<int, 4> u = quad;
    std::sort(u.begin(), u.end());
    std::vector<Gen> left;
    for (int t = 3; t >= 0; --t) {  // drop u[3], then u[2], u[1], u[0]
        Gen g;
        int w = 0;
        for (int s = 0; s < 4; ++s)
            if (s != t) g[static_cast<size_t>(w++)] = u[static_cast<size_t>(s)];
        left.push_back(g);
    }
    std::vector<Gen> right(left.rbegin(), left.rend());
    return {left, right};
}

nlohmann::json RewriteMove::to_json() const {
    switch (kind) {
        case Kind::CancelPair: return {{"kind", "cancel"}, {"pos", pos}};
        case Kind::InsertPair: return {{"kind", "insert"}, {"pos", pos}, {"gen", {gen[0], gen[1], gen[2]}}};
        case Kind::FarCommute: return {{"kind", "commute"}, {"pos", pos}};
        case Kind::Octagon: return {{"kind", "octagon"}, {"pos", pos}};
    }
    throw Error("unreachable");
}

namespace {

// Matches w[p..p+4) against either side of an octagon block; fills the quad.
bool octagon_window(const std::vector<Gen>& w, size_t p, std::array<int, 4>* quad) {
    if (p + 4 > w.size()) return false;
    std::array<int, 4> u{};
    int cnt = 0;
    for (size_t t = p; t < p + 4; ++t)
        for (int a : w[t]) {
            bool have = false;
            for (int s = 0; s < cnt; ++s)
                if (u[static_cast<size_t>(s)] == a) have = true;
            if (!have) {
                if (cnt == 4) return false;
                u[static_cast<size_t>(cnt++)] = a;
            }
        }
    if (cnt != 4) return false;
    std::sort(u.begin(), u.end());
    auto [left, right] = octagon_block(u);
    bool is_left = std::equal(left.begin(), left.end(), w.begin() + static_cast<long>(p));
    bool is_right = std::equal(right.begin(), right.end(), w.begin() + static_cast<long>(p));
    if (!is_left && !is_right) return false;
    *quad = u;
    return true;
}

}  // namespace

std::vector<Gen> apply_move(const std::vector<Gen>& w, const RewriteMove& m) {
    std::vector<Gen> out = w;
    switch (m.kind) {
        case RewriteMove::Kind::CancelPair:
            if (m.pos + 1 >= w.size() || !(w[m.pos] == w[m.pos + 1])) throw Error("move: cancel does not apply");
            out.erase(out.begin() + static_cast<long>(m.pos), out.begin() + static_cast<long>(m.pos) + 2);
            return out;
        case RewriteMove::Kind::InsertPair:
            if (m.pos > w.size()) throw Error("move: insert position out of range");
            out.insert(out.begin() + static_cast<long>(m.pos), 2, m.gen);
            return out;
        case RewriteMove::Kind::FarCommute:
            if (m.pos + 1 >= w.size() || !far_commutes(w[m.pos], w[m.pos + 1]))
                throw Error("move: letters do not far-commute");
            std::swap(out[m.pos], out[m.pos + 1]);
            return out;
        case RewriteMove::Kind::Octagon: {
            std::array<int, 4> quad;
            if (!octagon_window(w, m.pos, &quad)) throw Error("move: no octagon block at position");
            std::reverse(out.begin() + static_cast<long>(m.pos), out.begin() + static_cast<long>(m.pos) + 4);
            return out;
        }
    }
    throw Error("unreachable");
}

namespace {

std::string state_key(const std::vector<Gen>& w) {
    std::string s;
    s.reserve(w.size() * 3);
    for (const Gen& g : w)
        for (int a : g) s.push_back(static_cast<char>(a));
    return s;
}

std::vector<Gen> all_triples(int n) {
    std::vector<Gen> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
    return out;
}

}  // namespace

BoundedEqualResult bounded_equal(const Gn3Word& w1, const Gn3Word& w2,
                                 std::size_t max_states, int extra_len) {
    if (w1.n != w2.n) throw Error("bounded_equal: mismatched n");
    w1.validate();
    w2.validate();

    // free-reduce w1 . reverse(w2) up front, recording the cancellations so
    // the witness replays from the raw concatenation
    std::vector<Gen> start = concat(w1, reversed(w2)).letters;
    std::vector<RewriteMove> prefix;
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t p = 0; p + 1 < start.size(); ++p)
            if (start[p] == start[p + 1]) {
                prefix.push_back(RewriteMove{RewriteMove::Kind::CancelPair, p, {}});
                start.erase(start.begin() + static_cast<long>(p), start.begin() + static_cast<long>(p) + 2);
                changed = true;
                break;
            }
    }
    size_t max_len = start.size() + static_cast<size_t>(extra_len);

    struct Node {
        std::vector<Gen> w;
        int parent;
        RewriteMove move;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::string> visited;
    // bucket queue keyed by word length: shortest states expand first
    std::vector<std::deque<int>> buckets(max_len + 1);

    auto push = [&](std::vector<Gen> w, int parent, RewriteMove mv) -> int {
        if (w.size() > max_len || nodes.size() >= max_states) return -1;
        std::string key = state_key(w);
        if (!visited.insert(key).second) return -1;
        size_t len = w.size();
        nodes.push_back(Node{std::move(w), parent, mv});
        int id = static_cast<int>(nodes.size()) - 1;
        buckets[len].push_back(id);
        return id;
    };

    BoundedEqualResult res;
    int goal = -1;
    int first = push(start, -1, RewriteMove{});
    if (first >= 0 && nodes[static_cast<size_t>(first)].w.empty()) goal = first;

    const std::vector<Gen> gens = all_triples(w1.n);
    while (goal < 0) {
        int cur = -1;
        for (auto& b : buckets)
            if (!b.empty()) {
                cur = b.front();
                b.pop_front();
                break;
            }
        if (cur < 0) break;  // queue exhausted
        std::vector<Gen> w = nodes[static_cast<size_t>(cur)].w;  // copy: nodes may reallocate

        auto try_child = [&](std::vector<Gen> child, RewriteMove mv) {
            int id = push(std::move(child), cur, mv);
            if (id >= 0 && nodes[static_cast<size_t>(id)].w.empty()) goal = id;
        };

        for (size_t p = 0; p + 1 < w.size() && goal < 0; ++p) {
            if (w[p] == w[p + 1]) {
                std::vector<Gen> c = w;
                c.erase(c.begin() + static_cast<long>(p), c.begin() + static_cast<long>(p) + 2);
                try_child(std::move(c), RewriteMove{RewriteMove::Kind::CancelPair, p, {}});
            } else if (far_commutes(w[p], w[p + 1])) {
                std::vector<Gen> c = w;
                std::swap(c[p], c[p + 1]);
                try_child(std::move(c), RewriteMove{RewriteMove::Kind::FarCommute, p, {}});
            }
        }
        for (size_t p = 0; p + 4 <= w.size() && goal < 0; ++p) {
            std::array<int, 4> quad;
            if (octagon_window(w, p, &quad)) {
                std::vector<Gen> c = w;
                std::reverse(c.begin() + static_cast<long>(p), c.begin() + static_cast<long>(p) + 4);
                try_child(std::move(c), RewriteMove{RewriteMove::Kind::Octagon, p, {}});
            }
        }
        if (w.size() + 2 <= max_len) {
            for (size_t p = 0; p <= w.size() && goal < 0; ++p)
                for (const Gen& gg : gens) {
                    std::vector<Gen> c = w;
                    c.insert(c.begin() + static_cast<long>(p), 2, gg);
                    try_child(std::move(c), RewriteMove{RewriteMove::Kind::InsertPair, p, gg});
                    if (goal >= 0) break;
                }
        }
    }

    res.states_explored = nodes.size();
    if (goal < 0) return res;
    res.equal = true;
    std::vector<RewriteMove> tail;
    for (int v = goal; nodes[static_cast<size_t>(v)].parent >= 0; v = nodes[static_cast<size_t>(v)].parent)
        tail.push_back(nodes[static_cast<size_t>(v)].move);
    std::reverse(tail.begin(), tail.end());
    res.witness = std::move(prefix);
    res.witness.insert(res.witness.end(), tail.begin(), tail.end());
    return res;
}

}  // namespace rhombiflip

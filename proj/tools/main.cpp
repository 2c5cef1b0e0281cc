// Command line front end. Everything goes through the C API in rhombiflip.h;
// JSON here is plumbing for files and flags only.
//
// Payloads go to stdout, diagnostics to stderr, exit code 0 iff the command
// succeeded. Failures print {"error": "..."} on stdout.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rhombiflip.h"

using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& msg) { throw CliError(msg); }

void need(rf_status st) {
    if (st != RF_OK) fail(rf_last_error());
}

// Owning wrapper for strings returned by the library.
struct CStr {
    char* p = nullptr;
    CStr() = default;
    CStr(const CStr&) = delete;
    CStr& operator=(const CStr&) = delete;
    ~CStr() { rf_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() {
        if (p) Free(p);
    }
    T** out() { return &p; }
    operator T*() const { return p; }
};

using Tiling = Handle<rf_tiling, rf_tiling_free>;
using Graph = Handle<rf_graph, rf_graph_free>;
using Word = Handle<rf_word, rf_word_free>;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) fail("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write " + path);
    out << data;
    if (!out.flush()) fail("write failed: " + path);
}

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

// A tiling argument is a JSON file, "-" for stdin, or "base:N" for the base tiling.
std::string read_tiling_json(const std::string& spec) {
    if (spec.rfind("base:", 0) == 0) {
        Tiling t;
        need(rf_tiling_base(std::stoi(spec.substr(5)), t.out()));
        CStr js;
        need(rf_tiling_to_json(t, &js.p));
        return js.str();
    }
    return read_input(spec);
}

void emit_raw(const std::string& payload) { std::cout << payload << "\n"; }

std::array<int, 3> parse_triple(const std::string& s) {
    std::array<int, 3> t{};
    char c1 = 0, c2 = 0;
    std::istringstream ss(s);
    if (!(ss >> t[0] >> c1 >> t[1] >> c2 >> t[2]) || c1 != ',' || c2 != ',' ||
        !(ss >> std::ws).eof())
        fail("expected a comma separated triple i,j,k, got: " + s);
    return t;
}

json flip_json(const rf_flip& f, int n) {
    json base = json::array();
    for (int i = 0; i < n; ++i) base.push_back(f.base[i]);
    return {{"base", base},
            {"axes", {f.axes[0], f.axes[1], f.axes[2]}},
            {"dir", f.dir == 0 ? "up" : "down"}};
}

rf_flip flip_from_json(const json& j, int n) {
    rf_flip f{};
    const json& base = j.at("base");
    if (static_cast<int>(base.size()) != n) fail("flip: base length must equal n");
    for (int i = 0; i < n; ++i) f.base[i] = base[i].get<int>();
    const json& axes = j.at("axes");
    if (axes.size() != 3) fail("flip: axes must hold three labels");
    for (int i = 0; i < 3; ++i) f.axes[i] = axes[i].get<int>();
    std::string d = j.at("dir").get<std::string>();
    if (d != "up" && d != "down") fail("flip: dir must be \"up\" or \"down\"");
    f.dir = d == "up" ? 0 : 1;
    return f;
}

int cmd_enumerate(int n, std::size_t limit, int jobs, const std::string& out_file) {
    Graph g;
    rf_status st = rf_graph_enumerate(n, limit, jobs, g.out());
    if (st == RF_ERR_LIMIT && g.p)
        std::cerr << "vertex limit reached; the graph is partial\n";
    else
        need(st);
    int connected = 0;
    need(rf_graph_is_connected(g, &connected));
    if (!out_file.empty()) {
        CStr js;
        need(rf_graph_to_json(g, &js.p));
        write_output(out_file, js.str());
    }
    emit({{"n", n},
          {"vertices", rf_graph_vertex_count(g)},
          {"edges", rf_graph_edge_count(g)},
          {"complete", rf_graph_is_complete(g) != 0},
          {"connected", connected != 0}});
    return 0;
}

int cmd_flip(const std::string& tiling_file, bool list, const std::string& axes,
             const std::string& dir, const std::string& flip_file, bool random,
             std::uint64_t seed) {
    Tiling t;
    need(rf_tiling_from_json(read_tiling_json(tiling_file).c_str(), t.out()));
    int n = rf_tiling_n(t);

    rf_flip* fs = nullptr;
    std::size_t count = 0;
    need(rf_tiling_flips(t, &fs, &count));
    struct FlipsGuard {
        rf_flip* p;
        ~FlipsGuard() { rf_flips_free(p); }
    } guard{fs};

    if (list) {
        json arr = json::array();
        for (std::size_t i = 0; i < count; ++i) arr.push_back(flip_json(fs[i], n));
        emit(arr);
        return 0;
    }

    rf_flip chosen{};
    if (!flip_file.empty()) {
        chosen = flip_from_json(json::parse(read_input(flip_file)), n);
    } else if (random) {
        if (count == 0) fail("tiling admits no flips");
        std::mt19937_64 gen(seed);
        chosen = fs[gen() % count];
    } else if (!axes.empty()) {
        std::array<int, 3> want = parse_triple(axes);
        std::sort(want.begin(), want.end());
        bool found = false;
        for (std::size_t i = 0; i < count && !found; ++i) {
            std::array<int, 3> have{fs[i].axes[0], fs[i].axes[1], fs[i].axes[2]};
            std::sort(have.begin(), have.end());
            if (have != want) continue;
            if (!dir.empty() && dir != (fs[i].dir == 0 ? "up" : "down")) continue;
            chosen = fs[i];
            found = true;
        }
        if (!found)
            fail("no available flip on axes " + axes + (dir.empty() ? "" : " going " + dir));
    } else {
        fail("one of --axes, --flip, --random, --list is required");
    }

    Tiling flipped;
    need(rf_tiling_apply_flip(t, &chosen, flipped.out()));
    CStr js;
    need(rf_tiling_to_json(flipped, &js.p));
    emit_raw(js.str());
    return 0;
}

int cmd_path_to_word(const std::string& path_file) {
    CStr text;
    need(rf_path_to_word(read_input(path_file).c_str(), &text.p));
    emit(json(text.str()));
    return 0;
}

int cmd_mn_index(int n, const std::string& word, const std::string& triple) {
    Word w;
    need(rf_word_parse(n, word.c_str(), w.out()));
    std::array<int, 3> t = parse_triple(triple);
    CStr text;
    need(rf_mn_invariant(w, t.data(), &text.p));
    emit(json(text.str()));
    return 0;
}

int cmd_check_equal(int n, const std::string& w1, const std::string& w2, std::size_t budget,
                    std::size_t extra_len) {
    Word a, b;
    need(rf_word_parse(n, w1.c_str(), a.out()));
    need(rf_word_parse(n, w2.c_str(), b.out()));
    int equal = 0;
    CStr witness;
    need(rf_words_bounded_equal(a, b, budget, extra_len, &equal, &witness.p));
    if (!equal)
        std::cerr << "not shown equal within the budget (the check is one sided)\n";
    emit({{"equal", equal != 0},
          {"witness", witness.p ? json::parse(witness.str()) : json(nullptr)}});
    return 0;
}

int cmd_check_closed(const std::string& path_file, std::size_t max_states) {
    CStr report;
    need(rf_check_closed_path(read_input(path_file).c_str(), max_states, &report.p));
    emit_raw(report.str());
    return 0;
}

int cmd_surface_search(int n, const std::string& kind, int max_len) {
    CStr outcome;
    rf_status st = rf_surface_search(n, kind == "rp2" ? 0 : 1, max_len, &outcome.p);
    if (st == RF_ERR_NOT_FOUND) {
        std::cerr << "no certified nontrivial closed path of length <= " << max_len << "\n";
        emit(json(nullptr));
        return 0;
    }
    need(st);
    emit_raw(outcome.str());
    return 0;
}

int cmd_mutate(const std::string& path_file, const std::string& vars_file,
               const std::string& tiling_file) {
    std::string path_json = read_input(path_file);
    if (!tiling_file.empty()) {
        Tiling given, start;
        need(rf_tiling_from_json(read_tiling_json(tiling_file).c_str(), given.out()));
        need(rf_tiling_from_json(json::parse(path_json).at("start").dump().c_str(), start.out()));
        CStr a, b;
        need(rf_tiling_to_json(given, &a.p));
        need(rf_tiling_to_json(start, &b.p));
        if (a.str() != b.str()) fail("--tiling does not match the start of --path");
    }
    CStr result;
    need(rf_mutate_along_path(path_json.c_str(), read_input(vars_file).c_str(), &result.p));
    emit_raw(result.str());
    return 0;
}

int cmd_render(const std::string& tiling_file, bool dual, bool labels, bool no_tiles,
               const std::string& out_file) {
    CStr svg;
    need(rf_render_svg(read_tiling_json(tiling_file).c_str(), no_tiles ? 0 : 1, dual ? 1 : 0,
                       labels ? 1 : 0, &svg.p));
    if (out_file == "-") {
        std::cout << svg.str();
        return 0;
    }
    write_output(out_file, svg.str());
    emit({{"out", out_file}, {"bytes", svg.str().size()}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rhombile tilings of 2n-gons, flips, and words of flip paths"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", rf_version());

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized choices")
        ->envname("RHOMBIFLIP_SEED");

    std::function<int()> run;

    struct {
        int n = 0;
        std::size_t limit = 0;
        int jobs = 1;
        std::string out;
    } en;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate all tilings and flips");
    enumerate->add_option("--n", en.n, "number of edge directions")
        ->required()
        ->check(CLI::Range(1, RF_MAX_N));
    enumerate->add_option("--vertex-limit", en.limit, "stop after this many tilings (0 = none)");
    enumerate->add_option("--jobs", en.jobs, "worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--out", en.out, "write the full graph JSON to this file");
    enumerate->callback([&] { run = [&] { return cmd_enumerate(en.n, en.limit, en.jobs, en.out); }; });

    struct {
        std::string tiling, axes, dir, flip;
        bool list = false, random = false;
    } fl;
    auto* flip = app.add_subcommand("flip", "apply a flip to a tiling, or list the available ones");
    flip->add_option("--tiling", fl.tiling, "tiling JSON file, - for stdin, or base:N")->required();
    flip->add_option("--axes", fl.axes, "axis triple i,j,k of the hexagon to flip");
    flip->add_option("--dir", fl.dir, "required direction of the flip")
        ->check(CLI::IsMember({"up", "down"}));
    flip->add_option("--flip", fl.flip, "flip JSON file (- for stdin)");
    flip->add_flag("--random", fl.random, "apply a uniformly chosen available flip");
    flip->add_flag("--list", fl.list, "print the available flips instead of applying one");
    flip->callback([&] {
        run = [&] { return cmd_flip(fl.tiling, fl.list, fl.axes, fl.dir, fl.flip, fl.random, seed); };
    });

    struct {
        std::string path;
    } pw;
    auto* ptw = app.add_subcommand("path-to-word", "word of the flips along a path");
    ptw->add_option("--path", pw.path, "path JSON file (- for stdin)")->required();
    ptw->callback([&] { run = [&] { return cmd_path_to_word(pw.path); }; });

    struct {
        int n = 0;
        std::string word, triple;
    } mn;
    auto* mni = app.add_subcommand("mn-index", "index invariant of a word at a triple");
    mni->add_option("--n", mn.n, "number of labels")->required()->check(CLI::Range(3, RF_MAX_N));
    mni->add_option("--word", mn.word, "dot separated word, e.g. 124.123")->required();
    mni->add_option("--triple", mn.triple, "triple i,j,k")->required();
    mni->callback([&] { run = [&] { return cmd_mn_index(mn.n, mn.word, mn.triple); }; });

    struct {
        int n = 0;
        std::string w1, w2;
        std::size_t budget = 200000, extra = 4;
    } ce;
    auto* cheq = app.add_subcommand("check-equal", "decide equality of two words within a budget");
    cheq->add_option("--n", ce.n, "number of labels")->required()->check(CLI::Range(3, RF_MAX_N));
    cheq->add_option("--w1", ce.w1, "first word")->required();
    cheq->add_option("--w2", ce.w2, "second word")->required();
    cheq->add_option("--budget", ce.budget, "rewriting states to explore");
    cheq->add_option("--extra-len", ce.extra, "length headroom above both inputs");
    cheq->callback([&] { run = [&] { return cmd_check_equal(ce.n, ce.w1, ce.w2, ce.budget, ce.extra); }; });

    struct {
        std::string path;
        std::size_t max_states = 200000;
    } cc;
    auto* chcl = app.add_subcommand("check-closed", "certify and reduce the word of a closed path");
    chcl->add_option("--path", cc.path, "path JSON file (- for stdin)")->required();
    chcl->add_option("--max-states", cc.max_states, "rewriting states to explore");
    chcl->callback([&] { run = [&] { return cmd_check_closed(cc.path, cc.max_states); }; });

    struct {
        int n = 0;
        std::string kind;
        int max_len = 0;
    } ss;
    auto* ssearch = app.add_subcommand("surface-search",
                                       "search a glued surface for a certified nontrivial closed path");
    ssearch->add_option("--n", ss.n, "number of labels")->required()->check(CLI::Range(3, RF_MAX_N));
    ssearch->add_option("--kind", ss.kind, "surface kind")
        ->required()
        ->check(CLI::IsMember({"rp2", "klein"}));
    ssearch->add_option("--max-len", ss.max_len, "largest path length to try")
        ->required()
        ->check(CLI::NonNegativeNumber);
    ssearch->callback([&] { run = [&] { return cmd_surface_search(ss.n, ss.kind, ss.max_len); }; });

    struct {
        std::string path, vars, tiling;
    } mu;
    auto* mutate = app.add_subcommand("mutate", "transport vertex variables along a path");
    mutate->add_option("--path", mu.path, "path JSON file (- for stdin)")->required();
    mutate->add_option("--vars", mu.vars, "variable assignment JSON file (- for stdin)")->required();
    mutate->add_option("--tiling", mu.tiling, "cross-check: must equal the path start");
    mutate->callback([&] { run = [&] { return cmd_mutate(mu.path, mu.vars, mu.tiling); }; });

    struct {
        std::string tiling, out;
        bool dual = false, labels = false, no_tiles = false;
    } re;
    auto* render = app.add_subcommand("render", "render a tiling and/or its dual diagram as SVG");
    render->add_option("--tiling", re.tiling, "tiling JSON file, - for stdin, or base:N")->required();
    render->add_flag("--dual", re.dual, "draw the dual arc diagram");
    render->add_flag("--labels", re.labels, "draw labels");
    render->add_flag("--no-tiles", re.no_tiles, "suppress the tiles layer");
    render->add_option("--out", re.out, "output SVG file (- for stdout)")->required();
    render->callback([&] {
        run = [&] { return cmd_render(re.tiling, re.dual, re.labels, re.no_tiles, re.out); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) emit({{"error", e.what()}});
        return app.exit(e);
    }

    try {
        return run ? run() : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        emit({{"error", e.what()}});
        return 1;
    }
}

#include "rhombiflip.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/dual.hpp"
#include "core/flip_graph.hpp"
#include "core/mn_index.hpp"
#include "core/mutation.hpp"
#include "core/phi.hpp"
#include "core/surface.hpp"
#include "core/tiling.hpp"
#include "core/words.hpp"

using namespace rhombiflip;

struct rf_tiling {
    PlanarTiling t;
};
struct rf_graph {
    FlipGraph g;
};
struct rf_word {
    Gn3Word w;
};
struct rf_surface {
    SurfaceTiling s;
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

rf_status set_error(rf_status st, const std::string& msg) {
    g_error = msg;
    return st;
}

template <typename F>
rf_status guard(F&& f, rf_status on_domain_error = RF_ERR_INVALID) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        return set_error(RF_ERR_PARSE, e.what());
    } catch (const Error& e) {
        return set_error(on_domain_error, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(RF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(RF_ERR_INTERNAL, e.what());
    }
}

CubeFlip to_flip(const rf_flip& f, int n) {
    CubeFlip c;
    c.axes = {f.axes[0], f.axes[1], f.axes[2]};
    c.dir = f.dir == 0 ? FlipDir::Up : FlipDir::Down;
    c.base = 0;
    for (int i = 0; i < RF_MAX_N; ++i) {
        if (f.base[i] != 0 && f.base[i] != 1) throw Error("flip: base entries must be 0 or 1");
        if (f.base[i] && i >= n) throw Error("flip: base set beyond n");
        if (f.base[i]) c.base |= bit_of(i + 1);
    }
    return c;
}

void from_flip(const CubeFlip& c, int n, rf_flip* out) {
    out->axes[0] = c.axes[0];
    out->axes[1] = c.axes[1];
    out->axes[2] = c.axes[2];
    out->dir = c.dir == FlipDir::Up ? 0 : 1;
    for (int i = 0; i < RF_MAX_N; ++i) out->base[i] = (i < n && (c.base & bit_of(i + 1))) ? 1 : 0;
}

nlohmann::json certificate_json(const Certificate& c) {
    return {{"triple", {c.triple[0], c.triple[1], c.triple[2]}}, {"fword", c.fword.text()}};
}

nlohmann::json reduction_json(const BoundedEqualResult& r) {
    nlohmann::json moves = nlohmann::json::array();
    for (const RewriteMove& m : r.witness) moves.push_back(m.to_json());
    return {{"equal", r.equal}, {"states_explored", r.states_explored}, {"witness", std::move(moves)}};
}

}  // namespace

extern "C" {

const char* rf_version(void) { return "1.0.0"; }

const char* rf_last_error(void) { return g_error.c_str(); }

void rf_string_free(char* s) { std::free(s); }

/* ---- planar tilings ---- */

rf_status rf_tiling_base(int n, rf_tiling** out) {
    if (!out) return set_error(RF_ERR_INVALID, "null output");
    return guard([&] {
        *out = new rf_tiling{base_tiling(n)};
        return RF_OK;
    });
}

rf_status rf_tiling_from_json(const char* json, rf_tiling** out) {
    if (!json || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = new rf_tiling{PlanarTiling::from_json(nlohmann::json::parse(json))};
        return RF_OK;
    });
}

rf_status rf_tiling_to_json(const rf_tiling* t, char** out) {
    if (!t || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = dup_string(t->t.to_json().dump());
        return *out ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

int rf_tiling_n(const rf_tiling* t) { return t ? t->t.n() : 0; }

rf_status rf_tiling_is_valid(const rf_tiling* t) {
    if (!t) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        if (!validate(DirectionSet::standard(t->t.n()), t->t))
            return set_error(RF_ERR_INVALID, "tiling is structurally sound but not geometric");
        return RF_OK;
    });
}

rf_status rf_tiling_flips(const rf_tiling* t, rf_flip** out, size_t* count) {
    if (!t || !out || !count) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        auto fs = find_flips(t->t);
        *count = fs.size();
        if (fs.empty()) {
            *out = nullptr;
            return RF_OK;
        }
        auto* arr = static_cast<rf_flip*>(std::malloc(fs.size() * sizeof(rf_flip)));
        if (!arr) return set_error(RF_ERR_INTERNAL, "out of memory");
        for (size_t i = 0; i < fs.size(); ++i) from_flip(fs[i], t->t.n(), &arr[i]);
        *out = arr;
        return RF_OK;
    });
}

rf_status rf_tiling_apply_flip(const rf_tiling* t, const rf_flip* f, rf_tiling** out) {
    if (!t || !f || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        CubeFlip c = to_flip(*f, t->t.n());
        if (!flip_available(t->t, c)) return set_error(RF_ERR_NOT_APPLICABLE, "flip not applicable");
        *out = new rf_tiling{apply_flip(t->t, c)};
        return RF_OK;
    });
}

void rf_flips_free(rf_flip* flips) { std::free(flips); }

void rf_tiling_free(rf_tiling* t) { delete t; }

/* ---- flip graph ---- */

rf_status rf_graph_enumerate(int n, size_t vertex_limit, int jobs, rf_graph** out) {
    if (!out) return set_error(RF_ERR_INVALID, "null output");
    return guard([&] {
        size_t limit = vertex_limit == 0 ? std::numeric_limits<size_t>::max() : vertex_limit;
        *out = new rf_graph{enumerate_tilings(n, limit, jobs < 1 ? 1 : jobs)};
        if (!(*out)->g.complete) return set_error(RF_ERR_LIMIT, "vertex limit reached");
        return RF_OK;
    });
}

rf_status rf_graph_from_json(const char* json, rf_graph** out) {
    if (!json || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = new rf_graph{FlipGraph::from_json(nlohmann::json::parse(json))};
        return RF_OK;
    });
}

rf_status rf_graph_to_json(const rf_graph* g, char** out) {
    if (!g || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = dup_string(g->g.to_json().dump());
        return *out ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

size_t rf_graph_vertex_count(const rf_graph* g) { return g ? g->g.vertices.size() : 0; }

size_t rf_graph_edge_count(const rf_graph* g) { return g ? g->g.edges.size() : 0; }

int rf_graph_is_complete(const rf_graph* g) { return g && g->g.complete ? 1 : 0; }

rf_status rf_graph_is_connected(const rf_graph* g, int* connected) {
    if (!g || !connected) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *connected = is_connected(g->g) ? 1 : 0;
        return RF_OK;
    });
}

void rf_graph_free(rf_graph* g) { delete g; }

/* ---- words and rewriting ---- */

rf_status rf_word_parse(int n, const char* text, rf_word** out) {
    if (!text || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = new rf_word{Gn3Word::parse(n, text)};
        return RF_OK;
    }, RF_ERR_PARSE);
}

rf_status rf_word_format(const rf_word* w, char** out) {
    if (!w || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = dup_string(w->w.text());
        return *out ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

rf_status rf_word_free_reduce(const rf_word* w, rf_word** out) {
    if (!w || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = new rf_word{free_reduce(w->w)};
        return RF_OK;
    });
}

size_t rf_word_length(const rf_word* w) { return w ? w->w.letters.size() : 0; }

void rf_word_free(rf_word* w) { delete w; }

rf_status rf_path_to_word(const char* path_json, char** word_text) {
    if (!path_json || !word_text) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        FlipPath p = FlipPath::from_json(nlohmann::json::parse(path_json));
        *word_text = dup_string(phi(p).text());
        return *word_text ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    }, RF_ERR_NOT_APPLICABLE);
}

rf_status rf_check_closed_path(const char* path_json, size_t max_states, char** report_json) {
    if (!path_json || !report_json) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        FlipPath p = FlipPath::from_json(nlohmann::json::parse(path_json));
        if (!path_is_closed(p)) return set_error(RF_ERR_NOT_APPLICABLE, "path is not closed");
        ClosedPathReport r = check_closed_path_trivial(p, max_states ? max_states : 200000);
        nlohmann::json j{{"certificate", r.certificate ? certificate_json(*r.certificate)
                                                       : nlohmann::json(nullptr)},
                         {"reduction", reduction_json(r.reduction)}};
        *report_json = dup_string(j.dump());
        return *report_json ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

rf_status rf_mn_invariant(const rf_word* w, const int triple[3], char** fword_text) {
    if (!w || !triple || !fword_text) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        Gen t{triple[0], triple[1], triple[2]};
        *fword_text = dup_string(mn_invariant(w->w, t).text());
        return *fword_text ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

rf_status rf_mn_certify(const rf_word* w, char** certificate) {
    if (!w || !certificate) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        auto c = certify_nontrivial(w->w);
        if (!c) {
            *certificate = nullptr;
            return set_error(RF_ERR_NOT_FOUND, "every invariant word is trivial");
        }
        *certificate = dup_string(certificate_json(*c).dump());
        return *certificate ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

rf_status rf_mn_length_lower_bound(const rf_word* w, size_t* bound) {
    if (!w || !bound) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *bound = mn_length_lower_bound(w->w);
        return RF_OK;
    });
}

rf_status rf_words_bounded_equal(const rf_word* a, const rf_word* b, size_t max_states,
                                 size_t extra_len, int* equal, char** witness_json) {
    if (!a || !b || !equal) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        if (a->w.n != b->w.n) return set_error(RF_ERR_INVALID, "words over different n");
        BoundedEqualResult r = bounded_equal(a->w, b->w, max_states ? max_states : 200000,
                                             static_cast<int>(extra_len));
        *equal = r.equal ? 1 : 0;
        if (witness_json) {
            if (r.equal) {
                nlohmann::json moves = nlohmann::json::array();
                for (const RewriteMove& m : r.witness) moves.push_back(m.to_json());
                *witness_json = dup_string(moves.dump());
                if (!*witness_json) return set_error(RF_ERR_INTERNAL, "out of memory");
            } else {
                *witness_json = nullptr;
            }
        }
        return RF_OK;
    });
}

/* ---- surfaces ---- */

rf_status rf_surface_glue(const char* tiling_json, const int* labels, int kind, rf_surface** out) {
    if (!tiling_json || !out) return set_error(RF_ERR_INVALID, "null argument");
    if (kind != 0 && kind != 1) return set_error(RF_ERR_INVALID, "kind must be 0 (rp2) or 1 (klein)");
    return guard([&] {
        PlanarTiling t = PlanarTiling::from_json(nlohmann::json::parse(tiling_json));
        BoundaryLabeling e;
        if (labels) e.labels.assign(labels, labels + t.n());
        else e = BoundaryLabeling::identity(t.n());
        *out = new rf_surface{glue(t, e, kind == 0 ? SurfaceKind::RP2 : SurfaceKind::Klein)};
        return RF_OK;
    });
}

rf_status rf_surface_from_json(const char* json, rf_surface** out) {
    if (!json || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = new rf_surface{SurfaceTiling::from_json(nlohmann::json::parse(json))};
        return RF_OK;
    });
}

rf_status rf_surface_to_json(const rf_surface* s, char** out) {
    if (!s || !out) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *out = dup_string(s->s.to_json().dump());
        return *out ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

rf_status rf_surface_euler_characteristic(const rf_surface* s, int* chi) {
    if (!s || !chi) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *chi = s->s.euler_characteristic();
        return RF_OK;
    });
}

rf_status rf_surface_flip_count(const rf_surface* s, size_t* count) {
    if (!s || !count) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        *count = find_surface_flips(s->s).size();
        return RF_OK;
    });
}

rf_status rf_surface_search(int n, int kind, int max_len, char** outcome_json) {
    if (!outcome_json) return set_error(RF_ERR_INVALID, "null output");
    if (kind != 0 && kind != 1) return set_error(RF_ERR_INVALID, "kind must be 0 (rp2) or 1 (klein)");
    return guard([&] {
        auto oc = search_nontrivial_closed_path(n, kind == 0 ? SurfaceKind::RP2 : SurfaceKind::Klein,
                                                max_len);
        if (!oc) {
            *outcome_json = nullptr;
            return set_error(RF_ERR_NOT_FOUND, "no certified closed path within max_len");
        }
        nlohmann::json j{{"path", oc->path.to_json()},
                         {"word", oc->word.text()},
                         {"certificate", certificate_json(oc->certificate)},
                         {"states_explored", oc->states_explored}};
        *outcome_json = dup_string(j.dump());
        return *outcome_json ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

void rf_surface_free(rf_surface* s) { delete s; }

/* ---- cluster mutation ---- */

rf_status rf_mutate_along_path(const char* path_json, const char* vars_json, char** result_json) {
    if (!path_json || !vars_json || !result_json) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        FlipPath p = FlipPath::from_json(nlohmann::json::parse(path_json));
        VertexVars vars = vars_from_json(nlohmann::json::parse(vars_json));
        DirectionSet d = DirectionSet::standard(p.start.n());
        VertexVars out = transport(d, p, vars);
        *result_json = dup_string(vars_to_json(out).dump());
        return *result_json ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

/* ---- rendering ---- */

rf_status rf_render_svg(const char* tiling_json, int with_tiling, int with_dual, int with_labels,
                        char** svg) {
    if (!tiling_json || !svg) return set_error(RF_ERR_INVALID, "null argument");
    return guard([&] {
        PlanarTiling t = PlanarTiling::from_json(nlohmann::json::parse(tiling_json));
        SvgStyle style;
        style.tiles = with_tiling != 0;
        style.dual = with_dual != 0;
        style.labels = with_labels != 0;
        *svg = dup_string(render_svg(DirectionSet::standard(t.n()), t, style));
        return *svg ? RF_OK : set_error(RF_ERR_INTERNAL, "out of memory");
    });
}

}  // extern "C"

#include "esch/esch.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "../core/jsonio.hpp"
#include "../core/verify.hpp"

using namespace esch;

struct esch_space {
    WeightPair wp;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

esch_status fail(esch_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

esch_status classify(const std::exception& e) {
    const std::string msg = e.what();
    if (dynamic_cast<const std::overflow_error*>(&e)) return fail(ESCH_ERR_OVERFLOW, msg);
    if (msg.find("trace imbalance") != std::string::npos)
        return fail(ESCH_ERR_TRACE_IMBALANCE, msg);
    if (msg.find("too large") != std::string::npos || msg.find("supported bound") != std::string::npos)
        return fail(ESCH_ERR_TOO_LARGE, msg);
    if (msg.find("checkpoint") != std::string::npos) return fail(ESCH_ERR_CHECKPOINT, msg);
    if (msg.find("cannot open") != std::string::npos || msg.find("cannot write") != std::string::npos)
        return fail(ESCH_ERR_IO, msg);
    if (dynamic_cast<const std::domain_error*>(&e)) return fail(ESCH_ERR_DOMAIN, msg);
    if (dynamic_cast<const std::invalid_argument*>(&e))
        return fail(ESCH_ERR_INVALID_ARGUMENT, msg);
    return fail(ESCH_ERR_INTERNAL, msg);
}

template <typename Fn>
esch_status wrap(char** out, Fn&& fn) {
    if (!out) return fail(ESCH_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    try {
        ordered_json j = fn();
        *out = dup_string(j.dump(2));
        if (!*out) return fail(ESCH_ERR_INTERNAL, "allocation failed");
        return ESCH_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

Vec3 to_vec3(const int64_t x[3]) { return {x[0], x[1], x[2]}; }

}  // namespace

extern "C" {

const char* esch_version(void) { return "1.0.0"; }

const char* esch_status_name(esch_status st) {
    switch (st) {
        case ESCH_OK: return "ok";
        case ESCH_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case ESCH_ERR_TRACE_IMBALANCE: return "trace-imbalance";
        case ESCH_ERR_OVERFLOW: return "overflow";
        case ESCH_ERR_DOMAIN: return "domain";
        case ESCH_ERR_TOO_LARGE: return "too-large";
        case ESCH_ERR_IO: return "io";
        case ESCH_ERR_CHECKPOINT: return "checkpoint";
        case ESCH_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* esch_last_error(void) { return g_last_error.c_str(); }

void esch_string_free(char* s) { ::free(s); }

esch_status esch_space_create(const int64_t p[3], const int64_t q[3], esch_space** out) {
    if (!p || !q || !out) return fail(ESCH_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    try {
        *out = new esch_space{WeightPair(to_vec3(p), to_vec3(q))};
        return ESCH_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

void esch_space_free(esch_space* sp) { delete sp; }

esch_status esch_space_analyze(const esch_space* sp, char** out_json) {
    if (!sp) return fail(ESCH_ERR_INVALID_ARGUMENT, "null space");
    return wrap(out_json, [&] { return analyze_space_json(sp->wp); });
}

esch_status esch_action_profile(const esch_space* sp, const int64_t a[3], const int64_t b[3],
                                char** out_json) {
    if (!sp || !a || !b) return fail(ESCH_ERR_INVALID_ARGUMENT, "null argument");
    return wrap(out_json, [&] {
        ActionSpec act(to_vec3(a), to_vec3(b));
        ordered_json j = to_json(act);
        j.update(to_json(isotropy_profile(sp->wp, act)));
        return j;
    });
}

esch_status esch_singular_locus(const esch_space* sp, const int64_t a[3], const int64_t b[3],
                                int torus_view, char** out_json) {
    if (!sp || !a || !b) return fail(ESCH_ERR_INVALID_ARGUMENT, "null argument");
    return wrap(out_json, [&] {
        ActionSpec act(to_vec3(a), to_vec3(b));
        SingularLocus loc = torus_view ? torus_quotient_locus(sp->wp, act)
                                       : singular_locus(sp->wp, act);
        ordered_json j = to_json(act);
        j.update(to_json(loc));
        j["free"] = loc.summary.singular_faces == 0 && loc.summary.singular_vertices == 0;
        return j;
    });
}

esch_status esch_locus_dot(const esch_space* sp, const int64_t a[3], const int64_t b[3],
                           int torus_view, char** out_dot) {
    if (!sp || !a || !b || !out_dot) return fail(ESCH_ERR_INVALID_ARGUMENT, "null argument");
    *out_dot = nullptr;
    try {
        ActionSpec act(to_vec3(a), to_vec3(b));
        SingularLocus loc = torus_view ? torus_quotient_locus(sp->wp, act)
                                       : singular_locus(sp->wp, act);
        *out_dot = dup_string(locus_to_dot(loc));
        return *out_dot ? ESCH_OK : fail(ESCH_ERR_INTERNAL, "allocation failed");
    } catch (const std::exception& e) {
        return classify(e);
    }
}

esch_status esch_alpha(const esch_space* sp, char** out_json) {
    if (!sp) return fail(ESCH_ERR_INVALID_ARGUMENT, "null space");
    return wrap(out_json, [&] { return to_json(alpha_table(sp->wp)); });
}

esch_status esch_construct(const esch_space* sp, const char* sigma, int eps1, int eps2,
                           int64_t s, char** out_json) {
    if (!sp || !sigma) return fail(ESCH_ERR_INVALID_ARGUMENT, "null argument");
    return wrap(out_json, [&] {
        Perm3 sg = Perm3::from_cycles(sigma);
        BezoutSolution sol = solve_cofactors(sp->wp, sg, eps1, eps2);
        ActionSpec act = build_action(sp->wp, sol, s);
        std::array<i64, 6> pred = predicted_orders(sp->wp, sg, eps1, eps2, s);
        ordered_json j;
        j["bezout"] = to_json(sol);
        j["action"] = to_json(act);
        j["provenance"] = {{"sigma", sg.cycles()},
                           {"eps", ordered_json::array({eps1, eps2})},
                           {"s", s}};
        ordered_json po = ordered_json::object(), dir = ordered_json::object();
        const auto& perms = Perm3::all();
        bool agree = true;
        for (int k = 0; k < 6; ++k) {
            i64 direct = kappa_sigma(sp->wp, act, perms[k]);
            po[perms[k].cycles()] = pred[k];
            dir[perms[k].cycles()] = direct;
            agree = agree && pred[k] == direct;
        }
        j["predicted_orders"] = po;
        j["direct_orders"] = dir;
        j["agree"] = agree;
        if (is_almost_free(sp->wp, act)) j["locus"] = to_json(singular_locus(sp->wp, act));
        return j;
    });
}

esch_status esch_minimal_three_lens(const esch_space* sp, char** out_json) {
    if (!sp) return fail(ESCH_ERR_INVALID_ARGUMENT, "null space");
    return wrap(out_json, [&] {
        ConstructedAction ca = minimal_3lens_action(sp->wp);
        ordered_json j;
        j["action"] = to_json(ca.action);
        j["provenance"] = {{"sigma", ca.sol.sigma.cycles()},
                           {"eps", ordered_json::array({ca.sol.eps1, ca.sol.eps2})},
                           {"s", ca.s}};
        j["locus"] = to_json(ca.locus);
        j["h"] = invariant_h(sp->wp);
        return j;
    });
}

esch_status esch_one_point(const esch_space* sp, char** out_json) {
    if (!sp) return fail(ESCH_ERR_INVALID_ARGUMENT, "null space");
    return wrap(out_json, [&] {
        ordered_json j;
        auto res = one_point_decision(sp->wp);
        if (res) {
            j["witness"] = to_json(res->action);
            j["witness"]["provenance"] = {{"sigma", res->sol.sigma.cycles()},
                                          {"eps", ordered_json::array({res->sol.eps1, res->sol.eps2})},
                                          {"s", res->s}};
            j["locus"] = to_json(res->locus);
        } else {
            j["witness"] = nullptr;
        }
        return j;
    });
}

esch_status esch_search(const esch_space* sp, int64_t s_min, int64_t s_max, int64_t window,
                        size_t max_results, char** out_json) {
    if (!sp) return fail(ESCH_ERR_INVALID_ARGUMENT, "null space");
    return wrap(out_json, [&] {
        auto ranked = search_minimal(sp->wp, s_min, s_max, window, max_results);
        ordered_json arr = ordered_json::array();
        for (const auto& r : ranked) {
            ordered_json e;
            e["action"] = to_json(r.action);
            e["provenance"] = r.provenance;
            e["summary"] = to_json(r.locus)["summary"];
            e["free"] = r.locus.summary.singular_faces == 0 &&
                        r.locus.summary.singular_vertices == 0;
            arr.push_back(e);
        }
        ordered_json j;
        j["results"] = arr;
        return j;
    });
}

esch_status esch_lattice_oracle(const int64_t* v, const int64_t* w, size_t n, char** out_json) {
    if (!v || !w) return fail(ESCH_ERR_INVALID_ARGUMENT, "null argument");
    return wrap(out_json, [&] {
        IntVec vv(v, v + n), ww(w, w + n);
        return oracle_json(vv, ww);
    });
}

esch_status esch_scan(const esch_scan_options* copts, char** out_summary_json) {
    if (!copts) return fail(ESCH_ERR_INVALID_ARGUMENT, "null options");
    return wrap(out_summary_json, [&] {
        ScanOptions opts;
        opts.h_max = copts->h_max;
        opts.convention = copts->transpose_convention ? Convention::kTranspose
                                                      : Convention::kNoTranspose;
        opts.both_conventions = copts->both_conventions != 0;
        opts.threads = copts->threads;
        opts.one_point_mode = static_cast<OnePointMode>(copts->one_point_mode);
        if (copts->records_path) opts.records_path = copts->records_path;
        if (copts->checkpoint_path) opts.checkpoint_path = copts->checkpoint_path;
        if (copts->checkpoint_every_h > 0) opts.checkpoint_every_h = copts->checkpoint_every_h;
        opts.stop_after_h = copts->stop_after_h;
        return to_json(scan(opts));
    });
}

esch_status esch_brute_box(int64_t h_max, int transpose_convention, char** out_json) {
    return wrap(out_json, [&] {
        auto keys = brute_box_oracle(
            h_max, transpose_convention ? Convention::kTranspose : Convention::kNoTranspose);
        ordered_json arr = ordered_json::array();
        for (const auto& k : keys) arr.push_back(k.flat);
        ordered_json j;
        j["h_max"] = h_max;
        j["transpose_convention"] = transpose_convention != 0;
        j["count"] = keys.size();
        j["keys"] = arr;
        return j;
    });
}

esch_status esch_verify(char** out_json) {
    return wrap(out_json, [] { return verify_report(); });
}

}  // extern "C"

/* C interface to the Eschenburg biquotient toolkit.
 *
 * All computational results are returned as heap-allocated JSON strings;
 * release them with esch_string_free(). Functions return ESCH_OK on success
 * and a status code otherwise; esch_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef ESCH_H
#define ESCH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum esch_status {
    ESCH_OK = 0,
    ESCH_ERR_INVALID_ARGUMENT = 1,
    ESCH_ERR_TRACE_IMBALANCE = 2,
    ESCH_ERR_OVERFLOW = 3,
    ESCH_ERR_DOMAIN = 4,        /* precondition failed (orbifold/manifold/almost-free) */
    ESCH_ERR_TOO_LARGE = 5,     /* enumeration or oracle box over budget */
    ESCH_ERR_IO = 6,
    ESCH_ERR_CHECKPOINT = 7,
    ESCH_ERR_INTERNAL = 8
} esch_status;

typedef struct esch_space esch_space; /* opaque: a validated weight pair */

const char* esch_version(void);
const char* esch_status_name(esch_status st);
const char* esch_last_error(void);
void esch_string_free(char* s);

esch_status esch_space_create(const int64_t p[3], const int64_t q[3], esch_space** out);
void esch_space_free(esch_space* sp);

/* Predicates, invariants, families, canonical forms, self-singular data. */
esch_status esch_space_analyze(const esch_space* sp, char** out_json);

/* Isotropy order table of the twist pair (a,b) on the space. */
esch_status esch_action_profile(const esch_space* sp, const int64_t a[3], const int64_t b[3],
                                char** out_json);

/* Singular locus of the quotient; torus_view != 0 uses the full lattice
 * counts of the ambient two-torus action. */
esch_status esch_singular_locus(const esch_space* sp, const int64_t a[3], const int64_t b[3],
                                int torus_view, char** out_json);
esch_status esch_locus_dot(const esch_space* sp, const int64_t a[3], const int64_t b[3],
                           int torus_view, char** out_dot);

/* Obstruction table: h and the 24 alpha values. */
esch_status esch_alpha(const esch_space* sp, char** out_json);

/* Bezout solution, twist pair and predicted vs direct orders for
 * (sigma, eps1, eps2, s); sigma in cycle notation: "id", "(12)", "(123)". */
esch_status esch_construct(const esch_space* sp, const char* sigma, int eps1, int eps2,
                           int64_t s, char** out_json);

/* Action whose exceptional set is at most three lens spaces through one
 * circle, orders bounded by h. */
esch_status esch_minimal_three_lens(const esch_space* sp, char** out_json);

/* One-singular-point decision; JSON carries "witness": null or the action. */
esch_status esch_one_point(const esch_space* sp, char** out_json);

/* Ranked list of small-locus actions from the construction family and a raw
 * window search. */
esch_status esch_search(const esch_space* sp, int64_t s_min, int64_t s_max, int64_t window,
                        size_t max_results, char** out_json);

/* Lattice oracle on a pair of integer vectors of equal length n in [2,6]. */
esch_status esch_lattice_oracle(const int64_t* v, const int64_t* w, size_t n, char** out_json);

typedef struct esch_scan_options {
    int64_t h_max;
    int transpose_convention;    /* 0 or 1; ignored when both_conventions */
    int both_conventions;
    int threads;                 /* <= 0: hardware concurrency */
    int one_point_mode;          /* 0 off, 1 obstruction-positive only, 2 all */
    const char* records_path;    /* JSONL output; NULL/empty = off */
    const char* checkpoint_path; /* NULL/empty = off */
    int64_t checkpoint_every_h;  /* default 4096 when <= 0 */
    int64_t stop_after_h;        /* testing hook; 0 = run to completion */
} esch_scan_options;

esch_status esch_scan(const esch_scan_options* opts, char** out_summary_json);

/* Independent small-scale enumeration validator; JSON lists canonical keys. */
esch_status esch_brute_box(int64_t h_max, int transpose_convention, char** out_json);

/* Built-in reference checks; never fails on mismatches, the JSON report
 * carries per-item statuses. */
esch_status esch_verify(char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* ESCH_H */

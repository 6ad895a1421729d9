/*
 * parakat: parabolic Catalan combinatorics, tableau sets and their
 * generating polynomials.
 *
 * Conventions
 *   - Every function returns a pk_status; PK_OK is zero, errors negative.
 *   - Objects are opaque handles created by *_new / producing functions and
 *     released with the matching *_free (NULL is accepted).
 *   - Positions and values are 1-based. A divider set R is passed as an
 *     int array with its length.
 *   - Variable-size outputs use caller buffers: pass the capacity in
 *     *out_len; on return *out_len holds the required size (elements, or
 *     bytes including the terminating NUL for strings). If the buffer is
 *     NULL or too small, PK_ERR_INSUFFICIENT_BUFFER is returned.
 *   - pk_last_error() describes the most recent failure on this thread.
 *   - Stream callbacks return 0 to continue and nonzero to stop early.
 */
#ifndef PARAKAT_H
#define PARAKAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARAKAT_BUILDING)
#    define PK_API __declspec(dllexport)
#  else
#    define PK_API __declspec(dllimport)
#  endif
#else
#  define PK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
    PK_OK = 0,
    PK_ERR_INVALID_ARGUMENT = -1,
    PK_ERR_NOT_UPPER = -2,
    PK_ERR_NOT_FLAG = -3,
    PK_ERR_NOT_INCREASING_UPPER = -4,
    PK_ERR_NOT_GAPLESS = -5,
    PK_ERR_NOT_GAPLESS_CORE = -6,
    PK_ERR_NOT_FLAG_CRITICAL_LIST = -7,
    PK_ERR_NOT_AVOIDING = -8,
    PK_ERR_DOMAIN_MISMATCH = -9,
    PK_ERR_SHAPE_MISMATCH = -10,
    PK_ERR_CAP_EXCEEDED = -11,
    PK_ERR_BUDGET_EXCEEDED = -12,
    PK_ERR_INSUFFICIENT_BUFFER = -20,
    PK_ERR_NULL_POINTER = -21,
    PK_ERR_INTERNAL = -99
} pk_status;

typedef enum pk_format {
    PK_FORMAT_TEXT = 0,
    PK_FORMAT_JSON = 1,
    PK_FORMAT_CSV = 2
} pk_format;

typedef enum pk_family {
    PK_FAMILY_UPPER = 0,
    PK_FAMILY_FLAG,
    PK_FAMILY_INCREASING,
    PK_FAMILY_GAPLESS,
    PK_FAMILY_GAPLESS_CORE,
    PK_FAMILY_FLOOR,
    PK_FAMILY_CEILING,
    PK_FAMILY_SHELL,
    PK_FAMILY_CANOPY
} pk_family;

typedef enum pk_kind {
    PK_KIND_INCREASING = 0,
    PK_KIND_SHELL,
    PK_KIND_GAPLESS,
    PK_KIND_CANOPY,
    PK_KIND_FLOOR,
    PK_KIND_CEILING
} pk_kind;

typedef struct pk_tuple pk_tuple;
typedef struct pk_critlist pk_critlist;
typedef struct pk_perm pk_perm;
typedef struct pk_shape pk_shape;
typedef struct pk_tableau pk_tableau;
typedef struct pk_tabset pk_tabset;
typedef struct pk_poly pk_poly;
typedef struct pk_report pk_report;

typedef struct pk_classification {
    int upper;
    int flag;
    int r_increasing;
    int gapless;
    int gapless_core;
    int shell;
    int canopy;
    int floor_flag;
    int ceiling_flag;
} pk_classification;

typedef struct pk_suite_options {
    int max_n;
    int max_col;
    int all_shapes;
    int jobs;
    uint64_t cap;    /* 0 selects the default (PARAKAT_CAP or 10^7) */
    uint64_t budget; /* 0 means unlimited */
} pk_suite_options;

typedef int (*pk_tuple_cb)(const pk_tuple* t, void* ctx);
typedef int (*pk_perm_cb)(const pk_perm* p, void* ctx);
typedef int (*pk_tableau_cb)(const pk_tableau* t, void* ctx);

/* ----------------------------------------------------------- general */

PK_API const char* pk_version(void);
PK_API const char* pk_status_name(int status);
PK_API const char* pk_last_error(void);

/* Parses "1,2,3", "(1,2;3)" or "1 2 3". When dividers is non-NULL the
 * positions of ';' separators are returned there (capacity *dividers_len). */
PK_API int pk_parse_list(const char* text, int* out, size_t* out_len, int* dividers,
                         size_t* dividers_len);

/* ----------------------------------------------------------- tuples */

PK_API int pk_tuple_new(int n, const int* R, size_t r, const int* entries, size_t len,
                        pk_tuple** out);
PK_API int pk_tuple_from_json(const char* json, pk_tuple** out);
PK_API void pk_tuple_free(pk_tuple* t);
PK_API int pk_tuple_n(const pk_tuple* t, int* n);
PK_API int pk_tuple_entries(const pk_tuple* t, int* out, size_t* out_len);
PK_API int pk_tuple_dividers(const pk_tuple* t, int* out, size_t* out_len);
PK_API int pk_tuple_format(const pk_tuple* t, pk_format fmt, char* out, size_t* out_len);

PK_API int pk_classify(const pk_tuple* t, pk_classification* out);
PK_API int pk_classification_format(const pk_classification* c, pk_format fmt, char* out,
                                    size_t* out_len);
PK_API int pk_critical_list(const pk_tuple* t, pk_critlist** out);
PK_API int pk_core(const pk_tuple* t, pk_tuple** out);
PK_API int pk_floor_map(const pk_tuple* g, pk_tuple** out);
PK_API int pk_ceiling_map(const pk_tuple* g, pk_tuple** out);
PK_API int pk_equivalent(const pk_tuple* a, const pk_tuple* b, int* out);
PK_API int pk_class_interval(const pk_tuple* t, pk_tuple** min, pk_tuple** max);
PK_API int pk_in_family(const pk_tuple* t, pk_family family, int* out);

PK_API int pk_family_from_name(const char* name, pk_family* out);
PK_API int pk_kind_from_name(const char* name, pk_kind* out);
PK_API int pk_tuples_for_each(int n, const int* R, size_t r, pk_family family, pk_tuple_cb cb,
                              void* ctx);
PK_API int pk_tuples_count(int n, const int* R, size_t r, pk_family family, uint64_t* out);

/* ---------------------------------------------------- critical lists */

/* pairs holds (index, entry) pairs, pair_counts the number per carrel. */
PK_API int pk_critlist_new(int n, const int* R, size_t r, const int* pairs, const size_t* pair_counts,
                           size_t carrels, pk_critlist** out);
PK_API int pk_critlist_from_json(const char* json, pk_critlist** out);
PK_API void pk_critlist_free(pk_critlist* c);
PK_API int pk_critlist_is_flag(const pk_critlist* c, int* out);
PK_API int pk_critlist_format(const pk_critlist* c, pk_format fmt, char* out, size_t* out_len);
PK_API int pk_from_critical_list(const pk_critlist* c, pk_kind kind, pk_tuple** out);

/* ------------------------------------------------------ permutations */

PK_API int pk_perm_new(int n, const int* R, size_t r, const int* one_line, size_t len, pk_perm** out);
PK_API int pk_perm_from_json(const char* json, pk_perm** out);
PK_API void pk_perm_free(pk_perm* p);
PK_API int pk_perm_one_line(const pk_perm* p, int* out, size_t* out_len);
PK_API int pk_perm_format(const pk_perm* p, pk_format fmt, char* out, size_t* out_len);
/* The R-chain B_1 ⊂ ... ⊂ B_r of p. */
PK_API int pk_perm_chain_format(const pk_perm* p, pk_format fmt, char* out, size_t* out_len);

PK_API int pk_r_projection(const int* sigma, size_t len, const int* R, size_t r, pk_perm** out);
PK_API int pk_is_r312_avoiding(const pk_perm* p, int* out);
PK_API int pk_inversions(const pk_perm* p, int* out);
PK_API int pk_rank_tuple(const pk_perm* p, pk_tuple** out);
PK_API int pk_pi_map(const pk_tuple* g, pk_perm** out);
PK_API int pk_minimal_lift(const pk_perm* p, pk_perm** out);
PK_API int pk_lifts_for_each(const pk_perm* p, pk_perm_cb cb, void* ctx);
PK_API int pk_perms_for_each(int n, const int* R, size_t r, int avoiding_only, pk_perm_cb cb, void* ctx);
PK_API int pk_count_cnr(int n, const int* R, size_t r, uint64_t* out);
PK_API int pk_count_total(int n, uint64_t* out);
PK_API int pk_count_ui(int n, const int* R, size_t r, uint64_t* out);

/* ------------------------------------------------------------ shapes */

PK_API int pk_shape_new(const int* parts, size_t n, pk_shape** out);
PK_API void pk_shape_free(pk_shape* s);
PK_API int pk_shape_dividers(const pk_shape* s, int* out, size_t* out_len);

/* ---------------------------------------------------------- tableaux */

/* values lists the columns top to bottom, left to right. */
PK_API int pk_tableau_new(const pk_shape* s, const int* values, size_t len, pk_tableau** out);
PK_API int pk_tableau_from_json(const char* json, pk_tableau** out);
PK_API void pk_tableau_free(pk_tableau* t);
PK_API int pk_tableau_format(const pk_tableau* t, pk_format fmt, char* out, size_t* out_len);
PK_API int pk_tableau_is_key(const pk_tableau* t, int* out);
PK_API int pk_is_gapless_key(const pk_tableau* t, int* out);
PK_API int pk_key_of_perm(const pk_perm* p, const pk_shape* s, pk_tableau** out);
PK_API int pk_row_end_list(const pk_tableau* t, pk_tuple** out);
PK_API int pk_content(const pk_tableau* t, int* out, size_t* out_len);
PK_API int pk_row_end_max(const pk_tuple* alpha, const pk_shape* s, pk_tableau** out);
PK_API int pk_row_bound_max(const pk_tuple* beta, const pk_shape* s, pk_tableau** out);
PK_API int pk_scanning(const pk_tableau* t, pk_tableau** out);

/* -------------------------------------------------------- tableau sets */

/* cap = 0 selects the default cap. */
PK_API int pk_set_row_bound(const pk_tuple* beta, const pk_shape* s, uint64_t cap, pk_tabset** out);
PK_API int pk_set_demazure(const pk_perm* p, const pk_shape* s, uint64_t cap, pk_tabset** out);
PK_API int pk_set_ideal(const pk_tableau* t, uint64_t cap, pk_tabset** out);
PK_API int pk_set_z(const pk_tuple* alpha, const pk_shape* s, uint64_t cap, pk_tabset** out);
PK_API int pk_set_all(const pk_shape* s, uint64_t cap, pk_tabset** out);
PK_API void pk_set_free(pk_tabset* set);
PK_API int pk_set_size(const pk_tabset* set, uint64_t* out);
PK_API int pk_set_is_convex(const pk_tabset* set, int* out);
PK_API int pk_set_equal(const pk_tabset* a, const pk_tabset* b, int* out);
PK_API int pk_set_format(const pk_tabset* set, pk_format fmt, char* out, size_t* out_len);
PK_API int pk_set_for_each(const pk_tabset* set, pk_tableau_cb cb, void* ctx);

/* Streaming variants that never materialize the set. */
PK_API int pk_stream_row_bound(const pk_tuple* beta, const pk_shape* s, pk_tableau_cb cb, void* ctx);
PK_API int pk_stream_demazure(const pk_perm* p, const pk_shape* s, pk_tableau_cb cb, void* ctx);
PK_API int pk_stream_ideal(const pk_tableau* t, pk_tableau_cb cb, void* ctx);
PK_API int pk_stream_z(const pk_tuple* alpha, const pk_shape* s, pk_tableau_cb cb, void* ctx);

/* ------------------------------------------------------- polynomials */

PK_API int pk_poly_of_set(const pk_tabset* set, pk_poly** out);
PK_API int pk_poly_row_bound_sum(const pk_tuple* beta, const pk_shape* s, uint64_t cap, pk_poly** out);
PK_API int pk_poly_flag_schur(const pk_tuple* phi, const pk_shape* s, uint64_t cap, pk_poly** out);
PK_API int pk_poly_demazure(const pk_perm* p, const pk_shape* s, uint64_t cap, pk_poly** out);
PK_API int pk_poly_demazure_dd(const pk_perm* p, const pk_shape* s, pk_poly** out);
PK_API void pk_poly_free(pk_poly* p);
PK_API int pk_poly_format(const pk_poly* p, pk_format fmt, char* out, size_t* out_len);
PK_API int pk_poly_equal(const pk_poly* a, const pk_poly* b, int* out);
/* Identical as generating functions; both must carry their tableau sets. */
PK_API int pk_poly_identical(const pk_poly* a, const pk_poly* b, int* out);
PK_API int pk_poly_fingerprint(const pk_poly* p, uint64_t* out);
PK_API int pk_compose_alpha(const pk_perm* p, const pk_shape* s, int* out, size_t* out_len);

/* ------------------------------------------------------------ verify */

PK_API void pk_suite_options_init(pk_suite_options* opt);
/* Suite names: bijections, counts, lifts, convexity, coincidence,
 * polynomials, accidental. */
PK_API int pk_suite_run(const char* name, const pk_suite_options* opt, pk_report** out);
PK_API void pk_report_free(pk_report* r);
/* 1 when the verdict is pass. */
PK_API int pk_report_passed(const pk_report* r, int* out);
PK_API int pk_report_counterexamples(const pk_report* r, uint64_t* out);
PK_API int pk_report_format(const pk_report* r, pk_format fmt, char* out, size_t* out_len);
PK_API int pk_dimension_table(const pk_suite_options* opt, pk_format fmt, char* out, size_t* out_len);

#ifdef __cplusplus
}
#endif

#endif /* PARAKAT_H */

/* Exercises the public header from plain C. */
#include <parakat/parakat.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__,    \
                    __LINE__, #cond);                                       \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static char buf[4096];

static const char* tuple_text(const pk_tuple* t) {
    size_t len = sizeof buf;
    if (pk_tuple_format(t, PK_FORMAT_TEXT, buf, &len) != PK_OK)
        return "<error>";
    return buf;
}

static int count_cb(const pk_perm* p, void* ctx) {
    (void)p;
    ++*(int*)ctx;
    return 0;
}

static int stop_after_two(const pk_tableau* t, void* ctx) {
    (void)t;
    return ++*(int*)ctx >= 2;
}

static void test_core_and_maps(void) {
    const int R[] = {3, 8};
    const int e[] = {7, 9, 6, 5, 5, 9, 8, 9, 9};
    pk_tuple* t = NULL;
    pk_tuple* d = NULL;
    EXPECT(pk_tuple_new(9, R, 2, e, 9, &t) == PK_OK);
    EXPECT(pk_core(t, &d) == PK_OK);
    EXPECT(strcmp(tuple_text(d), "(4,5,6;4,5,7,8,9;9)") == 0);

    pk_perm* p = NULL;
    pk_tuple* psi = NULL;
    const int w[] = {2, 4, 6, 1, 5, 7, 8, 9, 3};
    EXPECT(pk_perm_new(9, R, 2, w, 9, &p) == PK_OK);
    EXPECT(pk_rank_tuple(p, &psi) == PK_OK);
    EXPECT(strcmp(tuple_text(psi), "(2,4,6;5,6,7,8,9;9)") == 0);

    pk_classification c;
    EXPECT(pk_classify(t, &c) == PK_OK);
    EXPECT(c.upper == 1 && c.r_increasing == 0);

    pk_critlist* cl = NULL;
    EXPECT(pk_critical_list(t, &cl) == PK_OK);
    int flag = -1;
    EXPECT(pk_critlist_is_flag(cl, &flag) == PK_OK);

    pk_tuple_free(t);
    pk_tuple_free(d);
    pk_tuple_free(psi);
    pk_perm_free(p);
    pk_critlist_free(cl);
}

static void test_buffers_and_errors(void) {
    const int R[] = {2};
    const int e[] = {1, 1, 3};
    pk_tuple* t = NULL;
    EXPECT(pk_tuple_new(3, R, 1, e, 3, &t) == PK_OK);
    pk_tuple* d = NULL;
    EXPECT(pk_core(t, &d) == PK_ERR_NOT_UPPER);
    EXPECT(d == NULL);
    EXPECT(strcmp(pk_status_name(PK_ERR_NOT_UPPER), "NotUpper") == 0);
    EXPECT(strlen(pk_last_error()) > 0);

    size_t len = 0;
    EXPECT(pk_tuple_format(t, PK_FORMAT_TEXT, NULL, &len) == PK_ERR_INSUFFICIENT_BUFFER);
    EXPECT(len == strlen("(1,1;3)") + 1);
    char small[4];
    len = sizeof small;
    EXPECT(pk_tuple_format(t, PK_FORMAT_TEXT, small, &len) == PK_ERR_INSUFFICIENT_BUFFER);
    char exact[8];
    len = sizeof exact;
    EXPECT(pk_tuple_format(t, PK_FORMAT_TEXT, exact, &len) == PK_OK);
    EXPECT(strcmp(exact, "(1,1;3)") == 0);
    pk_tuple_free(t);

    EXPECT(pk_tuple_new(3, R, 1, e, 2, &t) == PK_ERR_INVALID_ARGUMENT);
    EXPECT(pk_core(NULL, &d) == PK_ERR_NULL_POINTER);
    EXPECT(pk_tuple_from_json("{not json", &t) == PK_ERR_INVALID_ARGUMENT);
    EXPECT(strcmp(pk_status_name(-12345), "Unknown") == 0);
    pk_tuple_free(NULL);
}

static void test_json_round_trip(void) {
    pk_tuple* t = NULL;
    EXPECT(pk_tuple_from_json("{\"n\":3,\"R\":[1],\"entries\":[2,2,3]}", &t) == PK_OK);
    size_t len = sizeof buf;
    EXPECT(pk_tuple_format(t, PK_FORMAT_JSON, buf, &len) == PK_OK);
    EXPECT(strcmp(buf, "{\"n\":3,\"R\":[1],\"entries\":[2,2,3]}") == 0);
    pk_tuple_free(t);
}

static void test_counts_and_lifts(void) {
    const int full[] = {1, 2, 3};
    uint64_t v = 0;
    EXPECT(pk_count_cnr(4, full, 3, &v) == PK_OK && v == 14);
    EXPECT(pk_count_total(4, &v) == PK_OK && v == 56);
    EXPECT(pk_count_ui(3, full, 2, &v) == PK_OK && v == 6);

    const int R[] = {2};
    const int w[] = {2, 3, 1};
    pk_perm* p = NULL;
    EXPECT(pk_perm_new(3, R, 1, w, 3, &p) == PK_OK);
    int n = 0;
    EXPECT(pk_lifts_for_each(p, count_cb, &n) == PK_OK);
    EXPECT(n == 2);
    int avoid = 0;
    EXPECT(pk_is_r312_avoiding(p, &avoid) == PK_OK && avoid == 1);
    pk_perm_free(p);

    n = 0;
    EXPECT(pk_perms_for_each(4, full, 3, 1, count_cb, &n) == PK_OK);
    EXPECT(n == 14);
}

static void test_sets_and_polys(void) {
    const int parts[] = {1, 1, 0};
    pk_shape* s = NULL;
    EXPECT(pk_shape_new(parts, 3, &s) == PK_OK);
    const int R[] = {2};
    const int b1[] = {3, 3, 3}, b2[] = {2, 3, 3}, w[] = {2, 3, 1};
    pk_tuple *beta1 = NULL, *beta2 = NULL;
    pk_perm* p = NULL;
    EXPECT(pk_tuple_new(3, R, 1, b1, 3, &beta1) == PK_OK);
    EXPECT(pk_tuple_new(3, R, 1, b2, 3, &beta2) == PK_OK);
    EXPECT(pk_perm_new(3, R, 1, w, 3, &p) == PK_OK);

    pk_poly *s1 = NULL, *s2 = NULL, *d = NULL, *dd = NULL;
    EXPECT(pk_poly_row_bound_sum(beta1, s, 0, &s1) == PK_OK);
    EXPECT(pk_poly_row_bound_sum(beta2, s, 0, &s2) == PK_OK);
    EXPECT(pk_poly_demazure(p, s, 0, &d) == PK_OK);
    EXPECT(pk_poly_demazure_dd(p, s, &dd) == PK_OK);
    size_t len = sizeof buf;
    EXPECT(pk_poly_format(s1, PK_FORMAT_TEXT, buf, &len) == PK_OK);
    EXPECT(strcmp(buf, "x1*x2 + x1*x3 + x2*x3") == 0);
    int eq = 0, same = 0;
    EXPECT(pk_poly_equal(s1, d, &eq) == PK_OK && eq == 1);
    EXPECT(pk_poly_equal(dd, d, &eq) == PK_OK && eq == 1);
    EXPECT(pk_poly_identical(s1, s2, &same) == PK_OK && same == 1);
    EXPECT(pk_poly_identical(dd, d, &same) == PK_ERR_INVALID_ARGUMENT);
    uint64_t f1 = 0, f2 = 0;
    EXPECT(pk_poly_fingerprint(s1, &f1) == PK_OK && pk_poly_fingerprint(d, &f2) == PK_OK && f1 == f2);

    pk_tabset *set = NULL, *dset = NULL;
    EXPECT(pk_set_row_bound(beta1, s, 0, &set) == PK_OK);
    EXPECT(pk_set_demazure(p, s, 0, &dset) == PK_OK);
    uint64_t size = 0;
    EXPECT(pk_set_size(set, &size) == PK_OK && size == 3);
    EXPECT(pk_set_equal(set, dset, &eq) == PK_OK && eq == 1);
    int convex = 0;
    EXPECT(pk_set_is_convex(set, &convex) == PK_OK && convex == 1);
    EXPECT(pk_set_row_bound(beta1, s, 2, &set) == PK_ERR_CAP_EXCEEDED);

    int seen = 0;
    EXPECT(pk_stream_row_bound(beta1, s, stop_after_two, &seen) == PK_OK);
    EXPECT(seen == 2);

    int alpha[3];
    len = 3;
    EXPECT(pk_compose_alpha(p, s, alpha, &len) == PK_OK && len == 3);
    EXPECT(alpha[0] == 0 && alpha[1] == 1 && alpha[2] == 1);

    pk_set_free(set);
    pk_set_free(dset);
    pk_poly_free(s1);
    pk_poly_free(s2);
    pk_poly_free(d);
    pk_poly_free(dd);
    pk_tuple_free(beta1);
    pk_tuple_free(beta2);
    pk_perm_free(p);
    pk_shape_free(s);
}

static void test_tableaux(void) {
    const int parts[] = {2, 1, 0};
    pk_shape* s = NULL;
    EXPECT(pk_shape_new(parts, 3, &s) == PK_OK);
    const int vals[] = {1, 3, 2};
    pk_tableau *t = NULL, *k = NULL;
    EXPECT(pk_tableau_new(s, vals, 3, &t) == PK_OK);
    EXPECT(pk_scanning(t, &k) == PK_OK);
    size_t len = sizeof buf;
    EXPECT(pk_tableau_format(k, PK_FORMAT_TEXT, buf, &len) == PK_OK);
    EXPECT(strcmp(buf, "(2,3|2)") == 0);
    int key = 0;
    EXPECT(pk_tableau_is_key(k, &key) == PK_OK && key == 1);

    const int R[] = {1, 2};
    const int w[] = {3, 1, 2};
    pk_perm* p = NULL;
    pk_tabset* d = NULL;
    EXPECT(pk_perm_new(3, R, 2, w, 3, &p) == PK_OK);
    EXPECT(pk_set_demazure(p, s, 0, &d) == PK_OK);
    uint64_t size = 0;
    int convex = 1;
    EXPECT(pk_set_size(d, &size) == PK_OK && size == 5);
    EXPECT(pk_set_is_convex(d, &convex) == PK_OK && convex == 0);

    pk_tableau_free(t);
    pk_tableau_free(k);
    pk_perm_free(p);
    pk_set_free(d);
    pk_shape_free(s);
}

static void test_verify(void) {
    pk_suite_options opt;
    pk_suite_options_init(&opt);
    opt.max_n = 3;
    opt.max_col = 2;
    pk_report* r = NULL;
    EXPECT(pk_suite_run("convexity", &opt, &r) == PK_OK);
    int passed = 0;
    EXPECT(pk_report_passed(r, &passed) == PK_OK && passed == 1);
    uint64_t bad = 1;
    EXPECT(pk_report_counterexamples(r, &bad) == PK_OK && bad == 0);
    size_t len = sizeof buf;
    EXPECT(pk_report_format(r, PK_FORMAT_JSON, buf, &len) == PK_OK);
    EXPECT(strstr(buf, "\"verdict\":\"pass\"") != NULL);
    pk_report_free(r);

    opt.max_n = 9;
    EXPECT(pk_suite_run("convexity", &opt, &r) == PK_ERR_CAP_EXCEEDED);
    EXPECT(pk_suite_run("nonsense", &opt, &r) == PK_ERR_INVALID_ARGUMENT);
}

int main(void) {
    EXPECT(strlen(pk_version()) > 0);
    test_core_and_maps();
    test_buffers_and_errors();
    test_json_round_trip();
    test_counts_and_lifts();
    test_sets_and_polys();
    test_tableaux();
    test_verify();
    if (failures) {
        fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    puts("C API: all expectations met");
    return 0;
}

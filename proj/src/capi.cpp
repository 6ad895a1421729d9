#include "parakat/parakat.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "parakat/serialize.hpp"
#include "parakat/verify.hpp"

using namespace parakat;

struct pk_tuple {
    RTuple value;
};
struct pk_critlist {
    CriticalList value;
};
struct pk_perm {
    RPermutation value;
};
struct pk_shape {
    Shape value;
};
struct pk_tableau {
    Tableau value;
};
struct pk_tabset {
    std::shared_ptr<const TableauSet> value;
};
struct pk_poly {
    GFHandle value;
};
struct pk_report {
    SuiteReport value;
};

namespace {

thread_local std::string g_last_error;

int status_of(ErrorCode code) { return -(static_cast<int>(code) + 1); }

struct CapiError {
    int status;
    std::string message;
};

[[noreturn]] void raise(int status, std::string message) { throw CapiError{status, std::move(message)}; }

template <class F>
int guard(F&& f) noexcept {
    try {
        g_last_error.clear();
        f();
        return PK_OK;
    } catch (const CapiError& e) {
        g_last_error = e.message;
        return e.status;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PK_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PK_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return PK_ERR_INTERNAL;
    }
}

template <class... P>
void need(const P&... ptrs) {
    if (((ptrs == nullptr) || ...))
        raise(PK_ERR_NULL_POINTER, "null pointer argument");
}

void put_string(const std::string& s, char* out, std::size_t* out_len) {
    need(out_len);
    const std::size_t cap = *out_len;
    *out_len = s.size() + 1;
    if (out == nullptr || cap < s.size() + 1)
        raise(PK_ERR_INSUFFICIENT_BUFFER, "output buffer too small");
    std::memcpy(out, s.c_str(), s.size() + 1);
}

void put_ints(const std::vector<int>& v, int* out, std::size_t* out_len) {
    need(out_len);
    const std::size_t cap = *out_len;
    *out_len = v.size();
    if (v.empty())
        return;
    if (out == nullptr || cap < v.size())
        raise(PK_ERR_INSUFFICIENT_BUFFER, "output buffer too small");
    std::memcpy(out, v.data(), v.size() * sizeof(int));
}

std::vector<int> ints(const int* p, std::size_t len) {
    if (len && p == nullptr)
        raise(PK_ERR_NULL_POINTER, "null array with nonzero length");
    return len ? std::vector<int>(p, p + len) : std::vector<int>{};
}

RSubset rsubset(int n, const int* R, std::size_t r) { return RSubset(n, ints(R, r)); }

template <class T>
std::string render(const T& v, pk_format fmt) {
    switch (fmt) {
    case PK_FORMAT_TEXT:
        return to_text(v);
    case PK_FORMAT_JSON:
        return to_json(v).dump();
    case PK_FORMAT_CSV:
        return to_csv(v);
    }
    raise(PK_ERR_INVALID_ARGUMENT, "unknown format");
}

Json parse_json(const char* text) {
    need(text);
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        raise(PK_ERR_INVALID_ARGUMENT, std::string("malformed JSON: ") + e.what());
    }
}

Limits limits_of(std::uint64_t cap) {
    Limits l = default_limits();
    if (cap)
        l.cap = cap;
    return l;
}

template <class H, class V>
void emit(H** out, V&& value) {
    need(out);
    *out = new H{std::forward<V>(value)};
}

bool bool_of(int v) { return v != 0; }

Classification from_c(const pk_classification& c) {
    Classification k;
    k.upper = bool_of(c.upper);
    k.flag = bool_of(c.flag);
    k.r_increasing = bool_of(c.r_increasing);
    k.gapless = bool_of(c.gapless);
    k.gapless_core = bool_of(c.gapless_core);
    k.shell = bool_of(c.shell);
    k.canopy = bool_of(c.canopy);
    k.floor_flag = bool_of(c.floor_flag);
    k.ceiling_flag = bool_of(c.ceiling_flag);
    return k;
}

SuiteOptions options_of(const pk_suite_options* opt) {
    SuiteOptions o;
    if (opt) {
        o.max_n = opt->max_n;
        o.max_col = opt->max_col;
        o.all_shapes = opt->all_shapes != 0;
        o.jobs = opt->jobs;
        o.limits = limits_of(opt->cap);
        o.budget = opt->budget;
    }
    return o;
}

int null_arg() {
    return guard([] { raise(PK_ERR_NULL_POINTER, "null pointer argument"); });
}

// Stops an enumeration from inside a std::function visitor.
struct StopWalk {};

} // namespace

extern "C" {

// ------------------------------------------------------------- general

const char* pk_version(void) { return PARAKAT_VERSION; }

const char* pk_status_name(int status) {
    switch (status) {
    case PK_OK:
        return "Ok";
    case PK_ERR_INSUFFICIENT_BUFFER:
        return "InsufficientBuffer";
    case PK_ERR_NULL_POINTER:
        return "NullPointer";
    case PK_ERR_INTERNAL:
        return "Internal";
    default:
        break;
    }
    if (status <= -1 && status >= status_of(ErrorCode::BudgetExceeded))
        return error_name(static_cast<ErrorCode>(-status - 1)).data();
    return "Unknown";
}

const char* pk_last_error(void) { return g_last_error.c_str(); }

int pk_parse_list(const char* text, int* out, size_t* out_len, int* dividers, size_t* dividers_len) {
    return guard([&] {
        need(text);
        std::vector<int> div;
        const auto values = parse_int_list(text, &div);
        if (dividers_len)
            put_ints(div, dividers, dividers_len);
        put_ints(values, out, out_len);
    });
}

// -------------------------------------------------------------- tuples

int pk_tuple_new(int n, const int* R, size_t r, const int* entries, size_t len, pk_tuple** out) {
    return guard([&] { emit(out, RTuple(rsubset(n, R, r), ints(entries, len))); });
}

int pk_tuple_from_json(const char* json, pk_tuple** out) {
    return guard([&] { emit(out, tuple_from_json(parse_json(json))); });
}

void pk_tuple_free(pk_tuple* t) { delete t; }

int pk_tuple_n(const pk_tuple* t, int* n) {
    return guard([&] {
        need(t, n);
        *n = t->value.n();
    });
}

int pk_tuple_entries(const pk_tuple* t, int* out, size_t* out_len) {
    return guard([&] {
        need(t);
        put_ints(t->value.entries(), out, out_len);
    });
}

int pk_tuple_dividers(const pk_tuple* t, int* out, size_t* out_len) {
    return guard([&] {
        need(t);
        put_ints(t->value.rsubset().dividers(), out, out_len);
    });
}

int pk_tuple_format(const pk_tuple* t, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(t);
        put_string(render(t->value, fmt), out, out_len);
    });
}

int pk_classify(const pk_tuple* t, pk_classification* out) {
    return guard([&] {
        need(t, out);
        const Classification c = classify(t->value);
        *out = pk_classification{c.upper,  c.flag,   c.r_increasing, c.gapless,      c.gapless_core,
                                 c.shell,  c.canopy, c.floor_flag,   c.ceiling_flag};
    });
}

int pk_classification_format(const pk_classification* c, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(c);
        put_string(render(from_c(*c), fmt), out, out_len);
    });
}

int pk_critical_list(const pk_tuple* t, pk_critlist** out) {
    return guard([&] {
        need(t);
        emit(out, critical_list(t->value));
    });
}

int pk_core(const pk_tuple* t, pk_tuple** out) {
    return guard([&] {
        need(t);
        emit(out, core(t->value));
    });
}

int pk_floor_map(const pk_tuple* g, pk_tuple** out) {
    return guard([&] {
        need(g);
        emit(out, floor_map(g->value));
    });
}

int pk_ceiling_map(const pk_tuple* g, pk_tuple** out) {
    return guard([&] {
        need(g);
        emit(out, ceiling_map(g->value));
    });
}

int pk_equivalent(const pk_tuple* a, const pk_tuple* b, int* out) {
    return guard([&] {
        need(a, b, out);
        *out = equivalent(a->value, b->value);
    });
}

int pk_class_interval(const pk_tuple* t, pk_tuple** min, pk_tuple** max) {
    return guard([&] {
        need(t, min, max);
        auto [lo, hi] = class_interval(t->value);
        auto lo_h = std::make_unique<pk_tuple>(pk_tuple{std::move(lo)});
        *max = new pk_tuple{std::move(hi)};
        *min = lo_h.release();
    });
}

int pk_in_family(const pk_tuple* t, pk_family family, int* out) {
    return guard([&] {
        need(t, out);
        *out = in_family(t->value, static_cast<Family>(family));
    });
}

int pk_family_from_name(const char* name, pk_family* out) {
    return guard([&] {
        need(name, out);
        *out = static_cast<pk_family>(parse_family(name));
    });
}

int pk_kind_from_name(const char* name, pk_kind* out) {
    return guard([&] {
        need(name, out);
        *out = static_cast<pk_kind>(parse_tuple_kind(name));
    });
}

int pk_tuples_for_each(int n, const int* R, size_t r, pk_family family, pk_tuple_cb cb, void* ctx) {
    return guard([&] {
        need(cb);
        try {
            for_each_tuple(rsubset(n, R, r), static_cast<Family>(family), [&](const RTuple& t) {
                const pk_tuple h{t};
                if (cb(&h, ctx))
                    throw StopWalk{};
            });
        } catch (const StopWalk&) {
        }
    });
}

int pk_tuples_count(int n, const int* R, size_t r, pk_family family, uint64_t* out) {
    return guard([&] {
        need(out);
        std::uint64_t count = 0;
        for_each_tuple(rsubset(n, R, r), static_cast<Family>(family), [&](const RTuple&) { ++count; });
        *out = count;
    });
}

// ------------------------------------------------------ critical lists

int pk_critlist_new(int n, const int* R, size_t r, const int* pairs, const size_t* pair_counts, size_t carrels,
                    pk_critlist** out) {
    return guard([&] {
        if (carrels)
            need(pair_counts);
        std::vector<std::vector<CriticalPair>> c(carrels);
        std::size_t at = 0;
        for (std::size_t h = 0; h < carrels; ++h) {
            if (pair_counts[h])
                need(pairs);
            for (std::size_t u = 0; u < pair_counts[h]; ++u, at += 2)
                c[h].push_back({pairs[at], pairs[at + 1]});
        }
        emit(out, CriticalList(rsubset(n, R, r), std::move(c)));
    });
}

int pk_critlist_from_json(const char* json, pk_critlist** out) {
    return guard([&] { emit(out, critlist_from_json(parse_json(json))); });
}

void pk_critlist_free(pk_critlist* c) { delete c; }

int pk_critlist_is_flag(const pk_critlist* c, int* out) {
    return guard([&] {
        need(c, out);
        *out = c->value.is_flag();
    });
}

int pk_critlist_format(const pk_critlist* c, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(c);
        put_string(render(c->value, fmt), out, out_len);
    });
}

int pk_from_critical_list(const pk_critlist* c, pk_kind kind, pk_tuple** out) {
    return guard([&] {
        need(c);
        emit(out, from_critical_list(c->value, static_cast<TupleKind>(kind)));
    });
}

// -------------------------------------------------------- permutations

int pk_perm_new(int n, const int* R, size_t r, const int* one_line, size_t len, pk_perm** out) {
    return guard([&] { emit(out, RPermutation(rsubset(n, R, r), ints(one_line, len))); });
}

int pk_perm_from_json(const char* json, pk_perm** out) {
    return guard([&] { emit(out, perm_from_json(parse_json(json))); });
}

void pk_perm_free(pk_perm* p) { delete p; }

int pk_perm_one_line(const pk_perm* p, int* out, size_t* out_len) {
    return guard([&] {
        need(p);
        put_ints(p->value.one_line(), out, out_len);
    });
}

int pk_perm_format(const pk_perm* p, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(p);
        put_string(render(p->value, fmt), out, out_len);
    });
}

int pk_perm_chain_format(const pk_perm* p, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(p);
        const RChain b = to_chain(p->value);
        std::string s;
        if (fmt == PK_FORMAT_JSON) {
            s = to_json(b).dump();
        } else if (fmt == PK_FORMAT_CSV) {
            s = "h,block\n";
            for (std::size_t h = 0; h < b.sets().size(); ++h)
                s += std::to_string(h + 1) + "," + join_ints(b.sets()[h], ' ') + "\n";
        } else {
            s = to_text(b);
        }
        put_string(s, out, out_len);
    });
}

int pk_r_projection(const int* sigma, size_t len, const int* R, size_t r, pk_perm** out) {
    return guard([&] {
        const auto w = ints(sigma, len);
        require(is_permutation(w), ErrorCode::InvalidArgument, "not a permutation");
        emit(out, r_projection(w, rsubset(static_cast<int>(len), R, r)));
    });
}

int pk_is_r312_avoiding(const pk_perm* p, int* out) {
    return guard([&] {
        need(p, out);
        *out = is_r312_avoiding(p->value);
    });
}

int pk_inversions(const pk_perm* p, int* out) {
    return guard([&] {
        need(p, out);
        *out = inversion_count(p->value.one_line());
    });
}

int pk_rank_tuple(const pk_perm* p, pk_tuple** out) {
    return guard([&] {
        need(p);
        emit(out, rank_tuple(p->value));
    });
}

int pk_pi_map(const pk_tuple* g, pk_perm** out) {
    return guard([&] {
        need(g);
        emit(out, pi_map(g->value));
    });
}

int pk_minimal_lift(const pk_perm* p, pk_perm** out) {
    return guard([&] {
        need(p);
        emit(out, minimal_lift(p->value));
    });
}

int pk_lifts_for_each(const pk_perm* p, pk_perm_cb cb, void* ctx) {
    return guard([&] {
        need(p, cb);
        for (const auto& s : all_lifts(p->value)) {
            const pk_perm h{s};
            if (cb(&h, ctx))
                break;
        }
    });
}

int pk_perms_for_each(int n, const int* R, size_t r, int avoiding_only, pk_perm_cb cb, void* ctx) {
    return guard([&] {
        need(cb);
        try {
            for_each_rperm(rsubset(n, R, r), avoiding_only != 0, [&](const RPermutation& p) {
                const pk_perm h{p};
                if (cb(&h, ctx))
                    throw StopWalk{};
            });
        } catch (const StopWalk&) {
        }
    });
}

int pk_count_cnr(int n, const int* R, size_t r, uint64_t* out) {
    return guard([&] {
        need(out);
        *out = count_cnr(rsubset(n, R, r));
    });
}

int pk_count_total(int n, uint64_t* out) {
    return guard([&] {
        need(out);
        require(n >= 1, ErrorCode::InvalidArgument, "n must be positive");
        *out = count_total(n);
    });
}

int pk_count_ui(int n, const int* R, size_t r, uint64_t* out) {
    return pk_tuples_count(n, R, r, PK_FAMILY_INCREASING, out);
}

// -------------------------------------------------------------- shapes

int pk_shape_new(const int* parts, size_t n, pk_shape** out) {
    return guard([&] { emit(out, Shape(ints(parts, n))); });
}

void pk_shape_free(pk_shape* s) { delete s; }

int pk_shape_dividers(const pk_shape* s, int* out, size_t* out_len) {
    return guard([&] {
        need(s);
        put_ints(s->value.rsubset().dividers(), out, out_len);
    });
}

// ------------------------------------------------------------ tableaux

int pk_tableau_new(const pk_shape* s, const int* values, size_t len, pk_tableau** out) {
    return guard([&] {
        need(s);
        const Shape& shape = s->value;
        const auto flat = ints(values, len);
        require(flat.size() == static_cast<std::size_t>(shape.size()), ErrorCode::InvalidArgument,
                "tableau value count differs from |lambda|");
        std::vector<std::vector<int>> cols;
        std::size_t at = 0;
        for (int j = 1; j <= shape.width(); ++j) {
            const auto len_j = static_cast<std::size_t>(shape.column_length(j));
            cols.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(at),
                              flat.begin() + static_cast<std::ptrdiff_t>(at + len_j));
            at += len_j;
        }
        emit(out, Tableau(shape, std::move(cols)));
    });
}

int pk_tableau_from_json(const char* json, pk_tableau** out) {
    return guard([&] { emit(out, tableau_from_json(parse_json(json))); });
}

void pk_tableau_free(pk_tableau* t) { delete t; }

int pk_tableau_format(const pk_tableau* t, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(t);
        put_string(render(t->value, fmt), out, out_len);
    });
}

int pk_tableau_is_key(const pk_tableau* t, int* out) {
    return guard([&] {
        need(t, out);
        *out = t->value.is_key();
    });
}

int pk_is_gapless_key(const pk_tableau* t, int* out) {
    return guard([&] {
        need(t, out);
        *out = is_gapless_key(t->value);
    });
}

int pk_key_of_perm(const pk_perm* p, const pk_shape* s, pk_tableau** out) {
    return guard([&] {
        need(p, s);
        emit(out, key_of_perm(p->value, s->value));
    });
}

int pk_row_end_list(const pk_tableau* t, pk_tuple** out) {
    return guard([&] {
        need(t);
        emit(out, row_end_list(t->value));
    });
}

int pk_content(const pk_tableau* t, int* out, size_t* out_len) {
    return guard([&] {
        need(t);
        put_ints(content(t->value), out, out_len);
    });
}

int pk_row_end_max(const pk_tuple* alpha, const pk_shape* s, pk_tableau** out) {
    return guard([&] {
        need(alpha, s);
        emit(out, row_end_max(alpha->value, s->value));
    });
}

int pk_row_bound_max(const pk_tuple* beta, const pk_shape* s, pk_tableau** out) {
    return guard([&] {
        need(beta, s);
        emit(out, row_bound_max(beta->value, s->value));
    });
}

int pk_scanning(const pk_tableau* t, pk_tableau** out) {
    return guard([&] {
        need(t);
        emit(out, scanning(t->value));
    });
}

// -------------------------------------------------------- tableau sets

} // extern "C"

namespace {

template <class F>
int make_set(pk_tabset** out, F&& build) {
    return guard([&] { emit(out, std::make_shared<const TableauSet>(build())); });
}

int stream(const Shape& shape, const std::optional<Tableau>& upper,
           const std::function<bool(const Tableau&)>& keep, pk_tableau_cb cb, void* ctx) {
    return guard([&] {
        need(cb);
        for_each_tableau(shape, upper, [&](const Tableau& t) {
            if (!keep(t))
                return true;
            const pk_tableau h{t};
            return cb(&h, ctx) == 0;
        });
    });
}

} // namespace

extern "C" {

int pk_set_row_bound(const pk_tuple* beta, const pk_shape* s, uint64_t cap, pk_tabset** out) {
    if (!beta || !s)
        return null_arg();
    return make_set(out, [&] { return row_bound_set(beta->value, s->value, limits_of(cap)); });
}

int pk_set_demazure(const pk_perm* p, const pk_shape* s, uint64_t cap, pk_tabset** out) {
    if (!p || !s)
        return null_arg();
    return make_set(out, [&] { return demazure_set(p->value, s->value, limits_of(cap)); });
}

int pk_set_ideal(const pk_tableau* t, uint64_t cap, pk_tabset** out) {
    if (!t)
        return null_arg();
    return make_set(out, [&] { return ideal(t->value, limits_of(cap)); });
}

int pk_set_z(const pk_tuple* alpha, const pk_shape* s, uint64_t cap, pk_tabset** out) {
    if (!alpha || !s)
        return null_arg();
    return make_set(out, [&] { return z_set(alpha->value, s->value, limits_of(cap)); });
}

int pk_set_all(const pk_shape* s, uint64_t cap, pk_tabset** out) {
    if (!s)
        return null_arg();
    return make_set(out, [&] { return all_tableaux(s->value, limits_of(cap)); });
}

void pk_set_free(pk_tabset* set) { delete set; }

int pk_set_size(const pk_tabset* set, uint64_t* out) {
    return guard([&] {
        need(set, out);
        *out = set->value->size();
    });
}

int pk_set_is_convex(const pk_tabset* set, int* out) {
    return guard([&] {
        need(set, out);
        *out = is_convex(*set->value);
    });
}

int pk_set_equal(const pk_tabset* a, const pk_tabset* b, int* out) {
    return guard([&] {
        need(a, b, out);
        *out = *a->value == *b->value;
    });
}

int pk_set_format(const pk_tabset* set, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(set);
        std::string s;
        if (fmt == PK_FORMAT_JSON) {
            s = to_json(*set->value).dump();
        } else if (fmt == PK_FORMAT_CSV) {
            s = to_csv(*set->value);
        } else {
            for (const auto& t : set->value->members())
                s += to_text(t) + "\n";
        }
        put_string(s, out, out_len);
    });
}

int pk_set_for_each(const pk_tabset* set, pk_tableau_cb cb, void* ctx) {
    return guard([&] {
        need(set, cb);
        for (const auto& t : set->value->members()) {
            const pk_tableau h{t};
            if (cb(&h, ctx))
                break;
        }
    });
}

int pk_stream_row_bound(const pk_tuple* beta, const pk_shape* s, pk_tableau_cb cb, void* ctx) {
    if (!beta || !s)
        return null_arg();
    std::optional<Tableau> upper;
    const int st = guard([&] { upper = row_bound_max(beta->value, s->value); });
    if (st != PK_OK)
        return st;
    return stream(s->value, upper, [](const Tableau&) { return true; }, cb, ctx);
}

int pk_stream_demazure(const pk_perm* p, const pk_shape* s, pk_tableau_cb cb, void* ctx) {
    if (!p || !s)
        return null_arg();
    std::optional<Tableau> key;
    const int st = guard([&] { key = key_of_perm(p->value, s->value); });
    if (st != PK_OK)
        return st;
    const Tableau y = *key;
    return stream(s->value, key, [&](const Tableau& t) { return scanning(t).leq(y); }, cb, ctx);
}

int pk_stream_ideal(const pk_tableau* t, pk_tableau_cb cb, void* ctx) {
    if (!t)
        return null_arg();
    return stream(t->value.shape(), t->value, [](const Tableau&) { return true; }, cb, ctx);
}

int pk_stream_z(const pk_tuple* alpha, const pk_shape* s, pk_tableau_cb cb, void* ctx) {
    if (!alpha || !s)
        return null_arg();
    std::optional<Tableau> upper;
    const int st = guard([&] { upper = row_end_max(alpha->value, s->value); });
    if (st != PK_OK)
        return st;
    const RTuple a = alpha->value;
    return stream(s->value, upper, [&](const Tableau& t) { return row_end_list(t).entries() == a.entries(); }, cb,
                  ctx);
}

// --------------------------------------------------------- polynomials

int pk_poly_of_set(const pk_tabset* set, pk_poly** out) {
    return guard([&] {
        need(set);
        emit(out, GFHandle{weight_sum(*set->value), "set", set->value});
    });
}

int pk_poly_row_bound_sum(const pk_tuple* beta, const pk_shape* s, uint64_t cap, pk_poly** out) {
    return guard([&] {
        need(beta, s);
        emit(out, row_bound_sum(beta->value, s->value, limits_of(cap)));
    });
}

int pk_poly_flag_schur(const pk_tuple* phi, const pk_shape* s, uint64_t cap, pk_poly** out) {
    return guard([&] {
        need(phi, s);
        emit(out, flag_schur(phi->value, s->value, limits_of(cap)));
    });
}

int pk_poly_demazure(const pk_perm* p, const pk_shape* s, uint64_t cap, pk_poly** out) {
    return guard([&] {
        need(p, s);
        emit(out, demazure_poly(p->value, s->value, limits_of(cap)));
    });
}

int pk_poly_demazure_dd(const pk_perm* p, const pk_shape* s, pk_poly** out) {
    return guard([&] {
        need(p, s);
        emit(out, GFHandle{demazure_poly_dd(p->value, s->value), "divided differences", nullptr});
    });
}

void pk_poly_free(pk_poly* p) { delete p; }

int pk_poly_format(const pk_poly* p, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(p);
        put_string(render(p->value.poly, fmt), out, out_len);
    });
}

int pk_poly_equal(const pk_poly* a, const pk_poly* b, int* out) {
    return guard([&] {
        need(a, b, out);
        *out = poly_eq(a->value, b->value);
    });
}

int pk_poly_identical(const pk_poly* a, const pk_poly* b, int* out) {
    return guard([&] {
        need(a, b, out);
        require(a->value.set && b->value.set, ErrorCode::InvalidArgument,
                "identity needs polynomials carrying their tableau sets");
        *out = gf_identical(a->value, b->value);
    });
}

int pk_poly_fingerprint(const pk_poly* p, uint64_t* out) {
    return guard([&] {
        need(p, out);
        *out = fingerprint(p->value.poly);
    });
}

int pk_compose_alpha(const pk_perm* p, const pk_shape* s, int* out, size_t* out_len) {
    return guard([&] {
        need(p, s);
        put_ints(compose_alpha(p->value, s->value), out, out_len);
    });
}

// -------------------------------------------------------------- verify

void pk_suite_options_init(pk_suite_options* opt) {
    if (!opt)
        return;
    const SuiteOptions d;
    *opt = pk_suite_options{d.max_n, d.max_col, d.all_shapes ? 1 : 0, d.jobs, 0, d.budget};
}

int pk_suite_run(const char* name, const pk_suite_options* opt, pk_report** out) {
    return guard([&] {
        need(name);
        emit(out, run_suite(name, options_of(opt)));
    });
}

void pk_report_free(pk_report* r) { delete r; }

int pk_report_passed(const pk_report* r, int* out) {
    return guard([&] {
        need(r, out);
        *out = r->value.verdict == Verdict::pass;
    });
}

int pk_report_counterexamples(const pk_report* r, uint64_t* out) {
    return guard([&] {
        need(r, out);
        *out = r->value.counterexample_count;
    });
}

int pk_report_format(const pk_report* r, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] {
        need(r);
        put_string(render(r->value, fmt), out, out_len);
    });
}

int pk_dimension_table(const pk_suite_options* opt, pk_format fmt, char* out, size_t* out_len) {
    return guard([&] { put_string(render(dimension_table(options_of(opt)), fmt), out, out_len); });
}

} // extern "C"

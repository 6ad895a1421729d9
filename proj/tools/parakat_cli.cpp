// Command-line front end. Talks to the library only through parakat.h.
#include <parakat/parakat.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitInternal = 70;
constexpr int kExitSuiteFail = 2;
constexpr int kExitSuiteLimit = 3;
constexpr int kConfigVersion = 1;

struct Failure {
    int status;
    std::string message;
};

struct UsageError {
    std::string message;
};

void check(int status) {
    if (status != PK_OK)
        throw Failure{status, pk_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw UsageError{message}; }

// ------------------------------------------------------------ RAII handles

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
    ~Handle() { Free(p); }
    T** out() { return &p; }
    T* get() const { return p; }
};

using Tuple = Handle<pk_tuple, pk_tuple_free>;
using CritList = Handle<pk_critlist, pk_critlist_free>;
using Perm = Handle<pk_perm, pk_perm_free>;
using ShapeH = Handle<pk_shape, pk_shape_free>;
using TableauH = Handle<pk_tableau, pk_tableau_free>;
using TabSet = Handle<pk_tabset, pk_set_free>;
using Poly = Handle<pk_poly, pk_poly_free>;
using Report = Handle<pk_report, pk_report_free>;

// Calls a (buffer, length) producer twice: once to size, once to fill.
std::string fetch(const std::function<int(char*, size_t*)>& f) {
    size_t len = 0;
    const int st = f(nullptr, &len);
    if (st != PK_ERR_INSUFFICIENT_BUFFER)
        check(st);
    std::string buf(len, '\0');
    check(f(buf.data(), &len));
    buf.resize(len ? len - 1 : 0);
    return buf;
}

std::vector<int> fetch_ints(const std::function<int(int*, size_t*)>& f) {
    size_t len = 0;
    const int st = f(nullptr, &len);
    if (st != PK_ERR_INSUFFICIENT_BUFFER)
        check(st);
    std::vector<int> v(len);
    check(f(v.data(), &len));
    v.resize(len);
    return v;
}

std::vector<int> parse_list(const std::string& text, std::vector<int>* dividers = nullptr) {
    std::vector<int> div;
    const auto values = fetch_ints([&](int* out, size_t* len) {
        size_t dlen = text.size() + 1;
        div.assign(dlen, 0);
        const int st = pk_parse_list(text.c_str(), out, len, div.data(), &dlen);
        div.resize(dlen);
        return st;
    });
    if (dividers)
        *dividers = div;
    return values;
}

std::string trimmed_list(std::string text) {
    for (char& c : text)
        if (c == '|')
            c = ',';
    return text;
}

bool looks_like_json(const std::string& s) {
    const auto at = s.find_first_not_of(" \t\n");
    return at != std::string::npos && s[at] == '{';
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// ------------------------------------------------------------ options

struct Options {
    std::string format = "text";
    std::optional<int> n;
    std::optional<std::string> R;
    std::optional<std::string> lambda;
    std::uint64_t cap = 0;
    int jobs = 1;
    int max_n = 4;
    int max_col = 3;
    bool all_shapes = false;
    std::uint64_t budget = 0;
    bool stream = false;
    bool count_only = false;
    std::string tuple, perm, sigma, tableau, critlist, kind = "increasing", family = "upper";
    std::string left, right;
    bool avoiding_only = false;
    std::string manifest;
    int config_version = kConfigVersion;

    pk_format fmt() const {
        if (format == "json")
            return PK_FORMAT_JSON;
        if (format == "csv")
            return PK_FORMAT_CSV;
        return PK_FORMAT_TEXT;
    }
};

Options opt;

std::vector<int> explicit_R() { return opt.R->empty() ? std::vector<int>{} : parse_list(*opt.R); }

ShapeH make_shape() {
    if (!opt.lambda)
        usage("--lambda is required");
    const auto parts = parse_list(*opt.lambda);
    if (opt.n && *opt.n != static_cast<int>(parts.size()))
        usage("--n disagrees with the length of --lambda");
    ShapeH s;
    check(pk_shape_new(parts.data(), parts.size(), s.out()));
    return s;
}

std::vector<int> shape_R(const ShapeH& s) {
    return fetch_ints([&](int* out, size_t* len) { return pk_shape_dividers(s.get(), out, len); });
}

// R from --R, else from semicolons in the literal, else from --lambda.
std::vector<int> resolve_R(const std::vector<int>& from_text, bool had_semicolons) {
    if (opt.R)
        return explicit_R();
    if (had_semicolons)
        return from_text;
    if (opt.lambda)
        return shape_R(make_shape());
    return {};
}

int resolve_n(std::size_t length) {
    if (opt.n && *opt.n != static_cast<int>(length))
        usage("--n disagrees with the number of entries");
    return static_cast<int>(length);
}

Tuple read_tuple(const std::string& text, const char* flag) {
    if (text.empty())
        usage(std::string(flag) + " is required");
    Tuple t;
    if (looks_like_json(text)) {
        check(pk_tuple_from_json(text.c_str(), t.out()));
        return t;
    }
    std::vector<int> div;
    const auto entries = parse_list(text, &div);
    const auto R = resolve_R(div, !div.empty());
    check(pk_tuple_new(resolve_n(entries.size()), R.data(), R.size(), entries.data(), entries.size(), t.out()));
    return t;
}

Perm read_perm(const std::string& text, const char* flag) {
    if (text.empty())
        usage(std::string(flag) + " is required");
    Perm p;
    if (looks_like_json(text)) {
        check(pk_perm_from_json(text.c_str(), p.out()));
        return p;
    }
    std::vector<int> div;
    const auto w = parse_list(text, &div);
    const auto R = resolve_R(div, !div.empty());
    check(pk_perm_new(resolve_n(w.size()), R.data(), R.size(), w.data(), w.size(), p.out()));
    return p;
}

TableauH read_tableau(const std::string& text) {
    if (text.empty())
        usage("--tableau is required");
    TableauH t;
    if (looks_like_json(text)) {
        check(pk_tableau_from_json(text.c_str(), t.out()));
        return t;
    }
    const auto shape = make_shape();
    const auto values = parse_list(trimmed_list(text));
    check(pk_tableau_new(shape.get(), values.data(), values.size(), t.out()));
    return t;
}

// "({(1,2),(3,5)};{(6,6),(8,9)};{(9,9)})": n and R follow from the last
// index in each carrel.
CritList read_critlist(const std::string& text) {
    if (text.empty())
        usage("--critlist is required");
    CritList c;
    if (looks_like_json(text)) {
        check(pk_critlist_from_json(text.c_str(), c.out()));
        return c;
    }
    std::vector<int> div;
    const auto flat = parse_list(text, &div);
    if (flat.size() % 2 != 0 || flat.empty())
        usage("a critical list needs (index,entry) pairs");
    std::vector<size_t> counts;
    std::vector<int> R;
    size_t prev = 0;
    div.push_back(static_cast<int>(flat.size()));
    for (int d : div) {
        const auto at = static_cast<size_t>(d);
        if (at % 2 != 0 || at <= prev)
            usage("malformed critical list");
        counts.push_back((at - prev) / 2);
        if (at != flat.size())
            R.push_back(flat[at - 2]);
        prev = at;
    }
    const int n = resolve_n(static_cast<size_t>(flat[flat.size() - 2]));
    check(pk_critlist_new(n, R.data(), R.size(), flat.data(), counts.data(), counts.size(), c.out()));
    return c;
}

// ------------------------------------------------------------ rendering

std::string render_tuple(const pk_tuple* t) {
    return fetch([&](char* b, size_t* l) { return pk_tuple_format(t, opt.fmt(), b, l); });
}
std::string render_perm(const pk_perm* p, pk_format f) {
    return fetch([&](char* b, size_t* l) { return pk_perm_format(p, f, b, l); });
}
std::string render_tableau(const pk_tableau* t, pk_format f) {
    return fetch([&](char* b, size_t* l) { return pk_tableau_format(t, f, b, l); });
}
std::string render_poly(const pk_poly* p) {
    return fetch([&](char* b, size_t* l) { return pk_poly_format(p, opt.fmt(), b, l); });
}

std::string line(std::string s) {
    if (s.empty() || s.back() != '\n')
        s += '\n';
    return s;
}

std::string render_bool(const char* key, bool v) {
    switch (opt.fmt()) {
    case PK_FORMAT_JSON:
        return Json{{key, v}}.dump() + "\n";
    case PK_FORMAT_CSV:
        return std::string(key) + "\n" + (v ? "true" : "false") + "\n";
    default:
        return v ? "true\n" : "false\n";
    }
}

std::string render_count(std::uint64_t v) {
    switch (opt.fmt()) {
    case PK_FORMAT_JSON:
        return Json{{"count", v}}.dump() + "\n";
    case PK_FORMAT_CSV:
        return "count\n" + std::to_string(v) + "\n";
    default:
        return std::to_string(v) + "\n";
    }
}

// Perm lists as text lines, a JSON array, CSV rows, or NDJSON when streaming.
struct PermSink {
    std::string out;
    Json array = Json::array();
    bool header = false;

    void add(const pk_perm* p) {
        if (opt.stream) {
            std::cout << render_perm(p, PK_FORMAT_JSON) << "\n";
            return;
        }
        switch (opt.fmt()) {
        case PK_FORMAT_JSON:
            array.push_back(Json::parse(render_perm(p, PK_FORMAT_JSON)));
            break;
        case PK_FORMAT_CSV: {
            std::string csv = render_perm(p, PK_FORMAT_CSV);
            if (header)
                csv = csv.substr(csv.find('\n') + 1);
            header = true;
            out += csv;
            break;
        }
        default:
            out += render_perm(p, PK_FORMAT_TEXT) + "\n";
        }
    }

    std::string finish() const { return opt.stream ? "" : opt.fmt() == PK_FORMAT_JSON ? array.dump() + "\n" : out; }
};

int perm_sink_cb(const pk_perm* p, void* ctx) {
    static_cast<PermSink*>(ctx)->add(p);
    return 0;
}

int tableau_ndjson_cb(const pk_tableau* t, void* ctx) {
    *static_cast<std::uint64_t*>(ctx) += 1;
    if (!opt.count_only)
        std::cout << render_tableau(t, PK_FORMAT_JSON) << "\n";
    return 0;
}

int tuple_ndjson_cb(const pk_tuple* t, void*) {
    std::cout << fetch([&](char* b, size_t* l) { return pk_tuple_format(t, PK_FORMAT_JSON, b, l); }) << "\n";
    return 0;
}

int tuple_text_cb(const pk_tuple* t, void* ctx) {
    *static_cast<std::string*>(ctx) += fetch([&](char* b, size_t* l) { return pk_tuple_format(t, PK_FORMAT_TEXT, b, l); }) + "\n";
    return 0;
}

// ------------------------------------------------------------ commands

std::string cmd_classify() {
    const auto t = read_tuple(opt.tuple, "--tuple");
    pk_classification c{};
    check(pk_classify(t.get(), &c));
    return fetch([&](char* b, size_t* l) { return pk_classification_format(&c, opt.fmt(), b, l); });
}

std::string cmd_critlist() {
    const auto t = read_tuple(opt.tuple, "--tuple");
    CritList c;
    check(pk_critical_list(t.get(), c.out()));
    return fetch([&](char* b, size_t* l) { return pk_critlist_format(c.get(), opt.fmt(), b, l); });
}

std::string cmd_core() {
    const auto t = read_tuple(opt.tuple, "--tuple");
    Tuple d;
    check(pk_core(t.get(), d.out()));
    return render_tuple(d.get());
}

std::string cmd_make() {
    const auto c = read_critlist(opt.critlist);
    pk_kind kind{};
    check(pk_kind_from_name(opt.kind.c_str(), &kind));
    Tuple t;
    check(pk_from_critical_list(c.get(), kind, t.out()));
    return render_tuple(t.get());
}

std::string cmd_map(const std::string& which) {
    if (which == "psi") {
        const auto p = read_perm(opt.perm, "--perm");
        Tuple t;
        check(pk_rank_tuple(p.get(), t.out()));
        return render_tuple(t.get());
    }
    const auto g = read_tuple(opt.tuple, "--tuple");
    if (which == "pi") {
        Perm p;
        check(pk_pi_map(g.get(), p.out()));
        return render_perm(p.get(), opt.fmt());
    }
    Tuple t;
    check(which == "floor" ? pk_floor_map(g.get(), t.out()) : pk_ceiling_map(g.get(), t.out()));
    return render_tuple(t.get());
}

std::string cmd_perm(const std::string& which) {
    if (which == "project") {
        if (opt.sigma.empty())
            usage("--sigma is required");
        const auto w = parse_list(opt.sigma);
        resolve_n(w.size());
        std::vector<int> R;
        if (opt.R)
            R = explicit_R();
        else if (opt.lambda)
            R = shape_R(make_shape());
        else
            usage("--R or --lambda is required");
        Perm p;
        check(pk_r_projection(w.data(), w.size(), R.data(), R.size(), p.out()));
        return render_perm(p.get(), opt.fmt());
    }
    const auto p = read_perm(opt.perm, "--perm");
    if (which == "avoiding") {
        int v = 0;
        check(pk_is_r312_avoiding(p.get(), &v));
        return render_bool("avoiding", v != 0);
    }
    if (which == "chain")
        return fetch([&](char* b, size_t* l) { return pk_perm_chain_format(p.get(), opt.fmt(), b, l); });
    if (which == "lift") {
        Perm s;
        check(pk_minimal_lift(p.get(), s.out()));
        return render_perm(s.get(), opt.fmt());
    }
    PermSink sink;
    check(pk_lifts_for_each(p.get(), perm_sink_cb, &sink));
    return sink.finish();
}

std::string cmd_tab(const std::string& which) {
    TableauH t;
    if (which == "scan") {
        const auto in = read_tableau(opt.tableau);
        check(pk_scanning(in.get(), t.out()));
    } else {
        const auto shape = make_shape();
        if (which == "key") {
            const auto p = read_perm(opt.perm, "--perm");
            check(pk_key_of_perm(p.get(), shape.get(), t.out()));
        } else {
            const auto a = read_tuple(opt.tuple, "--tuple");
            check(which == "rowendmax" ? pk_row_end_max(a.get(), shape.get(), t.out())
                                       : pk_row_bound_max(a.get(), shape.get(), t.out()));
        }
    }
    return line(render_tableau(t.get(), opt.fmt()));
}

std::string cmd_set(const std::string& which) {
    if (opt.stream || (opt.count_only && which != "ideal")) {
        std::uint64_t count = 0;
        if (which == "ideal") {
            const auto t = read_tableau(opt.tableau);
            check(pk_stream_ideal(t.get(), tableau_ndjson_cb, &count));
        } else {
            const auto shape = make_shape();
            if (which == "demazure") {
                const auto p = read_perm(opt.perm, "--perm");
                check(pk_stream_demazure(p.get(), shape.get(), tableau_ndjson_cb, &count));
            } else {
                const auto a = read_tuple(opt.tuple, "--tuple");
                check(which == "rowbound" ? pk_stream_row_bound(a.get(), shape.get(), tableau_ndjson_cb, &count)
                                          : pk_stream_z(a.get(), shape.get(), tableau_ndjson_cb, &count));
            }
        }
        return opt.count_only ? render_count(count) : "";
    }
    TabSet set;
    if (which == "ideal") {
        const auto t = read_tableau(opt.tableau);
        check(pk_set_ideal(t.get(), opt.cap, set.out()));
    } else {
        const auto shape = make_shape();
        if (which == "demazure") {
            const auto p = read_perm(opt.perm, "--perm");
            check(pk_set_demazure(p.get(), shape.get(), opt.cap, set.out()));
        } else {
            const auto a = read_tuple(opt.tuple, "--tuple");
            check(which == "rowbound" ? pk_set_row_bound(a.get(), shape.get(), opt.cap, set.out())
                                      : pk_set_z(a.get(), shape.get(), opt.cap, set.out()));
        }
    }
    if (opt.count_only) {
        std::uint64_t size = 0;
        check(pk_set_size(set.get(), &size));
        return render_count(size);
    }
    return line(fetch([&](char* b, size_t* l) { return pk_set_format(set.get(), opt.fmt(), b, l); }));
}

// An operand of `poly compare`: "beta:<tuple>" or "pi:<perm>".
Poly operand_poly(const std::string& operand, const ShapeH& shape) {
    const auto colon = operand.find(':');
    if (colon == std::string::npos)
        usage("compare operands look like beta:(3,3;3) or pi:(2,3;1)");
    const std::string kind = operand.substr(0, colon), value = operand.substr(colon + 1);
    Poly p;
    if (kind == "beta") {
        const auto t = read_tuple(value, "--a/--b");
        check(pk_poly_row_bound_sum(t.get(), shape.get(), opt.cap, p.out()));
    } else if (kind == "pi") {
        const auto w = read_perm(value, "--a/--b");
        check(pk_poly_demazure(w.get(), shape.get(), opt.cap, p.out()));
    } else {
        usage("unknown compare operand kind '" + kind + "'");
    }
    return p;
}

std::string cmd_poly(const std::string& which) {
    const auto shape = make_shape();
    if (which == "compare") {
        const auto a = operand_poly(opt.left, shape), b = operand_poly(opt.right, shape);
        int eq = 0, same = 0;
        check(pk_poly_equal(a.get(), b.get(), &eq));
        check(pk_poly_identical(a.get(), b.get(), &same));
        switch (opt.fmt()) {
        case PK_FORMAT_JSON:
            return Json{{"equal", eq != 0}, {"identical", same != 0}}.dump() + "\n";
        case PK_FORMAT_CSV:
            return std::string("equal,identical\n") + (eq ? "true" : "false") + "," + (same ? "true" : "false") + "\n";
        default:
            return std::string("equal: ") + (eq ? "true" : "false") + "\nidentical: " + (same ? "true" : "false") +
                   "\n";
        }
    }
    Poly p;
    if (which == "rowboundsum") {
        const auto t = read_tuple(opt.tuple, "--tuple");
        check(pk_poly_row_bound_sum(t.get(), shape.get(), opt.cap, p.out()));
    } else {
        const auto w = read_perm(opt.perm, "--perm");
        check(which == "dd" ? pk_poly_demazure_dd(w.get(), shape.get(), p.out())
                            : pk_poly_demazure(w.get(), shape.get(), opt.cap, p.out()));
    }
    return line(render_poly(p.get()));
}

std::string cmd_count(const std::string& which) {
    if (!opt.n)
        usage("--n is required");
    std::uint64_t v = 0;
    if (which == "total") {
        check(pk_count_total(*opt.n, &v));
        return render_count(v);
    }
    const auto R = opt.R ? explicit_R() : std::vector<int>{};
    check(which == "cnr" ? pk_count_cnr(*opt.n, R.data(), R.size(), &v) : pk_count_ui(*opt.n, R.data(), R.size(), &v));
    return render_count(v);
}

std::string cmd_list(const std::string& which) {
    if (!opt.n)
        usage("--n is required");
    const auto R = opt.R ? explicit_R() : std::vector<int>{};
    if (which == "perms") {
        PermSink sink;
        check(pk_perms_for_each(*opt.n, R.data(), R.size(), opt.avoiding_only, perm_sink_cb, &sink));
        return sink.finish();
    }
    pk_family family{};
    check(pk_family_from_name(opt.family.c_str(), &family));
    if (opt.count_only) {
        std::uint64_t v = 0;
        check(pk_tuples_count(*opt.n, R.data(), R.size(), family, &v));
        return render_count(v);
    }
    if (opt.stream || opt.fmt() == PK_FORMAT_JSON) {
        check(pk_tuples_for_each(*opt.n, R.data(), R.size(), family, tuple_ndjson_cb, nullptr));
        return "";
    }
    std::string out;
    check(pk_tuples_for_each(*opt.n, R.data(), R.size(), family, tuple_text_cb, &out));
    return out;
}

pk_suite_options suite_options() {
    pk_suite_options o{};
    pk_suite_options_init(&o);
    o.max_n = opt.max_n;
    o.max_col = opt.max_col;
    o.all_shapes = opt.all_shapes;
    o.jobs = opt.jobs;
    o.cap = opt.cap;
    o.budget = opt.budget;
    return o;
}

const std::vector<std::string> kSuites = {"bijections", "counts",      "lifts",     "convexity",
                                          "coincidence", "polynomials", "accidental"};

std::string cmd_verify(const std::string& which, int& exit_code) {
    const auto o = suite_options();
    if (which == "dims") {
        try {
            return line(fetch([&](char* b, size_t* l) { return pk_dimension_table(&o, opt.fmt(), b, l); }));
        } catch (const Failure& f) {
            if (f.status == PK_ERR_CAP_EXCEEDED || f.status == PK_ERR_BUDGET_EXCEEDED) {
                std::cerr << pk_status_name(f.status) << ": " << f.message << "\n";
                exit_code = kExitSuiteLimit;
                return "";
            }
            throw;
        }
    }
    const std::vector<std::string> names = which == "all" ? kSuites : std::vector<std::string>{which};
    std::string text;
    Json reports = Json::array();
    bool header = false;
    for (const auto& name : names) {
        Report r;
        const int st = pk_suite_run(name.c_str(), &o, r.out());
        if (st == PK_ERR_CAP_EXCEEDED || st == PK_ERR_BUDGET_EXCEEDED) {
            std::cerr << name << ": " << pk_status_name(st) << ": " << pk_last_error() << "\n";
            exit_code = kExitSuiteLimit;
            continue;
        }
        check(st);
        int passed = 0;
        check(pk_report_passed(r.get(), &passed));
        if (!passed && exit_code == 0)
            exit_code = kExitSuiteFail;
        const auto body = fetch([&](char* b, size_t* l) { return pk_report_format(r.get(), opt.fmt(), b, l); });
        if (opt.fmt() == PK_FORMAT_JSON) {
            reports.push_back(Json::parse(body));
        } else if (opt.fmt() == PK_FORMAT_CSV) {
            text += header ? body.substr(body.find('\n') + 1) : body;
            header = true;
        } else {
            text += (text.empty() ? "" : "\n") + body;
        }
    }
    if (opt.fmt() == PK_FORMAT_JSON)
        return (names.size() == 1 && reports.size() == 1 ? reports[0] : reports).dump(2) + "\n";
    return text;
}

std::string shell_quote(const std::string& s) {
    if (!s.empty() && s.find_first_of(" \t\"'$;|&()<>{}*?\\") == std::string::npos)
        return s;
    std::string q = "'";
    for (char c : s)
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

void write_manifest(int argc, char** argv, CLI::App& app, const std::string& output, int exit_code) {
    Json cmd = Json::array();
    for (int i = 0; i < argc; ++i)
        cmd.push_back(argv[i]);
    std::string line_form;
    for (int i = 1; i < argc; ++i)
        line_form += (i > 1 ? " " : "") + shell_quote(argv[i]);
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a(output)));
    const Json manifest = {
        {"tool", "parakat"},
        {"version", pk_version()},
        {"command_line", cmd},
        {"command", line_form},
        {"format", opt.format},
        {"config_version", kConfigVersion},
        {"config", app.config_to_str(true, false)},
        {"cap_env", std::getenv("PARAKAT_CAP") ? std::getenv("PARAKAT_CAP") : ""},
        {"deterministic", true},
        {"exit_code", exit_code},
        {"output_bytes", output.size()},
        {"output_fnv1a64", digest},
    };
    std::ofstream f(opt.manifest, std::ios::binary);
    if (!f)
        usage("cannot write manifest " + opt.manifest);
    f << manifest.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parabolic Catalan tuples, permutations, tableau sets and polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pk_version()));
    app.set_config("--config", "", "key=value configuration file");
    app.option_defaults()->always_capture_default();

    auto* fmt_group = app.add_option_group("format");
    fmt_group->add_flag_function("--json", [](std::int64_t) { opt.format = "json"; }, "JSON output");
    fmt_group->add_flag_function("--csv", [](std::int64_t) { opt.format = "csv"; }, "CSV output");
    fmt_group->add_flag_function("--text", [](std::int64_t) { opt.format = "text"; }, "text output (default)");
    fmt_group->require_option(0, 1);
    app.add_option("--format", opt.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--n", opt.n, "number of positions");
    app.add_option("--R", opt.R, "divider set, e.g. 3,8 (empty for none)");
    app.add_option("--lambda", opt.lambda, "partition with n parts, e.g. 2,1,0");
    app.add_option("--cap", opt.cap, "materialization cap (0 = PARAKAT_CAP or 10^7)");
    app.add_option("--jobs", opt.jobs, "worker threads for verify suites")->check(CLI::PositiveNumber);
    app.add_option("--max-n", opt.max_n, "largest n for verify");
    app.add_option("--max-col", opt.max_col, "largest lambda_1 for verify");
    app.add_flag("--all-shapes", opt.all_shapes, "use every shape instead of one per R_lambda");
    app.add_option("--budget", opt.budget, "tableau budget for the accidental search (0 = none)");
    app.add_flag("--stream", opt.stream, "emit NDJSON without materializing");
    app.add_flag("--count", opt.count_only, "print only the number of elements");
    app.add_option("--tuple", opt.tuple, "R-tuple, e.g. \"(2,7,5;8,6,6,9,9;9)\" or JSON");
    app.add_option("--perm", opt.perm, "R-permutation in one-line notation or JSON");
    app.add_option("--sigma", opt.sigma, "plain permutation to project");
    app.add_option("--tableau", opt.tableau, "tableau columns, e.g. \"(1,3|3)\" or JSON");
    app.add_option("--critlist", opt.critlist, "critical list, e.g. \"({(1,2),(3,5)};{(9,9)})\" or JSON");
    app.add_option("--kind", opt.kind, "increasing, shell, gapless, canopy, floor or ceiling");
    app.add_option("--family", opt.family, "tuple family for list");
    app.add_flag("--avoiding", opt.avoiding_only, "only R-312-avoiding permutations for list");
    app.add_option("--a", opt.left, "first compare operand, beta:<tuple> or pi:<perm>");
    app.add_option("--b", opt.right, "second compare operand");
    app.add_option("--manifest", opt.manifest, "write a run manifest (JSON) to this file");
    app.add_option("--config-version", opt.config_version, "configuration format version")
        ->check(CLI::Range(kConfigVersion, kConfigVersion));

    std::string mode;
    std::function<std::string(int&)> run;
    auto simple = [&](const char* name, const char* help, std::function<std::string()> f) {
        app.add_subcommand(name, help)->fallthrough()->callback([&run, f] { run = [f](int&) { return f(); }; });
    };
    auto modal = [&](const char* name, const char* help, std::vector<std::string> modes,
                     std::function<std::string(const std::string&)> f) {
        auto* sub = app.add_subcommand(name, help)->fallthrough();
        sub->add_option("mode", mode, "operation")->required()->check(CLI::IsMember(modes));
        sub->callback([&run, &mode, f] { run = [f, &mode](int&) { return f(mode); }; });
    };

    simple("classify", "classify an R-tuple", cmd_classify);
    simple("critlist", "critical list of an upper R-tuple", cmd_critlist);
    simple("core", "R-core of an upper R-tuple", cmd_core);
    simple("make", "tuple of a given kind from a critical list", cmd_make);
    modal("map", "psi, pi, floor or ceiling", {"psi", "pi", "floor", "ceiling"}, cmd_map);
    modal("perm", "permutation operations", {"project", "lift", "lifts", "avoiding", "chain"}, cmd_perm);
    modal("tab", "tableau constructions", {"key", "rowendmax", "rowboundmax", "scan"}, cmd_tab);
    modal("set", "tableau sets", {"rowbound", "demazure", "ideal", "z"}, cmd_set);
    modal("poly", "generating polynomials", {"rowboundsum", "demazure", "dd", "compare"}, cmd_poly);
    modal("count", "enumerative counts", {"cnr", "total", "ui"}, cmd_count);
    modal("list", "enumerate tuples or permutations", {"tuples", "perms"}, cmd_list);
    std::vector<std::string> verify_modes = kSuites;
    verify_modes.insert(verify_modes.end(), {"all", "dims"});
    auto* verify = app.add_subcommand("verify", "run a verification suite, all of them, or dims")->fallthrough();
    verify->add_option("suite", mode, "suite name")->required()->check(CLI::IsMember(verify_modes));
    verify->callback([&] { run = [&mode](int& code) { return cmd_verify(mode, code); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    int exit_code = 0;
    std::string output;
    try {
        output = run(exit_code);
        if (!output.empty())
            output = line(output);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return kExitUsage;
    } catch (const Failure& f) {
        std::cout << std::flush;
        std::cerr << "error: " << pk_status_name(f.status) << ": " << f.message << "\n";
        return f.status == PK_ERR_INTERNAL || f.status == PK_ERR_INSUFFICIENT_BUFFER ||
                       f.status == PK_ERR_NULL_POINTER
                   ? kExitInternal
                   : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    std::cout << output;
    if (!opt.manifest.empty()) {
        try {
            write_manifest(argc, argv, app, output, exit_code);
        } catch (const UsageError& e) {
            std::cerr << "usage error: " << e.message << "\n";
            return kExitUsage;
        }
    }
    return exit_code;
}

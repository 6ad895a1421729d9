#include <doctest.h>

#include "parakat/verify.hpp"

using namespace parakat;

namespace {

SuiteOptions small(int max_n, int max_col, int jobs = 1) {
    SuiteOptions o;
    o.max_n = max_n;
    o.max_col = max_col;
    o.jobs = jobs;
    return o;
}

// Reports without the timing field.
Json stable(const SuiteReport& r) {
    auto j = to_json(r);
    j.erase("wall_seconds");
    return j;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("every suite passes on a small range") {
    for (const auto& name : suite_names()) {
        const auto r = run_suite(name, small(3, 2));
        CHECK_MESSAGE(r.verdict == Verdict::pass, name);
        CHECK(r.counterexamples.empty());
        CHECK(r.instances == r.declared);
        CHECK(r.instances > 0);
    }
}

TEST_CASE("vacuous range still checks an instance") {
    const auto r = suite_convexity(small(1, 1));
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.instances >= 1);
}

TEST_CASE("convexity witness is reported") {
    const auto r = suite_convexity(small(3, 2));
    bool seen = false;
    for (const auto& n : r.notes)
        seen = seen || n.find("witness lambda=(2,1,0), pi=(3;1;2): |D|=5") != std::string::npos;
    CHECK(seen);
}

TEST_CASE("parallel runs give identical reports") {
    for (const auto& name : suite_names()) {
        const auto a = run_suite(name, small(4, 2, 1));
        const auto b = run_suite(name, small(4, 2, 4));
        CHECK_MESSAGE(stable(a) == stable(b), name);
    }
}

TEST_CASE("all shapes and representatives agree") {
    auto o = small(4, 2);
    const auto rep = suite_coincidence(o);
    o.all_shapes = true;
    const auto all = suite_coincidence(o);
    CHECK(rep.verdict == Verdict::pass);
    CHECK(all.verdict == Verdict::pass);
    CHECK(all.instances > rep.instances);
}

TEST_CASE("range caps") {
    CHECK_THROWS_AS(suite_convexity(small(kMaxTableauN + 1, 2)), Error);
    CHECK_THROWS_AS(suite_bijections(small(kMaxTupleN + 1, 2)), Error);
    CHECK_THROWS_AS(run_suite("nope", small(2, 2)), Error);
}

TEST_CASE("accidental search budget") {
    auto o = small(4, 3);
    o.budget = 5;
    try {
        search_accidental(o);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
}

TEST_CASE("counts notes") {
    const auto r = suite_counts(small(4, 0));
    bool c4 = false, t4 = false;
    for (const auto& n : r.notes) {
        c4 = c4 || n == "C_4 (full R) = 14";
        t4 = t4 || n == "total n=4: 56";
    }
    CHECK(c4);
    CHECK(t4);
}

TEST_CASE("dimension table") {
    const auto rows = dimension_table(small(3, 2));
    REQUIRE_FALSE(rows.empty());
    for (const auto& row : rows) {
        if (row.avoiding)
            CHECK(row.demazure_size == row.row_bound_size);
        else
            CHECK(row.demazure_size < row.row_bound_size);
    }
    CHECK(to_csv(rows).rfind("lambda,", 0) == 0);
}

TEST_CASE("report renderings") {
    const auto r = suite_lifts(small(3, 2));
    CHECK(to_text(r).find("verdict          PASS") != std::string::npos);
    CHECK(to_json(r)["verdict"] == "pass");
    CHECK(to_csv(r).rfind("suite,", 0) == 0);
}

}

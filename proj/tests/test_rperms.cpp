#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "parakat/serialize.hpp"

using namespace parakat;

namespace {

RPermutation P(const char* text) {
    std::vector<int> div;
    auto v = parse_int_list(text, &div);
    return RPermutation(RSubset(static_cast<int>(v.size()), div), v);
}

RTuple T(const char* text) {
    std::vector<int> div;
    auto v = parse_int_list(text, &div);
    return RTuple(RSubset(static_cast<int>(v.size()), div), v);
}

} // namespace

TEST_SUITE("rperms") {

TEST_CASE("validation") {
    CHECK_THROWS_AS(RPermutation(RSubset(3, {1}), {1, 3, 2}), Error);
    CHECK_THROWS_AS(RPermutation(RSubset(3, {1}), {1, 2, 2}), Error);
    CHECK_NOTHROW(RPermutation(RSubset(3, {1}), {3, 1, 2}));
}

TEST_CASE("table rows for permutations") {
    CHECK(is_r312_avoiding(P("(2,3,6;1,4,5,8,9;7)")));
    CHECK_FALSE(is_r312_avoiding(P("(2,4,6;1,3,7,8,9;5)")));
    CHECK(to_text(rank_tuple(P("(2,4,6;1,5,7,8,9;3)"))) == "(2,4,6;5,6,7,8,9;9)");
    CHECK(to_text(pi_map(T("(2,4,6;4,5,6,7,9;9)"))) == "(2,4,6;1,3,5,7,9;8)");
}

TEST_CASE("chains and clumps") {
    const auto p = P("(2,4,6;1,5,7,8,9;3)");
    const auto b = to_chain(p);
    CHECK(to_text(b) == "({2,4,6};{1,2,4,5,6,7,8,9})");
    CHECK(from_chain(b) == p);
    const std::vector<int> s{1, 2, 4, 6, 7, 8};
    const auto c = clumps(s);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Clump{1, 2});
    CHECK(c[1] == Clump{4, 4});
    CHECK(c[2] == Clump{6, 8});
}

TEST_CASE("avoidance agrees with the pattern definition") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& r : all_rsubsets(n)) {
            std::uint64_t count = 0;
            for (const auto& w : oracle::r_perms(n, r.dividers())) {
                const RPermutation p(r, w);
                const bool avoid = !oracle::r312_contains(w, r.dividers());
                count += avoid;
                REQUIRE(is_r312_avoiding(p) == avoid);
                const auto b = to_chain(p);
                REQUIRE(is_rightmost_clump_deleting(b) == avoid);
                REQUIRE(rcd_closed_interval(b) == avoid);
                REQUIRE(rcd_open_interval(b) == avoid);
                REQUIRE(rcd_largest_missing(b) == avoid);
            }
            CHECK(count_cnr(r) == count);
            CHECK(enumerate_rperms(r, true).size() == count);
            CHECK(enumerate_rperms(r, false).size() == multinomial(r));
        }
}

TEST_CASE("parabolic Catalan numbers") {
    for (int n = 1; n <= 7; ++n)
        CHECK(count_cnr(RSubset::full(n)) == oracle::catalan(n));
    CHECK(count_cnr(RSubset(4, {1, 2, 3})) == 14);
    for (int n = 1; n <= 5; ++n)
        CHECK(count_cnr(RSubset::trivial(n)) == 1);
    const std::uint64_t totals[] = {1, 3, 12, 56, 284, 1516};
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t sum = 0;
        for (const auto& r : all_rsubsets(n))
            sum += oracle::r_perms(n, r.dividers()).size() -
                   [&] {
                       std::uint64_t bad = 0;
                       for (const auto& w : oracle::r_perms(n, r.dividers()))
                           bad += oracle::r312_contains(w, r.dividers());
                       return bad;
                   }();
        CHECK(sum == totals[n - 1]);
        CHECK(count_total(n) == sum);
    }
}

TEST_CASE("rank tuple by definition and the inverse map") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& r : all_rsubsets(n)) {
            std::set<RTuple> images;
            for (const auto& w : oracle::r_perms(n, r.dividers())) {
                const RPermutation p(r, w);
                const auto psi = rank_tuple(p);
                REQUIRE(psi.entries() == oracle::rank_tuple(w, r.dividers()));
                REQUIRE(is_r_increasing(psi));
                REQUIRE(is_upper(psi));
                if (is_r312_avoiding(p)) {
                    REQUIRE(is_gapless(psi));
                    REQUIRE(pi_map(psi) == p);
                    images.insert(psi);
                }
            }
            const auto gapless = enumerate_tuples(r, Family::gapless);
            REQUIRE(images.size() == gapless.size());
            for (const auto& g : gapless)
                REQUIRE(rank_tuple(pi_map(g)) == g);
        }
}

TEST_CASE("projection sorts cohorts") {
    const std::vector<int> sigma{5, 1, 4, 2, 3};
    const auto p = r_projection(sigma, RSubset(5, {2}));
    CHECK(p.one_line() == std::vector<int>{1, 5, 2, 3, 4});
}

TEST_CASE("lifts against brute force") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = oracle::all_perms(n);
        for (const auto& r : all_rsubsets(n))
            for (const auto& p : enumerate_rperms(r, true)) {
                std::vector<std::vector<int>> expect;
                for (const auto& w : all)
                    if (oracle::is_312_avoiding(w) && oracle::project(w, r.dividers()) == p.one_line())
                        expect.push_back(w);
                std::vector<std::vector<int>> got;
                for (const auto& s : all_lifts(p))
                    got.push_back(s.one_line());
                REQUIRE(got == expect);
                const auto m = minimal_lift(p);
                REQUIRE(oracle::is_312_avoiding(m.one_line()));
                REQUIRE(oracle::project(m.one_line(), r.dividers()) == p.one_line());
                for (const auto& w : expect)
                    if (w != m.one_line())
                        REQUIRE(oracle::inversions(w) > oracle::inversions(m.one_line()));
            }
    }
}

TEST_CASE("lifting a containing permutation fails") {
    CHECK_THROWS_AS(minimal_lift(P("(3;1;2)")), Error);
    CHECK_THROWS_AS(all_lifts(P("(3;1;2)")), Error);
    CHECK_THROWS_AS(pi_map(T("(2,2;3)")), Error);
}

}

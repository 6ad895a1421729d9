#include <doctest.h>

#include <numeric>

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

oracle::Poly plain(const Polynomial& p) {
    oracle::Poly out;
    for (const auto& [e, c] : p.terms())
        out[e] = c;
    return out;
}

} // namespace

TEST_SUITE("polys") {

TEST_CASE("introductory instance") {
    const Shape s({1, 1, 0});
    const auto a = row_bound_sum(T("(3,3;3)"), s);
    const auto b = row_bound_sum(T("(2,3;3)"), s);
    const auto d = demazure_poly(P("(2,3;1)"), s);
    CHECK(to_text(a.poly) == "x1*x2 + x1*x3 + x2*x3");
    CHECK(to_text(b.poly) == "x1*x2 + x1*x3 + x2*x3");
    CHECK(to_text(d.poly) == "x1*x2 + x1*x3 + x2*x3");
    CHECK(poly_eq(a, d));
    CHECK(gf_identical(a, b));
    CHECK(gf_identical(a, d));
    CHECK(demazure_poly_dd(P("(2,3;1)"), s) == d.poly);
}

TEST_CASE("text form") {
    Polynomial p(3);
    CHECK(to_text(p) == "0");
    p.add({2, 0, 1}, 3);
    p.add({0, 1, 0}, -1);
    p.add({1, 1, 0}, 1);
    CHECK(to_text(p) == "3*x1^2*x3 + x1*x2 - x2");
    p.add({1, 1, 0}, -1);
    CHECK(p.coefficient({1, 1, 0}) == 0);
    CHECK(p.terms().size() == 2);
    Polynomial c(2);
    c.add({0, 0}, 4);
    CHECK(to_text(c) == "4");
}

TEST_CASE("fingerprint is a function of the canonical form") {
    Polynomial a(2), b(2);
    a.add({1, 0}, 1);
    a.add({0, 1}, 1);
    b.add({0, 1}, 1);
    b.add({1, 0}, 1);
    CHECK(fingerprint(a) == fingerprint(b));
    b.add({0, 1}, 1);
    CHECK(fingerprint(a) != fingerprint(b));
}

TEST_CASE("isobaric operator by exact division") {
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i)
            for (int a = 0; a <= 3; ++a)
                for (int b = 0; b <= 3; ++b) {
                    std::vector<int> e(static_cast<std::size_t>(n), 0);
                    e[static_cast<std::size_t>(i - 1)] = a;
                    e[static_cast<std::size_t>(i)] = b;
                    if (n > 2)
                        e[static_cast<std::size_t>(n - 1 == i ? 0 : n - 1)] += 1;
                    const auto f = Polynomial::monomial(e);
                    oracle::Poly g;
                    g[e] = 1;
                    REQUIRE(plain(isobaric_divided_difference(f, i)) == oracle::isobaric(g, i));
                }
}

TEST_CASE("reduced words") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : oracle::all_perms(n)) {
            const auto word = reduced_word(w);
            REQUIRE(static_cast<int>(word.size()) == oracle::inversions(w));
            std::vector<int> v(static_cast<std::size_t>(n));
            std::iota(v.begin(), v.end(), 1);
            for (int s : word)
                std::swap(v[static_cast<std::size_t>(s - 1)], v[static_cast<std::size_t>(s)]);
            REQUIRE(v == w);
        }
}

TEST_CASE("Demazure polynomials against the division oracle") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : all_shapes(n, n <= 3 ? 3 : 2))
            for (const auto& p : enumerate_rperms(s.rsubset(), false)) {
                const auto d = demazure_poly(p, s).poly;
                REQUIRE(plain(d) == oracle::demazure(p.one_line(), s.parts()));
                REQUIRE(demazure_poly_dd(p, s) == d);
            }
}

TEST_CASE("row bound sums against brute force") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : all_shapes(n, 2))
            for (const auto& beta : enumerate_tuples(s.rsubset(), Family::upper)) {
                oracle::Poly want;
                for (const auto& c : oracle::row_bound_set(s.parts(), beta.entries()))
                    oracle::add_term(want, oracle::content(c, n), 1);
                REQUIRE(plain(row_bound_sum(beta, s).poly) == want);
            }
}

TEST_CASE("degree and leading term") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : all_shapes(n, 2))
            for (const auto& beta : enumerate_tuples(s.rsubset(), Family::upper)) {
                const auto p = row_bound_sum(beta, s).poly;
                REQUIRE_FALSE(p.is_zero());
                for (const auto& [e, c] : p.terms())
                    REQUIRE(std::accumulate(e.begin(), e.end(), 0) == s.size());
                REQUIRE(p.terms().begin()->first == s.parts());
                REQUIRE(p.terms().begin()->second == 1);
            }
}

TEST_CASE("restricted constructors check their domains") {
    const Shape s({1, 1, 0});
    CHECK_THROWS_AS(flag_schur(T("(3,2;3)"), s), Error);
    CHECK_NOTHROW(flag_schur(T("(2,3;3)"), s));
    CHECK_THROWS_AS(gapless_core_schur(T("(2,3;2)"), s), Error);
    CHECK_THROWS_AS(row_bound_sum(T("(1,1;3)"), s), Error);
}

TEST_CASE("composition with the shape") {
    CHECK(compose_alpha(P("(2,3;1)"), Shape({1, 1, 0})) == Exponent{0, 1, 1});
    CHECK(compose_alpha(P("(3;1;2)"), Shape({2, 1, 0})) == Exponent{1, 0, 2});
}

}

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

// "(1,3|2)" on the given shape.
Tableau Tab(const Shape& s, std::string text) {
    for (char& c : text)
        if (c == '|')
            c = ';';
    std::vector<int> div;
    const auto flat = parse_int_list(text, &div);
    std::vector<std::vector<int>> cols;
    std::size_t at = 0;
    for (int j = 1; j <= s.width(); ++j) {
        const auto len = static_cast<std::size_t>(s.column_length(j));
        cols.emplace_back(flat.begin() + static_cast<long>(at), flat.begin() + static_cast<long>(at + len));
        at += len;
    }
    return Tableau(s, cols);
}

std::vector<oracle::Columns> columns_of(const TableauSet& set) {
    std::vector<oracle::Columns> out;
    for (const auto& t : set.members())
        out.push_back(t.columns());
    return out;
}

std::vector<Shape> small_shapes() {
    std::vector<Shape> out;
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : all_shapes(n, n <= 3 ? 3 : 2))
            out.push_back(s);
    return out;
}

Tableau join_all(const TableauSet& set) {
    Tableau best = set.members().front();
    for (const auto& t : set.members())
        best = join(best, t);
    return best;
}

} // namespace

TEST_SUITE("tableaux") {

TEST_CASE("shapes") {
    const Shape s({2, 1, 0});
    CHECK(s.n() == 3);
    CHECK(s.width() == 2);
    CHECK(s.column_length(0) == 3);
    CHECK(s.column_length(1) == 2);
    CHECK(s.column_length(2) == 1);
    CHECK(s.rsubset().dividers() == std::vector<int>{1, 2});
    CHECK(Shape({1, 1, 0}).rsubset().dividers() == std::vector<int>{2});
    CHECK(Shape({2, 2, 2}).rsubset().dividers().empty());
    CHECK(s.size() == 3);
    CHECK(s.is_strict());
    CHECK_THROWS_AS(Shape({1, 2}), Error);
    CHECK_THROWS_AS(Shape({1, -1}), Error);
    CHECK(all_shapes(3, 2).size() == 10);
}

TEST_CASE("tableau validation") {
    const Shape s({2, 1, 0});
    CHECK_NOTHROW(Tab(s, "(1,3|3)"));
    CHECK_THROWS_AS(Tab(s, "(3,1|3)"), Error);
    CHECK_THROWS_AS(Tab(s, "(2,3|1)"), Error);
    CHECK_THROWS_AS(Tab(s, "(1,4|4)"), Error);
    CHECK(is_semistandard(s, {{1, 2}, {1}}));
    CHECK_FALSE(is_semistandard(s, {{2, 2}, {2}}));
}

TEST_CASE("all tableaux against brute force") {
    for (const auto& s : small_shapes()) {
        CHECK(columns_of(all_tableaux(s)) == oracle::all_tableaux(s.parts()));
    }
    const Shape big({2, 1, 1, 0, 0});
    CHECK(columns_of(all_tableaux(big)) == oracle::all_tableaux(big.parts()));
}

TEST_CASE("row bound sets against brute force") {
    for (const auto& s : small_shapes())
        for (const auto& beta : enumerate_tuples(s.rsubset(), Family::upper)) {
            const auto set = row_bound_set(beta, s);
            REQUIRE(columns_of(set) == oracle::row_bound_set(s.parts(), beta.entries()));
            if (set.size())
                REQUIRE(row_bound_max(beta, s) == join_all(set));
        }
}

TEST_CASE("row end sets partition the tableaux") {
    for (const auto& s : small_shapes()) {
        std::size_t total = 0;
        for (const auto& a : enumerate_tuples(s.rsubset(), Family::increasing)) {
            const auto z = z_set(a, s);
            total += z.size();
            for (const auto& t : z.members())
                REQUIRE(row_end_list(t) == a);
            if (z.size())
                REQUIRE(row_end_max(a, s) == join_all(z));
        }
        CHECK(total == all_tableaux(s).size());
    }
}

TEST_CASE("row end max needs an increasing upper tuple") {
    const Shape s({1, 1, 0});
    CHECK_THROWS_AS(row_end_max(RTuple(RSubset(3, {2}), {3, 3, 3}), s), Error);
    CHECK_THROWS_AS(row_bound_max(RTuple(RSubset(3, {2}), {1, 1, 3}), s), Error);
    CHECK_THROWS_AS(row_bound_max(RTuple(RSubset(3, {1}), {3, 3, 3}), s), Error);
}

TEST_CASE("scanning example and key fixed points") {
    const Shape s({2, 1, 0});
    CHECK(to_text(scanning(Tab(s, "(1,3|2)"))) == "(2,3|2)");
    for (const auto& sh : small_shapes()) {
        const auto all = all_tableaux(sh);
        for (const auto& t : all.members()) {
            const auto k = scanning(t);
            REQUIRE(k.is_key());
            REQUIRE(t.leq(k));
            REQUIRE(scanning(k) == k);
        }
        for (const auto& p : enumerate_rperms(sh.rsubset(), false)) {
            const auto y = key_of_perm(p, sh);
            REQUIRE(y.is_key());
            REQUIRE(scanning(y) == y);
        }
    }
}

TEST_CASE("Demazure set of the non-convex witness") {
    const Shape s({2, 1, 0});
    const auto p = P("(3;1;2)");
    const auto y = key_of_perm(p, s);
    CHECK(to_text(y) == "(1,3|3)");
    const auto d = demazure_set(p, s);
    const auto i = ideal(y);
    CHECK(d.size() == 5);
    CHECK(i.size() == 6);
    CHECK_FALSE(d.contains(Tab(s, "(1,3|2)")));
    CHECK(i.contains(Tab(s, "(1,3|2)")));
    CHECK_FALSE(is_convex(d));
    CHECK(is_convex(i));
}

TEST_CASE("keys of avoiding permutations") {
    for (const auto& s : small_shapes()) {
        const auto r = s.rsubset();
        for (const auto& p : enumerate_rperms(r, false)) {
            const auto y = key_of_perm(p, s);
            const bool avoid = is_r312_avoiding(p);
            REQUIRE(is_gapless_key(y) == avoid);
            if (avoid) {
                REQUIRE(row_end_max(rank_tuple(p), s) == y);
                REQUIRE(is_gapless(row_end_list(y)));
            }
        }
    }
}

TEST_CASE("longest element gives every tableau") {
    for (const auto& s : small_shapes()) {
        const auto r = s.rsubset();
        const auto perms = enumerate_rperms(r, false);
        CHECK(demazure_set(perms.back(), s) == all_tableaux(s));
        CHECK(demazure_set(perms.front(), s).size() == 1);
    }
}

TEST_CASE("meet and join") {
    const Shape s({2, 1, 0});
    const auto a = Tab(s, "(1,3|3)"), b = Tab(s, "(2,3|2)");
    CHECK(to_text(meet(a, b)) == "(1,3|2)");
    CHECK(to_text(join(a, b)) == "(2,3|3)");
    CHECK(minimal_tableau(s) == Tab(s, "(1,2|1)"));
}

TEST_CASE("materialization cap") {
    const Shape s({2, 2, 0, 0});
    CHECK_THROWS_AS(all_tableaux(s, Limits{3}), Error);
    try {
        all_tableaux(s, Limits{3});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
}

TEST_CASE("shape mismatch") {
    CHECK_THROWS_AS(key_of_perm(P("(1;2,3)"), Shape({1, 1, 0})), Error);
}

TEST_CASE("convexity of principal ideals and row bound sets") {
    for (const auto& s : small_shapes()) {
        if (s.n() > 3)
            continue;
        for (const auto& beta : enumerate_tuples(s.rsubset(), Family::upper))
            REQUIRE(is_convex(row_bound_set(beta, s)));
    }
}

}

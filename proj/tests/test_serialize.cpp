#include <doctest.h>

#include "parakat/serialize.hpp"

using namespace parakat;

TEST_SUITE("serialize") {

TEST_CASE("integer lists") {
    std::vector<int> div;
    CHECK(parse_int_list("(2,7,5;8,6,6,9,9;9)", &div) == std::vector<int>{2, 7, 5, 8, 6, 6, 9, 9, 9});
    CHECK(div == std::vector<int>{3, 8});
    CHECK(parse_int_list("1 2  3") == std::vector<int>{1, 2, 3});
    CHECK(parse_int_list("[4,5]") == std::vector<int>{4, 5});
    CHECK(parse_int_list("").empty());
    CHECK(parse_int_list("-3") == std::vector<int>{-3});
    CHECK_THROWS_AS(parse_int_list("1,a"), Error);
    CHECK_THROWS_AS(parse_int_list("99999999999"), Error);
    CHECK_THROWS_AS(parse_int_list("1-2"), Error);
}

TEST_CASE("text forms") {
    const RTuple t(RSubset(9, {3, 8}), {2, 7, 5, 8, 6, 6, 9, 9, 9});
    CHECK(to_text(t) == "(2,7,5;8,6,6,9,9;9)");
    CHECK(to_text(RSubset(9, {3, 8})) == "{3,8}");
    CHECK(to_text(Shape({2, 1, 0})) == "(2,1,0)");
    CHECK(to_text(Tableau(Shape({2, 1, 0}), {{1, 3}, {3}})) == "(1,3|3)");
    const auto c = classify(t);
    CHECK(to_text(c).find("gapless_core: true\n") != std::string::npos);
}

TEST_CASE("JSON round trips") {
    const RTuple t(RSubset(9, {3, 8}), {2, 7, 5, 8, 6, 6, 9, 9, 9});
    CHECK(to_json(t).dump() == R"({"n":9,"R":[3,8],"entries":[2,7,5,8,6,6,9,9,9]})");
    CHECK(tuple_from_json(Json::parse(to_json(t).dump())) == t);

    const RPermutation p(RSubset(9, {3, 8}), {2, 4, 6, 1, 5, 7, 8, 9, 3});
    CHECK(perm_from_json(Json::parse(to_json(p).dump())) == p);

    const auto cl = critical_list(t);
    CHECK(critlist_from_json(Json::parse(to_json(cl).dump())) == cl);

    const Tableau tab(Shape({2, 1, 0}), {{1, 3}, {3}});
    CHECK(to_json(tab).dump() == R"({"lambda":[2,1,0],"n":3,"columns":[[1,3],[3]]})");
    CHECK(tableau_from_json(Json::parse(to_json(tab).dump())) == tab);

    Polynomial poly(3);
    poly.add({1, 1, 0}, 1);
    poly.add({0, 1, 1}, 1);
    poly.add({1, 0, 1}, 1);
    CHECK(to_json(poly).dump() ==
          R"({"n":3,"terms":[{"exp":[1,1,0],"coef":1},{"exp":[1,0,1],"coef":1},{"exp":[0,1,1],"coef":1}]})");
    CHECK(poly_from_json(Json::parse(to_json(poly).dump())) == poly);
}

TEST_CASE("malformed JSON input") {
    CHECK_THROWS_AS(tuple_from_json(Json::parse(R"({"n":3})")), Error);
    CHECK_THROWS_AS(tuple_from_json(Json::parse(R"({"n":3,"R":[1],"entries":[1,2]})")), Error);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"lambda":[1,0],"n":3,"columns":[[1]]})")), Error);
    CHECK_THROWS_AS(perm_from_json(Json::parse(R"({"n":2,"one_line":"12"})")), Error);
}

TEST_CASE("CSV forms") {
    const RTuple t(RSubset(3, {1}), {1, 2, 3});
    CHECK(to_csv(t) == "n,R,entries\n3,1,1 2 3\n");
    const TableauSet set(Shape({1, 0}), {Tableau(Shape({1, 0}), {{2}}), Tableau(Shape({1, 0}), {{1}})});
    CHECK(to_csv(set) == "lambda,columns\n1 0,1\n1 0,2\n");
    Polynomial p(2);
    p.add({1, 0}, 2);
    CHECK(to_csv(p) == "exp,coef\n1 0,2\n");
}

}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "parakat/polys.hpp"
#include "parakat/tableaux.hpp"

using namespace parakat;

namespace {

std::mt19937 rng(20240611u);

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

RSubset random_rsubset(int n) {
    std::vector<int> q;
    for (int i = 1; i < n; ++i)
        if (uniform(0, 1))
            q.push_back(i);
    return RSubset(n, q);
}

RTuple random_upper(const RSubset& r) {
    std::vector<int> e;
    for (int i = 1; i <= r.n(); ++i)
        e.push_back(uniform(i, r.n()));
    return RTuple(r, e);
}

Shape random_shape(int n, int max_col) {
    std::vector<int> parts;
    for (int i = 0; i < n; ++i)
        parts.push_back(uniform(0, max_col));
    std::sort(parts.rbegin(), parts.rend());
    return Shape(parts);
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("core is the least member of its class") {
    for (int trial = 0; trial < 4000; ++trial) {
        const int n = uniform(1, 8);
        const auto u = random_upper(random_rsubset(n));
        const auto d = core(u);
        REQUIRE(is_r_increasing(d));
        REQUIRE(is_upper(d));
        REQUIRE(d.leq(u));
        REQUIRE(core(d) == d);
        REQUIRE(equivalent(u, d));
        REQUIRE(critical_list(d) == critical_list(u));
        const auto [lo, hi] = class_interval(u);
        REQUIRE(lo == d);
        REQUIRE(u.leq(hi));
        REQUIRE(equivalent(hi, u));
        REQUIRE(from_critical_list(critical_list(u), TupleKind::shell) == hi);
        if (n <= 6)
            REQUIRE(d.entries() == oracle::core(u.entries(), u.rsubset().dividers()));
    }
}

TEST_CASE("equivalence agrees with the critical list") {
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = uniform(1, 7);
        const auto r = random_rsubset(n);
        const auto a = random_upper(r), b = random_upper(r);
        REQUIRE(equivalent(a, b) == (core(a) == core(b)));
        REQUIRE(equivalent(a, b) == (critical_list(a) == critical_list(b)));
    }
}

TEST_CASE("rank tuple and projection") {
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = uniform(1, 8);
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 1);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const auto r = random_rsubset(n);
        const auto p = r_projection(sigma, r);
        const auto psi = rank_tuple(p);
        REQUIRE(is_r_increasing(psi));
        REQUIRE(is_upper(psi));
        if (is_r312_avoiding(p)) {
            REQUIRE(pi_map(psi) == p);
            const auto lift = minimal_lift(p).one_line();
            REQUIRE(is_312_avoiding(lift));
            REQUIRE(r_projection(lift, r) == p);
        }
    }
}

TEST_CASE("scanning yields a key above the tableau") {
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = random_shape(uniform(1, 5), uniform(1, 3));
        const auto all = all_tableaux(s);
        const auto& m = all.members();
        const auto& t = m[static_cast<std::size_t>(uniform(0, static_cast<int>(m.size()) - 1))];
        const auto k = scanning(t);
        REQUIRE(k.is_key());
        REQUIRE(t.leq(k));
        REQUIRE(scanning(k) == k);
        REQUIRE(content(k).size() == content(t).size());
    }
}

TEST_CASE("meet and join are lattice operations") {
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = random_shape(uniform(1, 5), uniform(1, 3));
        const auto all = all_tableaux(s);
        const auto& m = all.members();
        auto pick = [&] { return m[static_cast<std::size_t>(uniform(0, static_cast<int>(m.size()) - 1))]; };
        const auto a = pick(), b = pick();
        const auto lo = meet(a, b), hi = join(a, b);
        REQUIRE(lo.leq(a));
        REQUIRE(lo.leq(b));
        REQUIRE(a.leq(hi));
        REQUIRE(b.leq(hi));
        REQUIRE(all.contains(lo));
        REQUIRE(all.contains(hi));
    }
}

TEST_CASE("the full row bound gives a symmetric polynomial") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_shape(uniform(2, 4), uniform(1, 2));
        std::vector<int> top(static_cast<std::size_t>(s.n()), s.n());
        const RTuple beta(s.rsubset(), top);
        const auto p = row_bound_sum(beta, s).poly;
        for (int i = 1; i < s.n(); ++i)
            REQUIRE(isobaric_divided_difference(p, i) == p);
    }
}

}

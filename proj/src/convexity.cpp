#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parakat/tableaux.hpp"

namespace parakat {

namespace {

using Rational = boost::multiprecision::cpp_rational;

/// Phase-one simplex with Bland's rule: is b a convex combination of the
/// given points? Exact arithmetic throughout.
bool in_convex_hull(const std::vector<std::vector<int>>& points, const std::vector<int>& b) {
    const std::size_t dim = b.size();
    const std::size_t m = dim + 1;           // coordinates plus the sum-to-one row
    const std::size_t k = points.size();
    const std::size_t cols = k + m;          // point weights, then artificials
    // Row-major tableau with the right-hand side in the last column.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            a[r][c] = r < dim ? points[c][r] : 1;
        a[r][k + r] = 1;
        a[r][cols] = r < dim ? b[r] : 1;
        // Keep the right-hand side nonnegative (coordinates are >= 1 anyway).
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r)
        basis[r] = k + r;

    // Reduced costs of the phase-one objective: minimize the artificial sum.
    auto reduced_cost = [&](std::size_t c) {
        Rational cost = c >= k ? 1 : 0;
        for (std::size_t r = 0; r < m; ++r)
            if (basis[r] >= k)
                cost -= a[r][c];
        return cost;
    };

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (reduced_cost(c) < 0) {
                enter = c;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (a[r][enter] <= 0)
                continue;
            Rational ratio = a[r][cols] / a[r][enter];
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m)
            break;  // unbounded direction; cannot happen for phase one
        const Rational pivot = a[leave][enter];
        for (auto& v : a[leave])
            v /= pivot;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || a[r][enter] == 0)
                continue;
            const Rational factor = a[r][enter];
            for (std::size_t c = 0; c <= cols; ++c)
                a[r][c] -= factor * a[leave][c];
        }
        basis[leave] = enter;
    }
    Rational residual = 0;
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] >= k)
            residual += a[r][cols];
    return residual == 0;
}

} // namespace

bool is_convex(const TableauSet& set) {
    if (set.size() <= 1)
        return true;
    const auto& items = set.members();
    Tableau lo = items.front();
    Tableau hi = items.front();
    for (const auto& t : items) {
        lo = meet(lo, t);
        hi = join(hi, t);
    }
    // Any lattice point of the hull is a tableau between lo and hi.
    std::vector<Tableau> missing;
    for_each_tableau(set.shape(), hi, [&](const Tableau& t) {
        if (lo.leq(t) && !set.contains(t))
            missing.push_back(t);
        return true;
    });
    if (missing.empty())
        return true;

    std::vector<std::vector<int>> points;
    points.reserve(items.size());
    for (const auto& t : items)
        points.push_back(t.flat());

    // Cheap witness first: an integral midpoint that is missing.
    if (points.size() <= 2000) {
        std::vector<std::vector<int>> gaps;
        for (const auto& t : missing)
            gaps.push_back(t.flat());
        std::sort(gaps.begin(), gaps.end());
        std::vector<int> mid(points.front().size());
        for (std::size_t x = 0; x < points.size(); ++x)
            for (std::size_t y = x + 1; y < points.size(); ++y) {
                bool integral = true;
                for (std::size_t c = 0; c < mid.size() && integral; ++c) {
                    const int s = points[x][c] + points[y][c];
                    integral = s % 2 == 0;
                    mid[c] = s / 2;
                }
                if (integral && std::binary_search(gaps.begin(), gaps.end(), mid))
                    return false;
            }
    }
    for (const auto& t : missing)
        if (in_convex_hull(points, t.flat()))
            return false;
    return true;
}

} // namespace parakat

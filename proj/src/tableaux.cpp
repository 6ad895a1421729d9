#include "parakat/tableaux.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace parakat {

Limits default_limits() {
    Limits limits;
    if (const char* env = std::getenv("PARAKAT_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0')
            limits.cap = v;
    }
    return limits;
}

// ------------------------------------------------------------------ Shape

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    require(!parts_.empty(), ErrorCode::InvalidArgument, "shape needs n >= 1 parts");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 0, ErrorCode::InvalidArgument, "shape parts must be nonnegative");
        if (i > 0)
            require(parts_[i] <= parts_[i - 1], ErrorCode::InvalidArgument,
                    "shape parts must be weakly decreasing");
    }
}

int Shape::column_length(int j) const {
    if (j == 0)
        return n();
    int len = 0;
    for (int p : parts_)
        if (p >= j)
            ++len;
    return len;
}

int Shape::size() const noexcept {
    int s = 0;
    for (int p : parts_)
        s += p;
    return s;
}

bool Shape::is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1])
            return false;
    return true;
}

RSubset Shape::rsubset() const {
    std::vector<int> q;
    for (int j = width(); j >= 1; --j) {
        const int len = column_length(j);
        if (len < n() && (q.empty() || q.back() != len))
            q.push_back(len);
    }
    return RSubset(n(), std::move(q));
}

std::vector<Shape> all_shapes(int n, int max_col) {
    std::vector<Shape> out;
    std::vector<int> parts;
    std::function<void(int)> build = [&](int bound) {
        if (static_cast<int>(parts.size()) == n) {
            out.emplace_back(parts);
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            parts.push_back(v);
            build(v);
            parts.pop_back();
        }
    };
    build(max_col);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- Tableau

bool is_semistandard(const Shape& shape, const std::vector<std::vector<int>>& columns) {
    if (static_cast<int>(columns.size()) != shape.width())
        return false;
    for (int j = 1; j <= shape.width(); ++j) {
        const auto& col = columns[static_cast<std::size_t>(j - 1)];
        if (static_cast<int>(col.size()) != shape.column_length(j))
            return false;
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[i] < 1 || col[i] > shape.n())
                return false;
            if (i > 0 && col[i] <= col[i - 1])
                return false;
            if (j > 1 && col[i] < columns[static_cast<std::size_t>(j - 2)][i])
                return false;
        }
    }
    return true;
}

Tableau::Tableau(Shape shape, std::vector<std::vector<int>> columns)
    : shape_(std::move(shape)), cols_(std::move(columns)) {
    require(is_semistandard(shape_, cols_), ErrorCode::InvalidArgument,
            "columns do not form a semistandard tableau of the shape");
}

std::vector<int> Tableau::flat() const {
    std::vector<int> out;
    for (const auto& c : cols_)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

bool Tableau::leq(const Tableau& other) const {
    require(shape_ == other.shape_, ErrorCode::ShapeMismatch, "tableaux of different shapes");
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (std::size_t i = 0; i < cols_[j].size(); ++i)
            if (cols_[j][i] > other.cols_[j][i])
                return false;
    return true;
}

bool Tableau::is_key() const {
    // Columns only shrink left to right, so nesting of neighbours suffices.
    for (std::size_t j = 1; j < cols_.size(); ++j)
        if (!std::includes(cols_[j - 1].begin(), cols_[j - 1].end(), cols_[j].begin(), cols_[j].end()))
            return false;
    return true;
}

namespace {

Tableau entrywise(const Tableau& a, const Tableau& b, bool take_max) {
    require(a.shape() == b.shape(), ErrorCode::ShapeMismatch, "tableaux of different shapes");
    auto cols = a.columns();
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) {
            const int other = b.columns()[j][i];
            cols[j][i] = take_max ? std::max(cols[j][i], other) : std::min(cols[j][i], other);
        }
    return Tableau(a.shape(), std::move(cols));
}

} // namespace

Tableau meet(const Tableau& a, const Tableau& b) { return entrywise(a, b, false); }
Tableau join(const Tableau& a, const Tableau& b) { return entrywise(a, b, true); }

// ------------------------------------------------------------- TableauSet

TableauSet::TableauSet(Shape shape, std::vector<Tableau> members)
    : shape_(std::move(shape)), items_(std::move(members)) {
    for (const auto& t : items_)
        require(t.shape() == shape_, ErrorCode::ShapeMismatch, "set member has a different shape");
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool TableauSet::contains(const Tableau& t) const {
    return std::binary_search(items_.begin(), items_.end(), t);
}

// ------------------------------------------------------------------- keys

Tableau minimal_tableau(const Shape& shape) {
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= shape.width(); ++j) {
        std::vector<int> col(static_cast<std::size_t>(shape.column_length(j)));
        for (std::size_t i = 0; i < col.size(); ++i)
            col[i] = static_cast<int>(i) + 1;
        cols.push_back(std::move(col));
    }
    return Tableau(shape, std::move(cols));
}

Tableau key_of_chain(const RChain& b, const Shape& shape) {
    const auto r = shape.rsubset();
    require(b.rsubset() == r, ErrorCode::ShapeMismatch, "chain R differs from R_lambda");
    std::vector<std::vector<int>> cols;
    for (int k = 0; k < shape.part(shape.n()); ++k)
        cols.push_back(b.block(r.r() + 1));
    for (int h = r.r(); h >= 1; --h) {
        const int copies = shape.part(r.q(h)) - shape.part(r.q(h + 1));
        for (int k = 0; k < copies; ++k)
            cols.push_back(b.block(h));
    }
    return Tableau(shape, std::move(cols));
}

Tableau key_of_perm(const RPermutation& p, const Shape& shape) {
    require(p.rsubset() == shape.rsubset(), ErrorCode::ShapeMismatch,
            "permutation R differs from R_lambda");
    return key_of_chain(to_chain(p), shape);
}

RTuple row_end_list(const Tableau& t) {
    const auto& shape = t.shape();
    std::vector<int> w(static_cast<std::size_t>(shape.n()));
    for (int i = 1; i <= shape.n(); ++i)
        w[static_cast<std::size_t>(i - 1)] = t.at(shape.part(i), i);
    return RTuple(shape.rsubset(), std::move(w));
}

std::vector<int> content(const Tableau& t) {
    std::vector<int> theta(static_cast<std::size_t>(t.shape().n()), 0);
    for (const auto& col : t.columns())
        for (int v : col)
            ++theta[static_cast<std::size_t>(v - 1)];
    return theta;
}

namespace {

/// Largest tableau whose row i ends at most at bound_i: U_j(i) is the
/// minimum of bound_k - (k - i) over rows k ∈ [i, ζ_j].
Tableau max_under_row_bounds(const RTuple& bound, const Shape& shape) {
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= shape.width(); ++j) {
        const int len = shape.column_length(j);
        std::vector<int> col(static_cast<std::size_t>(len));
        int best = bound.at(len);
        for (int i = len; i >= 1; --i) {
            best = std::min(best, bound.at(i));
            col[static_cast<std::size_t>(i - 1)] = best;
            best -= 1;
        }
        cols.push_back(std::move(col));
    }
    return Tableau(shape, std::move(cols));
}

} // namespace

Tableau row_end_max(const RTuple& alpha, const Shape& shape) {
    require(alpha.rsubset() == shape.rsubset(), ErrorCode::ShapeMismatch,
            "tuple R differs from R_lambda");
    require(is_upper(alpha) && is_r_increasing(alpha), ErrorCode::NotIncreasingUpper,
            "row_end_max needs an R-increasing upper tuple");
    // An R-increasing upper tuple is its own core, so the row bound maximum
    // already ends each row exactly at alpha.
    return max_under_row_bounds(alpha, shape);
}

Tableau row_bound_max(const RTuple& beta, const Shape& shape) {
    require(beta.rsubset() == shape.rsubset(), ErrorCode::ShapeMismatch,
            "tuple R differs from R_lambda");
    require(is_upper(beta), ErrorCode::NotUpper, "row_bound_max needs an upper tuple");
    return max_under_row_bounds(beta, shape);
}

// --------------------------------------------------------------- scanning

Tableau scanning(const Tableau& t) {
    const auto& shape = t.shape();
    const int width = shape.width();
    std::vector<std::vector<int>> key(static_cast<std::size_t>(width));
    for (int j = 1; j <= width; ++j) {
        // Columns j..width, each consumed from the bottom up.
        std::vector<int> left;
        for (int c = j; c <= width; ++c)
            left.push_back(shape.column_length(c));
        auto& out = key[static_cast<std::size_t>(j - 1)];
        for (int row = 0; row < shape.column_length(j); ++row) {
            // Earliest weakly increasing sequence through the current
            // bottoms, starting in column j; its last value is kept.
            auto bottom = [&](std::size_t c) {
                return t.at(j + static_cast<int>(c), left[c]);
            };
            int last = bottom(0);
            --left[0];
            for (std::size_t c = 1; c < left.size(); ++c) {
                if (left[c] == 0 || bottom(c) < last)
                    continue;
                last = bottom(c);
                --left[c];
            }
            out.push_back(last);
        }
        std::sort(out.begin(), out.end());
    }
    return Tableau(shape, std::move(key));
}

bool is_gapless_key(const Tableau& y) {
    require(y.is_key(), ErrorCode::InvalidArgument, "is_gapless_key needs a key");
    const auto& shape = y.shape();
    const auto r = shape.rsubset();
    for (int h = 1; h <= r.r() - 1; ++h) {
        // Columns of length q_h and q_{h+1}; within a key these are all equal.
        const auto& inner = y.columns()[static_cast<std::size_t>(shape.part(r.q(h)) - 1)];
        const auto& outer = y.columns()[static_cast<std::size_t>(shape.part(r.q(h + 1)) - 1)];
        int b = 0;
        int i = 0;
        for (std::size_t row = 0; row < outer.size(); ++row)
            if (!std::binary_search(inner.begin(), inner.end(), outer[row])) {
                b = outer[row];
                i = static_cast<int>(row) + 1;
                break;
            }
        const int m = inner.back();
        if (b > m)
            continue;
        const int k = static_cast<int>(std::lower_bound(outer.begin(), outer.end(), m) - outer.begin()) + 1;
        for (int row = i; row <= k; ++row)
            if (outer[static_cast<std::size_t>(row - 1)] != b + (row - i))
                return false;
    }
    return true;
}

// ------------------------------------------------------------ enumeration

void for_each_tableau(const Shape& shape, const std::optional<Tableau>& upper,
                      const std::function<bool(const Tableau&)>& visit) {
    if (upper)
        require(upper->shape() == shape, ErrorCode::ShapeMismatch, "bound has a different shape");
    const int n = shape.n();
    const int width = shape.width();
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= width; ++j)
        cols.emplace_back(static_cast<std::size_t>(shape.column_length(j)), 0);
    // Cells in column-major order.
    std::vector<std::pair<int, int>> cells;
    for (int j = 1; j <= width; ++j)
        for (int i = 1; i <= shape.column_length(j); ++i)
            cells.emplace_back(j, i);

    bool stop = false;
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (stop)
            return;
        if (k == cells.size()) {
            if (!visit(Tableau(shape, cols)))
                stop = true;
            return;
        }
        const auto [j, i] = cells[k];
        const auto jj = static_cast<std::size_t>(j - 1);
        const auto ii = static_cast<std::size_t>(i - 1);
        int lo = i;
        if (i > 1)
            lo = std::max(lo, cols[jj][ii - 1] + 1);
        if (j > 1)
            lo = std::max(lo, cols[jj - 1][ii]);
        int hi = n - (shape.column_length(j) - i);
        if (upper)
            hi = std::min(hi, upper->at(j, i));
        for (int v = lo; v <= hi && !stop; ++v) {
            cols[jj][ii] = v;
            fill(k + 1);
        }
    };
    fill(0);
}

namespace {

TableauSet collect(const Shape& shape, const std::optional<Tableau>& upper, const Limits& limits,
                   const std::function<bool(const Tableau&)>& keep) {
    std::vector<Tableau> items;
    for_each_tableau(shape, upper, [&](const Tableau& t) {
        if (keep(t)) {
            if (items.size() >= limits.cap)
                fail(ErrorCode::CapExceeded,
                     "tableau set exceeds the cap of " + std::to_string(limits.cap));
            items.push_back(t);
        }
        return true;
    });
    return TableauSet(shape, std::move(items));
}

} // namespace

TableauSet all_tableaux(const Shape& shape, const Limits& limits) {
    return collect(shape, std::nullopt, limits, [](const Tableau&) { return true; });
}

TableauSet ideal(const Tableau& t, const Limits& limits) {
    return collect(t.shape(), t, limits, [](const Tableau&) { return true; });
}

TableauSet z_set(const RTuple& alpha, const Shape& shape, const Limits& limits) {
    const auto top = row_end_max(alpha, shape);
    return collect(shape, top, limits, [&](const Tableau& t) { return row_end_list(t) == alpha; });
}

TableauSet row_bound_set(const RTuple& beta, const Shape& shape, const Limits& limits) {
    require(beta.rsubset() == shape.rsubset(), ErrorCode::ShapeMismatch,
            "tuple R differs from R_lambda");
    require(is_upper(beta), ErrorCode::NotUpper, "row_bound_set needs an upper tuple");
    return collect(shape, std::nullopt, limits, [&](const Tableau& t) {
        for (int i = 1; i <= shape.n(); ++i)
            if (t.at(shape.part(i), i) > beta.at(i))
                return false;
        return true;
    });
}

TableauSet demazure_set(const RPermutation& p, const Shape& shape, const Limits& limits) {
    const auto y = key_of_perm(p, shape);
    return collect(shape, y, limits, [&](const Tableau& t) { return scanning(t).leq(y); });
}

} // namespace parakat

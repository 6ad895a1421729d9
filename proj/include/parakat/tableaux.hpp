#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "parakat/rperms.hpp"
#include "parakat/rtuples.hpp"

namespace parakat {

/// Materialization guard shared by every set-producing operation.
struct Limits {
    std::uint64_t cap = 10'000'000;
};

/// The default cap, overridden by the PARAKAT_CAP environment variable.
Limits default_limits();

/// A partition λ_1 ≥ ... ≥ λ_n ≥ 0.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);

    int n() const noexcept { return static_cast<int>(parts_.size()); }
    /// λ_i for i ∈ [1, n].
    int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// ζ_j for j ∈ [1, λ_1]; ζ_0 = n for the latent column.
    int column_length(int j) const;
    int size() const noexcept;  // |λ|
    bool is_strict() const;
    /// R_λ: the distinct column lengths other than 0 and n.
    RSubset rsubset() const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
};

/// Every partition with n parts and λ_1 ≤ max_col, in lexicographic order.
std::vector<Shape> all_shapes(int n, int max_col);

/// A semistandard tableau stored column by column.
class Tableau {
public:
    Tableau() = default;
    Tableau(Shape shape, std::vector<std::vector<int>> columns);

    const Shape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& columns() const noexcept { return cols_; }
    /// T_j(i); column 0 is the latent inert column with T_0(i) = i.
    int at(int j, int i) const {
        return j == 0 ? i : cols_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
    }
    /// Column-major concatenation of all values (a point of Z^{|λ|}).
    std::vector<int> flat() const;

    bool leq(const Tableau& other) const;
    bool is_key() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
        if (auto c = a.cols_ <=> b.cols_; c != 0)
            return c;
        return a.shape_ <=> b.shape_;
    }

private:
    Shape shape_;
    std::vector<std::vector<int>> cols_;
};

/// Validates semistandardness without throwing.
bool is_semistandard(const Shape& shape, const std::vector<std::vector<int>>& columns);

/// Sorted, deduplicated tableaux sharing one shape.
class TableauSet {
public:
    TableauSet() = default;
    TableauSet(Shape shape, std::vector<Tableau> members);

    const Shape& shape() const noexcept { return shape_; }
    const std::vector<Tableau>& members() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool contains(const Tableau& t) const;

    friend bool operator==(const TableauSet&, const TableauSet&) = default;

private:
    Shape shape_;
    std::vector<Tableau> items_;
};

Tableau meet(const Tableau& a, const Tableau& b);
Tableau join(const Tableau& a, const Tableau& b);

/// T⁰_λ with T_j(i) = i.
Tableau minimal_tableau(const Shape& shape);

/// Keys. Both throw ShapeMismatch when the divider sets differ from R_λ.
Tableau key_of_chain(const RChain& b, const Shape& shape);
Tableau key_of_perm(const RPermutation& p, const Shape& shape);

/// ω_i = T_{λ_i}(i), with ω_i = i on empty rows.
RTuple row_end_list(const Tableau& t);
/// Θ(T): occurrences of each value in [n].
std::vector<int> content(const Tableau& t);

/// M_λ(α). Throws NotIncreasingUpper (and ShapeMismatch on a foreign R).
Tableau row_end_max(const RTuple& alpha, const Shape& shape);
/// Q_λ(β). Throws NotUpper (and ShapeMismatch).
Tableau row_bound_max(const RTuple& beta, const Shape& shape);

/// S(T), the right key, by column scanning.
Tableau scanning(const Tableau& t);

/// Gapless condition on a λ-key. Throws InvalidArgument if y is not a key.
bool is_gapless_key(const Tableau& y);

/// Every tableau of the shape, optionally bounded above entrywise, in
/// lexicographic column-major order. The visitor may return false to stop.
void for_each_tableau(const Shape& shape, const std::optional<Tableau>& upper,
                      const std::function<bool(const Tableau&)>& visit);

TableauSet all_tableaux(const Shape& shape, const Limits& limits = default_limits());
/// The principal ideal [T].
TableauSet ideal(const Tableau& t, const Limits& limits = default_limits());
/// Z_λ(α). Throws NotIncreasingUpper.
TableauSet z_set(const RTuple& alpha, const Shape& shape, const Limits& limits = default_limits());
/// S_λ(β), built by filtering on the row bound inequalities. Throws NotUpper.
TableauSet row_bound_set(const RTuple& beta, const Shape& shape,
                         const Limits& limits = default_limits());
/// D_λ(π). Throws ShapeMismatch.
TableauSet demazure_set(const RPermutation& p, const Shape& shape,
                        const Limits& limits = default_limits());

/// Whether the set equals its lattice points' convex hull in Z^{|λ|}.
bool is_convex(const TableauSet& set);

} // namespace parakat

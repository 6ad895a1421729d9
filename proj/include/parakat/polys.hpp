#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "parakat/tableaux.hpp"

namespace parakat {

using Exponent = std::vector<int>;

/// Sparse polynomial in x_1..x_n with integer coefficients. Terms are kept
/// in descending lexicographic order of exponents; zeros are never stored.
class Polynomial {
public:
    using Terms = std::map<Exponent, std::int64_t, std::greater<>>;

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}
    static Polynomial monomial(const Exponent& e, std::int64_t coef = 1);

    int n() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coefficient(const Exponent& e) const;

    void add(const Exponent& e, std::int64_t coef);
    Polynomial& operator+=(const Polynomial& other);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int n_ = 0;
    Terms terms_;
};

/// "x1*x2 + x1*x3 + x2*x3" style rendering.
std::string to_text(const Polynomial& p);

/// 64-bit FNV-1a hash of the canonical text.
std::uint64_t fingerprint(const Polynomial& p);

/// A generating function together with the tableau set it sums over.
struct GFHandle {
    Polynomial poly;
    std::string provenance;
    std::shared_ptr<const TableauSet> set;
};

Polynomial weight_sum(const TableauSet& set);
GFHandle gen_fn(const TableauSet& set, std::string provenance = "set");

/// s_λ(β;x). Throws NotUpper.
GFHandle row_bound_sum(const RTuple& beta, const Shape& shape,
                       const Limits& limits = default_limits());
/// Row bound sum restricted to upper flags. Throws NotFlag.
GFHandle flag_schur(const RTuple& phi, const Shape& shape, const Limits& limits = default_limits());
/// Row bound sum restricted to gapless-core tuples. Throws NotGaplessCore.
GFHandle gapless_core_schur(const RTuple& eta, const Shape& shape,
                            const Limits& limits = default_limits());
/// d_λ(π;x) from the scanning-based Demazure set.
GFHandle demazure_poly(const RPermutation& p, const Shape& shape,
                       const Limits& limits = default_limits());

/// Coefficientwise equality.
bool poly_eq(const GFHandle& a, const GFHandle& b);
/// Identical as generating functions: equal underlying sets.
bool gf_identical(const GFHandle& a, const GFHandle& b);

/// The isobaric divided difference π_i, i ∈ [n-1].
Polynomial isobaric_divided_difference(const Polynomial& f, int i);

/// Reduced word s_{i_1}...s_{i_l} of w (one-line notation).
std::vector<int> reduced_word(std::span<const int> w);

/// Demazure character by divided differences applied to x^λ.
Polynomial demazure_poly_dd(const RPermutation& p, const Shape& shape);

/// π.λ: the exponent α with α_{π_i} = λ_i. Throws ShapeMismatch.
Exponent compose_alpha(const RPermutation& p, const Shape& shape);

} // namespace parakat

#include "parakat/polys.hpp"

#include <algorithm>
#include <sstream>

namespace parakat {

Polynomial Polynomial::monomial(const Exponent& e, std::int64_t coef) {
    Polynomial p(static_cast<int>(e.size()));
    p.add(e, coef);
    return p;
}

std::int64_t Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add(const Exponent& e, std::int64_t coef) {
    require(static_cast<int>(e.size()) == n_, ErrorCode::InvalidArgument,
            "exponent length does not match the number of variables");
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require(n_ == other.n_, ErrorCode::DomainMismatch, "polynomials in different variable counts");
    for (const auto& [e, c] : other.terms_)
        add(e, c);
    return *this;
}

std::string to_text(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t mag = c;
        if (first) {
            if (c < 0) {
                out << '-';
                mag = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            mag = c < 0 ? -c : c;
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (any)
                mono << '*';
            mono << 'x' << (i + 1);
            if (e[i] > 1)
                mono << '^' << e[i];
            any = true;
        }
        if (!any)
            out << mag;
        else if (mag == 1)
            out << mono.str();
        else
            out << mag << '*' << mono.str();
    }
    return out.str();
}

std::uint64_t fingerprint(const Polynomial& p) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : "n" + std::to_string(p.n()) + ":" + to_text(p)) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

// --------------------------------------------------------- generating fns

Polynomial weight_sum(const TableauSet& set) {
    Polynomial p(set.shape().n());
    for (const auto& t : set.members())
        p.add(content(t), 1);
    return p;
}

GFHandle gen_fn(const TableauSet& set, std::string provenance) {
    auto shared = std::make_shared<const TableauSet>(set);
    return GFHandle{weight_sum(*shared), std::move(provenance), std::move(shared)};
}

namespace {

std::string describe(const char* what, const std::vector<int>& v, const Shape& shape) {
    std::ostringstream out;
    out << what << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ") lambda=(";
    for (std::size_t i = 0; i < shape.parts().size(); ++i)
        out << (i ? "," : "") << shape.parts()[i];
    out << ")";
    return out.str();
}

} // namespace

GFHandle row_bound_sum(const RTuple& beta, const Shape& shape, const Limits& limits) {
    return gen_fn(row_bound_set(beta, shape, limits), describe("s", beta.entries(), shape));
}

GFHandle flag_schur(const RTuple& phi, const Shape& shape, const Limits& limits) {
    require(is_upper(phi) && is_flag(phi), ErrorCode::NotFlag, "flag_schur needs an upper flag");
    return row_bound_sum(phi, shape, limits);
}

GFHandle gapless_core_schur(const RTuple& eta, const Shape& shape, const Limits& limits) {
    require(is_gapless_core(eta), ErrorCode::NotGaplessCore,
            "gapless_core_schur needs a gapless-core tuple");
    return row_bound_sum(eta, shape, limits);
}

GFHandle demazure_poly(const RPermutation& p, const Shape& shape, const Limits& limits) {
    return gen_fn(demazure_set(p, shape, limits), describe("d", p.one_line(), shape));
}

bool poly_eq(const GFHandle& a, const GFHandle& b) {
    return a.poly == b.poly;
}

bool gf_identical(const GFHandle& a, const GFHandle& b) {
    if (!a.set || !b.set)
        return false;
    return *a.set == *b.set;
}

// ---------------------------------------------------- divided differences

Polynomial isobaric_divided_difference(const Polynomial& f, int i) {
    require(i >= 1 && i < f.n(), ErrorCode::InvalidArgument, "divided difference index out of range");
    const auto a = static_cast<std::size_t>(i - 1);
    const auto b = static_cast<std::size_t>(i);
    Polynomial out(f.n());
    for (const auto& [e, c] : f.terms()) {
        const int p = e[a];
        const int q = e[b];
        Exponent g = e;
        if (p >= q) {
            for (int k = 0; k <= p - q; ++k) {
                g[a] = p - k;
                g[b] = q + k;
                out.add(g, c);
            }
        } else {
            for (int k = 1; k <= q - p - 1; ++k) {
                g[a] = p + k;
                g[b] = q - k;
                out.add(g, -c);
            }
        }
    }
    return out;
}

std::vector<int> reduced_word(std::span<const int> w) {
    // Peel right descents: w = (w s_i) s_i with ℓ(w s_i) = ℓ(w) - 1.
    std::vector<int> cur(w.begin(), w.end());
    std::vector<int> reversed;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < cur.size() && cur[i] < cur[i + 1])
            ++i;
        if (i + 1 >= cur.size())
            break;
        std::swap(cur[i], cur[i + 1]);
        reversed.push_back(static_cast<int>(i) + 1);
    }
    return {reversed.rbegin(), reversed.rend()};
}

Polynomial demazure_poly_dd(const RPermutation& p, const Shape& shape) {
    require(p.rsubset() == shape.rsubset(), ErrorCode::ShapeMismatch,
            "permutation R differs from R_lambda");
    Polynomial f = Polynomial::monomial(shape.parts());
    const auto word = reduced_word(p.one_line());
    // π_w = π_{i_1} ... π_{i_l}; the rightmost operator acts first.
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        f = isobaric_divided_difference(f, *it);
    return f;
}

Exponent compose_alpha(const RPermutation& p, const Shape& shape) {
    require(p.rsubset() == shape.rsubset(), ErrorCode::ShapeMismatch,
            "permutation R differs from R_lambda");
    Exponent alpha(static_cast<std::size_t>(shape.n()));
    for (int i = 1; i <= shape.n(); ++i)
        alpha[static_cast<std::size_t>(p.at(i) - 1)] = shape.part(i);
    return alpha;
}

} // namespace parakat

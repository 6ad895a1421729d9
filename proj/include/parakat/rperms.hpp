#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parakat/rtuples.hpp"

namespace parakat {

/// A permutation of [n] that is strictly increasing on every carrel of R.
/// Plain permutations are carried with the full divider set R = [n-1].
class RPermutation {
public:
    RPermutation() = default;
    RPermutation(RSubset r, std::vector<int> one_line);

    static RPermutation plain(std::vector<int> one_line);
    static RPermutation identity(const RSubset& r);

    const RSubset& rsubset() const noexcept { return r_; }
    int n() const noexcept { return r_.n(); }
    int at(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const noexcept { return w_; }

    RTuple as_tuple() const { return RTuple(r_, w_); }

    friend bool operator==(const RPermutation&, const RPermutation&) = default;
    friend std::strong_ordering operator<=>(const RPermutation& a, const RPermutation& b) {
        if (auto c = a.w_ <=> b.w_; c != 0)
            return c;
        return a.r_ <=> b.r_;
    }

private:
    RSubset r_;
    std::vector<int> w_;
};

/// Nested sets B_1 ⊂ ... ⊂ B_r with |B_h| = q_h; B_0 = ∅ and B_{r+1} = [n]
/// are implicit. Each set is stored sorted ascending.
class RChain {
public:
    RChain() = default;
    RChain(RSubset r, std::vector<std::vector<int>> sets);

    const RSubset& rsubset() const noexcept { return r_; }
    /// B_h for h in [0, r+1].
    std::vector<int> block(int h) const;
    const std::vector<std::vector<int>>& sets() const noexcept { return b_; }

    friend bool operator==(const RChain&, const RChain&) = default;

private:
    RSubset r_;
    std::vector<std::vector<int>> b_;
};

/// A maximal run of consecutive integers [lo, hi].
struct Clump {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const Clump&, const Clump&) = default;
};

/// Clumps of a sorted set, in increasing order.
std::vector<Clump> clumps(std::span<const int> sorted_set);

bool is_permutation(std::span<const int> w);
bool is_312_avoiding(std::span<const int> w);
int inversion_count(std::span<const int> w);

/// Sorts each cohort within its carrel. sigma must be a permutation of [n].
RPermutation r_projection(std::span<const int> sigma, const RSubset& r);

bool is_r312_avoiding(const RPermutation& p);

RChain to_chain(const RPermutation& p);
RPermutation from_chain(const RChain& b);

bool is_rightmost_clump_deleting(const RChain& b);
/// The three reformulations: [b_{h+1}, m_h] ⊆ B_{h+1}; (b_{h+1}, m_h) ⊂ B_{h+1};
/// the new elements below m_h are the largest elements of [m_h] \ B_h.
bool rcd_closed_interval(const RChain& b);
bool rcd_open_interval(const RChain& b);
bool rcd_largest_missing(const RChain& b);

/// The rank R-tuple Ψ_R(p).
RTuple rank_tuple(const RPermutation& p);

/// Inverse of rank_tuple on the R-312-avoiding permutations. Throws NotGapless.
RPermutation pi_map(const RTuple& g);

/// Minimum-length 312-avoiding lift; returned with full R. Throws NotAvoiding.
RPermutation minimal_lift(const RPermutation& p);

/// Every 312-avoiding σ with R-projection p, in lexicographic order.
/// Throws NotAvoiding.
std::vector<RPermutation> all_lifts(const RPermutation& p);

/// R-permutations in lexicographic order of one-line notation.
void for_each_rperm(const RSubset& r, bool avoiding_only,
                    const std::function<void(const RPermutation&)>& visit);
std::vector<RPermutation> enumerate_rperms(const RSubset& r, bool avoiding_only);

/// C_n^R by brute-force filtering of S_n^R.
std::uint64_t count_cnr(const RSubset& r);
/// Sum of C_n^R over every R ⊆ [n-1].
std::uint64_t count_total(int n);

} // namespace parakat

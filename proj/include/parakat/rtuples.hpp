#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parakat/error.hpp"

namespace parakat {

/// A divider set R = {q_1 < ... < q_r} inside [n-1].
///
/// The dividers cut [n] into r+1 carrels (q_{h-1}, q_h], h = 1..r+1, with
/// q_0 = 0 and q_{r+1} = n. Carrel numbers and positions are 1-based.
class RSubset {
public:
    RSubset() = default;
    RSubset(int n, std::vector<int> dividers);

    static RSubset full(int n);
    static RSubset trivial(int n);

    int n() const noexcept { return n_; }
    int r() const noexcept { return static_cast<int>(q_.size()); }
    const std::vector<int>& dividers() const noexcept { return q_; }

    int carrel_count() const noexcept { return r() + 1; }
    /// q_h for h in [0, r+1].
    int q(int h) const { return h == 0 ? 0 : (h == r() + 1 ? n_ : q_[h - 1]); }
    int carrel_size(int h) const { return q(h) - q(h - 1); }
    /// Carrel number containing position i.
    int carrel_of(int i) const;
    bool contains(int q) const;
    bool is_full() const noexcept { return r() == n_ - 1; }

    /// Bitmask encoding with bit (q-1) set for each divider; used to order
    /// the subsets of [n-1] deterministically.
    std::uint64_t mask() const noexcept;

    friend bool operator==(const RSubset&, const RSubset&) = default;
    friend auto operator<=>(const RSubset&, const RSubset&) = default;

private:
    int n_ = 1;
    std::vector<int> q_;
};

/// Every R ⊆ [n-1], ordered by bitmask.
std::vector<RSubset> all_rsubsets(int n);

/// n! / (p_1! ... p_{r+1}!)
std::uint64_t multinomial(const RSubset& r);

/// An n-tuple over [n] equipped with the carrel dividers of R.
class RTuple {
public:
    RTuple() = default;
    RTuple(RSubset r, std::vector<int> entries);

    const RSubset& rsubset() const noexcept { return r_; }
    int n() const noexcept { return r_.n(); }
    /// 1-based access.
    int at(int i) const { return e_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& entries() const noexcept { return e_; }

    /// Entrywise comparison (the poset P(n)).
    bool leq(const RTuple& other) const;

    friend bool operator==(const RTuple&, const RTuple&) = default;
    /// Lexicographic on entries, then on R.
    friend std::strong_ordering operator<=>(const RTuple& a, const RTuple& b) {
        if (auto c = a.e_ <=> b.e_; c != 0)
            return c;
        return a.r_ <=> b.r_;
    }

private:
    RSubset r_;
    std::vector<int> e_;
};

struct CriticalPair {
    int index = 0;
    int entry = 0;

    friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
    friend auto operator<=>(const CriticalPair&, const CriticalPair&) = default;
};

/// Per-carrel sets of critical (index, entry) pairs, stored ascending by
/// index within each carrel. The last pair of carrel h has index q_h.
class CriticalList {
public:
    CriticalList() = default;
    CriticalList(RSubset r, std::vector<std::vector<CriticalPair>> carrels);

    const RSubset& rsubset() const noexcept { return r_; }
    const std::vector<std::vector<CriticalPair>>& carrels() const noexcept { return c_; }
    /// Concatenated critical entries are weakly increasing.
    bool is_flag() const;
    /// All pairs in ascending index order.
    std::vector<CriticalPair> pairs() const;

    friend bool operator==(const CriticalList&, const CriticalList&) = default;
    friend auto operator<=>(const CriticalList&, const CriticalList&) = default;

private:
    RSubset r_;
    std::vector<std::vector<CriticalPair>> c_;
};

struct Classification {
    bool upper = false;
    bool flag = false;
    bool r_increasing = false;
    bool gapless = false;
    bool gapless_core = false;
    bool shell = false;
    bool canopy = false;
    bool floor_flag = false;
    bool ceiling_flag = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

bool is_upper(const RTuple& t);
bool is_flag(const RTuple& t);
bool is_r_increasing(const RTuple& t);
bool is_gapless_core(const RTuple& t);
/// Gapless via the flag critical-list condition.
bool is_gapless(const RTuple& t);
/// Gapless via the staircase continuation condition across carrel
/// boundaries. Must agree with is_gapless on every R-increasing upper tuple.
bool is_gapless_staircase(const RTuple& t);
bool is_shell(const RTuple& t);
bool is_canopy(const RTuple& t);
bool is_floor_flag(const RTuple& t);
bool is_ceiling_flag(const RTuple& t);

/// Total: a non-upper tuple reports false for every upper-dependent flag.
Classification classify(const RTuple& t);

/// Throws NotUpper.
CriticalList critical_list(const RTuple& t);

/// The R-core map. Throws NotUpper.
RTuple core(const RTuple& t);

enum class TupleKind { increasing, shell, gapless, canopy, floor, ceiling };

/// Builds the unique tuple of the requested kind having critical list c.
/// The gapless, canopy, floor and ceiling kinds require a flag critical list
/// (NotFlagCriticalList otherwise).
RTuple from_critical_list(const CriticalList& c, TupleKind kind);

/// Both throw NotGapless.
RTuple floor_map(const RTuple& g);
RTuple ceiling_map(const RTuple& g);

/// Same critical list (equivalently, same core). Throws DomainMismatch when
/// n or R differ and NotUpper on non-upper input.
bool equivalent(const RTuple& a, const RTuple& b);

/// (core, shell) bounding the equivalence class of t. Throws NotUpper.
std::pair<RTuple, RTuple> class_interval(const RTuple& t);

enum class Family {
    upper,
    flag,
    increasing,
    gapless,
    gapless_core,
    floor,
    ceiling,
    shell,
    canopy,
};

/// Members of the family in lexicographic order of entries. Flag means
/// upper flag and increasing means R-increasing upper, matching the sets
/// UF_R(n) and UI_R(n).
void for_each_tuple(const RSubset& r, Family family,
                    const std::function<void(const RTuple&)>& visit);
std::vector<RTuple> enumerate_tuples(const RSubset& r, Family family);
bool in_family(const RTuple& t, Family family);

std::string to_string(TupleKind kind);
std::string to_string(Family family);
TupleKind parse_tuple_kind(std::string_view name);
Family parse_family(std::string_view name);

} // namespace parakat

#include "parakat/rtuples.hpp"

#include <algorithm>
#include <sstream>

namespace parakat {

namespace {

std::string describe(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

void require_upper(const RTuple& t, const char* op) {
    if (!is_upper(t))
        fail(ErrorCode::NotUpper, std::string(op) + ": tuple " + describe(t.entries()) + " is not upper");
}

} // namespace

// ---------------------------------------------------------------- RSubset

RSubset::RSubset(int n, std::vector<int> dividers) : n_(n), q_(std::move(dividers)) {
    require(n >= 1, ErrorCode::InvalidArgument, "n must be positive");
    for (std::size_t k = 0; k < q_.size(); ++k) {
        require(q_[k] >= 1 && q_[k] <= n - 1, ErrorCode::InvalidArgument,
                "divider " + std::to_string(q_[k]) + " outside [1, n-1]");
        require(k == 0 || q_[k - 1] < q_[k], ErrorCode::InvalidArgument,
                "dividers must be strictly increasing");
    }
}

RSubset RSubset::full(int n) {
    std::vector<int> q;
    for (int i = 1; i < n; ++i)
        q.push_back(i);
    return RSubset(n, std::move(q));
}

RSubset RSubset::trivial(int n) { return RSubset(n, {}); }

int RSubset::carrel_of(int i) const {
    auto it = std::lower_bound(q_.begin(), q_.end(), i);
    return static_cast<int>(it - q_.begin()) + 1;
}

bool RSubset::contains(int q) const { return std::binary_search(q_.begin(), q_.end(), q); }

std::uint64_t RSubset::mask() const noexcept {
    std::uint64_t m = 0;
    for (int q : q_)
        m |= std::uint64_t{1} << (q - 1);
    return m;
}

std::vector<RSubset> all_rsubsets(int n) {
    require(n >= 1 && n <= 63, ErrorCode::InvalidArgument, "n out of range");
    std::vector<RSubset> out;
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    for (std::uint64_t m = 0; m < limit; ++m) {
        std::vector<int> q;
        for (int b = 0; b < n - 1; ++b)
            if (m & (std::uint64_t{1} << b))
                q.push_back(b + 1);
        out.emplace_back(n, std::move(q));
    }
    return out;
}

std::uint64_t multinomial(const RSubset& r) {
    // prod_h C(n - q_{h-1}, p_h), each factor exact
    std::uint64_t total = 1;
    for (int h = 1; h <= r.carrel_count(); ++h) {
        const int avail = r.n() - r.q(h - 1);
        const int k = r.carrel_size(h);
        std::uint64_t c = 1;
        for (int j = 1; j <= k; ++j)
            c = c * static_cast<std::uint64_t>(avail - k + j) / static_cast<std::uint64_t>(j);
        total *= c;
    }
    return total;
}

// ----------------------------------------------------------------- RTuple

RTuple::RTuple(RSubset r, std::vector<int> entries) : r_(std::move(r)), e_(std::move(entries)) {
    require(static_cast<int>(e_.size()) == r_.n(), ErrorCode::InvalidArgument,
            "tuple has " + std::to_string(e_.size()) + " entries, expected " + std::to_string(r_.n()));
    for (int v : e_)
        require(v >= 1 && v <= r_.n(), ErrorCode::InvalidArgument,
                "entry " + std::to_string(v) + " outside [1, n]");
}

bool RTuple::leq(const RTuple& other) const {
    if (e_.size() != other.e_.size())
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

// ----------------------------------------------------------- CriticalList

CriticalList::CriticalList(RSubset r, std::vector<std::vector<CriticalPair>> carrels)
    : r_(std::move(r)), c_(std::move(carrels)) {
    require(static_cast<int>(c_.size()) == r_.carrel_count(), ErrorCode::InvalidArgument,
            "critical list needs one set of pairs per carrel");
    const int n = r_.n();
    for (int h = 1; h <= r_.carrel_count(); ++h) {
        const auto& set = c_[static_cast<std::size_t>(h - 1)];
        const std::string where = "carrel " + std::to_string(h);
        require(!set.empty(), ErrorCode::InvalidArgument, where + " has no critical pairs");
        require(set.back().index == r_.q(h), ErrorCode::InvalidArgument,
                where + " must end at index q_h");
        for (std::size_t u = 0; u < set.size(); ++u) {
            const auto& p = set[u];
            require(p.index > r_.q(h - 1) && p.index <= r_.q(h), ErrorCode::InvalidArgument,
                    where + ": index outside carrel");
            require(p.entry >= p.index && p.entry <= n, ErrorCode::InvalidArgument,
                    where + ": entry must lie in [index, n]");
            if (u > 0) {
                const auto& left = set[u - 1];
                require(left.index < p.index, ErrorCode::InvalidArgument,
                        where + ": indices must increase");
                require(p.entry - left.entry > p.index - left.index, ErrorCode::InvalidArgument,
                        where + ": consecutive critical entries must outgrow their indices");
            }
        }
    }
}

bool CriticalList::is_flag() const {
    int last = 0;
    for (const auto& set : c_)
        for (const auto& p : set) {
            if (p.entry < last)
                return false;
            last = p.entry;
        }
    return true;
}

std::vector<CriticalPair> CriticalList::pairs() const {
    std::vector<CriticalPair> out;
    for (const auto& set : c_)
        out.insert(out.end(), set.begin(), set.end());
    return out;
}

// ------------------------------------------------------------- predicates

bool is_upper(const RTuple& t) {
    for (int i = 1; i <= t.n(); ++i)
        if (t.at(i) < i)
            return false;
    return true;
}

bool is_flag(const RTuple& t) {
    return std::is_sorted(t.entries().begin(), t.entries().end());
}

bool is_r_increasing(const RTuple& t) {
    const auto& r = t.rsubset();
    for (int i = 2; i <= t.n(); ++i)
        if (r.carrel_of(i) == r.carrel_of(i - 1) && t.at(i) <= t.at(i - 1))
            return false;
    return true;
}

bool is_gapless_core(const RTuple& t) {
    return is_upper(t) && critical_list(t).is_flag();
}

bool is_gapless(const RTuple& t) {
    return is_r_increasing(t) && is_gapless_core(t);
}

bool is_gapless_staircase(const RTuple& t) {
    if (!is_upper(t) || !is_r_increasing(t))
        return false;
    const auto& r = t.rsubset();
    for (int h = 1; h <= r.r(); ++h) {
        const int qh = r.q(h);
        const int top = t.at(qh);
        if (top <= t.at(qh + 1))
            continue;
        const int s = top - t.at(qh + 1) + 1;
        if (s > r.carrel_size(h + 1))
            return false;
        for (int k = 1; k <= s; ++k)
            if (t.at(qh + k) != top - s + k)
                return false;
    }
    return true;
}

namespace {

std::vector<bool> critical_mask(const RTuple& t) {
    std::vector<bool> mask(static_cast<std::size_t>(t.n()) + 1, false);
    for (const auto& p : critical_list(t).pairs())
        mask[static_cast<std::size_t>(p.index)] = true;
    return mask;
}

} // namespace

bool is_shell(const RTuple& t) {
    if (!is_upper(t))
        return false;
    const auto crit = critical_mask(t);
    for (int i = 1; i <= t.n(); ++i)
        if (!crit[static_cast<std::size_t>(i)] && t.at(i) != t.n())
            return false;
    return true;
}

bool is_canopy(const RTuple& t) {
    return is_gapless_core(t) && is_shell(t);
}

bool is_floor_flag(const RTuple& t) {
    if (!is_upper(t) || !is_flag(t))
        return false;
    const int n = t.n();
    int start = 1;
    while (start <= n) {
        int end = start;
        while (end < n && t.at(end + 1) == t.at(start))
            ++end;
        if (end > start && !t.rsubset().contains(start))
            return false;
        start = end + 1;
    }
    return true;
}

bool is_ceiling_flag(const RTuple& t) {
    if (!is_upper(t) || !is_flag(t))
        return false;
    const auto crit = critical_mask(t);
    const auto& r = t.rsubset();
    // Plateaus are taken within carrels; their right ends must be exactly
    // the critical indices.
    for (int i = 1; i <= t.n(); ++i) {
        const bool run_ends = i == t.n() || r.carrel_of(i + 1) != r.carrel_of(i) ||
                              t.at(i + 1) != t.at(i);
        if (run_ends != crit[static_cast<std::size_t>(i)])
            return false;
    }
    return true;
}

Classification classify(const RTuple& t) {
    Classification c;
    c.upper = is_upper(t);
    c.flag = is_flag(t);
    c.r_increasing = is_r_increasing(t);
    if (!c.upper)
        return c;
    c.gapless_core = critical_list(t).is_flag();
    c.gapless = c.gapless_core && c.r_increasing;
    c.shell = is_shell(t);
    c.canopy = c.gapless_core && c.shell;
    c.floor_flag = is_floor_flag(t);
    c.ceiling_flag = is_ceiling_flag(t);
    return c;
}

// ------------------------------------------------- critical lists and core

CriticalList critical_list(const RTuple& t) {
    require_upper(t, "critical_list");
    const auto& r = t.rsubset();
    std::vector<std::vector<CriticalPair>> carrels;
    for (int h = 1; h <= r.carrel_count(); ++h) {
        const int lo = r.q(h - 1);
        std::vector<CriticalPair> set;
        int x = r.q(h);
        set.push_back({x, t.at(x)});
        for (;;) {
            int next = 0;
            for (int cand = x - 1; cand > lo; --cand)
                if (t.at(x) - t.at(cand) > x - cand) {
                    next = cand;
                    break;
                }
            if (next == 0)
                break;
            set.push_back({next, t.at(next)});
            x = next;
        }
        std::reverse(set.begin(), set.end());
        carrels.push_back(std::move(set));
    }
    return CriticalList(r, std::move(carrels));
}

RTuple core(const RTuple& t) {
    return from_critical_list(critical_list(t), TupleKind::increasing);
}

RTuple from_critical_list(const CriticalList& c, TupleKind kind) {
    const bool needs_flag = kind == TupleKind::gapless || kind == TupleKind::canopy ||
                            kind == TupleKind::floor || kind == TupleKind::ceiling;
    if (needs_flag && !c.is_flag())
        fail(ErrorCode::NotFlagCriticalList,
             "from_critical_list: " + to_string(kind) + " needs a flag critical list");

    const auto& r = c.rsubset();
    const int n = r.n();
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto at = [&](int i) -> int& { return e[static_cast<std::size_t>(i - 1)]; };

    int prev = 0;
    for (const auto& [x, y] : c.pairs()) {
        at(x) = y;
        const bool opens_carrel = r.carrel_of(x) >= 2 && prev == r.q(r.carrel_of(x) - 1);
        for (int i = prev + 1; i < x; ++i) {
            switch (kind) {
            case TupleKind::increasing:
            case TupleKind::gapless:
                at(i) = y - (x - i);
                break;
            case TupleKind::shell:
            case TupleKind::canopy:
                at(i) = n;
                break;
            case TupleKind::floor:
                at(i) = opens_carrel ? std::max(at(prev), y - (x - i)) : y - (x - i);
                break;
            case TupleKind::ceiling:
                at(i) = y;
                break;
            }
        }
        prev = x;
    }
    return RTuple(r, std::move(e));
}

RTuple floor_map(const RTuple& g) {
    if (!is_gapless(g))
        fail(ErrorCode::NotGapless, "floor_map: tuple " + describe(g.entries()) + " is not gapless");
    return from_critical_list(critical_list(g), TupleKind::floor);
}

RTuple ceiling_map(const RTuple& g) {
    if (!is_gapless(g))
        fail(ErrorCode::NotGapless, "ceiling_map: tuple " + describe(g.entries()) + " is not gapless");
    return from_critical_list(critical_list(g), TupleKind::ceiling);
}

bool equivalent(const RTuple& a, const RTuple& b) {
    if (a.rsubset() != b.rsubset())
        fail(ErrorCode::DomainMismatch, "equivalent: tuples carry different n or R");
    return critical_list(a) == critical_list(b);
}

std::pair<RTuple, RTuple> class_interval(const RTuple& t) {
    const auto c = critical_list(t);
    return {from_critical_list(c, TupleKind::increasing), from_critical_list(c, TupleKind::shell)};
}

// ------------------------------------------------------------ enumeration

bool in_family(const RTuple& t, Family family) {
    switch (family) {
    case Family::upper: return is_upper(t);
    case Family::flag: return is_upper(t) && is_flag(t);
    case Family::increasing: return is_upper(t) && is_r_increasing(t);
    case Family::gapless: return is_upper(t) && is_gapless(t);
    case Family::gapless_core: return is_gapless_core(t);
    case Family::floor: return is_floor_flag(t);
    case Family::ceiling: return is_ceiling_flag(t);
    case Family::shell: return is_shell(t);
    case Family::canopy: return is_canopy(t);
    }
    return false;
}

void for_each_tuple(const RSubset& r, Family family,
                    const std::function<void(const RTuple&)>& visit) {
    const int n = r.n();
    const bool weakly = family == Family::flag || family == Family::floor || family == Family::ceiling;
    const bool strictly = family == Family::increasing || family == Family::gapless;
    std::vector<int> e(static_cast<std::size_t>(n), 0);

    std::function<void(int)> fill = [&](int i) {
        if (i > n) {
            RTuple t(r, e);
            if (in_family(t, family))
                visit(t);
            return;
        }
        int lo = i;
        if (i > 1) {
            const int prev = e[static_cast<std::size_t>(i - 2)];
            if (weakly)
                lo = std::max(lo, prev);
            if (strictly && r.carrel_of(i) == r.carrel_of(i - 1))
                lo = std::max(lo, prev + 1);
        }
        for (int v = lo; v <= n; ++v) {
            e[static_cast<std::size_t>(i - 1)] = v;
            fill(i + 1);
        }
    };
    fill(1);
}

std::vector<RTuple> enumerate_tuples(const RSubset& r, Family family) {
    std::vector<RTuple> out;
    for_each_tuple(r, family, [&](const RTuple& t) { out.push_back(t); });
    return out;
}

std::string to_string(TupleKind kind) {
    switch (kind) {
    case TupleKind::increasing: return "increasing";
    case TupleKind::shell: return "shell";
    case TupleKind::gapless: return "gapless";
    case TupleKind::canopy: return "canopy";
    case TupleKind::floor: return "floor";
    case TupleKind::ceiling: return "ceiling";
    }
    return "?";
}

std::string to_string(Family family) {
    switch (family) {
    case Family::upper: return "upper";
    case Family::flag: return "flag";
    case Family::increasing: return "increasing";
    case Family::gapless: return "gapless";
    case Family::gapless_core: return "gapless-core";
    case Family::floor: return "floor";
    case Family::ceiling: return "ceiling";
    case Family::shell: return "shell";
    case Family::canopy: return "canopy";
    }
    return "?";
}

TupleKind parse_tuple_kind(std::string_view name) {
    for (auto k : {TupleKind::increasing, TupleKind::shell, TupleKind::gapless, TupleKind::canopy,
                   TupleKind::floor, TupleKind::ceiling})
        if (to_string(k) == name)
            return k;
    fail(ErrorCode::InvalidArgument, "unknown tuple kind '" + std::string(name) + "'");
}

Family parse_family(std::string_view name) {
    for (auto f : {Family::upper, Family::flag, Family::increasing, Family::gapless,
                   Family::gapless_core, Family::floor, Family::ceiling, Family::shell,
                   Family::canopy})
        if (to_string(f) == name)
            return f;
    fail(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

} // namespace parakat

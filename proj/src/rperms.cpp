#include "parakat/rperms.hpp"

#include <algorithm>
#include <numeric>

namespace parakat {

// ----------------------------------------------------------- RPermutation

bool is_permutation(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : w) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

RPermutation::RPermutation(RSubset r, std::vector<int> one_line)
    : r_(std::move(r)), w_(std::move(one_line)) {
    require(static_cast<int>(w_.size()) == r_.n(), ErrorCode::InvalidArgument,
            "permutation length does not match n");
    require(is_permutation(w_), ErrorCode::InvalidArgument, "entries are not a permutation of [n]");
    require(is_r_increasing(RTuple(r_, w_)), ErrorCode::InvalidArgument,
            "permutation is not increasing on every carrel");
}

RPermutation RPermutation::plain(std::vector<int> one_line) {
    const int n = static_cast<int>(one_line.size());
    return RPermutation(RSubset::full(n), std::move(one_line));
}

RPermutation RPermutation::identity(const RSubset& r) {
    std::vector<int> w(static_cast<std::size_t>(r.n()));
    std::iota(w.begin(), w.end(), 1);
    return RPermutation(r, std::move(w));
}

// ----------------------------------------------------------------- RChain

RChain::RChain(RSubset r, std::vector<std::vector<int>> sets) : r_(std::move(r)), b_(std::move(sets)) {
    require(static_cast<int>(b_.size()) == r_.r(), ErrorCode::InvalidArgument,
            "chain needs one set per divider");
    for (int h = 1; h <= r_.r(); ++h) {
        auto& set = b_[static_cast<std::size_t>(h - 1)];
        std::sort(set.begin(), set.end());
        require(std::adjacent_find(set.begin(), set.end()) == set.end(), ErrorCode::InvalidArgument,
                "chain set has repeated elements");
        require(static_cast<int>(set.size()) == r_.q(h), ErrorCode::InvalidArgument,
                "chain set B_" + std::to_string(h) + " must have q_h elements");
        for (int v : set)
            require(v >= 1 && v <= r_.n(), ErrorCode::InvalidArgument, "chain element outside [n]");
        if (h > 1) {
            const auto& prev = b_[static_cast<std::size_t>(h - 2)];
            require(std::includes(set.begin(), set.end(), prev.begin(), prev.end()),
                    ErrorCode::InvalidArgument, "chain sets must be nested");
        }
    }
}

std::vector<int> RChain::block(int h) const {
    if (h == 0)
        return {};
    if (h == r_.r() + 1) {
        std::vector<int> all(static_cast<std::size_t>(r_.n()));
        std::iota(all.begin(), all.end(), 1);
        return all;
    }
    return b_[static_cast<std::size_t>(h - 1)];
}

std::vector<Clump> clumps(std::span<const int> sorted_set) {
    std::vector<Clump> out;
    for (int v : sorted_set) {
        if (!out.empty() && out.back().hi + 1 == v)
            out.back().hi = v;
        else
            out.push_back({v, v});
    }
    return out;
}

// ------------------------------------------------------------ avoidance

bool is_312_avoiding(std::span<const int> w) {
    const std::size_t n = w.size();
    // For each middle b, look for a < b < c with w_b < w_c < w_a.
    for (std::size_t b = 1; b + 1 < n; ++b) {
        int left_max = 0;
        for (std::size_t a = 0; a < b; ++a)
            left_max = std::max(left_max, w[a]);
        for (std::size_t c = b + 1; c < n; ++c)
            if (w[b] < w[c] && w[c] < left_max)
                return false;
    }
    return true;
}

int inversion_count(std::span<const int> w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j])
                ++inv;
    return inv;
}

RPermutation r_projection(std::span<const int> sigma, const RSubset& r) {
    require(static_cast<int>(sigma.size()) == r.n() && is_permutation(sigma),
            ErrorCode::InvalidArgument, "r_projection needs a permutation of [n]");
    std::vector<int> w(sigma.begin(), sigma.end());
    for (int h = 1; h <= r.carrel_count(); ++h)
        std::sort(w.begin() + r.q(h - 1), w.begin() + r.q(h));
    return RPermutation(r, std::move(w));
}

bool is_r312_avoiding(const RPermutation& p) {
    const auto& r = p.rsubset();
    const int n = p.n();
    for (int h = 1; h <= r.r() - 1; ++h) {
        const int qh = r.q(h);
        const int qh1 = r.q(h + 1);
        for (int b = qh + 1; b <= qh1; ++b)
            for (int a = 1; a <= qh; ++a) {
                if (p.at(a) < p.at(b))
                    continue;
                for (int c = qh1 + 1; c <= n; ++c)
                    if (p.at(b) < p.at(c) && p.at(c) < p.at(a))
                        return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------- chains

RChain to_chain(const RPermutation& p) {
    const auto& r = p.rsubset();
    std::vector<std::vector<int>> sets;
    for (int h = 1; h <= r.r(); ++h)
        sets.emplace_back(p.one_line().begin(), p.one_line().begin() + r.q(h));
    return RChain(r, std::move(sets));
}

RPermutation from_chain(const RChain& b) {
    const auto& r = b.rsubset();
    std::vector<int> w;
    for (int h = 1; h <= r.carrel_count(); ++h) {
        const auto outer = b.block(h);
        const auto inner = b.block(h - 1);
        std::set_difference(outer.begin(), outer.end(), inner.begin(), inner.end(),
                            std::back_inserter(w));
    }
    return RPermutation(r, std::move(w));
}

namespace {

std::vector<int> new_elements(const RChain& b, int h) {
    const auto outer = b.block(h + 1);
    const auto inner = b.block(h);
    std::vector<int> diff;
    std::set_difference(outer.begin(), outer.end(), inner.begin(), inner.end(),
                        std::back_inserter(diff));
    return diff;
}

bool contains_sorted(const std::vector<int>& set, int v) {
    return std::binary_search(set.begin(), set.end(), v);
}

} // namespace

bool is_rightmost_clump_deleting(const RChain& b) {
    const auto& r = b.rsubset();
    for (int h = 1; h <= r.r(); ++h) {
        const auto outer = b.block(h + 1);
        const auto added = new_elements(b, h);
        const auto parts = clumps(outer);
        const int f = static_cast<int>(parts.size());
        bool ok = false;
        for (int e = 1; e <= f && !ok; ++e) {
            // L_e ∪ ... ∪ L_f ⊇ added ⊇ L_{e+1} ∪ ... ∪ L_f
            const int upper_lo = parts[static_cast<std::size_t>(e - 1)].lo;
            const bool covers = added.empty() || added.front() >= upper_lo;
            bool tail_new = true;
            for (int k = e + 1; k <= f && tail_new; ++k)
                for (int v = parts[static_cast<std::size_t>(k - 1)].lo;
                     v <= parts[static_cast<std::size_t>(k - 1)].hi; ++v)
                    if (!contains_sorted(added, v)) {
                        tail_new = false;
                        break;
                    }
            ok = covers && tail_new;
        }
        if (!ok)
            return false;
    }
    return true;
}

bool rcd_closed_interval(const RChain& b) {
    for (int h = 1; h <= b.rsubset().r(); ++h) {
        const auto outer = b.block(h + 1);
        const int lo = new_elements(b, h).front();
        const int m = b.block(h).back();
        for (int v = lo; v <= m; ++v)
            if (!contains_sorted(outer, v))
                return false;
    }
    return true;
}

bool rcd_open_interval(const RChain& b) {
    for (int h = 1; h <= b.rsubset().r(); ++h) {
        const auto outer = b.block(h + 1);
        const int lo = new_elements(b, h).front();
        const int m = b.block(h).back();
        for (int v = lo + 1; v < m; ++v)
            if (!contains_sorted(outer, v))
                return false;
    }
    return true;
}

bool rcd_largest_missing(const RChain& b) {
    for (int h = 1; h <= b.rsubset().r(); ++h) {
        const auto inner = b.block(h);
        const int m = inner.back();
        std::vector<int> below;
        for (int v : new_elements(b, h))
            if (v < m)
                below.push_back(v);
        std::vector<int> missing;
        for (int v = 1; v <= m; ++v)
            if (!contains_sorted(inner, v))
                missing.push_back(v);
        const std::vector<int> largest(missing.end() - static_cast<std::ptrdiff_t>(below.size()),
                                       missing.end());
        if (largest != below)
            return false;
    }
    return true;
}

// ------------------------------------------------------------ Ψ_R and Π_R

RTuple rank_tuple(const RPermutation& p) {
    const auto& r = p.rsubset();
    std::vector<int> psi(static_cast<std::size_t>(p.n()));
    for (int h = 1; h <= r.carrel_count(); ++h) {
        std::vector<int> bh(p.one_line().begin(), p.one_line().begin() + r.q(h));
        std::sort(bh.begin(), bh.end());
        // rank^{q_h - i + 1}(B_h) is the i-th smallest of the q_h elements.
        for (int i = r.q(h - 1) + 1; i <= r.q(h); ++i)
            psi[static_cast<std::size_t>(i - 1)] = bh[static_cast<std::size_t>(i - 1)];
    }
    return RTuple(r, std::move(psi));
}

RPermutation pi_map(const RTuple& g) {
    if (!is_gapless(g))
        fail(ErrorCode::NotGapless, "pi_map: tuple is not gapless");
    const auto& r = g.rsubset();
    std::vector<int> w(static_cast<std::size_t>(g.n()), 0);
    auto at = [&](int i) -> int& { return w[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i <= r.q(1); ++i)
        at(i) = g.at(i);
    for (int h = 1; h <= r.r(); ++h) {
        const int qh = r.q(h);
        const int top = g.at(qh);
        // An equal entry across the divider must also be refilled, since
        // top = max(B_h) is already used.
        const int s = top >= g.at(qh + 1) ? top - g.at(qh + 1) + 1 : 0;
        for (int i = qh + s + 1; i <= r.q(h + 1); ++i)
            at(i) = g.at(i);
        std::vector<bool> used(static_cast<std::size_t>(g.n()) + 1, false);
        for (int i = 1; i <= qh; ++i)
            used[static_cast<std::size_t>(at(i))] = true;
        std::vector<int> avail;  // descending
        for (int v = top; v >= 1; --v)
            if (!used[static_cast<std::size_t>(v)])
                avail.push_back(v);
        require(static_cast<int>(avail.size()) >= s, ErrorCode::NotGapless,
                "pi_map: not enough values for the left side");
        for (int i = qh + 1; i <= qh + s; ++i)
            at(i) = avail[static_cast<std::size_t>(qh + s - i)];
    }
    return RPermutation(r, std::move(w));
}

// ------------------------------------------------------------------ lifts

RPermutation minimal_lift(const RPermutation& p) {
    if (!is_r312_avoiding(p))
        fail(ErrorCode::NotAvoiding, "minimal_lift: permutation is R-312-containing");
    const auto& r = p.rsubset();
    std::vector<int> sigma(p.one_line().begin(), p.one_line().begin() + r.q(1));
    int m = r.q(1) > 0 ? *std::max_element(sigma.begin(), sigma.end()) : 0;
    for (int h = 1; h <= r.r(); ++h) {
        std::vector<int> cohort(p.one_line().begin() + r.q(h), p.one_line().begin() + r.q(h + 1));
        std::vector<int> below, above;
        for (int v : cohort)
            (v < m ? below : above).push_back(v);
        std::sort(below.rbegin(), below.rend());
        std::sort(above.begin(), above.end());
        sigma.insert(sigma.end(), below.begin(), below.end());
        sigma.insert(sigma.end(), above.begin(), above.end());
        m = std::max(m, *std::max_element(cohort.begin(), cohort.end()));
    }
    return RPermutation::plain(std::move(sigma));
}

namespace {

/// A run of positions of the minimal lift whose values may be permuted
/// among themselves.
struct LiftBlock {
    int first = 0;              // 1-based position of the first slot
    std::vector<int> values;    // ascending
    int keep_decreasing_below = 0;  // values below this must stay decreasing
};

std::vector<std::vector<int>> block_arrangements(const LiftBlock& block) {
    std::vector<std::vector<int>> out;
    std::vector<int> v = block.values;
    do {
        if (!is_312_avoiding(v))
            continue;
        bool ok = true;
        int last_small = 0;
        for (int x : v)
            if (x < block.keep_decreasing_below) {
                if (last_small != 0 && x > last_small) {
                    ok = false;
                    break;
                }
                last_small = x;
            }
        if (ok)
            out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

std::vector<RPermutation> all_lifts(const RPermutation& p) {
    const auto sigma = minimal_lift(p);
    const auto& r = p.rsubset();
    const auto chain = to_chain(p);

    std::vector<LiftBlock> blocks;
    // Clumps of B_1 sit on consecutive positions of the first carrel.
    {
        const auto b1 = chain.block(1);
        int pos = 1;
        for (const auto& c : clumps(b1)) {
            LiftBlock blk;
            blk.first = pos;
            for (int v = c.lo; v <= c.hi; ++v)
                blk.values.push_back(v);
            pos += c.hi - c.lo + 1;
            blocks.push_back(std::move(blk));
        }
    }
    for (int h = 1; h <= r.r(); ++h) {
        const auto inner = chain.block(h);
        const auto outer = chain.block(h + 1);
        const int m = inner.back();
        const auto parts = clumps(outer);
        int e = 0;
        for (int k = 0; k < static_cast<int>(parts.size()); ++k)
            for (int v = parts[static_cast<std::size_t>(k)].lo; v <= parts[static_cast<std::size_t>(k)].hi; ++v)
                if (contains_sorted(inner, v))
                    e = k;
        int pos = r.q(h) + 1;
        LiftBlock sub;
        sub.first = pos;
        sub.keep_decreasing_below = m;
        for (int v = parts[static_cast<std::size_t>(e)].lo; v <= parts[static_cast<std::size_t>(e)].hi; ++v)
            if (!contains_sorted(inner, v))
                sub.values.push_back(v);
        pos += static_cast<int>(sub.values.size());
        if (!sub.values.empty())
            blocks.push_back(std::move(sub));
        for (std::size_t k = static_cast<std::size_t>(e) + 1; k < parts.size(); ++k) {
            LiftBlock blk;
            blk.first = pos;
            for (int v = parts[k].lo; v <= parts[k].hi; ++v)
                blk.values.push_back(v);
            pos += parts[k].hi - parts[k].lo + 1;
            blocks.push_back(std::move(blk));
        }
    }

    std::vector<std::vector<std::vector<int>>> options;
    for (const auto& blk : blocks)
        options.push_back(block_arrangements(blk));

    std::vector<RPermutation> out;
    std::vector<int> w = sigma.one_line();
    std::function<void(std::size_t)> choose = [&](std::size_t k) {
        if (k == blocks.size()) {
            out.push_back(RPermutation::plain(w));
            return;
        }
        for (const auto& arrangement : options[k]) {
            std::copy(arrangement.begin(), arrangement.end(),
                      w.begin() + (blocks[k].first - 1));
            choose(k + 1);
        }
    };
    choose(0);
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------ enumeration

void for_each_rperm(const RSubset& r, bool avoiding_only,
                    const std::function<void(const RPermutation&)>& visit) {
    const int n = r.n();
    std::vector<int> w;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    std::function<void(int)> fill = [&](int i) {
        if (i > n) {
            RPermutation p(r, w);
            if (!avoiding_only || is_r312_avoiding(p))
                visit(p);
            return;
        }
        int lo = 1;
        if (i > 1 && r.carrel_of(i) == r.carrel_of(i - 1))
            lo = w.back() + 1;
        // leave room for the rest of the carrel
        const int remaining_in_carrel = r.q(r.carrel_of(i)) - i;
        for (int v = lo; v <= n - remaining_in_carrel; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            used[static_cast<std::size_t>(v)] = true;
            w.push_back(v);
            fill(i + 1);
            w.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    fill(1);
}

std::vector<RPermutation> enumerate_rperms(const RSubset& r, bool avoiding_only) {
    std::vector<RPermutation> out;
    for_each_rperm(r, avoiding_only, [&](const RPermutation& p) { out.push_back(p); });
    return out;
}

std::uint64_t count_cnr(const RSubset& r) {
    std::uint64_t count = 0;
    for_each_rperm(r, true, [&](const RPermutation&) { ++count; });
    return count;
}

std::uint64_t count_total(int n) {
    std::uint64_t total = 0;
    for (const auto& r : all_rsubsets(n))
        total += count_cnr(r);
    return total;
}

} // namespace parakat

#include "parakat/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace parakat {

namespace {

/// Results of one work item; merged in item order so output never depends
/// on scheduling.
struct Partial {
    std::uint64_t instances = 0;
    std::uint64_t checks = 0;
    std::vector<std::string> counterexamples;
    std::uint64_t counterexample_count = 0;
    std::vector<std::string> notes;
    std::map<std::string, std::uint64_t> tallies;

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++checks;
        if (ok)
            return;
        ++counterexample_count;
        if (counterexamples.size() < SuiteReport::kMaxCounterexamples)
            counterexamples.push_back(describe());
    }
};

template <class Item, class Work>
std::vector<Partial> run_items(const std::vector<Item>& items, int jobs, Work work) {
    std::vector<Partial> out(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < items.size(); k = next++) {
            try {
                out[k] = work(items[k]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

void merge_into(SuiteReport& report, const std::vector<Partial>& parts) {
    for (const auto& p : parts) {
        report.instances += p.instances;
        report.checks += p.checks;
        report.counterexample_count += p.counterexample_count;
        for (const auto& c : p.counterexamples)
            if (report.counterexamples.size() < SuiteReport::kMaxCounterexamples)
                report.counterexamples.push_back(c);
        report.notes.insert(report.notes.end(), p.notes.begin(), p.notes.end());
    }
}

void finish(SuiteReport& report, std::chrono::steady_clock::time_point start) {
    report.verdict = report.counterexample_count == 0 ? Verdict::pass : Verdict::fail;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<RSubset> all_pairs_range(int max_n) {
    std::vector<RSubset> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& r : all_rsubsets(n))
            out.push_back(r);
    return out;
}

void require_tuple_range(const SuiteOptions& opt) {
    require(opt.max_n >= 1, ErrorCode::InvalidArgument, "max_n must be at least 1");
    if (opt.max_n > kMaxTupleN)
        fail(ErrorCode::CapExceeded,
             "max_n " + std::to_string(opt.max_n) + " exceeds the cap " + std::to_string(kMaxTupleN));
}

void require_tableau_range(const SuiteOptions& opt) {
    require(opt.max_n >= 1 && opt.max_col >= 0, ErrorCode::InvalidArgument,
            "max_n must be at least 1 and max_col nonnegative");
    if (opt.max_n > kMaxTableauN)
        fail(ErrorCode::CapExceeded,
             "max_n " + std::to_string(opt.max_n) + " exceeds the cap " + std::to_string(kMaxTableauN));
}

std::string tableau_range(const SuiteOptions& opt) {
    return "n<=" + std::to_string(opt.max_n) + ", lambda_1<=" + std::to_string(opt.max_col) +
           (opt.all_shapes ? ", all shapes" : ", one shape per R_lambda");
}

std::string at_shape(const Shape& s) { return " [lambda=" + to_text(s) + "]"; }

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<std::uint64_t>(k);
    return f;
}

std::vector<RPermutation> all_plain_perms(int n) {
    return enumerate_rperms(RSubset::full(n), false);
}

} // namespace

std::vector<Shape> suite_shapes(const SuiteOptions& opt) {
    require_tableau_range(opt);
    std::vector<Shape> out;
    for (int n = 1; n <= opt.max_n; ++n) {
        if (opt.all_shapes) {
            for (auto& s : all_shapes(n, opt.max_col))
                out.push_back(std::move(s));
            continue;
        }
        for (const auto& r : all_rsubsets(n)) {
            if (r.r() > opt.max_col)
                continue;
            std::vector<int> parts(static_cast<std::size_t>(n), 0);
            for (int q : r.dividers())
                for (int i = 1; i <= q; ++i)
                    ++parts[static_cast<std::size_t>(i - 1)];
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

// ------------------------------------------------------------ bijections

SuiteReport suite_bijections(const SuiteOptions& opt) {
    require_tuple_range(opt);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.name = "bijections";
    report.range = "n<=" + std::to_string(opt.max_n) + ", all R";
    const auto items = all_pairs_range(opt.max_n);
    for (const auto& r : items)
        report.declared += multinomial(r);

    auto parts = run_items(items, opt.jobs, [](const RSubset& r) {
        Partial p;
        const std::string where = " [n=" + std::to_string(r.n()) + ", R=" + to_text(r) + "]";
        for (const auto& perm : enumerate_rperms(r, false)) {
            ++p.instances;
            const auto chain = to_chain(perm);
            const bool avoiding = is_r312_avoiding(perm);
            const bool rcd = is_rightmost_clump_deleting(chain);
            p.check(from_chain(chain) == perm, [&] { return "chain round trip fails for " + to_text(perm) + where; });
            p.check(avoiding == rcd, [&] { return "avoidance vs clump deletion disagree at " + to_text(perm) + where; });
            p.check(rcd == rcd_closed_interval(chain) && rcd == rcd_open_interval(chain) &&
                        rcd == rcd_largest_missing(chain),
                    [&] { return "clump-deleting reformulations disagree at " + to_text(chain) + where; });
            if (avoiding) {
                const auto psi = rank_tuple(perm);
                p.check(is_gapless(psi), [&] { return "rank tuple not gapless for " + to_text(perm) + where; });
                p.check(is_gapless(psi) && pi_map(psi) == perm,
                        [&] { return "pi(psi(p)) != p for " + to_text(perm) + where; });
            }
        }
        for (const auto& g : enumerate_tuples(r, Family::gapless)) {
            const auto perm = pi_map(g);
            p.check(is_r312_avoiding(perm) && rank_tuple(perm) == g,
                    [&] { return "psi(pi(g)) != g for " + to_text(g) + where; });
            const auto fl = floor_map(g);
            const auto ce = ceiling_map(g);
            p.check(is_floor_flag(fl) && core(fl) == g,
                    [&] { return "core(floor(g)) != g for " + to_text(g) + where; });
            p.check(is_ceiling_flag(ce) && core(ce) == g,
                    [&] { return "core(ceiling(g)) != g for " + to_text(g) + where; });
        }
        for (const auto& u : enumerate_tuples(r, Family::increasing))
            p.check(is_gapless(u) == is_gapless_staircase(u),
                    [&] { return "gapless definitions disagree at " + to_text(u) + where; });

        // Core and class-interval laws over every upper tuple.
        const auto uppers = enumerate_tuples(r, Family::upper);
        std::map<RTuple, std::pair<RTuple, RTuple>> boxes;  // core -> interval
        std::vector<RTuple> cores;
        cores.reserve(uppers.size());
        std::set<RTuple> ugc_cores;
        for (const auto& t : uppers) {
            const auto c = core(t);
            cores.push_back(c);
            p.check(core(c) == c && c.leq(t) && critical_list(c) == critical_list(t) &&
                        from_critical_list(critical_list(t), TupleKind::increasing) == c,
                    [&] { return "core laws fail at " + to_text(t) + where; });
            if (!boxes.count(c))
                boxes.emplace(c, class_interval(t));
            if (is_gapless_core(t))
                ugc_cores.insert(c);
            if (is_flag(t)) {
                p.check(is_gapless(c) && floor_map(c).leq(t) && t.leq(ceiling_map(c)),
                        [&] { return "flag outside its floor/ceiling at " + to_text(t) + where; });
            }
        }
        p.check(boxes.size() == multinomial(r),
                [&] { return "distinct cores != |UI_R(n)|" + where; });
        p.check(ugc_cores.size() == enumerate_tuples(r, Family::gapless).size(),
                [&] { return "gapless-core classes != gapless tuples" + where; });
        for (std::size_t k = 0; k < uppers.size(); ++k)
            for (const auto& [c, box] : boxes) {
                const bool inside = box.first.leq(uppers[k]) && uppers[k].leq(box.second);
                p.check(inside == (cores[k] == c), [&] {
                    return "class interval of " + to_text(c) + " mis-contains " + to_text(uppers[k]) + where;
                });
            }
        return p;
    });
    merge_into(report, parts);
    finish(report, start);
    return report;
}

// ---------------------------------------------------------------- counts

SuiteReport suite_counts(const SuiteOptions& opt) {
    require_tuple_range(opt);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.name = "counts";
    report.range = "n<=" + std::to_string(opt.max_n) + ", all R";
    const auto items = all_pairs_range(opt.max_n);
    report.declared = items.size();

    auto parts = run_items(items, opt.jobs, [&](const RSubset& r) {
        Partial p;
        p.instances = 1;
        const std::string where = " [n=" + std::to_string(r.n()) + ", R=" + to_text(r) + "]";
        const std::uint64_t cnr = count_cnr(r);
        std::map<std::string, std::uint64_t> counts;
        counts["gapless"] = enumerate_tuples(r, Family::gapless).size();
        counts["canopy"] = enumerate_tuples(r, Family::canopy).size();
        counts["floor"] = enumerate_tuples(r, Family::floor).size();
        counts["ceiling"] = enumerate_tuples(r, Family::ceiling).size();
        std::set<CriticalList> flag_lists;
        for (const auto& t : enumerate_tuples(r, Family::upper)) {
            auto cl = critical_list(t);
            if (cl.is_flag())
                flag_lists.insert(std::move(cl));
        }
        counts["flag critical lists"] = flag_lists.size();
        std::set<RTuple> ugc_classes, uf_classes;
        for (const auto& t : enumerate_tuples(r, Family::gapless_core))
            ugc_classes.insert(core(t));
        for (const auto& t : enumerate_tuples(r, Family::flag))
            uf_classes.insert(core(t));
        counts["classes in UGC"] = ugc_classes.size();
        counts["classes in UF"] = uf_classes.size();

        if (r.n() <= kMaxTableauN) {
            // Polynomial-level items on the representative shape for R.
            std::vector<int> parts(static_cast<std::size_t>(r.n()), 0);
            for (int q : r.dividers())
                for (int i = 1; i <= q; ++i)
                    ++parts[static_cast<std::size_t>(i - 1)];
            const Shape shape(parts);
            const auto all = all_tableaux(shape, opt.limits);
            std::set<Polynomial::Terms> dpolys, spolys;
            std::set<std::vector<Tableau>> dsets;
            for (const auto& perm : enumerate_rperms(r, true)) {
                const auto d = demazure_set(perm, shape, opt.limits);
                dpolys.insert(weight_sum(d).terms());
                dsets.insert(d.members());
            }
            std::uint64_t coincident = 0;
            std::set<std::vector<Tableau>> ssets;
            for (const auto& phi : enumerate_tuples(r, Family::flag)) {
                std::vector<Tableau> members;
                for (const auto& t : all.members()) {
                    bool ok = true;
                    for (int i = 1; i <= shape.n() && ok; ++i)
                        ok = t.at(shape.part(i), i) <= phi.at(i);
                    if (ok)
                        members.push_back(t);
                }
                spolys.insert(weight_sum(TableauSet(shape, members)).terms());
                if (ssets.insert(members).second && dsets.count(members))
                    ++coincident;
            }
            counts["Demazure polynomials (avoiding)"] = dpolys.size();
            counts["flag Schur polynomials"] = spolys.size();
            counts["coincident set pairs"] = coincident;
        }

        for (const auto& [name, value] : counts)
            p.check(value == cnr, [&, name = name, value = value] {
                return "|" + name + "| = " + std::to_string(value) + " but C_n^R = " + std::to_string(cnr) + where;
            });
        p.tallies["cnr"] = cnr;
        p.tallies["gapless"] = counts["gapless"];
        if (r.is_full() || r.n() == 1)
            p.notes.push_back("C_" + std::to_string(r.n()) + " (full R) = " + std::to_string(cnr));
        return p;
    });
    merge_into(report, parts);

    // Totals by two independent routes: avoidance filter and gapless tuples.
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> totals;
    for (std::size_t k = 0; k < items.size(); ++k) {
        auto& t = totals[items[k].n()];
        t.first += parts[k].tallies.at("cnr");
        t.second += parts[k].tallies.at("gapless");
    }
    for (const auto& [n, t] : totals) {
        ++report.checks;
        if (t.first != t.second) {
            ++report.counterexample_count;
            report.counterexamples.push_back("total for n=" + std::to_string(n) + ": " + std::to_string(t.first) +
                                             " by avoidance, " + std::to_string(t.second) + " by gapless tuples");
        }
        report.notes.push_back("total n=" + std::to_string(n) + ": " + std::to_string(t.first));
    }
    finish(report, start);
    return report;
}

// ----------------------------------------------------------------- lifts

SuiteReport suite_lifts(const SuiteOptions& opt) {
    require_tuple_range(opt);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.name = "lifts";
    report.range = "n<=" + std::to_string(opt.max_n) + ", all R";
    const auto items = all_pairs_range(opt.max_n);
    for (int n = 1; n <= opt.max_n; ++n)
        report.declared += count_total(n);

    std::vector<std::vector<RPermutation>> avoiding_by_n(static_cast<std::size_t>(opt.max_n) + 1);
    for (int n = 1; n <= opt.max_n; ++n)
        for (const auto& s : all_plain_perms(n))
            if (is_312_avoiding(s.one_line()))
                avoiding_by_n[static_cast<std::size_t>(n)].push_back(s);

    auto parts = run_items(items, opt.jobs, [&](const RSubset& r) {
        Partial p;
        const std::string where = " [n=" + std::to_string(r.n()) + ", R=" + to_text(r) + "]";
        const auto full = RSubset::full(r.n());
        std::map<RPermutation, std::vector<RPermutation>> oracle;
        for (const auto& s : avoiding_by_n[static_cast<std::size_t>(r.n())]) {
            const auto proj = r_projection(s.one_line(), r);
            p.check(is_r312_avoiding(proj),
                    [&] { return "projection of " + to_text(s) + " is R-312-containing" + where; });
            oracle[proj].push_back(s);
        }
        for (const auto& perm : enumerate_rperms(r, true)) {
            ++p.instances;
            const auto& expected = oracle[perm];
            const auto lifts = all_lifts(perm);
            p.check(lifts == expected, [&] {
                return "all_lifts(" + to_text(perm) + ") has " + std::to_string(lifts.size()) + " lifts, oracle " +
                       std::to_string(expected.size()) + where;
            });
            const auto low = minimal_lift(perm);
            const int len = inversion_count(low.one_line());
            bool strictly_least = std::find(expected.begin(), expected.end(), low) != expected.end();
            for (const auto& s : expected)
                if (s != low && inversion_count(s.one_line()) <= len)
                    strictly_least = false;
            p.check(is_312_avoiding(low.one_line()) && r_projection(low.one_line(), r) == perm && strictly_least,
                    [&] { return "minimal_lift(" + to_text(perm) + ") = " + to_text(low) + " is not minimal" + where; });
            const auto psi = rank_tuple(perm);
            for (const auto& s : expected) {
                const RTuple lifted(r, rank_tuple(s).entries());
                p.check(core(lifted) == psi,
                        [&] { return "core(psi(" + to_text(s) + ")) != psi_R(" + to_text(perm) + ")" + where; });
            }
            const RTuple flag(full, floor_map(psi).entries());
            p.check(pi_map(flag) == low,
                    [&] { return "pi(floor(psi(" + to_text(perm) + "))) != minimal lift" + where; });
        }
        return p;
    });
    merge_into(report, parts);
    finish(report, start);
    return report;
}

// ------------------------------------------------------------ convexity

SuiteReport suite_convexity(const SuiteOptions& opt) {
    const auto shapes = suite_shapes(opt);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.name = "convexity";
    report.range = tableau_range(opt);
    for (const auto& s : shapes)
        report.declared += multinomial(s.rsubset());

    auto parts = run_items(shapes, opt.jobs, [&](const Shape& shape) {
        Partial p;
        const auto r = shape.rsubset();
        const std::string where = at_shape(shape);
        const auto all = all_tableaux(shape, opt.limits);
        std::map<RTuple, std::vector<Tableau>> by_row_end;
        for (const auto& t : all.members()) {
            const auto s = scanning(t);
            p.check(s.is_key() && t.leq(s) && scanning(s) == s,
                    [&] { return "scanning laws fail at " + to_text(t) + where; });
            by_row_end[row_end_list(t)].push_back(t);
        }
        for (const auto& alpha : enumerate_tuples(r, Family::increasing)) {
            const auto z = z_set(alpha, shape, opt.limits);
            const auto& group = by_row_end[alpha];
            p.check(z.members() == group && !group.empty() && group.back() == row_end_max(alpha, shape) &&
                        std::all_of(group.begin(), group.end(),
                                    [&](const Tableau& t) { return t.leq(row_end_max(alpha, shape)); }),
                    [&] { return "Z/M mismatch at alpha=" + to_text(alpha) + where; });
        }
        p.check(by_row_end.size() == multinomial(r), [&] { return "row end lists outside UI" + where; });

        std::uint64_t nonconvex = 0;
        for (const auto& perm : enumerate_rperms(r, false)) {
            ++p.instances;
            const auto y = key_of_perm(perm, shape);
            const auto d = demazure_set(perm, shape, opt.limits);
            const auto top = ideal(y, opt.limits);
            const bool avoiding = is_r312_avoiding(perm);
            const bool convex = is_convex(d);
            const bool equal = d == top;
            if (!convex)
                ++nonconvex;
            p.check(avoiding == convex && convex == equal, [&] {
                return "convexity mismatch at pi=" + to_text(perm) + ": avoiding=" + std::to_string(avoiding) +
                       " convex=" + std::to_string(convex) + " ideal=" + std::to_string(equal) + where;
            });
            p.check(d.contains(y) && d.members().back() == y &&
                        std::all_of(d.members().begin(), d.members().end(),
                                    [&](const Tableau& t) { return t.leq(y); }),
                    [&] { return "Y is not the maximum of D at pi=" + to_text(perm) + where; });
            p.check(is_gapless_key(y) == avoiding,
                    [&] { return "gapless key vs avoidance at pi=" + to_text(perm) + where; });
            if (avoiding)
                p.check(row_end_max(rank_tuple(perm), shape) == y,
                        [&] { return "M(psi(pi)) != Y(pi) at pi=" + to_text(perm) + where; });
            if (shape.parts() == std::vector<int>{2, 1, 0} && perm.one_line() == std::vector<int>{3, 1, 2})
                p.notes.push_back("witness lambda=(2,1,0), pi=(3;1;2): |D|=" + std::to_string(d.size()) +
                                  " of |[Y]|=" + std::to_string(top.size()) + ", convex=" +
                                  (convex ? "true" : "false"));
        }
        p.tallies["nonconvex"] = nonconvex;
        return p;
    });
    merge_into(report, parts);
    std::uint64_t nonconvex = 0;
    for (const auto& p : parts)
        nonconvex += p.tallies.count("nonconvex") ? p.tallies.at("nonconvex") : 0;
    report.notes.push_back("non-convex Demazure sets: " + std::to_string(nonconvex));
    finish(report, start);
    return report;
}

// ----------------------------------------------------------- coincidence

SuiteReport suite_coincidence(const SuiteOptions& opt) {
    const auto shapes = suite_shapes(opt);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.name = "coincidence";
    report.range = tableau_range(opt);
    for (const auto& s : shapes)
        report.declared += factorial(s.n());

    auto parts = run_items(shapes, opt.jobs, [&](const Shape& shape) {
        Partial p;
        const auto r = shape.rsubset();
        const std::string where = at_shape(shape);
        std::map<std::vector<Tableau>, std::vector<RPermutation>> by_set;
        std::set<std::vector<Tableau>> avoiding_sets;
        for (const auto& perm : enumerate_rperms(r, false)) {
            const auto d = demazure_set(perm, shape, opt.limits);
            by_set[d.members()].push_back(perm);
            if (is_r312_avoiding(perm))
                avoiding_sets.insert(d.members());
        }
        p.check(by_set.size() == multinomial(r), [&] { return "Demazure sets not distinct" + where; });

        std::map<RTuple, std::vector<Tableau>> set_of_core;
        std::map<std::vector<Tableau>, RTuple> core_of_set;
        std::set<std::vector<Tableau>> flag_sets;
        for (const auto& beta : enumerate_tuples(r, Family::upper)) {
            ++p.instances;
            const auto s = row_bound_set(beta, shape, opt.limits);
            const auto q = row_bound_max(beta, shape);
            const auto delta = core(beta);
            const std::string b = to_text(beta);
            p.check(s == ideal(q, opt.limits) && q == row_end_max(delta, shape),
                    [&] { return "S(beta) != [Q(beta)] = [M(core)] at beta=" + b + where; });
            // S depends exactly on the class of beta.
            auto [it, fresh] = set_of_core.emplace(delta, s.members());
            p.check(it->second == s.members(), [&] { return "equivalent betas give different sets at " + b + where; });
            if (fresh) {
                auto [jt, new_set] = core_of_set.emplace(s.members(), delta);
                p.check(new_set, [&] {
                    return "inequivalent " + b + " and core " + to_text(jt->second) + " give one set" + where;
                });
            }
            if (is_flag(beta)) {
                flag_sets.insert(s.members());
                p.check(q.is_key(), [&] { return "Q(phi) is not a key at phi=" + b + where; });
            }

            const auto found = by_set.find(s.members());
            const bool gapless = is_gapless(delta);
            if (gapless) {
                const auto expect = pi_map(delta);
                p.check(found != by_set.end() && found->second == std::vector<RPermutation>{expect},
                        [&] { return "S(beta) != D(Pi(core(beta))) uniquely at beta=" + b + where; });
            } else {
                p.check(found == by_set.end(),
                        [&] { return "non-gapless core yet S(beta) is a Demazure set at beta=" + b + where; });
            }
            if (found != by_set.end())
                for (const auto& perm : found->second)
                    p.check(q == key_of_perm(perm, shape) && delta == rank_tuple(perm) &&
                                is_gapless_core(beta) && is_r312_avoiding(perm),
                            [&] { return "coincidence consequences fail at beta=" + b + ", pi=" + to_text(perm) + where; });
        }
        for (const auto& perm : enumerate_rperms(r, true)) {
            const auto psi = rank_tuple(perm);
            const auto d = demazure_set(perm, shape, opt.limits);
            p.check(row_bound_set(psi, shape, opt.limits) == d,
                    [&] { return "D(pi) != S(psi(pi)) at pi=" + to_text(perm) + where; });
            const auto it = core_of_set.find(d.members());
            p.check(it != core_of_set.end() && it->second == psi,
                    [&] { return "betas matching D(pi) are not the class of psi at pi=" + to_text(perm) + where; });
        }
        for (const auto& g : enumerate_tuples(r, Family::gapless))
            p.check(row_bound_set(floor_map(g), shape, opt.limits) == demazure_set(pi_map(g), shape, opt.limits),
                    [&] { return "S(floor(g)) != D(Pi(g)) at g=" + to_text(g) + where; });
        p.check(flag_sets == avoiding_sets,
                [&] { return "flag bound sets differ from avoiding Demazure sets" + where; });
        return p;
    });
    merge_into(report, parts);
    finish(report, start);
    return report;
}

// ----------------------------------------------------------- polynomials

namespace {

struct GFEntry {
    bool demazure = false;
    Shape shape;
    RTuple beta;          // row bound sums
    RPermutation perm;    // Demazure polynomials
    Polynomial poly;
    std::shared_ptr<const std::vector<Tableau>> set;
    std::uint64_t hash = 0;

    std::string label() const {
        return (demazure ? "d(" + to_text(perm) : "s(" + to_text(beta)) + ") lambda=" + to_text(shape);
    }
};

} // namespace

SuiteReport suite_polynomials(const SuiteOptions& opt) {
    const auto shapes = suite_shapes(opt);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.name = "polynomials";
    report.range = tableau_range(opt);
    for (const auto& s : shapes)
        report.declared += multinomial(s.rsubset());

    std::vector<std::vector<GFEntry>> entries(shapes.size());
    std::vector<std::size_t> index(shapes.size());
    for (std::size_t k = 0; k < shapes.size(); ++k)
        index[k] = k;

    auto parts = run_items(index, opt.jobs, [&](std::size_t k) {
        Partial p;
        const auto& shape = shapes[k];
        const auto r = shape.rsubset();
        const std::string where = at_shape(shape);
        auto& out = entries[k];
        std::map<RPermutation, std::vector<Tableau>> dset;
        for (const auto& perm : enumerate_rperms(r, false)) {
            ++p.instances;
            const auto d = demazure_set(perm, shape, opt.limits);
            const auto poly = weight_sum(d);
            p.check(poly == demazure_poly_dd(perm, shape), [&] {
                return "scanning vs divided differences differ at pi=" + to_text(perm) + where;
            });
            p.check(compose_alpha(perm, shape) == content(key_of_perm(perm, shape)),
                    [&] { return "pi.lambda != content(Y) at pi=" + to_text(perm) + where; });
            const bool lead = !poly.is_zero() && poly.terms().begin()->first == shape.parts() &&
                              poly.terms().begin()->second == 1;
            p.check(lead, [&] { return "leading term of d is not x^lambda at pi=" + to_text(perm) + where; });
            dset[perm] = d.members();
            GFEntry e;
            e.demazure = true;
            e.shape = shape;
            e.perm = perm;
            e.poly = poly;
            e.set = std::make_shared<const std::vector<Tableau>>(d.members());
            e.hash = fingerprint(poly);
            out.push_back(std::move(e));
        }
        std::map<RTuple, std::shared_ptr<const std::vector<Tableau>>> by_core;
        for (const auto& beta : enumerate_tuples(r, Family::upper)) {
            const auto delta = core(beta);
            auto& shared = by_core[delta];
            if (!shared)
                shared = std::make_shared<const std::vector<Tableau>>(
                    row_bound_set(beta, shape, opt.limits).members());
            const auto poly = weight_sum(TableauSet(shape, *shared));
            if (is_gapless_core(beta))
                p.check(*shared == dset[pi_map(delta)],
                        [&] { return "s(eta) not identical to d(Pi(core(eta))) at eta=" + to_text(beta) + where; });
            p.check(!poly.is_zero() && poly.terms().begin()->first == shape.parts(),
                    [&] { return "leading term of s is not x^lambda at beta=" + to_text(beta) + where; });
            GFEntry e;
            e.shape = shape;
            e.beta = beta;
            e.poly = poly;
            e.set = shared;
            e.hash = fingerprint(poly);
            out.push_back(std::move(e));
        }
        for (const auto& perm : enumerate_rperms(r, true))
            p.check(*by_core[rank_tuple(perm)] == dset[perm],
                    [&] { return "d(pi) not identical to s(psi(pi)) at pi=" + to_text(perm) + where; });
        return p;
    });
    merge_into(report, parts);

    // Equal polynomials across all shapes with the same n.
    std::map<int, std::vector<const GFEntry*>> by_n;
    for (const auto& list : entries)
        for (const auto& e : list)
            by_n[e.shape.n()].push_back(&e);
    Partial cross;
    std::uint64_t open_pairs = 0;
    for (auto& [n, list] : by_n) {
        std::map<std::uint64_t, std::vector<const GFEntry*>> buckets;
        for (const auto* e : list)
            buckets[e->hash].push_back(e);
        for (const auto& [hash, bucket] : buckets)
            for (std::size_t a = 0; a < bucket.size(); ++a)
                for (std::size_t b = a + 1; b < bucket.size(); ++b) {
                    const GFEntry& x = *bucket[a];
                    const GFEntry& y = *bucket[b];
                    if (x.poly != y.poly)
                        continue;
                    const bool identical = x.shape == y.shape && *x.set == *y.set;
                    auto describe = [&] { return x.label() + " = " + y.label(); };
                    if (x.demazure && y.demazure) {
                        cross.check(false, [&] { return "distinct Demazure polynomials coincide: " + describe(); });
                    } else if (x.demazure || y.demazure) {
                        const GFEntry& s = x.demazure ? y : x;
                        const GFEntry& d = x.demazure ? x : y;
                        cross.check(identical && s.shape == d.shape &&
                                        row_bound_max(s.beta, s.shape) == key_of_perm(d.perm, d.shape) &&
                                        core(s.beta) == rank_tuple(d.perm) && is_r312_avoiding(d.perm) &&
                                        is_gapless_core(s.beta),
                                    [&] { return "row bound sum equals Demazure polynomial accidentally: " + describe(); });
                    } else {
                        cross.check(x.shape == y.shape, [&] { return "equal row bound sums on different shapes: " + describe(); });
                        if (x.shape != y.shape)
                            continue;
                        const bool forced = is_gapless_core(x.beta) || is_gapless_core(y.beta);
                        if (forced)
                            cross.check(equivalent(x.beta, y.beta) && identical,
                                        [&] { return "gapless-core row bound sum equals an inequivalent one: " + describe(); });
                        else if (!identical)
                            ++open_pairs;
                    }
                }
    }
    report.checks += cross.checks;
    report.counterexample_count += cross.counterexample_count;
    for (const auto& c : cross.counterexamples)
        if (report.counterexamples.size() < SuiteReport::kMaxCounterexamples)
            report.counterexamples.push_back(c);
    report.notes.push_back("non-identical equal pairs outside UGC (open problem, see accidental search): " +
                           std::to_string(open_pairs));
    finish(report, start);
    return report;
}

// -------------------------------------------------------- accidental search

SuiteReport search_accidental(const SuiteOptions& opt) {
    const auto shapes = suite_shapes(opt);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.name = "accidental";
    report.range = tableau_range(opt);

    std::atomic<std::uint64_t> materialized{0};
    auto parts = run_items(shapes, opt.jobs, [&](const Shape& shape) {
        Partial p;
        const auto r = shape.rsubset();
        std::map<RTuple, std::vector<RTuple>> classes;  // core -> members outside UGC
        for (const auto& beta : enumerate_tuples(r, Family::upper)) {
            if (is_gapless_core(beta))
                continue;
            ++p.instances;
            classes[core(beta)].push_back(beta);
        }
        std::map<std::uint64_t, std::vector<std::pair<RTuple, Polynomial>>> buckets;
        for (const auto& [delta, members] : classes) {
            const auto set = row_bound_set(members.front(), shape, opt.limits);
            materialized += set.size();
            if (opt.budget != 0 && materialized > opt.budget)
                fail(ErrorCode::BudgetExceeded,
                     "accidental search exceeded the budget of " + std::to_string(opt.budget) + " tableaux");
            auto poly = weight_sum(set);
            buckets[fingerprint(poly)].emplace_back(members.front(), std::move(poly));
        }
        // Every pair of classes is compared; only same-fingerprint pairs
        // need the full polynomial comparison.
        p.checks += classes.size() * (classes.size() - (classes.empty() ? 0 : 1)) / 2;
        for (const auto& [hash, bucket] : buckets)
            for (std::size_t a = 0; a < bucket.size(); ++a)
                for (std::size_t b = a + 1; b < bucket.size(); ++b) {
                    if (bucket[a].second != bucket[b].second)
                        continue;  // fingerprint collision only
                    ++p.counterexample_count;
                    if (p.counterexamples.size() < SuiteReport::kMaxCounterexamples)
                        p.counterexamples.push_back("s(" + to_text(bucket[a].first) + ") = s(" +
                                                    to_text(bucket[b].first) + ") with distinct cores" +
                                                    at_shape(shape));
                }
        return p;
    });
    merge_into(report, parts);
    for (const auto& shape : shapes)
        report.declared += factorial(shape.n()) - enumerate_tuples(shape.rsubset(), Family::gapless_core).size();
    report.notes.push_back("accidental pairs found: " + std::to_string(report.counterexample_count));
    finish(report, start);
    return report;
}

// ------------------------------------------------------------- dispatch

std::vector<std::string> suite_names() {
    return {"bijections", "counts", "lifts", "convexity", "coincidence", "polynomials", "accidental"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "bijections")
        return suite_bijections(opt);
    if (name == "counts")
        return suite_counts(opt);
    if (name == "lifts")
        return suite_lifts(opt);
    if (name == "convexity")
        return suite_convexity(opt);
    if (name == "coincidence")
        return suite_coincidence(opt);
    if (name == "polynomials")
        return suite_polynomials(opt);
    if (name == "accidental")
        return search_accidental(opt);
    fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

std::vector<DimensionRow> dimension_table(const SuiteOptions& opt) {
    const auto shapes = suite_shapes(opt);
    std::vector<DimensionRow> rows;
    for (const auto& shape : shapes)
        for (const auto& perm : enumerate_rperms(shape.rsubset(), false)) {
            DimensionRow row;
            row.shape = shape;
            row.perm = perm;
            row.avoiding = is_r312_avoiding(perm);
            row.demazure_size = demazure_set(perm, shape, opt.limits).size();
            row.row_bound_size = row_bound_set(rank_tuple(perm), shape, opt.limits).size();
            rows.push_back(std::move(row));
        }
    return rows;
}

// ------------------------------------------------------------ rendering

Json to_json(const SuiteReport& r) {
    return Json{{"suite", r.name},
                {"range", r.range},
                {"instances", r.instances},
                {"declared_instances", r.declared},
                {"checks", r.checks},
                {"verdict", r.verdict == Verdict::pass ? "pass" : "fail"},
                {"counterexample_count", r.counterexample_count},
                {"counterexamples", r.counterexamples},
                {"notes", r.notes},
                {"wall_seconds", r.wall_seconds}};
}

std::string to_text(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite            " << r.name << "\n"
        << "range            " << r.range << "\n"
        << "instances        " << r.instances << " (declared " << r.declared << ")\n"
        << "checks           " << r.checks << "\n"
        << "verdict          " << (r.verdict == Verdict::pass ? "PASS" : "FAIL") << "\n"
        << "counterexamples  " << r.counterexample_count << "\n";
    for (const auto& c : r.counterexamples)
        out << "  - " << c << "\n";
    for (const auto& n : r.notes)
        out << "note             " << n << "\n";
    out.setf(std::ios::fixed);
    out.precision(3);
    out << "wall time        " << r.wall_seconds << " s\n";
    return out.str();
}

std::string to_csv(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite,range,instances,declared_instances,checks,verdict,counterexample_count,wall_seconds\n"
        << r.name << ",\"" << r.range << "\"," << r.instances << "," << r.declared << "," << r.checks << ","
        << (r.verdict == Verdict::pass ? "pass" : "fail") << "," << r.counterexample_count << ","
        << r.wall_seconds << "\n";
    return out.str();
}

Json to_json(const std::vector<DimensionRow>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows)
        arr.push_back(Json{{"lambda", row.shape.parts()},
                           {"pi", to_json(row.perm)},
                           {"avoiding", row.avoiding},
                           {"demazure_size", row.demazure_size},
                           {"row_bound_size", row.row_bound_size}});
    return arr;
}

std::string to_text(const std::vector<DimensionRow>& rows) {
    std::ostringstream out;
    out << "lambda\tpi\tavoiding\t|D(pi)|\t|S(psi(pi))|\n";
    for (const auto& row : rows)
        out << to_text(row.shape) << "\t" << to_text(row.perm) << "\t" << (row.avoiding ? "yes" : "no") << "\t"
            << row.demazure_size << "\t" << row.row_bound_size << "\n";
    return out.str();
}

std::string to_csv(const std::vector<DimensionRow>& rows) {
    std::ostringstream out;
    out << "lambda,pi,avoiding,demazure_size,row_bound_size\n";
    for (const auto& row : rows)
        out << join_ints(row.shape.parts(), ' ') << "," << join_ints(row.perm.one_line(), ' ') << ","
            << (row.avoiding ? "true" : "false") << "," << row.demazure_size << "," << row.row_bound_size << "\n";
    return out.str();
}

} // namespace parakat

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parakat/polys.hpp"
#include "parakat/serialize.hpp"

namespace parakat {

struct SuiteOptions {
    int max_n = 4;
    int max_col = 3;
    /// Use every shape in range instead of one representative per R_λ.
    bool all_shapes = false;
    int jobs = 1;
    Limits limits = default_limits();
    /// Upper bound on tableaux materialized by search_accidental; 0 = none.
    std::uint64_t budget = 0;
};

enum class Verdict { pass, fail };

struct SuiteReport {
    std::string name;
    std::string range;
    std::uint64_t instances = 0;
    std::uint64_t declared = 0;
    std::uint64_t checks = 0;
    Verdict verdict = Verdict::pass;
    /// First counterexamples in canonical order, capped at kMaxCounterexamples.
    std::vector<std::string> counterexamples;
    std::uint64_t counterexample_count = 0;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    static constexpr std::size_t kMaxCounterexamples = 20;
};

/// Largest n accepted by the tuple-level suites and by the tableau suites.
inline constexpr int kMaxTupleN = 8;
inline constexpr int kMaxTableauN = 6;

/// Shapes in range: one per R_λ (a single column of each length in R, no
/// inert columns) unless all_shapes is set. Throws CapExceeded.
std::vector<Shape> suite_shapes(const SuiteOptions& opt);

SuiteReport suite_bijections(const SuiteOptions& opt);
SuiteReport suite_counts(const SuiteOptions& opt);
SuiteReport suite_lifts(const SuiteOptions& opt);
SuiteReport suite_convexity(const SuiteOptions& opt);
SuiteReport suite_coincidence(const SuiteOptions& opt);
SuiteReport suite_polynomials(const SuiteOptions& opt);
/// Equal row bound sums for β, β' outside UGC_λ(n) with distinct cores.
/// Any find is listed in counterexamples; it is a discovery, not an error.
SuiteReport search_accidental(const SuiteOptions& opt);

/// Runs a suite by name: bijections, counts, lifts, convexity,
/// coincidence, polynomials, accidental. Throws InvalidArgument.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();

struct DimensionRow {
    Shape shape;
    RPermutation perm;
    bool avoiding = false;
    std::uint64_t demazure_size = 0;
    std::uint64_t row_bound_size = 0;  // |S_λ(Ψ_λ(π))|
};

std::vector<DimensionRow> dimension_table(const SuiteOptions& opt);

Json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);
std::string to_csv(const SuiteReport& r);
Json to_json(const std::vector<DimensionRow>& rows);
std::string to_text(const std::vector<DimensionRow>& rows);
std::string to_csv(const std::vector<DimensionRow>& rows);

} // namespace parakat

#pragma once

#include <random>
#include <string>
#include <vector>

#include "acfq/geometric.hpp"
#include "acfq/oracle.hpp"

namespace acfq::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
    double ms = 0;
};

// --- catalogs -------------------------------------------------------------

/// One-variable definable sets in y, optionally with parameters a, b.
struct UnivariateEntry {
    std::string text;
    bool parametric;
};
const std::vector<UnivariateEntry>& univariate_catalog();

/// Nonempty definable sets with their coordinates, for the dimension suite.
struct DimensionEntry {
    std::string text;
    std::vector<std::string> vars;
};
const std::vector<DimensionEntry>& dimension_catalog();

/// Parametric families phi(params, y) for the bounding-polynomial contract.
struct BoundingEntry {
    std::string text;
    std::vector<std::string> params;
};
const std::vector<BoundingEntry>& bounding_catalog();

// --- randomized formulas ---------------------------------------------------

/// Seeded random formula over characteristic p: at most 3 variables, 6
/// atoms, degree 3 per atom, shaped so the brute-force evaluation over
/// F_{p^2} assignments stays affordable.
FormulaPtr random_formula(std::mt19937_64& rng, long p, const OracleLimits& limits);

// --- acceptance criteria ----------------------------------------------------

CheckResult check_slope_dichotomy_sweep(const std::vector<int>& qs = {2, 3, 4, 5, 7, 8, 9, 11});
CheckResult check_inf_many_pipeline();
CheckResult check_qe_soundness(const std::vector<long>& primes = {2, 3, 5, 7}, int count = 500,
                               unsigned long long seed = 20240801ULL);
CheckResult check_dimension_facts();
CheckResult check_bounding_contract();
CheckResult check_slope_cover();
CheckResult check_frobenius_demo();
CheckResult check_parser_roundtrip(unsigned long long seed = 20240801ULL);

std::vector<CheckResult> run_all(unsigned long long seed = 20240801ULL, int qe_count = 500);

}  // namespace acfq::checks

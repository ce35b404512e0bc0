#pragma once

#include <map>
#include <string>
#include <vector>

#include "acfq/formula.hpp"
#include "acfq/fq.hpp"
#include "acfq/qe.hpp"

namespace acfq {

struct OracleLimits {
    unsigned long long field_size_cap = 10'000'000ULL;
    // Multiplies every per-quantifier search degree; results must not depend
    // on it (monotonicity of the witness search).
    int degree_boost = 1;
};

/// Per-quantifier witness-search plan for a formula: search-degree
/// multipliers per quantifier, conservative from syntactic degrees.  A
/// witness (or counterexample) for a quantifier over values of degree k
/// lies in the field of degree k*multiplier: the multiplier is a multiple of
/// lcm(1..d) for d the quantified variable's maximal atom degree (so every
/// candidate root field embeds), bumped until the search field outnumbers
/// the possible excluded points.
struct WitnessBound {
    struct PerQuantifier {
        std::string var;
        int max_degree;
        long long excluded_bound;
        int multiplier;
    };
    std::vector<PerQuantifier> quantifiers;
    unsigned long long outermost_field_size = 1;
};

WitnessBound compute_witness_bound(const FormulaPtr& f, long p, int base_degree,
                                   const OracleLimits& limits = {});

class FieldTower;

/// Truth of a formula (E/A quantifiers only) over the algebraic closure of
/// F_p, with free variables bound by the assignment.  Quantifiers are
/// evaluated by exhaustive search over a finite subfield large enough to be
/// conclusive.
bool eval_fpbar(const FormulaPtr& f, long p, const std::map<std::string, FqElement>& assignment,
                const OracleLimits& limits = {});
/// Same, reusing a caller-owned field/embedding cache across calls.
bool eval_fpbar(const FormulaPtr& f, long p, const std::map<std::string, FqElement>& assignment,
                FieldTower& tower, const OracleLimits& limits);

/// Worst-case number of atom evaluations an eval_fpbar call would need with
/// free variables of the given base degree; clamped, with anything above
/// the field-size cap pushed past `reject_at`.
unsigned long long eval_cost_estimate(const FormulaPtr& f, long p, int base_degree,
                                      const OracleLimits& limits = {});
constexpr unsigned long long kEvalCostRejected = 1ULL << 62;

enum class Finiteness { Finite, Infinite };

/// Structural finiteness of a one-variable quantifier-free definable set
/// over an algebraically closed field: infinite exactly when some disjunct
/// of its DNF carries no equation (a cofinite condition).
Finiteness qf_univariate_finiteness(const FormulaPtr& f, const std::string& var,
                                    const FieldContext& ctx);

/// Exact |X(F_{p^m})| for m = 1..m_max by enumeration.
std::vector<long long> point_count_growth(const FormulaPtr& f, const std::vector<std::string>& vars,
                                          long p, int m_max, const OracleLimits& limits = {});

struct TrickSweepReport {
    unsigned long long q = 0;
    unsigned long long subsets = 0;
    unsigned long long cover_cases = 0;
    unsigned long long injection_cases = 0;
    bool all_ok = false;
};

/// Run the secant-slope dichotomy on every subset of F_q and verify that it
/// holds each time.  q must be one of 2, 3, 4, 5, 7, 8, 9, 11.
TrickSweepReport exhaustive_trick_sweep(int q);

/// Partial evaluation of a polynomial: every variable except `remaining` is
/// fixed by the assignment; returns the coefficient vector of the resulting
/// univariate polynomial (index = power of `remaining`).
std::vector<FqElement> specialize_univariate(const MultiPoly& p,
                                             const std::map<std::string, FqElement>& assignment,
                                             const std::string& remaining, const FqField& field);

/// Field registry with cached subfield embeddings, used by the evaluators.
class FieldTower {
public:
    explicit FieldTower(unsigned long long size_cap = 10'000'000ULL) : cap_(size_cap) {}
    std::shared_ptr<const FqField> field(long p, int k);
    /// Image of e under the unique-up-to-conjugacy embedding into target
    /// (chosen deterministically); source degree must divide target degree.
    FqElement embed(const FqElement& e, const std::shared_ptr<const FqField>& target);

private:
    unsigned long long cap_;
    std::map<std::pair<long, int>, std::shared_ptr<const FqField>> fields_;
    std::map<std::tuple<long, int, int>, FqElement> generator_images_;
};

}  // namespace acfq

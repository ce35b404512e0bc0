#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acfq/fq.hpp"
#include "acfq/qe.hpp"
#include "acfq/ratfunc.hpp"

namespace acfq {

/// Replace every subformula "Einf v. phi" (innermost first) by the secant
/// slope criterion: for every s there are x, y, x', y' in the set with
/// x != x' and s*(x' - x) = y - y'.  Over an infinite field whose algebraic
/// closure operator has the exchange property this is equivalent to the set
/// being infinite; here the ambient theory is ACF, where it holds.
FormulaPtr rewrite_inf_many(const FormulaPtr& f, const FieldContext& ctx);

struct InfiniteResult {
    bool decided;            // no parameters remained
    bool value;              // meaningful when decided
    FormulaPtr criterion;    // quantifier-free criterion in the parameters
};

/// Is the set defined by f in the given coordinates infinite?  A set in
/// several coordinates is infinite exactly when one of its coordinate
/// projections is.  With parameters present, the quantifier-free parametric
/// criterion is returned undecided.
InfiniteResult is_infinite(const FormulaPtr& f, const std::vector<std::string>& vars,
                           const FieldContext& ctx);

struct DimLevelCheck {
    int level;               // candidate dimension k
    std::string coordinate;  // fiber coordinate tried ("" for the base check)
    bool holds;
    std::string sentence;    // the decided quantifier-free sentence
};

struct DimResult {
    int dim;  // -1 for the empty set
    std::vector<DimLevelCheck> certificate;
};

/// Dimension of the definable set: dim >= k (k >= 1) when some coordinate
/// has infinitely many values whose fiber has dimension >= k-1; dim >= 0
/// when the set is nonempty.  The infinitely-many condition is expressed by
/// nesting the slope rewrite around the parametric fiber criterion and
/// decided by quantifier elimination.
DimResult dimension(const FormulaPtr& f, const std::vector<std::string>& vars,
                    const FieldContext& ctx);

struct BoundingSet {
    std::string fiber_var;
    std::vector<MultiPoly> witnesses;  // positive degree in the fiber variable
    int uniform_bound;                 // max degree; caps every finite fiber
};

/// Witness polynomials for the family f(params, y): whenever a parameter
/// instance has a finite fiber, the fiber lies inside the zero set of some
/// witness that does not vanish identically there, and its size is at most
/// the uniform bound.
BoundingSet bounding_polys(const FormulaPtr& f, const std::vector<std::string>& params,
                           const std::string& fiber_var, const FieldContext& ctx);

/// For an infinite parameter-free X = {var : f} in one variable, decide the
/// sentence "every field element is a secant slope of X".  Must hold for
/// every infinite X; calling it on a finite set is a precondition violation.
bool slope_cover_check(const FormulaPtr& f, const std::string& var, const FieldContext& ctx);

struct DichotomyReport {
    unsigned long long q = 0;
    std::vector<unsigned long long> subset;     // element indices, sorted
    std::vector<unsigned long long> slope_set;  // indices of secant slopes
    bool covers = false;                        // slope set equals the field
    std::optional<unsigned long long> injection_slope;
    bool injection_verified = false;            // (x,y) -> a*x + y injective on X^2
    unsigned long long pairs_checked = 0;
};

/// Exhaustive secant-slope dichotomy on an explicit subset of F_q: either
/// the slopes cover the field, or any leftover value a makes
/// (x,y) -> a*x + y injective on X^2 (verified by enumeration).
DichotomyReport dichotomy(const std::shared_ptr<const FqField>& field,
                          const std::vector<FqElement>& subset);

struct FrobeniusReport {
    long prime = 0;
    int degree_bound = 0;
    unsigned long long functions = 0;
    unsigned long long pairs_checked = 0;
    unsigned long long collisions = 0;
};

/// Over the imperfect field F_p(t), the map (x, y) -> x^p + t*y^p is
/// injective because t has no p-th root.  Checks all pairs of reduced
/// rational functions within the degree bound and counts collisions.
FrobeniusReport frobenius_injection_demo(long p, int degree_bound,
                                         unsigned long long pair_budget = 5'000'000ULL);

}  // namespace acfq

#pragma once

#include <string>
#include <vector>

#include "acfq/formula.hpp"

namespace acfq {

/// Context for quantifier elimination over an algebraically closed field of
/// a fixed characteristic.  Everything is exact; the budget caps normal-form
/// growth; the optional trace collects one line per elimination step.
struct FieldContext {
    CoeffDomain coeff = CoeffDomain::rationals();
    std::size_t dnf_budget = 100000;
    std::vector<std::string>* trace = nullptr;
};

/// Equivalent quantifier-free formula after constant folding, atom
/// deduplication, absorption, and contradictory-disjunct removal.  Also
/// accepts quantified formulas, simplifying beneath the quantifiers.
FormulaPtr simplify(const FormulaPtr& f, const FieldContext& ctx);

/// Eliminate one existential variable from a single conjunction of
/// equations and inequations.  The result mentions only the parameters.
FormulaPtr eliminate_one(const DnfDisjunct& disjunct, const std::string& var,
                         const FieldContext& ctx);

/// Quantifier elimination for formulas built from E/A (no Einf), innermost
/// quantifier first.  The result is quantifier-free and equivalent over
/// every algebraically closed field of the context characteristic.
FormulaPtr qe(const FormulaPtr& f, const FieldContext& ctx);

/// Truth value of a sentence (no free variables, no Einf) in the theory of
/// algebraically closed fields of the context characteristic.
bool decide(const FormulaPtr& sentence, const FieldContext& ctx);

}  // namespace acfq

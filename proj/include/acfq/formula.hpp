#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acfq/multipoly.hpp"

namespace acfq {

enum class FKind { True, False, Atom, Not, And, Or, Exists, Forall, InfMany };
enum class Rel { Eq, Neq };  // poly = 0 resp. poly != 0

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable first-order formula over the ring language, plus the
/// infinitely-many quantifier (concrete syntax 'Einf').
///
/// Invariant maintained by the factory functions: within one formula every
/// bound variable name is distinct from every other bound variable and from
/// every free variable.  Atoms store a difference polynomial compared
/// against zero, scaled to a canonical form.
class Formula {
public:
    FKind kind() const { return kind_; }

    const MultiPoly& poly() const;       // Atom only
    Rel rel() const;                     // Atom only
    const FormulaPtr& child() const;     // Not and quantifiers
    const FormulaPtr& left() const;      // And/Or
    const FormulaPtr& right() const;     // And/Or
    const std::string& var() const;      // quantifiers

    const std::set<std::string>& free_vars() const { return free_; }
    const std::set<std::string>& bound_vars() const { return bound_; }
    bool quantifier_free() const { return qfree_; }
    bool has_inf_many() const { return has_inf_; }

private:
    friend FormulaPtr f_true();
    friend FormulaPtr f_false();
    friend FormulaPtr f_atom(const MultiPoly&, Rel);
    friend FormulaPtr f_not(FormulaPtr);
    friend FormulaPtr make_binary(FKind, FormulaPtr, FormulaPtr);
    friend FormulaPtr make_quantifier(FKind, const std::string&, FormulaPtr);

    Formula() = default;
    FKind kind_ = FKind::True;
    std::optional<MultiPoly> poly_;
    Rel rel_ = Rel::Eq;
    FormulaPtr a_, b_;
    std::string var_;
    std::set<std::string> free_, bound_;
    bool qfree_ = true;
    bool has_inf_ = false;
};

FormulaPtr f_true();
FormulaPtr f_false();
/// Atom "poly rel 0"; the polynomial is scaled to its canonical form.
FormulaPtr f_atom(const MultiPoly& p, Rel r);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(const std::string& v, FormulaPtr body);
FormulaPtr f_forall(const std::string& v, FormulaPtr body);
FormulaPtr f_inf_many(const std::string& v, FormulaPtr body);
FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs);
FormulaPtr make_binary(FKind kind, FormulaPtr a, FormulaPtr b);
FormulaPtr make_quantifier(FKind kind, const std::string& v, FormulaPtr body);

std::set<std::string> all_names(const FormulaPtr& f);
/// A grammar-legal identifier based on `base` and absent from `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Capture-free substitution of a polynomial for a free variable.
/// Substituting a bound variable is an error.
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const MultiPoly& value);

/// Exact structural equality (variable names included).
bool structural_equal(const FormulaPtr& a, const FormulaPtr& b);
int formula_compare(const FormulaPtr& a, const FormulaPtr& b);
/// Equality up to renaming of bound variables.
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Prenex normal form of a formula whose quantifiers are E/A only.
FormulaPtr prenex(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Quantifier-free disjunctive normal form.

struct DnfDisjunct {
    std::vector<MultiPoly> equations;    // conjunction of p = 0
    std::vector<MultiPoly> inequations;  // conjunction of q != 0
};

struct DnfMatrix {
    std::vector<DnfDisjunct> disjuncts;  // empty means false
};

/// DNF of a quantifier-free formula.  Trivially true or false atoms are
/// folded, contradictory disjuncts dropped, duplicates and subsumed
/// disjuncts removed.  Throws BudgetExceededError when the total atom count
/// would pass `atom_budget`.
DnfMatrix to_dnf(const FormulaPtr& f, std::size_t atom_budget);
FormulaPtr dnf_to_formula(const DnfMatrix& m, const CoeffDomain& dom);

// ---------------------------------------------------------------------------
// Concrete syntax.

FormulaPtr parse_formula(const std::string& text, const CoeffDomain& dom);
MultiPoly parse_poly(const std::string& text, const CoeffDomain& dom);
std::string print_formula(const FormulaPtr& f);

}  // namespace acfq

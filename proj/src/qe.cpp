#include "acfq/qe.hpp"

#include <algorithm>

#include "acfq/errors.hpp"

namespace acfq {

namespace {

void trace_line(const FieldContext& ctx, const std::string& line) {
    ctx.trace->push_back(line);
}

FormulaPtr fold_atom(const MultiPoly& p, Rel rel) {
    if (p.is_constant()) {
        bool zero = p.is_zero();
        bool truth = (rel == Rel::Eq) ? zero : !zero;
        return truth ? f_true() : f_false();
    }
    // Over a field a product vanishes exactly when a factor does, so a
    // common monomial splits off into per-variable atoms.
    Monomial content = p.content_monomial();
    if (!content.is_constant()) {
        MultiPoly rest = p.without_monomial(content);
        std::vector<FormulaPtr> parts;
        for (const auto& [v, e] : content.factors())
            parts.push_back(f_atom(MultiPoly::variable(p.domain(), v), rel));
        parts.push_back(fold_atom(rest, rel));
        return rel == Rel::Eq ? f_or_all(parts) : f_and_all(parts);
    }
    return f_atom(p, rel);
}

// Flattened n-ary view of nested And (or Or) nodes of the same kind;
// iterative so chains of any length cannot exhaust the stack.
void flatten(const FormulaPtr& f, FKind kind, std::vector<FormulaPtr>& out) {
    std::vector<FormulaPtr> stack{f};
    while (!stack.empty()) {
        FormulaPtr g = stack.back();
        stack.pop_back();
        if (g->kind() == kind) {
            stack.push_back(g->right());
            stack.push_back(g->left());
        } else {
            out.push_back(g);
        }
    }
}

bool is_complement(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind() != FKind::Atom || b->kind() != FKind::Atom) return false;
    if (a->rel() == b->rel()) return false;
    return MultiPoly::compare(a->poly(), b->poly()) == 0;
}

// Conjunct set of a formula (the formula itself unless it is an And chain),
// used for absorption between disjuncts.
std::vector<FormulaPtr> conjunct_set(const FormulaPtr& f) {
    std::vector<FormulaPtr> cs;
    flatten(f, FKind::And, cs);
    std::sort(cs.begin(), cs.end(),
              [](const FormulaPtr& x, const FormulaPtr& y) { return formula_compare(x, y) < 0; });
    return cs;
}

bool conjuncts_subsume(const std::vector<FormulaPtr>& weaker, const std::vector<FormulaPtr>& stronger) {
    if (weaker.size() > stronger.size()) return false;
    std::size_t j = 0;
    for (const auto& w : weaker) {
        while (j < stronger.size() && formula_compare(stronger[j], w) < 0) ++j;
        if (j >= stronger.size() || formula_compare(stronger[j], w) != 0) return false;
        ++j;
    }
    return true;
}

// Simplification in negation normal form: `neg` is the pending polarity,
// so negations are consumed structurally instead of by rebuilding trees.
FormulaPtr simplify_rec(const FormulaPtr& f, bool neg, const FieldContext& ctx) {
    switch (f->kind()) {
        case FKind::True:
            return neg ? f_false() : f_true();
        case FKind::False:
            return neg ? f_true() : f_false();
        case FKind::Atom: {
            Rel r = f->rel();
            if (neg) r = (r == Rel::Eq ? Rel::Neq : Rel::Eq);
            return fold_atom(f->poly(), r);
        }
        case FKind::Not:
            return simplify_rec(f->child(), !neg, ctx);
        case FKind::And:
        case FKind::Or: {
            FKind kind = ((f->kind() == FKind::And) != neg) ? FKind::And : FKind::Or;
            FormulaPtr unit = kind == FKind::And ? f_true() : f_false();
            FormulaPtr zero = kind == FKind::And ? f_false() : f_true();
            // Gather children of the effective kind under polarity,
            // iteratively.
            std::vector<FormulaPtr> kids;
            std::vector<std::pair<FormulaPtr, bool>> stack{{f, neg}};
            while (!stack.empty()) {
                auto [g, gneg] = stack.back();
                stack.pop_back();
                if (g->kind() == FKind::Not) {
                    stack.emplace_back(g->child(), !gneg);
                    continue;
                }
                bool same_kind = (g->kind() == FKind::And || g->kind() == FKind::Or) &&
                                 (((g->kind() == FKind::And) != gneg) ? FKind::And : FKind::Or) == kind;
                if (same_kind) {
                    stack.emplace_back(g->right(), gneg);
                    stack.emplace_back(g->left(), gneg);
                    continue;
                }
                FormulaPtr s = simplify_rec(g, gneg, ctx);
                if (structural_equal(s, zero)) return zero;
                if (structural_equal(s, unit)) continue;
                std::vector<FormulaPtr> inner;
                flatten(s, kind, inner);
                kids.insert(kids.end(), inner.begin(), inner.end());
            }
            std::sort(kids.begin(), kids.end(), [](const FormulaPtr& a, const FormulaPtr& b) {
                return formula_compare(a, b) < 0;
            });
            kids.erase(std::unique(kids.begin(), kids.end(),
                                   [](const FormulaPtr& a, const FormulaPtr& b) {
                                       return formula_compare(a, b) == 0;
                                   }),
                       kids.end());
            for (std::size_t i = 0; i < kids.size(); ++i)
                for (std::size_t j = i + 1; j < kids.size(); ++j)
                    if (is_complement(kids[i], kids[j])) return zero;
            if (kind == FKind::Or && kids.size() > 1) {
                // Absorption: drop disjuncts whose conjunct set contains
                // another disjunct's set.
                std::vector<std::vector<FormulaPtr>> sets;
                sets.reserve(kids.size());
                for (const auto& k : kids) sets.push_back(conjunct_set(k));
                std::vector<FormulaPtr> kept;
                for (std::size_t i = 0; i < kids.size(); ++i) {
                    bool dead = false;
                    for (std::size_t j = 0; j < kids.size() && !dead; ++j) {
                        if (i == j) continue;
                        if (conjuncts_subsume(sets[j], sets[i]) &&
                            !(conjuncts_subsume(sets[i], sets[j]) && j > i))
                            dead = true;
                    }
                    if (!dead) kept.push_back(kids[i]);
                }
                kids = std::move(kept);
            }
            if (kids.empty()) return unit;
            FormulaPtr acc = kids.front();
            for (std::size_t i = 1; i < kids.size(); ++i) acc = make_binary(kind, acc, kids[i]);
            return acc;
        }
        case FKind::InfMany: {
            // Einf has no dual, so a pending negation stays outside it.  A
            // v-independent body collapses: over an infinite field, a truth
            // that does not mention v holds for infinitely many v or none.
            FormulaPtr body = simplify_rec(f->child(), false, ctx);
            bool collapses = body->kind() == FKind::True || body->kind() == FKind::False ||
                             !body->free_vars().count(f->var());
            if (collapses) return neg ? simplify_rec(f->child(), true, ctx) : body;
            FormulaPtr node = make_quantifier(FKind::InfMany, f->var(), body);
            return neg ? f_not(node) : node;
        }
        case FKind::Exists:
        case FKind::Forall: {
            FKind kind = f->kind();
            if (neg) kind = (kind == FKind::Exists) ? FKind::Forall : FKind::Exists;
            FormulaPtr body = simplify_rec(f->child(), neg, ctx);
            if (body->kind() == FKind::True || body->kind() == FKind::False) return body;
            if (!body->free_vars().count(f->var())) return body;
            return make_quantifier(kind, f->var(), body);
        }
    }
    throw PreconditionError("unknown formula kind");
}

// ---------------------------------------------------------------------------
// Existential elimination for one conjunction.

struct Workset {
    std::vector<MultiPoly> eqs;    // equations mentioning the variable
    std::vector<MultiPoly> neqs;   // inequations mentioning the variable
    std::vector<FormulaPtr> outer; // variable-free atoms moved outside
    bool dead = false;             // a variable-free atom folded to false
};

Workset split_by_var(const std::vector<MultiPoly>& eqs, const std::vector<MultiPoly>& neqs,
                     const std::string& v) {
    Workset w;
    for (const auto& p : eqs) {
        if (p.mentions(v)) {
            MultiPoly n = p.normalized();
            bool dup = false;
            for (const auto& q : w.eqs)
                if (MultiPoly::compare(q, n) == 0) dup = true;
            if (!dup) w.eqs.push_back(std::move(n));
        } else {
            FormulaPtr a = fold_atom(p, Rel::Eq);
            if (a->kind() == FKind::False) w.dead = true;
            if (a->kind() != FKind::False && a->kind() != FKind::True) w.outer.push_back(a);
        }
    }
    auto push_unique_neq = [&w](MultiPoly n) {
        for (const auto& q : w.neqs)
            if (MultiPoly::compare(q, n) == 0) return;
        w.neqs.push_back(std::move(n));
    };
    for (const auto& p : neqs) {
        if (p.mentions(v)) {
            MultiPoly n = p.normalized();
            // A product is nonzero exactly when all factors are: peel off
            // the common monomial conjunctively.
            Monomial content = n.content_monomial();
            if (!content.is_constant()) {
                for (const auto& [u, e] : content.factors()) {
                    if (u == v)
                        push_unique_neq(MultiPoly::variable(n.domain(), v));
                    else
                        w.outer.push_back(f_atom(MultiPoly::variable(n.domain(), u), Rel::Neq));
                }
                n = n.without_monomial(content).normalized();
            }
            if (n.is_constant()) continue;  // nonzero constant: no constraint
            if (n.mentions(v))
                push_unique_neq(std::move(n));
            else
                w.outer.push_back(f_atom(n, Rel::Neq));
        } else {
            FormulaPtr a = fold_atom(p, Rel::Neq);
            if (a->kind() == FKind::False) w.dead = true;
            if (a->kind() != FKind::False && a->kind() != FKind::True) w.outer.push_back(a);
        }
    }
    return w;
}

// Disjunction over the coefficients of p in v: "p, as a polynomial in v,
// does not vanish identically".
FormulaPtr some_coefficient_nonzero(const MultiPoly& p, const std::string& v) {
    std::vector<FormulaPtr> parts;
    for (const auto& c : p.coeffs_in(v)) parts.push_back(fold_atom(c, Rel::Neq));
    return f_or_all(parts);
}

FormulaPtr eliminate_rec(std::vector<MultiPoly> eqs, std::vector<MultiPoly> neqs,
                         const std::string& v, const FieldContext& ctx, int depth) {
    if (depth > 256) throw BudgetExceededError(ctx.dnf_budget, "elimination case-split depth");
    Workset w = split_by_var(eqs, neqs, v);
    if (w.dead) return f_false();

    FormulaPtr inner;
    if (w.eqs.empty()) {
        if (w.neqs.empty()) {
            inner = f_true();  // E v. true over a nonempty field
        } else {
            // A finite set of roots cannot exhaust an infinite field: the
            // conjunction of inequations is satisfiable exactly when their
            // product does not vanish identically in v, i.e. (over a
            // domain) when no single factor does.
            std::vector<FormulaPtr> factors;
            for (const auto& q : w.neqs) factors.push_back(some_coefficient_nonzero(q, v));
            inner = f_and_all(factors);
            if (ctx.trace) trace_line(ctx, "eliminate " + v + ": " + std::to_string(w.neqs.size()) +
                                " inequations, factorwise nonvanishing");
        }
    } else {
        // Zero-divisor split: an equation with a common monomial factor
        // breaks into vanishing branches per variable, each strictly
        // simpler.
        for (std::size_t i = 0; i < w.eqs.size(); ++i) {
            Monomial content = w.eqs[i].content_monomial();
            if (content.is_constant()) continue;
            MultiPoly rest = w.eqs[i].without_monomial(content);
            // "c*u = 0" is already atomic; splitting it would regenerate
            // itself forever.
            if (rest.is_constant() && content.factors().size() == 1 &&
                content.factors()[0].second == 1)
                continue;
            std::vector<MultiPoly> base;
            for (std::size_t j = 0; j < w.eqs.size(); ++j)
                if (j != i) base.push_back(w.eqs[j]);
            std::vector<FormulaPtr> branches;
            for (const auto& [u, e] : content.factors()) {
                std::vector<MultiPoly> eqs2 = base;
                eqs2.push_back(MultiPoly::variable(w.eqs[i].domain(), u));
                branches.push_back(eliminate_rec(eqs2, w.neqs, v, ctx, depth + 1));
            }
            if (!rest.is_constant()) {
                std::vector<MultiPoly> eqs2 = base;
                eqs2.push_back(rest);
                branches.push_back(eliminate_rec(eqs2, w.neqs, v, ctx, depth + 1));
            }
            std::vector<FormulaPtr> parts = w.outer;
            parts.push_back(f_or_all(branches));
            return f_and_all(parts);
        }
        // A linear equation with constant head solves for v outright; the
        // substitution avoids every case split.
        for (std::size_t i = 0; i < w.eqs.size(); ++i) {
            const MultiPoly& e = w.eqs[i];
            if (e.degree_in(v) != 1) continue;
            MultiPoly lc = e.leading_coeff_in(v);
            if (!lc.is_constant()) continue;
            MultiPoly value = e.coeff_of(v, 0).scaled(-lc.constant_value().inverse());
            std::vector<FormulaPtr> parts = w.outer;
            for (std::size_t j = 0; j < w.eqs.size(); ++j)
                if (j != i) parts.push_back(fold_atom(w.eqs[j].substitute(v, value), Rel::Eq));
            for (const auto& q : w.neqs)
                parts.push_back(fold_atom(q.substitute(v, value), Rel::Neq));
            if (ctx.trace) trace_line(ctx, "eliminate " + v + ": substitute from " + e.to_string());
            return f_and_all(parts);
        }
        // Otherwise pick an equation of minimal positive degree in v,
        // preferring a constant leading coefficient on ties.
        std::size_t pick = 0;
        auto better = [&](std::size_t i, std::size_t j) {
            int di = w.eqs[i].degree_in(v), dj = w.eqs[j].degree_in(v);
            if (di != dj) return di < dj;
            bool ci = w.eqs[i].leading_coeff_in(v).is_constant();
            bool cj = w.eqs[j].leading_coeff_in(v).is_constant();
            return ci && !cj;
        };
        for (std::size_t i = 1; i < w.eqs.size(); ++i)
            if (better(i, pick)) pick = i;
        MultiPoly f0 = w.eqs[pick];
        int d = f0.degree_in(v);
        MultiPoly lead = f0.leading_coeff_in(v);
        std::vector<FormulaPtr> branches;

        // Branch: the leading coefficient vanishes and the equation loses
        // its head term.  Impossible when the coefficient is a nonzero
        // constant.
        if (!lead.is_constant()) {
            MultiPoly truncated = f0 - lead * MultiPoly::variable(f0.domain(), v).pow(d);
            std::vector<MultiPoly> eqs2;
            for (std::size_t i = 0; i < w.eqs.size(); ++i) {
                if (i == pick) {
                    if (!truncated.is_zero()) eqs2.push_back(truncated);
                } else {
                    eqs2.push_back(w.eqs[i]);
                }
            }
            if (ctx.trace) trace_line(ctx, "eliminate " + v + ": case lc(" + f0.to_string() + ") = 0");
            branches.push_back(
                f_and(fold_atom(lead, Rel::Eq), eliminate_rec(eqs2, w.neqs, v, ctx, depth + 1)));
        }

        // Branch: the leading coefficient is nonzero.
        FormulaPtr nonzero_case;
        if (w.eqs.size() == 1) {
            // One equation of degree d with invertible head: it has d roots;
            // the inequations fail exactly when every root of f0 is a root
            // of the product G, i.e. f0 divides G^d.
            MultiPoly g = MultiPoly::constant(f0.domain(), 1);
            for (const auto& q : w.neqs) g = g * q;
            PseudoDivision pd = pseudo_divide(g.pow(d), f0, v);
            nonzero_case = some_coefficient_nonzero(pd.remainder.normalized(), v);
            if (ctx.trace) trace_line(ctx, "eliminate " + v + ": root of " + f0.to_string() +
                                " avoiding inequations, remainder degree " +
                                std::to_string(pd.remainder.degree_in(v)));
        } else {
            // Reduce every other equation modulo f0.
            std::vector<MultiPoly> eqs2;
            eqs2.push_back(f0);
            for (std::size_t i = 0; i < w.eqs.size(); ++i) {
                if (i == pick) continue;
                PseudoDivision pd = pseudo_divide(w.eqs[i], f0, v);
                if (!pd.remainder.is_zero()) eqs2.push_back(pd.remainder.normalized());
            }
            if (ctx.trace) trace_line(ctx, "eliminate " + v + ": reduce " + std::to_string(w.eqs.size() - 1) +
                                " equations modulo " + f0.to_string());
            nonzero_case = eliminate_rec(eqs2, w.neqs, v, ctx, depth + 1);
        }
        if (lead.is_constant()) {
            branches.push_back(nonzero_case);  // head cannot vanish
        } else {
            branches.push_back(f_and(fold_atom(lead, Rel::Neq), nonzero_case));
        }
        inner = f_or_all(branches);
    }

    std::vector<FormulaPtr> parts = w.outer;
    parts.push_back(inner);
    return f_and_all(parts);
}

}  // namespace

FormulaPtr simplify(const FormulaPtr& f, const FieldContext& ctx) { return simplify_rec(f, ctx); }

FormulaPtr eliminate_one(const DnfDisjunct& disjunct, const std::string& var,
                         const FieldContext& ctx) {
    FormulaPtr r = eliminate_rec(disjunct.equations, disjunct.inequations, var, ctx, 0);
    return simplify(r, ctx);
}

FormulaPtr qe(const FormulaPtr& f, const FieldContext& ctx) {
    switch (f->kind()) {
        case FKind::True:
        case FKind::False:
        case FKind::Atom:
            return f;
        case FKind::Not:
            return simplify(f_not(qe(f->child(), ctx)), ctx);
        case FKind::And:
        case FKind::Or:
            return simplify(make_binary(f->kind(), qe(f->left(), ctx), qe(f->right(), ctx)), ctx);
        case FKind::Exists:
        case FKind::Forall: {
            bool universal = f->kind() == FKind::Forall;
            FormulaPtr body = simplify(qe(f->child(), ctx), ctx);
            // Miniscoping: E distributes over |, A over &.  Splitting here
            // keeps the negation step of the universal case from blowing up
            // a disjunctive body into a huge DNF.
            FKind split_kind = universal ? FKind::And : FKind::Or;
            if (body->kind() == split_kind) {
                std::vector<FormulaPtr> parts;
                flatten(body, split_kind, parts);
                std::vector<FormulaPtr> done;
                done.reserve(parts.size());
                for (const auto& part : parts)
                    done.push_back(qe(make_quantifier(f->kind(), f->var(), part), ctx));
                return simplify(universal ? f_and_all(done) : f_or_all(done), ctx);
            }
            if (universal) body = simplify(f_not(body), ctx);
            DnfMatrix dnf = to_dnf(body, ctx.dnf_budget);
            std::vector<FormulaPtr> pieces;
            pieces.reserve(dnf.disjuncts.size());
            for (const auto& d : dnf.disjuncts) pieces.push_back(eliminate_one(d, f->var(), ctx));
            FormulaPtr out = f_or_all(pieces);
            if (universal) out = f_not(out);
            out = simplify(out, ctx);
            if (!out->quantifier_free())
                throw std::logic_error("quantifier elimination left a quantifier behind");
            return out;
        }
        case FKind::InfMany:
            throw PreconditionError(
                "qe does not handle the infinitely-many quantifier; rewrite it first");
    }
    throw PreconditionError("unknown formula kind");
}

bool decide(const FormulaPtr& sentence, const FieldContext& ctx) {
    if (!sentence->free_vars().empty()) {
        std::string vars;
        for (const auto& v : sentence->free_vars()) vars += (vars.empty() ? "" : ", ") + v;
        throw PreconditionError("decide requires a sentence; free variables: " + vars);
    }
    FormulaPtr r = qe(sentence, ctx);
    if (r->kind() == FKind::True) return true;
    if (r->kind() == FKind::False) return false;
    throw std::logic_error("sentence did not fold to a truth value: " + print_formula(r));
}

}  // namespace acfq

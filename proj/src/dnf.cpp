#include <algorithm>

#include "acfq/errors.hpp"
#include "acfq/formula.hpp"

namespace acfq {

namespace {

// A disjunct under construction: sorted, deduplicated atom lists.
struct Conj {
    std::vector<MultiPoly> eqs;
    std::vector<MultiPoly> neqs;

    std::size_t atoms() const { return eqs.size() + neqs.size(); }
};

bool contains(const std::vector<MultiPoly>& v, const MultiPoly& p) {
    for (const auto& q : v)
        if (MultiPoly::compare(q, p) == 0) return true;
    return false;
}

void insert_sorted(std::vector<MultiPoly>& v, const MultiPoly& p) {
    auto it = std::lower_bound(v.begin(), v.end(), p, [](const MultiPoly& a, const MultiPoly& b) {
        return MultiPoly::compare(a, b) < 0;
    });
    if (it != v.end() && MultiPoly::compare(*it, p) == 0) return;
    v.insert(it, p);
}

// Add one atom; returns false when the disjunct became contradictory.
bool add_atom(Conj& c, const MultiPoly& p, Rel rel) {
    if (p.is_constant()) {
        bool zero = p.is_zero();
        if (rel == Rel::Eq) return zero;  // "0 = 0" is vacuous, "c = 0" kills
        return !zero;
    }
    if (rel == Rel::Eq) {
        if (contains(c.neqs, p)) return false;
        insert_sorted(c.eqs, p);
    } else {
        if (contains(c.eqs, p)) return false;
        insert_sorted(c.neqs, p);
    }
    return true;
}

bool merge(const Conj& a, const Conj& b, Conj& out) {
    out = a;
    for (const auto& p : b.eqs)
        if (!add_atom(out, p, Rel::Eq)) return false;
    for (const auto& p : b.neqs)
        if (!add_atom(out, p, Rel::Neq)) return false;
    return true;
}

std::size_t total_atoms(const std::vector<Conj>& cs) {
    std::size_t n = 0;
    for (const auto& c : cs) n += c.atoms();
    return n;
}

// b subsumes a when b's atoms are a subset of a's (b covers at least as much).
bool subset_of(const std::vector<MultiPoly>& small, const std::vector<MultiPoly>& big) {
    if (small.size() > big.size()) return false;
    std::size_t j = 0;
    for (const auto& p : small) {
        while (j < big.size() && MultiPoly::compare(big[j], p) < 0) ++j;
        if (j >= big.size() || MultiPoly::compare(big[j], p) != 0) return false;
        ++j;
    }
    return true;
}

bool subsumes(const Conj& weaker, const Conj& stronger) {
    return subset_of(weaker.eqs, stronger.eqs) && subset_of(weaker.neqs, stronger.neqs);
}

int conj_compare(const Conj& a, const Conj& b) {
    if (a.eqs.size() != b.eqs.size()) return a.eqs.size() < b.eqs.size() ? -1 : 1;
    if (a.neqs.size() != b.neqs.size()) return a.neqs.size() < b.neqs.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.eqs.size(); ++i) {
        int c = MultiPoly::compare(a.eqs[i], b.eqs[i]);
        if (c != 0) return c;
    }
    for (std::size_t i = 0; i < a.neqs.size(); ++i) {
        int c = MultiPoly::compare(a.neqs[i], b.neqs[i]);
        if (c != 0) return c;
    }
    return 0;
}

void prune(std::vector<Conj>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Conj& a, const Conj& b) { return conj_compare(a, b) < 0; });
    cs.erase(std::unique(cs.begin(), cs.end(),
                         [](const Conj& a, const Conj& b) { return conj_compare(a, b) == 0; }),
             cs.end());
    // After dedup, mutual subsumption would mean equality, so dropping every
    // strictly-subsumed disjunct is safe.
    std::vector<Conj> kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool dead = false;
        for (std::size_t j = 0; j < cs.size() && !dead; ++j)
            if (i != j && subsumes(cs[j], cs[i])) dead = true;
        if (!dead) kept.push_back(cs[i]);
    }
    cs = std::move(kept);
}

// Negation-normal-form DNF builder.  `negated` tracks the polarity.
std::vector<Conj> build(const FormulaPtr& f, bool negated, std::size_t budget) {
    switch (f->kind()) {
        case FKind::True:
        case FKind::False: {
            bool truthy = (f->kind() == FKind::True) != negated;
            if (truthy) return {Conj{}};
            return {};
        }
        case FKind::Atom: {
            Rel r = f->rel();
            if (negated) r = (r == Rel::Eq ? Rel::Neq : Rel::Eq);
            Conj c;
            if (!add_atom(c, f->poly(), r)) return {};
            return {c};
        }
        case FKind::Not:
            return build(f->child(), !negated, budget);
        case FKind::And:
        case FKind::Or: {
            bool conjunctive = (f->kind() == FKind::And) != negated;
            std::vector<Conj> l = build(f->left(), negated, budget);
            std::vector<Conj> r = build(f->right(), negated, budget);
            std::vector<Conj> out;
            if (conjunctive) {
                std::size_t next_prune = 64;
                for (const auto& a : l)
                    for (const auto& b : r) {
                        Conj m;
                        if (!merge(a, b, m)) continue;
                        out.push_back(std::move(m));
                        if (out.size() >= next_prune) {
                            prune(out);
                            next_prune = std::max<std::size_t>(64, out.size() * 2);
                        }
                        if (total_atoms(out) > budget) {
                            prune(out);
                            if (total_atoms(out) > budget) throw BudgetExceededError(budget, "DNF atoms");
                        }
                    }
            } else {
                out = std::move(l);
                out.insert(out.end(), r.begin(), r.end());
                if (total_atoms(out) > budget) {
                    prune(out);
                    if (total_atoms(out) > budget) throw BudgetExceededError(budget, "DNF atoms");
                }
            }
            prune(out);
            return out;
        }
        default:
            throw PreconditionError("DNF requires a quantifier-free formula");
    }
}

}  // namespace

DnfMatrix to_dnf(const FormulaPtr& f, std::size_t atom_budget) {
    if (!f->quantifier_free()) throw PreconditionError("DNF requires a quantifier-free formula");
    std::vector<Conj> cs = build(f, false, atom_budget);
    DnfMatrix m;
    for (auto& c : cs) m.disjuncts.push_back({std::move(c.eqs), std::move(c.neqs)});
    return m;
}

FormulaPtr dnf_to_formula(const DnfMatrix& m, const CoeffDomain& dom) {
    (void)dom;
    std::vector<FormulaPtr> ds;
    for (const auto& d : m.disjuncts) {
        std::vector<FormulaPtr> atoms;
        for (const auto& p : d.equations) atoms.push_back(f_atom(p, Rel::Eq));
        for (const auto& p : d.inequations) atoms.push_back(f_atom(p, Rel::Neq));
        ds.push_back(f_and_all(atoms));
    }
    return f_or_all(ds);
}

}  // namespace acfq

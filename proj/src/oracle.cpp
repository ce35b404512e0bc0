#include "acfq/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "acfq/errors.hpp"
#include "acfq/geometric.hpp"

namespace acfq {

namespace {

unsigned long long pow_clamped(long p, long long e, unsigned long long clamp) {
    unsigned long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > clamp / static_cast<unsigned long long>(p)) return clamp + 1;
        r *= static_cast<unsigned long long>(p);
    }
    return r;
}

int max_degree_of(const FormulaPtr& f, const std::string& v) {
    switch (f->kind()) {
        case FKind::True:
        case FKind::False:
            return 0;
        case FKind::Atom:
            return f->poly().degree_in(v);
        case FKind::Not:
        case FKind::Exists:
        case FKind::Forall:
        case FKind::InfMany:
            return max_degree_of(f->child(), v);
        case FKind::And:
        case FKind::Or:
            return std::max(max_degree_of(f->left(), v), max_degree_of(f->right(), v));
    }
    return 0;
}

long long sum_degree_of(const FormulaPtr& f, const std::string& v) {
    switch (f->kind()) {
        case FKind::True:
        case FKind::False:
            return 0;
        case FKind::Atom:
            return f->poly().degree_in(v);
        case FKind::Not:
        case FKind::Exists:
        case FKind::Forall:
        case FKind::InfMany:
            return sum_degree_of(f->child(), v);
        case FKind::And:
        case FKind::Or:
            return sum_degree_of(f->left(), v) + sum_degree_of(f->right(), v);
    }
    return 0;
}

int lcm_up_to(int d) {
    long long l = 1;
    for (int i = 2; i <= d; ++i) l = std::lcm(l, static_cast<long long>(i));
    return static_cast<int>(l);
}

// Search-degree multiplier for one quantifier: a multiple of lcm(1..d) so
// that every root of a specialized atom lands in the search field, large
// enough that excluded points cannot cover it.
int quantifier_multiplier(long p, int base_degree, int max_deg, long long excluded,
                          const OracleLimits& limits) {
    int m0 = lcm_up_to(std::max(1, max_deg));
    int m = m0;
    while (pow_clamped(p, static_cast<long long>(base_degree) * m, limits.field_size_cap) <=
           static_cast<unsigned long long>(excluded))
        m += m0;
    return m * limits.degree_boost;
}

struct EvalState {
    long p;
    FieldTower& tower;
    const OracleLimits* limits;
};

FqElement eval_poly(const MultiPoly& poly, const std::map<std::string, FqElement>& sigma,
                    const std::shared_ptr<const FqField>& field) {
    if (!poly.domain().is_rational() && poly.domain().characteristic() != field->p())
        throw DomainMismatchError("polynomial characteristic differs from the field");
    if (poly.domain().is_rational())
        throw DomainMismatchError("cannot evaluate characteristic-0 polynomials over F_p");
    FqElement acc = field->zero();
    for (const auto& [mono, coeff] : poly.terms()) {
        FqElement term = field->from_integer(coeff.residue());
        for (const auto& [v, e] : mono.factors()) {
            auto it = sigma.find(v);
            if (it == sigma.end()) throw PreconditionError("unassigned variable '" + v + "'");
            term = term * it->second.pow(static_cast<unsigned long long>(e));
        }
        acc = acc + term;
    }
    return acc;
}

bool eval_rec(const FormulaPtr& f, std::map<std::string, FqElement>& sigma,
              const std::shared_ptr<const FqField>& field, EvalState& st) {
    switch (f->kind()) {
        case FKind::True:
            return true;
        case FKind::False:
            return false;
        case FKind::Atom: {
            FqElement v = eval_poly(f->poly(), sigma, field);
            return f->rel() == Rel::Eq ? v.is_zero() : !v.is_zero();
        }
        case FKind::Not:
            return !eval_rec(f->child(), sigma, field, st);
        case FKind::And:
            return eval_rec(f->left(), sigma, field, st) && eval_rec(f->right(), sigma, field, st);
        case FKind::Or:
            return eval_rec(f->left(), sigma, field, st) || eval_rec(f->right(), sigma, field, st);
        case FKind::Exists:
        case FKind::Forall: {
            const std::string& v = f->var();
            int d = max_degree_of(f->child(), v);
            long long excluded = sum_degree_of(f->child(), v);
            int mult = quantifier_multiplier(st.p, field->k(), d, excluded, *st.limits);
            long long target_deg = static_cast<long long>(field->k()) * mult;
            unsigned long long size = pow_clamped(st.p, target_deg, st.limits->field_size_cap);
            if (size > st.limits->field_size_cap)
                throw OracleTooLargeError(size, st.limits->field_size_cap);
            std::shared_ptr<const FqField> big = st.tower.field(st.p, static_cast<int>(target_deg));
            // Lift the whole assignment into the search field.
            std::map<std::string, FqElement> lifted;
            for (const auto& [name, val] : sigma) lifted[name] = st.tower.embed(val, big);
            bool want = f->kind() == FKind::Exists;
            for (unsigned long long i = 0; i < big->size(); ++i) {
                lifted[v] = big->element(i);
                if (eval_rec(f->child(), lifted, big, st) == want) return want;
            }
            return !want;
        }
        case FKind::InfMany:
            throw PreconditionError("the oracle never evaluates Einf directly");
    }
    throw PreconditionError("unknown formula kind");
}

}  // namespace

std::shared_ptr<const FqField> FieldTower::field(long p, int k) {
    auto key = std::make_pair(p, k);
    auto it = fields_.find(key);
    if (it != fields_.end()) return it->second;
    auto f = FqField::make(p, k, cap_);
    fields_[key] = f;
    return f;
}

FqElement FieldTower::embed(const FqElement& e, const std::shared_ptr<const FqField>& target) {
    const auto& src = e.field();
    if (src->p() != target->p()) throw DomainMismatchError("embedding across characteristics");
    if (src->k() == target->k()) return target->from_coords(e.coords());
    if (target->k() % src->k() != 0)
        throw PreconditionError("no embedding: source degree does not divide target degree");
    auto key = std::make_tuple(src->p(), src->k(), target->k());
    auto it = generator_images_.find(key);
    FqElement gen_img;
    if (it != generator_images_.end()) {
        gen_img = it->second;
    } else {
        // Root of the source modulus in the target field, first in
        // enumeration order.
        const FpPoly& m = src->modulus();
        bool found = false;
        for (unsigned long long i = 0; i < target->size(); ++i) {
            FqElement cand = target->element(i);
            FqElement acc = target->zero();
            for (int j = m.degree(); j >= 0; --j)
                acc = acc * cand + target->from_integer(m.coeff(j));
            if (acc.is_zero()) {
                gen_img = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("modulus has no root in the extension field");
        generator_images_[key] = gen_img;
    }
    FqElement acc = target->zero();
    for (int i = src->k() - 1; i >= 0; --i)
        acc = acc * gen_img + target->from_integer(e.coords()[i]);
    return acc;
}

WitnessBound compute_witness_bound(const FormulaPtr& f, long p, int base_degree,
                                   const OracleLimits& limits) {
    WitnessBound wb;
    // Walk outermost-in, tracking the growing field degree.
    struct Walker {
        long p;
        const OracleLimits& limits;
        WitnessBound& wb;
        void walk(const FormulaPtr& g, long long k) {
            switch (g->kind()) {
                case FKind::True:
                case FKind::False:
                case FKind::Atom:
                    return;
                case FKind::Not:
                    walk(g->child(), k);
                    return;
                case FKind::And:
                case FKind::Or:
                    walk(g->left(), k);
                    walk(g->right(), k);
                    return;
                case FKind::Exists:
                case FKind::Forall:
                case FKind::InfMany: {
                    int d = max_degree_of(g->child(), g->var());
                    long long excl = sum_degree_of(g->child(), g->var());
                    int mult = quantifier_multiplier(p, static_cast<int>(k), d, excl, limits);
                    wb.quantifiers.push_back({g->var(), d, excl, mult});
                    walk(g->child(), k * mult);
                    return;
                }
            }
        }
    } walker{p, limits, wb};
    walker.walk(f, base_degree);
    wb.outermost_field_size = pow_clamped(p, base_degree, limits.field_size_cap);
    return wb;
}

bool eval_fpbar(const FormulaPtr& f, long p, const std::map<std::string, FqElement>& assignment,
                FieldTower& tower, const OracleLimits& limits) {
    if (!is_prime(p)) throw PreconditionError("oracle characteristic must be prime");
    for (const auto& v : f->free_vars())
        if (!assignment.count(v))
            throw PreconditionError("free variable '" + v + "' missing from the assignment");
    // Common field for the assignment: lcm of the value degrees.
    long long k0 = 1;
    for (const auto& [name, val] : assignment) {
        if (val.prime() != p) throw DomainMismatchError("assignment value in the wrong characteristic");
        k0 = std::lcm(k0, static_cast<long long>(val.degree()));
    }
    EvalState st{p, tower, &limits};
    unsigned long long base_size = pow_clamped(p, k0, limits.field_size_cap);
    if (base_size > limits.field_size_cap) throw OracleTooLargeError(base_size, limits.field_size_cap);
    auto base = tower.field(p, static_cast<int>(k0));
    std::map<std::string, FqElement> sigma;
    for (const auto& [name, val] : assignment) sigma[name] = tower.embed(val, base);
    return eval_rec(f, sigma, base, st);
}

bool eval_fpbar(const FormulaPtr& f, long p, const std::map<std::string, FqElement>& assignment,
                const OracleLimits& limits) {
    FieldTower tower(limits.field_size_cap);
    return eval_fpbar(f, p, assignment, tower, limits);
}

unsigned long long eval_cost_estimate(const FormulaPtr& f, long p, int base_degree,
                                      const OracleLimits& limits) {
    constexpr unsigned long long clamp = kEvalCostRejected;
    struct Rec {
        long p;
        const OracleLimits& limits;
        unsigned long long walk(const FormulaPtr& g, long long k) {
            switch (g->kind()) {
                case FKind::True:
                case FKind::False:
                case FKind::Atom:
                    return 1;
                case FKind::Not:
                    return walk(g->child(), k);
                case FKind::And:
                case FKind::Or: {
                    unsigned long long a = walk(g->left(), k), b = walk(g->right(), k);
                    return (a > clamp - b) ? clamp : a + b;
                }
                case FKind::Exists:
                case FKind::Forall:
                case FKind::InfMany: {
                    int d = max_degree_of(g->child(), g->var());
                    long long excl = sum_degree_of(g->child(), g->var());
                    int mult = quantifier_multiplier(p, static_cast<int>(k), d, excl, limits);
                    unsigned long long size =
                        pow_clamped(p, k * mult, limits.field_size_cap);
                    if (size > limits.field_size_cap) return clamp;
                    unsigned long long inner = walk(g->child(), k * mult);
                    if (inner == 0) inner = 1;
                    return (size > clamp / inner) ? clamp : size * inner;
                }
            }
            return 1;
        }
    } rec{p, limits};
    return rec.walk(f, base_degree);
}

Finiteness qf_univariate_finiteness(const FormulaPtr& f, const std::string& var,
                                    const FieldContext& ctx) {
    if (!f->quantifier_free()) throw PreconditionError("finiteness oracle needs a quantifier-free formula");
    for (const auto& v : f->free_vars())
        if (v != var) throw PreconditionError("finiteness oracle allows one free variable, saw '" + v + "'");
    DnfMatrix dnf = to_dnf(simplify(f, ctx), ctx.dnf_budget);
    for (const auto& d : dnf.disjuncts) {
        bool has_equation = false;
        for (const auto& p : d.equations)
            if (p.degree_in(var) >= 1) has_equation = true;
        // Equation-free disjuncts survive DNF folding only with nonzero
        // inequation polynomials, whose product has finitely many roots: the
        // disjunct is cofinite, hence infinite.
        if (!has_equation) return Finiteness::Infinite;
    }
    return Finiteness::Finite;
}

std::vector<long long> point_count_growth(const FormulaPtr& f, const std::vector<std::string>& vars,
                                          long p, int m_max, const OracleLimits& limits) {
    if (!f->quantifier_free()) throw PreconditionError("point counting needs a quantifier-free formula");
    std::size_t n = vars.size();
    FieldTower tower(limits.field_size_cap);
    std::vector<long long> counts;
    for (int m = 1; m <= m_max; ++m) {
        unsigned long long total = pow_clamped(p, static_cast<long long>(m) * n, limits.field_size_cap);
        if (total > limits.field_size_cap) throw OracleTooLargeError(total, limits.field_size_cap);
        auto field = tower.field(p, m);
        unsigned long long q = field->size();
        long long count = 0;
        std::map<std::string, FqElement> sigma;
        EvalState st{p, tower, &limits};
        for (unsigned long long flat = 0; flat < total; ++flat) {
            unsigned long long rest = flat;
            for (std::size_t i = 0; i < n; ++i) {
                sigma[vars[i]] = field->element(rest % q);
                rest /= q;
            }
            if (eval_rec(f, sigma, field, st)) ++count;
        }
        counts.push_back(count);
    }
    return counts;
}

TrickSweepReport exhaustive_trick_sweep(int q) {
    long p = 0;
    int k = 0;
    switch (q) {
        case 2: p = 2, k = 1; break;
        case 3: p = 3, k = 1; break;
        case 4: p = 2, k = 2; break;
        case 5: p = 5, k = 1; break;
        case 7: p = 7, k = 1; break;
        case 8: p = 2, k = 3; break;
        case 9: p = 3, k = 2; break;
        case 11: p = 11, k = 1; break;
        default:
            throw PreconditionError("sweep supports q in {2, 3, 4, 5, 7, 8, 9, 11}");
    }
    auto field = FqField::make(p, k);
    std::vector<FqElement> elems = field->enumerate();
    TrickSweepReport rep;
    rep.q = field->size();
    rep.all_ok = true;
    unsigned long long total = 1ULL << q;
    rep.subsets = total;
    for (unsigned long long mask = 0; mask < total; ++mask) {
        std::vector<FqElement> subset;
        for (int i = 0; i < q; ++i)
            if (mask & (1ULL << i)) subset.push_back(elems[i]);
        DichotomyReport d = dichotomy(field, subset);
        if (d.covers)
            ++rep.cover_cases;
        else if (d.injection_verified)
            ++rep.injection_cases;
        else
            rep.all_ok = false;
    }
    return rep;
}

std::vector<FqElement> specialize_univariate(const MultiPoly& p,
                                             const std::map<std::string, FqElement>& assignment,
                                             const std::string& remaining, const FqField& field) {
    auto self = field.shared_from_this();
    int d = p.degree_in(remaining);
    std::vector<FqElement> out;
    out.reserve(d + 1);
    for (int i = 0; i <= d; ++i) {
        MultiPoly ci = p.coeff_of(remaining, i);
        FqElement acc = field.zero();
        for (const auto& [mono, coeff] : ci.terms()) {
            FqElement term = field.from_integer(coeff.residue());
            for (const auto& [v, e] : mono.factors()) {
                auto it = assignment.find(v);
                if (it == assignment.end())
                    throw PreconditionError("unassigned variable '" + v + "' in specialization");
                term = term * it->second.pow(static_cast<unsigned long long>(e));
            }
            acc = acc + term;
        }
        out.push_back(acc);
    }
    // Trim trailing zeros so the degree is honest.
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

}  // namespace acfq

#include "acfq/geometric.hpp"

#include <algorithm>
#include <map>

#include "acfq/errors.hpp"

namespace acfq {

namespace {

// The slope sentence for "the set {v : phi(v)} is infinite":
//   A s. E x. E y. E x'. E y'.
//     phi(x) & phi(y) & phi(x') & phi(y') & x != x' & s*(x' - x) = y - y'
FormulaPtr slope_sentence(const std::string& v, const FormulaPtr& phi, const CoeffDomain& dom) {
    std::set<std::string> taken = all_names(phi);
    taken.insert(v);
    auto pick = [&taken](const std::string& base) {
        std::string n = fresh_name(base, taken);
        taken.insert(n);
        return n;
    };
    std::string s = pick("s");
    std::string x1 = pick("x1");
    std::string y1 = pick("y1");
    std::string x2 = pick("x2");
    std::string y2 = pick("y2");

    auto var = [&dom](const std::string& n) { return MultiPoly::variable(dom, n); };
    FormulaPtr member_x1 = substitute(phi, v, var(x1));
    FormulaPtr member_y1 = substitute(phi, v, var(y1));
    FormulaPtr member_x2 = substitute(phi, v, var(x2));
    FormulaPtr member_y2 = substitute(phi, v, var(y2));

    FormulaPtr distinct = f_atom(var(x1) - var(x2), Rel::Neq);
    FormulaPtr slope_eq = f_atom(var(s) * (var(x2) - var(x1)) - (var(y1) - var(y2)), Rel::Eq);

    FormulaPtr body = f_and_all({member_x1, member_y1, member_x2, member_y2, distinct, slope_eq});
    return f_forall(s, f_exists(x1, f_exists(y1, f_exists(x2, f_exists(y2, body)))));
}

FormulaPtr rewrite_rec(const FormulaPtr& f, const FieldContext& ctx) {
    switch (f->kind()) {
        case FKind::True:
        case FKind::False:
        case FKind::Atom:
            return f;
        case FKind::Not:
            return f_not(rewrite_rec(f->child(), ctx));
        case FKind::And:
        case FKind::Or:
            return make_binary(f->kind(), rewrite_rec(f->left(), ctx), rewrite_rec(f->right(), ctx));
        case FKind::Exists:
        case FKind::Forall:
            return make_quantifier(f->kind(), f->var(), rewrite_rec(f->child(), ctx));
        case FKind::InfMany: {
            FormulaPtr body = rewrite_rec(f->child(), ctx);  // innermost first
            return slope_sentence(f->var(), body, ctx.coeff);
        }
    }
    throw PreconditionError("unknown formula kind");
}

FormulaPtr exists_closure(const FormulaPtr& f, const std::vector<std::string>& vars) {
    FormulaPtr out = f;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = f_exists(*it, out);
    return out;
}

}  // namespace

FormulaPtr rewrite_inf_many(const FormulaPtr& f, const FieldContext& ctx) {
    return rewrite_rec(f, ctx);
}

InfiniteResult is_infinite(const FormulaPtr& f, const std::vector<std::string>& vars,
                           const FieldContext& ctx) {
    if (vars.empty()) throw PreconditionError("is_infinite needs at least one coordinate");
    std::vector<FormulaPtr> projections;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        std::vector<std::string> others;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if (j != i) others.push_back(vars[j]);
        projections.push_back(f_inf_many(vars[i], exists_closure(f, others)));
    }
    FormulaPtr crit = qe(rewrite_inf_many(f_or_all(projections), ctx), ctx);
    crit = simplify(crit, ctx);
    InfiniteResult r;
    r.criterion = crit;
    if (crit->free_vars().empty()) {
        r.decided = true;
        r.value = decide(crit, ctx);
    } else {
        r.decided = false;
        r.value = false;
    }
    return r;
}

DimResult dimension(const FormulaPtr& f, const std::vector<std::string>& vars,
                    const FieldContext& ctx) {
    if (vars.empty()) throw PreconditionError("dimension needs at least one coordinate");
    for (const auto& v : f->free_vars())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw PreconditionError("free variable '" + v + "' is not among the coordinates");
    std::size_t n = vars.size();

    // crit(mask, k): quantifier-free criterion for "the set in the masked
    // coordinates has dimension >= k", with the unmasked coordinates free.
    std::map<std::pair<unsigned, int>, FormulaPtr> memo;
    auto crit = [&](auto&& self, unsigned mask, int k) -> FormulaPtr {
        auto key = std::make_pair(mask, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        FormulaPtr out;
        int size = __builtin_popcount(mask);
        if (k > size) {
            out = f_false();
        } else if (k == 0) {
            std::vector<std::string> masked;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) masked.push_back(vars[i]);
            out = simplify(qe(exists_closure(f, masked), ctx), ctx);
        } else {
            std::vector<FormulaPtr> parts;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(mask & (1u << i))) continue;
                FormulaPtr fiber = self(self, mask & ~(1u << i), k - 1);
                FormulaPtr lifted = qe(rewrite_inf_many(f_inf_many(vars[i], fiber), ctx), ctx);
                parts.push_back(lifted);
            }
            out = simplify(f_or_all(parts), ctx);
        }
        memo[key] = out;
        return out;
    };

    unsigned full = (n >= 32) ? ~0u : ((1u << n) - 1);
    if (n >= 32) throw PreconditionError("dimension supports at most 31 coordinates");

    DimResult res;
    FormulaPtr nonempty = crit(crit, full, 0);
    bool sat = decide(nonempty, ctx);
    res.certificate.push_back({0, "", sat, print_formula(nonempty)});
    if (!sat) {
        res.dim = -1;
        return res;
    }
    res.dim = 0;
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            FormulaPtr fiber = crit(crit, full & ~(1u << i), k - 1);
            FormulaPtr lifted = qe(rewrite_inf_many(f_inf_many(vars[i], fiber), ctx), ctx);
            lifted = simplify(lifted, ctx);
            bool holds = decide(lifted, ctx);
            res.certificate.push_back({k, vars[i], holds, print_formula(lifted)});
            any = any || holds;
        }
        if (!any) break;
        res.dim = k;
    }
    return res;
}

BoundingSet bounding_polys(const FormulaPtr& f, const std::vector<std::string>& params,
                           const std::string& fiber_var, const FieldContext& ctx) {
    for (const auto& v : f->free_vars())
        if (v != fiber_var && std::find(params.begin(), params.end(), v) == params.end())
            throw PreconditionError("free variable '" + v + "' is neither a parameter nor the fiber variable");
    FormulaPtr qf = simplify(qe(f, ctx), ctx);
    DnfMatrix dnf = to_dnf(qf, ctx.dnf_budget);

    std::vector<MultiPoly> base;
    for (const auto& d : dnf.disjuncts)
        for (const auto& p : d.equations)
            if (p.degree_in(fiber_var) >= 1) {
                MultiPoly q = p.normalized();
                bool seen = false;
                for (const auto& b : base)
                    if (MultiPoly::compare(b, q) == 0) seen = true;
                if (!seen) base.push_back(q);
            }
    std::sort(base.begin(), base.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return MultiPoly::compare(a, b) < 0; });

    // A finite fiber can spread across several disjuncts, each pinned by a
    // different equation; products over subsets supply a single covering
    // polynomial for every such combination.
    if (base.size() > 12) throw BudgetExceededError(ctx.dnf_budget, "bounding witness base too large");
    std::vector<MultiPoly> witnesses;
    for (unsigned sub = 1; sub < (1u << base.size()); ++sub) {
        MultiPoly prod = MultiPoly::constant(ctx.coeff, 1);
        for (std::size_t i = 0; i < base.size(); ++i)
            if (sub & (1u << i)) prod = prod * base[i];
        MultiPoly norm = prod.normalized();
        bool seen = false;
        for (const auto& w : witnesses)
            if (MultiPoly::compare(w, norm) == 0) seen = true;
        if (!seen) witnesses.push_back(norm);
    }
    std::sort(witnesses.begin(), witnesses.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return MultiPoly::compare(a, b) < 0; });

    BoundingSet bs;
    bs.fiber_var = fiber_var;
    bs.witnesses = std::move(witnesses);
    bs.uniform_bound = 0;
    for (const auto& w : bs.witnesses) bs.uniform_bound = std::max(bs.uniform_bound, w.degree_in(fiber_var));
    return bs;
}

bool slope_cover_check(const FormulaPtr& f, const std::string& var, const FieldContext& ctx) {
    for (const auto& v : f->free_vars())
        if (v != var)
            throw PreconditionError("slope cover check allows no parameters, saw '" + v + "'");
    InfiniteResult inf = is_infinite(f, {var}, ctx);
    if (!inf.decided || !inf.value)
        throw PreconditionError("slope cover check requires an infinite set");
    return decide(slope_sentence(var, f, ctx.coeff), ctx);
}

DichotomyReport dichotomy(const std::shared_ptr<const FqField>& field,
                          const std::vector<FqElement>& subset) {
    unsigned long long q = field->size();
    DichotomyReport rep;
    rep.q = q;

    std::vector<unsigned long long> xs;
    xs.reserve(subset.size());
    for (const auto& e : subset) xs.push_back(field->index_of(e));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    rep.subset = xs;

    // Index tables keep the quartic sweep cheap.
    std::vector<FqElement> elems = field->enumerate();
    std::vector<std::vector<unsigned long long>> sub_idx(q, std::vector<unsigned long long>(q));
    std::vector<std::vector<unsigned long long>> mul_idx(q, std::vector<unsigned long long>(q));
    for (unsigned long long i = 0; i < q; ++i)
        for (unsigned long long j = 0; j < q; ++j) {
            sub_idx[i][j] = field->index_of(elems[i] - elems[j]);
            mul_idx[i][j] = field->index_of(elems[i] * elems[j]);
        }
    std::vector<unsigned long long> inv_idx(q, 0);
    for (unsigned long long i = 1; i < q; ++i) inv_idx[i] = field->index_of(elems[i].inverse());

    std::vector<bool> in_slope_set(q, false);
    for (unsigned long long x : xs)
        for (unsigned long long xp : xs) {
            if (x == xp) continue;
            unsigned long long denom_inv = inv_idx[sub_idx[xp][x]];
            for (unsigned long long y : xs)
                for (unsigned long long yp : xs)
                    in_slope_set[mul_idx[sub_idx[y][yp]][denom_inv]] = true;
        }
    for (unsigned long long i = 0; i < q; ++i)
        if (in_slope_set[i]) rep.slope_set.push_back(i);
    rep.covers = rep.slope_set.size() == q;
    if (rep.covers) return rep;

    // First leftover value; the affine map (x, y) -> a*x + y must then be
    // injective on X^2.
    unsigned long long a = 0;
    while (in_slope_set[a]) ++a;
    rep.injection_slope = a;
    std::vector<unsigned long long> images;
    images.reserve(xs.size() * xs.size());
    for (unsigned long long x : xs)
        for (unsigned long long y : xs) {
            unsigned long long ax = mul_idx[a][x];
            images.push_back(field->index_of(elems[ax] + elems[y]));
        }
    rep.pairs_checked = images.size();
    std::sort(images.begin(), images.end());
    rep.injection_verified = std::adjacent_find(images.begin(), images.end()) == images.end();
    return rep;
}

FrobeniusReport frobenius_injection_demo(long p, int degree_bound, unsigned long long pair_budget) {
    if (p != 2 && p != 3 && p != 5)
        throw PreconditionError("the imperfect-field demonstration runs for p in {2, 3, 5}");
    if (degree_bound < 0) throw PreconditionError("degree bound must be >= 0");
    std::vector<RatFunc> funcs = ratfunc_enumerate(p, degree_bound);
    FrobeniusReport rep;
    rep.prime = p;
    rep.degree_bound = degree_bound;
    rep.functions = funcs.size();
    unsigned long long pairs = static_cast<unsigned long long>(funcs.size()) * funcs.size();
    if (pairs > pair_budget) throw BudgetExceededError(pair_budget, "rational-function pairs");
    rep.pairs_checked = pairs;

    RatFunc t = RatFunc::indeterminate(p);
    std::map<RatFunc, std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < funcs.size(); ++i) {
        RatFunc xp = funcs[i].pow(static_cast<int>(p));
        for (std::size_t j = 0; j < funcs.size(); ++j) {
            RatFunc img = xp + t * funcs[j].pow(static_cast<int>(p));
            auto [it, fresh] = seen.emplace(img, std::make_pair(i, j));
            if (!fresh) ++rep.collisions;
        }
    }
    return rep;
}

}  // namespace acfq

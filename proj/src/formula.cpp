#include "acfq/formula.hpp"

#include <algorithm>
#include <map>

#include "acfq/errors.hpp"

namespace acfq {

const MultiPoly& Formula::poly() const {
    if (!poly_) throw PreconditionError("not an atom");
    return *poly_;
}
Rel Formula::rel() const {
    if (kind_ != FKind::Atom) throw PreconditionError("not an atom");
    return rel_;
}
const FormulaPtr& Formula::child() const { return a_; }
const FormulaPtr& Formula::left() const { return a_; }
const FormulaPtr& Formula::right() const { return b_; }
const std::string& Formula::var() const { return var_; }

FormulaPtr f_true() {
    auto f = std::make_shared<Formula>(Formula());
    f->kind_ = FKind::True;
    return f;
}

FormulaPtr f_false() {
    auto f = std::make_shared<Formula>(Formula());
    f->kind_ = FKind::False;
    return f;
}

FormulaPtr f_atom(const MultiPoly& p, Rel r) {
    auto f = std::make_shared<Formula>(Formula());
    f->kind_ = FKind::Atom;
    f->poly_ = p.normalized();
    f->rel_ = r;
    for (const auto& v : f->poly_->variables()) f->free_.insert(v);
    return f;
}

FormulaPtr f_not(FormulaPtr g) {
    auto f = std::make_shared<Formula>(Formula());
    f->kind_ = FKind::Not;
    f->free_ = g->free_vars();
    f->bound_ = g->bound_vars();
    f->qfree_ = g->quantifier_free();
    f->has_inf_ = g->has_inf_many();
    f->a_ = std::move(g);
    return f;
}

namespace {

bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& big = a.size() <= b.size() ? b : a;
    for (const auto& x : small)
        if (big.count(x)) return true;
    return false;
}

MultiPoly rename_vars(const MultiPoly& p, const std::map<std::string, std::string>& ren) {
    MultiPoly out(p.domain());
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::pair<std::string, int>> fs;
        for (const auto& [v, e] : m.factors()) {
            auto it = ren.find(v);
            fs.emplace_back(it == ren.end() ? v : it->second, e);
        }
        out.add_term(Monomial(std::move(fs)), c);
    }
    return out;
}

// Rename every binder whose name appears in `trigger` to a name outside
// `taken`; `taken` starts out holding every name of the whole tree plus the
// trigger set and accumulates the replacements.
FormulaPtr refresh_binders(const FormulaPtr& f, const std::set<std::string>& trigger,
                           std::set<std::string>& taken,
                           std::map<std::string, std::string>& active) {
    switch (f->kind()) {
        case FKind::True:
        case FKind::False:
            return f;
        case FKind::Atom: {
            bool touched = false;
            for (const auto& [from, to] : active)
                if (f->free_vars().count(from)) touched = true;
            if (!touched) return f;
            return f_atom(rename_vars(f->poly(), active), f->rel());
        }
        case FKind::Not: {
            FormulaPtr c = refresh_binders(f->child(), trigger, taken, active);
            return c == f->child() ? f : f_not(c);
        }
        case FKind::And:
        case FKind::Or: {
            FormulaPtr l = refresh_binders(f->left(), trigger, taken, active);
            FormulaPtr r = refresh_binders(f->right(), trigger, taken, active);
            if (l == f->left() && r == f->right()) return f;
            return make_binary(f->kind(), l, r);
        }
        case FKind::Exists:
        case FKind::Forall:
        case FKind::InfMany: {
            std::string v = f->var();
            bool rename = trigger.count(v) > 0;
            std::string v2 = v;
            if (rename) {
                v2 = fresh_name(v, taken);
                taken.insert(v2);
                active[v] = v2;
            }
            FormulaPtr body = refresh_binders(f->child(), trigger, taken, active);
            if (rename) active.erase(v);
            if (!rename && body == f->child()) return f;
            return make_quantifier(f->kind(), v2, body);
        }
    }
    throw PreconditionError("unknown formula kind");
}

FormulaPtr refreshed(const FormulaPtr& f, const std::set<std::string>& avoid) {
    if (!intersects(f->bound_vars(), avoid)) return f;
    std::set<std::string> taken = avoid;
    for (const auto& n : all_names(f)) taken.insert(n);
    std::map<std::string, std::string> active;
    return refresh_binders(f, avoid, taken, active);
}

}  // namespace

FormulaPtr make_binary(FKind kind, FormulaPtr a, FormulaPtr b) {
    // Keep bound names globally unique and disjoint from free names.
    {
        std::set<std::string> avoid_b = a->free_vars();
        avoid_b.insert(a->bound_vars().begin(), a->bound_vars().end());
        b = refreshed(b, avoid_b);
    }
    {
        std::set<std::string> avoid_a = b->free_vars();
        avoid_a.insert(b->bound_vars().begin(), b->bound_vars().end());
        a = refreshed(a, avoid_a);
    }
    auto f = std::make_shared<Formula>(Formula());
    f->kind_ = kind;
    f->free_ = a->free_vars();
    f->free_.insert(b->free_vars().begin(), b->free_vars().end());
    f->bound_ = a->bound_vars();
    f->bound_.insert(b->bound_vars().begin(), b->bound_vars().end());
    f->qfree_ = a->quantifier_free() && b->quantifier_free();
    f->has_inf_ = a->has_inf_many() || b->has_inf_many();
    f->a_ = std::move(a);
    f->b_ = std::move(b);
    return f;
}

FormulaPtr make_quantifier(FKind kind, const std::string& v, FormulaPtr body) {
    if (body->bound_vars().count(v))
        throw PreconditionError("quantifier over '" + v + "' shadows a bound variable");
    auto f = std::make_shared<Formula>(Formula());
    f->kind_ = kind;
    f->free_ = body->free_vars();
    f->free_.erase(v);
    f->bound_ = body->bound_vars();
    f->bound_.insert(v);
    f->qfree_ = false;
    f->has_inf_ = body->has_inf_many() || kind == FKind::InfMany;
    f->var_ = v;
    f->a_ = std::move(body);
    return f;
}

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return make_binary(FKind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return make_binary(FKind::Or, std::move(a), std::move(b)); }
FormulaPtr f_exists(const std::string& v, FormulaPtr body) {
    return make_quantifier(FKind::Exists, v, std::move(body));
}
FormulaPtr f_forall(const std::string& v, FormulaPtr body) {
    return make_quantifier(FKind::Forall, v, std::move(body));
}
FormulaPtr f_inf_many(const std::string& v, FormulaPtr body) {
    return make_quantifier(FKind::InfMany, v, std::move(body));
}

FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return f_true();
    FormulaPtr acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = f_and(acc, fs[i]);
    return acc;
}

FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return f_false();
    FormulaPtr acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = f_or(acc, fs[i]);
    return acc;
}

std::set<std::string> all_names(const FormulaPtr& f) {
    std::set<std::string> s = f->free_vars();
    s.insert(f->bound_vars().begin(), f->bound_vars().end());
    return s;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    if (!avoid.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!avoid.count(cand)) return cand;
    }
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const MultiPoly& value) {
    if (f->bound_vars().count(var))
        throw PreconditionError("cannot substitute for bound variable '" + var + "'");
    if (!f->free_vars().count(var)) return f;
    // Binders never collide with the replacement's variables: refresh first.
    std::set<std::string> value_vars;
    for (const auto& v : value.variables()) value_vars.insert(v);
    FormulaPtr g = refreshed(f, value_vars);
    switch (g->kind()) {
        case FKind::True:
        case FKind::False:
            return g;
        case FKind::Atom:
            return f_atom(g->poly().substitute(var, value), g->rel());
        case FKind::Not:
            return f_not(substitute(g->child(), var, value));
        case FKind::And:
        case FKind::Or:
            return make_binary(g->kind(), substitute(g->left(), var, value),
                               substitute(g->right(), var, value));
        case FKind::Exists:
        case FKind::Forall:
        case FKind::InfMany:
            return make_quantifier(g->kind(), g->var(), substitute(g->child(), var, value));
    }
    throw PreconditionError("unknown formula kind");
}

int formula_compare(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind() != b->kind())
        return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
    switch (a->kind()) {
        case FKind::True:
        case FKind::False:
            return 0;
        case FKind::Atom: {
            if (a->rel() != b->rel()) return a->rel() == Rel::Eq ? -1 : 1;
            return MultiPoly::compare(a->poly(), b->poly());
        }
        case FKind::Not:
            return formula_compare(a->child(), b->child());
        case FKind::And:
        case FKind::Or: {
            int c = formula_compare(a->left(), b->left());
            return c != 0 ? c : formula_compare(a->right(), b->right());
        }
        case FKind::Exists:
        case FKind::Forall:
        case FKind::InfMany: {
            if (a->var() != b->var()) return a->var() < b->var() ? -1 : 1;
            return formula_compare(a->child(), b->child());
        }
    }
    return 0;
}

bool structural_equal(const FormulaPtr& a, const FormulaPtr& b) {
    return formula_compare(a, b) == 0;
}

namespace {
bool alpha_equal_rec(const FormulaPtr& a, const FormulaPtr& b,
                     std::map<std::string, std::string>& b_to_a) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case FKind::True:
        case FKind::False:
            return true;
        case FKind::Atom: {
            if (a->rel() != b->rel()) return false;
            return MultiPoly::compare(a->poly(), rename_vars(b->poly(), b_to_a)) == 0;
        }
        case FKind::Not:
            return alpha_equal_rec(a->child(), b->child(), b_to_a);
        case FKind::And:
        case FKind::Or:
            return alpha_equal_rec(a->left(), b->left(), b_to_a) &&
                   alpha_equal_rec(a->right(), b->right(), b_to_a);
        case FKind::Exists:
        case FKind::Forall:
        case FKind::InfMany: {
            b_to_a[b->var()] = a->var();
            bool ok = alpha_equal_rec(a->child(), b->child(), b_to_a);
            b_to_a.erase(b->var());
            return ok;
        }
    }
    return false;
}
}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
    std::map<std::string, std::string> m;
    return alpha_equal_rec(a, b, m);
}

namespace {
struct PrenexPart {
    std::vector<std::pair<FKind, std::string>> prefix;
    FormulaPtr matrix;
};

PrenexPart prenex_rec(const FormulaPtr& f) {
    switch (f->kind()) {
        case FKind::True:
        case FKind::False:
        case FKind::Atom:
            return {{}, f};
        case FKind::Not: {
            PrenexPart p = prenex_rec(f->child());
            for (auto& [k, v] : p.prefix) k = (k == FKind::Exists) ? FKind::Forall : FKind::Exists;
            p.matrix = f_not(p.matrix);
            return p;
        }
        case FKind::And:
        case FKind::Or: {
            PrenexPart l = prenex_rec(f->left());
            PrenexPart r = prenex_rec(f->right());
            PrenexPart out;
            out.prefix = std::move(l.prefix);
            out.prefix.insert(out.prefix.end(), r.prefix.begin(), r.prefix.end());
            out.matrix = make_binary(f->kind(), l.matrix, r.matrix);
            return out;
        }
        case FKind::Exists:
        case FKind::Forall: {
            PrenexPart p = prenex_rec(f->child());
            p.prefix.insert(p.prefix.begin(), {f->kind(), f->var()});
            return p;
        }
        case FKind::InfMany:
            throw PreconditionError("prenex does not handle the infinitely-many quantifier");
    }
    throw PreconditionError("unknown formula kind");
}
}  // namespace

FormulaPtr prenex(const FormulaPtr& f) {
    PrenexPart p = prenex_rec(f);
    FormulaPtr out = p.matrix;
    for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it)
        out = make_quantifier(it->first, it->second, out);
    return out;
}

}  // namespace acfq

#include "acfq/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "acfq/errors.hpp"

namespace acfq::checks {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

FieldContext make_ctx(long characteristic) {
    FieldContext ctx;
    ctx.coeff = characteristic == 0 ? CoeffDomain::rationals()
                                    : CoeffDomain::prime_field(characteristic);
    return ctx;
}

}  // namespace

const std::vector<UnivariateEntry>& univariate_catalog() {
    static const std::vector<UnivariateEntry> entries = {
        // finite sets
        {"y = 0", false},
        {"y^2 = 1", false},
        {"y^2 = y", false},
        {"y^3 = 1", false},
        {"y^3 = y", false},
        {"y^4 = 1", false},
        {"y = 0 | y = 1", false},
        {"y^2 = 1 | y = 0", false},
        {"y = 1 & y^2 = 1", false},
        {"y^2 + y + 1 = 0", false},
        {"y^2 = 1 & y != 1", false},
        {"y^3 = 1 & y != 1", false},
        {"false", false},
        {"y = 0 & y = 1", false},
        {"y^5 = y", false},
        {"y^2 = 1 & y^3 = 1", false},
        {"y^2 = 2", false},
        {"y^4 = y^2 & y != 0", false},
        // cofinite / full sets
        {"true", false},
        {"y != 0", false},
        {"y != 0 & y != 1", false},
        {"y^2 != 1", false},
        {"y^3 != 1", false},
        {"y^2 != y", false},
        {"y != 0 | y = 0", false},
        {"y^2 = 1 | y != 2", false},
        {"!(y = 0)", false},
        {"!(y = 0 & y = 1)", false},
        {"y^2 != 2", false},
        {"!(y^2 = 1) | y = 1", false},
        {"y != 1 | y != 2", false},
        {"(y != 0 & y != 1) | y^2 = y", false},
        {"y^4 != 1 | y^2 = 1", false},
        // quantified definitions
        {"E z. z^2 = y", false},
        {"E z. (z^2 = y & z != 0)", false},
        {"E z. (y = z^2 & y = 0)", false},
        {"A z. (z = y | z != y)", false},
        {"E z. y*z = 1", false},
        {"E z. (z^3 = y & z = 2)", false},
        // parametric families
        {"a*y = 0", true},
        {"a*y = 1", true},
        {"y^2 = a", true},
        {"a*y^2 + b*y = 0", true},
        {"a*y = b", true},
        {"y^2 + a*y + b = 0", true},
        {"a*y != 1", true},
        {"y != a", true},
        {"y = a | y = b", true},
        {"a*y^2 = 1", true},
        {"(y - a)*(y - b) = 0", true},
        {"a*y^2 + 1 = 0 | b*y = 1", true},
        {"y^3 = a", true},
        {"a*y^3 + b = 0", true},
        {"y^2 != a", true},
        {"a*(y^2 - 1) = 0", true},
        {"(a*y + b)*(y - 1) = 0", true},
        {"y^2 = a & y != b", true},
        {"a*y + b != 0", true},
    };
    return entries;
}

const std::vector<DimensionEntry>& dimension_catalog() {
    static const std::vector<DimensionEntry> entries = {
        {"true", {"x"}},
        {"x = 0", {"x"}},
        {"x != 0", {"x"}},
        {"x^2 = 1", {"x"}},
        {"x^3 != 1", {"x"}},
        {"x^2 = 1 | x = 0", {"x"}},
        {"x^2 != x", {"x"}},
        {"x*y = 1", {"x", "y"}},
        {"y^2 = x", {"x", "y"}},
        {"x = 0 & y = 0", {"x", "y"}},
    };
    return entries;
}

const std::vector<BoundingEntry>& bounding_catalog() {
    static const std::vector<BoundingEntry> entries = {
        {"a*y = 1", {"a"}},
        {"y^2 = a", {"a"}},
        {"y != a", {"a"}},
        {"a*y = b", {"a", "b"}},
        {"y^2 + a*y + b = 0", {"a", "b"}},
        {"y = a | y = b", {"a", "b"}},
        {"a*y^2 + b*y + 1 = 0", {"a", "b"}},
        {"y^3 = a", {"a"}},
        {"y^2 = a & y != b", {"a", "b"}},
        {"(y - a)*(y - b) = 0", {"a", "b"}},
    };
    return entries;
}

// ---------------------------------------------------------------------------
// Random formulas.

namespace {

struct GenVars {
    std::vector<std::string> free_vars;
    std::vector<std::string> bound_vars;
    std::vector<std::string> all;
    int max_bound_degree = 1;
};

MultiPoly random_poly(std::mt19937_64& rng, const CoeffDomain& dom, const GenVars& gv) {
    long p = dom.characteristic();
    MultiPoly poly(dom);
    int monomials = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < monomials; ++t) {
        MultiPoly mono = MultiPoly::constant(dom, 1);
        bool has_var = false;
        for (const auto& v : gv.all) {
            if (rng() % 100 >= 45) continue;
            bool bound =
                std::find(gv.bound_vars.begin(), gv.bound_vars.end(), v) != gv.bound_vars.end();
            int maxd = bound ? gv.max_bound_degree : 3;
            int e = 1;
            if (maxd >= 2 && rng() % 100 < 25) e = 2;
            if (maxd >= 3 && rng() % 100 < 10) e = 3;
            mono = mono * MultiPoly::variable(dom, v).pow(e);
            has_var = true;
        }
        if (!has_var) mono = mono * MultiPoly::variable(dom, gv.all[rng() % gv.all.size()]);
        long c = 1 + static_cast<long>(rng() % static_cast<unsigned long long>(p - 1 > 0 ? p - 1 : 1));
        poly = poly + mono.scaled(Coeff::from_integer(dom, c));
    }
    if (rng() % 2) poly = poly + MultiPoly::constant(dom, static_cast<long>(rng() % p));
    return poly;
}

FormulaPtr random_qfree(std::mt19937_64& rng, const CoeffDomain& dom, const GenVars& gv,
                        int atom_budget, int depth) {
    if (atom_budget <= 1 || depth >= 3 || rng() % 100 < 40) {
        MultiPoly p = random_poly(rng, dom, gv);
        Rel rel = (rng() % 100 < 60) ? Rel::Eq : Rel::Neq;
        return f_atom(p, rel);
    }
    unsigned long long op = rng() % 10;
    if (op < 2) return f_not(random_qfree(rng, dom, gv, atom_budget, depth + 1));
    int left = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(atom_budget - 1));
    FormulaPtr a = random_qfree(rng, dom, gv, left, depth + 1);
    FormulaPtr b = random_qfree(rng, dom, gv, atom_budget - left, depth + 1);
    return op < 6 ? f_and(a, b) : f_or(a, b);
}

}  // namespace

FormulaPtr random_formula(std::mt19937_64& rng, long p, const OracleLimits& limits) {
    CoeffDomain dom = CoeffDomain::prime_field(p);
    static const std::vector<std::string> free_pool = {"x", "y", "z"};
    static const std::vector<std::string> bound_pool = {"u", "w"};
    for (int attempt = 0; attempt < 300; ++attempt) {
        unsigned long long roll = rng() % 100;
        int r = roll < 15 ? 0 : roll < 60 ? 1 : roll < 90 ? 2 : 3;
        int max_q = std::min(2, 3 - r);
        int q = 0;
        if (max_q >= 1) {
            unsigned long long qr = rng() % 100;
            q = qr < 30 ? 0 : qr < 80 ? 1 : max_q;
        }
        if (r + q == 0) continue;

        GenVars gv;
        gv.free_vars.assign(free_pool.begin(), free_pool.begin() + r);
        gv.bound_vars.assign(bound_pool.begin(), bound_pool.begin() + q);
        gv.all = gv.free_vars;
        gv.all.insert(gv.all.end(), gv.bound_vars.begin(), gv.bound_vars.end());
        // Two quantified variables stay linear; a single one may be quadratic.
        gv.max_bound_degree = (q >= 2) ? 1 : (rng() % 100 < 25 ? 2 : 1);

        int atoms = 1 + static_cast<int>(rng() % 6);
        FormulaPtr f = random_qfree(rng, dom, gv, atoms, 0);
        for (int i = q - 1; i >= 0; --i) {
            FKind kind = (rng() % 2) ? FKind::Exists : FKind::Forall;
            f = make_quantifier(kind, gv.bound_vars[i], f);
            if (i > 0 && rng() % 100 < 30) {
                GenVars outer = gv;
                outer.bound_vars.assign(gv.bound_vars.begin(), gv.bound_vars.begin() + i);
                outer.all = outer.free_vars;
                outer.all.insert(outer.all.end(), outer.bound_vars.begin(), outer.bound_vars.end());
                FormulaPtr extra = random_qfree(rng, dom, outer, 1, 2);
                f = (rng() % 2) ? f_and(f, extra) : f_or(f, extra);
            }
        }

        unsigned long long assignments = 1;
        for (int i = 0; i < r; ++i) assignments *= static_cast<unsigned long long>(p) * p;
        unsigned long long cost = eval_cost_estimate(f, p, 2, limits);
        if (cost >= kEvalCostRejected) continue;
        if (assignments * cost > 2'000'000ULL) continue;
        return f;
    }
    // Deterministic fallback; reached only if sampling keeps drawing
    // expensive shapes.
    return f_exists("u", f_atom(MultiPoly::variable(dom, "u"), Rel::Eq));
}

// ---------------------------------------------------------------------------
// Criterion 1: the secant-slope dichotomy, exhaustively.

CheckResult check_slope_dichotomy_sweep(const std::vector<int>& qs) {
    auto t0 = Clock::now();
    CheckResult res;
    res.name = "slope dichotomy sweep";
    res.pass = true;
    std::ostringstream os;
    for (int q : qs) {
        TrickSweepReport rep = exhaustive_trick_sweep(q);
        res.pass = res.pass && rep.all_ok;
        os << "q=" << q << ": " << rep.subsets << " subsets (" << rep.cover_cases << " cover, "
           << rep.injection_cases << " injection); ";
    }
    res.details = os.str();
    res.ms = ms_since(t0);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 2: infinitely-many rewrite vs the structural finiteness oracle.

namespace {

FormulaPtr instantiate(const FormulaPtr& f, const CoeffDomain& dom, long a, long b) {
    FormulaPtr g = f;
    if (g->free_vars().count("a")) g = substitute(g, "a", MultiPoly::constant(dom, a));
    if (g->free_vars().count("b")) g = substitute(g, "b", MultiPoly::constant(dom, b));
    return g;
}

}  // namespace

CheckResult check_inf_many_pipeline() {
    auto t0 = Clock::now();
    CheckResult res;
    res.name = "infinitely-many elimination vs structural oracle";
    long long cases = 0, failures = 0;
    std::ostringstream bad;
    for (long characteristic : {0L, 5L}) {
        FieldContext ctx = make_ctx(characteristic);
        std::vector<long> values = characteristic == 0 ? std::vector<long>{-2, -1, 0, 1, 2}
                                                       : std::vector<long>{0, 1, 2, 3, 4};
        for (const auto& entry : univariate_catalog()) {
            FormulaPtr f = parse_formula(entry.text, ctx.coeff);
            InfiniteResult family = is_infinite(f, {"y"}, ctx);
            std::vector<std::pair<long, long>> insts;
            if (!entry.parametric) {
                insts.emplace_back(0, 0);
            } else {
                bool uses_b = f->free_vars().count("b") > 0;
                for (long a : values) {
                    if (uses_b)
                        for (long b : values) insts.emplace_back(a, b);
                    else
                        insts.emplace_back(a, 0);
                }
            }
            for (auto [a, b] : insts) {
                FormulaPtr inst = entry.parametric ? instantiate(f, ctx.coeff, a, b) : f;
                FormulaPtr inst_qf = inst->quantifier_free() ? inst : simplify(qe(inst, ctx), ctx);
                bool oracle_infinite =
                    qf_univariate_finiteness(inst_qf, "y", ctx) == Finiteness::Infinite;
                bool pipeline_infinite;
                if (entry.parametric) {
                    FormulaPtr crit = instantiate(family.criterion, ctx.coeff, a, b);
                    pipeline_infinite = decide(crit, ctx);
                    InfiniteResult direct = is_infinite(inst, {"y"}, ctx);
                    if (direct.value != pipeline_infinite) {
                        ++failures;
                        bad << "[param/direct mismatch " << entry.text << " a=" << a << " b=" << b
                            << "] ";
                        continue;
                    }
                } else {
                    pipeline_infinite = family.value;
                }
                ++cases;
                if (pipeline_infinite != oracle_infinite) {
                    ++failures;
                    bad << "[" << entry.text << " char=" << characteristic << " a=" << a
                        << " b=" << b << " pipeline=" << pipeline_infinite << "] ";
                }
            }
        }
    }
    res.pass = failures == 0 && cases >= 50;
    std::ostringstream os;
    os << cases << " instances across " << univariate_catalog().size() << " catalog sets, "
       << failures << " disagreements";
    if (failures) os << ": " << bad.str();
    res.details = os.str();
    res.ms = ms_since(t0);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 3: randomized QE soundness against the brute-force oracle.

CheckResult check_qe_soundness(const std::vector<long>& primes, int count,
                               unsigned long long seed) {
    auto t0 = Clock::now();
    CheckResult res;
    res.name = "randomized QE soundness";
    OracleLimits limits;
    long long formulas = 0, assignments_checked = 0, failures = 0;
    std::ostringstream bad;
    for (long p : primes) {
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned long long>(p));
        FieldContext ctx = make_ctx(p);
        FieldTower tower(limits.field_size_cap);
        auto field = tower.field(p, 2);
        std::vector<FqElement> elems = field->enumerate();
        for (int i = 0; i < count; ++i) {
            FormulaPtr f = random_formula(rng, p, limits);
            FormulaPtr g = qe(f, ctx);
            FormulaPtr g2 = qe(g, ctx);
            ++formulas;
            std::vector<std::string> frees(f->free_vars().begin(), f->free_vars().end());
            unsigned long long combos = 1;
            for (std::size_t j = 0; j < frees.size(); ++j) combos *= elems.size();
            bool mismatch = false;
            for (unsigned long long flat = 0; flat < combos && !mismatch; ++flat) {
                std::map<std::string, FqElement> sigma;
                unsigned long long rest = flat;
                for (const auto& v : frees) {
                    sigma[v] = elems[rest % elems.size()];
                    rest /= elems.size();
                }
                bool ev_f = eval_fpbar(f, p, sigma, tower, limits);
                bool ev_g = eval_fpbar(g, p, sigma, tower, limits);
                bool ev_g2 = eval_fpbar(g2, p, sigma, tower, limits);
                ++assignments_checked;
                if (ev_f != ev_g || ev_g != ev_g2) {
                    mismatch = true;
                    ++failures;
                    bad << "[p=" << p << " f='" << print_formula(f) << "' qe='" << print_formula(g)
                        << "' at";
                    for (const auto& [k, v] : sigma) bad << " " << k << "=" << v.to_string();
                    bad << " f->" << ev_f << " qe->" << ev_g << "] ";
                }
            }
        }
    }
    res.pass = failures == 0;
    std::ostringstream os;
    os << formulas << " formulas, " << assignments_checked << " assignments, " << failures
       << " disagreements";
    if (failures) os << ": " << bad.str();
    res.details = os.str();
    res.ms = ms_since(t0);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 4: the dimension facts.

namespace {

std::pair<FormulaPtr, std::vector<std::string>> product_set(const FormulaPtr& f,
                                                            const std::vector<std::string>& fvars,
                                                            const FormulaPtr& g,
                                                            const std::vector<std::string>& gvars,
                                                            const CoeffDomain& dom) {
    static const std::vector<std::string> fresh = {"p1", "p2", "p3", "p4"};
    FormulaPtr g2 = g;
    std::vector<std::string> new_vars;
    for (std::size_t i = 0; i < gvars.size(); ++i) {
        g2 = substitute(g2, gvars[i], MultiPoly::variable(dom, fresh[i]));
        new_vars.push_back(fresh[i]);
    }
    std::vector<std::string> vars = fvars;
    vars.insert(vars.end(), new_vars.begin(), new_vars.end());
    return {f_and(f, g2), vars};
}

int round_exponent(double value) { return static_cast<int>(std::lround(value)); }

}  // namespace

CheckResult check_dimension_facts() {
    auto t0 = Clock::now();
    CheckResult res;
    res.name = "dimension facts";
    const long p = 5;
    FieldContext ctx = make_ctx(p);
    OracleLimits limits;
    std::ostringstream bad;
    long long failures = 0;

    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> vars;
        for (int i = 0; i < n; ++i) vars.push_back(std::string(1, static_cast<char>('x' + i)));
        DimResult d = dimension(parse_formula("true", ctx.coeff), vars, ctx);
        if (d.dim != n) {
            ++failures;
            bad << "[dim(K^" << n << ")=" << d.dim << "] ";
        }
    }

    std::vector<int> dims;
    std::vector<FormulaPtr> formulas;
    for (const auto& entry : dimension_catalog()) {
        FormulaPtr f = parse_formula(entry.text, ctx.coeff);
        formulas.push_back(f);
        DimResult d = dimension(f, entry.vars, ctx);
        dims.push_back(d.dim);
        if (d.dim < 0) {
            ++failures;
            bad << "[catalog entry '" << entry.text << "' empty] ";
            continue;
        }
        InfiniteResult inf = is_infinite(f, entry.vars, ctx);
        if ((d.dim > 0) != inf.value) {
            ++failures;
            bad << "[dim/infinite mismatch '" << entry.text << "'] ";
        }
        int n = static_cast<int>(entry.vars.size());
        int m_max = 3;
        while (m_max > 1 && std::pow(static_cast<double>(p), m_max * n) >
                                static_cast<double>(limits.field_size_cap))
            --m_max;
        std::vector<long long> counts = point_count_growth(f, entry.vars, p, m_max, limits);
        long long last = counts.back();
        if (last <= 0) {
            ++failures;
            bad << "[no points '" << entry.text << "'] ";
            continue;
        }
        int est = round_exponent(std::log(static_cast<double>(last)) / (m_max * std::log(p)));
        if (est != d.dim) {
            ++failures;
            bad << "[growth exponent '" << entry.text << "' est=" << est << " dim=" << d.dim << "] ";
        }
        if (counts.size() >= 2) {
            bool grew = counts[counts.size() - 1] > counts[counts.size() - 2];
            if (d.dim == 0 && grew) {
                ++failures;
                bad << "[finite set with growing counts '" << entry.text << "'] ";
            }
            if (d.dim > 0 && !grew) {
                ++failures;
                bad << "[infinite set without growth '" << entry.text << "'] ";
            }
        }
    }

    const auto& cat = dimension_catalog();
    long long pairs = 0;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        for (std::size_t j = 0; j < cat.size(); ++j) {
            auto [pf, pvars] =
                product_set(formulas[i], cat[i].vars, formulas[j], cat[j].vars, ctx.coeff);
            DimResult d = dimension(pf, pvars, ctx);
            ++pairs;
            if (d.dim != dims[i] + dims[j]) {
                ++failures;
                bad << "[product '" << cat[i].text << "' x '" << cat[j].text << "': dim=" << d.dim
                    << " expected " << dims[i] + dims[j] << "] ";
            }
        }
    }

    res.pass = failures == 0;
    std::ostringstream os;
    os << cat.size() << " catalog sets, " << pairs << " ordered products, " << failures
       << " failures";
    if (failures) os << ": " << bad.str();
    res.details = os.str();
    res.ms = ms_since(t0);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 5: the bounding-polynomial contract.

namespace {

struct SpecializedDisjunct {
    std::vector<std::vector<FqElement>> eqs;
    std::vector<std::vector<FqElement>> neqs;
};

int spec_degree(const std::vector<FqElement>& coeffs) {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (!coeffs[i].is_zero()) return i;
    return -1;  // identically zero
}

FqElement eval_coeffs(const std::vector<FqElement>& coeffs, const FqElement& x, FieldTower& tower,
                      const std::shared_ptr<const FqField>& field) {
    FqElement acc = field->zero();
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        acc = acc * x + tower.embed(coeffs[i], field);
    return acc;
}

}  // namespace

CheckResult check_bounding_contract() {
    auto t0 = Clock::now();
    CheckResult res;
    res.name = "bounding polynomials contract";
    long long tuples = 0, finite_fibers = 0, failures = 0;
    std::ostringstream bad;

    struct FieldCase {
        long p;
        int k;
    };
    for (FieldCase fc : {FieldCase{5, 1}, FieldCase{7, 1}, FieldCase{3, 2}}) {
        FieldContext ctx = make_ctx(fc.p);
        FieldTower tower;
        auto base_field = tower.field(fc.p, fc.k);
        std::vector<FqElement> base_elems = base_field->enumerate();

        for (const auto& entry : bounding_catalog()) {
            FormulaPtr f = parse_formula(entry.text, ctx.coeff);
            BoundingSet bs = bounding_polys(f, entry.params, "y", ctx);
            FormulaPtr qf = simplify(qe(f, ctx), ctx);
            DnfMatrix dnf = to_dnf(qf, ctx.dnf_budget);

            unsigned long long combos = 1;
            for (std::size_t i = 0; i < entry.params.size(); ++i) combos *= base_elems.size();
            for (unsigned long long flat = 0; flat < combos; ++flat) {
                ++tuples;
                std::map<std::string, FqElement> assignment;
                unsigned long long rest = flat;
                for (const auto& param : entry.params) {
                    assignment[param] = base_elems[rest % base_elems.size()];
                    rest /= base_elems.size();
                }

                std::vector<SpecializedDisjunct> spec;
                for (const auto& d : dnf.disjuncts) {
                    SpecializedDisjunct s;
                    for (const auto& e : d.equations)
                        s.eqs.push_back(specialize_univariate(e, assignment, "y", *base_field));
                    for (const auto& e : d.inequations)
                        s.neqs.push_back(specialize_univariate(e, assignment, "y", *base_field));
                    spec.push_back(std::move(s));
                }

                // Finiteness read off the specialized disjuncts: a disjunct
                // is infinite when no equation survives specialization and
                // no atom degenerates it to empty.
                bool fiber_infinite = false;
                int max_eq_degree = 0;
                for (const auto& s : spec) {
                    bool empty = false, pinned = false;
                    for (const auto& e : s.eqs) {
                        int deg = spec_degree(e);
                        if (deg == 0) empty = true;
                        if (deg >= 1) pinned = true;
                        max_eq_degree = std::max(max_eq_degree, deg);
                    }
                    for (const auto& e : s.neqs)
                        if (spec_degree(e) == -1) empty = true;
                    if (!empty && !pinned) fiber_infinite = true;
                }
                if (fiber_infinite) continue;
                ++finite_fibers;

                // Fiber points live in extensions of degree at most the
                // maximal specialized equation degree; count each point once
                // via its exact degree over the base field.
                std::vector<std::pair<int, FqElement>> fiber;
                for (int e = 1; e <= std::max(1, max_eq_degree); ++e) {
                    auto ext = tower.field(fc.p, fc.k * e);
                    for (unsigned long long idx = 0; idx < ext->size(); ++idx) {
                        FqElement cand = ext->element(idx);
                        bool lower = false;
                        for (int d = 1; d < e && !lower; ++d) {
                            if (e % d != 0) continue;
                            unsigned long long qd = 1;
                            for (int t = 0; t < fc.k * d; ++t)
                                qd *= static_cast<unsigned long long>(fc.p);
                            if (cand.pow(qd) == cand) lower = true;
                        }
                        if (lower) continue;
                        bool sat = false;
                        for (const auto& s : spec) {
                            bool ok = true;
                            for (const auto& eq : s.eqs)
                                if (!eval_coeffs(eq, cand, tower, ext).is_zero()) ok = false;
                            for (const auto& ne : s.neqs)
                                if (eval_coeffs(ne, cand, tower, ext).is_zero()) ok = false;
                            if (ok) sat = true;
                        }
                        if (sat) fiber.emplace_back(e, cand);
                    }
                }

                if (fiber.empty()) continue;

                if (static_cast<int>(fiber.size()) > bs.uniform_bound) {
                    ++failures;
                    bad << "[" << entry.text << " q=" << base_field->size() << " fiber size "
                        << fiber.size() << " > bound " << bs.uniform_bound << "] ";
                    continue;
                }
                bool covered = false;
                for (const auto& w : bs.witnesses) {
                    std::vector<FqElement> wspec =
                        specialize_univariate(w, assignment, "y", *base_field);
                    if (spec_degree(wspec) == -1) continue;  // vanished identically
                    bool all_roots = true;
                    for (const auto& [deg, pt] : fiber) {
                        auto ext = tower.field(fc.p, fc.k * deg);
                        if (!eval_coeffs(wspec, pt, tower, ext).is_zero()) all_roots = false;
                    }
                    if (all_roots) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) {
                    ++failures;
                    bad << "[" << entry.text << " q=" << base_field->size()
                        << " fiber not covered by any witness] ";
                }
            }
        }
    }

    res.pass = failures == 0;
    std::ostringstream os;
    os << tuples << " parameter tuples (" << finite_fibers << " finite fibers), " << failures
       << " violations";
    if (failures) os << ": " << bad.str();
    res.details = os.str();
    res.ms = ms_since(t0);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 6: the slope-cover sentence for infinite sets.

CheckResult check_slope_cover() {
    auto t0 = Clock::now();
    CheckResult res;
    res.name = "slope cover for infinite sets";
    long long cases = 0, failures = 0;
    std::ostringstream bad;
    for (long characteristic : {0L, 5L}) {
        FieldContext ctx = make_ctx(characteristic);
        for (const auto& entry : univariate_catalog()) {
            if (entry.parametric) continue;
            FormulaPtr f = parse_formula(entry.text, ctx.coeff);
            InfiniteResult inf = is_infinite(f, {"y"}, ctx);
            if (!inf.value) continue;
            ++cases;
            if (!slope_cover_check(f, "y", ctx)) {
                ++failures;
                bad << "[" << entry.text << " char=" << characteristic << "] ";
            }
        }
    }
    res.pass = failures == 0 && cases > 0;
    std::ostringstream os;
    os << cases << " infinite sets checked, " << failures << " failures";
    if (failures) os << ": " << bad.str();
    res.details = os.str();
    res.ms = ms_since(t0);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 7: injectivity of x^p + t*y^p over F_p(t).

CheckResult check_frobenius_demo() {
    auto t0 = Clock::now();
    CheckResult res;
    res.name = "imperfect-field injection demo";
    std::ostringstream os;
    res.pass = true;
    for (auto [p, d] : std::vector<std::pair<long, int>>{{2, 2}, {3, 1}}) {
        FrobeniusReport rep = frobenius_injection_demo(p, d);
        res.pass = res.pass && rep.collisions == 0;
        os << "p=" << p << " d=" << d << ": " << rep.functions << " functions, "
           << rep.pairs_checked << " pairs, " << rep.collisions << " collisions; ";
    }
    res.details = os.str();
    res.ms = ms_since(t0);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 8: parser round trip over every formula the suites touch.

CheckResult check_parser_roundtrip(unsigned long long seed) {
    auto t0 = Clock::now();
    CheckResult res;
    res.name = "parser round trip";
    long long cases = 0, failures = 0;
    std::ostringstream bad;
    OracleLimits limits;

    auto check = [&](const FormulaPtr& f, const CoeffDomain& dom) {
        ++cases;
        FormulaPtr back = parse_formula(print_formula(f), dom);
        if (!alpha_equal(f, back)) {
            ++failures;
            if (failures <= 5) bad << "['" << print_formula(f) << "'] ";
        }
    };

    for (long characteristic : {0L, 5L}) {
        FieldContext ctx = make_ctx(characteristic);
        for (const auto& entry : univariate_catalog()) {
            FormulaPtr f = parse_formula(entry.text, ctx.coeff);
            check(f, ctx.coeff);
            check(simplify(f->quantifier_free() ? f : qe(f, ctx), ctx), ctx.coeff);
            check(rewrite_inf_many(f_inf_many("y", f), ctx), ctx.coeff);
        }
        for (const auto& entry : dimension_catalog())
            check(parse_formula(entry.text, ctx.coeff), ctx.coeff);
        for (const auto& entry : bounding_catalog())
            check(parse_formula(entry.text, ctx.coeff), ctx.coeff);
    }
    for (long p : {2L, 3L, 5L, 7L}) {
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned long long>(p));
        FieldContext ctx = make_ctx(p);
        for (int i = 0; i < 100; ++i) {
            FormulaPtr f = random_formula(rng, p, limits);
            check(f, ctx.coeff);
            check(qe(f, ctx), ctx.coeff);
        }
    }

    res.pass = failures == 0;
    std::ostringstream os;
    os << cases << " formulas, " << failures << " round-trip failures";
    if (failures) os << ": " << bad.str();
    res.details = os.str();
    res.ms = ms_since(t0);
    return res;
}

std::vector<CheckResult> run_all(unsigned long long seed, int qe_count) {
    std::vector<CheckResult> out;
    out.push_back(check_slope_dichotomy_sweep());
    out.push_back(check_inf_many_pipeline());
    out.push_back(check_qe_soundness({2, 3, 5, 7}, qe_count, seed));
    out.push_back(check_dimension_facts());
    out.push_back(check_bounding_contract());
    out.push_back(check_slope_cover());
    out.push_back(check_frobenius_demo());
    out.push_back(check_parser_roundtrip(seed));
    return out;
}

}  // namespace acfq::checks

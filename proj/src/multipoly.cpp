#include "acfq/multipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace acfq {

Monomial::Monomial(std::vector<std::pair<std::string, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    std::vector<std::pair<std::string, int>> merged;
    for (auto& [v, e] : factors_) {
        if (e == 0) continue;
        if (e < 0) throw PreconditionError("negative exponent in monomial");
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    factors_ = std::move(merged);
}

Monomial Monomial::variable(const std::string& name, int exp) {
    return Monomial({{name, exp}});
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::degree_of(const std::string& var) const {
    for (auto& [v, e] : factors_)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::pair<std::string, int>> fs = factors_;
    fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
    return Monomial(std::move(fs));
}

Monomial Monomial::without(const std::string& var) const {
    std::vector<std::pair<std::string, int>> fs;
    for (auto& f : factors_)
        if (f.first != var) fs.push_back(f);
    Monomial m;
    m.factors_ = std::move(fs);
    return m;
}

int Monomial::grlex_compare(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Same total degree: lexicographic, earlier variable names first.
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        const auto& [va, ea] = a.factors_[i];
        const auto& [vb, eb] = b.factors_[j];
        if (va < vb) return 1;   // a has positive degree in an earlier var
        if (va > vb) return -1;
        if (ea != eb) return ea < eb ? -1 : 1;
        ++i, ++j;
    }
    if (i < a.factors_.size()) return 1;
    if (j < b.factors_.size()) return -1;
    return 0;
}

MultiPoly MultiPoly::constant(const CoeffDomain& dom, long v) {
    return constant(dom, Coeff::from_integer(dom, v));
}

MultiPoly MultiPoly::constant(const CoeffDomain& dom, const Coeff& c) {
    MultiPoly p(dom);
    p.add_term(Monomial(), c);
    return p;
}

MultiPoly MultiPoly::variable(const CoeffDomain& dom, const std::string& name) {
    MultiPoly p(dom);
    p.add_term(Monomial::variable(name), Coeff::one(dom));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Coeff MultiPoly::constant_value() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Coeff::zero(dom_) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Coeff& c) {
    if (c.domain() != dom_) throw DomainMismatchError("term coefficient domain mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_domain(const MultiPoly& o) const {
    if (dom_ != o.dom_)
        throw DomainMismatchError("polynomial domains differ: " + dom_.to_string() + " vs " +
                                  o.dom_.to_string());
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_domain(o);
    MultiPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_domain(o);
    MultiPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_domain(o);
    MultiPoly r(dom_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(dom_);
    for (auto& [m, c] : terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const Coeff& c) const {
    MultiPoly r(dom_);
    for (auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw PreconditionError("negative polynomial power");
    MultiPoly r = constant(dom_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();  // map is grlex-descending
}

int MultiPoly::degree_in(const std::string& var) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_of(var));
    return d;
}

MultiPoly MultiPoly::coeff_of(const std::string& var, int k) const {
    MultiPoly r(dom_);
    for (auto& [m, c] : terms_)
        if (m.degree_of(var) == k) r.add_term(m.without(var), c);
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& var) const {
    int d = degree_in(var);
    std::vector<MultiPoly> cs;
    cs.reserve(d + 1);
    for (int k = 0; k <= d; ++k) cs.push_back(coeff_of(var, k));
    return cs;
}

MultiPoly MultiPoly::leading_coeff_in(const std::string& var) const {
    return coeff_of(var, degree_in(var));
}

std::vector<std::string> MultiPoly::variables() const {
    std::set<std::string> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    check_domain(value);
    if (!mentions(var)) return *this;
    // Horner over powers of var.
    std::vector<MultiPoly> cs = coeffs_in(var);
    MultiPoly r = cs.back();
    for (int i = static_cast<int>(cs.size()) - 2; i >= 0; --i) r = r * value + cs[i];
    return r;
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    if (!dom_.is_rational()) {
        Coeff lead = terms_.begin()->second;
        return lead.is_one() ? *this : scaled(lead.inverse());
    }
    // Characteristic 0: clear denominators, divide by content, make the
    // grlex-leading coefficient positive.
    mpz_class den_lcm = 1, num_gcd = 0;
    for (auto& [m, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational().get_den().get_mpz_t());
    for (auto& [m, c] : terms_) {
        mpz_class num = c.rational().get_num() * (den_lcm / c.rational().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (terms_.begin()->second.rational() < 0) factor = -factor;
    return scaled(Coeff::from_rational(factor));
}

Monomial MultiPoly::content_monomial() const {
    if (terms_.empty()) return Monomial();
    std::map<std::string, int> common;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (first) {
            for (auto& [v, e] : m.factors()) common[v] = e;
            first = false;
            continue;
        }
        for (auto it = common.begin(); it != common.end();) {
            int e = m.degree_of(it->first);
            if (e == 0) {
                it = common.erase(it);
            } else {
                it->second = std::min(it->second, e);
                ++it;
            }
        }
        if (common.empty()) break;
    }
    std::vector<std::pair<std::string, int>> fs(common.begin(), common.end());
    return Monomial(std::move(fs));
}

MultiPoly MultiPoly::without_monomial(const Monomial& m) const {
    if (m.is_constant()) return *this;
    MultiPoly out(dom_);
    for (auto& [mono, c] : terms_) {
        std::vector<std::pair<std::string, int>> fs;
        for (auto& [v, e] : mono.factors()) {
            int drop = m.degree_of(v);
            if (e < drop) throw PreconditionError("monomial does not divide every term");
            if (e > drop) fs.emplace_back(v, e - drop);
        }
        out.add_term(Monomial(std::move(fs)), c);
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return dom_ == o.dom_ && compare(*this, o) == 0;
}

int MultiPoly::compare(const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        int mc = Monomial::grlex_compare(ia->first, ib->first);
        if (mc != 0) return mc;
        int cc = ia->second.compare(ib->second);
        if (cc != 0) return cc;
        ++ia, ++ib;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        bool negative = false;
        std::string mag;
        if (dom_.is_rational()) {
            mpq_class q = c.rational();
            if (q < 0) {
                negative = true;
                q = -q;
            }
            mag = q.get_str();
        } else {
            mag = std::to_string(c.residue());
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool unit = (mag == "1");
        if (m.is_constant()) {
            os << mag;
        } else {
            bool printed = false;
            if (!unit) {
                os << mag;
                printed = true;
            }
            for (auto& [v, e] : m.factors()) {
                if (printed) os << "*";
                os << v;
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
    }
    return os.str();
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    throw PreconditionError("unknown polynomial operation");
}

PseudoDivision pseudo_divide(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    if (g.is_zero()) throw DivisionByZeroError("pseudo-division by the zero polynomial");
    const CoeffDomain& dom = f.domain();
    if (dom != g.domain()) throw DomainMismatchError("pseudo-division across domains");
    int dg = g.degree_in(var);
    MultiPoly lc = g.leading_coeff_in(var);
    MultiPoly q = MultiPoly::zero(dom);
    MultiPoly r = f;
    int e = 0;
    while (!r.is_zero() && r.degree_in(var) >= dg && dg > 0) {
        int dr = r.degree_in(var);
        MultiPoly t = r.leading_coeff_in(var) * MultiPoly::variable(dom, var).pow(dr - dg);
        q = q * lc + t;
        r = r * lc - t * g;
        ++e;
    }
    if (dg == 0) {
        // Divisor free of var: g^1 * f = f*g + 0.
        return {f, MultiPoly::zero(dom), 1};
    }
    return {q, r, e};
}

}  // namespace acfq

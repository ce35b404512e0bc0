#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acfq/coeff.hpp"

namespace acfq {

/// Power product over named variables.  Factors are sorted by variable name
/// and carry strictly positive exponents; the empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<std::string, int>> factors);
    static Monomial variable(const std::string& name, int exp = 1);

    int total_degree() const;
    int degree_of(const std::string& var) const;
    bool is_constant() const { return factors_.empty(); }
    const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const;
    // Divide out var^exp; exp must not exceed the stored exponent.
    Monomial without(const std::string& var) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

    // Graded-lexicographic comparison; alphabetically earlier variables are
    // more significant.
    static int grlex_compare(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<std::string, int>> factors_;
};

struct MonomialGrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::grlex_compare(a, b) > 0;
    }
};

/// Sparse multivariate polynomial with exact coefficients over a fixed
/// domain.  No stored coefficient is zero; the term map is ordered by
/// descending graded-lex, which is also the canonical print order.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Coeff, MonomialGrlexGreater>;

    explicit MultiPoly(const CoeffDomain& dom) : dom_(dom) {}
    static MultiPoly zero(const CoeffDomain& dom) { return MultiPoly(dom); }
    static MultiPoly constant(const CoeffDomain& dom, long v);
    static MultiPoly constant(const CoeffDomain& dom, const Coeff& c);
    static MultiPoly variable(const CoeffDomain& dom, const std::string& name);

    const CoeffDomain& domain() const { return dom_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero coeff if absent); for is_constant() polys this is
    // the value.
    Coeff constant_value() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Coeff& c) const;
    MultiPoly pow(int e) const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(const std::string& var) const;
    /// Coefficient of var^k, a polynomial not mentioning var.
    MultiPoly coeff_of(const std::string& var, int k) const;
    /// All coefficients c_0..c_d with *this = sum c_i var^i; {0} for the zero
    /// polynomial, {*this} when var is absent.
    std::vector<MultiPoly> coeffs_in(const std::string& var) const;
    MultiPoly leading_coeff_in(const std::string& var) const;

    /// Ordered list of variables occurring with positive exponent.
    std::vector<std::string> variables() const;
    bool mentions(const std::string& var) const { return degree_in(var) > 0; }

    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;

    /// Canonical scalar multiple: monic in characteristic p; primitive
    /// integer coefficients with positive leading coefficient in
    /// characteristic 0.  Zero stays zero.  Same zero set for both atoms.
    MultiPoly normalized() const;

    /// Largest monomial dividing every term (trivial for constants/zero).
    Monomial content_monomial() const;
    /// Quotient by a monomial that divides every term.
    MultiPoly without_monomial(const Monomial& m) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    static int compare(const MultiPoly& a, const MultiPoly& b);

    std::string to_string() const;

    void add_term(const Monomial& m, const Coeff& c);

private:
    void check_domain(const MultiPoly& o) const;

    CoeffDomain dom_;
    TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

struct PseudoDivision {
    MultiPoly quotient;
    MultiPoly remainder;
    int lc_power;  // e with lc^e * f = q*g + r
};

/// Pseudo-division of f by g with respect to var:
/// lc_var(g)^e * f = q*g + r with deg_var(r) < deg_var(g).
PseudoDivision pseudo_divide(const MultiPoly& f, const MultiPoly& g, const std::string& var);

}  // namespace acfq

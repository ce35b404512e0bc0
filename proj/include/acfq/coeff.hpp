#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "acfq/errors.hpp"

namespace acfq {

/// Coefficient domain: the rationals (characteristic 0) or a prime field F_p.
class CoeffDomain {
public:
    static CoeffDomain rationals() { return CoeffDomain(0); }
    static CoeffDomain prime_field(long p);

    long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    bool operator==(const CoeffDomain& o) const { return p_ == o.p_; }
    bool operator!=(const CoeffDomain& o) const { return p_ != o.p_; }

    std::string to_string() const;

private:
    explicit CoeffDomain(long p) : p_(p) {}
    long p_ = 0;
};

bool is_prime(long n);

// Exact scalar in a fixed coefficient domain.  Characteristic 0 values are
// arbitrary-precision rationals, characteristic p values canonical residues
// in [0, p).
class Coeff {
public:
    static Coeff zero(const CoeffDomain& dom) { return from_integer(dom, 0); }
    static Coeff one(const CoeffDomain& dom) { return from_integer(dom, 1); }
    static Coeff from_integer(const CoeffDomain& dom, long v);
    static Coeff from_integer(const CoeffDomain& dom, const mpz_class& v);
    static Coeff from_rational(const mpq_class& q);  // characteristic 0 only

    const CoeffDomain& domain() const { return dom_; }

    bool is_zero() const;
    bool is_one() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator-() const;
    Coeff inverse() const;  // DivisionByZeroError on zero
    Coeff operator/(const Coeff& o) const { return *this * o.inverse(); }

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Total order within one domain (rational order resp. residue order);
    // used only for canonical forms, not for semantics.
    int compare(const Coeff& o) const;

    // Characteristic 0 accessors.
    const mpq_class& rational() const { return q_; }
    // Characteristic p accessor: canonical residue.
    long residue() const { return r_; }

    std::string to_string() const;

private:
    explicit Coeff(const CoeffDomain& dom) : dom_(dom) {}
    void check_domain(const Coeff& o) const;

    CoeffDomain dom_ = CoeffDomain::rationals();
    mpq_class q_;   // used when characteristic 0
    long r_ = 0;    // used when characteristic p
};

}  // namespace acfq

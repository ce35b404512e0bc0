#include "acfq/coeff.hpp"

namespace acfq {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

CoeffDomain CoeffDomain::prime_field(long p) {
    if (!is_prime(p)) throw PreconditionError("characteristic must be 0 or a prime, got " + std::to_string(p));
    return CoeffDomain(p);
}

std::string CoeffDomain::to_string() const {
    return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

Coeff Coeff::from_integer(const CoeffDomain& dom, long v) {
    Coeff c(dom);
    if (dom.is_rational()) {
        c.q_ = mpq_class(v);
    } else {
        long p = dom.characteristic();
        c.r_ = ((v % p) + p) % p;
    }
    return c;
}

Coeff Coeff::from_integer(const CoeffDomain& dom, const mpz_class& v) {
    Coeff c(dom);
    if (dom.is_rational()) {
        c.q_ = mpq_class(v);
    } else {
        mpz_class m = v % dom.characteristic();
        if (m < 0) m += dom.characteristic();
        c.r_ = m.get_si();
    }
    return c;
}

Coeff Coeff::from_rational(const mpq_class& q) {
    Coeff c(CoeffDomain::rationals());
    c.q_ = q;
    c.q_.canonicalize();
    return c;
}

void Coeff::check_domain(const Coeff& o) const {
    if (dom_ != o.dom_)
        throw DomainMismatchError("coefficient domains differ: " + dom_.to_string() + " vs " +
                                  o.dom_.to_string());
}

bool Coeff::is_zero() const { return dom_.is_rational() ? q_ == 0 : r_ == 0; }
bool Coeff::is_one() const { return dom_.is_rational() ? q_ == 1 : r_ == 1; }

Coeff Coeff::operator+(const Coeff& o) const {
    check_domain(o);
    Coeff c(dom_);
    if (dom_.is_rational())
        c.q_ = q_ + o.q_;
    else
        c.r_ = (r_ + o.r_) % dom_.characteristic();
    return c;
}

Coeff Coeff::operator-(const Coeff& o) const {
    check_domain(o);
    Coeff c(dom_);
    if (dom_.is_rational()) {
        c.q_ = q_ - o.q_;
    } else {
        long p = dom_.characteristic();
        c.r_ = ((r_ - o.r_) % p + p) % p;
    }
    return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
    check_domain(o);
    Coeff c(dom_);
    if (dom_.is_rational())
        c.q_ = q_ * o.q_;
    else
        c.r_ = (r_ * o.r_) % dom_.characteristic();
    return c;
}

Coeff Coeff::operator-() const {
    Coeff c(dom_);
    if (dom_.is_rational()) {
        c.q_ = -q_;
    } else {
        long p = dom_.characteristic();
        c.r_ = (p - r_) % p;
    }
    return c;
}

namespace {
long mod_inverse(long a, long p) {
    // extended Euclid on (a, p), p prime, a in (0, p)
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return ((t % p) + p) % p;
}
}  // namespace

Coeff Coeff::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    Coeff c(dom_);
    if (dom_.is_rational())
        c.q_ = 1 / q_;
    else
        c.r_ = mod_inverse(r_, dom_.characteristic());
    return c;
}

bool Coeff::operator==(const Coeff& o) const {
    check_domain(o);
    return dom_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

int Coeff::compare(const Coeff& o) const {
    check_domain(o);
    if (dom_.is_rational()) {
        int c = cmp(q_, o.q_);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

std::string Coeff::to_string() const {
    return dom_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace acfq

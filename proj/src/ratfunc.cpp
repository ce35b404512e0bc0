#include "acfq/ratfunc.hpp"

namespace acfq {

RatFunc RatFunc::make(const FpPoly& num, const FpPoly& den) {
    if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (num.prime() != den.prime()) throw DomainMismatchError("mixed primes in rational function");
    FpPoly n = num, d = den;
    if (n.is_zero()) return RatFunc(n, FpPoly::constant(d.prime(), 1));
    FpPoly g = FpPoly::gcd(n, d);
    if (g.degree() > 0) {
        FpPoly q(n.prime(), {}), r(n.prime(), {});
        FpPoly::divmod(n, g, q, r);
        n = q;
        FpPoly::divmod(d, g, q, r);
        d = q;
    }
    // Make the denominator monic, folding the scale into the numerator.
    long lead = d.leading();
    if (lead != 1) {
        d = d.monic();
        long p = d.prime();
        long inv_applied = 1;
        // n / lead: multiply numerator by lead^{-1}
        for (long x = 1; x < p; ++x)
            if ((x * lead) % p == 1) {
                inv_applied = x;
                break;
            }
        n = n.scaled(inv_applied);
    }
    return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return make(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
    return make(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r = constant(prime(), 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
    int c = FpPoly::compare(a.den_, b.den_);
    if (c != 0) return c;
    return FpPoly::compare(a.num_, b.num_);
}

std::string RatFunc::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (num_.degree() > 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

std::vector<RatFunc> ratfunc_enumerate(long p, int degree_bound) {
    if (degree_bound < 0) throw PreconditionError("degree bound must be >= 0");
    std::vector<RatFunc> out;
    std::vector<FpPoly> dens;
    for (int dd = 0; dd <= degree_bound; ++dd)
        for (const FpPoly& m : fp_monic_polys(p, dd)) dens.push_back(m);
    // Numerators: all polynomials of degree <= bound, including zero.
    std::vector<FpPoly> nums;
    nums.push_back(FpPoly::zero(p));
    unsigned long long count = 1;
    for (int i = 0; i <= degree_bound; ++i) count *= static_cast<unsigned long long>(p);
    for (unsigned long long n = 1; n < count; ++n) {
        std::vector<long> c(degree_bound + 1, 0);
        unsigned long long v = n;
        for (int i = 0; i <= degree_bound; ++i) {
            c[i] = static_cast<long>(v % p);
            v /= p;
        }
        nums.emplace_back(p, std::move(c));
    }
    for (const FpPoly& den : dens) {
        for (const FpPoly& num : nums) {
            if (num.is_zero()) {
                if (den.degree() == 0) out.push_back(RatFunc::zero(p));
                continue;
            }
            if (den.degree() > 0 && FpPoly::gcd(num, den).degree() > 0) continue;
            out.push_back(RatFunc::make(num, den));
        }
    }
    return out;
}

}  // namespace acfq

#pragma once

#include <string>
#include <vector>

#include "acfq/fq.hpp"

namespace acfq {

/// Reduced fraction in F_p(t): monic denominator, gcd(num, den) = 1.
/// The representation is unique, so value equality is structural.
class RatFunc {
public:
    static RatFunc make(const FpPoly& num, const FpPoly& den);
    static RatFunc zero(long p) { return make(FpPoly::zero(p), FpPoly::constant(p, 1)); }
    static RatFunc constant(long p, long c) {
        return make(FpPoly::constant(p, c), FpPoly::constant(p, 1));
    }
    static RatFunc indeterminate(long p) {
        return make(FpPoly::variable(p), FpPoly::constant(p, 1));
    }

    long prime() const { return num_.prime(); }
    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(int e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    static int compare(const RatFunc& a, const RatFunc& b);
    bool operator<(const RatFunc& o) const { return compare(*this, o) < 0; }

    std::string to_string() const;

private:
    RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    FpPoly num_;
    FpPoly den_;
};

/// All reduced fractions with deg(num) <= d and deg(den) <= d, enumerated
/// deterministically and without duplicates.
std::vector<RatFunc> ratfunc_enumerate(long p, int degree_bound);

}  // namespace acfq

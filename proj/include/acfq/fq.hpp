#pragma once

#include <memory>
#include <string>
#include <vector>

#include "acfq/errors.hpp"

namespace acfq {

/// Dense univariate polynomial over F_p.  Coefficients are canonical
/// residues; the trailing (leading) coefficient is nonzero unless the
/// polynomial is zero (empty vector).
class FpPoly {
public:
    FpPoly(long p, std::vector<long> coeffs);
    static FpPoly zero(long p) { return FpPoly(p, {}); }
    static FpPoly constant(long p, long c) { return FpPoly(p, {c}); }
    static FpPoly variable(long p) { return FpPoly(p, {0, 1}); }

    long prime() const { return p_; }
    const std::vector<long>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    long leading() const { return c_.empty() ? 0 : c_.back(); }
    long coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(long k) const;
    FpPoly monic() const;  // DivisionByZeroError on zero
    FpPoly pow(int e) const;

    // Euclidean division; divisor must be nonzero.
    static void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
    FpPoly operator%(const FpPoly& o) const;
    static FpPoly gcd(const FpPoly& a, const FpPoly& b);  // monic (or zero)

    long eval(long x) const;

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }
    static int compare(const FpPoly& a, const FpPoly& b);

    std::string to_string(const std::string& var = "t") const;

private:
    long p_;
    std::vector<long> c_;
    void trim();
};

class FqElement;

/// The field F_{p^k} presented as F_p[u]/(m(u)) for a deterministically
/// chosen irreducible monic m of degree k: the candidate whose non-leading
/// coefficient vector (c_{k-1},...,c_0) is lexicographically smallest,
/// i.e. the first hit of a base-p counter.
class FqField : public std::enable_shared_from_this<FqField> {
public:
    static std::shared_ptr<const FqField> make(long p, int k,
                                               unsigned long long size_cap = 1'000'000ULL);

    long p() const { return p_; }
    int k() const { return k_; }
    unsigned long long size() const { return size_; }
    const FpPoly& modulus() const { return modulus_; }

    FqElement zero() const;
    FqElement one() const;
    FqElement generator() const;  // the residue class of u (k >= 2)
    FqElement from_integer(long v) const;
    FqElement from_coords(std::vector<long> coords) const;
    FqElement element(unsigned long long index) const;  // base-p digits of index
    unsigned long long index_of(const FqElement& e) const;

    FqElement add(const FqElement& a, const FqElement& b) const;
    FqElement sub(const FqElement& a, const FqElement& b) const;
    FqElement mul(const FqElement& a, const FqElement& b) const;
    FqElement neg(const FqElement& a) const;
    FqElement inverse(const FqElement& a) const;
    FqElement pow(const FqElement& a, unsigned long long e) const;

    std::vector<FqElement> enumerate() const;

private:
    FqField(long p, int k, FpPoly modulus);
    void check_member(const FqElement& e) const;

    long p_;
    int k_;
    unsigned long long size_;
    FpPoly modulus_;
    // reduction_[j] = coords of u^(k+j) mod m, for j = 0..k-2
    std::vector<std::vector<long>> reduction_;
};

/// Element of a fixed F_{p^k} instance, stored as coordinates with respect
/// to the power basis 1, u, ..., u^{k-1}.
class FqElement {
public:
    FqElement() = default;
    FqElement(std::shared_ptr<const FqField> field, std::vector<long> coords);

    const std::shared_ptr<const FqField>& field() const { return field_; }
    const std::vector<long>& coords() const { return coords_; }
    long prime() const { return field_->p(); }
    int degree() const { return field_->k(); }
    bool is_zero() const;

    FqElement operator+(const FqElement& o) const { return field_->add(*this, o); }
    FqElement operator-(const FqElement& o) const { return field_->sub(*this, o); }
    FqElement operator*(const FqElement& o) const { return field_->mul(*this, o); }
    FqElement operator-() const { return field_->neg(*this); }
    FqElement inverse() const { return field_->inverse(*this); }
    FqElement pow(unsigned long long e) const { return field_->pow(*this, e); }

    bool operator==(const FqElement& o) const;
    bool operator!=(const FqElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::shared_ptr<const FqField> field_;
    std::vector<long> coords_;
};

/// True when f is irreducible over F_p, decided by trial division against
/// every monic polynomial of degree 1..deg(f)/2.
bool fp_irreducible(const FpPoly& f);

/// All monic polynomials of the given degree over F_p in base-p counter
/// order of their non-leading coefficients.
std::vector<FpPoly> fp_monic_polys(long p, int degree);

}  // namespace acfq

#include "acfq/fq.hpp"

#include <algorithm>
#include <sstream>

#include "acfq/coeff.hpp"

namespace acfq {

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw PreconditionError("FpPoly needs a prime modulus");
    for (auto& x : c_) x = ((x % p_) + p_) % p_;
    trim();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<long> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeff(i) + o.coeff(i)) % p_;
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<long> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeff(i) - o.coeff(i) + p_) % p_;
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<long> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = (c[i + j] + c_[i] * o.c_[j]) % p_;
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::scaled(long k) const {
    std::vector<long> c = c_;
    k = ((k % p_) + p_) % p_;
    for (auto& x : c) x = (x * k) % p_;
    return FpPoly(p_, std::move(c));
}

namespace {
long fp_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    if (nr == 0) throw DivisionByZeroError("inverse of zero mod p");
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return ((t % p) + p) % p;
}
}  // namespace

FpPoly FpPoly::monic() const {
    if (is_zero()) throw DivisionByZeroError("monic form of the zero polynomial");
    return scaled(fp_inv(leading(), p_));
}

FpPoly FpPoly::pow(int e) const {
    FpPoly r = constant(p_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

void FpPoly::divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    long p = a.p_;
    std::vector<long> rem = a.c_;
    std::vector<long> quo(rem.size() > b.c_.size() ? rem.size() - b.c_.size() + 1 : 1, 0);
    long lead_inv = fp_inv(b.leading(), p);
    int db = b.degree();
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        long f = (rem[i] * lead_inv) % p;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] - f * b.c_[j] % p + p * p) % p;
    }
    q = FpPoly(p, std::move(quo));
    r = FpPoly(p, std::move(rem));
}

FpPoly FpPoly::operator%(const FpPoly& o) const {
    FpPoly q = zero(p_), r = zero(p_);
    divmod(*this, o, q, r);
    return r;
}

FpPoly FpPoly::gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

long FpPoly::eval(long x) const {
    long r = 0;
    for (int i = degree(); i >= 0; --i) r = (r * x + c_[i]) % p_;
    return r;
}

int FpPoly::compare(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    return 0;
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<FpPoly> fp_monic_polys(long p, int degree) {
    std::vector<FpPoly> out;
    unsigned long long count = 1;
    for (int i = 0; i < degree; ++i) count *= static_cast<unsigned long long>(p);
    for (unsigned long long n = 0; n < count; ++n) {
        std::vector<long> c(degree + 1, 0);
        unsigned long long v = n;
        for (int i = 0; i < degree; ++i) {
            c[i] = static_cast<long>(v % p);
            v /= p;
        }
        c[degree] = 1;
        out.emplace_back(p, std::move(c));
    }
    return out;
}

bool fp_irreducible(const FpPoly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int e = 1; e <= d / 2; ++e)
        for (const FpPoly& g : fp_monic_polys(f.prime(), e))
            if ((f % g).is_zero()) return false;
    return true;
}

FqField::FqField(long p, int k, FpPoly modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
    size_ = 1;
    for (int i = 0; i < k_; ++i) size_ *= static_cast<unsigned long long>(p_);
    // Precompute u^(k+j) mod m for multiplication folding.
    if (k_ >= 1) {
        std::vector<long> cur(k_, 0);  // u^k mod m = -(c_0 + ... + c_{k-1} u^{k-1})
        for (int i = 0; i < k_; ++i) cur[i] = (p_ - modulus_.coeff(i)) % p_;
        for (int j = 0; j <= k_ - 2; ++j) {
            reduction_.push_back(cur);
            // multiply by u, fold the overflow via u^k
            std::vector<long> next(k_, 0);
            long top = cur[k_ - 1];
            for (int i = k_ - 1; i >= 1; --i) next[i] = cur[i - 1];
            next[0] = 0;
            if (top != 0)
                for (int i = 0; i < k_; ++i)
                    next[i] = (next[i] + top * reduction_[0][i]) % p_;
            cur = std::move(next);
        }
        if (reduction_.empty()) reduction_.push_back(cur);
    }
}

std::shared_ptr<const FqField> FqField::make(long p, int k, unsigned long long size_cap) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (k < 1) throw PreconditionError("extension degree must be >= 1");
    unsigned long long size = 1;
    for (int i = 0; i < k; ++i) {
        size *= static_cast<unsigned long long>(p);
        if (size > size_cap) throw OracleTooLargeError(size, size_cap);
    }
    if (k == 1) {
        FpPoly m(p, {0, 1});  // u, so F_p[u]/(u) = F_p
        return std::shared_ptr<const FqField>(new FqField(p, 1, std::move(m)));
    }
    // Base-p counter over the non-leading coefficients; first irreducible wins.
    for (unsigned long long n = 0;; ++n) {
        std::vector<long> c(k + 1, 0);
        unsigned long long v = n;
        for (int i = 0; i < k; ++i) {
            c[i] = static_cast<long>(v % p);
            v /= p;
        }
        if (v != 0) throw PreconditionError("no irreducible modulus found");  // unreachable
        c[k] = 1;
        FpPoly m(p, std::move(c));
        if (fp_irreducible(m))
            return std::shared_ptr<const FqField>(new FqField(p, k, std::move(m)));
    }
}

FqElement FqField::zero() const { return FqElement(shared_from_this(), std::vector<long>(k_, 0)); }
FqElement FqField::one() const { return from_integer(1); }

FqElement FqField::generator() const {
    std::vector<long> c(k_, 0);
    if (k_ >= 2) c[1] = 1;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::from_integer(long v) const {
    std::vector<long> c(k_, 0);
    c[0] = ((v % p_) + p_) % p_;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::from_coords(std::vector<long> coords) const {
    if (static_cast<int>(coords.size()) != k_) throw PreconditionError("coordinate count mismatch");
    for (auto& x : coords) x = ((x % p_) + p_) % p_;
    return FqElement(shared_from_this(), std::move(coords));
}

FqElement FqField::element(unsigned long long index) const {
    std::vector<long> c(k_, 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<long>(index % p_);
        index /= p_;
    }
    return FqElement(shared_from_this(), std::move(c));
}

unsigned long long FqField::index_of(const FqElement& e) const {
    check_member(e);
    unsigned long long idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + e.coords()[i];
    return idx;
}

void FqField::check_member(const FqElement& e) const {
    if (e.field().get() != this) {
        if (!e.field() || e.field()->p() != p_ || e.field()->k() != k_ ||
            e.field()->modulus() != modulus_)
            throw DomainMismatchError("element belongs to a different field instance");
    }
}

FqElement FqField::add(const FqElement& a, const FqElement& b) const {
    check_member(a);
    check_member(b);
    std::vector<long> c(k_);
    for (int i = 0; i < k_; ++i) c[i] = (a.coords()[i] + b.coords()[i]) % p_;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::sub(const FqElement& a, const FqElement& b) const {
    check_member(a);
    check_member(b);
    std::vector<long> c(k_);
    for (int i = 0; i < k_; ++i) c[i] = (a.coords()[i] - b.coords()[i] + p_) % p_;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::neg(const FqElement& a) const {
    check_member(a);
    std::vector<long> c(k_);
    for (int i = 0; i < k_; ++i) c[i] = (p_ - a.coords()[i]) % p_;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::mul(const FqElement& a, const FqElement& b) const {
    check_member(a);
    check_member(b);
    if (k_ == 1)
        return FqElement(shared_from_this(), {(a.coords()[0] * b.coords()[0]) % p_});
    std::vector<long> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (a.coords()[i] == 0) continue;
        for (int j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + a.coords()[i] * b.coords()[j]) % p_;
    }
    std::vector<long> c(prod.begin(), prod.begin() + k_);
    for (int j = 0; j < k_ - 1; ++j) {
        long over = prod[k_ + j];
        if (over == 0) continue;
        for (int i = 0; i < k_; ++i) c[i] = (c[i] + over * reduction_[j][i]) % p_;
    }
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::inverse(const FqElement& a) const {
    check_member(a);
    if (a.is_zero()) throw DivisionByZeroError("inverse of zero field element");
    // Extended Euclid in F_p[u] against the modulus.
    FpPoly r0 = modulus_, r1(p_, a.coords());
    FpPoly t0 = FpPoly::zero(p_), t1 = FpPoly::constant(p_, 1);
    while (!r1.is_zero()) {
        FpPoly q(p_, {}), rem(p_, {});
        FpPoly::divmod(r0, r1, q, rem);
        FpPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    // r0 is a nonzero constant gcd; scale t0 by its inverse.
    FpPoly inv = t0.scaled(fp_inv(r0.coeff(0), p_));
    std::vector<long> c(k_, 0);
    for (int i = 0; i <= inv.degree(); ++i) c[i] = inv.coeff(i);
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::pow(const FqElement& a, unsigned long long e) const {
    FqElement r = one(), base = a;
    while (e > 0) {
        if (e & 1ULL) r = mul(r, base);
        base = mul(base, base);
        e >>= 1ULL;
    }
    return r;
}

std::vector<FqElement> FqField::enumerate() const {
    std::vector<FqElement> out;
    out.reserve(size_);
    for (unsigned long long i = 0; i < size_; ++i) out.push_back(element(i));
    return out;
}

FqElement::FqElement(std::shared_ptr<const FqField> field, std::vector<long> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

bool FqElement::is_zero() const {
    for (long c : coords_)
        if (c != 0) return false;
    return true;
}

bool FqElement::operator==(const FqElement& o) const {
    return field_->p() == o.field_->p() && field_->k() == o.field_->k() && coords_ == o.coords_;
}

std::string FqElement::to_string() const {
    FpPoly as_poly(field_->p(), coords_);
    return as_poly.to_string("u");
}

}  // namespace acfq

#include "uqrs/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace uqrs {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    long dn = (long)num.size() - 1;
    long dd = (long)den.size() - 1;
    std::vector<Integer> quot(dn - dd + 1);
    for (long k = dn - dd; k >= 0; --k) {
        Integer q = num[k + dd] / den[dd];
        quot[k] = q;
        for (long i = 0; i <= dd; ++i) num[k + i] -= q * den[i];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1 required");
    static std::map<long, std::vector<Integer>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1
    std::vector<Integer> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    cache[n] = poly;
    return poly;
}

CyclotomicContext::CyclotomicContext(long order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    modulus_ = cyclotomic_polynomial(order);
    phi_ = (long)modulus_.size() - 1;

    // x^(phi+k) mod Phi for k in [0, phi-1): row 0 is -(low part of Phi),
    // later rows by shift-and-fold.
    red_.resize(phi_ > 1 ? phi_ - 1 : 0);
    if (phi_ >= 1) {
        std::vector<Integer> row(phi_);
        for (long i = 0; i < phi_; ++i) row[i] = -modulus_[i];
        for (long k = 0; k + 1 < phi_; ++k) {
            red_[k] = row;
            if (k + 2 < phi_) {
                std::vector<Integer> next(phi_);
                Integer top = row[phi_ - 1];
                for (long i = phi_ - 1; i >= 1; --i) next[i] = row[i - 1];
                next[0] = 0;
                for (long i = 0; i < phi_; ++i) next[i] += top * -modulus_[i];
                row = std::move(next);
            }
        }
        if (phi_ == 1) {
            // no reduction rows needed; products have degree 0
        }
    }

    roots_.resize(order_);
    // zeta^k as residue of x^k.
    std::vector<Rational> cur(phi_);
    cur[0] = 1;
    for (long k = 0; k < order_; ++k) {
        roots_[k] = cur;
        // multiply by x
        std::vector<Rational> next(phi_);
        for (long i = 0; i + 1 < phi_; ++i) next[i + 1] = cur[i];
        Rational top = cur[phi_ - 1];
        if (top != 0)
            for (long i = 0; i < phi_; ++i) next[i] += top * Rational(-modulus_[i]);
        cur = std::move(next);
    }
}

Scalar CyclotomicContext::zero() const {
    return Scalar(this, std::vector<Rational>(phi_));
}

Scalar CyclotomicContext::one() const {
    std::vector<Rational> c(phi_);
    c[0] = 1;
    return Scalar(this, std::move(c));
}

Scalar CyclotomicContext::from_rational(const Rational& q) const {
    std::vector<Rational> c(phi_);
    c[0] = q;
    return Scalar(this, std::move(c));
}

Scalar CyclotomicContext::from_long(long v) const {
    return from_rational(Rational(v));
}

Scalar CyclotomicContext::root_of_unity(long k) const {
    k %= order_;
    if (k < 0) k += order_;
    return Scalar(this, roots_[k]);
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check(o);
    long phi = ctx_->degree();
    std::vector<Rational> prod(2 * phi - 1);
    for (long i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> res(prod.begin(), prod.begin() + phi);
    for (long k = 0; k + 1 < phi; ++k) {
        const Rational& top = prod[phi + k];
        if (top == 0) continue;
        const auto& row = ctx_->reduction_row(k);
        for (long i = 0; i < phi; ++i)
            if (row[i] != 0) res[i] += top * Rational(row[i]);
    }
    c_ = std::move(res);
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check(b);
    return a.c_ == b.c_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    long phi = ctx_->degree();
    // Extended Euclid in Q[x]: u*a + v*Phi = gcd = const (Phi irreducible).
    std::vector<Rational> r0(ctx_->modulus().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(ctx_->modulus()[i]);
    std::vector<Rational> r1 = c_;
    trim(r1);
    std::vector<Rational> u0, u1{1}; // coefficients of `a` in r0, r1
    u0.clear();
    while (true) {
        if (r1.empty()) throw std::logic_error("inverse: unexpected zero remainder");
        if (r1.size() == 1) break; // constant gcd reached
        // r0 = q*r1 + r2
        std::vector<Rational> rem = r0;
        long d1 = (long)r1.size() - 1;
        std::vector<Rational> q((long)rem.size() - 1 - d1 + 1);
        for (long k = (long)q.size() - 1; k >= 0; --k) {
            Rational qc = rem[k + d1] / r1[d1];
            q[k] = qc;
            if (qc != 0)
                for (long i = 0; i <= d1; ++i) rem[k + i] -= qc * r1[i];
        }
        trim(rem);
        // u2 = u0 - q*u1
        std::vector<Rational> u2 = u0;
        if (u2.size() < q.size() + u1.size() - 1) u2.resize(q.size() + u1.size() - 1);
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Rational g = r1[0];
    std::vector<Rational> inv(phi);
    for (size_t i = 0; i < u1.size() && i < (size_t)phi; ++i) inv[i] = u1[i] / g;
    // u1 may have degree >= phi in pathological cases; reduce via multiplication check.
    Scalar result(ctx_, std::move(inv));
    return result;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar acc = ctx_->one();
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

long Scalar::multiplicative_order() const {
    if (is_zero()) throw not_root_of_unity();
    Scalar b = *this;
    for (long m = 1; m <= ctx_->order(); ++m) {
        if (b.is_one()) return m;
        b *= *this;
    }
    throw not_root_of_unity();
}

std::string Scalar::to_string(const std::string& sym) const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << sym;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace uqrs

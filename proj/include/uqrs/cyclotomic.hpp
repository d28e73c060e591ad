#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_L): elements are residues
// of Q[x] mod Phi_L(x), stored as length-phi(L) rational coefficient vectors
// in canonical (fully reduced) form.

#include "uqrs/rational.hpp"

#include <memory>
#include <vector>

namespace uqrs {

struct context_mismatch : std::logic_error {
    context_mismatch() : std::logic_error("cyclotomic context mismatch") {}
};
struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero in Q(zeta)") {}
};
struct not_root_of_unity : std::domain_error {
    not_root_of_unity() : std::domain_error("element is not a root of unity") {}
};

/// Coefficients of Phi_n, ascending degree, monic integer polynomial.
std::vector<Integer> cyclotomic_polynomial(long n);

/// Euler totient.
long euler_phi(long n);

class Scalar;

class CyclotomicContext {
public:
    explicit CyclotomicContext(long order);

    long order() const { return order_; }
    long degree() const { return phi_; }
    const std::vector<Integer>& modulus() const { return modulus_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_rational(const Rational& q) const;
    Scalar from_long(long v) const;
    /// zeta_L^k, k taken mod L.
    Scalar root_of_unity(long k) const;

    /// Residue of x^(phi + k), 0 <= k < phi - 1, as integer coefficients.
    const std::vector<Integer>& reduction_row(long k) const { return red_[k]; }

private:
    long order_;
    long phi_;
    std::vector<Integer> modulus_;
    std::vector<std::vector<Integer>> red_;
    std::vector<std::vector<Rational>> roots_; // coefficient vectors of zeta^k
};

class Scalar {
public:
    Scalar() : ctx_(nullptr) {}
    Scalar(const CyclotomicContext* ctx, std::vector<Rational> coeffs)
        : ctx_(ctx), c_(std::move(coeffs)) {}

    const CyclotomicContext& context() const { return *ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Multiplicative inverse; throws division_by_zero on zero.
    Scalar inverse() const;

    /// Integer power, negative exponents via inverse().
    Scalar pow(long e) const;

    /// Smallest m >= 1 with a^m = 1, searched up to L; throws not_root_of_unity.
    long multiplicative_order() const;

    /// Polynomial string in the symbol `sym`, e.g. "1 - 2*q^2". Deterministic.
    std::string to_string(const std::string& sym = "q") const;

private:
    const CyclotomicContext* ctx_;
    std::vector<Rational> c_;

    void check(const Scalar& o) const {
        if (ctx_ == nullptr || o.ctx_ == nullptr || ctx_->order() != o.ctx_->order())
            throw context_mismatch();
    }
};

} // namespace uqrs

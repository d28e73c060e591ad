#pragma once

// Cartan data with Bourbaki numbering, the Euler (Ringel) form, positive
// roots of type A in convex order, and the q-combinatorics used by the
// defining relations: Gaussian binomials, (r,s)-bracket binomials and the
// Serre coefficients. Binomials are computed by Pascal recurrences so they
// stay total at roots of unity.

#include "uqrs/cyclotomic.hpp"

#include <string>
#include <vector>

namespace uqrs {

enum class Family { A, B, C, D, F4, G2 };

std::string family_name(Family f);
Family family_from_string(const std::string& s); // throws std::invalid_argument

struct CartanDatum {
    Family family;
    int rank;
    std::vector<std::vector<int>> a; // Cartan matrix, 0-based storage
    std::vector<int> d;              // minimal symmetrizers
};

/// Bourbaki-numbered Cartan matrix and minimal symmetrizers.
/// Valid ranks: A n>=1, B/C n>=2, D n>=4, F4 n=4, G2 n=2.
CartanDatum cartan_datum(Family family, int rank);

/// Euler form <i,j>: d_i a_ij below i<j, d_i on the diagonal, 0 for i>j.
/// Indices are 1-based; out of range throws std::out_of_range.
long euler_form(const CartanDatum& datum, int i, int j);

/// Gaussian binomial (n choose k)_v by the Pascal recurrence.
Scalar q_binomial(int n, int k, const Scalar& v);

/// Two-parameter bracket binomial [a choose i] built on the brackets
/// [c] = (rj^c - sj^c)/(rj - sj), via the recurrence
/// [a,i] = rj^i [a-1,i] + sj^(a-i) [a-1,i-1]; total at roots of unity.
/// Throws std::domain_error when rj == sj.
Scalar rs_bracket_binomial(int a, int i, const Scalar& rj, const Scalar& sj);

/// [c] = (rj^c - sj^c)/(rj - sj), the direct quotient form.
Scalar rs_bracket(int c, const Scalar& rj, const Scalar& sj);

/// Convenience: bracket binomial with rj = r^(d_j), sj = s^(d_j).
Scalar rs_quantum_binomial(int a, int i, const Scalar& r, const Scalar& s,
                           const CartanDatum& datum, int j);

/// c_ij^(k) = (r_i s_i^-1)^(k(k-1)/2) r^(k<j,i>) s^(-k<i,j>), i != j.
Scalar serre_coefficient(const CartanDatum& datum, const Scalar& r, const Scalar& s,
                         int i, int j, int k);

/// Positive roots of A_(n-1) as intervals (i,j), 1 <= i <= j <= n-1, in
/// lexicographic (convex) order.
std::vector<std::pair<int, int>> positive_roots_A(int n);

} // namespace uqrs

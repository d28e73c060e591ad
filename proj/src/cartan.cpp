#include "uqrs/cartan.hpp"

#include <stdexcept>

namespace uqrs {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "F4") return Family::F4;
    if (s == "G2") return Family::G2;
    throw std::invalid_argument("unknown family: " + s);
}

CartanDatum cartan_datum(Family family, int rank) {
    auto invalid = [&] {
        throw std::invalid_argument("invalid rank " + std::to_string(rank) +
                                    " for family " + family_name(family));
    };
    CartanDatum datum;
    datum.family = family;
    datum.rank = rank;
    auto path = [&](int n) {
        datum.a.assign(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            datum.a[i][i] = 2;
            if (i + 1 < n) datum.a[i][i + 1] = datum.a[i + 1][i] = -1;
        }
        datum.d.assign(n, 1);
    };
    switch (family) {
        case Family::A:
            if (rank < 1) invalid();
            path(rank);
            break;
        case Family::B:
            if (rank < 2) invalid();
            path(rank);
            // short root at the end: a_{n,n-1} = -2, long roots carry d=2
            datum.a[rank - 1][rank - 2] = -2;
            datum.d.assign(rank, 2);
            datum.d[rank - 1] = 1;
            break;
        case Family::C:
            if (rank < 2) invalid();
            path(rank);
            datum.a[rank - 2][rank - 1] = -2;
            datum.d.assign(rank, 1);
            datum.d[rank - 1] = 2;
            break;
        case Family::D:
            if (rank < 4) invalid();
            path(rank);
            datum.a[rank - 1][rank - 2] = datum.a[rank - 2][rank - 1] = 0;
            datum.a[rank - 3][rank - 1] = datum.a[rank - 1][rank - 3] = -1;
            datum.d.assign(rank, 1);
            break;
        case Family::F4:
            if (rank != 4) invalid();
            path(4);
            datum.a[2][1] = -2; // arrow 2 => 3, roots 1,2 long
            datum.d = {2, 2, 1, 1};
            break;
        case Family::G2:
            if (rank != 2) invalid();
            path(2);
            datum.a[0][1] = -3;
            datum.d = {1, 3};
            break;
    }
    // sanity: symmetrizability
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if ((long)datum.d[i] * datum.a[i][j] != (long)datum.d[j] * datum.a[j][i])
                throw std::logic_error("non-symmetrizable Cartan datum");
    return datum;
}

long euler_form(const CartanDatum& datum, int i, int j) {
    if (i < 1 || j < 1 || i > datum.rank || j > datum.rank)
        throw std::out_of_range("euler_form index out of range");
    if (i < j) return (long)datum.d[i - 1] * datum.a[i - 1][j - 1];
    if (i == j) return datum.d[i - 1];
    return 0;
}

Scalar q_binomial(int n, int k, const Scalar& v) {
    if (k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    const CyclotomicContext& ctx = v.context();
    // row DP: (m choose j)_v = (m-1 choose j)_v + v^(m-j) (m-1 choose j-1)_v
    std::vector<Scalar> row{ctx.one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<Scalar> next(m + 1, ctx.zero());
        next[0] = ctx.one();
        next[m] = ctx.one();
        for (int j = 1; j < m; ++j) next[j] = row[j] + v.pow(m - j) * row[j - 1];
        row = std::move(next);
    }
    return row[k];
}

Scalar rs_bracket(int c, const Scalar& rj, const Scalar& sj) {
    Scalar den = rj - sj;
    if (den.is_zero()) throw std::domain_error("rs_bracket: rj == sj");
    return (rj.pow(c) - sj.pow(c)) / den;
}

Scalar rs_bracket_binomial(int a, int i, const Scalar& rj, const Scalar& sj) {
    if (i < 0 || i > a) throw std::invalid_argument("rs_bracket_binomial: need 0 <= i <= a");
    if ((rj - sj).is_zero()) throw std::domain_error("rs_bracket_binomial: rj == sj");
    const CyclotomicContext& ctx = rj.context();
    std::vector<Scalar> row{ctx.one()};
    for (int m = 1; m <= a; ++m) {
        std::vector<Scalar> next(m + 1, ctx.zero());
        next[0] = ctx.one();
        next[m] = ctx.one();
        for (int j = 1; j < m; ++j)
            next[j] = rj.pow(j) * row[j] + sj.pow(m - j) * row[j - 1];
        row = std::move(next);
    }
    return row[i];
}

Scalar rs_quantum_binomial(int a, int i, const Scalar& r, const Scalar& s,
                           const CartanDatum& datum, int j) {
    if (j < 1 || j > datum.rank) throw std::out_of_range("rs_quantum_binomial: bad j");
    long dj = datum.d[j - 1];
    return rs_bracket_binomial(a, i, r.pow(dj), s.pow(dj));
}

Scalar serre_coefficient(const CartanDatum& datum, const Scalar& r, const Scalar& s,
                         int i, int j, int k) {
    if (i == j) throw std::invalid_argument("serre_coefficient: i == j");
    long di = datum.d[i - 1];
    Scalar risi = r.pow(di) * s.pow(di).inverse();
    return risi.pow((long)k * (k - 1) / 2) * r.pow(k * euler_form(datum, j, i)) *
           s.pow(-k * euler_form(datum, i, j));
}

std::vector<std::pair<int, int>> positive_roots_A(int n) {
    if (n < 2) throw std::invalid_argument("positive_roots_A: n >= 2 required");
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) roots.emplace_back(i, j);
    return roots;
}

} // namespace uqrs

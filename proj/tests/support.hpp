#pragma once

// Shared helpers for randomized property tests. Seeds are fixed so failures
// reproduce.

#include "uqrs/cyclotomic.hpp"

#include <random>

namespace uqrs::testing {

inline std::mt19937_64 make_rng(uint64_t seed = 0x5eed1234abcdULL) {
    return std::mt19937_64(seed);
}

inline Scalar random_scalar(const CyclotomicContext& ctx, std::mt19937_64& rng,
                            int coeff_bound = 5) {
    std::uniform_int_distribution<long> num(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rational> c(ctx.degree());
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return Scalar(&ctx, std::move(c));
}

} // namespace uqrs::testing

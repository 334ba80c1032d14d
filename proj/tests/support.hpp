#pragma once

#include "hypercube/polynomial.hpp"

#include <random>

namespace hypercube::testing {

// Random polynomial with small exponents; every fourth coefficient is wide
// enough to leave the 64-bit fast path.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t arity, int terms, int max_exp = 3) {
    std::vector<Term> t;
    for (int i = 0; i < terms; ++i) {
        ExponentVector e;
        for (std::size_t k = 0; k < arity; ++k) e.set(k, static_cast<int>(rng() % (max_exp + 1)));
        Integer c(static_cast<std::int64_t>(rng() % 101) - 50);
        if (i % 4 == 3) c = c * Integer::parse("1000000000000000000000007");
        if (!c.is_zero()) t.push_back({e, c});
    }
    return Polynomial::from_terms(arity, std::move(t));
}

inline std::vector<BigInt> random_point(std::mt19937_64& rng, std::size_t arity, int bound = 9) {
    std::vector<BigInt> x;
    for (std::size_t k = 0; k < arity; ++k) x.push_back(static_cast<long>(rng() % (2 * bound + 1)) - bound);
    return x;
}

}  // namespace hypercube::testing

#pragma once

#include "hypercube/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hypercube {

// Column of the cube configuration for a vertex label: (1, bits), first
// coordinate taken from the most significant bit.
inline IntVector cube_column(int n, std::uint32_t label) {
    IntVector c(n + 1, 1);
    for (int k = 0; k < n; ++k) c[k + 1] = label >> (n - 1 - k) & 1;
    return c;
}

// The (n+1) x 2^n matrix whose columns are the homogenized cube vertices.
inline IntMatrix cube_matrix(int n) {
    if (n < 1 || n > 8) throw std::out_of_range("cube dimension must be in 1..8");
    std::size_t N = std::size_t{1} << n;
    IntMatrix a(n + 1, IntVector(N));
    for (std::uint32_t l = 0; l < N; ++l) {
        auto c = cube_column(n, l);
        for (int r = 0; r <= n; ++r) a[r][l] = c[r];
    }
    return a;
}

// A x for a vector indexed by vertex labels.
template <class Vec>
IntVector cube_degrees(int n, const Vec& x) {
    IntMatrix a = cube_matrix(n);
    IntVector d(n + 1, 0);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t l = 0; l < a[r].size(); ++l) d[r] += a[r][l] * static_cast<std::int64_t>(x[l]);
    return d;
}

// Labels of the origin and the n unit vectors; their columns form a
// unimodular basis, used to fix the lineality gauge.
inline std::vector<std::uint32_t> gauge_labels(int n) {
    std::vector<std::uint32_t> g{0};
    for (int k = 0; k < n; ++k) g.push_back(1u << (n - 1 - k));
    return g;
}

inline std::vector<std::uint32_t> free_labels(int n) {
    auto g = gauge_labels(n);
    std::vector<std::uint32_t> f;
    for (std::uint32_t l = 0; l < (1u << n); ++l)
        if (std::find(g.begin(), g.end(), l) == g.end()) f.push_back(l);
    return f;
}

// Returns (y, v - y A) where y is the unique integer row vector making the
// result vanish on the gauge labels.
inline std::pair<IntVector, IntVector> remove_lineality(int n, IntVector v) {
    if (v.size() != (std::size_t{1} << n)) throw std::invalid_argument("vector length does not match 2^n");
    // On the gauge columns: y0 = v[0], y0 + y_k = v[e_k].
    IntVector y(n + 1);
    y[0] = v[0];
    for (int k = 0; k < n; ++k) y[k + 1] = v[1u << (n - 1 - k)] - y[0];
    for (std::uint32_t l = 0; l < v.size(); ++l) {
        auto c = cube_column(n, l);
        for (int r = 0; r <= n; ++r) v[l] -= y[r] * c[r];
    }
    return {y, v};
}

// Completes a vector given on the free labels to an element of ker A.
inline IntVector lift_from_free(int n, const IntVector& free_part) {
    auto fl = free_labels(n);
    if (free_part.size() != fl.size()) throw std::invalid_argument("free coordinate count mismatch");
    std::size_t N = std::size_t{1} << n;
    IntVector x(N, 0);
    IntVector s(n + 1, 0);  // A restricted to free labels times free_part
    for (std::size_t i = 0; i < fl.size(); ++i) {
        x[fl[i]] = free_part[i];
        auto c = cube_column(n, fl[i]);
        for (int r = 0; r <= n; ++r) s[r] += c[r] * free_part[i];
    }
    // Gauge part g solves A_G g = -s: g_e_k = -s_k, g_0 = -s_0 - sum g_e_k.
    std::int64_t sum = 0;
    for (int k = 0; k < n; ++k) {
        x[1u << (n - 1 - k)] = -s[k + 1];
        sum += -s[k + 1];
    }
    x[0] = -s[0] - sum;
    return x;
}

}  // namespace hypercube

#pragma once

#include "hypercube/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hypercube {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using BigVector = std::vector<BigInt>;
using BigMatrix = std::vector<BigVector>;
using RatVector = std::vector<Rational>;

namespace detail {

inline bool mul_sub_div(i128 a, i128 b, i128 c, i128 d, i128 div, i128& out) {
    i128 x, y, z;
    if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y) || __builtin_sub_overflow(x, y, &z)) return false;
    out = z / div;
    return true;
}

// Fraction-free elimination; returns the rank or nullopt on 128-bit overflow.
inline std::optional<int> rank_i128(std::vector<std::vector<i128>> a) {
    std::size_t rows = a.size();
    if (!rows) return 0;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    i128 prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!mul_sub_div(a[r][c], a[i][j], a[i][c], a[r][j], prev, a[i][j])) return std::nullopt;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

inline int rank_big(BigMatrix a) {
    std::size_t rows = a.size();
    if (!rows) return 0;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace detail

inline int rank(const IntMatrix& m) {
    std::vector<std::vector<i128>> a;
    a.reserve(m.size());
    for (const auto& row : m) a.emplace_back(row.begin(), row.end());
    if (auto r = detail::rank_i128(std::move(a))) return *r;
    BigMatrix b;
    for (const auto& row : m) b.emplace_back(row.begin(), row.end());
    return detail::rank_big(std::move(b));
}

inline int rank(const BigMatrix& m) { return detail::rank_big(m); }

inline BigInt determinant(BigMatrix a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline BigInt determinant(const IntMatrix& m) {
    BigMatrix b;
    for (const auto& row : m) b.emplace_back(row.begin(), row.end());
    return determinant(std::move(b));
}

// Reduced row echelon form over the rationals; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<RatVector>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Scales a rational vector to a primitive integer vector with the same direction.
inline BigVector primitive(const RatVector& v) {
    BigInt den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, denominator(x));
    BigVector out;
    BigInt g = 0;
    for (const auto& x : v) {
        out.push_back(numerator(x) * (den / denominator(x)));
        g = boost::multiprecision::gcd(g, out.back());
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

inline BigVector primitive(BigVector v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

// Basis of the right kernel {x : M x = 0} as primitive integer vectors.
inline std::vector<BigVector> kernel_basis(const IntMatrix& m, std::size_t cols) {
    std::vector<RatVector> a;
    for (const auto& row : m) a.emplace_back(row.begin(), row.end());
    auto piv = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<BigVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(cols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -a[i][f];
        basis.push_back(primitive(x));
    }
    return basis;
}

// Unique solution of the square system M x = b, or nullopt if M is singular.
inline std::optional<RatVector> solve_square(const IntMatrix& m, const RatVector& b) {
    std::size_t n = m.size();
    std::vector<RatVector> a;
    for (std::size_t i = 0; i < n; ++i) {
        RatVector row(m[i].begin(), m[i].end());
        row.push_back(b[i]);
        a.push_back(std::move(row));
    }
    auto piv = rref(a);
    if (piv.size() != n || piv.back() != n - 1) return std::nullopt;
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

inline IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m[0].size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::int64_t gcd_of(const IntVector& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

}  // namespace hypercube

#pragma once

#include "hypercube/exponent.hpp"
#include "hypercube/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hypercube {

// Signed permutation of the n cube coordinates. Coordinate 0 is the most
// significant bit of a vertex label. Acting on a point x: first flip the
// coordinates in the mask, then send coordinate i to position perm[i].
class SignedPermutation {
public:
    static constexpr int kMaxDim = 8;

    SignedPermutation() = default;
    SignedPermutation(int n, std::array<std::uint8_t, kMaxDim> perm, std::uint8_t flips) : n_(n), perm_(perm), flips_(flips) {}

    static SignedPermutation identity(int n) {
        if (n < 1 || n > kMaxDim) throw std::out_of_range("cube dimension must be in 1..8");
        std::array<std::uint8_t, kMaxDim> p{};
        for (int i = 0; i < kMaxDim; ++i) p[i] = static_cast<std::uint8_t>(i);
        return {n, p, 0};
    }

    int dimension() const { return n_; }
    int image_of_coordinate(int i) const { return perm_[i]; }
    bool flips(int i) const { return flips_ >> i & 1; }

    std::uint32_t apply(std::uint32_t label) const {
        std::uint32_t out = 0;
        for (int i = 0; i < n_; ++i) {
            std::uint32_t bit = (label >> (n_ - 1 - i) & 1) ^ (flips_ >> i & 1);
            out |= bit << (n_ - 1 - perm_[i]);
        }
        return out;
    }

    // (*this)(h(x)).
    SignedPermutation compose(const SignedPermutation& h) const {
        if (h.n_ != n_) throw std::invalid_argument("composing signed permutations of different dimension");
        std::array<std::uint8_t, kMaxDim> p{};
        std::uint8_t f = 0;
        for (int i = 0; i < kMaxDim; ++i) p[i] = static_cast<std::uint8_t>(i);
        for (int i = 0; i < n_; ++i) {
            p[i] = perm_[h.perm_[i]];
            if (((h.flips_ >> i) ^ (flips_ >> h.perm_[i])) & 1) f |= static_cast<std::uint8_t>(1u << i);
        }
        return {n_, p, f};
    }

    SignedPermutation inverse() const {
        std::array<std::uint8_t, kMaxDim> q{};
        for (int i = 0; i < kMaxDim; ++i) q[i] = static_cast<std::uint8_t>(i);
        std::uint8_t f = 0;
        for (int i = 0; i < n_; ++i) q[perm_[i]] = static_cast<std::uint8_t>(i);
        for (int j = 0; j < n_; ++j)
            if (flips_ >> q[j] & 1) f |= static_cast<std::uint8_t>(1u << j);
        return {n_, q, f};
    }

    std::vector<std::uint32_t> label_table() const {
        std::vector<std::uint32_t> t(std::size_t{1} << n_);
        for (std::uint32_t l = 0; l < t.size(); ++l) t[l] = apply(l);
        return t;
    }

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        if (a.n_ != b.n_ || a.flips_ != b.flips_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.perm_[i] != b.perm_[i]) return false;
        return true;
    }

private:
    int n_ = 0;
    std::array<std::uint8_t, kMaxDim> perm_{};
    std::uint8_t flips_ = 0;
};

// All n! 2^n elements, identity first: permutations in lexicographic order,
// flip masks ascending within each.
inline std::vector<SignedPermutation> group_elements(int n) {
    if (n < 1 || n > SignedPermutation::kMaxDim) throw std::out_of_range("cube dimension must be in 1..8");
    std::vector<SignedPermutation> out;
    std::array<std::uint8_t, SignedPermutation::kMaxDim> p{};
    for (int i = 0; i < SignedPermutation::kMaxDim; ++i) p[i] = static_cast<std::uint8_t>(i);
    do {
        for (unsigned f = 0; f < (1u << n); ++f) out.emplace_back(n, p, static_cast<std::uint8_t>(f));
    } while (std::next_permutation(p.begin(), p.begin() + n));
    return out;
}

inline ExponentVector act_on_exponent(const SignedPermutation& g, const ExponentVector& e, std::size_t arity) {
    if (arity != (std::size_t{1} << g.dimension())) throw std::invalid_argument("exponent arity does not match 2^n");
    ExponentVector r;
    for (std::uint32_t l = 0; l < arity; ++l) r.set(g.apply(l), e[l]);
    return r;
}

struct Orbit {
    ExponentVector representative;
    std::size_t size = 0;
};

// The group B_n with precomputed label tables.
class CubeGroup {
public:
    explicit CubeGroup(int n) : n_(n), elements_(group_elements(n)), points_(std::size_t{1} << n) {
        for (const auto& g : elements_) tables_.push_back(g.label_table());
    }

    int dimension() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    std::size_t points() const { return points_; }
    const std::vector<SignedPermutation>& elements() const { return elements_; }
    const std::vector<std::uint32_t>& table(std::size_t g) const { return tables_[g]; }

    ExponentVector act(std::size_t g, const ExponentVector& e) const {
        ExponentVector r;
        const auto& t = tables_[g];
        for (std::size_t l = 0; l < points_; ++l) r.data()[t[l]] = e[l];
        return r;
    }

    template <class T>
    std::vector<T> act(std::size_t g, const std::vector<T>& x) const {
        if (x.size() != points_) throw std::invalid_argument("vector length does not match 2^n");
        std::vector<T> r(points_);
        const auto& t = tables_[g];
        for (std::size_t l = 0; l < points_; ++l) r[t[l]] = x[l];
        return r;
    }

    std::uint32_t act_on_mask(std::size_t g, std::uint32_t mask) const {
        std::uint32_t r = 0;
        const auto& t = tables_[g];
        for (std::size_t l = 0; l < points_; ++l)
            if (mask >> l & 1) r |= 1u << t[l];
        return r;
    }

    std::vector<ExponentVector> orbit(const ExponentVector& e) const {
        std::vector<ExponentVector> o;
        o.reserve(order());
        for (std::size_t g = 0; g < order(); ++g) o.push_back(act(g, e));
        std::sort(o.begin(), o.end());
        o.erase(std::unique(o.begin(), o.end()), o.end());
        return o;
    }

    Orbit canonicalize(const ExponentVector& e) const {
        ExponentVector best = e;
        std::size_t stab = 0;
        for (std::size_t g = 0; g < order(); ++g) {
            ExponentVector x = act(g, e);
            if (x == e) ++stab;
            if (x < best) best = x;
        }
        return {best, order() / stab};
    }

    template <class T>
    std::vector<T> canonical_vector(const std::vector<T>& x) const {
        std::vector<T> best = x;
        for (std::size_t g = 1; g < order(); ++g) {
            auto y = act(g, x);
            if (y < best) best = std::move(y);
        }
        return best;
    }

private:
    int n_;
    std::vector<SignedPermutation> elements_;
    std::size_t points_;
    std::vector<std::vector<std::uint32_t>> tables_;
};

inline const CubeGroup& cube_group(int n) {
    static const CubeGroup g1(1), g2(2), g3(3), g4(4);
    switch (n) {
        case 1: return g1;
        case 2: return g2;
        case 3: return g3;
        case 4: return g4;
        default: throw std::out_of_range("cached cube groups exist for n <= 4");
    }
}

inline Orbit canonicalize(const ExponentVector& e, int n) { return cube_group(n).canonicalize(e); }

struct OrbitDecomposition {
    std::vector<Orbit> orbits;                      // sorted by representative
    std::vector<ExponentVector> closure_witnesses;  // images missing from the support
};

// Sweeps the sorted support: each unvisited point generates its orbit, whose
// members are marked by binary search.
inline OrbitDecomposition orbit_decompose(std::vector<ExponentVector> support, int n, int jobs = 1) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const CubeGroup& G = cube_group(n);
    OrbitDecomposition out;
    std::vector<std::uint8_t> seen(support.size(), 0);
    std::vector<ExponentVector> images;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (seen[i]) continue;
        images = G.orbit(support[i]);
        for (const auto& x : images) {
            auto it = std::lower_bound(support.begin(), support.end(), x);
            if (it != support.end() && *it == x) seen[it - support.begin()] = 1;
            else out.closure_witnesses.push_back(x);
        }
        out.orbits.push_back({images.front(), images.size()});
    }
    (void)jobs;
    std::sort(out.orbits.begin(), out.orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
    return out;
}

struct PolynomialOrbit {
    ExponentVector representative;
    Integer coefficient;
    std::size_t size = 0;
};

// Orbits of a group-invariant polynomial; throws if a coefficient is not
// constant on an orbit or the support is not closed.
inline std::vector<PolynomialOrbit> polynomial_orbits(const Polynomial& p, int n) {
    const CubeGroup& G = cube_group(n);
    if (p.arity() != G.points()) throw std::invalid_argument("polynomial arity does not match 2^n");
    std::vector<std::uint8_t> seen(p.size(), 0);
    std::vector<PolynomialOrbit> out;
    const auto& terms = p.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (seen[i]) continue;
        auto images = G.orbit(terms[i].exponent);
        for (const auto& x : images) {
            auto it = std::lower_bound(terms.begin(), terms.end(), x,
                                       [](const Term& t, const ExponentVector& e) { return t.exponent < e; });
            if (it == terms.end() || it->exponent != x)
                throw std::runtime_error("support not closed under the group at " + x.to_string(p.arity()));
            if (it->coefficient != terms[i].coefficient)
                throw std::runtime_error("coefficient not constant on orbit of " + x.to_string(p.arity()));
            seen[it - terms.begin()] = 1;
        }
        out.push_back({images.front(), terms[i].coefficient, images.size()});
    }
    std::sort(out.begin(), out.end(), [](const PolynomialOrbit& a, const PolynomialOrbit& b) {
        return a.representative < b.representative;
    });
    return out;
}

inline Polynomial act_on_polynomial(std::size_t g, const Polynomial& p, int n) {
    const CubeGroup& G = cube_group(n);
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p) out.push_back({G.act(g, t.exponent), t.coefficient});
    return Polynomial::from_terms(p.arity(), std::move(out));
}

}  // namespace hypercube

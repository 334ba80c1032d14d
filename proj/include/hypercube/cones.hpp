#pragma once

// Polyhedral cones over the integers: double description, facets of a
// generated cone, face lattices from incidence data.

#include "hypercube/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace hypercube {

class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    static DynBitset full(std::size_t bits) {
        DynBitset b(bits);
        for (std::size_t i = 0; i < bits; ++i) b.set(i);
        return b;
    }

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return w_[i / 64] >> (i % 64) & 1; }
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
    friend bool operator==(const DynBitset& a, const DynBitset& b) { return a.w_ == b.w_; }
    friend bool operator<(const DynBitset& a, const DynBitset& b) { return a.w_ < b.w_; }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < w_.size(); ++k)
            for (std::uint64_t x = w_[k]; x; x &= x - 1) out.push_back(64 * k + std::countr_zero(x));
        return out;
    }
    const std::vector<std::uint64_t>& words() const { return w_; }
    std::size_t hash() const {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (auto x : w_) h = (h ^ x) * 0xBF58476D1CE4E5B9ull + (h >> 29);
        return static_cast<std::size_t>(h);
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

struct DynBitsetHash {
    std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

namespace detail {

inline std::int64_t checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("cone computation exceeds 64-bit entries");
    return static_cast<std::int64_t>(v);
}

inline void make_primitive(IntVector& v) {
    std::int64_t g = gcd_of(v);
    if (g > 1)
        for (auto& x : v) x /= g;
}

inline i128 dot128(const IntVector& a, const IntVector& b) {
    i128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
    return s;
}

}  // namespace detail

struct RayResult {
    std::vector<IntVector> rays;      // primitive integer generators
    std::vector<DynBitset> incidence;  // per ray: inequalities that vanish on it
};

// Extreme rays of the pointed cone {x in R^d : a_i . x >= 0}. The rows must
// have rank d.
inline RayResult extreme_rays(const std::vector<IntVector>& ineqs, std::size_t d) {
    std::size_t k = ineqs.size();
    for (const auto& a : ineqs)
        if (a.size() != d) throw std::invalid_argument("inequality length differs from dimension");
    // Greedy choice of d independent rows.
    std::vector<std::size_t> basis;
    IntMatrix chosen;
    for (std::size_t i = 0; i < k && basis.size() < d; ++i) {
        chosen.push_back(ineqs[i]);
        if (rank(chosen) == static_cast<int>(chosen.size())) basis.push_back(i);
        else chosen.pop_back();
    }
    if (basis.size() < d) throw std::invalid_argument("cone is not pointed: inequalities have rank below the dimension");

    struct Ray {
        IntVector v;
        DynBitset zero;
    };
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        IntMatrix others;
        for (std::size_t t = 0; t < d; ++t)
            if (t != j) others.push_back(ineqs[basis[t]]);
        auto ker = kernel_basis(others, d);
        if (ker.size() != 1) throw std::logic_error("initial simplicial cone is degenerate");
        IntVector v(d);
        for (std::size_t t = 0; t < d; ++t) v[t] = static_cast<std::int64_t>(ker[0][t]);
        if (detail::dot128(ineqs[basis[j]], v) < 0)
            for (auto& x : v) x = -x;
        Ray r{v, DynBitset(k)};
        for (std::size_t t = 0; t < d; ++t)
            if (t != j) r.zero.set(basis[t]);
        rays.push_back(std::move(r));
    }
    std::vector<std::uint8_t> done(k, 0);
    for (auto b : basis) done[b] = 1;
    DynBitset processed(k);
    for (auto b : basis) processed.set(b);

    for (std::size_t i = 0; i < k; ++i) {
        if (done[i]) continue;
        const IntVector& a = ineqs[i];
        std::vector<i128> val(rays.size());
        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = detail::dot128(a, rays[r].v);
            (val[r] > 0 ? pos : val[r] < 0 ? neg : zer).push_back(r);
        }
        std::vector<Ray> next;
        next.reserve(pos.size() + zer.size());
        for (auto r : pos) next.push_back(rays[r]);
        for (auto r : zer) {
            next.push_back(rays[r]);
            next.back().zero.set(i);
        }
        for (auto p : pos) {
            for (auto q : neg) {
                DynBitset common = rays[p].zero & rays[q].zero;
                if (common.count() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.subset_of(rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector v(d);
                for (std::size_t t = 0; t < d; ++t)
                    v[t] = detail::checked(val[p] * rays[q].v[t] - val[q] * rays[p].v[t]);
                detail::make_primitive(v);
                common.set(i);
                next.push_back({std::move(v), std::move(common)});
            }
        }
        rays = std::move(next);
        processed.set(i);
        done[i] = 1;
    }
    RayResult out;
    std::sort(rays.begin(), rays.end(), [](const Ray& x, const Ray& y) { return x.v < y.v; });
    for (auto& r : rays) {
        out.rays.push_back(std::move(r.v));
        out.incidence.push_back(std::move(r.zero));
    }
    return out;
}

struct ConeFacets {
    std::vector<IntVector> normals;     // primitive, zero outside the span coordinates
    std::vector<DynBitset> incidence;   // per normal: generators on the facet
    std::size_t dimension = 0;          // dimension of the span
};

// Facets of the cone generated by the given vectors, inside their linear
// span. Each normal n satisfies n . g >= 0 for all generators.
inline ConeFacets cone_facets(const std::vector<IntVector>& generators, std::size_t dim) {
    ConeFacets out;
    if (generators.empty()) return out;
    // Pivot coordinates of the generator rows project the span injectively.
    std::vector<RatVector> rows;
    for (const auto& g : generators) rows.emplace_back(g.begin(), g.end());
    auto piv = rref(rows);
    std::size_t d = piv.size();
    out.dimension = d;
    std::vector<IntVector> projected;
    for (const auto& g : generators) {
        IntVector p(d);
        for (std::size_t t = 0; t < d; ++t) p[t] = g[piv[t]];
        projected.push_back(std::move(p));
    }
    if (d == 1) {
        IntVector n(dim, 0);
        bool positive = false;
        for (const auto& p : projected) positive |= p[0] > 0;
        n[piv[0]] = positive ? 1 : -1;
        out.normals.push_back(n);
        out.incidence.push_back(DynBitset(generators.size()));
        return out;
    }
    RayResult dual = extreme_rays(projected, d);
    for (std::size_t r = 0; r < dual.rays.size(); ++r) {
        IntVector n(dim, 0);
        for (std::size_t t = 0; t < d; ++t) n[piv[t]] = dual.rays[r][t];
        out.normals.push_back(std::move(n));
        out.incidence.push_back(dual.incidence[r]);
    }
    return out;
}

struct PolytopeFacet {
    IntVector normal;   // normal . p >= rhs on the polytope
    std::int64_t rhs = 0;
    DynBitset points;   // points lying on the facet
};

// Facets of conv(points) inside its affine hull.
inline std::vector<PolytopeFacet> polytope_facets(const std::vector<IntVector>& points) {
    if (points.empty()) return {};
    std::size_t dim = points[0].size();
    std::vector<IntVector> hom;
    for (const auto& p : points) {
        IntVector h(dim + 1);
        h[0] = 1;
        std::copy(p.begin(), p.end(), h.begin() + 1);
        hom.push_back(std::move(h));
    }
    ConeFacets cf = cone_facets(hom, dim + 1);
    std::vector<PolytopeFacet> out;
    for (std::size_t i = 0; i < cf.normals.size(); ++i) {
        PolytopeFacet f;
        f.normal.assign(cf.normals[i].begin() + 1, cf.normals[i].end());
        f.rhs = -cf.normals[i][0];
        f.points = cf.incidence[i];
        out.push_back(std::move(f));
    }
    return out;
}

struct LatticeFace {
    DynBitset elements;  // rays or vertices in the face
    DynBitset facets;    // facets containing the face
};

// Nonempty faces of a polyhedral cone or polytope given the incidence of its
// generators with its facets, grouped by codimension (index 0 is the whole
// object). Faces with an empty generator set are not listed.
inline std::vector<std::vector<LatticeFace>> face_lattice(std::size_t generators, const std::vector<DynBitset>& facet_members) {
    std::size_t nf = facet_members.size();
    std::vector<std::vector<LatticeFace>> levels;
    levels.push_back({{DynBitset::full(generators), DynBitset(nf)}});
    for (;;) {
        std::vector<LatticeFace> next;
        std::unordered_set<DynBitset, DynBitsetHash> seen;
        for (const auto& F : levels.back()) {
            std::vector<DynBitset> cand;
            for (std::size_t j = 0; j < nf; ++j) {
                if (F.facets.test(j)) continue;
                DynBitset g = F.elements & facet_members[j];
                if (g.none()) continue;
                cand.push_back(std::move(g));
            }
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            for (std::size_t a = 0; a < cand.size(); ++a) {
                bool maximal = true;
                for (std::size_t b = 0; b < cand.size() && maximal; ++b)
                    if (a != b && cand[a].subset_of(cand[b])) maximal = false;
                if (!maximal || !seen.insert(cand[a]).second) continue;
                DynBitset fs(nf);
                for (std::size_t j = 0; j < nf; ++j)
                    if (cand[a].subset_of(facet_members[j])) fs.set(j);
                next.push_back({cand[a], std::move(fs)});
            }
        }
        if (next.empty()) break;
        levels.push_back(std::move(next));
    }
    return levels;
}

// f-vector (f_0, ..., f_{d-1}) of a polytope from vertex-facet incidences.
inline std::vector<std::size_t> polytope_fvector(std::size_t vertices, const std::vector<DynBitset>& facet_members) {
    auto levels = face_lattice(vertices, facet_members);
    // levels[0] is the polytope itself, the last level holds the vertices.
    std::vector<std::size_t> f;
    for (std::size_t c = levels.size(); c-- > 1;) f.push_back(levels[c].size());
    return f;
}

}  // namespace hypercube

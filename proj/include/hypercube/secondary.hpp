#pragma once

// Principal determinants and secondary polytopes of the 3-cube and 4-cube.

#include "hypercube/cones.hpp"
#include "hypercube/cube.hpp"
#include "hypercube/hyperdet.hpp"
#include "hypercube/polytope.hpp"
#include "hypercube/triangulation.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hypercube {

// Reference data for the 3-cube.
struct TriangulationType {
    int type;
    int coefficient;
    std::array<int, 8> gkz;
    int orbit_size;
};

inline const std::array<TriangulationType, 6>& three_cube_types() {
    static const std::array<TriangulationType, 6> t{{
        {1, -4, {1, 5, 5, 1, 5, 1, 1, 5}, 2},
        {2, -1, {1, 4, 4, 3, 6, 1, 1, 4}, 8},
        {3, 1, {1, 3, 4, 4, 6, 2, 1, 3}, 24},
        {4, 1, {1, 3, 3, 5, 5, 3, 3, 1}, 12},
        {5, -1, {1, 3, 3, 5, 6, 2, 2, 2}, 24},
        {6, 1, {2, 2, 2, 6, 6, 2, 2, 2}, 4},
    }};
    return t;
}

// Irredundant inequalities of the 3-cube secondary polytope.
inline std::vector<Inequality> three_cube_secondary_inequalities() {
    std::vector<Inequality> out;
    auto unit = [](std::initializer_list<std::uint32_t> labels) {
        IntVector v(8, 0);
        for (auto l : labels) v[l] = 1;
        return v;
    };
    for (std::uint32_t l = 0; l < 8; ++l) out.push_back({unit({l}), Sense::GE, 1});
    for (std::uint32_t l = 0; l < 8; ++l) out.push_back({unit({l}), Sense::LE, 6});
    for (auto [a, b] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0b000, 0b001}, {0b000, 0b010}, {0b000, 0b100},
                                                                          {0b001, 0b011}, {0b010, 0b011}, {0b001, 0b101}})
        out.push_back({unit({a, b}), Sense::GE, 4});
    return out;
}

// A x for every GKZ vector of the n-cube.
inline IntVector gkz_degrees(int n) {
    std::int64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    IntVector d(n + 1, fact * (n + 1) / 2);
    d[0] = fact * (n + 1);
    return d;
}

// Quadratic minors of the 2-faces: for free coordinates i < j and fixed
// values elsewhere, c_{..0..0..} c_{..1..1..} - c_{..0..1..} c_{..1..0..}.
inline std::vector<std::array<std::uint32_t, 4>> square_faces(int n) {
    std::vector<std::array<std::uint32_t, 4>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint32_t bi = 1u << (n - 1 - i), bj = 1u << (n - 1 - j);
            for (std::uint32_t base = 0; base < (1u << n); ++base) {
                if (base & (bi | bj)) continue;
                out.push_back({base, base | bj, base | bi, base | bi | bj});
            }
        }
    return out;
}

inline Polynomial square_minor(const std::array<std::uint32_t, 4>& f, std::size_t arity) {
    return subtract(mul(Polynomial::variable(arity, f[0]), Polynomial::variable(arity, f[3])),
                    mul(Polynomial::variable(arity, f[1]), Polynomial::variable(arity, f[2])));
}

// Labels of the 3-dimensional faces of the 4-cube: coordinate k fixed to v,
// listed in the order of the 3-bit labels of the face.
inline std::vector<std::vector<std::uint32_t>> cube_facets_of_4cube() {
    std::vector<std::vector<std::uint32_t>> out;
    for (int k = 0; k < 4; ++k)
        for (std::uint32_t v = 0; v < 2; ++v) {
            std::vector<std::uint32_t> labels;
            for (std::uint32_t l = 0; l < 8; ++l) {
                int shift = 3 - k;  // position of coordinate k among the 4 bits
                std::uint32_t high = (l >> shift) << (shift + 1), low = l & ((1u << shift) - 1);
                labels.push_back(high | v << shift | low);
            }
            out.push_back(std::move(labels));
        }
    return out;
}

inline Polynomial build_E222() {
    Polynomial e = build_D222();
    for (const auto& f : square_faces(3)) e = mul(e, square_minor(f, 8));
    for (std::uint32_t l = 0; l < 8; ++l) e = mul(e, Polynomial::variable(8, l));
    return e;
}

struct ThreeCubeTypeCheck {
    int type = 0;
    ExponentVector representative;
    Integer coefficient;
    std::size_t orbit_size = 0;
    bool matches = false;
};

struct SecondaryPolytope3 {
    std::size_t terms = 0;
    std::vector<ExponentVector> vertices;
    std::vector<ThreeCubeTypeCheck> types;
    std::vector<std::size_t> fvector;
    std::vector<GaugedInequality> facets;
    bool facets_match = false;           // equal to the reference system
    std::size_t triangulations = 0;      // from the flip graph
    bool gkz_vertices_match = false;     // triangulation GKZ vectors = vertices
    std::vector<std::size_t> d_class_sizes;  // ascending

    bool ok() const {
        if (terms != 231 || vertices.size() != 74 || types.size() != 6) return false;
        for (const auto& t : types)
            if (!t.matches) return false;
        return fvector == std::vector<std::size_t>{74, 152, 100, 22} && facets_match && triangulations == 74 && gkz_vertices_match &&
               d_class_sizes == std::vector<std::size_t>{1, 1, 18, 18, 18, 18};
    }
};

inline std::vector<IntVector> to_int_points(const std::vector<ExponentVector>& pts, std::size_t arity) {
    std::vector<IntVector> out;
    for (const auto& p : pts) {
        IntVector v(arity);
        for (std::size_t i = 0; i < arity; ++i) v[i] = p[i];
        out.push_back(std::move(v));
    }
    return out;
}

inline SecondaryPolytope3 secondary_polytope_3cube() {
    SecondaryPolytope3 out;
    Polynomial E = build_E222();
    out.terms = E.size();
    PointCloud cloud;
    cloud.points = E.support();
    cloud.arity = 8;
    cloud.symmetry = 3;
    cloud.equations = cube_matrix(3);
    cloud.eq_rhs = {24, 12, 12, 12};
    out.vertices = vertices_brute_force(cloud);

    std::map<ExponentVector, std::size_t> orbit_sizes;
    for (const auto& v : out.vertices) orbit_sizes[canonicalize(v, 3).representative]++;
    for (const auto& ref : three_cube_types()) {
        ThreeCubeTypeCheck c;
        c.type = ref.type;
        c.representative = canonicalize(ExponentVector::from(std::vector<int>(ref.gkz.begin(), ref.gkz.end())), 3).representative;
        auto it = orbit_sizes.find(c.representative);
        c.orbit_size = it == orbit_sizes.end() ? 0 : it->second;
        c.coefficient = E.coefficient(ExponentVector::from(std::vector<int>(ref.gkz.begin(), ref.gkz.end())));
        c.matches = c.orbit_size == static_cast<std::size_t>(ref.orbit_size) && c.coefficient == Integer(ref.coefficient);
        out.types.push_back(c);
    }

    auto pts = to_int_points(out.vertices, 8);
    auto facets = polytope_facets(pts);
    std::vector<DynBitset> members;
    for (const auto& f : facets) members.push_back(f.points);
    out.fvector = polytope_fvector(pts.size(), members);
    IntVector deg = gkz_degrees(3);
    std::set<GaugedInequality> found, expected;
    for (const auto& f : facets) found.insert(gauge({f.normal, Sense::GE, f.rhs}, 3, deg));
    for (const auto& f : three_cube_secondary_inequalities()) expected.insert(gauge(f, 3, deg));
    out.facets.assign(found.begin(), found.end());
    out.facets_match = found == expected;

    EnumerationOptions opt;
    opt.up_to_symmetry = false;
    auto census = enumerate_triangulations(3, opt);
    out.triangulations = census.total();
    std::set<IntVector> gkz, verts;
    for (const auto& o : census.orbits) gkz.insert(o.gkz);
    for (const auto& p : pts) verts.insert(p);
    out.gkz_vertices_match = gkz == verts;

    Polynomial D = build_D222();
    PointCloud dcloud{D.support(), 8, 3, cube_matrix(3), {4, 2, 2, 2}};
    auto dverts = vertices_brute_force(dcloud);
    std::map<ExponentVector, std::size_t> classes;
    for (const auto& o : census.orbits) {
        auto cert = is_regular(Subdivision{3, o.cells, std::nullopt});
        classes[d_equivalence_class(cert.weight, dverts, 3, &D).vertex]++;
    }
    for (const auto& [v, c] : classes) out.d_class_sizes.push_back(c);
    std::sort(out.d_class_sizes.begin(), out.d_class_sizes.end());
    return out;
}

// Factors of the principal determinant, each kept as the vertex set of its
// Newton polytope; the product is never expanded.
struct PrincipalFactor {
    std::string name;
    int degree = 0;
    std::vector<ExponentVector> vertices;
};

struct PrincipalFactorList {
    int n = 0;
    std::vector<PrincipalFactor> factors;

    int total_degree() const {
        int d = 0;
        for (const auto& f : factors) d += f.degree;
        return d;
    }
};

// top_vertices: vertices of the Newton polytope of the 2x2x2x2 hyperdeterminant.
inline PrincipalFactorList principal_factors_4cube(const std::vector<ExponentVector>& top_vertices) {
    PrincipalFactorList out;
    out.n = 4;
    for (std::uint32_t l = 0; l < 16; ++l) {
        ExponentVector e;
        e.set(l, 1);
        out.factors.push_back({"c" + label_string(4, l), 1, {e}});
    }
    for (const auto& f : square_faces(4)) {
        ExponentVector a, b;
        a.set(f[0], 1);
        a.set(f[3], 1);
        b.set(f[1], 1);
        b.set(f[2], 1);
        out.factors.push_back({"minor " + cell_string(4, mask_of({f[0], f[1], f[2], f[3]})), 2, {a, b}});
    }
    Polynomial d222 = build_D222();
    PointCloud c3{d222.support(), 8, 3, cube_matrix(3), {4, 2, 2, 2}};
    auto v3 = vertices_brute_force(c3);
    for (const auto& labels : cube_facets_of_4cube()) {
        PrincipalFactor f{"2x2x2 hyperdeterminant on " + cell_string(4, mask_of(labels)), 4, {}};
        for (const auto& v : v3) {
            ExponentVector e;
            for (std::size_t i = 0; i < 8; ++i) e.set(labels[i], v[i]);
            f.vertices.push_back(e);
        }
        out.factors.push_back(std::move(f));
    }
    out.factors.push_back({"2x2x2x2 hyperdeterminant", 24, top_vertices});
    return out;
}

struct FactorwiseMinimum {
    IntVector exponent_sum;            // sum of the minimizing exponents
    std::int64_t value = 0;            // <w, exponent_sum>
    std::vector<std::string> tied;     // factors whose minimum is not unique
    bool generic() const { return tied.empty(); }
};

inline FactorwiseMinimum minimize_factorwise(const PrincipalFactorList& list, const IntVector& w) {
    std::size_t N = std::size_t{1} << list.n;
    FactorwiseMinimum out;
    out.exponent_sum.assign(N, 0);
    for (const auto& f : list.factors) {
        const ExponentVector* best = nullptr;
        i128 low = 0;
        int count = 0;
        for (const auto& v : f.vertices) {
            i128 s = 0;
            for (std::size_t l = 0; l < N; ++l) s += static_cast<i128>(w[l]) * v[l];
            if (!best || s < low) {
                best = &v;
                low = s;
                count = 1;
            } else if (s == low) ++count;
        }
        if (count > 1) out.tied.push_back(f.name);
        for (std::size_t l = 0; l < N; ++l) out.exponent_sum[l] += (*best)[l];
    }
    for (std::size_t l = 0; l < N; ++l) out.value += w[l] * out.exponent_sum[l];
    return out;
}

struct CellReport {
    CellMask labels = 0;
    std::int64_t volume = 0;
    std::vector<std::size_t> fvector;
};

struct CoarsestSubdivisionReport {
    IntVector weight;
    Subdivision subdivision;
    std::vector<CellReport> cells;
    TightSpan span;
    Inequality inequality;  // supporting inequality, minimum of <w, x> attained on the face
};

struct TrivialSubdivision : std::invalid_argument {
    TrivialSubdivision() : std::invalid_argument("weight induces the trivial subdivision") {}
};

inline std::vector<std::size_t> cell_fvector(int n, CellMask cell) {
    const auto& cfg = cube_configuration(n);
    std::vector<IntVector> pts;
    for (auto l : labels_of(cell)) pts.emplace_back(cfg.column(l).begin() + 1, cfg.column(l).end());
    auto facets = polytope_facets(pts);
    std::vector<DynBitset> members;
    for (const auto& f : facets) members.push_back(f.points);
    return polytope_fvector(pts.size(), members);
}

// A triangulation refining the regular subdivision of w.
inline Subdivision generic_refinement(int n, const IntVector& w) {
    IntVector place = detail::placing_heights(n);
    std::int64_t scale = place.back() * 16;
    std::int64_t bound = std::numeric_limits<std::int64_t>::max() / 4 / scale;
    IntVector v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (std::abs(w[i]) > bound) throw std::overflow_error("weight too large to perturb");
        v[i] = w[i] * scale + place[i];
    }
    return regular_subdivision(n, v);
}

// w is minimized over the secondary polytope on the face of its regular
// subdivision; the right-hand side is read off from a refining triangulation.
inline CoarsestSubdivisionReport coarsest_subdivision_report(int n, const IntVector& w) {
    CoarsestSubdivisionReport rep;
    rep.weight = w;
    rep.subdivision = regular_subdivision(n, w);
    if (rep.subdivision.cells.size() < 2) throw TrivialSubdivision();
    for (auto c : rep.subdivision.cells) rep.cells.push_back({c, cell_volume(n, c), cell_fvector(n, c)});
    rep.span = tight_span(rep.subdivision);
    Subdivision fine = generic_refinement(n, w);
    for (auto c : fine.cells) {
        bool inside = false;
        for (auto d : rep.subdivision.cells) inside |= (c & d) == c;
        if (!inside) throw std::logic_error("perturbed triangulation does not refine the subdivision");
    }
    IntVector g = gkz_vector(fine);
    rep.inequality = {w, Sense::GE, dot(w, g)};
    return rep;
}

inline CoarsestSubdivisionReport coarsest_subdivision_report(int n, const Inequality& f) {
    IntVector w = f.normal;
    if (f.sense == Sense::LE)
        for (auto& x : w) x = -x;
    auto rep = coarsest_subdivision_report(n, w);
    if (f.sense == Sense::LE) rep.inequality = {f.normal, Sense::LE, -rep.inequality.rhs};
    return rep;
}

struct SecondaryFacetOrbit {
    GaugedInequality representative;  // lex-min gauged image
    std::size_t orbit_size = 0;
    Subdivision subdivision;
    TightSpan span;
};

struct CoarsestSubdivisionCensus {
    int n = 0;
    std::vector<SecondaryFacetOrbit> orbits;
    std::size_t facets = 0;
    std::size_t tangent_cones = 0;
};

// Facets of the secondary polytope from the tangent cones at the orbit
// representatives of a triangulation census: generators are GKZ differences
// along flips to regular neighbours.
inline CoarsestSubdivisionCensus secondary_facets_via_tangent_cones(const TriangulationCensus& census, int jobs = 1) {
    int n = census.n;
    std::size_t N = std::size_t{1} << n;
    IntVector deg = gkz_degrees(n);
    std::vector<std::vector<Inequality>> per(census.orbits.size());
    parallel_for(census.orbits.size(), jobs, [&](std::size_t i) {
        const auto& o = census.orbits[i];
        Subdivision t{n, o.cells, std::nullopt};
        IntVector g = gkz_vector(t);
        std::vector<IntVector> gens;
        for (auto& f : flips(t)) {
            if (!is_regular(f.result).regular) continue;
            IntVector h = gkz_vector(f.result);
            for (std::size_t l = 0; l < N; ++l) h[l] -= g[l];
            gens.push_back(std::move(h));
        }
        for (auto& nrm : cone_facets(gens, N).normals) per[i].push_back({nrm, Sense::GE, dot(nrm, g)});
    });
    std::map<GaugedInequality, std::size_t> reps;  // canonical -> orbit size
    const auto& G = cube_group(n);
    for (const auto& list : per)
        for (const auto& f : list) {
            std::set<GaugedInequality> images;
            for (std::size_t e = 0; e < G.order(); ++e) images.insert(gauge(act_on_inequality(G, e, f), n, deg));
            reps.emplace(*images.begin(), images.size());
        }
    CoarsestSubdivisionCensus out;
    out.n = n;
    out.tangent_cones = census.orbits.size();
    for (const auto& [rep, size] : reps) {
        SecondaryFacetOrbit o;
        o.representative = rep;
        o.orbit_size = size;
        o.subdivision = regular_subdivision(n, rep.normal);
        o.span = tight_span(o.subdivision);
        out.facets += size;
        out.orbits.push_back(std::move(o));
    }
    return out;
}

}  // namespace hypercube

#pragma once

// The Newton polytope of the 2x2x2x2 hyperdeterminant: facet system,
// vertex census, face dimensions, lattice points, tangent cones and the
// global f-vector.

#include "hypercube/cones.hpp"
#include "hypercube/cube.hpp"
#include "hypercube/newton_data.hpp"
#include "hypercube/polynomial.hpp"
#include "hypercube/polytope.hpp"
#include "hypercube/symmetry.hpp"

#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hypercube::newton {

inline constexpr int kCube = 4;
inline constexpr std::size_t kArity = 16;

inline const IntVector& degrees() {
    static const IntVector h{24, 12, 12, 12, 12};
    return h;
}

inline ExponentVector to_exponent(const std::array<int, 16>& a) { return ExponentVector::from(std::vector<int>(a.begin(), a.end())); }

inline Inequality class_inequality(const FacetClass& f) {
    return {IntVector(f.normal.begin(), f.normal.end()), f.sense, f.rhs};
}

struct FacetSystem {
    HPolytope polytope;
    std::vector<int> class_of;                 // facet class id per inequality
    std::vector<GaugedInequality> gauged;      // per inequality
};

inline const FacetSystem& facet_system() {
    static const FacetSystem sys = [] {
        FacetSystem s;
        s.polytope.ambient = kArity;
        s.polytope.equations = cube_matrix(kCube);
        s.polytope.eq_rhs = degrees();
        for (const auto& c : facet_classes())
            for (auto& f : expand_inequality_orbit(class_inequality(c), kCube, degrees())) {
                s.gauged.push_back(gauge(f, kCube, degrees()));
                s.polytope.inequalities.push_back(std::move(f));
                s.class_of.push_back(c.id);
            }
        return s;
    }();
    return sys;
}

// Lex-min gauged image of an inequality under B4.
inline GaugedInequality canonical_inequality(const Inequality& f) {
    const CubeGroup& G = cube_group(kCube);
    GaugedInequality best = gauge(f, kCube, degrees());
    for (std::size_t g = 1; g < G.order(); ++g) best = std::min(best, gauge(act_on_inequality(G, g, f), kCube, degrees()));
    return best;
}

namespace detail {

// Incremental rank of integer rows kept in echelon form.
class RowSpan {
public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}
    bool add(IntVector r) {
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            std::size_t p = pivot_[b];
            if (!r[p]) continue;
            std::int64_t a = basis_[b][p], c = r[p];
            std::int64_t g = std::gcd(a, c);
            a /= g;
            c /= g;
            for (std::size_t j = 0; j < cols_; ++j) r[j] = a * r[j] - c * basis_[b][j];
            if (std::int64_t h = gcd_of(r); h > 1)
                for (auto& x : r) x /= h;
        }
        std::size_t p = 0;
        while (p < cols_ && !r[p]) ++p;
        if (p == cols_) return false;
        basis_.push_back(std::move(r));
        pivot_.push_back(p);
        return true;
    }
    std::size_t rank() const { return basis_.size(); }

private:
    std::size_t cols_;
    std::vector<IntVector> basis_;
    std::vector<std::size_t> pivot_;
};

}  // namespace detail

struct FacetClassCheck {
    int id = 0;
    std::size_t members = 0;
    std::size_t expected_members = 0;
    std::size_t tight_rank_failures = 0;  // facets whose tight points do not span a hyperplane
    bool irredundant = false;
};

struct FacetVerification {
    std::vector<FacetClassCheck> classes;
    std::size_t total = 0;
    std::vector<std::string> violations;
    double irredundancy_seconds = 0;
    bool ok() const {
        if (total != 268 || !violations.empty()) return false;
        for (const auto& c : classes)
            if (c.members != c.expected_members || c.tight_rank_failures || !c.irredundant) return false;
        return true;
    }
};

// Inequality i is irredundant when minimizing its oriented normal over the
// system without it goes below its right-hand side.
inline bool irredundant(const HPolytope& P, std::size_t i) {
    LinearProgram lp;
    lp.vars = P.ambient;
    for (std::size_t r = 0; r < P.equations.size(); ++r) lp.rows.push_back({P.equations[r], Sense::EQ, P.eq_rhs[r]});
    for (std::size_t j = 0; j < P.inequalities.size(); ++j) {
        if (j == i) continue;
        const auto& f = P.inequalities[j];
        lp.rows.push_back({f.normal, f.sense, f.rhs});
    }
    lp.free_var.assign(P.ambient, true);
    const auto& f = P.inequalities[i];
    lp.objective = f.normal;
    lp.maximize = f.sense == Sense::LE;
    LpSolution s = solve(lp);
    if (s.status == LpStatus::Unbounded) return true;
    if (s.status != LpStatus::Optimal) return false;
    return f.sense == Sense::LE ? s.objective > f.rhs : s.objective < f.rhs;
}

// Checks the 268 facets against the given points (all of which must satisfy
// them), the hyperplane spanned by the tight points of each facet, and
// irredundancy of one representative per class.
inline FacetVerification verify_facet_classes(const std::vector<ExponentVector>& points, bool with_lp = true) {
    const FacetSystem& sys = facet_system();
    const auto& P = sys.polytope;
    FacetVerification out;
    out.total = P.inequalities.size();
    for (const auto& c : facet_classes()) out.classes.push_back({c.id, 0, static_cast<std::size_t>(c.orbit_size), 0, false});
    for (std::size_t i = 0; i < P.inequalities.size(); ++i) {
        const auto& f = P.inequalities[i];
        auto& cc = out.classes[sys.class_of[i] - 1];
        ++cc.members;
        detail::RowSpan span(kArity);
        for (const auto& p : points) {
            if (!f.satisfied_by(p)) {
                if (out.violations.size() < 20)
                    out.violations.push_back(to_string(f, kCube) + " fails at " + p.to_string(kArity));
                continue;
            }
            if (span.rank() < kArity - 5 && f.tight_at(p)) {
                IntVector r(kArity);
                for (std::size_t k = 0; k < kArity; ++k) r[k] = p[k];
                span.add(std::move(r));
            }
        }
        if (span.rank() != kArity - 5) ++cc.tight_rank_failures;
    }
    if (with_lp) {
        auto t0 = std::chrono::steady_clock::now();
        for (auto& cc : out.classes) {
            std::size_t first = 0;
            while (sys.class_of[first] != cc.id) ++first;
            cc.irredundant = irredundant(P, first);
        }
        out.irredundancy_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return out;
}

// Vertex classes.

struct VertexClass {
    ExponentVector exponent;
    Integer coefficient;
    std::size_t orbit_size = 0;
    std::vector<std::size_t> active;  // indices into facet_system()
    int table_index = -1;             // position in vertex_table(), or -1
    int listed_orbit_size = 0;
};

struct VertexDiscrepancy {
    int table_index;
    std::string what;
};

struct NewtonVertexCensus {
    std::vector<VertexClass> classes;
    std::size_t vertex_count = 0;
    std::vector<VertexDiscrepancy> discrepancies;
    std::map<long, int> coefficient_histogram;
};

inline int table_index_of(const ExponentVector& rep) {
    static const std::map<ExponentVector, int> index = [] {
        std::map<ExponentVector, int> m;
        for (std::size_t i = 0; i < vertex_table().size(); ++i) m[to_exponent(vertex_table()[i].exponent)] = static_cast<int>(i);
        return m;
    }();
    auto it = index.find(rep);
    return it == index.end() ? -1 : it->second;
}

// Joins a vertex census with the coefficients of the polynomial and with the
// reference table, recording every disagreement.
inline NewtonVertexCensus join_vertex_census(const VertexCensus& census, const Polynomial& D) {
    const auto& P = facet_system().polytope;
    NewtonVertexCensus out;
    out.vertex_count = census.vertex_count;
    std::vector<std::uint8_t> seen(vertex_table().size(), 0);
    for (const auto& o : census.orbits) {
        VertexClass v;
        v.exponent = o.representative;
        v.coefficient = D.coefficient(o.representative);
        v.orbit_size = o.size;
        v.active = P.active_set(o.representative);
        v.table_index = table_index_of(o.representative);
        ++out.coefficient_histogram[static_cast<long>(v.coefficient.small())];
        if (v.table_index < 0) {
            out.discrepancies.push_back({-1, "vertex " + v.exponent.to_string(kArity) + " is not in the table"});
        } else {
            const auto& row = vertex_table()[v.table_index];
            seen[v.table_index] = 1;
            v.listed_orbit_size = row.listed_orbit_size;
            if (v.coefficient != Integer(row.coefficient))
                out.discrepancies.push_back({v.table_index, "coefficient " + v.coefficient.to_string() + " vs listed " +
                                                                std::to_string(row.coefficient)});
            if (static_cast<int>(v.orbit_size) != row.listed_orbit_size)
                out.discrepancies.push_back({v.table_index, "orbit size " + std::to_string(v.orbit_size) + " vs listed " +
                                                                std::to_string(row.listed_orbit_size)});
        }
        out.classes.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) out.discrepancies.push_back({static_cast<int>(i), "table vertex not found"});
    return out;
}

// Face dimensions.

inline std::map<int, std::size_t> face_dimension_histogram(const std::vector<ExponentVector>& reps) {
    const auto& P = facet_system().polytope;
    std::map<int, std::size_t> h;
    for (const auto& r : reps) ++h[P.face_dimension(r)];
    return h;
}

// Lattice points.

struct LatticeCensus {
    std::size_t facet_tuples = 0;    // 8-tuples summing to 12 on the facet 0***
    std::size_t canonical_tuples = 0;
    std::size_t nonnegative = 0;
    std::size_t solved_all_zero = 0;  // non-negative completions whose four solved entries vanish
    std::size_t in_polytope = 0;
    std::vector<Orbit> orbits;
};

// Two disjoint edges of the facet 1*** whose four entries are enumerated.
struct ExtensionEdges {
    std::array<std::uint32_t, 2> first{0b1000, 0b1001};
    std::array<std::uint32_t, 2> second{0b1100, 0b1110};
};

// Lattice points of the Newton polytope up to symmetry. Every lattice point
// has an image whose restriction to the facet 0*** is lex-min under the
// stabilizer of that facet; such restrictions are completed by enumerating
// the entries on two edges of the opposite facet and solving for the rest.
inline LatticeCensus enumerate_lattice_points(int jobs = 1, const ExtensionEdges& edges = {}) {
    const auto& P = facet_system().polytope;
    const IntMatrix A = cube_matrix(kCube);
    std::array<std::uint32_t, 4> fixed{edges.first[0], edges.first[1], edges.second[0], edges.second[1]};
    std::vector<std::uint32_t> solved;
    for (std::uint32_t l = 8; l < 16; ++l)
        if (std::find(fixed.begin(), fixed.end(), l) == fixed.end()) solved.push_back(l);
    if (solved.size() != 4) throw std::invalid_argument("extension edges must be four distinct labels of the facet 1***");
    // Rows 1..4 of A restricted to the solved labels; row 0 agrees with row 1 there.
    IntMatrix M(4, IntVector(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) M[r][c] = A[r + 1][solved[c]];
    BigInt det = determinant(M);
    if (det == 0) throw std::invalid_argument("extension edges leave a singular system");
    std::int64_t D = static_cast<std::int64_t>(det);
    // Adjugate: column j of D * M^-1 solves M x = D e_j.
    IntMatrix adj(4, IntVector(4));
    for (int j = 0; j < 4; ++j) {
        RatVector e(4, 0);
        e[j] = Rational(D);
        auto x = solve_square(M, e);
        for (int i = 0; i < 4; ++i) adj[i][j] = static_cast<std::int64_t>(numerator((*x)[i]));
    }

    const CubeGroup& G3 = cube_group(3);
    LatticeCensus out;
    std::vector<std::vector<int>> canon;
    std::vector<int> t(8, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == 7) {
            t[7] = left;
            ++out.facet_tuples;
            if (G3.canonical_vector(t) == t) canon.push_back(t);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            t[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, 12);
    out.canonical_tuples = canon.size();

    std::vector<std::vector<ExponentVector>> found(canon.size());
    std::vector<std::size_t> nonneg(canon.size(), 0), zero(canon.size(), 0);
    parallel_for(canon.size(), jobs, [&](std::size_t i) {
        const auto& f = canon[i];
        ExponentVector x;
        std::array<std::int64_t, 4> base;
        for (int r = 0; r < 4; ++r) {
            base[r] = degrees()[r + 1];
            for (int l = 0; l < 8; ++l) base[r] -= A[r + 1][l] * f[l];
        }
        for (int l = 0; l < 8; ++l) x.set(l, f[l]);
        std::array<int, 4> v{};
        for (v[0] = 0; v[0] <= 12; ++v[0])
            for (v[1] = 0; v[0] + v[1] <= 12; ++v[1])
                for (v[2] = 0; v[0] + v[1] + v[2] <= 12; ++v[2])
                    for (v[3] = 0; v[0] + v[1] + v[2] + v[3] <= 12; ++v[3]) {
                        std::array<std::int64_t, 4> rhs = base;
                        for (int r = 0; r < 4; ++r)
                            for (int k = 0; k < 4; ++k) rhs[r] -= A[r + 1][fixed[k]] * v[k];
                        bool ok = true;
                        std::array<std::int64_t, 4> y{};
                        for (int a = 0; a < 4 && ok; ++a) {
                            std::int64_t s = 0;
                            for (int r = 0; r < 4; ++r) s += adj[a][r] * rhs[r];
                            if (s % D) ok = false;
                            y[a] = s / D;
                            if (y[a] < 0) ok = false;
                        }
                        if (!ok) continue;
                        ++nonneg[i];
                        if (!y[0] && !y[1] && !y[2] && !y[3]) ++zero[i];
                        for (int k = 0; k < 4; ++k) {
                            x.set(fixed[k], v[k]);
                            x.set(solved[k], static_cast<int>(y[k]));
                        }
                        if (P.contains(x)) found[i].push_back(x);
                    }
    });
    std::vector<ExponentVector> all;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        out.nonnegative += nonneg[i];
        out.solved_all_zero += zero[i];
        out.in_polytope += found[i].size();
        for (auto& x : found[i]) all.push_back(std::move(x));
    }
    std::map<ExponentVector, std::size_t> orbits;
    const CubeGroup& G = cube_group(kCube);
    for (const auto& x : all) {
        Orbit o = G.canonicalize(x);
        orbits.emplace(o.representative, o.size);
    }
    for (const auto& [r, s] : orbits) out.orbits.push_back({r, s});
    return out;
}

// Tangent cones.

struct TangentCone {
    ExponentVector vertex;
    std::vector<std::size_t> active;      // facet indices
    std::vector<IntVector> rays;          // in the free coordinates
    std::vector<DynBitset> incidence;     // per ray: active facets (positions in `active`) containing it
    std::vector<ExponentVector> neighbours;  // far endpoint of each edge, in ray order
};

inline IntVector free_part(const IntVector& v) {
    IntVector out;
    for (auto l : free_labels(kCube)) out.push_back(v[l]);
    return out;
}

// Rays of the tangent cone at a vertex and the vertex reached along each.
inline TangentCone tangent_cone(const ExponentVector& v) {
    const FacetSystem& sys = facet_system();
    const auto& P = sys.polytope;
    TangentCone tc;
    tc.vertex = v;
    tc.active = P.active_set(v);
    std::vector<IntVector> rows;
    for (auto i : tc.active) rows.push_back(free_part(sys.gauged[i].normal));
    RayResult rr = extreme_rays(rows, kArity - 5);
    tc.rays = rr.rays;
    tc.incidence = rr.incidence;
    for (const auto& r : tc.rays) {
        IntVector d = lift_from_free(kCube, r);
        // Step to the first inactive facet that becomes tight.
        std::optional<Rational> step;
        for (std::size_t i = 0; i < P.inequalities.size(); ++i) {
            const auto& g = sys.gauged[i];
            std::int64_t nd = dot(g.normal, d);
            if (nd >= 0) continue;
            std::int64_t slack = 0;
            for (std::size_t k = 0; k < kArity; ++k) slack += g.normal[k] * static_cast<std::int64_t>(v[k]);
            slack -= g.rhs;
            Rational t(slack, -nd);
            if (!step || t < *step) step = t;
        }
        if (!step || *step <= 0) throw std::logic_error("tangent cone ray does not leave the vertex");
        ExponentVector u;
        for (std::size_t k = 0; k < kArity; ++k) {
            Rational x = Rational(static_cast<std::int64_t>(v[k])) + *step * d[k];
            if (denominator(x) != 1 || x < 0 || x > 255) throw std::logic_error("edge endpoint is not a lattice point");
            u.set(k, static_cast<int>(numerator(x)));
        }
        tc.neighbours.push_back(u);
    }
    return tc;
}

// Face counts of the tangent cone by dimension 1..11 (rays up to the cone).
inline std::vector<std::size_t> tangent_cone_face_counts(const TangentCone& tc) {
    std::vector<DynBitset> members(tc.active.size(), DynBitset(tc.rays.size()));
    for (std::size_t r = 0; r < tc.rays.size(); ++r)
        for (auto j : tc.incidence[r].indices()) members[j].set(r);
    auto levels = face_lattice(tc.rays.size(), members);
    std::vector<std::size_t> f(kArity - 5, 0);
    for (std::size_t c = 0; c < levels.size(); ++c) f[kArity - 5 - 1 - c] = levels[c].size();
    return f;
}

// Vertex-figure f-vector: faces of dimension 1..10 of the tangent cone.
inline std::vector<std::size_t> vertex_figure_fvector(const TangentCone& tc) {
    auto f = tangent_cone_face_counts(tc);
    f.pop_back();
    return f;
}

struct CompletenessReport {
    std::size_t edges_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Expands vertex orbit representatives into all vertices, sorted.
inline std::vector<ExponentVector> all_vertices(const std::vector<ExponentVector>& reps) {
    const CubeGroup& G = cube_group(kCube);
    std::vector<ExponentVector> out;
    for (const auto& r : reps)
        for (auto& x : G.orbit(r)) out.push_back(std::move(x));
    std::sort(out.begin(), out.end());
    return out;
}

// Every edge leaving a listed vertex ends at a listed vertex, so the listed
// set is the vertex set of the polytope cut out by the 268 inequalities.
inline CompletenessReport check_completeness(const std::vector<TangentCone>& cones, const std::vector<ExponentVector>& vertices) {
    CompletenessReport rep;
    for (const auto& tc : cones)
        for (const auto& u : tc.neighbours) {
            ++rep.edges_checked;
            if (!std::binary_search(vertices.begin(), vertices.end(), u))
                rep.failures.push_back("edge from " + tc.vertex.to_string(kArity) + " reaches unlisted " + u.to_string(kArity));
        }
    return rep;
}

struct FaceCounts {
    std::vector<Rational> global;                   // f_0 .. f_10 of the polytope
    std::array<std::vector<Rational>, 8> by_class;  // f_0 .. f_9 of one facet per class
};

// f-vectors from the tangent cones of orbit representatives: a face of
// dimension k through v is counted with weight 1/f0(face), and orbit sizes
// account for the other vertices. For a facet class, faces lying in members
// of the class are counted and divided by the class size.
inline FaceCounts face_counts(const std::vector<TangentCone>& cones, const std::vector<std::size_t>& orbit_sizes,
                              const std::vector<ExponentVector>& vertices, int jobs = 1) {
    const FacetSystem& sys = facet_system();
    const auto& P = sys.polytope;
    std::vector<DynBitset> facet_vertices(P.inequalities.size(), DynBitset(vertices.size()));
    for (std::size_t i = 0; i < P.inequalities.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (P.inequalities[i].tight_at(vertices[j])) facet_vertices[i].set(j);
    const std::size_t dim = kArity - 5;
    struct Part {
        std::vector<Rational> global;
        std::array<std::vector<Rational>, 8> by_class;
    };
    std::vector<Part> part(cones.size());
    parallel_for(cones.size(), jobs, [&](std::size_t c) {
        const auto& tc = cones[c];
        Part& out = part[c];
        out.global.assign(dim, 0);
        for (auto& v : out.by_class) v.assign(dim - 1, 0);
        std::vector<DynBitset> members(tc.active.size(), DynBitset(tc.rays.size()));
        for (std::size_t r = 0; r < tc.rays.size(); ++r)
            for (auto j : tc.incidence[r].indices()) members[j].set(r);
        auto levels = face_lattice(tc.rays.size(), members);
        Rational size(static_cast<std::int64_t>(orbit_sizes[c]));
        auto count = [&](std::size_t k, std::size_t f0, const std::vector<std::size_t>& facets) {
            Rational q = size / Rational(static_cast<std::int64_t>(f0));
            out.global[k] += q;
            if (k + 1 < dim)
                for (auto j : facets) out.by_class[sys.class_of[tc.active[j]] - 1][k] += q;
        };
        std::vector<std::size_t> all(tc.active.size());
        std::iota(all.begin(), all.end(), 0);
        count(0, 1, all);
        for (std::size_t lev = 1; lev < levels.size(); ++lev) {
            std::size_t k = dim - lev;
            for (const auto& F : levels[lev]) {
                auto facets = F.facets.indices();
                DynBitset acc = DynBitset::full(vertices.size());
                for (auto j : facets) acc = acc & facet_vertices[tc.active[j]];
                count(k, acc.count(), facets);
            }
        }
    });
    FaceCounts f;
    f.global.assign(dim, 0);
    for (auto& v : f.by_class) v.assign(dim - 1, 0);
    for (const auto& p : part) {
        for (std::size_t k = 0; k < dim; ++k) f.global[k] += p.global[k];
        for (std::size_t c = 0; c < 8; ++c)
            for (std::size_t k = 0; k + 1 < dim; ++k) f.by_class[c][k] += p.by_class[c][k];
    }
    for (std::size_t c = 0; c < 8; ++c)
        for (auto& x : f.by_class[c]) x /= facet_classes()[c].orbit_size;
    return f;
}

inline std::vector<Rational> global_fvector(const std::vector<TangentCone>& cones, const std::vector<std::size_t>& orbit_sizes,
                                            const std::vector<ExponentVector>& vertices, int jobs = 1) {
    return face_counts(cones, orbit_sizes, vertices, jobs).global;
}

// A weight attaining its minimum over a support more than once.
struct NonGenericWeight : std::invalid_argument {
    std::vector<ExponentVector> tied;
    explicit NonGenericWeight(std::vector<ExponentVector> t)
        : std::invalid_argument("weight is minimized at " + std::to_string(t.size()) + " exponents"), tied(std::move(t)) {}
};

}  // namespace hypercube::newton

#include "hypercube/cones.hpp"
#include "hypercube/cube.hpp"
#include "hypercube/hyperdet.hpp"
#include "hypercube/newton.hpp"
#include "hypercube/polytope.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hypercube;

namespace {

// Points of a simplex slice {x >= 0, sum x = s}, randomly thinned.
PointCloud random_cloud(std::mt19937_64& rng, std::size_t arity, int s, int keep) {
    PointCloud c;
    c.arity = arity;
    c.equations = {IntVector(arity, 1)};
    c.eq_rhs = {s};
    for (int i = 0; i < keep; ++i) {
        ExponentVector e;
        int left = s;
        for (std::size_t k = 0; k + 1 < arity; ++k) {
            int v = static_cast<int>(rng() % (left + 1));
            e.set(k, v);
            left -= v;
        }
        e.set(arity - 1, left);
        c.points.push_back(e);
    }
    return c;
}

}  // namespace

TEST(PropertyHull, OrbitSweepAgreesWithBruteForce) {
    std::mt19937_64 rng(41);
    for (int r = 0; r < 12; ++r) {
        PointCloud c = random_cloud(rng, 4, 6, 25);
        auto brute = vertices_brute_force(c);
        HullOptions opt;
        opt.chunk = 7;
        auto census = vertices_of_point_cloud(c, opt);
        std::vector<ExponentVector> fast;
        for (const auto& o : census.orbits) fast.push_back(o.representative);
        std::sort(fast.begin(), fast.end());
        EXPECT_EQ(fast, brute);
        EXPECT_EQ(census.vertex_count, brute.size());
    }
}

TEST(PropertyHull, VerticesAgreeWithFacetEnumeration) {
    std::mt19937_64 rng(42);
    for (int r = 0; r < 8; ++r) {
        PointCloud c = random_cloud(rng, 4, 5, 15);
        auto brute = vertices_brute_force(c);
        std::sort(c.points.begin(), c.points.end());
        c.points.erase(std::unique(c.points.begin(), c.points.end()), c.points.end());
        std::vector<IntVector> pts;
        for (const auto& p : c.points) pts.push_back({p[0], p[1], p[2]});
        auto facets = polytope_facets(pts);
        // A point is a vertex when the facets through it meet only there.
        std::size_t vertices = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            IntMatrix tight;
            for (const auto& f : facets)
                if (f.points.test(i)) tight.push_back(f.normal);
            if (!tight.empty() && rank(tight) == 3) ++vertices;
        }
        EXPECT_EQ(vertices, brute.size());
    }
}

TEST(Hull, SymmetricCloudOfTheThreeCubeHyperdeterminant) {
    Polynomial d = build_D222();
    PointCloud c{d.support(), 8, 3, cube_matrix(3), {4, 2, 2, 2}};
    auto census = vertices_of_point_cloud(c);
    auto brute = vertices_brute_force(c);
    EXPECT_EQ(census.vertex_count, brute.size());
    EXPECT_EQ(census.vertex_count, 6u);
    std::size_t total = 0;
    for (const auto& o : census.orbits) total += o.size;
    EXPECT_EQ(total, census.vertex_count);
}

TEST(Hull, RejectsInconsistentInput) {
    PointCloud c;
    c.arity = 2;
    c.points = {ExponentVector{1, 1}, ExponentVector{2, 1}};
    c.equations = {{1, 1}};
    c.eq_rhs = {2};
    EXPECT_THROW(vertices_of_point_cloud(c), std::invalid_argument);
}

TEST(PropertyInequality, TextRoundTrip) {
    std::mt19937_64 rng(43);
    for (int r = 0; r < 100; ++r) {
        Inequality f;
        f.normal.assign(16, 0);
        for (auto& x : f.normal)
            if (rng() % 3 == 0) x = static_cast<std::int64_t>(rng() % 9) - 4;
        f.sense = std::array{Sense::GE, Sense::LE, Sense::EQ}[rng() % 3];
        f.rhs = static_cast<std::int64_t>(rng() % 41) - 20;
        if (std::all_of(f.normal.begin(), f.normal.end(), [](auto x) { return x == 0; })) continue;
        EXPECT_EQ(parse_inequality(to_string(f, 4), 4), f);
    }
    EXPECT_EQ(parse_inequality("2*x01 - x10>=-3", 2), (Inequality{{0, 2, -1, 0}, Sense::GE, -3}));
    EXPECT_THROW(parse_inequality("x01 > 3", 2), std::invalid_argument);
    EXPECT_THROW(parse_inequality("x011 >= 3", 2), std::invalid_argument);
    EXPECT_THROW(parse_inequality("x01 + 1", 2), std::invalid_argument);
}

TEST(PropertyInequality, GaugeIsInvariantUnderLinealityAndSymmetry) {
    std::mt19937_64 rng(44);
    const IntVector& deg = newton::degrees();
    IntMatrix A = cube_matrix(4);
    for (int r = 0; r < 40; ++r) {
        Inequality f{IntVector(16, 0), Sense::GE, static_cast<std::int64_t>(rng() % 11) - 5};
        for (auto& x : f.normal) x = static_cast<std::int64_t>(rng() % 7) - 3;
        // Adding a row of A to the normal and its degree to the rhs.
        std::size_t k = rng() % A.size();
        std::int64_t t = static_cast<std::int64_t>(rng() % 5) - 2;
        Inequality g = f;
        for (std::size_t i = 0; i < 16; ++i) g.normal[i] += t * A[k][i];
        g.rhs += t * deg[k];
        EXPECT_EQ(gauge(f, 4, deg), gauge(g, 4, deg));
        Inequality h{f.normal, Sense::LE, f.rhs};
        for (auto& x : h.normal) x = -x;
        h.rhs = -h.rhs;
        EXPECT_EQ(gauge(f, 4, deg), gauge(h, 4, deg));
        // The orbit of a gauged inequality divides the group order.
        EXPECT_EQ(384 % expand_inequality_orbit(f, 4, deg).size(), 0u);
    }
}

TEST(Newton, FacetSystemHas268Inequalities) {
    const auto& sys = newton::facet_system();
    EXPECT_EQ(sys.polytope.inequalities.size(), 268u);
    std::size_t total = 0;
    for (const auto& fc : newton::facet_classes()) total += fc.orbit_size;
    EXPECT_EQ(total, 268u);
    EXPECT_EQ(sys.polytope.dimension(), 11);
}

TEST(Newton, DistinguishedVertexFigure) {
    auto tc = newton::tangent_cone(newton::to_exponent(newton::distinguished_vertex()));
    EXPECT_EQ(tc.active.size(), 56u);
    auto fv = newton::vertex_figure_fvector(tc);
    auto expected = newton::distinguished_vertex_figure();
    EXPECT_EQ(std::vector<std::size_t>(fv.begin(), fv.end()), std::vector<std::size_t>(expected.begin(), expected.end()));
}

TEST(Newton, ActiveSetOutsideThrows) {
    ExponentVector bad;
    bad.set(0, 24);
    EXPECT_THROW(newton::facet_system().polytope.active_set(bad), OutsidePolytope);
}

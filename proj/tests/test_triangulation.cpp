#include "hypercube/hyperdet.hpp"
#include "hypercube/triangulation.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace hypercube;

namespace {

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

IntVector random_weight(std::mt19937_64& rng, int n, int bound = 1000) {
    IntVector w(std::size_t{1} << n);
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
    return w;
}

std::vector<ExponentVector> three_cube_vertices() {
    Polynomial d = build_D222();
    return vertices_brute_force(PointCloud{d.support(), 8, 3, cube_matrix(3), {4, 2, 2, 2}});
}

}  // namespace

TEST(PropertyTriangulation, VolumeIsConserved) {
    std::mt19937_64 rng(51);
    for (int n : {2, 3, 4})
        for (int r = 0; r < 30; ++r) {
            auto s = regular_subdivision(n, random_weight(rng, n));
            EXPECT_EQ(total_volume(s), factorial(n));
        }
}

TEST(PropertyTriangulation, GkzSums) {
    std::mt19937_64 rng(52);
    for (int n : {3, 4})
        for (int r = 0; r < 30; ++r) {
            auto t = regular_subdivision(n, random_weight(rng, n));
            if (!t.is_triangulation()) continue;
            IntVector g = gkz_vector(t);
            std::int64_t total = std::accumulate(g.begin(), g.end(), std::int64_t{0});
            EXPECT_EQ(total, (n + 1) * factorial(n));
            for (int k = 0; k < n; ++k) {
                std::int64_t half = 0;
                for (std::uint32_t l = 0; l < g.size(); ++l)
                    if (l >> k & 1) half += g[l];
                EXPECT_EQ(2 * half, total);
            }
        }
}

TEST(PropertyTriangulation, FlipsAreInvolutions) {
    std::mt19937_64 rng(53);
    for (int n : {3, 4})
        for (int r = 0; r < (n == 3 ? 20 : 5); ++r) {
            auto t = regular_subdivision(n, random_weight(rng, n));
            if (!t.is_triangulation()) continue;
            auto fl = flips(t);
            EXPECT_FALSE(fl.empty());
            for (const auto& f : fl) {
                EXPECT_TRUE(f.result.is_triangulation());
                EXPECT_EQ(total_volume(f.result), factorial(n));
                EXPECT_NE(f.result, t);
                bool back = false;
                for (const auto& g : flips(f.result)) back |= g.result == t;
                EXPECT_TRUE(back);
            }
        }
}

TEST(PropertyTriangulation, RegularityCertificateReproducesTheTriangulation) {
    std::mt19937_64 rng(54);
    for (int n : {3, 4})
        for (int r = 0; r < 10; ++r) {
            auto t = regular_subdivision(n, random_weight(rng, n));
            if (!t.is_triangulation()) continue;
            auto cert = is_regular(t);
            ASSERT_TRUE(cert.regular);
            EXPECT_EQ(regular_subdivision(n, cert.weight).cells, t.cells);
        }
}

TEST(PropertyTriangulation, TightSpanIsContractible) {
    std::mt19937_64 rng(55);
    for (int n : {3, 4})
        for (int r = 0; r < 20; ++r) {
            auto t = regular_subdivision(n, random_weight(rng, n, 20));
            auto ts = tight_span(t);
            std::int64_t euler = 0;
            for (std::size_t k = 0; k < ts.fvector.size(); ++k) euler += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(ts.fvector[k]);
            EXPECT_EQ(euler, 1);
            EXPECT_EQ(ts.fvector[0], t.cells.size());
        }
}

TEST(PropertyTriangulation, DClassMatchesInitialForm) {
    std::mt19937_64 rng(56);
    Polynomial D = build_D222();
    auto verts = three_cube_vertices();
    int checked = 0;
    for (int r = 0; r < 1000; ++r) {
        IntVector w = random_weight(rng, 3);
        Polynomial in = initial_form(D, std::vector<std::int64_t>(w.begin(), w.end()));
        if (in.size() != 1) {
            EXPECT_THROW(d_equivalence_class(w, verts, 3, &D), newton::NonGenericWeight);
            continue;
        }
        auto c = d_equivalence_class(w, verts, 3, &D);
        EXPECT_EQ(c.vertex, in.terms()[0].exponent);
        EXPECT_EQ(c.coefficient, in.terms()[0].coefficient);
        ++checked;
    }
    EXPECT_GT(checked, 900);
}

TEST(PropertyTriangulation, CanonicalFormIsInvariant) {
    std::mt19937_64 rng(57);
    for (int r = 0; r < 10; ++r) {
        auto t = regular_subdivision(4, random_weight(rng, 4));
        auto c = canonical_form(t);
        std::size_t g = rng() % 384;
        Subdivision u{4, apply_symmetry(4, g, t.cells), std::nullopt};
        EXPECT_EQ(canonical_form(u).cells, c.cells);
        EXPECT_EQ(384 % c.orbit_size, 0u);
    }
}

TEST(Triangulation, SquareHasTwo) {
    EnumerationOptions opt;
    opt.up_to_symmetry = false;
    auto c = enumerate_triangulations(2, opt);
    EXPECT_EQ(c.total(), 2u);
    EXPECT_EQ(enumerate_triangulations(2).orbits.size(), 1u);
}

TEST(Triangulation, ThreeCubeHas74InSixOrbits) {
    auto c = enumerate_triangulations(3);
    EXPECT_EQ(c.orbits.size(), 6u);
    EXPECT_EQ(c.total(), 74u);
    EXPECT_TRUE(c.complete);
    EXPECT_EQ(c.nonregular_neighbours, 0u);
}

TEST(Triangulation, EnumerationIsIndependentOfJobs) {
    EnumerationOptions a, b;
    b.jobs = 3;
    auto x = enumerate_triangulations(3, a), y = enumerate_triangulations(3, b);
    ASSERT_EQ(x.orbits.size(), y.orbits.size());
    for (std::size_t i = 0; i < x.orbits.size(); ++i) EXPECT_EQ(x.orbits[i].cells, y.orbits[i].cells);
}

TEST(Triangulation, SimplexVolumes) {
    EXPECT_EQ(normalized_volume(3, mask_of({0b000, 0b011, 0b101, 0b110})), 2);
    EXPECT_EQ(normalized_volume(4, mask_of({0b1000, 0b1111, 0b0011, 0b0101, 0b0110})), 3);
    EXPECT_THROW(normalized_volume(3, mask_of({0b000, 0b001, 0b010, 0b011})), DegenerateSimplex);
}

TEST(Triangulation, PlacingHeightsGiveATriangulation) {
    for (int n : {2, 3, 4}) {
        auto t = regular_subdivision(n, detail::placing_heights(n));
        EXPECT_TRUE(t.is_triangulation());
        EXPECT_EQ(total_volume(t), factorial(n));
    }
}

TEST(Triangulation, ZeroWeightIsTrivial) {
    auto s = regular_subdivision(3, IntVector(8, 0));
    ASSERT_EQ(s.cells.size(), 1u);
    EXPECT_EQ(s.cells[0], 0xFFu);
}

TEST(Triangulation, SubdivisionTextRoundTrip) {
    std::mt19937_64 rng(58);
    for (int r = 0; r < 10; ++r) {
        auto t = regular_subdivision(4, random_weight(rng, 4, 5));
        std::ostringstream os;
        write_subdivision(os, t);
        std::istringstream is(os.str());
        auto u = read_subdivision(is);
        EXPECT_EQ(u, t);
        EXPECT_EQ(u.weight, t.weight);
    }
    std::istringstream bad("n 3\n000 012\n");
    EXPECT_THROW(read_subdivision(bad), std::invalid_argument);
}

TEST(Triangulation, TenSetsCountPairsAtLeastAsOftenAsUnions) {
    std::mt19937_64 rng(59);
    for (int r = 0; r < 10; ++r) {
        auto t = regular_subdivision(4, random_weight(rng, 4));
        if (!t.is_triangulation()) continue;
        EXPECT_GE(ten_set_statistic(t), distinct_ten_sets(t));
    }
}

TEST(Triangulation, RealizeGkzOnTheThreeCube) {
    auto c = enumerate_triangulations(3);
    for (const auto& o : c.orbits) {
        auto r = realize_gkz(3, o.gkz);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(gkz_vector(*r), o.gkz);
        EXPECT_TRUE(r->weight.has_value());
    }
}

TEST(Triangulation, ReadWeights) {
    std::istringstream is("1 -1/2 # note\n3\n");
    auto w = read_weights(is);
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[1], Rational(-1, 2));
}

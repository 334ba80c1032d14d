#include "hypercube/poly_io.hpp"
#include "hypercube/symmetry.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace hypercube;

TEST(PropertyGroup, OrderIsTwoToTheNTimesNFactorial) {
    EXPECT_EQ(cube_group(1).order(), 2u);
    EXPECT_EQ(cube_group(2).order(), 8u);
    EXPECT_EQ(cube_group(3).order(), 48u);
    EXPECT_EQ(cube_group(4).order(), 384u);
}

TEST(PropertyGroup, Axioms) {
    for (int n = 1; n <= 4; ++n) {
        const CubeGroup& G = cube_group(n);
        std::set<std::vector<std::uint32_t>> tables;
        for (std::size_t g = 0; g < G.order(); ++g) tables.insert(G.table(g));
        ASSERT_EQ(tables.size(), G.order()) << "elements act faithfully";
        const auto& el = G.elements();
        EXPECT_EQ(el[0], SignedPermutation::identity(n));
        for (std::size_t a = 0; a < el.size(); a += (n == 4 ? 7 : 1)) {
            EXPECT_EQ(el[a].compose(el[a].inverse()), SignedPermutation::identity(n));
            for (std::size_t b = 0; b < el.size(); b += (n == 4 ? 11 : 1)) {
                auto ab = el[a].compose(el[b]);
                EXPECT_TRUE(tables.count(ab.label_table())) << "closure";
                for (std::uint32_t l = 0; l < (1u << n); ++l) EXPECT_EQ(ab.apply(l), el[a].apply(el[b].apply(l)));
                const auto& c = el[(a + b) % el.size()];
                EXPECT_EQ(ab.compose(c), el[a].compose(el[b].compose(c))) << "associativity";
            }
        }
    }
}

TEST(PropertyGroup, PreservesCubeEdges) {
    const CubeGroup& G = cube_group(4);
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::uint32_t a = 0; a < 16; ++a)
            for (int k = 0; k < 4; ++k) {
                std::uint32_t b = a ^ (1u << k);
                EXPECT_EQ(std::popcount(G.table(g)[a] ^ G.table(g)[b]), 1);
            }
}

TEST(PropertyGroup, CanonicalFormIsAnOrbitInvariant) {
    std::mt19937_64 rng(9);
    const CubeGroup& G = cube_group(4);
    for (int r = 0; r < 30; ++r) {
        ExponentVector e;
        for (int k = 0; k < 16; ++k) e.set(k, static_cast<int>(rng() % 3));
        Orbit o = G.canonicalize(e);
        EXPECT_EQ(G.order() % o.size, 0u);
        EXPECT_EQ(o.size, G.orbit(e).size());
        EXPECT_LE(o.representative, e);
        std::size_t g = rng() % G.order();
        EXPECT_EQ(G.canonicalize(G.act(g, e)).representative, o.representative);
    }
}

TEST(Symmetry, OrbitDecompositionOfAClosedSet) {
    ExponentVector e;
    e.set(0, 1);
    auto images = cube_group(3).orbit(e);
    EXPECT_EQ(images.size(), 8u);
    ExponentVector f;
    f.set(0, 1);
    f.set(7, 1);
    auto more = cube_group(3).orbit(f);
    EXPECT_EQ(more.size(), 4u);
    images.insert(images.end(), more.begin(), more.end());
    auto dec = orbit_decompose(images, 3);
    ASSERT_EQ(dec.orbits.size(), 2u);
    EXPECT_TRUE(dec.closure_witnesses.empty());
    images.pop_back();
    EXPECT_FALSE(orbit_decompose(images, 3).closure_witnesses.empty());
}

TEST(Symmetry, PolynomialOrbitsDetectNonInvariance) {
    auto orbits = polynomial_orbits(parse_cube_polynomial("c00*c11 + c01*c10 + 2*c00^2 + 2*c01^2 + 2*c10^2 + 2*c11^2", 2), 2);
    ASSERT_EQ(orbits.size(), 2u);
    EXPECT_EQ(orbits[0].size + orbits[1].size, 6u);
    EXPECT_THROW(polynomial_orbits(parse_cube_polynomial("c00*c11 - c01*c10", 2), 2), std::runtime_error);
    EXPECT_THROW(polynomial_orbits(parse_cube_polynomial("c00", 2), 2), std::runtime_error);
}

TEST(Symmetry, ActingOnPolynomials) {
    Polynomial p = parse_cube_polynomial("c00*c11 - c01*c10", 2);
    for (std::size_t g = 0; g < cube_group(2).order(); ++g) {
        Polynomial q = act_on_polynomial(g, p, 2);
        EXPECT_TRUE(q == p || q == negate(p));
    }
}

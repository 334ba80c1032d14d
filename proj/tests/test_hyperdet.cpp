#include "support.hpp"

#include "hypercube/hyperdet.hpp"
#include "hypercube/symmetry.hpp"

#include <gtest/gtest.h>

using namespace hypercube;

namespace {

// Cayley's form: discriminant in t of det(M0 + t M1), M_i the slices of the
// first coordinate.
BigInt cayley_oracle(const std::vector<BigInt>& a) {
    auto det = [](BigInt p, BigInt q, BigInt r, BigInt s) { return p * s - q * r; };
    BigInt c0 = det(a[0], a[1], a[2], a[3]);
    BigInt c2 = det(a[4], a[5], a[6], a[7]);
    BigInt c1 = a[0] * a[7] + a[4] * a[3] - a[1] * a[6] - a[5] * a[2];
    return c1 * c1 - 4 * c0 * c2;
}

}  // namespace

TEST(Hyperdet, TwoByTwoIsTheDeterminant) {
    Polynomial d = build_D22();
    EXPECT_EQ(evaluate(d, std::vector<std::int64_t>{3, 5, 7, 11}), BigInt(3 * 11 - 5 * 7));
}

TEST(Hyperdet, TwoByTwoByTwoHasTwelveTermsAndMatchesCayley) {
    Polynomial d = build_D222();
    EXPECT_EQ(d.size(), 12u);
    EXPECT_TRUE(d.is_homogeneous());
    EXPECT_EQ(d.total_degree(), 4);
    std::mt19937_64 rng(21);
    for (int r = 0; r < 50; ++r) {
        auto x = hypercube::testing::random_point(rng, 8, 50);
        EXPECT_EQ(evaluate(d, x), cayley_oracle(x));
    }
}

TEST(Hyperdet, TwoByTwoByTwoIsInvariant) {
    Polynomial d = build_D222();
    for (std::size_t g = 0; g < cube_group(3).order(); ++g) EXPECT_EQ(act_on_polynomial(g, d, 3), d);
    auto orbits = polynomial_orbits(d, 3);
    EXPECT_EQ(orbits.size(), 3u);
}

TEST(Hyperdet, QuarticDiscriminantOfKnownRoots) {
    // (w-1)(w-2)(w-3)(w-4): product of squared root differences is 144.
    std::vector<Polynomial> b;
    for (int c : {24, -50, 35, -10, 1}) b.push_back(Polynomial::constant(1, c));
    Polynomial disc = discriminant_quartic(b);
    EXPECT_EQ(disc, Polynomial::constant(1, 144));
    // (w-1)^2 (w-2)(w-3): repeated root.
    b.clear();
    for (int c : {6, -17, 17, -7, 1}) b.push_back(Polynomial::constant(1, c));
    EXPECT_TRUE(discriminant_quartic(b).is_zero());
}

TEST(Hyperdet, QuadraticDiscriminant) {
    std::vector<Polynomial> b{Polynomial::constant(1, 6), Polynomial::constant(1, -5), Polynomial::constant(1, 1)};
    EXPECT_EQ(discriminant_quadratic(b), Polynomial::constant(1, 1));
}

TEST(PropertyHyperdet, QuarticDiscriminantIndependentOfJobs) {
    std::mt19937_64 rng(22);
    std::vector<Polynomial> b;
    for (int i = 0; i < 5; ++i) b.push_back(hypercube::testing::random_polynomial(rng, 5, 6, 2));
    std::string one = to_binary(discriminant_quartic(b, 1));
    EXPECT_EQ(to_binary(discriminant_quartic(b, 3)), one);
}

TEST(PropertyHyperdet, QuarticDiscriminantIsInvariantUnderReversal) {
    // disc(b0..b4) = disc(b4..b0).
    std::mt19937_64 rng(23);
    for (int r = 0; r < 5; ++r) {
        std::vector<Polynomial> b;
        for (int i = 0; i < 5; ++i) b.push_back(hypercube::testing::random_polynomial(rng, 3, 3, 2));
        std::vector<Polynomial> rev(b.rbegin(), b.rend());
        EXPECT_EQ(discriminant_quartic(b), discriminant_quartic(rev));
    }
}

TEST(Hyperdet, SchlafliStepFromTwoByTwo) {
    SchlafliStage st = schlafli_step(build_D22());
    EXPECT_EQ(st.degree, 2);
    EXPECT_EQ(st.b.size(), 3u);
}

#include "hypercube/secondary.hpp"

#include <gtest/gtest.h>

using namespace hypercube;

namespace {

IntVector normal_of(std::initializer_list<std::pair<const char*, int>> terms) {
    IntVector v(16, 0);
    for (auto [s, c] : terms) v[std::stoul(s, nullptr, 2)] += c;
    return v;
}

}  // namespace

TEST(Secondary, PrincipalDeterminantOfTheThreeCube) {
    Polynomial e = build_E222();
    EXPECT_EQ(e.size(), 231u);
    EXPECT_TRUE(e.is_homogeneous());
    EXPECT_EQ(e.total_degree(), 4 + 6 * 2 + 8);
}

TEST(Secondary, ThreeCubeSecondaryPolytope) {
    auto s = secondary_polytope_3cube();
    EXPECT_EQ(s.vertices.size(), 74u);
    EXPECT_EQ(s.fvector, (std::vector<std::size_t>{74, 152, 100, 22}));
    EXPECT_TRUE(s.facets_match);
    EXPECT_TRUE(s.gkz_vertices_match);
    EXPECT_EQ(s.d_class_sizes, (std::vector<std::size_t>{1, 1, 18, 18, 18, 18}));
    for (const auto& t : s.types) EXPECT_TRUE(t.matches) << "type " << t.type;
    EXPECT_TRUE(s.ok());
}

TEST(Secondary, FacetsFromTangentCones) {
    auto census = enumerate_triangulations(3);
    auto sf = secondary_facets_via_tangent_cones(census);
    EXPECT_EQ(sf.facets, 22u);
    EXPECT_EQ(sf.orbits.size(), 3u);
    std::size_t total = 0;
    for (const auto& o : sf.orbits) total += o.orbit_size;
    EXPECT_EQ(total, 22u);
}

TEST(Secondary, GkzDegrees) {
    // A applied to any GKZ vector: (n+1)! total and half of it per coordinate.
    EXPECT_EQ(gkz_degrees(3), (IntVector{24, 12, 12, 12}));
    EXPECT_EQ(gkz_degrees(4), (IntVector{120, 60, 60, 60, 60}));
}

TEST(Secondary, SplitSubdivisionOfTheFourCube) {
    auto rep = coarsest_subdivision_report(4, Inequality{normal_of({{"0000", 1}, {"0001", 1}}), Sense::GE, 0});
    EXPECT_EQ(rep.cells.size(), 2u);
    std::int64_t vol = 0;
    for (const auto& c : rep.cells) vol += c.volume;
    EXPECT_EQ(vol, 24);
}

TEST(Secondary, CoarsestSubdivisionOfAFacetClass) {
    const auto& fc = newton::facet_classes();
    auto rep = coarsest_subdivision_report(4, newton::class_inequality(fc[2]));
    EXPECT_GE(rep.cells.size(), 2u);
    std::int64_t vol = 0;
    for (const auto& c : rep.cells) vol += c.volume;
    EXPECT_EQ(vol, 24);
    // The refining triangulation attains the bound with equality.
    Subdivision fine = generic_refinement(4, rep.weight);
    EXPECT_TRUE(fine.is_triangulation());
    EXPECT_EQ(dot(rep.weight, gkz_vector(fine)), rep.inequality.rhs);
}

TEST(Secondary, TrivialWeightIsRejected) {
    EXPECT_THROW(coarsest_subdivision_report(4, IntVector(16, 0)), TrivialSubdivision);
}

TEST(PropertySecondary, FactorwiseMinimumIsTheGkzVector) {
    std::vector<ExponentVector> reps;
    for (const auto& r : newton::vertex_table()) reps.push_back(newton::to_exponent(r.exponent));
    auto pf = principal_factors_4cube(newton::all_vertices(reps));
    EXPECT_EQ(pf.total_degree(), 120);
    std::mt19937_64 rng(61);
    int agreed = 0;
    for (int r = 0; r < 40; ++r) {
        IntVector w(16);
        for (auto& x : w) x = static_cast<std::int64_t>(rng() % 2001) - 1000;
        auto t = regular_subdivision(4, w);
        if (!t.is_triangulation()) continue;
        auto m = minimize_factorwise(pf, w);
        ASSERT_TRUE(m.generic());
        EXPECT_EQ(m.exponent_sum, gkz_vector(t));
        ++agreed;
    }
    EXPECT_GT(agreed, 30);
}

#include "hypercube/lp.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <random>

using namespace hypercube;

namespace {

bool feasible(const LinearProgram& p, const RatVector& x) {
    for (std::size_t j = 0; j < p.vars; ++j)
        if (x[j] < 0) return false;
    for (const auto& r : p.rows) {
        Rational s = 0;
        for (std::size_t j = 0; j < p.vars; ++j) s += x[j] * r.coeffs[j];
        Rational b(r.rhs);
        if (r.sense == Sense::EQ ? s != b : r.sense == Sense::LE ? s > b : s < b) return false;
    }
    return true;
}

// Optimum by enumerating every basic solution: choose `vars` constraints
// (rows or bounds x_j = 0) to hold with equality.
std::optional<Rational> brute_force_minimum(const LinearProgram& p) {
    std::size_t n = p.vars, m = p.rows.size();
    std::vector<IntVector> all;
    std::vector<BigInt> rhs;
    for (const auto& r : p.rows) {
        all.push_back(r.coeffs);
        rhs.push_back(r.rhs);
    }
    for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n, 0);
        e[j] = 1;
        all.push_back(e);
        rhs.push_back(0);
    }
    std::optional<Rational> best;
    std::size_t total = m + n;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != n) continue;
        IntMatrix a;
        RatVector b;
        for (std::size_t i = 0; i < total; ++i)
            if (mask >> i & 1) {
                a.push_back(all[i]);
                b.push_back(Rational(rhs[i]));
            }
        auto x = solve_square(a, b);
        if (!x || !feasible(p, *x)) continue;
        Rational v = 0;
        for (std::size_t j = 0; j < n; ++j) v += (*x)[j] * p.objective[j];
        if (!best || v < *best) best = v;
    }
    return best;
}

}  // namespace

TEST(PropertyLp, MatchesBasicSolutionEnumeration) {
    std::mt19937_64 rng(31);
    int optimal = 0, infeasible = 0;
    for (int r = 0; r < 60; ++r) {
        LinearProgram p;
        p.vars = 3;
        for (int i = 0; i < 4; ++i) {
            LinearRow row;
            for (int j = 0; j < 3; ++j) row.coeffs.push_back(static_cast<std::int64_t>(rng() % 9) - 4);
            row.sense = i == 0 ? Sense::EQ : (rng() % 2 ? Sense::LE : Sense::GE);
            row.rhs = static_cast<long>(rng() % 13) - 4;
            p.rows.push_back(row);
        }
        // Keep the region bounded.
        p.rows.push_back({{1, 1, 1}, Sense::LE, 20});
        for (int j = 0; j < 3; ++j) p.objective.push_back(static_cast<std::int64_t>(rng() % 11) - 5);
        auto expected = brute_force_minimum(p);
        LpSolution s = solve(p);
        if (!expected) {
            EXPECT_EQ(s.status, LpStatus::Infeasible);
            ++infeasible;
            continue;
        }
        ASSERT_EQ(s.status, LpStatus::Optimal);
        EXPECT_TRUE(feasible(p, s.x));
        EXPECT_EQ(s.objective, *expected);
        ++optimal;
    }
    EXPECT_GT(optimal, 5);
    EXPECT_GT(infeasible, 5);
}

TEST(Lp, FarkasCertificateForInfeasibleSystem) {
    LinearProgram p;
    p.vars = 2;
    p.rows.push_back({{1, 1}, Sense::LE, -1});
    LpSolution s = solve(p);
    ASSERT_EQ(s.status, LpStatus::Infeasible);
    ASSERT_EQ(s.farkas.size(), 1u);
    EXPECT_NE(s.farkas[0], 0);
}

TEST(Lp, Unbounded) {
    LinearProgram p;
    p.vars = 2;
    p.rows.push_back({{1, -1}, Sense::LE, 3});
    p.objective = {-1, 0};
    EXPECT_EQ(solve(p).status, LpStatus::Unbounded);
}

TEST(Lp, FreeVariablesAndMaximize) {
    LinearProgram p;
    p.vars = 2;
    p.free_var = {true, false};
    p.rows.push_back({{1, 1}, Sense::LE, 4});
    p.rows.push_back({{1, 0}, Sense::GE, -3});
    p.objective = {-1, 2};
    p.maximize = true;
    LpSolution s = solve(p);
    ASSERT_EQ(s.status, LpStatus::Optimal);
    EXPECT_EQ(s.objective, Rational(17));
    EXPECT_EQ(s.x[1], Rational(7));
    EXPECT_EQ(s.x[0], Rational(-3));
}

TEST(Lp, DegenerateVertexTerminates) {
    // Many constraints tight at the optimum.
    LinearProgram p;
    p.vars = 3;
    for (int k = 1; k <= 6; ++k) p.rows.push_back({{k, 1, 7 - k}, Sense::GE, 0});
    p.rows.push_back({{1, 1, 1}, Sense::LE, 5});
    p.objective = {1, 1, 1};
    LpSolution s = solve(p);
    ASSERT_EQ(s.status, LpStatus::Optimal);
    EXPECT_EQ(s.objective, Rational(0));
}

#include "support.hpp"

#include "hypercube/poly_io.hpp"
#include "hypercube/polynomial.hpp"

#include <gtest/gtest.h>

using namespace hypercube;
using hypercube::testing::random_point;
using hypercube::testing::random_polynomial;

TEST(Polynomial, ConstructionDropsZerosAndMergesDuplicates) {
    ExponentVector e{1, 0, 2};
    Polynomial p = Polynomial::from_terms(3, {{e, 3}, {e, -3}, {ExponentVector{0, 1, 0}, 2}, {ExponentVector{0, 1, 0}, 5}});
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.coefficient(ExponentVector{0, 1, 0}), Integer(7));
    EXPECT_TRUE(Polynomial::from_terms(2, {{ExponentVector{1, 1}, 0}}).is_zero());
}

TEST(Polynomial, ArityMismatchThrows) {
    EXPECT_THROW(add(Polynomial::variable(2, 0), Polynomial::variable(3, 0)), ArityMismatch);
    EXPECT_THROW(mul(Polynomial::variable(2, 0), Polynomial::variable(3, 0)), ArityMismatch);
}

TEST(Polynomial, SmallProductByHand) {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial p = mul(add(x, y), subtract(x, y));
    EXPECT_EQ(p, subtract(mul(x, x), mul(y, y)));
    EXPECT_EQ(pow(add(x, y), 3), parse_cube_polynomial("c0^3 + 3*c0^2*c1 + 3*c0*c1^2 + c1^3", 1));
}

TEST(Polynomial, ExactDivision) {
    std::mt19937_64 rng(11);
    for (int r = 0; r < 20; ++r) {
        Polynomial p = random_polynomial(rng, 4, 6), q = random_polynomial(rng, 4, 4);
        if (q.is_zero()) continue;
        EXPECT_EQ(exact_divide(mul(p, q), q), p);
    }
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    EXPECT_THROW(exact_divide(add(mul(x, y), Polynomial::one(2)), add(x, y)), NonDivisible);
    EXPECT_THROW(exact_divide(x, Polynomial(2)), DivisionByZero);
    EXPECT_EQ(exact_divide(scale(x, Integer(6)), Integer(3)), scale(x, Integer(2)));
}

TEST(Polynomial, InitialFormPicksMinimalWeight) {
    Polynomial p = parse_cube_polynomial("c00*c11 - c01*c10 + 3*c00^2", 2);
    EXPECT_EQ(initial_form(p, std::vector<std::int64_t>{1, 0, 0, 1}), parse_cube_polynomial("-c01*c10", 2));
    EXPECT_EQ(initial_form(p, std::vector<std::int64_t>{0, 1, 1, 0}), parse_cube_polynomial("c00*c11 + 3*c00^2", 2));
    std::vector<Rational> half{Rational(1, 2), 0, 0, Rational(1, 2)};
    EXPECT_EQ(initial_form(p, half), parse_cube_polynomial("-c01*c10", 2));
}

TEST(Polynomial, EvaluationOracle) {
    Polynomial p = parse_cube_polynomial("2*c00*c11 - c01^3 + 7", 2);
    EXPECT_EQ(evaluate(p, std::vector<std::int64_t>{2, 3, 1, 5}), BigInt(2 * 2 * 5 - 27 + 7));
}

TEST(Polynomial, SetToZeroAndContent) {
    Polynomial p = parse_cube_polynomial("4*c00*c11 - 6*c01*c10 + 2*c01", 2);
    EXPECT_EQ(content(p), Integer(2));
    EXPECT_EQ(set_to_zero(p, 0), parse_cube_polynomial("-6*c01*c10 + 2*c01", 2));
    EXPECT_EQ(max_abs_coefficient(p), Integer(6));
}

// Ring axioms and homomorphism properties on random inputs.

TEST(PropertyRing, Axioms) {
    std::mt19937_64 rng(1);
    Polynomial zero(4), one = Polynomial::one(4);
    for (int r = 0; r < 40; ++r) {
        Polynomial a = random_polynomial(rng, 4, 5), b = random_polynomial(rng, 4, 5), c = random_polynomial(rng, 4, 4);
        EXPECT_EQ(add(a, b), add(b, a));
        EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
        EXPECT_EQ(mul(a, b), mul(b, a));
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
        EXPECT_EQ(add(a, zero), a);
        EXPECT_EQ(mul(a, one), a);
        EXPECT_TRUE(add(a, negate(a)).is_zero());
        EXPECT_TRUE(mul(a, zero).is_zero());
    }
}

TEST(PropertyRing, EvaluationIsAHomomorphism) {
    std::mt19937_64 rng(2);
    for (int r = 0; r < 40; ++r) {
        Polynomial a = random_polynomial(rng, 4, 6), b = random_polynomial(rng, 4, 6);
        auto x = random_point(rng, 4);
        EXPECT_EQ(evaluate(mul(a, b), x), evaluate(a, x) * evaluate(b, x));
        EXPECT_EQ(evaluate(add(a, b), x), evaluate(a, x) + evaluate(b, x));
    }
}

TEST(PropertyRing, SplitSubstitutionCommutesWithEvaluation) {
    std::mt19937_64 rng(7);
    auto map = SplitMap::interleaved(4);
    for (int r = 0; r < 100; ++r) {
        Polynomial p = random_polynomial(rng, 4, 5);
        auto y = random_point(rng, 9);
        std::vector<BigInt> x(4);
        for (std::size_t v = 0; v < 4; ++v) x[v] = y[2 * v] + y[2 * v + 1] * y[8];
        EXPECT_EQ(evaluate(substitute_split(p, map), y), evaluate(p, x));
    }
    SplitMap bad = map;
    bad.targets.pop_back();
    EXPECT_THROW(substitute_split(Polynomial::one(4), bad), std::invalid_argument);
}

TEST(PropertyRing, InitialFormOfProduct) {
    std::mt19937_64 rng(3);
    for (int r = 0; r < 30; ++r) {
        Polynomial a = random_polynomial(rng, 4, 6), b = random_polynomial(rng, 4, 6);
        if (a.is_zero() || b.is_zero()) continue;
        std::vector<std::int64_t> w(4);
        for (auto& x : w) x = static_cast<std::int64_t>(rng() % 7) - 3;
        EXPECT_EQ(initial_form(mul(a, b), w), mul(initial_form(a, w), initial_form(b, w)));
    }
}

TEST(PropertyRing, ParallelProductIsByteIdentical) {
    std::mt19937_64 rng(4);
    Polynomial a = random_polynomial(rng, 6, 300, 4), b = random_polynomial(rng, 6, 300, 4);
    std::string seq = to_binary(mul(a, b, 1));
    for (int jobs : {2, 3, 5}) EXPECT_EQ(to_binary(mul(a, b, jobs)), seq);
    EXPECT_EQ(to_binary(pow(a, 3, 1)), to_binary(pow(a, 3, 4)));
}

// Serialization.

TEST(PropertySerialization, TextRoundTrip) {
    std::mt19937_64 rng(5);
    for (int r = 0; r < 30; ++r) {
        Polynomial a = random_polynomial(rng, 8, 20);
        std::string s = to_text(a);
        EXPECT_EQ(from_text(s, 8), a);
        EXPECT_EQ(to_text(from_text(s, 8)), s);
    }
}

TEST(PropertySerialization, BinaryRoundTrip) {
    std::mt19937_64 rng(6);
    for (int r = 0; r < 30; ++r) {
        Polynomial a = random_polynomial(rng, 16, 40, 9);
        std::string b = to_binary(a);
        EXPECT_EQ(from_binary(b), a);
        EXPECT_EQ(to_binary(from_binary(b)), b);
    }
}

TEST(PropertySerialization, ExpressionRoundTrip) {
    std::mt19937_64 rng(7);
    for (int r = 0; r < 30; ++r) {
        Polynomial a = random_polynomial(rng, 8, 10);
        EXPECT_EQ(parse_cube_polynomial(to_expression(a, 3), 3), a);
    }
}

TEST(Serialization, TextFormatIsCanonical) {
    Polynomial p = parse_cube_polynomial("c11 - 2*c00^2", 2);
    EXPECT_EQ(to_text(p), "0 0 0 1\t1\n2 0 0 0\t-2\n");
}

TEST(Serialization, RejectsMalformedInput) {
    EXPECT_THROW(from_text("1 0\t3\n", 3), ParseError);
    EXPECT_THROW(from_text("1 0 0\t0\n", 3), ParseError);
    EXPECT_THROW(from_text("1 0 0\t1\n0 0 1\t1\n", 3), ParseError);
    EXPECT_THROW(from_binary("not a cache"), std::exception);
    std::string b = to_binary(parse_cube_polynomial("c00 + c11", 2));
    EXPECT_THROW(from_binary(b.substr(0, b.size() - 1)), std::exception);
    EXPECT_THROW(parse_cube_polynomial("c0000 + c2", 4), std::exception);
}

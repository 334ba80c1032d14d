#pragma once

#include "hypercube/poly_io.hpp"
#include "hypercube/polynomial.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace hypercube {

using ProgressFn = std::function<void(const std::string&)>;

struct SchlafliStage {
    Polynomial source;
    std::vector<Polynomial> b;  // coefficients of w after the split
    int degree = 0;             // degree of the discriminant in w (2 or 4)
    Integer divisor = 1;        // raw discriminant = divisor * result
};

inline constexpr const char* kD222Reference =
    "4*c000*c011*c101*c110 + 4*c001*c010*c100*c111"
    " + c000^2*c111^2 + c001^2*c110^2 + c010^2*c101^2 + c011^2*c100^2"
    " - 2*c000*c001*c110*c111 - 2*c000*c010*c101*c111 - 2*c000*c011*c100*c111"
    " - 2*c001*c010*c101*c110 - 2*c001*c011*c110*c100 - 2*c010*c011*c101*c100";

inline Polynomial build_D22() { return parse_cube_polynomial("c00*c11 - c01*c10", 2); }

// One term of the quartic discriminant: coefficient times b0^e0 ... b4^e4.
struct QuarticDiscTerm {
    int coefficient;
    std::array<int, 5> exponents;
};

inline const std::array<QuarticDiscTerm, 16>& quartic_discriminant_terms() {
    static const std::array<QuarticDiscTerm, 16> terms{{
        {256, {3, 0, 0, 0, 3}},
        {-192, {2, 1, 0, 1, 2}},
        {-128, {2, 0, 2, 0, 2}},
        {144, {2, 0, 1, 2, 1}},
        {-27, {2, 0, 0, 4, 0}},
        {144, {1, 2, 1, 0, 2}},
        {-6, {1, 2, 0, 2, 1}},
        {-80, {1, 1, 2, 1, 1}},
        {18, {1, 1, 1, 3, 0}},
        {16, {1, 0, 4, 0, 1}},
        {-4, {1, 0, 3, 2, 0}},
        {-27, {0, 4, 0, 0, 2}},
        {18, {0, 3, 1, 1, 1}},
        {-4, {0, 3, 0, 3, 0}},
        {-4, {0, 2, 3, 0, 1}},
        {1, {0, 2, 2, 2, 0}},
    }};
    return terms;
}

// Expands one product of the quartic discriminant, factors with fewest terms first.
inline Polynomial quartic_discriminant_product(const std::vector<Polynomial>& b, const QuarticDiscTerm& term, int jobs = 1) {
    std::size_t n = b.front().arity();
    std::vector<Polynomial> factors;
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < term.exponents[i]; ++k) {
            if (b[i].is_zero()) return Polynomial(n);
            factors.push_back(b[i]);
        }
    return scale(product(std::move(factors), n, jobs), term.coefficient);
}

// Discriminant of b4 w^4 + b3 w^3 + b2 w^2 + b1 w + b0. Each of the sixteen
// products is expanded separately and accumulated into one table.
inline Polynomial discriminant_quartic(std::vector<Polynomial> b, int jobs = 1, const ProgressFn& progress = {}) {
    if (b.size() > 5) throw std::invalid_argument("quartic needs at most five coefficients");
    if (b.empty()) throw std::invalid_argument("no coefficients given");
    std::size_t n = b.front().arity();
    b.resize(5, Polynomial(n));
    for (const auto& x : b) detail::require_same_arity(b.front(), x);
    TermTable<Integer> acc(1024);
    int index = 0;
    for (const auto& term : quartic_discriminant_terms()) {
        auto t0 = std::chrono::steady_clock::now();
        Polynomial prod = quartic_discriminant_product(b, term, jobs);
        for (const auto& t : prod) acc[t.exponent] += t.coefficient;
        if (progress) {
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            progress("product " + std::to_string(++index) + "/16: " + std::to_string(prod.size()) + " terms, " +
                     std::to_string(secs) + " s");
        }
    }
    return Polynomial::from_sorted_terms(n, detail::drain_sorted(acc));
}

inline Polynomial discriminant_quadratic(const std::vector<Polynomial>& b) {
    if (b.size() != 3) throw std::invalid_argument("quadratic needs three coefficients");
    return subtract(mul(b[1], b[1]), scale(mul(b[0], b[2]), 4));
}

// Schlafli step from a hyperdeterminant in 2^k variables to 2^(k+1).
inline SchlafliStage schlafli_step(const Polynomial& source, int jobs = 1) {
    SchlafliStage st;
    st.source = source;
    SplitMap map = SplitMap::interleaved(source.arity());
    st.b = coefficients_in_w(substitute_split(source, map), map);
    st.degree = static_cast<int>(st.b.size()) - 1;
    Polynomial raw;
    if (st.degree == 2) raw = discriminant_quadratic(st.b);
    else if (st.degree == 4) raw = discriminant_quartic(st.b, jobs);
    else throw std::runtime_error("unexpected degree " + std::to_string(st.degree) + " in w");
    st.divisor = content(raw);
    return st;
}

inline Polynomial build_D222() {
    SchlafliStage st = schlafli_step(build_D22());
    Polynomial raw = discriminant_quadratic(st.b);
    Integer c = content(raw);
    ExponentVector lead{2, 0, 0, 0, 0, 0, 0, 2};
    if (raw.coefficient(lead).sign() < 0) c = -c;
    Polynomial d = exact_divide(raw, c);
    if (d != parse_cube_polynomial(kD222Reference, 3))
        throw std::runtime_error("Schlafli step does not reproduce the 12-term 2x2x2 hyperdeterminant");
    return d;
}

struct HyperdetBuildOptions {
    int jobs = 1;
    ProgressFn progress;
};

inline Polynomial build_D2222(const HyperdetBuildOptions& opt = {}) {
    Polynomial d222 = build_D222();
    SplitMap map = SplitMap::interleaved(8);
    auto b = coefficients_in_w(substitute_split(d222, map), map);
    if (b.size() != 5) throw std::runtime_error("split of the 2x2x2 hyperdeterminant is not quartic in w");
    if (opt.progress) {
        std::string sizes;
        for (const auto& x : b) sizes += " " + std::to_string(x.size());
        opt.progress("b0..b4 term counts:" + sizes);
    }
    Polynomial raw = discriminant_quartic(b, opt.jobs, opt.progress);
    Polynomial d = exact_divide(raw, Integer(256));
    for (const auto& t : d)
        if (t.exponent.total_degree() != 24)
            throw std::runtime_error("non-homogeneous term " + t.exponent.to_string(16));
    return d;
}

}  // namespace hypercube

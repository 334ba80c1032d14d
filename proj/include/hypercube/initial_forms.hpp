#pragma once

// Initial forms of the 2x2x2x2 hyperdeterminant at the facet weights and
// their factorizations.

#include "hypercube/hyperdet.hpp"
#include "hypercube/newton_data.hpp"
#include "hypercube/poly_io.hpp"
#include "hypercube/polynomial.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hypercube {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Laplace expansion along the first row; meant for small matrices.
inline Polynomial determinant(const PolyMatrix& m, std::size_t arity) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial::one(arity);
    if (n == 1) return m[0][0];
    Polynomial acc(arity);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Polynomial t = mul(m[0][j], determinant(minor, arity));
        acc = j % 2 ? subtract(acc, t) : add(acc, t);
    }
    return acc;
}

// Renames the variables of p: variable i becomes variable labels[i] of a
// ring with the given arity.
inline Polynomial embed(const Polynomial& p, const std::vector<std::uint32_t>& labels, std::size_t arity) {
    if (labels.size() != p.arity()) throw ArityMismatch(p.arity(), labels.size());
    std::vector<Term> terms;
    for (const auto& t : p) {
        ExponentVector e;
        for (std::size_t i = 0; i < labels.size(); ++i) e.set(labels[i], e[labels[i]] + t.exponent[i]);
        terms.push_back({e, t.coefficient});
    }
    return Polynomial::from_terms(arity, std::move(terms));
}

// Hyperdeterminant of boundary format 3x2x2 for the tensor whose entry
// (i, j, k) is the variable labels[i][2j+k]: the resultant of the three
// bilinear forms B_i(y, z), as the determinant of the map sending
// (f_0, f_1, f_2) with linear f_i(y) to sum f_i B_i.
inline Polynomial boundary_hyperdeterminant_322(const std::array<std::array<std::uint32_t, 4>, 3>& labels, std::size_t arity) {
    // Columns: y0 B_i, y1 B_i for i = 0..2. Rows: monomials y0^2 z0, y0^2 z1,
    // y0 y1 z0, y0 y1 z1, y1^2 z0, y1^2 z1.
    PolyMatrix m(6, std::vector<Polynomial>(6, Polynomial(arity)));
    for (int i = 0; i < 3; ++i)
        for (int s = 0; s < 2; ++s)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    int row = 2 * (s + j) + k;
                    m[row][2 * i + s] = add(m[row][2 * i + s], Polynomial::variable(arity, labels[i][2 * j + k]));
                }
    return determinant(m, arity);
}

inline Polynomial printed_factor(const newton::PrintedFactor& f) {
    std::size_t k = 0;
    while (k * k < f.matrix.size()) ++k;
    if (k * k != f.matrix.size()) throw std::invalid_argument("printed matrix is not square");
    if (k == 1) return parse_cube_polynomial(f.matrix[0], 4);
    PolyMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i].push_back(parse_cube_polynomial(f.matrix[i * k + j], 4));
    return determinant(m, 16);
}

inline std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q) {
    try {
        return exact_divide(p, q);
    } catch (const NonDivisible&) {
        return std::nullopt;
    }
}

// Largest k with q^k dividing p.
inline int multiplicity(Polynomial p, const Polynomial& q) {
    int k = 0;
    while (auto r = try_divide(p, q)) {
        p = std::move(*r);
        ++k;
    }
    return k;
}

// Strips the monomial content (gcd of all exponent vectors) and the integer
// content with a positive leading coefficient.
inline Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<int> low(p.arity(), 255);
    for (const auto& t : p)
        for (std::size_t i = 0; i < p.arity(); ++i) low[i] = std::min<int>(low[i], t.exponent[i]);
    Integer c = content(p);
    if (p.terms().back().coefficient.sign() < 0) c = -c;
    std::vector<Term> terms;
    for (const auto& t : p) {
        ExponentVector e = t.exponent;
        for (std::size_t i = 0; i < p.arity(); ++i) e.set(i, e[i] - low[i]);
        Integer q, r;
        Integer::divmod(t.coefficient, c, q, r);
        terms.push_back({e, q});
    }
    return Polynomial::from_terms(p.arity(), std::move(terms));
}

// Splits a product of `count` unknown factors. Supplied candidates are
// tried first; otherwise initial forms of the product at coordinate and
// random weights, stripped of monomial content, are tried as divisors and the
// smallest proper divisor found is split off repeatedly.
inline std::vector<Polynomial> recover_cofactors(Polynomial residual, int count, const std::vector<Polynomial>& candidates = {},
                                                 std::uint64_t seed = 1) {
    std::vector<Polynomial> out;
    std::mt19937_64 rng(seed);
    std::size_t n = residual.arity();
    while (static_cast<int>(out.size()) + 1 < count) {
        std::optional<Polynomial> best;
        for (const auto& c : candidates)
            if (auto q = try_divide(residual, c); q && q->size() > 1) {
                best = c;
                break;
            }
        if (!best) {
            std::vector<std::vector<std::int64_t>> weights;
            for (std::size_t v = 0; v < n; ++v)
                for (int s : {1, -1}) {
                    std::vector<std::int64_t> w(n, 0);
                    w[v] = s;
                    weights.push_back(w);
                }
            for (int r = 0; r < 64; ++r) {
                std::vector<std::int64_t> w(n);
                for (auto& x : w) x = static_cast<std::int64_t>(rng() % 7) - 3;
                weights.push_back(w);
            }
            for (const auto& w : weights) {
                Polynomial cand = primitive_part(initial_form(residual, w));
                if (cand.size() <= 1 || cand.size() >= residual.size()) continue;
                if (best && cand.size() >= best->size()) continue;
                if (auto q = try_divide(residual, cand); q && q->size() > 1) best = cand;
            }
        }
        if (!best) break;
        residual = exact_divide(residual, *best);
        out.push_back(*best);
    }
    out.push_back(residual);
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
    return out;
}

struct FactorCheck {
    std::string text;  // printed expression or matrix size
    std::size_t terms = 0;
    int degree = 0;
    int printed_multiplicity = 0;
    int observed_multiplicity = 0;
};

struct FacetInitialFormReport {
    int facet_class = 0;
    std::vector<std::int64_t> weight;
    std::size_t initial_form_terms = 0;
    std::size_t expected_terms = 0;  // 0 when not stated
    std::vector<FactorCheck> factors;
    std::vector<std::size_t> cofactor_terms;
    std::vector<int> cofactor_degrees;
    bool product_matches = false;
    std::string note;
    bool ok() const {
        if (!product_matches) return false;
        if (expected_terms && expected_terms != initial_form_terms) return false;
        for (const auto& f : factors)
            if (f.printed_multiplicity != f.observed_multiplicity) return false;
        const auto& d = newton::initial_form_data()[facet_class - 1];
        if (d.unknown_cofactors) {
            if (static_cast<int>(cofactor_terms.size()) != d.unknown_cofactors) return false;
            for (std::size_t i = 0; i < cofactor_terms.size(); ++i)
                if (static_cast<int>(cofactor_terms[i]) != d.cofactor_terms || cofactor_degrees[i] != d.cofactor_degree) return false;
        }
        return true;
    }
};

// The two cells of the class-2 subdivision as 3x2x2 tensors.
inline std::array<Polynomial, 2> class2_cell_discriminants() {
    std::array<Polynomial, 2> out{Polynomial(16), Polynomial(16)};
    const std::array<std::array<std::uint32_t, 3>, 2> rows{{{0b00, 0b01, 0b10}, {0b01, 0b10, 0b11}}};
    for (int c = 0; c < 2; ++c) {
        std::array<std::array<std::uint32_t, 4>, 3> labels;
        for (int i = 0; i < 3; ++i)
            for (std::uint32_t jk = 0; jk < 4; ++jk) labels[i][jk] = rows[c][i] << 2 | jk;
        out[c] = primitive_part(boundary_hyperdeterminant_322(labels, 16));
    }
    return out;
}

inline FacetInitialFormReport verify_facet_initial_form(const Polynomial& D, int facet_class) {
    if (facet_class < 1 || facet_class > 8) throw std::out_of_range("facet class must be in 1..8");
    const auto& cls = newton::facet_classes()[facet_class - 1];
    const auto& data = newton::initial_form_data()[facet_class - 1];
    FacetInitialFormReport rep;
    rep.facet_class = facet_class;
    rep.weight = newton::facet_weight(cls);
    Polynomial in = initial_form(D, rep.weight);
    rep.initial_form_terms = in.size();
    rep.expected_terms = static_cast<std::size_t>(data.initial_form_terms);

    if (facet_class == 1) {
        std::vector<Term> kept;
        for (const auto& t : D)
            if (t.exponent[0] == 0) kept.push_back(t);
        rep.product_matches = in == Polynomial::from_sorted_terms(16, std::move(kept));
        rep.note = "initial form equals the polynomial with c0000 set to 0";
        return rep;
    }

    Polynomial scaled = data.scale == 1 ? in : scale(in, Integer(data.scale));
    Polynomial product = Polynomial::one(16);
    auto account = [&](const Polynomial& f, std::string text, int printed) {
        FactorCheck fc{std::move(text), f.size(), f.total_degree(), printed, multiplicity(scaled, f)};
        rep.factors.push_back(fc);
        product = mul(product, pow(f, static_cast<unsigned>(printed)));
    };
    for (const auto& f : data.factors) {
        std::string text = f.matrix.size() == 1 ? f.matrix[0] : "det of " + std::to_string(static_cast<int>(std::sqrt(f.matrix.size()))) + "x" +
                                                                       std::to_string(static_cast<int>(std::sqrt(f.matrix.size()))) + " matrix";
        account(printed_factor(f), text, f.multiplicity);
    }
    if (!data.embedded_d222.empty()) account(embed(build_D222(), data.embedded_d222, 16), "2x2x2 hyperdeterminant on the shared square", 2);

    if (!data.unknown_cofactors) {
        rep.product_matches = scaled == product;
        if (!rep.product_matches && scaled == negate(product)) rep.note = "product agrees up to sign";
        return rep;
    }
    auto residual = try_divide(scaled, product);
    if (!residual) {
        rep.note = "printed factors do not divide the initial form";
        return rep;
    }
    std::vector<Polynomial> candidates;
    if (facet_class == 2) {
        auto cells = class2_cell_discriminants();
        candidates.assign(cells.begin(), cells.end());
    }
    auto cof = recover_cofactors(*residual, data.unknown_cofactors, candidates);
    Polynomial check = product;
    for (const auto& c : cof) {
        rep.cofactor_terms.push_back(c.size());
        rep.cofactor_degrees.push_back(c.total_degree());
        check = mul(check, c);
    }
    rep.product_matches = check == scaled;
    return rep;
}

}  // namespace hypercube

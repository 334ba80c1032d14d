#pragma once

#include "hypercube/exponent.hpp"
#include "hypercube/integer.hpp"
#include "hypercube/parallel.hpp"
#include "hypercube/term_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypercube {

struct ArityMismatch : std::invalid_argument {
    ArityMismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("ring arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by the zero polynomial") {}
};

struct NonDivisible : std::runtime_error {
    explicit NonDivisible(std::string witness)
        : std::runtime_error("not exactly divisible; remainder term " + witness), witness(std::move(witness)) {}
    std::string witness;
};

struct Term {
    ExponentVector exponent;
    Integer coefficient;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t arity) : arity_(arity) {
        if (arity > ExponentVector::kCapacity) throw std::length_error("ring arity exceeds exponent capacity");
    }

    static Polynomial constant(std::size_t arity, const Integer& c) {
        Polynomial p(arity);
        if (!c.is_zero()) p.terms_.push_back({ExponentVector{}, c});
        return p;
    }
    static Polynomial one(std::size_t arity) { return constant(arity, 1); }
    static Polynomial variable(std::size_t arity, std::size_t index) {
        if (index >= arity) throw std::out_of_range("variable index out of range");
        ExponentVector e;
        e.set(index, 1);
        return monomial(arity, e, 1);
    }
    static Polynomial monomial(std::size_t arity, const ExponentVector& e, const Integer& c) {
        Polynomial p(arity);
        if (!c.is_zero()) p.terms_.push_back({e, c});
        return p;
    }
    // Combines duplicates, drops zeros and sorts.
    static Polynomial from_terms(std::size_t arity, std::vector<Term> terms) {
        Polynomial p(arity);
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent)
                p.terms_.back().coefficient += t.coefficient;
            else
                p.terms_.push_back(std::move(t));
        }
        std::erase_if(p.terms_, [](const Term& t) { return t.coefficient.is_zero(); });
        return p;
    }
    // Terms must already be sorted, distinct and nonzero.
    static Polynomial from_sorted_terms(std::size_t arity, std::vector<Term> terms) {
        Polynomial p(arity);
        p.terms_ = std::move(terms);
        return p;
    }

    std::size_t arity() const { return arity_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& operator[](std::size_t i) const { return terms_[i]; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    int total_degree() const {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.exponent.total_degree());
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().exponent.total_degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.exponent.total_degree() == d; });
    }
    std::vector<int> max_exponents() const {
        std::vector<int> m(arity_, 0);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < arity_; ++i) m[i] = std::max<int>(m[i], t.exponent[i]);
        return m;
    }

    Integer coefficient(const ExponentVector& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const ExponentVector& x) { return t.exponent < x; });
        if (it != terms_.end() && it->exponent == e) return it->coefficient;
        return Integer(0);
    }
    bool contains(const ExponentVector& e) const { return !coefficient(e).is_zero(); }

    std::vector<ExponentVector> support() const {
        std::vector<ExponentVector> s;
        s.reserve(terms_.size());
        for (const auto& t : terms_) s.push_back(t.exponent);
        return s;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coefficient != b.terms_[i].coefficient)
                return false;
        return true;
    }

private:
    std::size_t arity_ = 0;
    std::vector<Term> terms_;
};

namespace detail {

inline void require_same_arity(const Polynomial& p, const Polynomial& q) {
    if (p.arity() != q.arity()) throw ArityMismatch(p.arity(), q.arity());
}

template <class Value>
std::vector<Term> drain_sorted(const TermTable<Value>& table) {
    std::vector<Term> out;
    out.reserve(table.size());
    table.for_each([&](const ExponentVector& e, const Value& v) {
        if constexpr (std::is_same_v<Value, i128>) {
            if (v != 0) out.push_back({e, Integer::from_i128(v)});
        } else {
            if (!v.is_zero()) out.push_back({e, v});
        }
    });
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    return out;
}

// Sum of absolute values of the coefficients, saturating at 2^127 - 1.
inline unsigned __int128 l1_norm(const Polynomial& p) {
    constexpr unsigned __int128 cap = (static_cast<unsigned __int128>(1) << 127) - 1;
    unsigned __int128 s = 0;
    for (const auto& t : p) {
        if (!t.coefficient.is_small()) return cap;
        std::int64_t c = t.coefficient.small();
        unsigned __int128 a = c < 0 ? static_cast<unsigned __int128>(-(static_cast<i128>(c))) : static_cast<unsigned __int128>(c);
        s += a;
        if (s > cap) return cap;
    }
    return s;
}

inline bool product_fits_i128(const Polynomial& p, const Polynomial& q) {
    unsigned __int128 a = l1_norm(p), b = l1_norm(q);
    constexpr unsigned __int128 limit = static_cast<unsigned __int128>(1) << 126;
    if (a == 0 || b == 0) return true;
    return a < limit / b;
}

}  // namespace detail

inline Polynomial add(const Polynomial& p, const Polynomial& q) {
    detail::require_same_arity(p, q);
    std::vector<Term> out;
    out.reserve(p.size() + q.size());
    auto i = p.begin(), j = q.begin();
    while (i != p.end() || j != q.end()) {
        if (j == q.end() || (i != p.end() && i->exponent < j->exponent)) {
            out.push_back(*i++);
        } else if (i == p.end() || j->exponent < i->exponent) {
            out.push_back(*j++);
        } else {
            Integer c = i->coefficient + j->coefficient;
            if (!c.is_zero()) out.push_back({i->exponent, std::move(c)});
            ++i;
            ++j;
        }
    }
    return Polynomial::from_sorted_terms(p.arity(), std::move(out));
}

inline Polynomial scale(const Polynomial& p, const Integer& c) {
    if (c.is_zero()) return Polynomial(p.arity());
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p) out.push_back({t.exponent, t.coefficient * c});
    return Polynomial::from_sorted_terms(p.arity(), std::move(out));
}

inline Polynomial negate(const Polynomial& p) { return scale(p, -1); }
inline Polynomial subtract(const Polynomial& p, const Polynomial& q) { return add(p, negate(q)); }

inline Polynomial mul(const Polynomial& p, const Polynomial& q, int jobs = 1) {
    detail::require_same_arity(p, q);
    if (p.is_zero() || q.is_zero()) return Polynomial(p.arity());
    auto mp = p.max_exponents(), mq = q.max_exponents();
    for (std::size_t i = 0; i < p.arity(); ++i)
        if (mp[i] + mq[i] > 255) throw std::overflow_error("exponent exceeds 255 in product");

    const Polynomial& outer = p.size() <= q.size() ? p : q;
    const Polynomial& inner = p.size() <= q.size() ? q : p;
    std::size_t estimate = std::min(outer.size() * inner.size(), 4 * inner.size() + 64);

    auto run = [&](auto tag) {
        using Value = decltype(tag);
        int blocks = std::max(1, std::min<int>(jobs, static_cast<int>(outer.size())));
        std::vector<TermTable<Value>> tables;
        tables.reserve(blocks);
        for (int b = 0; b < blocks; ++b) tables.emplace_back(estimate / blocks + 16);
        parallel_blocks(outer.size(), blocks, [&](std::size_t b, std::size_t lo, std::size_t hi) {
            auto& table = tables[b];
            for (std::size_t i = lo; i < hi; ++i) {
                const Term& a = outer[i];
                if constexpr (std::is_same_v<Value, i128>) {
                    i128 ca = a.coefficient.small();
                    for (const Term& t : inner) table[a.exponent + t.exponent] += ca * t.coefficient.small();
                } else {
                    for (const Term& t : inner) table[a.exponent + t.exponent] += a.coefficient * t.coefficient;
                }
            }
        });
        for (int b = 1; b < blocks; ++b) {
            tables[b].for_each([&](const ExponentVector& e, const Value& v) { tables[0][e] += v; });
            tables[b].clear_and_release();
        }
        return Polynomial::from_sorted_terms(p.arity(), detail::drain_sorted(tables[0]));
    };
    if (detail::product_fits_i128(p, q)) return run(i128{});
    return run(Integer{});
}

inline Polynomial pow(const Polynomial& p, unsigned k, int jobs = 1) {
    Polynomial result = Polynomial::one(p.arity());
    Polynomial base = p;
    while (k) {
        if (k & 1u) result = mul(result, base, jobs);
        k >>= 1;
        if (k) base = mul(base, base, jobs);
    }
    return result;
}

// Product of factors, multiplying the operands with fewest terms first.
inline Polynomial product(std::vector<Polynomial> factors, std::size_t arity, int jobs = 1) {
    if (factors.empty()) return Polynomial::one(arity);
    std::stable_sort(factors.begin(), factors.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
    Polynomial acc = std::move(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, factors[i], jobs);
    return acc;
}

// Sends variable v to targets[v].first + targets[v].second * w in a ring of
// arity new_arity, where w has index w_index.
struct SplitMap {
    std::size_t new_arity = 0;
    std::size_t w_index = 0;
    std::vector<std::pair<std::size_t, std::size_t>> targets;

    // c_v -> c_{2v} + c_{2v+1} w, with w appended last; appends one binary
    // digit to every cube-vertex label.
    static SplitMap interleaved(std::size_t arity) {
        SplitMap m;
        m.new_arity = 2 * arity + 1;
        m.w_index = 2 * arity;
        for (std::size_t v = 0; v < arity; ++v) m.targets.emplace_back(2 * v, 2 * v + 1);
        return m;
    }
};

inline Polynomial substitute_split(const Polynomial& p, const SplitMap& map) {
    if (map.targets.size() != p.arity()) throw std::invalid_argument("split map does not cover every variable");
    if (map.w_index >= map.new_arity) throw std::invalid_argument("split map places w outside the ring");
    for (auto [a, b] : map.targets)
        if (a >= map.new_arity || b >= map.new_arity || a == map.w_index || b == map.w_index)
            throw std::invalid_argument("split map target outside the ring");
    std::size_t n = map.new_arity;
    std::vector<std::vector<Polynomial>> powers(p.arity());
    auto mx = p.max_exponents();
    for (std::size_t v = 0; v < p.arity(); ++v) {
        auto [a, b] = map.targets[v];
        ExponentVector eb;
        eb.set(b, 1);
        eb.set(map.w_index, 1);
        Polynomial binom = add(Polynomial::variable(n, a), Polynomial::monomial(n, eb, 1));
        powers[v].push_back(Polynomial::one(n));
        for (int k = 1; k <= mx[v]; ++k) powers[v].push_back(mul(powers[v].back(), binom));
    }
    TermTable<Integer> acc(p.size() * 4);
    for (const auto& t : p) {
        Polynomial image = Polynomial::constant(n, t.coefficient);
        for (std::size_t v = 0; v < p.arity(); ++v)
            if (t.exponent[v]) image = mul(image, powers[v][t.exponent[v]]);
        for (const auto& s : image) acc[s.exponent] += s.coefficient;
    }
    return Polynomial::from_sorted_terms(n, detail::drain_sorted(acc));
}

// Coefficients b_0..b_d of p as a polynomial in variable w; the result lives
// in the ring with slot w removed.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t w_index) {
    if (w_index >= p.arity()) throw std::out_of_range("w index outside the ring");
    std::size_t n = p.arity() - 1;
    std::vector<std::vector<Term>> buckets;
    for (const auto& t : p) {
        int d = t.exponent[w_index];
        if (static_cast<std::size_t>(d) >= buckets.size()) buckets.resize(d + 1);
        ExponentVector e;
        for (std::size_t i = 0, k = 0; i < p.arity(); ++i)
            if (i != w_index) e.set(k++, t.exponent[i]);
        buckets[d].push_back({e, t.coefficient});
    }
    if (buckets.empty()) buckets.resize(1);
    std::vector<Polynomial> out;
    for (auto& b : buckets) {
        // Removing one slot keeps lexicographic order within a bucket.
        out.push_back(Polynomial::from_sorted_terms(n, std::move(b)));
    }
    return out;
}

inline std::vector<Polynomial> coefficients_in_w(const Polynomial& p, const SplitMap& map) {
    return coefficients_in(p, map.w_index);
}

inline Polynomial exact_divide(const Polynomial& p, const Integer& c) {
    if (c.is_zero()) throw DivisionByZero();
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p) {
        Integer q, r;
        Integer::divmod(t.coefficient, c, q, r);
        if (!r.is_zero()) throw NonDivisible(t.coefficient.to_string() + "*x^(" + t.exponent.to_string(p.arity()) + ")");
        out.push_back({t.exponent, std::move(q)});
    }
    return Polynomial::from_sorted_terms(p.arity(), std::move(out));
}

inline Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    detail::require_same_arity(p, q);
    if (q.is_zero()) throw DivisionByZero();
    std::size_t n = p.arity();
    auto witness = [n](const ExponentVector& e, const Integer& c) {
        return c.to_string() + "*x^(" + e.to_string(n) + ")";
    };
    if (q.size() == 1) {
        const Term& m = q[0];
        std::vector<Term> out;
        out.reserve(p.size());
        for (const auto& t : p) {
            if (!m.exponent.divides(t.exponent)) throw NonDivisible(witness(t.exponent, t.coefficient));
            Integer c, r;
            Integer::divmod(t.coefficient, m.coefficient, c, r);
            if (!r.is_zero()) throw NonDivisible(witness(t.exponent, t.coefficient));
            out.push_back({t.exponent - m.exponent, std::move(c)});
        }
        return Polynomial::from_terms(n, std::move(out));
    }
    std::map<ExponentVector, Integer, std::greater<>> rem;
    for (const auto& t : p) rem.emplace(t.exponent, t.coefficient);
    const Term& lead = q.terms().back();
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lead.exponent.divides(it->first)) throw NonDivisible(witness(it->first, it->second));
        Integer c, r;
        Integer::divmod(it->second, lead.coefficient, c, r);
        if (!r.is_zero()) throw NonDivisible(witness(it->first, it->second));
        ExponentVector e = it->first - lead.exponent;
        for (const auto& t : q) {
            auto [pos, inserted] = rem.try_emplace(t.exponent + e, 0);
            pos->second -= t.coefficient * c;
            if (pos->second.is_zero()) rem.erase(pos);
        }
        quotient.push_back({e, std::move(c)});
    }
    std::reverse(quotient.begin(), quotient.end());
    return Polynomial::from_sorted_terms(n, std::move(quotient));
}

// Terms of minimal weight <w, e>.
inline Polynomial initial_form(const Polynomial& p, const std::vector<Rational>& w) {
    if (w.size() != p.arity()) throw std::invalid_argument("weight length differs from ring arity");
    if (p.is_zero()) return p;
    BigInt den = 1;
    for (const auto& x : w) den = boost::multiprecision::lcm(den, denominator(x));
    std::vector<BigInt> iw;
    for (const auto& x : w) iw.push_back(numerator(x) * (den / denominator(x)));
    bool small = std::all_of(iw.begin(), iw.end(), [](const BigInt& v) { return boost::multiprecision::abs(v) < (BigInt(1) << 50); });
    std::vector<Term> out;
    if (small) {
        std::vector<std::int64_t> ww(iw.begin(), iw.end());
        std::int64_t best = INT64_MAX;
        for (const auto& t : p) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < p.arity(); ++i) s += ww[i] * t.exponent[i];
            if (s < best) {
                best = s;
                out.clear();
            }
            if (s == best) out.push_back(t);
        }
    } else {
        std::optional<BigInt> best;
        for (const auto& t : p) {
            BigInt s = 0;
            for (std::size_t i = 0; i < p.arity(); ++i) s += iw[i] * t.exponent[i];
            if (!best || s < *best) {
                best = s;
                out.clear();
            }
            if (s == *best) out.push_back(t);
        }
    }
    return Polynomial::from_sorted_terms(p.arity(), std::move(out));
}

inline Polynomial initial_form(const Polynomial& p, const std::vector<std::int64_t>& w) {
    std::vector<Rational> r(w.begin(), w.end());
    return initial_form(p, r);
}

inline BigInt evaluate(const Polynomial& p, const std::vector<BigInt>& point) {
    if (point.size() != p.arity()) throw std::invalid_argument("point length differs from ring arity");
    auto mx = p.max_exponents();
    std::vector<std::vector<BigInt>> powers(p.arity());
    for (std::size_t i = 0; i < p.arity(); ++i) {
        powers[i].push_back(1);
        for (int k = 1; k <= mx[i]; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    // Use 128-bit accumulation when every term is provably small.
    long double bound = 0;
    bool small_point = std::all_of(point.begin(), point.end(), [](const BigInt& v) { return boost::multiprecision::abs(v) < 1000000; });
    if (small_point) {
        std::vector<long double> ab;
        for (const auto& v : point) ab.push_back(static_cast<long double>(boost::multiprecision::abs(v)));
        for (const auto& t : p) {
            long double m = t.coefficient.is_small() ? std::abs(static_cast<long double>(t.coefficient.small())) : 1e40L;
            for (std::size_t i = 0; i < p.arity(); ++i)
                for (int k = 0; k < t.exponent[i]; ++k) m *= ab[i];
            bound += m;
            if (bound > 1e36L) break;
        }
    }
    if (small_point && bound < 1e36L) {
        std::vector<std::vector<i128>> pw(p.arity());
        for (std::size_t i = 0; i < p.arity(); ++i)
            for (const auto& v : powers[i]) pw[i].push_back(to_i128(v));
        i128 s = 0;
        for (const auto& t : p) {
            i128 m = t.coefficient.small();
            for (std::size_t i = 0; i < p.arity(); ++i)
                if (t.exponent[i]) m *= pw[i][t.exponent[i]];
            s += m;
        }
        return to_big(s);
    }
    BigInt s = 0;
    for (const auto& t : p) {
        BigInt m = t.coefficient.big();
        for (std::size_t i = 0; i < p.arity(); ++i)
            if (t.exponent[i]) m *= powers[i][t.exponent[i]];
        s += m;
    }
    return s;
}

inline BigInt evaluate(const Polynomial& p, const std::vector<std::int64_t>& point) {
    return evaluate(p, std::vector<BigInt>(point.begin(), point.end()));
}

// Renames variables: variable i of p becomes variable image[i] in a ring of
// arity new_arity.
inline Polynomial relabel(const Polynomial& p, const std::vector<std::size_t>& image, std::size_t new_arity) {
    if (image.size() != p.arity()) throw std::invalid_argument("relabel map does not cover every variable");
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p) {
        ExponentVector e;
        for (std::size_t i = 0; i < p.arity(); ++i)
            if (t.exponent[i]) e.set(image[i], e[image[i]] + t.exponent[i]);
        out.push_back({e, t.coefficient});
    }
    return Polynomial::from_terms(new_arity, std::move(out));
}

// Substitutes zero for variable v.
inline Polynomial set_to_zero(const Polynomial& p, std::size_t v) {
    std::vector<Term> out;
    for (const auto& t : p)
        if (t.exponent[v] == 0) out.push_back(t);
    return Polynomial::from_sorted_terms(p.arity(), std::move(out));
}

inline Integer content(const Polynomial& p) {
    Integer g(0);
    for (const auto& t : p) g = gcd(g, t.coefficient);
    return g;
}

inline Integer max_abs_coefficient(const Polynomial& p) {
    Integer m(0);
    for (const auto& t : p) m = std::max(m, t.coefficient.abs());
    return m;
}

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return subtract(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

}  // namespace hypercube

#pragma once

// Exact polyhedral queries: H-presentations, face dimensions, vertex tests,
// inequality orbits modulo lineality, and the symmetry-pruned hull loop.

#include "hypercube/cube.hpp"
#include "hypercube/exponent.hpp"
#include "hypercube/linalg.hpp"
#include "hypercube/lp.hpp"
#include "hypercube/parallel.hpp"
#include "hypercube/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypercube {

struct OutsidePolytope : std::domain_error {
    using std::domain_error::domain_error;
};

struct Inequality {
    IntVector normal;
    Sense sense = Sense::GE;
    std::int64_t rhs = 0;

    template <class P>
    std::int64_t evaluate(const P& x) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < normal.size(); ++i)
            if (normal[i]) s += normal[i] * static_cast<std::int64_t>(x[i]);
        return s;
    }
    template <class P>
    bool satisfied_by(const P& x) const {
        std::int64_t v = evaluate(x);
        return sense == Sense::GE ? v >= rhs : sense == Sense::LE ? v <= rhs : v == rhs;
    }
    template <class P>
    bool tight_at(const P& x) const {
        return evaluate(x) == rhs;
    }
    friend bool operator==(const Inequality&, const Inequality&) = default;
};

inline std::string to_string(const Inequality& f, int n) {
    std::string s;
    for (std::size_t l = 0; l < f.normal.size(); ++l) {
        std::int64_t c = f.normal[l];
        if (!c) continue;
        if (c < 0) s += s.empty() ? "-" : " - ";
        else if (!s.empty()) s += " + ";
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a);
        std::string lab(n, '0');
        for (int k = 0; k < n; ++k)
            if (l >> (n - 1 - k) & 1) lab[k] = '1';
        s += "x" + lab;
    }
    if (s.empty()) s = "0";
    s += f.sense == Sense::GE ? " >= " : f.sense == Sense::LE ? " <= " : " = ";
    return s + std::to_string(f.rhs);
}

// Inverse of to_string: terms such as "2x0110" or "- x1111", one relation
// (>=, <=, =) and an integer right-hand side. Whitespace is optional.
inline Inequality parse_inequality(std::string_view text, int n) {
    Inequality f;
    f.normal.assign(std::size_t{1} << n, 0);
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    std::size_t rel = t.find_first_of("<>=");
    if (rel == std::string::npos || rel == 0) throw std::invalid_argument("inequality lacks a relation: " + std::string(text));
    std::size_t len = 1;
    if (t.compare(rel, 2, ">=") == 0) f.sense = Sense::GE, len = 2;
    else if (t.compare(rel, 2, "<=") == 0) f.sense = Sense::LE, len = 2;
    else if (t[rel] == '=') f.sense = Sense::EQ;
    else throw std::invalid_argument("strict relations are not supported: " + std::string(text));
    std::string lhs = t.substr(0, rel), rhs = t.substr(rel + len);
    std::size_t used = 0;
    f.rhs = std::stoll(rhs, &used);
    if (used != rhs.size()) throw std::invalid_argument("bad right-hand side: " + rhs);
    std::size_t i = 0;
    while (i < lhs.size()) {
        std::int64_t sign = 1;
        if (lhs[i] == '+' || lhs[i] == '-') sign = lhs[i++] == '-' ? -1 : 1;
        std::int64_t coeff = 1;
        std::size_t j = i;
        while (j < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[j]))) ++j;
        if (j > i) coeff = std::stoll(lhs.substr(i, j - i));
        if (j < lhs.size() && lhs[j] == '*') ++j;
        if (j >= lhs.size() || lhs[j] != 'x') throw std::invalid_argument("expected a variable in: " + lhs);
        std::size_t k = j + 1;
        while (k < lhs.size() && (lhs[k] == '0' || lhs[k] == '1')) ++k;
        if (k - j - 1 != static_cast<std::size_t>(n)) throw std::invalid_argument("bad variable label in: " + lhs);
        f.normal[std::stoul(lhs.substr(j + 1, n), nullptr, 2)] += sign * coeff;
        i = k;
    }
    return f;
}

struct HPolytope {
    std::size_t ambient = 0;
    IntMatrix equations;
    IntVector eq_rhs;
    std::vector<Inequality> inequalities;

    int dimension() const { return static_cast<int>(ambient) - (equations.empty() ? 0 : rank(equations)); }

    template <class P>
    bool contains(const P& x) const {
        for (std::size_t r = 0; r < equations.size(); ++r) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < ambient; ++i) s += equations[r][i] * static_cast<std::int64_t>(x[i]);
            if (s != eq_rhs[r]) return false;
        }
        for (const auto& f : inequalities)
            if (!f.satisfied_by(x)) return false;
        return true;
    }

    // Indices of inequalities tight at x; throws when x lies outside.
    template <class P>
    std::vector<std::size_t> active_set(const P& x) const {
        if (!contains(x)) throw OutsidePolytope("point lies outside the polytope");
        std::vector<std::size_t> act;
        for (std::size_t i = 0; i < inequalities.size(); ++i)
            if (inequalities[i].tight_at(x)) act.push_back(i);
        return act;
    }

    template <class P>
    int face_dimension(const P& x) const {
        auto act = active_set(x);
        IntMatrix m = equations;
        for (auto i : act) m.push_back(inequalities[i].normal);
        return static_cast<int>(ambient) - (m.empty() ? 0 : rank(m));
    }
};

struct VertexTest {
    bool vertex = false;
    std::vector<std::size_t> active;
};

template <class P>
VertexTest is_vertex(const P& x, const HPolytope& poly) {
    VertexTest t;
    t.active = poly.active_set(x);
    IntMatrix m = poly.equations;
    for (auto i : t.active) m.push_back(poly.inequalities[i].normal);
    t.vertex = !m.empty() && rank(m) == static_cast<int>(poly.ambient);
    return t;
}

template <class P>
int face_dimension(const P& x, const HPolytope& poly) {
    return poly.face_dimension(x);
}

// Representative of an inequality on {A x = degrees} with sense >=, the
// normal vanishing on the gauge labels and the data made primitive.
struct GaugedInequality {
    IntVector normal;
    std::int64_t rhs = 0;
    auto operator<=>(const GaugedInequality&) const = default;
};

inline GaugedInequality gauge(const Inequality& f, int n, const IntVector& degrees) {
    if (f.sense == Sense::EQ) throw std::invalid_argument("cannot gauge an equation");
    IntVector v = f.normal;
    std::int64_t b = f.rhs;
    if (f.sense == Sense::LE) {
        for (auto& x : v) x = -x;
        b = -b;
    }
    auto [y, r] = remove_lineality(n, v);
    for (std::size_t k = 0; k < y.size(); ++k) b -= y[k] * degrees[k];
    std::int64_t g = std::gcd(gcd_of(r), b < 0 ? -b : b);
    if (g > 1) {
        for (auto& x : r) x /= g;
        b /= g;
    }
    return {r, b};
}

inline Inequality act_on_inequality(const CubeGroup& G, std::size_t g, const Inequality& f) {
    return {G.act(g, f.normal), f.sense, f.rhs};
}

// Distinct images of an inequality under B_n, two images being the same when
// they agree on the affine space {A x = degrees}.
inline std::vector<Inequality> expand_inequality_orbit(const Inequality& f, int n, const IntVector& degrees) {
    const CubeGroup& G = cube_group(n);
    std::set<GaugedInequality> seen;
    std::vector<Inequality> out;
    for (std::size_t g = 0; g < G.order(); ++g) {
        Inequality h = act_on_inequality(G, g, f);
        if (seen.insert(gauge(h, n, degrees)).second) out.push_back(std::move(h));
    }
    return out;
}

// Points with a symmetry dimension n (0 = no symmetry) and the affine
// equations they satisfy.
struct PointCloud {
    std::vector<ExponentVector> points;
    std::size_t arity = 0;
    int symmetry = 0;
    IntMatrix equations;
    IntVector eq_rhs;
};

struct VertexCensus {
    std::vector<Orbit> orbits;  // vertex orbit representatives, lexicographic
    std::size_t vertex_count = 0;
    std::size_t lp_solves = 0;
    std::vector<std::size_t> surviving_after_round;  // orbit counts per pruning round
};

struct HullOptions {
    std::size_t chunk = 2000;
    std::size_t batch = 64;
    int jobs = 1;
    std::function<void(const std::string&)> progress;
};

namespace detail {

// Rows kept in the point-in-hull LP: coordinates not determined by the
// equations, plus the convexity row.
inline std::vector<std::size_t> free_coordinates(const IntMatrix& equations, std::size_t arity) {
    if (equations.empty()) {
        std::vector<std::size_t> all(arity);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<RatVector> m;
    for (const auto& r : equations) m.emplace_back(r.begin(), r.end());
    auto piv = rref(m);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < arity; ++i)
        if (std::find(piv.begin(), piv.end(), i) == piv.end()) keep.push_back(i);
    return keep;
}

class HullLp {
public:
    HullLp(const std::vector<std::size_t>& coords) : coords_(coords), rows_(coords.size() + 1) {}

    void load(const std::vector<const ExponentVector*>& pts) {
        data_.assign(pts.size() * rows_, 0);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            for (std::size_t r = 0; r < coords_.size(); ++r) data_[j * rows_ + r] = (*pts[j])[coords_[r]];
            data_[j * rows_ + coords_.size()] = 1;
        }
        count_ = pts.size();
    }

    // Convex combination of enabled columns equal to p, or nullopt.
    std::optional<std::vector<std::pair<std::size_t, Rational>>> combination(const ExponentVector& p,
                                                                             const std::uint8_t* disabled) const {
        StandardLp lp;
        lp.rows = rows_;
        lp.columns = {data_.data(), count_, disabled};
        for (auto c : coords_) lp.rhs.push_back(p[c]);
        lp.rhs.push_back(1);
        LpResult r = solve_standard(lp);
        if (r.status != LpStatus::Optimal) return std::nullopt;
        return r.solution;
    }

    std::size_t size() const { return count_; }

private:
    std::vector<std::size_t> coords_;
    std::size_t rows_;
    std::size_t count_ = 0;
    std::vector<std::int64_t> data_;
};

}  // namespace detail

// Exact re-check of a convex combination in the full coordinates.
inline bool verify_combination(const ExponentVector& p, const std::vector<const ExponentVector*>& pts,
                               const std::vector<std::pair<std::size_t, Rational>>& w, std::size_t arity) {
    Rational total = 0;
    std::vector<Rational> s(arity, 0);
    for (const auto& [j, c] : w) {
        if (c < 0) return false;
        total += c;
        for (std::size_t i = 0; i < arity; ++i) s[i] += c * static_cast<std::int64_t>((*pts[j])[i]);
    }
    if (total != 1) return false;
    for (std::size_t i = 0; i < arity; ++i)
        if (s[i] != static_cast<std::int64_t>(p[i])) return false;
    return true;
}

// Vertex orbits of conv(cloud). Redundant orbits are deleted in rounds over
// lexicographically contiguous chunks of orbit representatives; the
// survivors are then certified one by one against every remaining point
// except the candidate itself.
inline VertexCensus vertices_of_point_cloud(PointCloud cloud, const HullOptions& opt = {}) {
    auto& pts = cloud.points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t r = 0; r < cloud.equations.size(); ++r)
        for (const auto& p : pts) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < cloud.arity; ++i) s += cloud.equations[r][i] * p[i];
            if (s != cloud.eq_rhs[r]) throw std::invalid_argument("cloud point violates the stated equations");
        }

    // Orbits and membership.
    std::vector<Orbit> orbits;
    std::vector<std::vector<std::size_t>> members;
    if (cloud.symmetry > 0) {
        auto dec = orbit_decompose(pts, cloud.symmetry);
        if (!dec.closure_witnesses.empty()) throw std::invalid_argument("cloud is not closed under the symmetry group");
        orbits = dec.orbits;
        const CubeGroup& G = cube_group(cloud.symmetry);
        for (const auto& o : orbits) {
            std::vector<std::size_t> idx;
            for (const auto& x : G.orbit(o.representative))
                idx.push_back(static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin()));
            members.push_back(std::move(idx));
        }
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            orbits.push_back({pts[i], 1});
            members.push_back({i});
        }
    }
    std::size_t no = orbits.size();
    std::vector<std::uint8_t> alive(no, 1);
    auto coords = detail::free_coordinates(cloud.equations, cloud.arity);
    VertexCensus census;
    auto say = [&](const std::string& s) {
        if (opt.progress) opt.progress(s);
    };

    // Pruning rounds over representatives.
    for (std::size_t chunk = std::max<std::size_t>(opt.chunk, 2);; chunk *= 2) {
        std::vector<std::size_t> live;
        for (std::size_t o = 0; o < no; ++o)
            if (alive[o]) live.push_back(o);
        std::size_t blocks = (live.size() + chunk - 1) / chunk;
        std::vector<std::vector<std::size_t>> killed(blocks);
        std::vector<std::size_t> solves(blocks, 0);
        parallel_for(blocks, opt.jobs, [&](std::size_t b) {
            std::size_t lo = b * chunk, hi = std::min(live.size(), lo + chunk);
            std::vector<const ExponentVector*> cols;
            for (std::size_t t = lo; t < hi; ++t) cols.push_back(&orbits[live[t]].representative);
            detail::HullLp lp(coords);
            lp.load(cols);
            std::vector<std::uint8_t> off(cols.size(), 0);
            for (std::size_t t = 0; t < cols.size(); ++t) {
                off[t] = 1;
                ++solves[b];
                auto w = lp.combination(*cols[t], off.data());
                if (w) {
                    if (!verify_combination(*cols[t], cols, *w, cloud.arity))
                        throw std::logic_error("hull LP returned an invalid combination");
                    killed[b].push_back(live[lo + t]);
                } else {
                    off[t] = 0;
                }
            }
        });
        for (std::size_t b = 0; b < blocks; ++b) {
            census.lp_solves += solves[b];
            for (auto o : killed[b]) alive[o] = 0;
        }
        std::size_t left = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));
        census.surviving_after_round.push_back(left);
        say("pruning with chunk " + std::to_string(chunk) + ": " + std::to_string(left) + " orbits remain");
        if (chunk >= live.size()) break;
    }

    // Certification against all remaining points.
    std::vector<const ExponentVector*> cols;
    std::vector<std::size_t> col_orbit, first_col(no, 0);
    for (std::size_t o = 0; o < no; ++o) {
        if (!alive[o]) continue;
        first_col[o] = cols.size();
        for (auto idx : members[o]) {
            cols.push_back(&pts[idx]);
            col_orbit.push_back(o);
        }
    }
    detail::HullLp lp(coords);
    lp.load(cols);
    std::vector<std::uint8_t> off(cols.size(), 0);
    std::vector<std::size_t> candidates;
    for (std::size_t o = 0; o < no; ++o)
        if (alive[o]) candidates.push_back(o);
    for (std::size_t start = 0; start < candidates.size(); start += opt.batch) {
        std::size_t end = std::min(candidates.size(), start + opt.batch);
        std::vector<std::uint8_t> redundant(end - start, 0);
        parallel_blocks(end - start, opt.jobs, [&](std::size_t, std::size_t lo, std::size_t hi) {
            std::vector<std::uint8_t> mask = off;
            for (std::size_t t = lo; t < hi; ++t) {
                std::size_t o = candidates[start + t];
                // The representative is the first member of its sorted orbit.
                std::size_t self = first_col[o];
                mask[self] = 1;
                auto w = lp.combination(*cols[self], mask.data());
                mask[self] = off[self];
                if (w) {
                    if (!verify_combination(*cols[self], cols, *w, cloud.arity))
                        throw std::logic_error("hull LP returned an invalid combination");
                    redundant[t] = 1;
                }
            }
        });
        census.lp_solves += end - start;
        for (std::size_t t = 0; t < end - start; ++t) {
            if (!redundant[t]) continue;
            std::size_t o = candidates[start + t];
            alive[o] = 0;
            for (std::size_t k = 0; k < members[o].size(); ++k) off[first_col[o] + k] = 1;
        }
    }
    for (std::size_t o = 0; o < no; ++o) {
        if (!alive[o]) continue;
        census.orbits.push_back(orbits[o]);
        census.vertex_count += orbits[o].size;
    }
    census.surviving_after_round.push_back(census.orbits.size());
    say("certified " + std::to_string(census.orbits.size()) + " vertex orbits");
    return census;
}

// Brute-force reference: every point tested against all others.
inline std::vector<ExponentVector> vertices_brute_force(const PointCloud& cloud) {
    auto pts = cloud.points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto coords = detail::free_coordinates(cloud.equations, cloud.arity);
    std::vector<const ExponentVector*> cols;
    for (const auto& p : pts) cols.push_back(&p);
    detail::HullLp lp(coords);
    lp.load(cols);
    std::vector<std::uint8_t> off(cols.size(), 0);
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        off[i] = 1;
        if (!lp.combination(pts[i], off.data())) out.push_back(pts[i]);
        off[i] = 0;
    }
    return out;
}

}  // namespace hypercube

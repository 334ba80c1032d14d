#pragma once

// Exact revised simplex for  min c.x  s.t.  A x = b, x >= 0.
// The basis inverse is kept as an integer matrix M with M = D * B^-1, D > 0,
// so every pivot is an exact O(m^2) update.

#include "hypercube/integer.hpp"
#include "hypercube/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercube {

// Columns stored contiguously: column j occupies data[j*rows .. j*rows+rows).
struct ColumnView {
    const std::int64_t* data = nullptr;
    std::size_t count = 0;
    const std::uint8_t* disabled = nullptr;  // optional; nonzero entries are skipped
};

struct StandardLp {
    std::size_t rows = 0;
    ColumnView columns;
    BigVector rhs;
    std::vector<std::int64_t> cost;  // empty: pure feasibility
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<std::pair<std::size_t, Rational>> solution;  // nonzero variables
    Rational objective = 0;
    RatVector dual;                                          // Farkas vector when infeasible
    std::vector<std::pair<std::size_t, Rational>> ray;       // when unbounded
    std::size_t iterations = 0;
};

struct SimplexOptions {
    std::size_t pricing_window = 2048;
    std::size_t degenerate_switch = 50;
};

class RevisedSimplex {
public:
    RevisedSimplex(const StandardLp& lp, SimplexOptions opt = {}) : lp_(lp), opt_(opt), m_(lp.rows) {
        if (lp.rhs.size() != m_) throw std::invalid_argument("rhs length differs from row count");
        if (!lp.cost.empty() && lp.cost.size() != lp.columns.count) throw std::invalid_argument("cost length differs from column count");
    }

    LpResult solve() {
        init_phase1();
        LpResult res;
        if (!run(true, res)) {
            res.status = LpStatus::Infeasible;
            res.dual.resize(m_);
            for (std::size_t i = 0; i < m_; ++i) res.dual[i] = Rational(pi_[i] * row_sign_[i], D_);
            verify_farkas(res.dual);
            return res;
        }
        if (lp_.cost.empty()) {
            res.status = LpStatus::Optimal;
            fill_solution(res);
            return res;
        }
        drive_out_artificials();
        if (!run(false, res)) {
            res.status = LpStatus::Unbounded;
            return res;
        }
        res.status = LpStatus::Optimal;
        fill_solution(res);
        return res;
    }

private:
    const std::int64_t* col(std::size_t j) const { return lp_.columns.data + j * m_; }
    bool disabled(std::size_t j) const { return lp_.columns.disabled && lp_.columns.disabled[j]; }
    bool is_artificial(std::size_t v) const { return v >= lp_.columns.count; }
    std::int64_t cost_of(std::size_t v, bool phase1) const {
        if (phase1) return is_artificial(v) ? 1 : 0;
        if (is_artificial(v)) return 0;
        return lp_.cost[v];
    }

    void init_phase1() {
        row_sign_.assign(m_, 1);
        b_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            b_[i] = lp_.rhs[i];
            if (b_[i] < 0) {
                row_sign_[i] = -1;
                b_[i] = -b_[i];
            }
        }
        M_.assign(m_, BigVector(m_, 0));
        for (std::size_t i = 0; i < m_; ++i) M_[i][i] = 1;
        D_ = 1;
        basis_.resize(m_);
        in_basis_.assign(lp_.columns.count, 0);
        for (std::size_t i = 0; i < m_; ++i) basis_[i] = lp_.columns.count + i;
        xnum_ = b_;
        cursor_ = 0;
    }

    // Column j with the row signs applied.
    void load_column(std::size_t j, std::vector<std::int64_t>& a) const {
        a.resize(m_);
        const std::int64_t* c = col(j);
        for (std::size_t i = 0; i < m_; ++i) a[i] = c[i] * row_sign_[i];
    }

    void compute_pi(bool phase1) {
        pi_.assign(m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            std::int64_t c = cost_of(basis_[i], phase1);
            if (c == 0) continue;
            for (std::size_t k = 0; k < m_; ++k) pi_[k] += c * M_[i][k];
        }
        fast_ = D_ < (BigInt(1) << 96);
        pi_fast_.assign(m_, 0);
        for (std::size_t k = 0; k < m_ && fast_; ++k) {
            if (boost::multiprecision::abs(pi_[k]) >= (BigInt(1) << 96)) fast_ = false;
            else pi_fast_[k] = to_i128(pi_[k]);
        }
        d_fast_ = fast_ ? to_i128(D_) : 0;
    }

    // Reduced cost scaled by D: c_j D - pi . a_j. Returns sign via value.
    BigInt reduced_cost_big(std::size_t j, bool phase1) const {
        BigInt s = BigInt(cost_of(j, phase1)) * D_;
        const std::int64_t* c = col(j);
        for (std::size_t i = 0; i < m_; ++i)
            if (c[i]) s -= pi_[i] * (c[i] * row_sign_[i]);
        return s;
    }

    bool reduced_cost_fast(std::size_t j, bool phase1, i128& out) const {
        std::int64_t cj = cost_of(j, phase1);
        if (cj > (1 << 24) || cj < -(1 << 24)) return false;
        i128 s = static_cast<i128>(cj) * d_fast_;
        const std::int64_t* c = col(j);
        for (std::size_t i = 0; i < m_; ++i) {
            if (!c[i]) continue;
            if (c[i] > (1 << 24) || c[i] < -(1 << 24)) return false;
            s -= pi_fast_[i] * (c[i] * row_sign_[i]);
        }
        out = s;
        return true;
    }

    int reduced_sign(std::size_t j, bool phase1, i128* value) const {
        i128 v;
        if (fast_ && m_ <= 64 && reduced_cost_fast(j, phase1, v)) {
            if (value) *value = v;
            return (v > 0) - (v < 0);
        }
        BigInt b = reduced_cost_big(j, phase1);
        if (value) *value = fits_i128(b) ? to_i128(b) : (b.sign() < 0 ? -(static_cast<i128>(1) << 126) : 0);
        return b.sign();
    }

    // Entering column or nullopt when optimal.
    std::optional<std::size_t> price(bool phase1) {
        std::size_t n = lp_.columns.count;
        if (n == 0) return std::nullopt;
        if (bland_) {
            for (std::size_t j = 0; j < n; ++j) {
                if (in_basis_[j] || disabled(j)) continue;
                if (reduced_sign(j, phase1, nullptr) < 0) return j;
            }
            return std::nullopt;
        }
        std::optional<std::size_t> best;
        i128 best_val = 0;
        std::size_t scanned = 0;
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t j = (cursor_ + step) % n;
            ++scanned;
            if (!in_basis_[j] && !disabled(j)) {
                i128 v;
                if (reduced_sign(j, phase1, &v) < 0 && (!best || v < best_val)) {
                    best = j;
                    best_val = v;
                }
            }
            if (best && scanned >= opt_.pricing_window) {
                cursor_ = (j + 1) % n;
                return best;
            }
        }
        return best;
    }

    // Returns false when the direction is unbounded.
    bool pivot(std::size_t q, bool& degenerate) {
        std::vector<std::int64_t> a;
        load_column(q, a);
        BigVector u(m_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t k = 0; k < m_; ++k)
                if (a[k]) u[i] += M_[i][k] * a[k];
        std::optional<std::size_t> r;
        for (std::size_t i = 0; i < m_; ++i) {
            if (u[i] <= 0) continue;
            if (!r) {
                r = i;
                continue;
            }
            BigInt lhs = xnum_[i] * u[*r], rhs = xnum_[*r] * u[i];
            if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[*r])) r = i;
        }
        if (!r) {
            last_u_ = std::move(u);
            return false;
        }
        degenerate = xnum_[*r] == 0;
        apply_pivot(*r, q, u);
        return true;
    }

    void apply_pivot(std::size_t r, std::size_t q, const BigVector& u) {
        BigInt ur = u[r];
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            for (std::size_t k = 0; k < m_; ++k) M_[i][k] = (ur * M_[i][k] - u[i] * M_[r][k]) / D_;
            xnum_[i] = (ur * xnum_[i] - u[i] * xnum_[r]) / D_;
        }
        D_ = ur;
        if (D_ < 0) {
            D_ = -D_;
            for (auto& row : M_)
                for (auto& x : row) x = -x;
            for (auto& x : xnum_) x = -x;
        }
        std::size_t leaving = basis_[r];
        if (!is_artificial(leaving)) in_basis_[leaving] = 0;
        basis_[r] = q;
        in_basis_[q] = 1;
    }

    bool phase1_done() const {
        for (std::size_t i = 0; i < m_; ++i)
            if (is_artificial(basis_[i]) && xnum_[i] != 0) return false;
        return true;
    }

    // Runs one phase; false means infeasible (phase 1) or unbounded (phase 2).
    bool run(bool phase1, LpResult& res) {
        bland_ = false;
        std::size_t degenerate_run = 0;
        for (;;) {
            if (phase1 && phase1_done()) return true;
            compute_pi(phase1);
            auto q = price(phase1);
            if (!q) return !phase1;
            bool degenerate = false;
            ++res.iterations;
            if (!pivot(*q, degenerate)) {
                if (phase1) throw std::logic_error("phase one cannot be unbounded");
                res.ray.clear();
                res.ray.emplace_back(*q, Rational(1));
                for (std::size_t i = 0; i < m_; ++i)
                    if (!is_artificial(basis_[i]) && last_u_[i] != 0) res.ray.emplace_back(basis_[i], Rational(-last_u_[i], D_));
                return false;
            }
            if (degenerate) {
                if (++degenerate_run >= opt_.degenerate_switch) bland_ = true;
            } else {
                degenerate_run = 0;
                bland_ = false;
            }
        }
    }

    void drive_out_artificials() {
        std::vector<std::int64_t> a;
        for (std::size_t r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[r])) continue;
            for (std::size_t j = 0; j < lp_.columns.count; ++j) {
                if (in_basis_[j] || disabled(j)) continue;
                load_column(j, a);
                BigInt ur = 0;
                for (std::size_t k = 0; k < m_; ++k)
                    if (a[k]) ur += M_[r][k] * a[k];
                if (ur == 0) continue;
                BigVector u(m_, 0);
                for (std::size_t i = 0; i < m_; ++i)
                    for (std::size_t k = 0; k < m_; ++k)
                        if (a[k]) u[i] += M_[i][k] * a[k];
                apply_pivot(r, j, u);
                break;
            }
        }
    }

    void fill_solution(LpResult& res) {
        res.solution.clear();
        Rational obj = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (is_artificial(basis_[i])) {
                if (xnum_[i] != 0) throw std::logic_error("artificial variable left positive");
                continue;
            }
            if (xnum_[i] == 0) continue;
            Rational v(xnum_[i], D_);
            res.solution.emplace_back(basis_[i], v);
            if (!lp_.cost.empty()) obj += v * lp_.cost[basis_[i]];
        }
        std::sort(res.solution.begin(), res.solution.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        res.objective = obj;
        verify_primal(res);
    }

    void verify_primal(const LpResult& res) const {
        RatVector lhs(m_, 0);
        for (const auto& [j, v] : res.solution) {
            if (v < 0) throw std::logic_error("negative primal value");
            const std::int64_t* c = col(j);
            for (std::size_t i = 0; i < m_; ++i)
                if (c[i]) lhs[i] += v * c[i];
        }
        for (std::size_t i = 0; i < m_; ++i)
            if (lhs[i] != Rational(lp_.rhs[i])) throw std::logic_error("primal witness violates row " + std::to_string(i));
    }

    void verify_farkas(const RatVector& y) const {
        Rational yb = 0;
        for (std::size_t i = 0; i < m_; ++i) yb += y[i] * Rational(lp_.rhs[i]);
        if (yb <= 0) throw std::logic_error("Farkas certificate has y.b <= 0");
        for (std::size_t j = 0; j < lp_.columns.count; ++j) {
            if (disabled(j)) continue;
            BigInt s = 0;
            const std::int64_t* c = col(j);
            for (std::size_t i = 0; i < m_; ++i)
                if (c[i]) s += pi_[i] * (c[i] * row_sign_[i]);
            if (s > 0) throw std::logic_error("Farkas certificate violated by column " + std::to_string(j));
        }
    }

    const StandardLp& lp_;
    SimplexOptions opt_;
    std::size_t m_;
    std::vector<int> row_sign_;
    BigVector b_;
    BigMatrix M_;
    BigInt D_;
    BigVector xnum_;
    BigVector pi_;
    std::vector<i128> pi_fast_;
    i128 d_fast_ = 0;
    bool fast_ = false;
    std::vector<std::size_t> basis_;
    std::vector<std::uint8_t> in_basis_;
    std::size_t cursor_ = 0;
    bool bland_ = false;
    BigVector last_u_;
};

inline LpResult solve_standard(const StandardLp& lp, SimplexOptions opt = {}) { return RevisedSimplex(lp, opt).solve(); }

// General LP interface: rows sum_j a_ij x_j (<=, =, >=) b_i, variables either
// free or non-negative; optional objective to minimize or maximize.
enum class Sense { LE, EQ, GE };

struct LinearRow {
    IntVector coeffs;
    Sense sense = Sense::EQ;
    BigInt rhs = 0;
};

struct LinearProgram {
    std::size_t vars = 0;
    std::vector<bool> free_var;  // empty: all non-negative
    std::vector<LinearRow> rows;
    IntVector objective;         // empty: feasibility only
    bool maximize = false;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    RatVector x;
    Rational objective = 0;
    RatVector farkas;  // on rows when infeasible
};

inline LpSolution solve(const LinearProgram& p) {
    std::size_t m = p.rows.size();
    std::vector<std::pair<std::size_t, int>> origin;  // (variable, sign) per standard column
    for (std::size_t j = 0; j < p.vars; ++j) {
        origin.emplace_back(j, 1);
        if (!p.free_var.empty() && p.free_var[j]) origin.emplace_back(j, -1);
    }
    std::size_t structural = origin.size();
    std::vector<std::pair<std::size_t, int>> slacks;
    for (std::size_t i = 0; i < m; ++i)
        if (p.rows[i].sense != Sense::EQ) slacks.emplace_back(i, p.rows[i].sense == Sense::LE ? 1 : -1);
    std::size_t ncols = structural + slacks.size();
    std::vector<std::int64_t> data(ncols * m, 0);
    for (std::size_t c = 0; c < structural; ++c)
        for (std::size_t i = 0; i < m; ++i) data[c * m + i] = p.rows[i].coeffs[origin[c].first] * origin[c].second;
    for (std::size_t s = 0; s < slacks.size(); ++s) data[(structural + s) * m + slacks[s].first] = slacks[s].second;
    StandardLp lp;
    lp.rows = m;
    lp.columns = {data.data(), ncols, nullptr};
    for (const auto& r : p.rows) lp.rhs.push_back(r.rhs);
    if (!p.objective.empty()) {
        lp.cost.assign(ncols, 0);
        for (std::size_t c = 0; c < structural; ++c) {
            std::int64_t v = p.objective[origin[c].first] * origin[c].second;
            lp.cost[c] = p.maximize ? -v : v;
        }
    }
    LpResult r = solve_standard(lp);
    LpSolution out;
    out.status = r.status;
    if (r.status == LpStatus::Infeasible) {
        out.farkas = r.dual;
        return out;
    }
    if (r.status == LpStatus::Unbounded) return out;
    out.x.assign(p.vars, 0);
    for (const auto& [c, v] : r.solution)
        if (c < structural) out.x[origin[c].first] += v * origin[c].second;
    out.objective = p.maximize ? Rational(-r.objective) : r.objective;
    // Exact re-check of every row.
    for (const auto& row : p.rows) {
        Rational s = 0;
        for (std::size_t j = 0; j < p.vars; ++j)
            if (row.coeffs[j]) s += out.x[j] * row.coeffs[j];
        Rational b(row.rhs);
        bool ok = row.sense == Sense::EQ ? s == b : row.sense == Sense::LE ? s <= b : s >= b;
        if (!ok) throw std::logic_error("LP solution violates a constraint");
    }
    for (std::size_t j = 0; j < p.vars; ++j)
        if ((p.free_var.empty() || !p.free_var[j]) && out.x[j] < 0) throw std::logic_error("LP solution violates a sign constraint");
    return out;
}

}  // namespace hypercube

#pragma once

// Regular subdivisions and triangulations of the n-cube: weights to cells,
// GKZ vectors, tight spans, regularity, bistellar flips and enumeration.

#include "hypercube/cones.hpp"
#include "hypercube/cube.hpp"
#include "hypercube/linalg.hpp"
#include "hypercube/lp.hpp"
#include "hypercube/newton.hpp"
#include "hypercube/parallel.hpp"
#include "hypercube/polynomial.hpp"
#include "hypercube/symmetry.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <random>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hypercube {

using CellMask = std::uint32_t;

inline std::vector<std::uint32_t> labels_of(CellMask m) {
    std::vector<std::uint32_t> out;
    for (; m; m &= m - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    return out;
}

inline CellMask mask_of(const std::vector<std::uint32_t>& labels) {
    CellMask m = 0;
    for (auto l : labels) m |= 1u << l;
    return m;
}

inline std::string label_string(int n, std::uint32_t label) {
    std::string s;
    for (int i = n - 1; i >= 0; --i) s += (label >> i & 1) ? '1' : '0';
    return s;
}

inline std::string cell_string(int n, CellMask m) {
    std::string s = "{";
    bool first = true;
    for (auto l : labels_of(m)) {
        if (!first) s += ',';
        s += label_string(n, l);
        first = false;
    }
    return s + "}";
}

struct Circuit {
    CellMask support = 0;
    CellMask plus = 0;   // labels with positive coefficient in the dependence
    CellMask minus = 0;
};

// Precomputed data for the configuration of the 2^n cube vertices.
class CubeConfiguration {
public:
    struct Basis {
        CellMask mask = 0;
        std::vector<std::uint32_t> labels;
        std::vector<std::int64_t> adj;  // adjugate of the column matrix, row-major, scaled so det > 0
        std::int64_t det = 0;
    };

    explicit CubeConfiguration(int n) : n_(n), points_(std::size_t{1} << n) {
        if (n < 1 || n > 4) throw std::out_of_range("cube configurations are provided for n <= 4");
        for (std::uint32_t l = 0; l < points_; ++l) columns_.push_back(cube_column(n, l));
        std::size_t k = static_cast<std::size_t>(n) + 1;
        for (CellMask m = 0; m < (1u << points_); ++m) {
            if (static_cast<std::size_t>(std::popcount(m)) != k) continue;
            Basis b;
            b.mask = m;
            b.labels = labels_of(m);
            IntMatrix a(k, IntVector(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t r = 0; r < k; ++r) a[r][i] = columns_[b.labels[i]][r];
            BigInt det = determinant(a);
            if (det == 0) continue;
            b.det = static_cast<std::int64_t>(det);
            // adj = det * A^{-1}; row i of A^{-1} pairs with label i.
            b.adj.assign(k * k, 0);
            for (std::size_t r = 0; r < k; ++r) {
                RatVector e(k, 0);
                e[r] = 1;
                auto col = solve_square(a, e);
                for (std::size_t i = 0; i < k; ++i) {
                    Rational v = (*col)[i] * Rational(det);
                    b.adj[i * k + r] = static_cast<std::int64_t>(numerator(v));
                }
            }
            if (b.det < 0) {
                b.det = -b.det;
                for (auto& x : b.adj) x = -x;
            }
            bases_.push_back(std::move(b));
        }
    }

    int dimension() const { return n_; }
    std::size_t points() const { return points_; }
    CellMask all() const { return static_cast<CellMask>((std::uint64_t{1} << points_) - 1); }
    const IntVector& column(std::uint32_t l) const { return columns_[l]; }
    const std::vector<Basis>& bases() const { return bases_; }

    // Minimal affinely dependent label sets.
    const std::vector<Circuit>& circuits() const {
        std::call_once(circuits_once_, [this] {
            for (CellMask m = 1; m < (1u << points_); ++m) {
                int k = std::popcount(m);
                if (k < 3 || k > n_ + 2) continue;
                auto labels = labels_of(m);
                IntMatrix a(n_ + 1, IntVector(k));
                for (int i = 0; i < k; ++i)
                    for (int r = 0; r <= n_; ++r) a[r][i] = columns_[labels[i]][r];
                auto ker = kernel_basis(a, k);
                if (ker.size() != 1) continue;
                Circuit c{m, 0, 0};
                bool full = true;
                for (int i = 0; i < k; ++i) {
                    if (ker[0][i] == 0) full = false;
                    if (ker[0][i] > 0) c.plus |= 1u << labels[i];
                    if (ker[0][i] < 0) c.minus |= 1u << labels[i];
                }
                if (full) circuits_.push_back(c);
            }
        });
        return circuits_;
    }

    int rank(CellMask m) const {
        IntMatrix rows;
        for (auto l : labels_of(m)) rows.push_back(columns_[l]);
        return rows.empty() ? 0 : hypercube::rank(rows);
    }

private:
    int n_;
    std::size_t points_;
    IntMatrix columns_;
    std::vector<Basis> bases_;
    mutable std::once_flag circuits_once_;
    mutable std::vector<Circuit> circuits_;
};

inline const CubeConfiguration& cube_configuration(int n) {
    static const CubeConfiguration c2(2), c3(3), c4(4);
    switch (n) {
        case 2: return c2;
        case 3: return c3;
        case 4: return c4;
        default: throw std::out_of_range("cube configurations are provided for n in 2..4");
    }
}

struct Subdivision {
    int n = 0;
    std::vector<CellMask> cells;      // sorted
    std::optional<IntVector> weight;  // inducing weight when known

    bool is_triangulation() const {
        for (auto c : cells)
            if (std::popcount(c) != n + 1) return false;
        return !cells.empty();
    }
    bool operator==(const Subdivision& o) const { return n == o.n && cells == o.cells; }
};

struct DegenerateSimplex : std::invalid_argument {
    DegenerateSimplex() : std::invalid_argument("simplex labels are affinely dependent") {}
};

struct NotATriangulation : std::invalid_argument {
    NotATriangulation() : std::invalid_argument("subdivision has a cell that is not a simplex") {}
};

inline std::int64_t normalized_volume(int n, CellMask simplex) {
    const auto& cfg = cube_configuration(n);
    if (std::popcount(simplex) != n + 1) throw DegenerateSimplex();
    IntMatrix a;
    for (auto l : labels_of(simplex)) a.push_back(cfg.column(l));
    BigInt d = determinant(a);
    if (d == 0) throw DegenerateSimplex();
    return static_cast<std::int64_t>(abs(d));
}

inline std::int64_t normalized_volume(int n, const std::vector<std::uint32_t>& labels) {
    if (labels.size() != static_cast<std::size_t>(n) + 1) throw DegenerateSimplex();
    CellMask m = mask_of(labels);
    if (std::popcount(m) != n + 1) throw DegenerateSimplex();
    return normalized_volume(n, m);
}

namespace detail {

// Maximal cells of the regular subdivision by the weight, restricted to the
// labels in `allowed`: one cell per vertex of {u : u.a_j <= w_j, j allowed},
// read off as the set of tight labels.
inline std::vector<CellMask> tight_cells(int n, const IntVector& w, CellMask allowed) {
    const auto& cfg = cube_configuration(n);
    std::size_t k = static_cast<std::size_t>(n) + 1;
    std::set<CellMask> cells;
    std::vector<i128> U(k);
    for (const auto& b : cfg.bases()) {
        if ((b.mask & allowed) != b.mask) continue;
        for (std::size_t r = 0; r < k; ++r) {
            i128 s = 0;
            for (std::size_t i = 0; i < k; ++i) s += static_cast<i128>(w[b.labels[i]]) * b.adj[i * k + r];
            U[r] = s;
        }
        CellMask tight = 0;
        bool feasible = true;
        for (CellMask rest = allowed; rest && feasible; rest &= rest - 1) {
            auto j = static_cast<std::uint32_t>(std::countr_zero(rest));
            const auto& a = cfg.column(j);
            i128 lhs = 0;
            for (std::size_t r = 0; r < k; ++r) lhs += U[r] * a[r];
            i128 rhs = static_cast<i128>(b.det) * w[j];
            if (lhs > rhs) feasible = false;
            else if (lhs == rhs) tight |= 1u << j;
        }
        if (feasible) cells.insert(tight);
    }
    return {cells.begin(), cells.end()};
}

inline IntVector scale_to_integers(const RatVector& w) {
    BigInt l = 1;
    for (const auto& x : w) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
    IntVector out;
    for (const auto& x : w) {
        BigInt v = numerator(x) * (l / denominator(x));
        if (!fits_i128(v) || abs(v) > BigInt(std::numeric_limits<std::int64_t>::max() / 64))
            throw std::overflow_error("weight does not fit in 64 bits after clearing denominators");
        out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

// Lexicographic heights; every cell they induce is a simplex.
inline IntVector placing_heights(int n) {
    IntVector w(std::size_t{1} << n);
    std::int64_t h = 1;
    for (auto& x : w) {
        x = h;
        h *= 8;
    }
    return w;
}

}  // namespace detail

inline Subdivision regular_subdivision(int n, const IntVector& w) {
    if (w.size() != std::size_t{1} << n) throw std::invalid_argument("weight length must be 2^n");
    return {n, detail::tight_cells(n, w, cube_configuration(n).all()), w};
}

inline Subdivision regular_subdivision(int n, const RatVector& w) {
    return regular_subdivision(n, detail::scale_to_integers(w));
}

// Normalized volume of a full-dimensional cell.
inline std::int64_t cell_volume(int n, CellMask cell) {
    if (std::popcount(cell) == n + 1) return normalized_volume(n, cell);
    std::int64_t v = 0;
    for (auto s : detail::tight_cells(n, detail::placing_heights(n), cell)) v += normalized_volume(n, s);
    return v;
}

inline std::int64_t total_volume(const Subdivision& s) {
    std::int64_t v = 0;
    for (auto c : s.cells) v += cell_volume(s.n, c);
    return v;
}

inline IntVector gkz_vector(const Subdivision& t) {
    if (!t.is_triangulation()) throw NotATriangulation();
    IntVector g(std::size_t{1} << t.n, 0);
    for (auto c : t.cells) {
        std::int64_t v = normalized_volume(t.n, c);
        for (auto l : labels_of(c)) g[l] += v;
    }
    return g;
}

// A cell lies on the boundary of the cube when all its labels agree in some
// coordinate.
inline bool is_boundary_cell(int n, CellMask cell) {
    auto labels = labels_of(cell);
    for (int i = 0; i < n; ++i) {
        std::uint32_t bit = 1u << i;
        bool all0 = true, all1 = true;
        for (auto l : labels) (l & bit ? all0 : all1) = false;
        if (all0 || all1) return true;
    }
    return false;
}

struct TightSpan {
    int n = 0;
    // faces[k]: bounded faces of dimension k, each given by the interior cell
    // of the subdivision dual to it.
    std::vector<std::vector<CellMask>> faces;
    std::vector<std::size_t> fvector;
    std::set<int> signature;  // dimensions of maximal faces

    // Face (k, i) is contained in face (k+1, j) when the dual cells are
    // reversely contained.
    bool incident(int k, std::size_t i, std::size_t j) const {
        CellMask a = faces[k][i], b = faces[k + 1][j];
        return (a & b) == b;
    }
};

inline TightSpan tight_span(const Subdivision& s) {
    const auto& cfg = cube_configuration(s.n);
    std::set<CellMask> closed(s.cells.begin(), s.cells.end());
    std::vector<CellMask> queue(s.cells.begin(), s.cells.end());
    while (!queue.empty()) {
        CellMask x = queue.back();
        queue.pop_back();
        for (auto c : s.cells) {
            CellMask y = x & c;
            if (y && closed.insert(y).second) queue.push_back(y);
        }
    }
    TightSpan ts;
    ts.n = s.n;
    ts.faces.assign(s.n + 1, {});
    std::vector<CellMask> interior;
    for (auto c : closed) {
        if (is_boundary_cell(s.n, c)) continue;
        int dim = s.n - (cfg.rank(c) - 1);
        ts.faces[dim].push_back(c);
        interior.push_back(c);
    }
    while (ts.faces.size() > 1 && ts.faces.back().empty()) ts.faces.pop_back();
    for (const auto& f : ts.faces) ts.fvector.push_back(f.size());
    for (std::size_t k = 0; k < ts.faces.size(); ++k)
        for (auto c : ts.faces[k]) {
            bool maximal = true;
            for (auto d : interior)
                if (d != c && (d & c) == d) {
                    maximal = false;
                    break;
                }
            if (maximal) ts.signature.insert(static_cast<int>(k));
        }
    return ts;
}

inline TightSpan tight_span(int n, const IntVector& w) { return tight_span(regular_subdivision(n, w)); }

struct InteriorWall {
    CellMask wall = 0;
    std::uint32_t left = 0, right = 0;  // apexes of the two simplices
};

inline std::vector<InteriorWall> interior_walls(const Subdivision& t) {
    if (!t.is_triangulation()) throw NotATriangulation();
    std::vector<InteriorWall> out;
    for (std::size_t i = 0; i < t.cells.size(); ++i)
        for (std::size_t j = i + 1; j < t.cells.size(); ++j) {
            CellMask w = t.cells[i] & t.cells[j];
            if (std::popcount(w) != t.n) continue;
            out.push_back({w, static_cast<std::uint32_t>(std::countr_zero(t.cells[i] & ~w)),
                           static_cast<std::uint32_t>(std::countr_zero(t.cells[j] & ~w))});
        }
    return out;
}

struct RegularityCertificate {
    bool regular = false;
    IntVector weight;   // induces the triangulation when regular
    RatVector farkas;   // multipliers on the folding rows otherwise
};

// Folding LP: a weight that bends upward across every interior wall.
inline RegularityCertificate is_regular(const Subdivision& t) {
    const auto& cfg = cube_configuration(t.n);
    std::size_t N = cfg.points();
    LinearProgram lp;
    lp.vars = N;
    lp.free_var.assign(N, true);
    for (const auto& w : interior_walls(t)) {
        CellMask z = w.wall | 1u << w.left | 1u << w.right;
        auto labels = labels_of(z);
        IntMatrix a(t.n + 1, IntVector(labels.size()));
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (int r = 0; r <= t.n; ++r) a[r][i] = cfg.column(labels[i])[r];
        auto ker = kernel_basis(a, labels.size());
        if (ker.size() != 1) throw std::logic_error("wall configuration is not a circuit of corank one");
        auto li = std::find(labels.begin(), labels.end(), w.left) - labels.begin();
        int sign = ker[0][li] > 0 ? 1 : -1;
        LinearRow row;
        row.coeffs.assign(N, 0);
        for (std::size_t i = 0; i < labels.size(); ++i) row.coeffs[labels[i]] = sign * static_cast<std::int64_t>(ker[0][i]);
        row.sense = Sense::GE;
        row.rhs = 1;
        lp.rows.push_back(std::move(row));
    }
    RegularityCertificate cert;
    if (lp.rows.empty()) {
        cert.regular = true;
        cert.weight.assign(N, 0);
        return cert;
    }
    LpSolution sol = solve(lp);
    if (sol.status == LpStatus::Infeasible) {
        cert.farkas = sol.farkas;
        return cert;
    }
    cert.weight = detail::scale_to_integers(sol.x);
    if (regular_subdivision(t.n, cert.weight).cells != t.cells)
        throw std::logic_error("folding weight does not reproduce the triangulation");
    cert.regular = true;
    return cert;
}

struct Flip {
    std::size_t circuit = 0;  // index into the configuration's circuits
    bool forward = true;      // removed the cells omitting a positive label
    Subdivision result;
};

namespace detail {

inline std::vector<CellMask> link_of(const std::vector<CellMask>& cells, CellMask face) {
    std::vector<CellMask> l;
    for (auto c : cells)
        if ((c & face) == face) l.push_back(c & ~face);
    std::sort(l.begin(), l.end());
    return l;
}

}  // namespace detail

// All bistellar flips: a circuit Z = Z+ u Z- is flippable when every
// Z \ {z}, z in Z+, is a face of t and all of them have the same link; the
// flip replaces the join of those faces with the link by the join of the
// faces Z \ {z}, z in Z-.
inline std::vector<Flip> flips(const Subdivision& t) {
    if (!t.is_triangulation()) throw NotATriangulation();
    const auto& circuits = cube_configuration(t.n).circuits();
    std::vector<Flip> out;
    for (std::size_t ci = 0; ci < circuits.size(); ++ci) {
        const auto& c = circuits[ci];
        for (bool forward : {true, false}) {
            CellMask from = forward ? c.plus : c.minus, to = forward ? c.minus : c.plus;
            std::vector<CellMask> link;
            bool ok = true;
            for (CellMask rest = from; rest && ok; rest &= rest - 1) {
                CellMask face = c.support & ~(rest & -rest);
                auto l = detail::link_of(t.cells, face);
                if (l.empty()) ok = false;
                else if (link.empty()) link = std::move(l);
                else if (l != link) ok = false;
            }
            if (!ok) continue;
            std::set<CellMask> cells(t.cells.begin(), t.cells.end());
            for (CellMask rest = from; rest; rest &= rest - 1)
                for (auto l : link) cells.erase((c.support & ~(rest & -rest)) | l);
            for (CellMask rest = to; rest; rest &= rest - 1)
                for (auto l : link) cells.insert((c.support & ~(rest & -rest)) | l);
            out.push_back({ci, forward, {t.n, {cells.begin(), cells.end()}, std::nullopt}});
        }
    }
    return out;
}

inline std::vector<CellMask> apply_symmetry(int n, std::size_t g, const std::vector<CellMask>& cells) {
    const auto& G = cube_group(n);
    std::vector<CellMask> out;
    out.reserve(cells.size());
    for (auto c : cells) out.push_back(G.act_on_mask(g, c));
    std::sort(out.begin(), out.end());
    return out;
}

struct CanonicalTriangulation {
    std::vector<CellMask> cells;
    std::size_t orbit_size = 0;
};

// Lex-min image under B_n of the sorted cell list (cells encoded as label
// bitmasks).
inline CanonicalTriangulation canonical_form(const Subdivision& t) {
    const auto& G = cube_group(t.n);
    CanonicalTriangulation out{t.cells, 0};
    std::size_t stab = 0;
    for (std::size_t g = 0; g < G.order(); ++g) {
        auto img = apply_symmetry(t.n, g, t.cells);
        if (img == t.cells) ++stab;
        if (img < out.cells) out.cells = std::move(img);
    }
    out.orbit_size = G.order() / stab;
    return out;
}

struct TriangulationOrbit {
    std::vector<CellMask> cells;  // canonical representative
    std::size_t orbit_size = 0;
    IntVector gkz;
    std::map<std::int64_t, int> volumes;  // volume -> number of simplices
    std::vector<std::size_t> tight_fvector;
    std::set<int> signature;
};

struct TriangulationCensus {
    int n = 0;
    std::vector<TriangulationOrbit> orbits;
    std::size_t nonregular_neighbours = 0;
    bool complete = false;

    std::size_t total() const {
        std::size_t s = 0;
        for (const auto& o : orbits) s += o.orbit_size;
        return s;
    }
};

struct EnumerationOptions {
    bool up_to_symmetry = true;
    std::size_t limit = 0;        // stop after this many orbits (0: no limit)
    std::string checkpoint;       // file for resumable runs (empty: none)
    std::size_t checkpoint_every = 1000;
    int jobs = 1;
    std::function<void(std::size_t done, std::size_t found)> progress;
};

inline TriangulationOrbit describe_orbit(int n, std::vector<CellMask> cells, std::size_t orbit_size) {
    Subdivision t{n, std::move(cells), std::nullopt};
    TriangulationOrbit o;
    o.gkz = gkz_vector(t);
    for (auto c : t.cells) ++o.volumes[normalized_volume(n, c)];
    auto ts = tight_span(t);
    o.tight_fvector = ts.fvector;
    o.signature = ts.signature;
    o.cells = std::move(t.cells);
    o.orbit_size = orbit_size;
    return o;
}

namespace detail {

inline std::string encode_cells(const std::vector<CellMask>& cells) {
    std::ostringstream os;
    os << std::hex;
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    return os.str();
}

inline std::vector<CellMask> decode_cells(const std::string& s) {
    std::vector<CellMask> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(static_cast<CellMask>(std::stoul(tok, nullptr, 16)));
    return out;
}

struct VectorHash {
    std::size_t operator()(const std::vector<CellMask>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

}  // namespace detail

// Breadth-first search of the flip graph of regular triangulations. Every new
// class is certified regular by the folding LP; flips into non-regular
// triangulations are discarded.
inline TriangulationCensus enumerate_triangulations(int n, const EnumerationOptions& opt = {}) {
    using Key = std::vector<CellMask>;
    auto key_of = [&](const Subdivision& t) -> std::pair<Key, std::size_t> {
        if (!opt.up_to_symmetry) return {t.cells, 1};
        auto c = canonical_form(t);
        return {std::move(c.cells), c.orbit_size};
    };
    std::vector<std::pair<Key, std::size_t>> found;  // in discovery order
    std::unordered_map<Key, bool, detail::VectorHash> seen;  // value: regular
    std::size_t expanded = 0;

    if (!opt.checkpoint.empty()) {
        std::ifstream in(opt.checkpoint);
        std::string tag;
        while (in >> tag) {
            if (tag == "expanded") in >> expanded;
            else if (tag == "R" || tag == "N") {
                std::size_t orbit;
                std::string cells;
                in >> orbit >> cells;
                Key k = detail::decode_cells(cells);
                seen[k] = tag == "R";
                if (tag == "R") found.emplace_back(std::move(k), orbit);
            }
        }
    }
    if (found.empty()) {
        auto start = regular_subdivision(n, detail::placing_heights(n));
        auto k = key_of(start);
        seen[k.first] = true;
        found.push_back(std::move(k));
    }
    std::size_t nonregular = 0;
    for (const auto& [k, r] : seen) nonregular += !r;
    auto save = [&] {
        if (opt.checkpoint.empty()) return;
        std::string tmp = opt.checkpoint + ".tmp";
        {
            std::ofstream out(tmp);
            out << "expanded " << expanded << '\n';
            for (const auto& [k, orbit] : found) out << "R " << orbit << ' ' << detail::encode_cells(k) << '\n';
            std::vector<Key> bad;
            for (const auto& [k, r] : seen)
                if (!r) bad.push_back(k);
            std::sort(bad.begin(), bad.end());
            for (const auto& k : bad) out << "N 0 " << detail::encode_cells(k) << '\n';
        }
        std::rename(tmp.c_str(), opt.checkpoint.c_str());
    };

    std::size_t since_save = 0;
    bool stopped = false;
    while (expanded < found.size()) {
        if (opt.limit && found.size() >= opt.limit) {
            stopped = true;
            break;
        }
        std::size_t batch_end = std::min(found.size(), expanded + std::size_t(std::max(1, opt.jobs)) * 8);
        std::size_t count = batch_end - expanded;
        // Neighbour keys per frontier item, with a regularity verdict for
        // keys not seen before the batch.
        std::vector<std::vector<std::pair<Key, std::size_t>>> neigh(count);
        parallel_for(count, opt.jobs, [&](std::size_t i) {
            Subdivision t{n, found[expanded + i].first, std::nullopt};
            for (auto& f : flips(t)) neigh[i].push_back(key_of(f.result));
            std::sort(neigh[i].begin(), neigh[i].end());
            neigh[i].erase(std::unique(neigh[i].begin(), neigh[i].end()), neigh[i].end());
        });
        std::vector<Key> fresh;
        std::set<Key> fresh_set;
        for (const auto& v : neigh)
            for (const auto& [k, o] : v)
                if (!seen.count(k) && fresh_set.insert(k).second) fresh.push_back(k);
        std::vector<char> regular(fresh.size());
        parallel_for(fresh.size(), opt.jobs, [&](std::size_t i) {
            regular[i] = is_regular(Subdivision{n, fresh[i], std::nullopt}).regular;
        });
        std::map<Key, std::size_t> orbit_of;
        for (const auto& v : neigh)
            for (const auto& [k, o] : v) orbit_of.emplace(k, o);
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            seen[fresh[i]] = regular[i];
            if (regular[i]) found.emplace_back(fresh[i], orbit_of[fresh[i]]);
            else ++nonregular;
        }
        expanded = batch_end;
        since_save += count;
        if (opt.progress) opt.progress(expanded, found.size());
        if (since_save >= opt.checkpoint_every) {
            save();
            since_save = 0;
        }
    }
    save();

    TriangulationCensus census;
    census.n = n;
    census.complete = !stopped;
    census.nonregular_neighbours = nonregular;
    std::sort(found.begin(), found.end());
    census.orbits.resize(found.size());
    parallel_for(found.size(), opt.jobs, [&](std::size_t i) { census.orbits[i] = describe_orbit(n, found[i].first, found[i].second); });
    return census;
}

struct DClass {
    ExponentVector vertex;     // minimizer of <w, x> over the support
    ExponentVector canonical;  // lex-min representative of its orbit
    std::size_t orbit_size = 0;
    Integer coefficient;
    int table_index = 0;       // 1..111 for the 2x2x2x2 hyperdeterminant
};

// The vertex of the Newton polytope selected by a generic weight. Minimizing
// over the vertices is equivalent to minimizing over the whole support.
// Without the polynomial, 4-cube coefficients come from the reference vertex
// table.
inline DClass d_equivalence_class(const IntVector& w, const std::vector<ExponentVector>& vertices, int n, const Polynomial* D = nullptr) {
    std::vector<ExponentVector> best;
    i128 low = 0;
    for (const auto& v : vertices) {
        i128 s = 0;
        for (std::size_t l = 0; l < w.size(); ++l) s += static_cast<i128>(w[l]) * v[l];
        if (best.empty() || s < low) {
            best.assign(1, v);
            low = s;
        } else if (s == low) best.push_back(v);
    }
    if (best.size() != 1) throw newton::NonGenericWeight(best);
    DClass c;
    c.vertex = best[0];
    auto orb = canonicalize(c.vertex, n);
    c.canonical = orb.representative;
    c.orbit_size = orb.size;
    if (n == 4) c.table_index = newton::table_index_of(c.canonical) + 1;
    if (D) c.coefficient = D->coefficient(c.vertex);
    else if (c.table_index > 0) c.coefficient = Integer(newton::vertex_table()[c.table_index - 1].coefficient);
    return c;
}

// Number of unordered pairs of cells with disjoint label sets, i.e. whose
// union has 10 elements.
inline std::size_t ten_set_statistic(const Subdivision& t) {
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < t.cells.size(); ++i)
        for (std::size_t j = i + 1; j < t.cells.size(); ++j)
            if (std::popcount(t.cells[i] | t.cells[j]) == 10) ++pairs;
    return pairs;
}

// Number of distinct 10-element label sets that are unions of two cells.
inline std::size_t distinct_ten_sets(const Subdivision& t) {
    std::set<CellMask> unions;
    for (std::size_t i = 0; i < t.cells.size(); ++i)
        for (std::size_t j = i + 1; j < t.cells.size(); ++j) {
            CellMask u = t.cells[i] | t.cells[j];
            if (std::popcount(u) == 10) unions.insert(u);
        }
    return unions.size();
}

enum class CentroidCarrierKind { Simplex, Tetrahedron, Diagonal, Other };

struct CentroidCarrier {
    CentroidCarrierKind kind = CentroidCarrierKind::Other;
    CellMask face = 0;       // smallest face containing the centroid
    std::int64_t volume = 0; // normalized volume of that face in its own span
};

namespace detail {

// Index of the lattice generated by the columns inside the saturated lattice
// of their span: the gcd of the maximal minors.
inline std::int64_t relative_volume(int n, CellMask face) {
    const auto& cfg = cube_configuration(n);
    auto labels = labels_of(face);
    std::size_t k = labels.size();
    BigInt g = 0;
    std::vector<int> rows(k);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int start) {
        if (pos == k) {
            IntMatrix m(k, IntVector(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m[i][j] = cfg.column(labels[j])[rows[i]];
            g = boost::multiprecision::gcd(g, BigInt(abs(determinant(m))));
            return;
        }
        for (int r = start; r <= n; ++r) {
            rows[pos] = r;
            rec(pos + 1, r + 1);
        }
    };
    rec(0, 0);
    return static_cast<std::int64_t>(g);
}

}  // namespace detail

// Locates the centroid (1, 1/2, ..., 1/2) of the cube in a triangulation.
inline CentroidCarrier centroid_carrier(const Subdivision& t) {
    if (!t.is_triangulation()) throw NotATriangulation();
    const auto& cfg = cube_configuration(t.n);
    RatVector c(t.n + 1, Rational(1, 2));
    c[0] = 1;
    for (auto cell : t.cells) {
        auto labels = labels_of(cell);
        IntMatrix a(t.n + 1, IntVector(labels.size()));
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (int r = 0; r <= t.n; ++r) a[r][i] = cfg.column(labels[i])[r];
        auto lambda = solve_square(a, c);
        if (!lambda) continue;
        bool inside = true;
        CellMask face = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if ((*lambda)[i] < 0) inside = false;
            if ((*lambda)[i] > 0) face |= 1u << labels[i];
        }
        if (!inside) continue;
        CentroidCarrier out;
        out.face = face;
        out.volume = detail::relative_volume(t.n, face);
        int k = std::popcount(face);
        if (k == t.n + 1) out.kind = CentroidCarrierKind::Simplex;
        else if (k == t.n && t.n == 4) out.kind = CentroidCarrierKind::Tetrahedron;
        else if (k == 2) out.kind = CentroidCarrierKind::Diagonal;
        return out;
    }
    throw std::logic_error("centroid not covered by the triangulation");
}

struct GkzSearchOptions {
    std::size_t max_nodes = 20000;
};

// Finds a triangulation with the given GKZ vector (up to B_n, then moved onto
// the target) by best-first search over flips ordered by L1 distance of GKZ
// vectors modulo symmetry, starting from the triangulation induced by -gkz.
inline std::optional<Subdivision> realize_gkz(int n, const IntVector& target, const GkzSearchOptions& opt = {}) {
    const auto& G = cube_group(n);
    auto distance = [&](const IntVector& g) {
        std::int64_t best = -1;
        for (std::size_t e = 0; e < G.order(); ++e) {
            auto h = G.act(e, g);
            std::int64_t d = 0;
            for (std::size_t i = 0; i < h.size(); ++i) d += std::abs(h[i] - target[i]);
            if (best < 0 || d < best) best = d;
        }
        return best;
    };
    IntVector w(target.size());
    auto place = detail::placing_heights(n);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = -target[i] * (place.back() * 4) + place[i];
    Subdivision start = regular_subdivision(n, w);
    if (!start.is_triangulation()) start = regular_subdivision(n, place);
    using Item = std::pair<std::int64_t, std::vector<CellMask>>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    std::unordered_set<std::vector<CellMask>, detail::VectorHash> seen;
    auto push = [&](const Subdivision& t) {
        auto c = canonical_form(t);
        if (!seen.insert(c.cells).second) return;
        pq.emplace(distance(gkz_vector(t)), std::move(c.cells));
    };
    push(start);
    std::size_t nodes = 0;
    while (!pq.empty() && nodes++ < opt.max_nodes) {
        auto [d, cells] = pq.top();
        pq.pop();
        Subdivision t{n, cells, std::nullopt};
        if (d == 0) {
            IntVector g = gkz_vector(t);
            for (std::size_t e = 0; e < G.order(); ++e)
                if (G.act(e, g) == target) {
                    Subdivision r{n, apply_symmetry(n, e, cells), std::nullopt};
                    auto cert = is_regular(r);
                    if (cert.regular) r.weight = cert.weight;
                    return r;
                }
        }
        for (auto& f : flips(t)) push(f.result);
    }
    return std::nullopt;
}

// Text format: "n <dim>", optional "weight w_0 ... w_{2^n-1}", then one cell
// per line as space-separated bitstrings.
inline void write_subdivision(std::ostream& os, const Subdivision& s) {
    os << "n " << s.n << '\n';
    if (s.weight) {
        os << "weight";
        for (auto x : *s.weight) os << ' ' << x;
        os << '\n';
    }
    for (auto c : s.cells) {
        bool first = true;
        for (auto l : labels_of(c)) {
            os << (first ? "" : " ") << label_string(s.n, l);
            first = false;
        }
        os << '\n';
    }
}

inline Subdivision read_subdivision(std::istream& is) {
    Subdivision s;
    std::string line;
    std::vector<CellMask> cells;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "n") {
            ls >> s.n;
        } else if (tok == "weight") {
            IntVector w;
            std::int64_t x;
            while (ls >> x) w.push_back(x);
            s.weight = w;
        } else {
            CellMask m = 0;
            do {
                if (static_cast<int>(tok.size()) != s.n || tok.find_first_not_of("01") != std::string::npos)
                    throw std::invalid_argument("bad vertex label '" + tok + "'");
                m |= 1u << std::stoul(tok, nullptr, 2);
            } while (ls >> tok);
            cells.push_back(m);
        }
    }
    if (s.n < 2 || s.n > 4) throw std::invalid_argument("subdivision file lacks a valid 'n' header");
    std::sort(cells.begin(), cells.end());
    s.cells = std::move(cells);
    return s;
}

// Whitespace-separated rationals ("3", "-1/2"), one per cube vertex.
inline RatVector read_weights(std::istream& is) {
    RatVector w;
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') {
            std::getline(is, tok);
            continue;
        }
        w.push_back(Rational(tok));
    }
    return w;
}

}  // namespace hypercube

#include "hypercube_app/pipeline.hpp"

#include "hypercube/cube.hpp"
#include "hypercube/hyperdet.hpp"
#include "hypercube/poly_io.hpp"

#include <algorithm>
#include <sstream>

namespace hypercube::app {

Pipeline::Pipeline(ArtifactStore& store, int jobs, std::ostream* log) : store_(store), jobs_(jobs), log_(log) {}

void Pipeline::note(const std::string& s) {
    if (log_) *log_ << s << '\n' << std::flush;
}

const Polynomial& Pipeline::d2222() {
    if (d_) return *d_;
    auto bytes = store_.fetch(
        "d2222.bin",
        [&] {
            note("expanding the 2x2x2x2 hyperdeterminant");
            HyperdetBuildOptions opt;
            opt.jobs = jobs_;
            opt.progress = [&](const std::string& s) { note("  " + s); };
            return to_binary(build_D2222(opt));
        },
        [](const std::string& b) {
            try {
                return from_binary(b).arity() == 16;
            } catch (const std::exception&) {
                return false;
            }
        });
    d_ = from_binary(bytes);
    return *d_;
}

const std::vector<TermOrbit>& Pipeline::term_orbits() {
    if (orbits_) return *orbits_;
    const auto& P = newton::facet_system().polytope;
    auto raw = polynomial_orbits(d2222(), 4);
    std::vector<TermOrbit> out(raw.size());
    parallel_for(raw.size(), jobs_, [&](std::size_t i) {
        out[i] = {raw[i].representative, raw[i].coefficient, raw[i].size, P.face_dimension(raw[i].representative)};
    });
    orbits_ = std::move(out);
    return *orbits_;
}

HeadlineCounts Pipeline::headline() {
    const Polynomial& D = d2222();
    HeadlineCounts h;
    h.terms = D.size();
    h.orbits = term_orbits().size();
    h.homogeneous = true;
    const IntMatrix A = cube_matrix(4);
    for (const auto& t : D) {
        for (std::size_t r = 0; r < A.size() && h.homogeneous; ++r) {
            std::int64_t s = 0;
            for (std::size_t l = 0; l < 16; ++l) s += A[r][l] * t.exponent[l];
            if (s != newton::degrees()[r]) h.homogeneous = false;
        }
        Integer a = t.coefficient.sign() < 0 ? -t.coefficient : t.coefficient;
        if (a > h.max_abs) h.max_abs = a;
        Integer q, rem;
        Integer::divmod(t.coefficient, Integer(2), q, rem);
        if (!rem.is_zero()) {
            Integer best = h.largest_odd ? (h.largest_odd->sign() < 0 ? -*h.largest_odd : *h.largest_odd) : Integer(0);
            if (a > best) h.largest_odd = t.coefficient;
        }
    }
    for (const auto& o : term_orbits())
        if (o.size == 2) h.size_two.push_back(o);
    return h;
}

std::string encode_vertex_census(const VertexCensus& c) {
    std::ostringstream os;
    os << "vertices " << c.vertex_count << '\n';
    for (const auto& o : c.orbits) os << o.representative.to_string(16) << '\t' << o.size << '\n';
    return os.str();
}

VertexCensus decode_vertex_census(const std::string& s) {
    std::istringstream is(s);
    VertexCensus c;
    std::string tok;
    if (!(is >> tok >> c.vertex_count) || tok != "vertices") throw std::runtime_error("vertex census lacks its header");
    std::string line;
    std::getline(is, line);
    std::size_t total = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error("malformed vertex census line");
        std::istringstream es(line.substr(0, tab));
        ExponentVector e;
        int v, k = 0;
        while (es >> v) e.set(k++, v);
        if (k != 16) throw std::runtime_error("vertex census line has " + std::to_string(k) + " exponents");
        std::size_t size = std::stoul(line.substr(tab + 1));
        c.orbits.push_back({e, size});
        total += size;
    }
    if (total != c.vertex_count) throw std::runtime_error("vertex census orbit sizes do not add up");
    return c;
}

const VertexCensus& Pipeline::vertex_census() {
    if (hull_) return *hull_;
    auto bytes = store_.fetch(
        "d2222-vertices.txt",
        [&] {
            note("computing the vertices of the Newton polytope");
            PointCloud cloud{d2222().support(), 16, 4, cube_matrix(4), newton::degrees()};
            HullOptions opt;
            opt.jobs = jobs_;
            opt.progress = [&](const std::string& s) { note("  " + s); };
            return encode_vertex_census(vertices_of_point_cloud(cloud, opt));
        },
        [](const std::string& b) {
            try {
                decode_vertex_census(b);
                return true;
            } catch (const std::exception&) {
                return false;
            }
        });
    hull_ = decode_vertex_census(bytes);
    return *hull_;
}

const newton::NewtonVertexCensus& Pipeline::newton_census() {
    if (!census_) census_ = newton::join_vertex_census(vertex_census(), d2222());
    return *census_;
}

std::vector<ExponentVector> Pipeline::vertex_representatives() {
    std::vector<ExponentVector> reps;
    for (const auto& o : vertex_census().orbits) reps.push_back(o.representative);
    return reps;
}

const std::vector<ExponentVector>& Pipeline::vertices() {
    if (!vertices_) vertices_ = newton::all_vertices(vertex_representatives());
    return *vertices_;
}

const std::vector<newton::TangentCone>& Pipeline::tangent_cones() {
    if (cones_) return *cones_;
    auto reps = vertex_representatives();
    std::vector<newton::TangentCone> cones(reps.size());
    parallel_for(reps.size(), jobs_, [&](std::size_t i) { cones[i] = newton::tangent_cone(reps[i]); });
    cones_ = std::move(cones);
    return *cones_;
}

const newton::FaceCounts& Pipeline::face_counts() {
    if (counts_) return *counts_;
    std::vector<std::size_t> sizes;
    for (const auto& o : vertex_census().orbits) sizes.push_back(o.size);
    counts_ = newton::face_counts(tangent_cones(), sizes, vertices(), jobs_);
    return *counts_;
}

const newton::LatticeCensus& Pipeline::lattice() {
    if (!lattice_) {
        note("enumerating lattice points of the Newton polytope");
        lattice_ = newton::enumerate_lattice_points(jobs_);
    }
    return *lattice_;
}

MissingMonomials Pipeline::missing_monomials() {
    const auto& P = newton::facet_system().polytope;
    std::vector<ExponentVector> present;
    for (const auto& o : term_orbits()) present.push_back(o.representative);
    MissingMonomials m;
    for (const auto& o : lattice().orbits) {
        if (std::binary_search(present.begin(), present.end(), o.representative)) continue;
        m.orbits.push_back(o);
        m.monomials += o.size;
        ++m.face_dimensions[P.face_dimension(o.representative)];
    }
    return m;
}

}  // namespace hypercube::app

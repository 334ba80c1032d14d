#pragma once

// Expensive stages shared by the command line and the acceptance suite,
// computed once per process and cached on disk when a store is enabled.

#include "hypercube_app/store.hpp"

#include "hypercube/newton.hpp"
#include "hypercube/polynomial.hpp"
#include "hypercube/polytope.hpp"
#include "hypercube/symmetry.hpp"

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hypercube::app {

struct TermOrbit {
    ExponentVector representative;
    Integer coefficient;
    std::size_t size = 0;
    int face_dimension = 0;
};

struct HeadlineCounts {
    std::size_t terms = 0;
    std::size_t orbits = 0;
    bool homogeneous = false;            // every term has degree 24 and multidegree (12,12,12,12)
    Integer max_abs;
    std::optional<Integer> largest_odd;  // odd coefficient of largest absolute value
    std::vector<TermOrbit> size_two;
};

struct MissingMonomials {
    std::vector<Orbit> orbits;
    std::size_t monomials = 0;
    std::map<int, std::size_t> face_dimensions;
};

class Pipeline {
public:
    Pipeline(ArtifactStore& store, int jobs, std::ostream* log = nullptr);

    const Polynomial& d2222();
    const std::vector<TermOrbit>& term_orbits();
    HeadlineCounts headline();
    const VertexCensus& vertex_census();
    const newton::NewtonVertexCensus& newton_census();
    std::vector<ExponentVector> vertex_representatives();
    const std::vector<ExponentVector>& vertices();
    const std::vector<newton::TangentCone>& tangent_cones();  // one per vertex class, census order
    const newton::FaceCounts& face_counts();
    const newton::LatticeCensus& lattice();
    MissingMonomials missing_monomials();

    int jobs() const { return jobs_; }
    ArtifactStore& store() { return store_; }

private:
    void note(const std::string& s);

    ArtifactStore& store_;
    int jobs_;
    std::ostream* log_;
    std::optional<Polynomial> d_;
    std::optional<std::vector<TermOrbit>> orbits_;
    std::optional<VertexCensus> hull_;
    std::optional<newton::NewtonVertexCensus> census_;
    std::optional<std::vector<ExponentVector>> vertices_;
    std::optional<std::vector<newton::TangentCone>> cones_;
    std::optional<newton::FaceCounts> counts_;
    std::optional<newton::LatticeCensus> lattice_;
};

std::string encode_vertex_census(const VertexCensus& c);
VertexCensus decode_vertex_census(const std::string& s);

}  // namespace hypercube::app

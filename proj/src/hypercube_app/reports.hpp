#pragma once

// Plain-text tables: tab separated, LF endings, ASCII, exact integers.

#include "hypercube_app/pipeline.hpp"

#include "hypercube/newton.hpp"
#include "hypercube/secondary.hpp"
#include "hypercube/triangulation.hpp"

#include <map>
#include <string>
#include <vector>

namespace hypercube::app {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct MissingPrerequisite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "[[e0, ..., e15], Coefficient, FaceDimension, OrbitSize]"
std::string paper_orbit_line(const ExponentVector& e, const Integer& coefficient, int face_dimension, std::size_t orbit_size,
                             std::size_t arity = 16);

std::string orbit_listing(const std::vector<TermOrbit>& orbits, bool paper_format);
std::vector<TermOrbit> parse_orbit_listing(const std::string& text);

template <class K, class V>
std::string distribution(const std::string& key, const std::string& value, const std::map<K, V>& m) {
    std::string s = key + "\t" + value + "\n";
    for (const auto& [k, v] : m) s += std::to_string(k) + "\t" + std::to_string(v) + "\n";
    return s;
}

std::map<std::size_t, std::size_t> orbit_size_distribution(const std::vector<TermOrbit>& orbits);
std::map<int, std::size_t> face_dimension_distribution(const std::vector<TermOrbit>& orbits);

// Vertex classes by (edges, facets).
std::map<std::pair<int, int>, int> edge_facet_counts(const std::vector<newton::TangentCone>& cones);
std::string table_edges_facets(const std::map<std::pair<int, int>, int>& counts);
std::string table_facet_classes(const newton::FaceCounts& counts);
std::string table_vertex_classes(const newton::NewtonVertexCensus& census);
std::string table_three_cube_types(const SecondaryPolytope3& s);
std::string table_d_classes(const TriangulationCensus& census, const std::vector<ExponentVector>& vertices, const Polynomial& D);
std::string triangulation_census_tsv(const TriangulationCensus& census);

std::string join(const std::vector<std::size_t>& v, const char* sep = " ");
std::string join(const IntVector& v, const char* sep = " ");
std::string join(const std::set<int>& v, const char* sep = " ");
std::string rational_list(const std::vector<Rational>& v);

// Every report needs a nonempty census; an empty one is an error.
template <class C>
void require_nonempty(const C& c, const std::string& what) {
    if (c.empty()) throw MissingPrerequisite("prerequisite census '" + what + "' is empty");
}

}  // namespace hypercube::app

#include "hypercube_app/reports.hpp"

#include <sstream>

namespace hypercube::app {

std::string join(const std::vector<std::size_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string join(const IntVector& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::set<int>& v, const char* sep) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : sep) + std::to_string(x);
    return s;
}

std::string rational_list(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s;
}

std::string paper_orbit_line(const ExponentVector& e, const Integer& coefficient, int face_dimension, std::size_t orbit_size,
                             std::size_t arity) {
    std::string s = "[[";
    for (std::size_t i = 0; i < arity; ++i) s += (i ? ", " : "") + std::to_string(e[i]);
    s += "], " + coefficient.to_string() + ", " + std::to_string(face_dimension) + ", " + std::to_string(orbit_size) + "]";
    return s;
}

std::string orbit_listing(const std::vector<TermOrbit>& orbits, bool paper_format) {
    std::string s;
    if (!paper_format) s = "exponent\tcoefficient\tface_dimension\torbit_size\n";
    for (const auto& o : orbits) {
        if (paper_format) s += paper_orbit_line(o.representative, o.coefficient, o.face_dimension, o.size);
        else s += o.representative.to_string(16) + "\t" + o.coefficient.to_string() + "\t" + std::to_string(o.face_dimension) + "\t" +
                  std::to_string(o.size);
        s += '\n';
    }
    return s;
}

std::vector<TermOrbit> parse_orbit_listing(const std::string& text) {
    std::vector<TermOrbit> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.rfind("exponent", 0) == 0) continue;
        TermOrbit o;
        std::string cleaned;
        for (char c : line) cleaned.push_back(c == '[' || c == ']' || c == ',' || c == '\t' ? ' ' : c);
        std::istringstream ls(cleaned);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.size() != 19) throw std::runtime_error("orbit line has " + std::to_string(tok.size()) + " fields: " + line);
        for (int i = 0; i < 16; ++i) o.representative.set(i, std::stoi(tok[i]));
        o.coefficient = Integer::parse(tok[16]);
        o.face_dimension = std::stoi(tok[17]);
        o.size = std::stoul(tok[18]);
        out.push_back(std::move(o));
    }
    return out;
}

std::map<std::size_t, std::size_t> orbit_size_distribution(const std::vector<TermOrbit>& orbits) {
    std::map<std::size_t, std::size_t> m;
    for (const auto& o : orbits) ++m[o.size];
    return m;
}

std::map<int, std::size_t> face_dimension_distribution(const std::vector<TermOrbit>& orbits) {
    std::map<int, std::size_t> m;
    for (const auto& o : orbits) ++m[o.face_dimension];
    return m;
}

std::map<std::pair<int, int>, int> edge_facet_counts(const std::vector<newton::TangentCone>& cones) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& c : cones) ++m[{static_cast<int>(c.rays.size()), static_cast<int>(c.active.size())}];
    return m;
}

std::string table_edges_facets(const std::map<std::pair<int, int>, int>& counts) {
    std::set<int> edges, facets;
    for (const auto& [k, v] : counts) {
        edges.insert(k.first);
        facets.insert(k.second);
    }
    std::string s = "edges\\facets";
    for (int f : facets) s += "\t" + std::to_string(f);
    s += "\ttotal\n";
    std::map<int, int> column;
    int grand = 0;
    for (int e : edges) {
        s += std::to_string(e);
        int row = 0;
        for (int f : facets) {
            auto it = counts.find({e, f});
            int c = it == counts.end() ? 0 : it->second;
            s += "\t" + (c ? std::to_string(c) : std::string("."));
            row += c;
            column[f] += c;
        }
        s += "\t" + std::to_string(row) + "\n";
        grand += row;
    }
    s += "total";
    for (int f : facets) s += "\t" + std::to_string(column[f]);
    s += "\t" + std::to_string(grand) + "\n";
    return s;
}

std::string table_facet_classes(const newton::FaceCounts& counts) {
    std::string s = "class\tinequality\torbit_size\tf_vector\n";
    for (const auto& c : newton::facet_classes())
        s += std::to_string(c.id) + "\t" + c.label + "\t" + std::to_string(c.orbit_size) + "\t" + rational_list(counts.by_class[c.id - 1]) + "\n";
    return s;
}

std::string table_vertex_classes(const newton::NewtonVertexCensus& census) {
    std::string s = "index\texponent\tcoefficient\torbit_size\tlisted_orbit_size\tfacets\n";
    std::vector<const newton::VertexClass*> rows;
    for (const auto& v : census.classes) rows.push_back(&v);
    std::stable_sort(rows.begin(), rows.end(), [](auto a, auto b) {
        auto key = [](const newton::VertexClass* v) { return v->table_index < 0 ? 1000 : v->table_index; };
        return key(a) < key(b);
    });
    for (auto v : rows)
        s += std::to_string(v->table_index + 1) + "\t" + v->exponent.to_string(16) + "\t" + v->coefficient.to_string() + "\t" +
             std::to_string(v->orbit_size) + "\t" + std::to_string(v->listed_orbit_size) + "\t" + std::to_string(v->active.size()) + "\n";
    return s;
}

std::string table_three_cube_types(const SecondaryPolytope3& s) {
    std::string out = "type\tgkz\torbit_size\tcoefficient\n";
    for (const auto& t : s.types) {
        IntVector g;
        for (std::size_t i = 0; i < 8; ++i) g.push_back(t.representative[i]);
        out += std::to_string(t.type) + "\t" + join(g) + "\t" + std::to_string(t.orbit_size) + "\t" + t.coefficient.to_string() + "\n";
    }
    return out;
}

std::string table_d_classes(const TriangulationCensus& census, const std::vector<ExponentVector>& vertices, const Polynomial& D) {
    require_nonempty(census.orbits, "triangulations");
    const auto& G = cube_group(census.n);
    std::map<ExponentVector, std::size_t> classes;
    for (const auto& o : census.orbits) {
        std::set<std::vector<CellMask>> images;
        for (std::size_t g = 0; g < G.order(); ++g) images.insert(apply_symmetry(census.n, g, o.cells));
        for (const auto& cells : images) {
            auto cert = is_regular({census.n, cells, std::nullopt});
            if (!cert.regular) continue;
            ++classes[d_equivalence_class(cert.weight, vertices, census.n, &D).vertex];
        }
    }
    std::string s = "vertex\tcoefficient\ttriangulations\n";
    std::map<std::size_t, std::size_t> by_size;
    std::size_t total = 0;
    for (const auto& [v, k] : classes) {
        s += v.to_string(D.arity()) + "\t" + D.coefficient(v).to_string() + "\t" + std::to_string(k) + "\n";
        ++by_size[k];
        total += k;
    }
    s += "total\t" + std::to_string(total) + " =";
    bool first = true;
    for (const auto& [size, count] : by_size) {
        s += std::string(first ? " " : " + ") + std::to_string(count) + "*" + std::to_string(size);
        first = false;
    }
    return s + "\n";
}

std::string triangulation_census_tsv(const TriangulationCensus& census) {
    require_nonempty(census.orbits, "triangulations");
    std::string s = "orbit_size\tsimplices\tvolumes\tgkz\ttight_span_f\tsignature\tcells\n";
    for (const auto& o : census.orbits) {
        std::string vol;
        for (const auto& [v, k] : o.volumes) vol += (vol.empty() ? "" : " ") + std::to_string(v) + ":" + std::to_string(k);
        std::string cells;
        for (auto c : o.cells) cells += (cells.empty() ? "" : " ") + cell_string(census.n, c);
        s += std::to_string(o.orbit_size) + "\t" + std::to_string(o.cells.size()) + "\t" + vol + "\t" + join(o.gkz) + "\t" +
             join(o.tight_fvector) + "\t" + join(o.signature) + "\t" + cells + "\n";
    }
    return s;
}

}  // namespace hypercube::app

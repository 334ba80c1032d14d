#include "hypercube_app/commands.hpp"

#include "hypercube_app/pipeline.hpp"
#include "hypercube_app/reports.hpp"
#include "hypercube_app/store.hpp"

#include "hypercube/hyperdet.hpp"
#include "hypercube/initial_forms.hpp"
#include "hypercube/newton.hpp"
#include "hypercube/poly_io.hpp"
#include "hypercube/secondary.hpp"
#include "hypercube/triangulation.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace hypercube::app {

namespace {

struct GlobalOptions {
    int jobs = 1;
    std::string cache;
    std::string out;
    bool paper_format = false;
};

struct Outcome {
    std::vector<Artifact> artifacts;
    std::vector<Check> checks;
    std::string summary;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::map<std::string, std::string> inputs;  // name -> contents, hashed into the manifest
};

using Body = std::function<Outcome(Pipeline&)>;

constexpr std::size_t kInlineLimit = std::size_t{1} << 23;

template <class A, class B>
Check expect_eq(const std::string& name, const A& got, const B& want) {
    std::ostringstream d;
    d << "got " << got << ", expected " << want;
    return {name, got == want, d.str()};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_file(path);
}

Subdivision load_subdivision(const std::string& text) {
    std::istringstream is(text);
    return read_subdivision(is);
}

IntVector load_weights(const std::string& text, int n) {
    std::istringstream is(text);
    RatVector w = read_weights(is);
    if (w.size() != (std::size_t{1} << n))
        throw std::invalid_argument("expected " + std::to_string(1 << n) + " weights, read " + std::to_string(w.size()));
    return detail::scale_to_integers(w);
}

std::string subdivision_text(const Subdivision& s) {
    std::ostringstream os;
    write_subdivision(os, s);
    return os.str();
}

template <class M>
nlohmann::json map_json(const M& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

std::vector<ExponentVector> table_vertices() {
    std::vector<ExponentVector> reps;
    for (const auto& r : newton::vertex_table()) reps.push_back(newton::to_exponent(r.exponent));
    return newton::all_vertices(reps);
}

std::vector<ExponentVector> d222_vertices() {
    Polynomial d = build_D222();
    return vertices_brute_force({d.support(), 8, 3, cube_matrix(3), {4, 2, 2, 2}});
}

int execute(const std::string& command, const GlobalOptions& g, const Body& body, std::ostream& out, std::ostream& err) {
    Stopwatch clock;
    ArtifactStore store(resolve_cache_dir(g.cache.empty() ? std::nullopt : std::optional<std::string>(g.cache)), &err);
    Pipeline pipe(store, g.jobs, &err);
    Outcome o;
    try {
        o = body(pipe);
    } catch (const MissingPrerequisite& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    out << o.summary;
    if (!o.summary.empty() && o.summary.back() != '\n') out << '\n';
    bool ok = true;
    for (const auto& c : o.checks) {
        out << "check " << c.name << ": " << (c.ok ? "ok" : "FAILED") << (c.ok || c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
        ok &= c.ok;
    }
    if (!g.out.empty()) {
        RunManifest m;
        m.command = command;
        for (const auto& [k, v] : o.inputs) m.inputs[k] = sha256_hex(v);
        for (const auto& name : {"d2222.bin", "d2222-vertices.txt"})
            if (auto d = store.digest(name)) m.inputs[std::string("cache:") + name] = *d;
        m.parameters = o.parameters;
        m.parameters["jobs"] = g.jobs;
        m.threads = g.jobs;
        m.wall_seconds = clock.seconds();
        m.results = o.results;
        for (const auto& c : o.checks) m.checks[c.name] = c.ok;
        write_artifacts(g.out, o.artifacts, m);
    } else {
        for (const auto& a : o.artifacts) {
            if (a.content.size() > kInlineLimit) {
                out << "== " << a.name << " (" << a.content.size() << " bytes; use --out to write it)\n";
                continue;
            }
            if (o.artifacts.size() > 1) out << "== " << a.name << '\n';
            out << a.content;
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

// hyperdet

Outcome hyperdet_build(Pipeline& p, const std::string& format) {
    Outcome o;
    o.parameters["format"] = format;
    if (format == "2x2") {
        Polynomial d = build_D22();
        o.artifacts.push_back({"d22.txt", to_text(d)});
        o.summary = to_expression(d, 2);
    } else if (format == "2x2x2") {
        Polynomial d;
        try {
            d = build_D222();
            o.checks.push_back({"reference", true, ""});
        } catch (const std::runtime_error& e) {
            o.checks.push_back({"reference", false, e.what()});
            return o;
        }
        o.checks.push_back(expect_eq("terms", d.size(), 12));
        o.artifacts.push_back({"d222.txt", to_text(d)});
        o.summary = to_expression(d, 3);
    } else if (format == "2x2x2x2") {
        auto h = p.headline();
        const auto& ref = newton::hyperdet_census_data();
        o.summary = "terms " + std::to_string(h.terms) + ", orbits " + std::to_string(h.orbits) + ", max |coefficient| " +
                    h.max_abs.to_string() + ", largest odd coefficient " + (h.largest_odd ? h.largest_odd->to_string() : "none");
        o.checks.push_back(expect_eq("terms", h.terms, static_cast<std::size_t>(ref.terms)));
        o.checks.push_back({"multidegree", h.homogeneous, "a term misses A x = (24,12,12,12,12)"});
        o.checks.push_back(expect_eq("max_abs_coefficient", h.max_abs, Integer(ref.max_abs_coefficient)));
        o.checks.push_back(expect_eq("largest_odd_coefficient", h.largest_odd.value_or(Integer(0)), Integer(ref.largest_odd_coefficient)));
        o.results["terms"] = h.terms;
        o.results["max_abs_coefficient"] = h.max_abs.to_string();
        o.artifacts.push_back({"d2222.txt", to_text(p.d2222())});
    } else {
        throw CLI::ValidationError("--format", "expected 2x2, 2x2x2 or 2x2x2x2");
    }
    return o;
}

Outcome hyperdet_orbits(Pipeline& p, bool paper_format) {
    Outcome o;
    const auto& orbits = p.term_orbits();
    const auto& ref = newton::hyperdet_census_data();
    auto sizes = orbit_size_distribution(orbits);
    auto dims = face_dimension_distribution(orbits);
    o.artifacts.push_back({paper_format ? "orbits.txt" : "orbits.tsv", orbit_listing(orbits, paper_format)});
    o.artifacts.push_back({"orbit-sizes.tsv", distribution("orbit_size", "orbits", sizes)});
    o.artifacts.push_back({"face-dims.tsv", distribution("face_dimension", "orbits", dims)});
    o.summary = std::to_string(orbits.size()) + " orbits";
    o.checks.push_back(expect_eq("orbits", orbits.size(), static_cast<std::size_t>(ref.orbits)));
    std::map<std::size_t, std::size_t> want_sizes;
    for (auto [k, v] : ref.orbit_sizes) want_sizes[k] = v;
    std::map<int, std::size_t> want_dims;
    for (auto [k, v] : ref.face_dimensions) want_dims[k] = v;
    o.checks.push_back({"orbit_size_distribution", sizes == want_sizes, distribution("size", "orbits", sizes)});
    o.checks.push_back({"face_dimension_distribution", dims == want_dims, distribution("dim", "orbits", dims)});
    for (const auto& m : ref.listed) {
        auto e = newton::to_exponent(m.exponent);
        auto c = canonicalize(e, 4);
        auto it = std::lower_bound(orbits.begin(), orbits.end(), c.representative,
                                   [](const TermOrbit& t, const ExponentVector& x) { return t.representative < x; });
        bool ok = it != orbits.end() && it->representative == c.representative && it->coefficient == Integer(m.coefficient) &&
                  it->face_dimension == m.face_dimension && it->size == static_cast<std::size_t>(m.orbit_size);
        o.checks.push_back({"listed " + paper_orbit_line(e, Integer(m.coefficient), m.face_dimension, m.orbit_size), ok,
                            it == orbits.end() ? "missing" : paper_orbit_line(it->representative, it->coefficient, it->face_dimension, it->size)});
    }
    o.results["orbits"] = orbits.size();
    o.results["orbit_sizes"] = map_json(sizes);
    o.results["face_dimensions"] = map_json(dims);
    return o;
}

Outcome hyperdet_initial_form(Pipeline& p, int facet, const std::string& weights) {
    Outcome o;
    const Polynomial& D = p.d2222();
    if (!weights.empty()) {
        std::string text = read_input(weights);
        o.inputs["weights"] = text;
        IntVector w = load_weights(text, 4);
        Polynomial in = initial_form(D, std::vector<std::int64_t>(w.begin(), w.end()));
        o.summary = "initial form: " + std::to_string(in.size()) + " terms";
        o.artifacts.push_back({"initial-form.txt", to_text(in)});
        return o;
    }
    auto rep = verify_facet_initial_form(D, facet);
    std::ostringstream s;
    s << "facet class " << facet << ": " << rep.initial_form_terms << " terms\n";
    for (const auto& f : rep.factors)
        s << "  factor " << f.text << ": " << f.terms << " terms, degree " << f.degree << ", multiplicity " << f.observed_multiplicity
          << " (printed " << f.printed_multiplicity << ")\n";
    for (std::size_t i = 0; i < rep.cofactor_terms.size(); ++i)
        s << "  cofactor: " << rep.cofactor_terms[i] << " terms, degree " << rep.cofactor_degrees[i] << '\n';
    if (!rep.note.empty()) s << "  " << rep.note << '\n';
    o.summary = s.str();
    o.checks.push_back({"facet " + std::to_string(facet) + " factorization", rep.ok(), rep.note});
    o.parameters["facet"] = facet;
    return o;
}

Outcome hyperdet_verify_facets(Pipeline& p) {
    Outcome o;
    std::string table = "class\tinitial_form_terms\tfactors\tcofactors\tok\n";
    for (int k = 1; k <= 8; ++k) {
        auto rep = verify_facet_initial_form(p.d2222(), k);
        std::string cof;
        for (std::size_t i = 0; i < rep.cofactor_terms.size(); ++i)
            cof += (cof.empty() ? "" : " ") + std::to_string(rep.cofactor_terms[i]) + "t/d" + std::to_string(rep.cofactor_degrees[i]);
        table += std::to_string(k) + "\t" + std::to_string(rep.initial_form_terms) + "\t" + std::to_string(rep.factors.size()) + "\t" +
                 (cof.empty() ? "-" : cof) + "\t" + (rep.ok() ? "yes" : "no") + "\n";
        o.checks.push_back({"facet " + std::to_string(k), rep.ok(), rep.note});
    }
    o.artifacts.push_back({"initial-forms.tsv", table});
    return o;
}

// newton

Outcome newton_vertices(Pipeline& p) {
    Outcome o;
    const auto& c = p.newton_census();
    o.artifacts.push_back({"vertices.tsv", table_vertex_classes(c)});
    o.summary = std::to_string(c.vertex_count) + " vertices in " + std::to_string(c.classes.size()) + " orbits";
    o.checks.push_back(expect_eq("vertex_orbits", c.classes.size(), 111));
    o.checks.push_back(expect_eq("vertices", c.vertex_count, 25448));
    // The table lists one orbit size as 92; its computed size is 192.
    bool flagged_only = c.discrepancies.size() == 1 && c.discrepancies[0].what == "orbit size 192 vs listed 92";
    std::string d;
    for (const auto& x : c.discrepancies) d += "[" + std::to_string(x.table_index + 1) + ": " + x.what + "] ";
    o.checks.push_back({"vertex_table", flagged_only, d});
    if (!d.empty()) o.summary += "\nflagged: " + d;
    std::map<long, int> want{{1, 60}, {-1, 47}, {16, 1}, {-16, 2}, {-27, 1}};
    o.checks.push_back({"coefficient_histogram", c.coefficient_histogram == want, ""});
    o.results["vertices"] = c.vertex_count;
    o.results["orbits"] = c.classes.size();
    o.results["coefficients"] = map_json(c.coefficient_histogram);
    return o;
}

Outcome newton_facets(Pipeline& p) {
    Outcome o;
    auto v = newton::verify_facet_classes(p.vertices(), true);
    const auto& fc = p.face_counts();
    o.artifacts.push_back({"facet-classes.tsv", table_facet_classes(fc)});
    o.summary = std::to_string(v.total) + " facets in 8 classes";
    o.checks.push_back({"facets_valid_irredundant", v.ok(), v.violations.empty() ? "" : v.violations.front()});
    for (const auto& c : newton::facet_classes()) {
        std::vector<Rational> want(c.fvector.begin(), c.fvector.end());
        o.checks.push_back({"class " + std::to_string(c.id) + " f-vector", fc.by_class[c.id - 1] == want, rational_list(fc.by_class[c.id - 1])});
    }
    return o;
}

Outcome newton_lattice(Pipeline& p) {
    Outcome o;
    const auto& L = p.lattice();
    auto missing = p.missing_monomials();
    const auto& want = newton::lattice_stage_counts();
    std::array<std::size_t, 5> got{L.facet_tuples, L.canonical_tuples, L.nonnegative, L.in_polytope, L.orbits.size()};
    const char* names[5] = {"facet_assignments", "lex_min_assignments", "nonnegative_completions", "in_polytope", "lattice_orbits"};
    o.results["stage_counts"] = nlohmann::json::object();
    for (int i = 0; i < 5; ++i) {
        o.results["stage_counts"][names[i]] = got[i];
        o.checks.push_back(expect_eq(names[i], got[i], static_cast<std::size_t>(want[i])));
    }
    o.results["missing_monomials"] = missing.monomials;
    o.results["missing_orbits"] = missing.orbits.size();
    o.results["missing_face_dimensions"] = map_json(missing.face_dimensions);
    o.checks.push_back(expect_eq("missing_monomials", missing.monomials, static_cast<std::size_t>(newton::kMissingMonomials)));
    o.checks.push_back(expect_eq("missing_orbits", missing.orbits.size(), newton::missing_monomials().size()));
    std::map<int, std::size_t> dims_want;
    for (auto [k, v] : newton::missing_face_dimensions()) dims_want[k] = v;
    o.checks.push_back({"missing_face_dimensions", missing.face_dimensions == dims_want, ""});
    std::set<ExponentVector> listed;
    for (const auto& m : newton::missing_monomials()) listed.insert(canonicalize(newton::to_exponent(m), 4).representative);
    std::set<ExponentVector> found;
    for (const auto& m : missing.orbits) found.insert(m.representative);
    o.checks.push_back({"missing_match_reference", listed == found, ""});
    std::string s;
    for (int i = 0; i < 5; ++i) s += std::string(i ? " -> " : "") + std::to_string(got[i]);
    o.summary = "stage counts " + s + "\nmissing monomials " + std::to_string(missing.monomials) + " in " +
                std::to_string(missing.orbits.size()) + " orbits";
    std::vector<TermOrbit> rows;
    const auto& P = newton::facet_system().polytope;
    for (const auto& m : missing.orbits) rows.push_back({m.representative, Integer(0), m.size, P.face_dimension(m.representative)});
    o.artifacts.push_back({"missing-monomials.txt", orbit_listing(rows, true)});
    return o;
}

Outcome newton_face_dims(Pipeline& p) {
    Outcome o;
    auto dims = face_dimension_distribution(p.term_orbits());
    std::map<int, std::size_t> want;
    for (auto [k, v] : newton::hyperdet_census_data().face_dimensions) want[k] = v;
    o.artifacts.push_back({"face-dims.tsv", distribution("face_dimension", "orbits", dims)});
    o.checks.push_back({"face_dimension_distribution", dims == want, ""});
    o.results["face_dimensions"] = map_json(dims);
    return o;
}

Outcome newton_fvector(Pipeline& p) {
    Outcome o;
    const auto& cones = p.tangent_cones();
    auto table = edge_facet_counts(cones);
    o.artifacts.push_back({"edges-facets.tsv", table_edges_facets(table)});
    o.checks.push_back({"edges_facets_table", table == newton::edge_facet_table(), ""});
    auto comp = newton::check_completeness(cones, p.vertices());
    o.checks.push_back({"edge_completeness", comp.ok(), comp.failures.empty() ? "" : comp.failures.front()});
    auto dv = newton::to_exponent(newton::distinguished_vertex());
    auto dvrep = canonicalize(dv, 4).representative;
    for (const auto& tc : cones) {
        if (tc.vertex != dvrep) continue;
        auto f = newton::vertex_figure_fvector(tc);
        std::vector<std::size_t> want(newton::distinguished_vertex_figure().begin(), newton::distinguished_vertex_figure().end());
        o.checks.push_back({"distinguished_vertex_figure", f == want, join(f)});
        o.results["distinguished_vertex_figure"] = f;
    }
    int simple = 0;
    for (const auto& tc : cones) simple += tc.rays.size() == 11;
    o.checks.push_back(expect_eq("simple_vertex_classes", simple, 35));
    const auto& g = p.face_counts().global;
    std::vector<Rational> want(newton::newton_fvector().begin(), newton::newton_fvector().end());
    o.checks.push_back({"fvector", g == want, rational_list(g)});
    o.artifacts.push_back({"fvector.txt", rational_list(g) + "\n"});
    o.summary = "f-vector " + rational_list(g);
    return o;
}

// tri

Outcome tri_subdivide(int n, const std::string& weights) {
    Outcome o;
    std::string text = read_input(weights);
    o.inputs["weights"] = text;
    Subdivision s = regular_subdivision(n, load_weights(text, n));
    o.summary = std::to_string(s.cells.size()) + " cells" + (s.is_triangulation() ? " (triangulation)" : "");
    o.checks.push_back(expect_eq("volume", total_volume(s), [n] {
        std::int64_t f = 1;
        for (int k = 2; k <= n; ++k) f *= k;
        return f;
    }()));
    o.artifacts.push_back({"subdivision.txt", subdivision_text(s)});
    return o;
}

Outcome tri_gkz(const std::string& input) {
    Outcome o;
    std::string text = read_input(input);
    o.inputs["subdivision"] = text;
    Subdivision t = load_subdivision(text);
    o.artifacts.push_back({"gkz.txt", join(gkz_vector(t)) + "\n"});
    return o;
}

Outcome tri_tightspan(const std::string& input, const std::string& weights, int n) {
    Outcome o;
    Subdivision s;
    if (!input.empty()) {
        std::string text = read_input(input);
        o.inputs["subdivision"] = text;
        s = load_subdivision(text);
    } else {
        std::string text = read_input(weights);
        o.inputs["weights"] = text;
        s = regular_subdivision(n, load_weights(text, n));
    }
    auto ts = tight_span(s);
    std::string out = "fvector\t" + join(ts.fvector) + "\nsignature\t" + join(ts.signature) + "\n";
    for (std::size_t k = 0; k < ts.faces.size(); ++k)
        for (auto c : ts.faces[k]) out += "face\t" + std::to_string(k) + "\t" + cell_string(s.n, c) + "\n";
    o.artifacts.push_back({"tight-span.txt", out});
    return o;
}

Outcome tri_flips(const std::string& input) {
    Outcome o;
    std::string text = read_input(input);
    o.inputs["triangulation"] = text;
    Subdivision t = load_subdivision(text);
    if (!t.is_triangulation()) throw NotATriangulation();
    const auto& circuits = cube_configuration(t.n).circuits();
    std::string out = "circuit_plus\tcircuit_minus\tdirection\tresult_simplices\tregular\n";
    auto fl = flips(t);
    for (const auto& f : fl) {
        const auto& c = circuits[f.circuit];
        out += cell_string(t.n, c.plus) + "\t" + cell_string(t.n, c.minus) + "\t" + (f.forward ? "+" : "-") + "\t" +
               std::to_string(f.result.cells.size()) + "\t" + (is_regular(f.result).regular ? "yes" : "no") + "\n";
    }
    o.summary = std::to_string(fl.size()) + " flips";
    o.artifacts.push_back({"flips.tsv", out});
    return o;
}

Outcome tri_enumerate(int n, bool all, std::size_t limit, const std::string& checkpoint, int jobs, std::ostream& err) {
    Outcome o;
    EnumerationOptions opt;
    opt.up_to_symmetry = !all;
    opt.limit = limit;
    opt.checkpoint = checkpoint;
    opt.jobs = jobs;
    opt.progress = [&](std::size_t done, std::size_t found) { err << "expanded " << done << ", found " << found << "\n"; };
    auto c = enumerate_triangulations(n, opt);
    o.parameters["n"] = n;
    o.parameters["up_to_symmetry"] = !all;
    o.summary = std::to_string(c.orbits.size()) + (all ? " triangulations" : " orbits") + ", " + std::to_string(c.total()) +
                " triangulations in total" + (c.complete ? "" : " (incomplete)");
    o.artifacts.push_back({"triangulations.tsv", triangulation_census_tsv(c)});
    o.results["orbits"] = c.orbits.size();
    o.results["total"] = c.total();
    if (n == 2) o.checks.push_back(expect_eq("total", c.total(), 2));
    if (n == 3 && c.complete) {
        o.checks.push_back(expect_eq("total", c.total(), 74));
        if (!all) o.checks.push_back(expect_eq("orbits", c.orbits.size(), 6));
    }
    return o;
}

Outcome tri_dequiv(int n, const std::string& weights) {
    Outcome o;
    std::string text = read_input(weights);
    o.inputs["weights"] = text;
    IntVector w = load_weights(text, n);
    DClass c;
    if (n == 4) {
        c = d_equivalence_class(w, table_vertices(), 4);
    } else if (n == 3) {
        Polynomial d = build_D222();
        c = d_equivalence_class(w, d222_vertices(), 3, &d);
    } else {
        throw CLI::ValidationError("--n", "D-equivalence classes are provided for n = 3 and 4");
    }
    std::size_t N = std::size_t{1} << n;
    std::string s;
    if (c.table_index) s += "class\t" + std::to_string(c.table_index) + "\n";
    s += "vertex\t" + c.vertex.to_string(N) + "\ncanonical\t" + c.canonical.to_string(N) + "\ncoefficient\t" + c.coefficient.to_string() +
         "\norbit_size\t" + std::to_string(c.orbit_size) + "\n";
    o.artifacts.push_back({"d-class.txt", s});
    return o;
}

Outcome tri_tenset(const std::string& input) {
    Outcome o;
    std::string text = read_input(input);
    o.inputs["triangulation"] = text;
    Subdivision t = load_subdivision(text);
    o.artifacts.push_back({"ten-set.txt", "pairs\t" + std::to_string(ten_set_statistic(t)) + "\ndistinct\t" +
                                              std::to_string(distinct_ten_sets(t)) + "\n"});
    return o;
}

// secondary

Outcome secondary_e222() {
    Outcome o;
    auto s = secondary_polytope_3cube();
    o.artifacts.push_back({"three-cube-types.tsv", table_three_cube_types(s)});
    o.summary = std::to_string(s.terms) + " terms, " + std::to_string(s.vertices.size()) + " vertices, f-vector " + join(s.fvector);
    o.checks.push_back(expect_eq("terms", s.terms, 231));
    o.checks.push_back(expect_eq("vertices", s.vertices.size(), 74));
    o.checks.push_back({"types", s.ok(), ""});
    o.checks.push_back(expect_eq("fvector", join(s.fvector), "74 152 100 22"));
    o.checks.push_back({"facets_match_reference", s.facets_match, ""});
    return o;
}

Outcome secondary_census3(int jobs) {
    Outcome o;
    EnumerationOptions opt;
    opt.jobs = jobs;
    auto c = enumerate_triangulations(3, opt);
    Polynomial d = build_D222();
    std::string classes = table_d_classes(c, d222_vertices(), d);
    o.artifacts.push_back({"triangulations.tsv", triangulation_census_tsv(c)});
    o.artifacts.push_back({"d-classes.tsv", classes});
    o.checks.push_back(expect_eq("orbits", c.orbits.size(), 6));
    o.checks.push_back(expect_eq("total", c.total(), 74));
    o.checks.push_back({"d_class_decomposition", classes.find("total\t74 = 2*1 + 4*18\n") != std::string::npos, ""});
    o.summary = std::to_string(c.orbits.size()) + " orbits, " + std::to_string(c.total()) + " triangulations";
    return o;
}

std::string coarsest_text(int n, const CoarsestSubdivisionReport& r) {
    std::string s = "inequality\t" + to_string(r.inequality, n) + "\ncells\t" + std::to_string(r.cells.size()) + "\n";
    for (const auto& c : r.cells)
        s += "cell\t" + cell_string(n, c.labels) + "\tvolume " + std::to_string(c.volume) + "\tf " + join(c.fvector) + "\n";
    s += "tight_span\t" + join(r.span.fvector) + "\nsignature\t" + join(r.span.signature) + "\n";
    return s;
}

Outcome secondary_facets(int n, const std::vector<std::string>& inequalities, int jobs) {
    Outcome o;
    if (!inequalities.empty()) {
        std::string all;
        for (const auto& text : inequalities) {
            auto r = coarsest_subdivision_report(n, parse_inequality(text, n));
            all += coarsest_text(n, r) + "\n";
        }
        o.artifacts.push_back({"coarsest-subdivisions.txt", all});
        return o;
    }
    if (n != 3)
        throw MissingPrerequisite("facets of the 4-cube secondary polytope need the full triangulation census; pass --inequality to "
                                  "examine individual facet normals");
    EnumerationOptions opt;
    opt.jobs = jobs;
    auto census = enumerate_triangulations(3, opt);
    auto sf = secondary_facets_via_tangent_cones(census, jobs);
    std::string s = "orbit_size\tinequality\tcells\ttight_span\n";
    std::set<GaugedInequality> got, want;
    IntVector deg = gkz_degrees(3);
    for (const auto& f : sf.orbits) {
        Inequality q{f.representative.normal, Sense::GE, f.representative.rhs};
        s += std::to_string(f.orbit_size) + "\t" + to_string(q, 3) + "\t" + std::to_string(f.subdivision.cells.size()) + "\t" +
             join(f.span.fvector) + "\n";
        for (const auto& img : expand_inequality_orbit(q, 3, deg)) got.insert(gauge(img, 3, deg));
    }
    for (const auto& f : three_cube_secondary_inequalities()) want.insert(gauge(f, 3, deg));
    o.artifacts.push_back({"secondary-facets.tsv", s});
    o.checks.push_back(expect_eq("facets", sf.facets, 22));
    o.checks.push_back({"facets_match_reference", got == want, ""});
    o.summary = std::to_string(sf.facets) + " facets in " + std::to_string(sf.orbits.size()) + " orbits";
    return o;
}

// report

Outcome report_tables(Pipeline& p, const std::string& orbits_file, bool paper_format) {
    Outcome o;
    std::vector<TermOrbit> orbits;
    if (!orbits_file.empty()) {
        std::string text = read_input(orbits_file);
        o.inputs["orbits"] = text;
        orbits = parse_orbit_listing(text);
    } else {
        orbits = p.term_orbits();
    }
    require_nonempty(orbits, "hyperdeterminant orbits");
    o.artifacts.push_back({"orbit-sizes.tsv", distribution("orbit_size", "orbits", orbit_size_distribution(orbits))});
    o.artifacts.push_back({"face-dims.tsv", distribution("face_dimension", "orbits", face_dimension_distribution(orbits))});
    if (paper_format) o.artifacts.push_back({"orbits.txt", orbit_listing(orbits, true)});
    const auto& census = p.newton_census();
    require_nonempty(census.classes, "Newton polytope vertices");
    o.artifacts.push_back({"table1-edges-facets.tsv", table_edges_facets(edge_facet_counts(p.tangent_cones()))});
    o.artifacts.push_back({"table2-facet-classes.tsv", table_facet_classes(p.face_counts())});
    o.artifacts.push_back({"vertex-classes.tsv", table_vertex_classes(census)});
    auto s3 = secondary_polytope_3cube();
    o.artifacts.push_back({"three-cube-types.tsv", table_three_cube_types(s3)});
    EnumerationOptions opt;
    opt.jobs = p.jobs();
    o.artifacts.push_back({"three-cube-d-classes.tsv", table_d_classes(enumerate_triangulations(3, opt), d222_vertices(), build_D222())});
    o.summary = std::to_string(o.artifacts.size()) + " tables";
    return o;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperdeterminant, Newton polytope and cube triangulation toolkit", "hypercube"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    g.jobs = 1;
    app.add_option("--jobs,-j", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", g.cache, std::string("cache directory (default: $") + kCacheEnv + ")");
    app.add_option("--out,-o", g.out, "write artifacts and manifest.json into this directory");
    app.add_flag("--paper-format", g.paper_format, "orbit listings as [[exponents], coefficient, face dimension, orbit size]");

    std::function<int()> action;
    auto bind = [&](CLI::App* sub, const std::string& name, std::function<Body()> make) {
        sub->callback([&, name, make] { action = [&, name, make] { return execute(name, g, make(), out, err); }; });
    };

    auto* hd = app.add_subcommand("hyperdet", "hyperdeterminants by the Schlafli recursion")->require_subcommand(1);
    std::string format = "2x2x2";
    auto* hd_build = hd->add_subcommand("build", "expand a hyperdeterminant");
    hd_build->add_option("--format", format, "2x2, 2x2x2 or 2x2x2x2")->check(CLI::IsMember({"2x2", "2x2x2", "2x2x2x2"}));
    bind(hd_build, "hyperdet build", [&] { return Body([&](Pipeline& p) { return hyperdet_build(p, format); }); });
    auto* hd_orbits = hd->add_subcommand("orbits", "orbit census of the 2x2x2x2 hyperdeterminant");
    bind(hd_orbits, "hyperdet orbits", [&] { return Body([&](Pipeline& p) { return hyperdet_orbits(p, g.paper_format); }); });
    int facet = 1;
    std::string if_weights;
    auto* hd_if = hd->add_subcommand("initial-form", "initial form at a facet class or a weight file");
    hd_if->add_option("--facet", facet, "facet class 1..8")->check(CLI::Range(1, 8));
    hd_if->add_option("--weights", if_weights, "file with 16 weights");
    bind(hd_if, "hyperdet initial-form", [&] { return Body([&](Pipeline& p) { return hyperdet_initial_form(p, facet, if_weights); }); });
    auto* hd_vf = hd->add_subcommand("verify-facets", "factor the initial forms at all eight facet classes");
    bind(hd_vf, "hyperdet verify-facets", [&] { return Body([&](Pipeline& p) { return hyperdet_verify_facets(p); }); });

    auto* nt = app.add_subcommand("newton", "Newton polytope of the 2x2x2x2 hyperdeterminant")->require_subcommand(1);
    bind(nt->add_subcommand("vertices", "vertex census"), "newton vertices",
         [&] { return Body([&](Pipeline& p) { return newton_vertices(p); }); });
    bind(nt->add_subcommand("facets", "facet classes and their f-vectors"), "newton facets",
         [&] { return Body([&](Pipeline& p) { return newton_facets(p); }); });
    bind(nt->add_subcommand("lattice", "lattice points and missing monomials"), "newton lattice",
         [&] { return Body([&](Pipeline& p) { return newton_lattice(p); }); });
    bind(nt->add_subcommand("face-dims", "face dimensions of the term orbits"), "newton face-dims",
         [&] { return Body([&](Pipeline& p) { return newton_face_dims(p); }); });
    bind(nt->add_subcommand("fvector", "edge and facet counts, vertex figures, f-vector"), "newton fvector",
         [&] { return Body([&](Pipeline& p) { return newton_fvector(p); }); });

    auto* tr = app.add_subcommand("tri", "subdivisions and triangulations of the n-cube")->require_subcommand(1);
    int n = 4;
    std::string weights, input, checkpoint;
    bool all = false;
    std::size_t limit = 0;
    auto add_n = [&](CLI::App* s) { s->add_option("--n", n, "cube dimension")->check(CLI::Range(2, 4)); };
    auto* t_sub = tr->add_subcommand("subdivide", "regular subdivision induced by weights");
    add_n(t_sub);
    t_sub->add_option("--weights", weights, "weight file ('-' for stdin)")->required();
    bind(t_sub, "tri subdivide", [&] { return Body([&](Pipeline&) { return tri_subdivide(n, weights); }); });
    auto* t_gkz = tr->add_subcommand("gkz", "GKZ vector of a triangulation");
    t_gkz->add_option("--input", input, "subdivision file")->required();
    bind(t_gkz, "tri gkz", [&] { return Body([&](Pipeline&) { return tri_gkz(input); }); });
    auto* t_ts = tr->add_subcommand("tightspan", "tight span of a subdivision");
    add_n(t_ts);
    auto* ts_in = t_ts->add_option("--input", input, "subdivision file");
    t_ts->add_option("--weights", weights, "weight file")->excludes(ts_in);
    bind(t_ts, "tri tightspan", [&] {
        if (input.empty() && weights.empty()) throw CLI::ValidationError("--input", "give --input or --weights");
        return Body([&](Pipeline&) { return tri_tightspan(input, weights, n); });
    });
    auto* t_fl = tr->add_subcommand("flips", "bistellar flips of a triangulation");
    t_fl->add_option("--input", input, "triangulation file")->required();
    bind(t_fl, "tri flips", [&] { return Body([&](Pipeline&) { return tri_flips(input); }); });
    auto* t_en = tr->add_subcommand("enumerate", "regular triangulations by flips");
    add_n(t_en);
    t_en->add_flag("--all", all, "list every triangulation instead of orbits");
    t_en->add_option("--limit", limit, "stop after this many orbits");
    t_en->add_option("--checkpoint", checkpoint, "resumable checkpoint file");
    bind(t_en, "tri enumerate", [&] { return Body([&](Pipeline& p) { return tri_enumerate(n, all, limit, checkpoint, p.jobs(), err); }); });
    auto* t_dq = tr->add_subcommand("dequiv", "D-equivalence class of a weight");
    add_n(t_dq);
    t_dq->add_option("--weights", weights, "weight file")->required();
    bind(t_dq, "tri dequiv", [&] { return Body([&](Pipeline&) { return tri_dequiv(n, weights); }); });
    auto* t_ten = tr->add_subcommand("tenset", "pairs of simplices with disjoint vertex sets");
    t_ten->add_option("--input", input, "triangulation file")->required();
    bind(t_ten, "tri tenset", [&] { return Body([&](Pipeline&) { return tri_tenset(input); }); });

    auto* sc = app.add_subcommand("secondary", "secondary polytopes")->require_subcommand(1);
    bind(sc->add_subcommand("e222", "principal determinant of the 3-cube"), "secondary e222",
         [&] { return Body([&](Pipeline&) { return secondary_e222(); }); });
    bind(sc->add_subcommand("census3", "triangulations of the 3-cube and their D-classes"), "secondary census3",
         [&] { return Body([&](Pipeline& p) { return secondary_census3(p.jobs()); }); });
    std::vector<std::string> inequalities;
    int facets_n = 3;
    auto* s_f = sc->add_subcommand("facets", "secondary facets and coarsest subdivisions");
    s_f->add_option("--n", facets_n, "cube dimension")->check(CLI::Range(3, 4));
    s_f->add_option("--inequality", inequalities, "facet inequality such as 'x0000 + x0001 >= 5'");
    bind(s_f, "secondary facets", [&] { return Body([&](Pipeline& p) { return secondary_facets(facets_n, inequalities, p.jobs()); }); });

    auto* rp = app.add_subcommand("report", "tables")->require_subcommand(1);
    std::string orbits_file;
    auto* r_t = rp->add_subcommand("tables", "emit every table");
    r_t->add_option("--orbits", orbits_file, "orbit listing to use instead of recomputing");
    bind(r_t, "report tables", [&] { return Body([&](Pipeline& p) { return report_tables(p, orbits_file, g.paper_format); }); });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!action) {
        err << "error: no command given\n";
        return kExitUsage;
    }
    try {
        return action();
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace hypercube::app

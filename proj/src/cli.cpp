#include "censym/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "censym/configs.hpp"
#include "censym/graphs.hpp"
#include "censym/intlin.hpp"
#include "censym/polytope.hpp"
#include "censym/semigroup.hpp"
#include "censym/toric.hpp"

namespace censym::cli {

namespace {

using nlohmann::json;

json json_int(const Int& v) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

json json_vector(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(json_int(x));
    return a;
}

json json_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

json json_binomials(const std::vector<Binomial>& els, const std::vector<std::string>& names) {
    json lines = json::array();
    json raw = json::array();
    for (const auto& b : els) {
        lines.push_back(format_binomial(b, names));
        raw.push_back(json{{"lead", b.lead}, {"trail", b.trail}});
    }
    return json{{"text", std::move(lines)}, {"exponents", std::move(raw)}};
}

std::size_t env_or(const char* name, std::size_t fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return static_cast<std::size_t>(std::stoull(v));
        } catch (const std::exception&) {
            throw ParseError(std::string("bad value in environment variable ") + name);
        }
    }
    return fallback;
}

int env_or_int(const char* name, int fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad value in environment variable ") + name);
        }
    }
    return fallback;
}

struct CommonOpts {
    bool pretty = false;
};

void emit(std::ostream& out, json report, bool pretty) {
    out << (pretty ? report.dump(2) : report.dump()) << '\n';
}

json make_report(const std::string& command, json inputs, json results, json limits) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"limits", std::move(limits)},
                {"version", kVersion}};
}

enum class ConfigKind { Rho, Mu, RhoCsc, MuCsc };

ConfigKind parse_kind(const std::string& s) {
    if (s == "rho") return ConfigKind::Rho;
    if (s == "mu") return ConfigKind::Mu;
    if (s == "rho±" || s == "rho+-") return ConfigKind::RhoCsc;
    if (s == "mu±" || s == "mu+-") return ConfigKind::MuCsc;
    throw ParseError("unknown --kind (expected rho, mu, rho±/rho+-, mu±/mu+-): " + s);
}

std::string kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::Rho: return "rho";
        case ConfigKind::Mu: return "mu";
        case ConfigKind::RhoCsc: return "rho+-";
        case ConfigKind::MuCsc: return "mu+-";
    }
    return "?";
}

IntMatrix build_graph_matrix(const Graph& g, ConfigKind kind) {
    switch (kind) {
        case ConfigKind::Rho: return graph_config_rho(g);
        case ConfigKind::Mu: return graph_config_mu(g);
        case ConfigKind::RhoCsc: return central_symmetrize(graph_config_rho(g)).matrix;
        case ConfigKind::MuCsc: return central_symmetrize(graph_config_mu(g)).matrix;
    }
    throw ParseError("unreachable kind");
}

Graph load_graph(const std::string& file, const std::string& family) {
    if (!family.empty()) return graph_from_family(family);
    if (file.empty()) throw ParseError("need a graph file or --family");
    return read_graph_file(file);
}

// ---------------------------------------------------------------------------

json cmd_analyze(const std::string& file) {
    IntMatrix a = read_matrix_file(file);
    json results;
    HnfResult hn = hnf(a);
    results["rank"] = hn.rank;
    results["hnf"] = json_matrix(hn.h);
    if (hn.has_square_block()) results["hnf_block"] = json_matrix(hn.square_block());
    LatticeIndex idx = lattice_index(a);
    results["lattice_index"] = idx.finite ? json_int(idx.value) : json("infinite");
    results["gcd_maximal_minors"] = json_int(gcd_maximal_minors(a));
    if (hn.rank == a.rows()) {
        auto uni = is_unimodular(a);
        results["unimodular"] = uni.unimodular;
        results["delta"] = json_int(uni.delta);
    } else {
        results["unimodular"] = nullptr;
        results["delta"] = nullptr;
    }
    CscMatrix csc = central_symmetrize(a);
    results["csc"] = json{{"rows", csc.matrix.rows()},
                          {"cols", csc.matrix.cols()},
                          {"layout", "center, plus block, minus block"}};
    LatticeIndex cidx = lattice_index(csc.matrix);
    results["csc_lattice_index"] = cidx.finite ? json_int(cidx.value) : json("infinite");
    if (hn.rank == a.rows()) {
        auto cuni = is_unimodular(csc.matrix);
        results["csc_unimodular"] = cuni.unimodular;
    } else {
        results["csc_unimodular"] = nullptr;
    }
    return make_report("analyze", json{{"matrix_file", file}, {"rows", a.rows()}, {"cols", a.cols()}},
                       std::move(results), json::object());
}

json cmd_gb(const std::string& file, bool as_graph, const std::string& family,
            const std::string& kind_str, bool apply_csc, const std::string& order_name,
            bool center_smallest, std::size_t budget, int* exit_code) {
    IntMatrix a = [&] {
        if (as_graph || !family.empty()) {
            Graph g = load_graph(file, family);
            return build_graph_matrix(g, parse_kind(kind_str));
        }
        IntMatrix m = read_matrix_file(file);
        return apply_csc ? central_symmetrize(m).matrix : m;
    }();
    bool csc_shaped =
        apply_csc ||
        ((as_graph || !family.empty()) && (parse_kind(kind_str) == ConfigKind::RhoCsc ||
                                           parse_kind(kind_str) == ConfigKind::MuCsc));
    const std::size_t n = a.cols();
    TermOrder order = [&]() -> TermOrder {
        if (center_smallest) return center_smallest_revlex(n);
        if (order_name == "grevlex") return TermOrder(OrderKind::GradedRevLex, n);
        if (order_name == "glex") return TermOrder(OrderKind::GradedLex, n);
        throw ParseError("unknown --order (expected grevlex or glex): " + order_name);
    }();
    std::vector<std::string> names =
        csc_shaped ? csc_var_names((n - 1) / 2) : plain_var_names(n);

    json inputs{{"matrix_rows", a.rows()}, {"matrix_cols", a.cols()},
                {"order", center_smallest ? "center-smallest revlex" : order_name}};
    if (!file.empty()) inputs["file"] = file;
    if (!family.empty()) inputs["family"] = family;
    json limits{{"spair_budget", budget}};

    GbLimits gl;
    gl.spair_budget = budget;
    try {
        GroebnerBasis gb = toric_ideal_gb(a, order, gl);
        auto init = initial_ideal(gb);
        json init_text = json::array();
        for (const auto& m : init) init_text.push_back(format_monomial(m.exponents, names));
        json results{{"basis", json_binomials(gb.elements, names)},
                     {"element_count", gb.elements.size()},
                     {"initial_ideal", std::move(init_text)},
                     {"squarefree", is_squarefree(init)},
                     {"partial", false}};
        return make_report("gb", std::move(inputs), std::move(results), std::move(limits));
    } catch (const GbBudgetError& e) {
        *exit_code = 3;
        json results{{"basis", json_binomials(e.partial, names)},
                     {"element_count", e.partial.size()},
                     {"partial", true},
                     {"error", json{{"kind", "ResourceLimit"}, {"message", e.what()}}}};
        return make_report("gb", std::move(inputs), std::move(results), std::move(limits));
    }
}

json cmd_graph_report(const std::string& file, const std::string& family, int size_limit) {
    Graph g = load_graph(file, family);
    json results;
    results["vertices"] = g.vertex_count();
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back(json::array({i, j}));
    results["edges"] = std::move(edges);
    bool connected = is_connected(g);
    results["connected"] = connected;
    auto parts = is_bipartite(g);
    if (parts) {
        results["bipartite"] = json{{"part1", parts->part1}, {"part2", parts->part2}};
        results["chordal_bipartite"] = is_chordal_bipartite(g, size_limit);
        results["star_condition"] = satisfies_star_condition(g, *parts);
    } else {
        results["bipartite"] = nullptr;
        results["chordal_bipartite"] = nullptr;
        results["star_condition"] = nullptr;
    }
    auto pair = find_disjoint_odd_cycles(g, size_limit);
    if (pair)
        results["disjoint_odd_cycles"] = json{{"cycle1", pair->cycle1}, {"cycle2", pair->cycle2}};
    else
        results["disjoint_odd_cycles"] = nullptr;
    if (connected) results["odd_cycle_pairs_bridged"] = disjoint_odd_cycles_bridged(g, size_limit);
    auto uni = is_unimodular(rho_config_for_unimodularity(g));
    results["rho_unimodular"] = json{{"flag", uni.unimodular}, {"delta", json_int(uni.delta)}};
    results["criteria_agree"] = (uni.unimodular == !pair.has_value());
    return make_report("graph-report",
                       json{{"file", file}, {"family", family}, {"size_limit", size_limit}},
                       std::move(results), json{{"size_limit", size_limit}});
}

Configuration config_from_cli(const std::string& file, const std::string& family, bool is_graph,
                              const std::string& kind_str, bool apply_csc, json* inputs) {
    if (is_graph || !family.empty()) {
        Graph g = load_graph(file, family);
        ConfigKind kind = parse_kind(kind_str);
        (*inputs)["kind"] = kind_name(kind);
        IntMatrix m = build_graph_matrix(g, kind);
        if (kind == ConfigKind::RhoCsc || kind == ConfigKind::MuCsc) {
            return CscMatrix{
                kind == ConfigKind::RhoCsc ? graph_config_rho(g) : graph_config_mu(g),
                m,
                {}}.as_configuration();
        }
        return make_configuration(m);
    }
    IntMatrix m = read_matrix_file(file);
    if (apply_csc) return central_symmetrize(m).as_configuration();
    return make_configuration(m);
}

json cmd_hilbert(const std::string& file, const std::string& family, bool is_graph,
                 const std::string& kind_str, bool apply_csc, int degree_cap,
                 std::size_t point_budget) {
    json inputs{{"file", file}, {"family", family}, {"csc", apply_csc}};
    Configuration c = config_from_cli(file, family, is_graph, kind_str, apply_csc, &inputs);
    HilbertLimits lim;
    lim.degree_cap = degree_cap;
    lim.point_budget = point_budget;
    HilbertData data = hilbert_h_vector(c, lim);
    json results{{"values", json_vector(data.values)},
                 {"krull_dim", data.krull_dim},
                 {"h_vector", json_vector(data.h_vector)},
                 {"stabilized", data.stabilized}};
    return make_report("hilbert", std::move(inputs), std::move(results),
                       json{{"degree_cap", degree_cap}, {"point_budget", point_budget}});
}

json cmd_normal(const std::string& file, const std::string& family, bool is_graph,
                const std::string& kind_str, bool apply_csc, int bound, std::size_t point_budget) {
    json inputs{{"file", file}, {"family", family}, {"csc", apply_csc}};
    Configuration c = config_from_cli(file, family, is_graph, kind_str, apply_csc, &inputs);
    SemigroupLimits lim;
    lim.point_budget = point_budget;
    int effective = bound > 0 ? bound : 2 * static_cast<int>(integer_rank(c.matrix));
    NormalityVerdict v = normality_check(c, effective, lim);
    json results{{"normal", v.normal}, {"bound", v.bound}};
    if (!v.normal) {
        results["witness"] = json_vector(v.witness);
        results["witness_degree"] = v.witness_degree;
    } else {
        results["witness"] = nullptr;
    }
    return make_report("normal", std::move(inputs), std::move(results),
                       json{{"bound", effective}, {"point_budget", point_budget}});
}

json cmd_fano(const std::string& file, bool raw) {
    IntMatrix a = read_matrix_file(file);
    IntMatrix m = raw ? a : central_symmetrize(a).matrix;
    std::vector<std::vector<Int>> pts;
    for (std::size_t j = 0; j < m.cols(); ++j) pts.push_back(m.column(j));
    PolytopeRep p = build_polytope(std::move(pts));
    FanoVerdict v = is_gorenstein_fano(p);
    std::string form = p.dim == p.map.ambient_dim()            ? "identity"
                       : p.map.basis.rows() == p.map.basis.cols() + 1 ? "drop-last"
                                                                      : "lattice-basis";
    json results{{"dim", p.dim},
                 {"ambient_dim", p.map.ambient_dim()},
                 {"points", p.points.size()},
                 {"vertex_count", p.vertex_indices().size()},
                 {"facet_count", p.facets.size()},
                 {"origin_interior", v.origin_interior},
                 {"gorenstein_fano", v.gorenstein_fano},
                 {"standard_form", form},
                 {"symmetrized_input", !raw}};
    return make_report("fano", json{{"matrix_file", file}, {"raw", raw}}, std::move(results),
                       json::object());
}

json cmd_theorem42(const std::string& file, const std::string& family) {
    Graph g = load_graph(file, family);
    auto parts = is_bipartite(g);
    if (!parts) throw NotBipartiteError();
    GroebnerBasis gb = theorem42_basis(g, *parts);
    auto fams = theorem42_family_binomials(g, *parts);
    auto names = graph_var_names(g, *parts);
    IntMatrix a = central_symmetrize(graph_config_mu(g)).matrix;
    bool ok = verify_reduced_gb(gb, a);
    json results{{"basis", json_binomials(gb.elements, names)},
                 {"element_count", gb.elements.size()},
                 {"raw_family_count", fams.size()},
                 {"verified", ok}};
    return make_report("theorem42", json{{"file", file}, {"family", family}}, std::move(results),
                       json::object());
}

json cmd_split_apex(const std::string& file, const std::string& family, int vertex) {
    Graph g = load_graph(file, family);
    Graph h = split_apex(g, vertex);
    json edges = json::array();
    for (auto [i, j] : h.edges()) edges.push_back(json::array({i, j}));
    json results{{"apex", vertex},
                 {"result_vertices", h.vertex_count()},
                 {"result_edges", std::move(edges)},
                 {"rho_matrix", json_matrix(graph_config_rho(h))},
                 {"bipartite", is_bipartite(h).has_value()}};
    return make_report("split-apex", json{{"file", file}, {"family", family}, {"vertex", vertex}},
                       std::move(results), json::object());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for centrally symmetric configurations of integer matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON report");

    std::string file, family, kind = "rho+-", order_name = "grevlex";
    bool as_graph = false, apply_csc = false, center_smallest = false, raw = false;
    int vertex = 0;

    std::size_t budget = env_or("CENSYM_BUDGET", 2000000);
    std::size_t point_budget = env_or("CENSYM_POINT_BUDGET", 5000000);
    int max_degree = env_or_int("CENSYM_MAX_DEGREE", 64);
    int bound = env_or_int("CENSYM_BOUND", 0);
    int size_limit = 16;

    auto* analyze = app.add_subcommand("analyze", "integer-linear report for a matrix file");
    analyze->add_option("file", file)->required();

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the toric ideal");
    gb->add_option("file", file);
    gb->add_flag("--graph", as_graph, "input is a graph file");
    gb->add_option("--family", family, "generate a named graph family, e.g. wheel:6");
    gb->add_option("--kind", kind, "graph configuration: rho, mu, rho+-, mu+-");
    gb->add_flag("--csc", apply_csc, "centrally symmetrize the matrix first");
    gb->add_option("--order", order_name, "grevlex (default) or glex");
    gb->add_flag("--center-smallest", center_smallest,
                 "revlex with the center (first) column smallest");
    gb->add_option("--budget", budget, "S-pair budget");

    auto* report = app.add_subcommand("graph-report", "all graph predicates as JSON");
    report->add_option("file", file);
    report->add_option("--family", family);
    report->add_option("--size-limit", size_limit);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and h-vector");
    hilbert->add_option("file", file);
    hilbert->add_option("--family", family);
    hilbert->add_flag("--graph", as_graph);
    hilbert->add_option("--kind", kind);
    hilbert->add_flag("--csc", apply_csc, "centrally symmetrize the matrix first");
    hilbert->add_option("--max-degree", max_degree, "hard degree cap");
    hilbert->add_option("--point-budget", point_budget);

    auto* normal = app.add_subcommand("normal", "graded normality check with witnesses");
    normal->add_option("file", file);
    normal->add_option("--family", family);
    normal->add_flag("--graph", as_graph);
    normal->add_option("--kind", kind);
    normal->add_flag("--csc", apply_csc, "centrally symmetrize the matrix first");
    normal->add_option("--bound", bound, "degree bound (default 2 * rank)");
    normal->add_option("--point-budget", point_budget);

    auto* fano = app.add_subcommand("fano", "Gorenstein-Fano verdict for Conv(A+-)");
    fano->add_option("file", file)->required();
    fano->add_flag("--raw", raw, "treat the columns as the point set directly");

    auto* t42 = app.add_subcommand("theorem42", "quadratic basis for chordal bipartite graphs");
    t42->add_option("file", file);
    t42->add_option("--family", family);

    auto* split = app.add_subcommand("split-apex", "split an apex vertex into a bipartite graph");
    split->add_option("file", file);
    split->add_option("--family", family);
    split->add_option("--vertex", vertex)->required();

    std::vector<std::string> argv_like = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("censym");
        for (const auto& a : argv_like) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    int exit_code = 0;
    try {
        json report_json;
        if (analyze->parsed())
            report_json = cmd_analyze(file);
        else if (gb->parsed())
            report_json = cmd_gb(file, as_graph, family, kind, apply_csc, order_name,
                                 center_smallest, budget, &exit_code);
        else if (report->parsed())
            report_json = cmd_graph_report(file, family, size_limit);
        else if (hilbert->parsed())
            report_json = cmd_hilbert(file, family, as_graph, kind, apply_csc, max_degree, point_budget);
        else if (normal->parsed())
            report_json = cmd_normal(file, family, as_graph, kind, apply_csc, bound, point_budget);
        else if (fano->parsed())
            report_json = cmd_fano(file, raw);
        else if (t42->parsed())
            report_json = cmd_theorem42(file, family);
        else if (split->parsed())
            report_json = cmd_split_apex(file, family, vertex);
        emit(out, std::move(report_json), pretty);
        return exit_code;
    } catch (const Error& e) {
        json failure{{"error",
                      json{{"kind", e.is_resource_limit() ? "ResourceLimit" : "Precondition"},
                           {"message", e.what()}}},
                     {"version", kVersion}};
        emit(out, std::move(failure), pretty);
        return e.is_resource_limit() ? 3 : 2;
    }
}

}  // namespace censym::cli

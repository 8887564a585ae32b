#include "cli.hpp"

#include "specgraph/canonical.hpp"
#include "specgraph/ds_verify.hpp"
#include "specgraph/formulas.hpp"
#include "specgraph/path_family.hpp"
#include "specgraph/roots.hpp"
#include "specgraph/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace specgraph::cli {
namespace {

constexpr int kSchemaVersion = 1;

struct GlobalOpts {
    std::string format = "json";
    int jobs = 1;
    int ceiling = kDefaultDsCeiling;
};

int env_ceiling_default() {
    if (const char* env = std::getenv("SPECTRAL_DS_CEILING")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw CLI::ValidationError("SPECTRAL_DS_CEILING is not an integer");
        }
    }
    return kDefaultDsCeiling;
}

void flatten(const Json& j, const std::string& path, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array()) {
        size_t i = 0;
        for (const auto& v : j) flatten(v, path + "[" + std::to_string(i++) + "]", out);
    } else {
        out << path << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Json& j, const GlobalOpts& g, std::ostream& out) {
    if (g.format == "csv") {
        flatten(j, "", out);
    } else if (g.format == "text") {
        out << j.dump(2) << "\n";
    } else {
        out << j.dump() << "\n";
    }
}

// shared graph-source options
struct GraphInput {
    std::vector<int> propeller;
    std::vector<int> infinity;
    int path = 0;
    int cycle = 0;
    std::string smith;
    std::string g6;
    std::string json_text;
    bool line = false;
    bool subdiv = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--propeller", propeller, "propeller parameters p,q,k")->delimiter(',')->expected(3);
        cmd->add_option("--infinity", infinity, "infinity-graph parameters p,q")->delimiter(',')->expected(2);
        cmd->add_option("--path", path, "path P_n");
        cmd->add_option("--cycle", cycle, "cycle C_n");
        cmd->add_option("--smith", smith, "Smith graph: W<k>, S1, S2, S3 or C<n>");
        cmd->add_option("--g6", g6, "graph6 string");
        cmd->add_option("--json", json_text, "graph as {\"n\":..,\"edges\":[[u,v],..]}");
        cmd->add_flag("--line-graph", line, "replace the graph by its line graph");
        cmd->add_flag("--subdivision", subdiv, "replace the graph by its subdivision");
    }

    Graph build() const {
        int sources = 0;
        Graph g;
        if (!propeller.empty()) {
            ++sources;
            g = make_propeller(PropellerParams(propeller[0], propeller[1], propeller[2]));
        }
        if (!infinity.empty()) {
            ++sources;
            g = make_infinity(infinity[0], infinity[1]);
        }
        if (path > 0) {
            ++sources;
            g = make_path(path);
        }
        if (cycle > 0) {
            ++sources;
            g = make_cycle(cycle);
        }
        if (!smith.empty()) {
            ++sources;
            if (smith == "S1") g = make_smith(SmithKind::s1());
            else if (smith == "S2") g = make_smith(SmithKind::s2());
            else if (smith == "S3") g = make_smith(SmithKind::s3());
            else if (smith.size() > 1 && (smith[0] == 'W' || smith[0] == 'C')) {
                int v = std::stoi(smith.substr(1));
                g = make_smith(smith[0] == 'W' ? SmithKind::w(v) : SmithKind::cycle(v));
            } else {
                throw CLI::ValidationError("unknown Smith graph: " + smith);
            }
        }
        if (!g6.empty()) {
            ++sources;
            g = from_graph6(g6);
        }
        if (!json_text.empty()) {
            ++sources;
            g = graph_from_json(Json::parse(json_text));
        }
        if (sources != 1)
            throw CLI::ValidationError("exactly one graph source is required "
                                       "(--propeller/--infinity/--path/--cycle/--smith/--g6/--json)");
        if (line) g = line_graph(g);
        if (subdiv) g = subdivision(g);
        return g;
    }
};

Json graph_payload(const Graph& g) {
    Json j = graph_to_json(g);
    j["m"] = g.size();
    j["graph6"] = to_graph6(g);
    j["degree_sequence"] = degree_sequence(g);
    return j;
}

int cmd_gen(const GraphInput& in, const GlobalOpts& opts, std::ostream& out) {
    Graph g = in.build();
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["graph"] = graph_payload(g);
    emit(j, opts, out);
    return 0;
}

int cmd_charpoly(const GraphInput& in, const std::string& kind_s, const GlobalOpts& opts,
                 std::ostream& out) {
    Graph g = in.build();
    MatrixKind kind = matrix_kind_from_string(kind_s);
    IntPoly p = charpoly(g, kind);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = to_string(kind);
    j["n"] = g.order();
    j["coefficients"] = poly_to_json(p);
    j["display"] = p.to_string();
    emit(j, opts, out);
    return 0;
}

int cmd_invariants(const GraphInput& in, const GlobalOpts& opts, std::ostream& out) {
    Graph g = in.build();
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["graph"] = graph_payload(g);
    j["structure"] = structure_to_json(structure_summary(g));
    j["spanning_trees"] = spanning_tree_count(g).get_str();
    Json spectral;
    for (MatrixKind kind : {MatrixKind::A, MatrixKind::L, MatrixKind::Q})
        spectral[to_string(kind)] = summary_to_json(summarize(g, kind));
    j["spectral"] = spectral;
    j["lambda2_below_2"] = lambda2_below_2(g);
    emit(j, opts, out);
    return 0;
}

int cmd_identities(const std::string& suite, int pmax, int kmax, int nmax, const GlobalOpts& opts,
                   std::ostream& out) {
    std::vector<IdentityReport> reports;
    auto add_prop_suite = [&](const std::string& which) {
        for (int p = 3; p <= pmax; ++p)
            for (int q = 3; q <= p; ++q)
                for (int k = 1; k <= kmax; ++k) {
                    PropellerParams params(p, q, k);
                    reports.push_back(which == "fL" ? verify_fL_identity(params)
                                                    : verify_fA_identity(params));
                }
    };
    auto add_laurent = [&] {
        for (const char* which : {"path_L", "B", "U", "path_A"})
            for (int n = 1; n <= nmax; ++n) reports.push_back(verify_path_laurent_identity(which, n));
    };
    auto add_paths = [&] {
        // recurrence-built family against the determinant route
        for (int n = 0; n <= nmax; ++n) {
            auto fam = path_family(n);
            IntPoly det_p = n == 0 ? IntPoly::zero() : charpoly(make_path(n), MatrixKind::L);
            IntPoly det_b = principal_minor_charpoly(make_path(n + 1), MatrixKind::L, {n});
            IntPoly det_u = principal_minor_charpoly(make_path(n + 2), MatrixKind::L, {0, n + 1});
            auto rep = [&](const std::string& name, const IntPoly& lhs, const IntPoly& rhs) {
                reports.push_back(make_identity_report(name, {n}, LaurentPoly::from_int_poly(lhs),
                                                       LaurentPoly::from_int_poly(rhs)));
            };
            rep("path_recurrence_P", fam.phi_path, det_p);
            rep("path_recurrence_B", fam.phi_b, det_b);
            rep("path_recurrence_U", fam.phi_u, det_u);
            if (n >= 3) rep("path_recurrence_C", *fam.phi_cycle, charpoly(make_cycle(n), MatrixKind::L));
            if (n >= 1) {
                auto vals = eval4_family(n);
                const BigRat four(4);
                bool ok = BigRat(vals[0]) == fam.phi_path.eval(four) &&
                          BigRat(vals[1]) == fam.phi_b.eval(four) &&
                          BigRat(vals[2]) == fam.phi_u.eval(four) &&
                          (n < 3 || BigRat(vals[3]) == fam.phi_cycle->eval(four));
                IdentityReport r;
                r.identity = "eval4";
                r.params = {n};
                r.equal = ok;
                reports.push_back(std::move(r));
            }
        }
    };
    auto add_eval = [&] {
        for (int p = 3; p <= pmax; ++p)
            for (int q = 3; q <= p; ++q) {
                Graph inf = make_infinity(p, q);
                bool inf_ok = BigRat(infinity_l_at4(p, q)) ==
                              eval_at(charpoly(inf, MatrixKind::L), BigRat(4));
                IdentityReport r;
                r.identity = "infinity_L_at_4";
                r.params = {p, q};
                r.equal = inf_ok;
                reports.push_back(std::move(r));
                for (int k = 1; k <= kmax; ++k) {
                    PropellerParams params(p, q, k);
                    Graph g = make_propeller(params);
                    IdentityReport rl;
                    rl.identity = "propeller_L_at_4";
                    rl.params = {p, q, k};
                    rl.equal = BigRat(propeller_l_at4(params)) ==
                               eval_at(charpoly(g, MatrixKind::L), BigRat(4));
                    reports.push_back(std::move(rl));
                    IdentityReport ra;
                    ra.identity = "propeller_A_at_2";
                    ra.params = {p, q, k};
                    ra.equal = BigRat(propeller_a_at2(params)) ==
                               eval_at(charpoly(g, MatrixKind::A), BigRat(2));
                    reports.push_back(std::move(ra));
                }
            }
    };

    if (suite == "fL" || suite == "all") add_prop_suite("fL");
    if (suite == "fA" || suite == "all") add_prop_suite("fA");
    if (suite == "laurent" || suite == "all") add_laurent();
    if (suite == "paths" || suite == "all") add_paths();
    if (suite == "eval" || suite == "all") add_eval();
    if (reports.empty()) throw CLI::ValidationError("unknown suite: " + suite);

    bool all_equal = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
        arr.push_back(identity_report_to_json(r));
        all_equal = all_equal && r.equal;
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = suite;
    j["count"] = reports.size();
    j["all_equal"] = all_equal;
    j["reports"] = arr;
    emit(j, opts, out);
    return all_equal ? 0 : 1;
}

int cmd_degseq(int n, const std::string& kind_s, const GlobalOpts& opts, std::ostream& out) {
    auto sol = candidate_degree_sequences(propeller_base_sequence(n), matrix_kind_from_string(kind_s));
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["solution"] = degseq_solution_to_json(sol);
    emit(j, opts, out);
    return 0;
}

int cmd_mates(const GraphInput& in, const std::string& kind_s, const GlobalOpts& opts,
              std::ostream& out) {
    Graph g = in.build();
    MateSearchOptions m;
    m.ceiling = opts.ceiling;
    m.jobs = opts.jobs;
    auto mates = mate_search(g, matrix_kind_from_string(kind_s), m);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind_s;
    j["graph6"] = to_graph6(g);
    Json arr = Json::array();
    for (const auto& h : mates) arr.push_back(to_graph6(h));
    j["mates"] = arr;
    j["count"] = mates.size();
    emit(j, opts, out);
    return 0;
}

int cmd_ds_verify(int p, int q, int k, const std::string& kind_s, const GlobalOpts& opts,
                  std::ostream& out) {
    MateSearchOptions m;
    m.ceiling = opts.ceiling;
    m.jobs = opts.jobs;
    auto report = ds_verify(PropellerParams(p, q, k), matrix_kind_from_string(kind_s), m);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["report"] = ds_report_to_json(report);
    emit(j, opts, out);
    return report.verdict == "DS-at-this-order" ? 0 : 1;
}

int cmd_smith(int nmax, const GlobalOpts& opts, std::ostream& out) {
    MateSearchOptions m;
    m.ceiling = std::max(opts.ceiling, nmax); // nmax is the explicit request
    m.jobs = opts.jobs;
    auto graphs = smith_census(nmax, m);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n_max"] = nmax;
    Json arr = Json::array();
    for (const auto& g : graphs) {
        Json e;
        e["n"] = g.order();
        e["graph6"] = to_graph6(g);
        e["degree_sequence"] = degree_sequence(g);
        arr.push_back(std::move(e));
    }
    j["graphs"] = arr;
    j["count"] = graphs.size();
    emit(j, opts, out);
    return 0;
}

int cmd_pairwise(int n, const std::string& kind_s, const GlobalOpts& opts, std::ostream& out) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = n;
    bool all = true;
    Json per = Json::object();
    std::vector<MatrixKind> kinds;
    if (kind_s == "all")
        kinds = {MatrixKind::A, MatrixKind::L, MatrixKind::Q};
    else
        kinds = {matrix_kind_from_string(kind_s)};
    for (MatrixKind kind : kinds) {
        bool d = propeller_pairwise_distinct(n, kind);
        per[to_string(kind)] = d;
        all = all && d;
    }
    j["distinct"] = per;
    j["all_distinct"] = all;
    Json props = Json::array();
    for (const auto& params : propellers_of_order(n))
        props.push_back(Json::array({params.p, params.q, params.k}));
    j["propellers"] = props;
    emit(j, opts, out);
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spectral toolkit for propeller graphs"};
    app.require_subcommand(1);

    GlobalOpts opts;
    opts.ceiling = kDefaultDsCeiling; // resolved against the env var below
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", opts.jobs, "worker threads for searches")->capture_default_str();
    std::optional<int> ceiling_flag;
    app.add_option("--ceiling", ceiling_flag, "enumeration ceiling (default: SPECTRAL_DS_CEILING or 9)");

    GraphInput gen_in, poly_in, inv_in, mates_in;
    std::string poly_kind = "L", mates_kind = "L", degseq_kind = "L", ds_kind = "L", pw_kind = "all";
    std::string suite = "all";
    int pmax = 6, kmax = 4, nmax_ident = 12, degseq_n = 12, smith_nmax = 9, pw_n = 8;
    int ds_p = 3, ds_q = 3, ds_k = 1;

    auto* gen = app.add_subcommand("gen", "construct a graph and print it");
    gen_in.attach(gen);

    auto* cp = app.add_subcommand("charpoly", "exact characteristic polynomial");
    poly_in.attach(cp);
    cp->add_option("--kind", poly_kind, "matrix kind A|L|Q")->capture_default_str();

    auto* inv = app.add_subcommand("invariants", "structural and spectral invariants");
    inv_in.attach(inv);

    auto* ident = app.add_subcommand("identities", "verify formula suites");
    ident->add_option("--suite", suite, "fL|fA|laurent|paths|eval|all")->capture_default_str();
    ident->add_option("--pmax", pmax, "largest cycle length")->capture_default_str();
    ident->add_option("--kmax", kmax, "largest path length")->capture_default_str();
    ident->add_option("--nmax", nmax_ident, "largest path index")->capture_default_str();

    auto* dg = app.add_subcommand("degseq", "cospectral degree-sequence candidates");
    dg->add_option("--n", degseq_n, "graph order (>= 12)")->required();
    dg->add_option("--kind", degseq_kind, "L|Q")->capture_default_str();

    auto* mt = app.add_subcommand("mates", "exhaustive cospectral-mate search");
    mates_in.attach(mt);
    mt->add_option("--kind", mates_kind, "matrix kind A|L|Q")->capture_default_str();

    auto* dsv = app.add_subcommand("ds-verify", "DS verification pipeline for one propeller");
    dsv->add_option("--p", ds_p)->required();
    dsv->add_option("--q", ds_q)->required();
    dsv->add_option("--k", ds_k)->required();
    dsv->add_option("--kind", ds_kind, "L|Q")->capture_default_str();

    auto* sm = app.add_subcommand("smith-census", "connected graphs with lambda_1 = 2");
    sm->add_option("--nmax", smith_nmax, "largest order")->capture_default_str();

    auto* pw = app.add_subcommand("pairwise-distinct", "propellers of one order, pairwise distinct spectra");
    pw->add_option("--n", pw_n, "propeller order")->required();
    pw->add_option("--kind", pw_kind, "A|L|Q|all")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
        opts.ceiling = ceiling_flag ? *ceiling_flag : env_ceiling_default();
        if (gen->parsed()) return cmd_gen(gen_in, opts, out);
        if (cp->parsed()) return cmd_charpoly(poly_in, poly_kind, opts, out);
        if (inv->parsed()) return cmd_invariants(inv_in, opts, out);
        if (ident->parsed()) return cmd_identities(suite, pmax, kmax, nmax_ident, opts, out);
        if (dg->parsed()) return cmd_degseq(degseq_n, degseq_kind, opts, out);
        if (mt->parsed()) return cmd_mates(mates_in, mates_kind, opts, out);
        if (dsv->parsed()) return cmd_ds_verify(ds_p, ds_q, ds_k, ds_kind, opts, out);
        if (sm->parsed()) return cmd_smith(smith_nmax, opts, out);
        if (pw->parsed()) return cmd_pairwise(pw_n, pw_kind, opts, out);
        err << "no subcommand\n" << app.help();
        return 2;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    } catch (const resource_error& e) {
        err << "resource ceiling: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace specgraph::cli

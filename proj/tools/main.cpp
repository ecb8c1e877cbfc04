// Command-line front end: complex statistics, centrality reports, SI
// simulation, pattern mining, and built-in fixture reproduction.
//
// Exit codes: 0 success, 1 usage/config, 2 data/parse, 3 numerical
// non-convergence.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplicial/adjacency.hpp"
#include "simplicial/centrality.hpp"
#include "simplicial/construct.hpp"
#include "simplicial/epidemic.hpp"
#include "simplicial/errors.hpp"
#include "simplicial/io.hpp"
#include "simplicial/mining.hpp"
#include "simplicial/reproduce.hpp"

namespace {

using namespace simplicial;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

struct InputConfig {
    std::string edges_path;
    std::string points_path;
    std::string exchange_path;
    std::string metric = "d1";
    double radius = 0.0;
    long long max_dim = -1;
};

void add_input_flags(CLI::App* cmd, InputConfig& cfg) {
    cmd->add_option("--edges", cfg.edges_path, "edge-list file, one 'u,v' per line");
    cmd->add_option("--points", cfg.points_path, "point-cloud CSV 'id,x1,...,xn'");
    cmd->add_option("--exchange", cfg.exchange_path, "exchange-data CSV 'u,v,size' (metrics d4/d5)");
    cmd->add_option("--metric", cfg.metric, "metric d1|d2|d3|d4|d5 (default d1)");
    cmd->add_option("--radius", cfg.radius, "Vietoris-Rips radius r > 0");
    cmd->add_option("--max-dim", cfg.max_dim, "cap the complex dimension");
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return in;
}

Graph load_graph(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_edge_list(in, path);
}

SimplicialComplex load_complex(const InputConfig& cfg) {
    const auto max_dim = cfg.max_dim >= 0
                             ? std::optional<std::size_t>(static_cast<std::size_t>(cfg.max_dim))
                             : std::nullopt;
    if (!cfg.edges_path.empty()) {
        return build_clique_complex(load_graph(cfg.edges_path), max_dim);
    }
    if (cfg.points_path.empty()) {
        throw std::invalid_argument("either --edges or --points is required");
    }
    auto in = open_or_throw(cfg.points_path);
    PointCloud pc = parse_point_cloud(in, cfg.points_path);
    if (!cfg.exchange_path.empty()) {
        auto ex = open_or_throw(cfg.exchange_path);
        parse_exchange_data(ex, pc, cfg.exchange_path);
    }
    const auto metric = parse_metric(cfg.metric);
    if (!metric) throw std::invalid_argument("unknown metric '" + cfg.metric + "'");
    if (cfg.radius <= 0.0) throw std::invalid_argument("--radius must be positive");
    return build_vietoris_rips(pc, *metric, cfg.radius, max_dim);
}

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file " + path);
    return file;
}

Simplex parse_simplex_arg(const std::string& text) {
    std::vector<VertexId> ids;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        ids.push_back(detail::parse_vertex(detail::trim(field), "<simplex>", 0));
    }
    return Simplex(std::move(ids));
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int cmd_complex(const InputConfig& input) {
    const auto complex = load_complex(input);
    std::cout << "dim " << complex.dim() << "; f-vector (";
    const auto fv = complex.f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i) {
        if (i > 0) std::cout << ", ";
        std::cout << fv[i];
    }
    std::cout << "); facets " << complex.facets().size() << "\n";
    return 0;
}

struct CentralityConfig {
    std::vector<std::string> measures;
    std::vector<std::size_t> ps;
    std::string variant = "reciprocal";
    std::string format = "csv";
    std::string out_path;
    bool table_mode = false;
    double tolerance = 1e-10;
    std::size_t max_iterations = 10000;
};

int cmd_centrality(const InputConfig& input, const CentralityConfig& cfg) {
    const bool harmonic = cfg.variant == "harmonic";
    if (!harmonic && cfg.variant != "reciprocal") {
        throw std::invalid_argument("--closeness-variant must be reciprocal or harmonic");
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw std::invalid_argument("--format must be csv or json");
    }

    // Validate every measure/p combination before computing anything; the
    // dim-dependent part runs right after the complex is built, still ahead
    // of any output.
    static const std::vector<std::string> known = {
        "degree",        "degree-pp",     "degree-pp-strict", "max-degree",
        "closeness",     "max-closeness", "eigenvector",      "max-eigenvector"};
    std::vector<std::string> problems;
    for (const auto& m : cfg.measures) {
        if (std::find(known.begin(), known.end(), m) == known.end()) {
            problems.push_back("unknown measure '" + m + "'");
        }
    }
    for (std::size_t p : cfg.ps) {
        if (p < 1) problems.push_back("p must be >= 1");
    }
    if (!problems.empty()) {
        for (const auto& p : problems) std::cerr << "error: " << p << "\n";
        return kExitUsage;
    }

    const auto complex = load_complex(input);
    const int dim = complex.dim();

    std::vector<std::size_t> ps = cfg.ps;
    if (ps.empty()) {
        for (int p = 1; p <= dim; ++p) ps.push_back(static_cast<std::size_t>(p));
    }

    for (const auto& m : cfg.measures) {
        if (m != "degree") continue;
        for (std::size_t p : ps) {
            if (static_cast<int>(p) > dim) {
                problems.push_back("degree: p=" + std::to_string(p) + " exceeds dim " +
                                   std::to_string(dim));
            }
        }
    }
    if (!problems.empty()) {
        for (const auto& p : problems) std::cerr << "error: " << p << "\n";
        return kExitUsage;
    }

    const auto variant =
        harmonic ? ClosenessVariant::harmonic : ClosenessVariant::reciprocal_of_sum;
    std::vector<CentralityReport> reports;
    auto base_report = [&](const std::string& measure, std::optional<std::size_t> p) {
        CentralityReport r;
        r.measure = measure;
        r.p = p;
        r.order = complex.vertices();
        r.meta.complex_dim = dim;
        return r;
    };

    for (const auto& m : cfg.measures) {
        if (m == "degree" || m == "degree-pp" || m == "degree-pp-strict") {
            for (std::size_t p : ps) {
                auto r = base_report(m, p);
                if (m == "degree-pp-strict") r.meta.variant = "strict";
                for (VertexId v : r.order) {
                    const auto value = m == "degree"
                                           ? degree_centrality_p(complex, v, p)
                                           : degree_centrality_pp(complex, v, p,
                                                                  m == "degree-pp-strict");
                    r.values.push_back(static_cast<double>(value));
                }
                reports.push_back(std::move(r));
            }
        } else if (m == "max-degree") {
            auto r = base_report(m, std::nullopt);
            for (VertexId v : r.order) {
                r.values.push_back(
                    static_cast<double>(max_simplicial_degree_centrality(complex, v)));
            }
            reports.push_back(std::move(r));
        } else if (m == "closeness") {
            for (std::size_t p : ps) {
                auto r = base_report(m, p);
                r.meta.variant = harmonic ? "harmonic" : "reciprocal";
                for (VertexId v : r.order) {
                    r.values.push_back(closeness_centrality_p(complex, v, p, variant));
                }
                reports.push_back(std::move(r));
            }
        } else if (m == "max-closeness") {
            auto r = base_report(m, std::nullopt);
            r.meta.variant = harmonic ? "harmonic" : "reciprocal";
            for (VertexId v : r.order) {
                r.values.push_back(max_closeness_centrality(complex, v, variant));
            }
            reports.push_back(std::move(r));
        } else if (m == "eigenvector") {
            for (std::size_t p : ps) {
                auto r = base_report(m, p);
                if (static_cast<int>(p) > dim) {
                    r.values.assign(r.order.size(), 0.0);
                    r.meta.all_zero = true;
                } else {
                    const auto e =
                        eigenvector_centrality_p(complex, p, cfg.tolerance, cfg.max_iterations);
                    r.values = e.values;
                    r.meta.eigenvalues = e.eigenvalues;
                    r.meta.iterations = e.iterations;
                    r.meta.all_zero = e.all_zero;
                    r.meta.cross_component_scale = e.eigenvalues.size() > 1;
                }
                reports.push_back(std::move(r));
            }
        } else if (m == "max-eigenvector") {
            auto r = base_report(m, std::nullopt);
            for (VertexId v : r.order) {
                r.values.push_back(
                    max_eigenvector_centrality(complex, v, cfg.tolerance, cfg.max_iterations));
            }
            reports.push_back(std::move(r));
        }
    }

    std::ofstream file;
    std::ostream& out = output_stream(cfg.out_path, file);
    if (cfg.format == "json") {
        out << centrality_to_json(reports).dump(2) << "\n";
    } else {
        write_centrality_csv(out, reports, cfg.table_mode);
    }
    return 0;
}

struct SiConfig {
    std::string edges_path;
    std::size_t g0 = 0;
    double probability = 0.0;
    double rate = -1.0;
    std::size_t steps = 1;
    std::uint64_t seed = 0;
    std::string rounding = "round";
    std::string out_path;
};

int cmd_si(const SiConfig& cfg) {
    const Graph g = load_graph(cfg.edges_path);
    SIParams params;
    params.total = g.vertex_count();
    params.initial_infected = cfg.g0;
    params.contact_probability = cfg.probability;
    if (cfg.rate > 0.0) {
        params.rate_override = cfg.rate;
    } else {
        params.contact_number = mean_contact_number(g);
    }
    const auto rounding = parse_rounding(cfg.rounding);
    if (!rounding) throw std::invalid_argument("--rounding must be floor, round, or ceil");
    params.rounding = *rounding;
    params.validate();

    const auto trajectory = run(g, params, cfg.steps, cfg.seed);
    std::ofstream file;
    std::ostream& out = output_stream(cfg.out_path, file);
    write_si_trajectory(out, trajectory, params);
    return 0;
}

struct MineConfig {
    std::string features_path;
    std::string target_path;
    std::string target_name = "target";
    std::string patterns_path;
    std::string scan_feature;
    std::string scan_op = "<";
    double exponent = 0.0;
    std::string out_path;
};

int cmd_mine(const MineConfig& cfg) {
    auto fin = open_or_throw(cfg.features_path);
    const FeatureTable tbl = parse_feature_table(fin, cfg.features_path);
    auto tin = open_or_throw(cfg.target_path);
    const Target target = parse_target(tin, cfg.target_name, cfg.target_path);
    for (const auto& id : tbl.individuals()) target(id);  // all labels present

    const QualitySpec spec{cfg.exponent};
    std::ofstream file;
    std::ostream& out = output_stream(cfg.out_path, file);

    if (!cfg.scan_feature.empty()) {
        const auto op = parse_op(cfg.scan_op);
        if (!op) throw std::invalid_argument("--op must be one of <, <=, >, >=");
        const auto result = scan_thresholds(tbl, cfg.scan_feature, *op, target, spec);
        out << "feature,op,threshold,quality,support,degenerate\n";
        out << cfg.scan_feature << ',' << op_name(*op) << ',' << format_value(result.threshold)
            << ',' << format_value(result.quality) << ',' << result.support << ','
            << (result.degenerate ? 1 : 0) << '\n';
        return 0;
    }

    if (cfg.patterns_path.empty()) {
        throw std::invalid_argument("either --patterns or --scan is required");
    }
    auto pin = open_or_throw(cfg.patterns_path);
    const auto patterns = parse_patterns_json(pin, cfg.patterns_path);
    const auto rows = evaluate_pattern_set(tbl, patterns, {target}, spec);
    write_mining_csv(out, rows);
    return 0;
}

int cmd_reproduce(const std::string& fixture, const std::string& edges_path) {
    std::optional<Graph> edges;
    if (!edges_path.empty()) edges = load_graph(edges_path);

    std::vector<std::string> names;
    if (fixture == "all") {
        names = fixture_names();
    } else {
        names.push_back(fixture);
    }

    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& name : names) {
        const auto results = run_fixture(name, edges);
        std::cout << "fixture " << name << "\n";
        for (const auto& r : results) {
            const char* tag = r.status == CheckStatus::pass   ? "[ ok ]"
                              : r.status == CheckStatus::skipped ? "[skip]"
                                                                 : "[FAIL]";
            std::cout << "  " << tag << " " << r.name;
            if (!r.detail.empty()) std::cout << " -- " << r.detail;
            std::cout << "\n";
            if (r.status == CheckStatus::pass) ++passed;
            if (r.status == CheckStatus::fail) ++failed;
            if (r.status == CheckStatus::skipped) ++skipped;
        }
    }
    std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? 0 : 1;
}

struct DebugConfig {
    std::string sigma;
    std::string tau;
    long long p = -1;
};

int cmd_debug(const InputConfig& input, const DebugConfig& cfg) {
    const auto complex = load_complex(input);
    const Simplex a = parse_simplex_arg(cfg.sigma);
    const Simplex b = parse_simplex_arg(cfg.tau);
    const int dim = complex.dim();

    auto show = [&](std::size_t p) {
        std::cout << "p=" << p;
        if (static_cast<int>(p) >= 1 && static_cast<int>(p) <= dim) {
            std::cout << " upper=" << upper_adjacent(complex, a, b, p)
                      << " strict-upper=" << strictly_upper_adjacent(complex, a, b, p);
        }
        if (static_cast<int>(p) <= dim - 1) {
            std::cout << " lower=" << lower_adjacent(complex, a, b, p)
                      << " strict-lower=" << strictly_lower_adjacent(complex, a, b, p)
                      << " adjacent=" << p_adjacent(complex, a, b, p)
                      << " maximal-adjacent=" << maximal_p_adjacent(complex, a, b, p);
        }
        std::cout << "\n";
    };

    std::cout << "sigma=" << a.to_string() << " tau=" << b.to_string() << " dim=" << dim << "\n";
    if (cfg.p >= 0) {
        show(static_cast<std::size_t>(cfg.p));
    } else {
        for (int p = 0; p <= dim; ++p) show(static_cast<std::size_t>(p));
    }
    std::cout << "deg_star(sigma)=" << deg_star(complex, a)
              << " deg_upper_max(sigma)=" << deg_upper_max(complex, a) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicial: complexes, higher-order centralities, SI labeling, pattern mining"};
    app.require_subcommand(1);

    InputConfig complex_input;
    auto* s_complex = app.add_subcommand("complex", "build a complex and print its statistics");
    add_input_flags(s_complex, complex_input);

    InputConfig centrality_input;
    CentralityConfig centrality_cfg;
    auto* s_centrality = app.add_subcommand("centrality", "per-vertex centrality reports");
    add_input_flags(s_centrality, centrality_input);
    s_centrality
        ->add_option("--measure", centrality_cfg.measures,
                     "degree|degree-pp|degree-pp-strict|max-degree|closeness|max-closeness|"
                     "eigenvector|max-eigenvector")
        ->required()
        ->delimiter(',');
    s_centrality->add_option("--p", centrality_cfg.ps, "p values (default 1..dim)")->delimiter(',');
    s_centrality->add_option("--closeness-variant", centrality_cfg.variant,
                             "reciprocal (default) or harmonic");
    s_centrality->add_option("--format", centrality_cfg.format, "csv (default) or json");
    s_centrality->add_option("--out", centrality_cfg.out_path, "output file (default stdout)");
    s_centrality->add_flag("--table", centrality_cfg.table_mode, "round values to 3 decimals");
    s_centrality->add_option("--tolerance", centrality_cfg.tolerance, "power-iteration tolerance");
    s_centrality->add_option("--max-iterations", centrality_cfg.max_iterations,
                             "power-iteration cap");

    SiConfig si_cfg;
    auto* s_si = app.add_subcommand("si", "susceptible-infectious spreading simulation");
    s_si->add_option("--edges", si_cfg.edges_path, "edge-list file")->required();
    s_si->add_option("--g0", si_cfg.g0, "initial infectious count")->required();
    s_si->add_option("--p", si_cfg.probability, "per-contact infection probability")->required();
    s_si->add_option("--r", si_cfg.rate, "explicit rate override (default P*lambda/N)");
    s_si->add_option("--steps", si_cfg.steps, "number of spreading steps (default 1)");
    s_si->add_option("--seed", si_cfg.seed, "random seed")->required();
    s_si->add_option("--rounding", si_cfg.rounding, "floor|round|ceil (default round)");
    s_si->add_option("--out", si_cfg.out_path, "output file (default stdout)");

    MineConfig mine_cfg;
    auto* s_mine = app.add_subcommand("mine", "evaluate or scan threshold patterns");
    s_mine->add_option("--features", mine_cfg.features_path, "feature-table CSV")->required();
    s_mine->add_option("--target", mine_cfg.target_path, "target CSV 'individual,label'")
        ->required();
    s_mine->add_option("--target-name", mine_cfg.target_name, "name for the target column");
    s_mine->add_option("--patterns", mine_cfg.patterns_path, "pattern-spec JSON file");
    s_mine->add_option("--scan", mine_cfg.scan_feature, "scan thresholds over one feature");
    s_mine->add_option("--op", mine_cfg.scan_op, "scan operator <, <=, >, >= (default <)");
    s_mine->add_option("--a", mine_cfg.exponent, "quality exponent a (default 0)");
    s_mine->add_option("--out", mine_cfg.out_path, "output file (default stdout)");

    std::string fixture_name;
    std::string fixture_edges;
    auto* s_reproduce = app.add_subcommand("reproduce", "run the built-in reference fixtures");
    s_reproduce->add_option("fixture", fixture_name, "fixture name or 'all'")->required();
    s_reproduce->add_option("--edges", fixture_edges,
                            "optional interaction-network edge list for congress-tables");

    InputConfig debug_input;
    DebugConfig debug_cfg;
    auto* s_debug = app.add_subcommand("debug", "adjacency relations between two simplices");
    add_input_flags(s_debug, debug_input);
    s_debug->add_option("--sigma", debug_cfg.sigma, "first simplex, e.g. 1,2,3")->required();
    s_debug->add_option("--tau", debug_cfg.tau, "second simplex")->required();
    s_debug->add_option("--p", debug_cfg.p, "single p (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (s_complex->parsed()) return cmd_complex(complex_input);
        if (s_centrality->parsed()) return cmd_centrality(centrality_input, centrality_cfg);
        if (s_si->parsed()) return cmd_si(si_cfg);
        if (s_mine->parsed()) return cmd_mine(mine_cfg);
        if (s_reproduce->parsed()) return cmd_reproduce(fixture_name, fixture_edges);
        if (s_debug->parsed()) return cmd_debug(debug_input, debug_cfg);
    } catch (const simplicial::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}

// sigmacol: Σ-coloring of graphs with neighborhood systems.
//
// Machine-readable JSON goes to stdout; diagnostics go to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 size-cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigmacol/sigmacol.hpp"
#include "sigmacol/verify.hpp"

using json = nlohmann::ordered_json;
using namespace sigmacol;

namespace {

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file: " + path);
    return parse_graph(in);
}

NeighborhoodSystem load_sigma(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open sigma file: " + path);
    SigmaFile file = parse_sigma(in, g.vertex_count());
    return NeighborhoodSystem::validated(g, file.sets, file.depth);
}

std::vector<int> load_vertex_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open vertex list file: " + path);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::getline(in, tok);
            continue;
        }
        out.push_back(std::stoi(tok));
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json coloring_json(const Graph& g, const NeighborhoodSystem& s, const Coloring& c,
                   bool also_proper, const std::string& bound_used, double wall_ms) {
    bool valid = is_sigma_valid(g, s, c); // always recomputed, never trusted
    if (also_proper) valid = valid && is_proper(g, c);
    json j;
    j["palette_size"] = c.palette_size();
    j["colors"] = c.values();
    j["valid"] = valid;
    j["bound_used"] = bound_used;
    j["wall_time_ms"] = wall_ms;
    return j;
}

json report_json(const SuiteReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json e;
        e["name"] = c.name;
        e["instance"] = c.instance;
        e["values"] = c.values;
        e["pass"] = c.pass;
        checks.push_back(e);
    }
    json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["count"] = report.count;
    j["checks"] = checks;
    j["failures"] = report.failures();
    j["pass"] = report.all_pass();
    return j;
}

struct Args {
    std::string graph_path, sigma_path, out_path, ordering_path, lists_path, clique_path,
        pattern_path;
    std::string strategy = "greedy";
    std::string family = "random";
    std::string suite = "chain";
    int n = 0;
    int target = 0;
    int palette = 0;
    int cap = 0;
    int depth = 1;
    int subdivisions = 1;
    int rho_cap = 2;
    int count = 100;
    double edge_prob = 0.3;
    std::uint64_t seed = 1;
    bool exact = false;
    bool also_proper = false;
};

int cmd_build_sigma_graph(const Args& a) {
    Graph g = load_graph(a.graph_path);
    NeighborhoodSystem s = load_sigma(a.sigma_path, g);
    SigmaGraphData data = build_sigma_graph_data(g, s);
    if (!a.out_path.empty()) {
        std::ofstream out(a.out_path);
        write_graph(out, data.graph);
    }
    json j;
    j["rho"] = s.rho();
    j["depth"] = s.depth();
    j["sigma_graph_edges"] = data.graph.edge_count();
    j["vertices"] = g.vertex_count();
    if (!a.out_path.empty()) j["out"] = a.out_path;
    emit(j);
    return 0;
}

int cmd_color(const Args& a) {
    Graph g = load_graph(a.graph_path);
    NeighborhoodSystem s = load_sigma(a.sigma_path, g);
    auto t0 = std::chrono::steady_clock::now();
    Coloring result{std::vector<int>(g.vertex_count(), 0)};
    std::string bound_used;
    if (a.strategy == "greedy") {
        result = sigma_color_greedy(g, s, a.also_proper);
        Graph gs = build_sigma_graph(g, s);
        bound_used = "degeneracy(G_sigma)+1 = " +
                     std::to_string(degeneracy_ordering(gs).degeneracy + 1) +
                     " <= floor(mad)+1 = " + std::to_string(mad_exact(gs).floor() + 1);
    } else if (a.strategy == "star-pipeline") {
        int star_cap = a.cap > 0 ? a.cap : kDefaultStarCap;
        Coloring c1{std::vector<int>{}};
        if (g.vertex_count() <= star_cap) {
            auto star = star_chromatic_exact(g, star_cap);
            c1 = star.coloring;
            bound_used = "chi_s(G)^2*rho = " +
                         std::to_string(static_cast<long long>(star.chi) * star.chi *
                                        std::max(1, s.rho()));
        } else {
            auto cert = arrangeability_of_ordering(g, heuristic_ordering(g));
            c1 = greedy_star_coloring(g, cert.ordering);
            bound_used = "k^2*rho (greedy star, k = " + std::to_string(c1.palette_size()) + ")";
        }
        result = sigma_color_via_star(g, s, c1);
    } else if (a.strategy == "product") {
        result = sigma_color_product(g, s, [&](const Graph& gg, const NeighborhoodSystem& ss) {
            return sigma_color_greedy(gg, ss, a.also_proper);
        });
        int rho = s.rho();
        bound_used = "k^C(rho,2) with rho = " + std::to_string(rho);
    } else if (a.strategy == "exact") {
        int cap = a.cap > 0 ? a.cap : kDefaultChromaticCap;
        Graph constraints = build_sigma_graph(g, s);
        if (a.also_proper) {
            std::set<std::pair<int, int>> merged(constraints.edges().begin(),
                                                 constraints.edges().end());
            merged.insert(g.edges().begin(), g.edges().end());
            constraints = Graph::from_edges(
                g.vertex_count(),
                std::vector<std::pair<int, int>>(merged.begin(), merged.end()));
        }
        auto exact = chromatic_number_exact(constraints, cap);
        result = exact.coloring;
        bound_used = "exact chi = " + std::to_string(exact.chi);
    } else {
        throw parse_error("unknown strategy: " + a.strategy);
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    json j = coloring_json(g, s, result, a.also_proper, bound_used, ms);
    j["strategy"] = a.strategy;
    emit(j);
    return 0;
}

int cmd_star_color(const Args& a) {
    Graph g = load_graph(a.graph_path);
    Ordering order = Ordering::identity(g.vertex_count());
    if (!a.ordering_path.empty()) {
        std::ifstream in(a.ordering_path);
        if (!in) throw parse_error("cannot open ordering file: " + a.ordering_path);
        order = parse_ordering(in, g.vertex_count());
    } else {
        order = heuristic_ordering(g);
    }
    auto cert = arrangeability_of_ordering(g, order);
    auto t0 = std::chrono::steady_clock::now();
    Coloring c{std::vector<int>{}};
    if (!a.lists_path.empty()) {
        std::ifstream in(a.lists_path);
        if (!in) throw parse_error("cannot open list file: " + a.lists_path);
        c = greedy_star_coloring(g, order, ListAssignment(parse_lists(in, g.vertex_count())));
    } else {
        c = greedy_star_coloring(g, order, a.palette);
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    json j;
    j["palette_size"] = c.palette_size();
    j["colors"] = c.values();
    j["valid"] = is_star_coloring(g, c);
    j["bound_used"] = "(k+2)^2 = " + std::to_string((cert.k + 2) * (cert.k + 2)) +
                      " with ordering arrangeability k = " + std::to_string(cert.k);
    j["wall_time_ms"] = ms;
    emit(j);
    return 0;
}

int cmd_arrangeability(const Args& a) {
    Graph g = load_graph(a.graph_path);
    ArrangeabilityCertificate cert{Ordering::identity(0), 0, -1};
    std::string mode;
    if (!a.ordering_path.empty()) {
        std::ifstream in(a.ordering_path);
        if (!in) throw parse_error("cannot open ordering file: " + a.ordering_path);
        cert = arrangeability_of_ordering(g, parse_ordering(in, g.vertex_count()));
        mode = "given-ordering";
    } else if (a.exact) {
        cert = arrangeability_exact(g, a.cap > 0 ? a.cap : kDefaultArrangeabilityCap);
        mode = "exact";
    } else {
        cert = arrangeability_of_ordering(g, heuristic_ordering(g));
        mode = "heuristic";
    }
    json j;
    j["k"] = cert.k;
    j["worst_vertex"] = cert.worst_vertex;
    j["ordering"] = cert.ordering.perm();
    j["mode"] = mode;
    emit(j);
    return 0;
}

int cmd_mad(const Args& a) {
    Graph g = load_graph(a.graph_path);
    Rational mad(0);
    if (!a.sigma_path.empty()) {
        NeighborhoodSystem s = load_sigma(a.sigma_path, g);
        mad = mad_sigma(g, s);
    } else {
        mad = mad_exact(g);
    }
    json j;
    j["mad"] = mad.str();
    j["num"] = mad.num();
    j["den"] = mad.den();
    j["value"] = mad.to_double();
    j["floor_plus_one"] = mad.floor() + 1;
    j["of"] = a.sigma_path.empty() ? "graph" : "sigma-graph";
    emit(j);
    return 0;
}

int cmd_clique(const Args& a) {
    Graph g = load_graph(a.graph_path);
    int cap = a.cap > 0 ? a.cap : kDefaultCliqueCap;
    CliqueResult r{0, {}};
    if (!a.sigma_path.empty()) {
        NeighborhoodSystem s = load_sigma(a.sigma_path, g);
        r = omega_sigma(g, s, cap);
    } else {
        r = clique_number_exact(g, cap);
    }
    json j;
    j["omega"] = r.size;
    j["witness"] = r.vertices;
    j["of"] = a.sigma_path.empty() ? "graph" : "sigma-graph";
    emit(j);
    return 0;
}

int cmd_extract_rank2(const Args& a) {
    std::ifstream in(a.graph_path); // positional reused as the hypergraph path
    if (!in) throw parse_error("cannot open hypergraph file: " + a.graph_path);
    HypergraphFile file = parse_hypergraph(in);
    FullHypergraph h(file.n, file.hyperedges); // fullness validated here
    auto result = extract_rank2_subhypergraph(h, a.target, a.seed);
    json j;
    j["rank"] = h.rank();
    j["n"] = a.target;
    j["vertices"] = result.vertices;
    j["size"] = result.vertices.size();
    j["rounds"] = result.rounds;
    j["verified"] = is_rank2_full_on(h, result.vertices);
    emit(j);
    return 0;
}

int cmd_extract_subdivision(const Args& a) {
    Graph g = load_graph(a.graph_path);
    NeighborhoodSystem s = load_sigma(a.sigma_path, g);
    std::vector<int> clique;
    if (!a.clique_path.empty()) {
        clique = load_vertex_list(a.clique_path);
    } else {
        clique = omega_sigma(g, s, a.cap > 0 ? a.cap : kDefaultCliqueCap).vertices;
    }
    auto result = extract_subdivided_clique(g, s, clique, a.target);
    json j;
    j["n"] = a.target;
    j["clique_size"] = clique.size();
    j["branch"] = result.branch;
    j["subdividers"] = result.subdividers;
    j["verified"] = is_one_subdivision_of_clique(g, result.branch, result.subdividers);
    emit(j);
    return 0;
}

int cmd_gen(const Args& a) {
    std::optional<GeneratedInstance> inst;
    if (a.family == "kstar") {
        inst = gen_subdivided_clique(a.n);
    } else if (a.family == "star") {
        inst = gen_star_example(a.n);
    } else if (a.family == "biclique") {
        inst = gen_subdivided_biclique(a.n);
    } else if (a.family == "random") {
        inst = gen_random_instance(a.n, a.edge_prob, a.rho_cap, a.seed);
    } else if (a.family == "subdivision") {
        Graph pattern = load_graph(a.pattern_path);
        auto [sub, emb] =
            gen_subdivision(pattern, std::vector<int>(pattern.edge_count(), a.subdivisions));
        auto system = encode_depth_d_system(sub, emb, a.depth);
        InstanceStats stats{"subdivision",   a.subdivisions, sub.vertex_count(),
                            sub.edge_count(), system.rho(),   system.depth(),
                            -1,               -1,             -1,
                            -1};
        inst = GeneratedInstance{std::move(sub), std::move(system), std::move(stats)};
    } else {
        throw parse_error("unknown family: " + a.family);
    }
    {
        std::ofstream out(a.out_path + ".graph");
        if (!out) throw parse_error("cannot write " + a.out_path + ".graph");
        write_graph(out, inst->graph);
    }
    if (inst->system) {
        std::ofstream out(a.out_path + ".sigma");
        if (!out) throw parse_error("cannot write " + a.out_path + ".sigma");
        write_sigma(out, inst->system->sets(), inst->system->depth());
    }
    const InstanceStats& st = inst->stats;
    json j;
    j["family"] = st.family;
    j["parameter"] = st.parameter;
    j["vertices"] = st.vertices;
    j["edges"] = st.edges;
    j["rho"] = st.rho;
    j["depth"] = st.depth;
    if (st.chi_sigma_lower >= 0) j["chi_sigma_lower"] = st.chi_sigma_lower;
    if (st.chi_sigma_upper >= 0) j["chi_sigma_upper"] = st.chi_sigma_upper;
    if (st.star_chromatic_upper >= 0) j["star_chromatic_upper"] = st.star_chromatic_upper;
    if (st.arrangeability_lower_twice >= 0) {
        j["arrangeability_lower_num"] = st.arrangeability_lower_twice;
        j["arrangeability_lower_den"] = 2;
    }
    j["graph_file"] = a.out_path + ".graph";
    if (inst->system) j["sigma_file"] = a.out_path + ".sigma";
    emit(j);
    return 0;
}

int cmd_verify(const Args& a) {
    std::vector<SuiteReport> reports;
    if (a.suite == "chain") {
        reports.push_back(run_chain_suite(a.seed, a.count));
    } else if (a.suite == "lemma1") {
        reports.push_back(run_lemma1_suite(a.seed, a.count));
        reports.push_back(run_product_suite(a.seed, std::max(1, a.count / 2)));
    } else if (a.suite == "arrangeability") {
        reports.push_back(run_arrangeability_suite(a.seed, a.count));
    } else if (a.suite == "turan") {
        reports.push_back(run_turan_suite(a.seed, std::max(1, std::min(a.count, 64))));
    } else if (a.suite == "families") {
        reports.push_back(run_families_suite(a.seed, a.count));
    } else {
        throw parse_error("unknown suite: " + a.suite);
    }
    json out = json::array();
    int failures = 0;
    for (const auto& r : reports) {
        out.push_back(report_json(r));
        failures += r.failures();
        std::cerr << r.suite << ": " << r.checks.size() << " checks, " << r.failures()
                  << " failures\n";
    }
    emit(out.size() == 1 ? out[0] : out);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sigma-coloring of graphs with neighborhood systems"};
    app.require_subcommand(1);
    Args a;

    auto* build = app.add_subcommand("build-sigma-graph", "Construct G_sigma and report stats");
    build->add_option("graph", a.graph_path)->required();
    build->add_option("sigma", a.sigma_path)->required();
    build->add_option("--out", a.out_path, "Write G_sigma in graph format");

    auto* color = app.add_subcommand("color", "Produce a sigma-coloring");
    color->add_option("graph", a.graph_path)->required();
    color->add_option("sigma", a.sigma_path)->required();
    color->add_option("--strategy", a.strategy, "greedy | star-pipeline | product | exact");
    color->add_flag("--also-proper", a.also_proper, "Also require properness on G");
    color->add_option("--cap", a.cap, "Raise the exact-oracle size cap");

    auto* star = app.add_subcommand("star-color", "Greedy star coloring of a graph");
    star->add_option("graph", a.graph_path)->required();
    star->add_option("--ordering", a.ordering_path, "Ordering file (default: degeneracy)");
    star->add_option("--palette", a.palette, "Uniform palette size (0 = unbounded)");
    star->add_option("--lists", a.lists_path, "List-assignment file");

    auto* arr = app.add_subcommand("arrangeability", "Arrangeability certificates");
    arr->add_option("graph", a.graph_path)->required();
    arr->add_flag("--exact", a.exact, "Search all orderings (small graphs)");
    arr->add_option("--ordering", a.ordering_path, "Certify a given ordering");
    arr->add_option("--cap", a.cap, "Raise the exact search cap");

    auto* mad = app.add_subcommand("mad", "Exact maximum average degree");
    mad->add_option("graph", a.graph_path)->required();
    mad->add_option("sigma", a.sigma_path, "When given, mad of G_sigma");

    auto* clique = app.add_subcommand("clique", "Exact clique number / omega(Sigma)");
    clique->add_option("graph", a.graph_path)->required();
    clique->add_option("sigma", a.sigma_path, "When given, omega of G_sigma");
    clique->add_option("--cap", a.cap, "Raise the oracle cap");

    auto* rank2 = app.add_subcommand("extract-rank2", "Rank-2 full subhypergraph extraction");
    rank2->add_option("hypergraph", a.graph_path)->required();
    rank2->add_option("n", a.target, "Target subhypergraph size")->required();
    rank2->add_option("--seed", a.seed);

    auto* subdiv = app.add_subcommand("extract-subdivision",
                                      "1-subdivision of K_n from a sigma-clique");
    subdiv->add_option("graph", a.graph_path)->required();
    subdiv->add_option("sigma", a.sigma_path)->required();
    subdiv->add_option("n", a.target, "Clique size to extract")->required();
    subdiv->add_option("--clique", a.clique_path, "Sigma-clique file (default: omega witness)");
    subdiv->add_option("--cap", a.cap, "Raise the clique oracle cap");

    auto* gen = app.add_subcommand("gen", "Generate a family instance");
    gen->add_option("--family", a.family, "kstar | star | biclique | random | subdivision");
    gen->add_option("-n,--n", a.n, "Family parameter");
    gen->add_option("--edge-prob", a.edge_prob, "random: edge probability");
    gen->add_option("--rho-cap", a.rho_cap, "random: max |Sigma(v)|");
    gen->add_option("--seed", a.seed);
    gen->add_option("--pattern", a.pattern_path, "subdivision: pattern graph file");
    gen->add_option("--subdivisions", a.subdivisions, "subdivision: vertices per edge");
    gen->add_option("--depth", a.depth, "subdivision: d (system depth becomes 2d+1)");
    gen->add_option("--out", a.out_path, "Output file prefix")->required();

    auto* verify = app.add_subcommand("verify", "Run an inequality suite");
    verify->add_option("--suite", a.suite, "chain | lemma1 | arrangeability | turan | families");
    verify->add_option("--seed", a.seed);
    verify->add_option("--count", a.count, "Number of random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build_sigma_graph(a);
        if (color->parsed()) return cmd_color(a);
        if (star->parsed()) return cmd_star_color(a);
        if (arr->parsed()) return cmd_arrangeability(a);
        if (mad->parsed()) return cmd_mad(a);
        if (clique->parsed()) return cmd_clique(a);
        if (rank2->parsed()) return cmd_extract_rank2(a);
        if (subdiv->parsed()) return cmd_extract_subdivision(a);
        if (gen->parsed()) return cmd_gen(a);
        if (verify->parsed()) return cmd_verify(a);
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

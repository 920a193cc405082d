// Command-line front end for the spectral network analysis library.
//
// Subcommands: components, coauthor-net, citer-net, citee-net, centrality,
// score, dscore, nsc, compare, scree, stats, biblio, dcbm-gen.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specnet/driver.hpp"

namespace {

void add_common(CLI::App* sub, specnet::RunConfig& config) {
    sub->add_option("--output-dir", config.output_dir, "Directory for emitted files");
    sub->add_option("--seed", config.seed, "Deterministic seed (default 42)");
    sub->add_option("--tol", config.tol, "Eigensolver tolerance (default 1e-10)");
    sub->add_option("--restarts", config.restarts, "k-means restarts (default 100)");
    sub->add_option("--names", config.names, "Author-list file attaching names to node indices");
    sub->add_option("--format", config.format, "Input format: auto|adjacency|edgelist");
}

void add_graph_input(CLI::App* sub, specnet::RunConfig& config, bool with_direction = true) {
    sub->add_option("--input", config.input, "Graph file")->required();
    if (with_direction) {
        sub->add_flag("--directed", config.directed, "Treat the input as a digraph");
        sub->add_flag_callback(
            "--undirected", [&config]() { config.directed = false; },
            "Treat the input as undirected (default)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    specnet::RunConfig config;

    // The optional config file seeds the defaults; flags override it.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                specnet::apply_config_file(config, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        }
    }

    CLI::App app{"Spectral community detection and network statistics"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");

    auto* components = app.add_subcommand("components", "Connectivity decomposition");
    add_graph_input(components, config);
    add_common(components, config);

    auto* coauthor = app.add_subcommand("coauthor-net",
                                        "Coauthorship projection of an author-paper matrix");
    coauthor->add_option("--input", config.input, "Bipartite adjacency file")->required();
    coauthor->add_option("--threshold,-t", config.threshold,
                         "Minimum shared papers per edge (default 2)");
    coauthor->add_flag("--dot", config.emit_dot_file, "Also emit a DOT file of the giant component");
    coauthor->add_option("--degree-floor", config.degree_floor,
                         "Show names only at this degree or above");
    add_common(coauthor, config);

    for (const char* name : {"citer-net", "citee-net"}) {
        auto* sub = app.add_subcommand(name, std::string(name) +
                                                 ": shared-neighbor projection of a digraph");
        sub->add_option("--input", config.input, "Directed graph file")->required();
        add_common(sub, config);
    }

    auto* centrality = app.add_subcommand("centrality", "Node centrality scores");
    add_graph_input(centrality, config);
    centrality->add_option("--kind", config.kind,
                           "degree|in|out|closeness|betweenness (default degree)");
    add_common(centrality, config);

    for (const char* name : {"score", "nsc"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " community detection");
        add_graph_input(sub, config, false);
        sub->add_option("--k,-K", config.K, "Number of communities")->required();
        sub->add_flag("--dot", config.emit_dot_file, "Also emit a DOT file colored by community");
        sub->add_option("--degree-floor", config.degree_floor,
                        "Show names only at this degree or above");
        add_common(sub, config);
    }
    auto* dscore_cmd = app.add_subcommand("dscore", "Directed community detection");
    dscore_cmd->add_option("--input", config.input, "Directed graph file")->required();
    dscore_cmd->add_option("--k,-K", config.K, "Number of communities")->required();
    dscore_cmd->add_flag("--dot", config.emit_dot_file, "Also emit a DOT file colored by community");
    dscore_cmd->add_option("--degree-floor", config.degree_floor,
                           "Show names only at this degree or above");
    add_common(dscore_cmd, config);

    auto* compare = app.add_subcommand("compare", "ARI/VI and intersection table of two labelings");
    compare->add_option("--a", config.input, "First labels CSV")->required();
    compare->add_option("--b", config.input_b, "Second labels CSV")->required();
    add_common(compare, config);

    auto* scree = app.add_subcommand("scree", "Leading spectrum of the giant component");
    add_graph_input(scree, config);
    scree->add_option("--k,-K", config.scree_k, "Number of values (default 10)");
    add_common(scree, config);

    auto* stats = app.add_subcommand("stats", "Distributional network statistics");
    stats->add_option("--input", config.input, "Graph or bipartite adjacency file")->required();
    stats->add_flag("--bipartite", config.bipartite,
                    "Treat the input as an author-paper incidence matrix");
    stats->add_option("--d-min", config.d_min, "First degree of the power-law tail fit");
    add_common(stats, config);

    auto* biblio = app.add_subcommand("biblio", "Productivity and citation-pattern statistics");
    biblio->add_option("--papers", config.papers, "papers TSV (id, year, authors)")->required();
    biblio->add_option("--citations", config.citations, "paper-citation TSV")->required();
    add_common(biblio, config);

    auto* gen = app.add_subcommand("dcbm-gen", "Sample a degree-corrected block model");
    gen->add_option("--params", config.params, "key=value parameter file")->required();
    add_common(gen, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    for (auto* sub : app.get_subcommands()) {
        config.subcommand = sub->get_name();
    }
    return specnet::run(config, std::cout, std::cerr);
}

#include "specnet/driver.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "specnet/biblio.hpp"
#include "specnet/community.hpp"
#include "specnet/dcbm.hpp"
#include "specnet/io.hpp"
#include "specnet/linalg.hpp"
#include "specnet/metrics.hpp"
#include "specnet/rng.hpp"

namespace specnet {

namespace {

namespace fs = std::filesystem;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Graph load_graph(const RunConfig& config) {
    if (config.input.empty()) throw std::invalid_argument("missing --input");
    bool edgelist;
    if (config.format == "edgelist") {
        edgelist = true;
    } else if (config.format == "adjacency") {
        edgelist = false;
    } else {
        edgelist = ends_with(config.input, ".edges") || ends_with(config.input, ".edgelist") ||
                   ends_with(config.input, ".el") || ends_with(config.input, ".tsv");
    }
    Graph g = edgelist
                  ? parse_edge_list(config.input, config.directed)
                  : std::move(*parse_adjacency(config.input,
                                               config.directed ? AdjacencyKind::square_directed
                                                               : AdjacencyKind::square_undirected)
                                   .graph);
    if (!config.names.empty()) {
        g.set_names(parse_name_list(config.names));
    }
    return g;
}

BipartiteGraph load_bipartite(const RunConfig& config) {
    if (config.input.empty()) throw std::invalid_argument("missing --input");
    return std::move(*parse_adjacency(config.input, AdjacencyKind::bipartite).bipartite);
}

std::string out_path(const RunConfig& config, const std::string& file) {
    fs::create_directories(config.output_dir);
    return (fs::path(config.output_dir) / file).string();
}

std::vector<std::string> node_ids(const Graph& g) {
    if (!g.names().empty()) return g.names();
    std::vector<std::string> ids(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) ids[v] = std::to_string(v);
    return ids;
}

std::vector<std::string> mapped_ids(const Graph& original, const std::vector<int>& map) {
    std::vector<std::string> ids;
    ids.reserve(map.size());
    for (int v : map) {
        ids.push_back(original.names().empty() ? std::to_string(v) : original.names()[v]);
    }
    return ids;
}

std::string join_sizes(const std::vector<int>& sizes) {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += "/";
        s += std::to_string(sizes[i]);
    }
    return s;
}

void print_top3(std::ostream& out, const std::vector<double>& scores,
                const std::vector<std::string>& ids) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return scores[a] > scores[b]; });
    out << "top3:";
    for (std::size_t i = 0; i < order.size() && i < 3; ++i) {
        out << " " << ids[order[i]] << " (" << format_number(scores[order[i]]) << ")";
    }
    out << "\n";
}

int count_singletons(const ComponentDecomposition& d) {
    return static_cast<int>(std::count(d.sizes.begin(), d.sizes.end(), 1));
}

int run_components(const RunConfig& config, std::ostream& out) {
    Graph g = load_graph(config);
    ComponentDecomposition d =
        g.directed() ? weakly_connected_components(g) : connected_components(g);
    PartitionLabels p{d.labels, d.count(), d.count()};
    emit_labels(p, node_ids(g), out_path(config, "components.csv"));
    out << d.count() << " components, " << count_singletons(d) << " singletons, giant="
        << d.giant_size() << "\n";
    return 0;
}

int run_projection(const RunConfig& config, std::ostream& out, bool citer) {
    RunConfig cfg = config;
    cfg.directed = true;
    Graph g = load_graph(cfg);
    Graph proj = citer ? citer_network(g) : citee_network(g);
    write_edge_list(proj, out_path(config, citer ? "citer.edges" : "citee.edges"));
    ComponentDecomposition d = connected_components(proj);
    out << (citer ? "citer" : "citee") << " network: n=" << proj.node_count()
        << " edges=" << proj.edge_count() << " giant=" << d.giant_size() << "\n";
    return 0;
}

int run_coauthor_net(const RunConfig& config, std::ostream& out) {
    BipartiteGraph b = load_bipartite(config);
    Graph g = coauthorship_from_bipartite(b, config.threshold);
    if (!config.names.empty()) g.set_names(parse_name_list(config.names));
    write_edge_list(g, out_path(config, "coauthor_t" + std::to_string(config.threshold) + ".edges"));
    ComponentDecomposition d = connected_components(g);
    if (config.emit_dot_file) {
        auto [giant, map] = induced_subgraph(g, largest_component_nodes(g));
        emit_dot(giant, nullptr, config.degree_floor, out_path(config, "coauthor_giant.dot"));
    }
    out << "coauthorship (t=" << config.threshold << "): n=" << g.node_count()
        << " edges=" << g.edge_count() << " components=" << d.count()
        << " giant=" << d.giant_size() << "\n";
    return 0;
}

int run_centrality(const RunConfig& config, std::ostream& out) {
    Graph g = load_graph(config);
    if (config.kind == "degree" || config.kind == "in" || config.kind == "out") {
        DegreeMode mode = config.kind == "degree" ? DegreeMode::undirected
                          : config.kind == "in"   ? DegreeMode::in
                                                  : DegreeMode::out;
        CentralityScores scores = degree_centrality(g, mode);
        emit_scores(scores.scores, node_ids(g),
                    out_path(config, "centrality_" + config.kind + ".csv"));
        print_top3(out, scores.scores, node_ids(g));
        return 0;
    }
    if (config.kind != "closeness" && config.kind != "betweenness") {
        throw std::invalid_argument("unknown centrality kind '" + config.kind + "'");
    }
    // Closeness and betweenness need a connected graph; use the giant component.
    Graph base = g.directed() ? symmetrize(g) : std::move(g);
    auto [giant, map] = induced_subgraph(base, largest_component_nodes(base));
    CentralityScores scores = config.kind == "closeness" ? closeness_centrality(giant)
                                                         : betweenness_centrality(giant);
    std::vector<std::string> ids = mapped_ids(base, map);
    emit_scores(scores.scores, ids, out_path(config, "centrality_" + config.kind + ".csv"));
    out << "computed on the giant component (" << giant.node_count() << " nodes)\n";
    print_top3(out, scores.scores, ids);
    return 0;
}

int run_detection(const RunConfig& config, std::ostream& out) {
    DetectOptions opts;
    opts.restarts = config.restarts;
    opts.tol = config.tol;

    RunConfig cfg = config;
    if (config.subcommand == "dscore") cfg.directed = true;
    Graph base = load_graph(cfg);
    auto [giant, map] = induced_subgraph(base, largest_component_nodes(base));
    PartitionLabels labels;
    if (config.subcommand == "dscore") {
        labels = dscore(giant, config.K, config.seed, opts);
    } else {
        labels = config.subcommand == "score" ? score(giant, config.K, config.seed, opts)
                                              : nsc(giant, config.K, opts);
    }
    std::vector<std::string> ids = mapped_ids(base, map);
    emit_labels(labels, ids, out_path(config, "labels_" + config.subcommand + ".csv"));
    if (config.emit_dot_file) {
        emit_dot(giant, &labels, config.degree_floor,
                 out_path(config, config.subcommand + ".dot"));
    }
    out << config.subcommand << " K=" << config.K << " on giant (" << giant.node_count()
        << " nodes): sizes " << join_sizes(community_sizes(labels))
        << " (k_effective=" << labels.k_effective << ")\n";
    return 0;
}

int run_compare(const RunConfig& config, std::ostream& out) {
    if (config.input.empty() || config.input_b.empty()) {
        throw std::invalid_argument("compare needs --a and --b label files");
    }
    auto [ids_a, raw_a] = parse_labels_csv(config.input);
    auto [ids_b, raw_b] = parse_labels_csv(config.input_b);

    std::map<std::string, int> pos_b;
    for (std::size_t i = 0; i < ids_b.size(); ++i) pos_b[ids_b[i]] = static_cast<int>(i);
    std::vector<int> common_a, common_b;
    for (std::size_t i = 0; i < ids_a.size(); ++i) {
        auto it = pos_b.find(ids_a[i]);
        if (it != pos_b.end()) {
            common_a.push_back(raw_a[i]);
            common_b.push_back(raw_b[it->second]);
        }
    }
    if (common_a.empty()) throw std::invalid_argument("compare: the label files share no node id");

    double ari = adjusted_rand_index(common_a, common_b);
    double vi = variation_of_information(common_a, common_b);

    // Intersection table over the union universe, "other" for one-sided nodes.
    std::set<std::string> universe_set(ids_a.begin(), ids_a.end());
    universe_set.insert(ids_b.begin(), ids_b.end());
    std::vector<std::string> universe(universe_set.begin(), universe_set.end());
    std::map<std::string, int> uindex;
    for (std::size_t i = 0; i < universe.size(); ++i) uindex[universe[i]] = static_cast<int>(i);

    auto as_partition = [](std::vector<int> labels) {
        PartitionLabels p;
        p.labels = std::move(labels);
        std::map<int, int> remap;
        for (int& l : p.labels) {
            auto [it, inserted] = remap.try_emplace(l, static_cast<int>(remap.size()));
            l = it->second;
        }
        p.k_effective = static_cast<int>(remap.size());
        p.k_requested = p.k_effective;
        return p;
    };
    PartitionLabels pa = as_partition(raw_a);
    PartitionLabels pb = as_partition(raw_b);
    std::vector<int> map_a(ids_a.size()), map_b(ids_b.size());
    for (std::size_t i = 0; i < ids_a.size(); ++i) map_a[i] = uindex[ids_a[i]];
    for (std::size_t i = 0; i < ids_b.size(); ++i) map_b[i] = uindex[ids_b[i]];
    auto table = intersection_table(pa, map_a, pb, map_b, static_cast<int>(universe.size()));

    std::string csv = "a\\b";
    for (int bq = 0; bq < pb.k_effective; ++bq) csv += ",b" + std::to_string(bq);
    csv += ",other\n";
    for (int aq = 0; aq <= pa.k_effective; ++aq) {
        csv += aq == pa.k_effective ? "other" : "a" + std::to_string(aq);
        for (long long cell : table[aq]) csv += "," + std::to_string(cell);
        csv += "\n";
    }
    write_file_atomic(out_path(config, "intersections.csv"), csv);

    out << "ARI=" << format_number(ari) << " VI=" << format_number(vi) << " (on "
        << common_a.size() << " shared nodes)\n";
    return 0;
}

int run_scree(const RunConfig& config, std::ostream& out) {
    Graph g = load_graph(config);
    auto [giant, map] = induced_subgraph(g, largest_component_nodes(g));
    int k = std::min(config.scree_k, giant.node_count());
    std::vector<double> values =
        spectrum_for_scree(adjacency_operator(giant), k, !giant.directed(), config.tol);
    emit_scree(values, out_path(config, "scree.csv"));
    out << "scree (giant, k=" << k << "):";
    for (double v : values) out << " " << format_number(v);
    out << "\n";
    return 0;
}

int run_stats(const RunConfig& config, std::ostream& out) {
    if (config.bipartite) {
        BipartiteGraph b = load_bipartite(config);
        std::vector<double> divided = divided_paper_credits(b);
        std::vector<double> counts = paper_counts(b);
        emit_curve(lorenz_curve(divided), "population_share,value_share",
                   out_path(config, "lorenz_divided.csv"));
        double g_div = gini(divided);
        double total = std::accumulate(counts.begin(), counts.end(), 0.0);
        std::vector<double> sorted(divided);
        std::sort(sorted.rbegin(), sorted.rend());
        double top10 = 0.0;
        std::size_t cut = sorted.size() / 10;
        for (std::size_t i = 0; i < cut; ++i) top10 += sorted[i];
        double divided_total = std::accumulate(divided.begin(), divided.end(), 0.0);
        out << "authors=" << b.author_count() << " papers=" << b.paper_count()
            << " incidences=" << static_cast<long long>(total) << "\n";
        out << "gini_divided=" << format_number(g_div)
            << " top10pct_share=" << format_number(divided_total > 0 ? top10 / divided_total : 0)
            << "\n";
        std::vector<std::string> ids(b.author_count());
        if (!config.names.empty()) {
            ids = parse_name_list(config.names);
        } else {
            for (int a = 0; a < b.author_count(); ++a) ids[a] = std::to_string(a);
        }
        print_top3(out, counts, ids);  // most papers, Table-1 style
        return 0;
    }

    Graph g = load_graph(config);
    double trans = transitivity(g);
    auto ccdf = degree_ccdf(g, DegreeMode::undirected);
    emit_curve(ccdf, "degree,fraction_above", out_path(config, "ccdf.csv"));
    out << "n=" << g.node_count() << " edges=" << g.edge_count()
        << " transitivity=" << format_number(trans) << "\n";
    try {
        TailFit fit = powerlaw_tail_slope(ccdf, config.d_min);
        out << "tail_slope=" << format_number(fit.slope)
            << " rms_residual=" << format_number(fit.rms_residual)
            << " points=" << fit.points_used << "\n";
    } catch (const std::invalid_argument& e) {
        out << "tail fit skipped: " << e.what() << "\n";
    }
    print_top3(out, degree_centrality(g, DegreeMode::undirected).scores, node_ids(g));
    return 0;
}

int run_biblio(const RunConfig& config, std::ostream& out) {
    if (config.papers.empty() || config.citations.empty()) {
        throw std::invalid_argument("biblio needs --papers and --citations");
    }
    std::vector<std::string> names;
    if (!config.names.empty()) names = parse_name_list(config.names);
    BiblioRecord record = parse_biblio(config.papers, config.citations, names);

    ProductivityStats prod = productivity_by_year(record, Counting::divided);
    emit_productivity(prod, out_path(config, "productivity.csv"));
    double g_div = gini(prod.credit_per_author);
    out << "papers=" << record.papers.size() << " authors=" << record.author_count
        << " overall_papers_per_author=" << format_number(prod.overall_papers_per_author)
        << " gini_divided=" << format_number(g_div) << "\n";

    CitationStats cites = citation_classification(record);
    std::string csv = "class,count,proportion,mean_delay\n";
    csv += "self," + std::to_string(cites.count_self) + "," +
           format_number(cites.proportion_self) + "," + format_number(cites.mean_delay_self) + "\n";
    csv += "coauthor," + std::to_string(cites.count_coauthor) + "," +
           format_number(cites.proportion_coauthor) + "," +
           format_number(cites.mean_delay_coauthor) + "\n";
    csv += "distant," + std::to_string(cites.count_distant) + "," +
           format_number(cites.proportion_distant) + "," +
           format_number(cites.mean_delay_distant) + "\n";
    write_file_atomic(out_path(config, "citation_classes.csv"), csv);
    out << "citations=" << cites.classes.size() << " self=" << format_number(cites.proportion_self)
        << " coauthor=" << format_number(cites.proportion_coauthor)
        << " distant=" << format_number(cites.proportion_distant) << "\n";
    out << "mean_delay self=" << format_number(cites.mean_delay_self)
        << " coauthor=" << format_number(cites.mean_delay_coauthor)
        << " distant=" << format_number(cites.mean_delay_distant)
        << " overall=" << format_number(cites.mean_delay_overall) << "\n";
    return 0;
}

DcbmParams parse_dcbm_params(const std::string& path) {
    std::map<std::string, std::string> kv;
    for (const std::string& raw : parse_name_list(path)) {
        if (raw.empty() || raw[0] == '#') continue;
        auto eq = raw.find('=');
        if (eq == std::string::npos) throw ParseError(path + ": expected key=value, got '" + raw + "'");
        kv[raw.substr(0, eq)] = raw.substr(eq + 1);
    }
    auto need = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError(path + ": missing key '" + key + "'");
        return it->second;
    };
    auto split_doubles = [](const std::string& s) {
        std::vector<double> v;
        std::istringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) v.push_back(std::stod(tok));
        }
        return v;
    };

    int n = std::stoi(need("n"));
    int K = std::stoi(need("k"));
    bool directed = kv.count("directed") && kv["directed"] != "0";

    // Heterogeneity spec: "uniform:lo:hi[:seed]" or an explicit comma list.
    auto heterogeneity = [&](const std::string& key, std::uint64_t stream) {
        std::string s = need(key);
        if (s.rfind("uniform:", 0) == 0) {
            std::string r = s.substr(8);
            std::replace(r.begin(), r.end(), ':', ',');
            std::vector<double> range = split_doubles(r);
            if (range.size() < 2) throw ParseError(path + ": " + key + " needs uniform:lo:hi");
            std::uint64_t seed = range.size() > 2 ? static_cast<std::uint64_t>(range[2]) : 1;
            Rng rng = Rng::derive(seed, stream);
            std::vector<double> v(n);
            for (double& x : v) x = rng.uniform(range[0], range[1]);
            return v;
        }
        std::vector<double> v = split_doubles(s);
        if (static_cast<int>(v.size()) != n) {
            throw ParseError(path + ": " + key + " must list n values");
        }
        return v;
    };

    DcbmParams params;
    params.K = K;
    params.directed = directed;
    params.P = DenseMatrix(K, K);
    if (kv.count("p")) {
        std::vector<double> vals = split_doubles(kv["p"]);
        if (static_cast<int>(vals.size()) != K * K) {
            throw ParseError(path + ": p must list K*K values row-major");
        }
        std::copy(vals.begin(), vals.end(), params.P.data.begin());
    } else {
        double within = std::stod(need("p_within"));
        double between = std::stod(need("p_between"));
        for (int a = 0; a < K; ++a) {
            for (int b = 0; b < K; ++b) params.P.at(a, b) = a == b ? within : between;
        }
    }
    params.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        params.labels[i] = static_cast<int>((static_cast<long long>(i) * K) / n);
    }
    params.theta = heterogeneity("theta", 1);
    if (directed) params.delta = heterogeneity("delta", 2);
    validate(params);
    return params;
}

int run_dcbm_gen(const RunConfig& config, std::ostream& out) {
    if (config.params.empty()) throw std::invalid_argument("dcbm-gen needs --params");
    DcbmParams params = parse_dcbm_params(config.params);
    auto [g, planted] = params.directed ? sample_directed(params, config.seed)
                                        : sample_undirected(params, config.seed);
    write_edge_list(g, out_path(config, "sample.edges"));
    emit_labels(planted, {}, out_path(config, "planted_labels.csv"));
    out << "dcbm sample: n=" << g.node_count() << " edges=" << g.edge_count()
        << (params.directed ? " directed" : " undirected") << " K=" << params.K
        << " seed=" << config.seed << "\n";
    return 0;
}

}  // namespace

void apply_config_file(RunConfig& config, const std::string& path) {
    for (const std::string& raw : parse_name_list(path)) {
        if (raw.empty() || raw[0] == '#') continue;
        auto eq = raw.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path + ": expected key=value, got '" + raw + "'");
        }
        const std::string key = raw.substr(0, eq);
        const std::string value = raw.substr(eq + 1);
        if (key == "input") config.input = value;
        else if (key == "input_b") config.input_b = value;
        else if (key == "papers") config.papers = value;
        else if (key == "citations") config.citations = value;
        else if (key == "names") config.names = value;
        else if (key == "params") config.params = value;
        else if (key == "output_dir") config.output_dir = value;
        else if (key == "format") config.format = value;
        else if (key == "kind") config.kind = value;
        else if (key == "directed") config.directed = value != "0";
        else if (key == "bipartite") config.bipartite = value != "0";
        else if (key == "k") config.K = std::stoi(value);
        else if (key == "scree_k") config.scree_k = std::stoi(value);
        else if (key == "threshold") config.threshold = std::stoi(value);
        else if (key == "degree_floor") config.degree_floor = std::stoi(value);
        else if (key == "d_min") config.d_min = std::stoi(value);
        else if (key == "dot") config.emit_dot_file = value != "0";
        else if (key == "seed") config.seed = std::stoull(value);
        else if (key == "tol") config.tol = std::stod(value);
        else if (key == "restarts") config.restarts = std::stoi(value);
        else throw ParseError(path + ": unknown key '" + key + "'");
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const std::string& cmd = config.subcommand;
        if (cmd == "components") return run_components(config, out);
        if (cmd == "coauthor-net") return run_coauthor_net(config, out);
        if (cmd == "citer-net") return run_projection(config, out, true);
        if (cmd == "citee-net") return run_projection(config, out, false);
        if (cmd == "centrality") return run_centrality(config, out);
        if (cmd == "score" || cmd == "dscore" || cmd == "nsc") return run_detection(config, out);
        if (cmd == "compare") return run_compare(config, out);
        if (cmd == "scree") return run_scree(config, out);
        if (cmd == "stats") return run_stats(config, out);
        if (cmd == "biblio") return run_biblio(config, out);
        if (cmd == "dcbm-gen") return run_dcbm_gen(config, out);
        err << "error: unknown subcommand '" << cmd << "'\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace specnet

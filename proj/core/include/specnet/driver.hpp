#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace specnet {

/// Parsed invocation of one subcommand.  Defaults: seed 42, tol 1e-10,
/// restarts 100.  Flags override values loaded from an optional key=value
/// config file (keys named like the fields).
struct RunConfig {
    std::string subcommand;

    std::string input;         // graph input (adjacency matrix or edge list)
    std::string input_b;       // second label file for `compare`
    std::string papers;        // biblio papers TSV
    std::string citations;     // biblio paper-citation TSV
    std::string names;         // author-list file (one name per line)
    std::string params;        // dcbm-gen parameter file
    std::string output_dir = ".";
    std::string format = "auto";  // "adjacency", "edgelist", or by extension
    std::string kind = "degree";  // centrality kind

    bool directed = false;
    bool bipartite = false;  // treat `input` as an author-paper incidence matrix
    int K = 3;
    int scree_k = 10;
    int threshold = 2;      // coauthor-net paper threshold
    int degree_floor = 0;   // dot emission
    int d_min = 1;          // power-law tail start
    bool emit_dot_file = false;

    std::uint64_t seed = 42;
    double tol = 1e-10;
    int restarts = 100;
};

/// Applies "key=value" lines (# comments allowed) onto a config.
void apply_config_file(RunConfig& config, const std::string& path);

/// Executes one subcommand end to end: parse inputs, run the pipeline,
/// write outputs into config.output_dir, print a one-line summary per
/// result to `out`.  Returns 0 on success; errors are reported on `err`
/// with a nonzero return and no partial output files.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace specnet

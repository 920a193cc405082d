#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specnet/biblio.hpp"
#include "specnet/community.hpp"
#include "specnet/graph.hpp"

namespace specnet {

/// Parse failures carry the offending file and line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AdjacencyKind { square_undirected, square_directed, bipartite };

struct AdjacencyParseResult {
    AdjacencyKind kind;
    std::optional<Graph> graph;              // square kinds
    std::optional<BipartiteGraph> bipartite; // bipartite kind
    int zeroed_diagonal = 0;                 // diagonal 1s dropped with a warning count
};

/// Dense whitespace-separated 0/1 matrix.  Every row must have the same
/// number of tokens; square-undirected input must be symmetric (asymmetry
/// is a parse error naming the line); diagonal entries are zeroed silently
/// but counted.
AdjacencyParseResult parse_adjacency(const std::string& path, AdjacencyKind expected);

/// Edge list: one "src<TAB>dst" pair per line (any whitespace accepted),
/// '#'-prefixed comments, and an optional "# n=<count>" header pinning the
/// node count.  Duplicate edges collapse.
Graph parse_edge_list(const std::string& path, bool directed);

/// Writer matching parse_edge_list, canonical order, byte-stable.
void write_edge_list(const Graph& g, const std::string& path);

/// One name per line; names[i] belongs to node i.
std::vector<std::string> parse_name_list(const std::string& path);

/// Labels CSV ("node_id,community").  Returns (ids, labels) row-aligned.
std::pair<std::vector<std::string>, std::vector<int>> parse_labels_csv(const std::string& path);

// CSV emitters.  All numbers use 12 significant digits; output is
// byte-stable across runs and written atomically (temp file + rename), so
// a failing run leaves no partial file.

/// "node_id,community"; ids default to indices when empty.
void emit_labels(const PartitionLabels& p, const std::vector<std::string>& ids,
                 const std::string& path);

/// "node_id,score".
void emit_scores(const std::vector<double>& scores, const std::vector<std::string>& ids,
                 const std::string& path);

/// Coordinate pairs under a caller-chosen two-column header.
void emit_curve(const std::vector<std::pair<double, double>>& points, const std::string& header,
                const std::string& path);
void emit_curve(const std::vector<std::pair<int, double>>& points, const std::string& header,
                const std::string& path);

/// "rank,value,abs_value" for scree plots.
void emit_scree(const std::vector<double>& values, const std::string& path);

/// GraphViz DOT.  Node names appear only at degree >= degree_floor;
/// communities color the nodes when labels are given.
void emit_dot(const Graph& g, const PartitionLabels* labels, int degree_floor,
              const std::string& path);

/// Productivity rows: "year,papers,authors,papers_per_author".
void emit_productivity(const ProductivityStats& stats, const std::string& path);

/// Biblio TSV inputs: papers as "paper_id<TAB>year<TAB>author,author,...",
/// citations as "citing_paper_id<TAB>cited_paper_id".  Author tokens are
/// either numeric indices or names resolved against `author_names`.
BiblioRecord parse_biblio(const std::string& papers_path, const std::string& citations_path,
                          const std::vector<std::string>& author_names);

/// Atomic text write shared by all emitters.
void write_file_atomic(const std::string& path, const std::string& content);

/// Fixed 12-significant-digit rendering used by every emitter.
std::string format_number(double v);

}  // namespace specnet

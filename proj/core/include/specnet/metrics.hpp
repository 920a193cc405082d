#pragma once

#include <span>
#include <utility>
#include <vector>

#include "specnet/graph.hpp"

namespace specnet {

enum class DegreeMode { undirected, in, out };

enum class CentralityKind { degree, in_degree, out_degree, closeness, betweenness };

struct CentralityScores {
    CentralityKind kind;
    std::vector<double> scores;  // node-indexed
};

/// Neighbor counts: coauthors for undirected graphs, distinct citers for
/// in-mode on digraphs.  The mode must match the graph's directedness.
CentralityScores degree_centrality(const Graph& g, DegreeMode mode);

/// score(v) = 1 / sum_u dist(v, u) over unweighted shortest paths.
/// Requires a connected undirected graph (restrict to a component first).
CentralityScores closeness_centrality(const Graph& g);

/// Shortest-path betweenness over unordered pairs {s, t}, unnormalized,
/// via the single-source accumulation scheme.  Same preconditions as
/// closeness_centrality.
CentralityScores betweenness_centrality(const Graph& g);

/// Chance-corrected pair-counting agreement between two labelings of the
/// same nodes; 1 for identical partitions up to renaming, possibly negative.
double adjusted_rand_index(std::span<const int> p, std::span<const int> q);

/// VI = H(p) + H(q) - 2 I(p, q) in natural-log units; 0 iff the partitions
/// agree up to renaming; symmetric.
double variation_of_information(std::span<const int> p, std::span<const int> q);

/// 3 * triangles / connected triples; 0 when the graph has no connected
/// triple.
double transitivity(const Graph& g);

/// G = sum_{i,j} |x_i - x_j| / (2 n^2 mean), in [0, 1).  Rejects empty,
/// negative, or all-zero input.
double gini(std::span<const double> values);

/// Lorenz curve of the ascending-sorted values: n + 1 points from (0, 0)
/// to (1, 1), monotone and on or below the diagonal.
std::vector<std::pair<double, double>> lorenz_curve(std::span<const double> values);

/// Complementary cumulative degree distribution: points (d, fraction of
/// nodes with degree > d) at the jump points of the step function, i.e.
/// at every distinct degree plus the value just below the minimum.
/// Fractions are strictly decreasing.
std::vector<std::pair<int, double>> degree_ccdf(const Graph& g, DegreeMode mode);

struct TailFit {
    double slope = 0.0;          // least-squares slope of log f vs log d
    double rms_residual = 0.0;   // fit quality; large values flag a poor fit
    int points_used = 0;
};

/// Log-log least-squares fit of the CCDF tail (points with d >= d_min and
/// positive fraction).  Diagnostic only; needs at least 3 usable points.
TailFit powerlaw_tail_slope(std::span<const std::pair<int, double>> ccdf, int d_min);

/// Per-author paper credit under divided counting: 1/K per K-author paper.
std::vector<double> divided_paper_credits(const BipartiteGraph& b);

/// Non-divided counting: the author-side degree of the incidence structure.
std::vector<double> paper_counts(const BipartiteGraph& b);

}  // namespace specnet

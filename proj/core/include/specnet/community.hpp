#pragma once

#include <cstdint>
#include <vector>

#include "specnet/graph.hpp"
#include "specnet/linalg.hpp"

namespace specnet {

/// Node-indexed community assignment.  Labels form the contiguous range
/// [0, k_effective) with every id used; k_effective <= k_requested.
struct PartitionLabels {
    std::vector<int> labels;
    int k_requested = 0;
    int k_effective = 0;
};

/// Entry-wise ratio matrix used by SCORE and D-SCORE: n rows, one column
/// per trailing vector.  Rows off the support are zero.
struct RatioMatrix {
    DenseMatrix entries;                // n x (K-1)
    std::vector<std::uint8_t> support;  // 1 iff the row is defined
};

/// Builds sgn(v_{k+1}(i)/v_1(i)) * min(|v_{k+1}(i)/v_1(i)|, clamp) for rows
/// in the support (zero elsewhere).  `vectors` holds the K leading vectors
/// as columns; clamp <= 0 disables clamping (raw division).
RatioMatrix entrywise_ratios(const DenseMatrix& vectors,
                             const std::vector<std::uint8_t>& support, double clamp);

struct DetectOptions {
    int restarts = 100;        // kmeans restarts
    double tol = 1e-10;        // eigensolver tolerance
    int max_iter = 0;          // eigensolver step cap; 0 = default (10 n)
    bool clamp_ratios = true;  // SCORE only; the directed ratios always clamp
};

/// SCORE: k-means on the entry-wise ratios of the K leading adjacency
/// eigenvectors.  Requires a connected undirected graph and K >= 2.
/// Deterministic for fixed (graph, K, seed).
PartitionLabels score(const Graph& g, int K, std::uint64_t seed,
                      const DetectOptions& opts = {});

/// D-SCORE for digraphs.  Clusters the citer/citee giant-component overlap
/// by k-means on the concatenated left/right singular-vector ratios, then
/// assigns the remaining three node subsets by nearest ratio center
/// (Euclidean, ties to the smaller community id) or, for nodes outside
/// both projections, by the largest number of weak-edges into the already
/// labeled communities.  Requires a weakly connected digraph and K >= 2;
/// an empty citer/citee overlap is an unrecoverable degeneracy.
PartitionLabels dscore(const Graph& g, int K, std::uint64_t seed,
                       const DetectOptions& opts = {});

/// Newman spectral clustering on the modularity matrix B = A - d d^T/(2m):
/// sign split of the leading eigenvector for K = 2, recursive bisection by
/// largest modularity gain for K >= 3.  Stops early (k_effective < K) when
/// no positive-gain split exists.
PartitionLabels nsc(const Graph& g, int K, const DetectOptions& opts = {});

/// Per-community node counts, descending.
std::vector<int> community_sizes(const PartitionLabels& p);

/// Cross-tabulation of two partitions over a common node universe.
/// map_p[i] is the universe index of p's node i (injective), same for q.
/// Cell (a, b) counts universe nodes labeled a by p and b by q; the last
/// row and column ("other") tally nodes covered by only one partition, and
/// the corner cell counts nodes covered by neither.
std::vector<std::vector<long long>> intersection_table(const PartitionLabels& p,
                                                       std::span<const int> map_p,
                                                       const PartitionLabels& q,
                                                       std::span<const int> map_q,
                                                       int universe_size);

}  // namespace specnet

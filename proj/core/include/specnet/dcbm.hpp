#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specnet/community.hpp"
#include "specnet/graph.hpp"
#include "specnet/linalg.hpp"

namespace specnet {

/// Degree-corrected block model parameters.  Undirected edge probability
/// is theta(i) theta(j) P[k,l] for nodes in blocks k and l; the directed
/// variant uses theta(i) delta(j) P[k,l] with theta the citer and delta
/// the citee heterogeneity.
struct DcbmParams {
    int K = 0;
    DenseMatrix P;              // K x K, nonnegative; symmetric when undirected
    std::vector<double> theta;  // size n, positive
    std::vector<double> delta;  // size n when directed, else empty
    std::vector<int> labels;    // size n, planted block of each node
    bool directed = false;
};

/// Validates shapes, positivity, symmetry (undirected) and that every pair
/// probability is <= 1.  Probabilities above 1 are a hard error, never
/// clipped.  Throws std::invalid_argument.
void validate(const DcbmParams& params);

/// n x n matrix of pair probabilities (diagonal zero).  Intended for small
/// n (tests and diagnostics).
DenseMatrix edge_probability_matrix(const DcbmParams& params);

/// Samples each unordered pair independently with its model probability.
/// Identical (params, seed) yield identical graphs.
std::pair<Graph, PartitionLabels> sample_undirected(const DcbmParams& params, std::uint64_t seed);

/// Samples each ordered pair i != j independently with
/// theta(i) delta(j) P[k,l].
std::pair<Graph, PartitionLabels> sample_directed(const DcbmParams& params, std::uint64_t seed);

/// Convenience builder: n nodes in K equal blocks (node i in block
/// i * K / n), P with `p_within` on the diagonal and `p_between` off it,
/// theta (and delta, when directed) drawn uniformly from
/// [theta_low, theta_high] with the given seed.
DcbmParams equal_block_params(int n, int K, double p_within, double p_between, double theta_low,
                              double theta_high, bool directed, std::uint64_t seed);

}  // namespace specnet

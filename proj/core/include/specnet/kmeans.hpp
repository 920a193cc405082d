#pragma once

#include <cstdint>
#include <vector>

#include "specnet/linalg.hpp"

namespace specnet {

struct KMeansResult {
    std::vector<int> labels;   // point -> cluster in [0, k)
    DenseMatrix centers;       // k x dim; row c is the mean of cluster c
    double inertia = 0.0;      // sum of squared distances to assigned centers

    /// Inertia after each Lloyd update of the winning restart
    /// (non-increasing).
    std::vector<double> iteration_inertia;
};

/// Lloyd's algorithm with k-means++ seeding, `restarts` independent runs
/// and deterministic tie-breaking.  Per-restart randomness derives from
/// (seed, restart index), so identical arguments give bitwise-identical
/// results and restarts could run in any order.  Empty clusters are
/// repaired by moving in the point farthest from its current center.
/// The best run wins by lowest inertia, ties by lowest restart index.
///
/// Throws std::invalid_argument if k < 1, k > number of points,
/// restarts < 1, or any coordinate is non-finite.
KMeansResult kmeans(const DenseMatrix& points, int k, int restarts, std::uint64_t seed);

}  // namespace specnet

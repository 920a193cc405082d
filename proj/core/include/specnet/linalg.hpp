#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "specnet/graph.hpp"

namespace specnet {

/// Minimal row-major dense matrix used for spectral embeddings, ratio
/// matrices and k-means inputs.  Not a linear-algebra type; just storage.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
    std::span<const double> row(int i) const {
        return {data.data() + static_cast<std::size_t>(i) * cols, static_cast<std::size_t>(cols)};
    }
};

/// Matrix-free linear operator.  `apply` computes y = A x; `apply_t`
/// computes y = A^T x and is required only for nonsymmetric use (SVD).
struct LinOp {
    int rows = 0;
    int cols = 0;
    std::function<void(std::span<const double>, std::span<double>)> apply;
    std::function<void(std::span<const double>, std::span<double>)> apply_t;
};

/// Adjacency operator of a graph: symmetric for undirected input, with
/// apply_t wired to the in-neighbor lists for directed input.
LinOp adjacency_operator(const Graph& g);

/// Leading eigenpairs or singular triplets.
///
/// values are sorted by descending magnitude (singular values are
/// nonnegative and descending).  Vectors are unit norm; for symmetric
/// input right_vectors == left_vectors.  Sign convention: each (left)
/// vector's entry of largest absolute value is positive; right singular
/// vectors take the sign forced by A v = sigma u.
struct SpectrumResult {
    std::vector<double> values;
    std::vector<std::vector<double>> left_vectors;
    std::vector<std::vector<double>> right_vectors;
};

/// Top-k eigenpairs of a symmetric operator by descending |lambda|,
/// computed by Lanczos with full reorthogonalization and a deterministic
/// start vector.  Symmetry is spot-checked on a random probe; residuals
/// satisfy ||A v - lambda v|| <= tol * ||A||.
///
/// max_iter == 0 selects the default cap of 10 * n Lanczos steps.
/// Throws std::invalid_argument for k out of range and std::runtime_error
/// (with the best residual) on non-convergence.
SpectrumResult top_k_eigs_symmetric(const LinOp& A, int k, double tol = 1e-10, int max_iter = 0);

/// Top-k singular triplets of a general operator via Lanczos on the
/// symmetric augmentation [[0, A], [A^T, 0]].  Same conventions and error
/// behavior as top_k_eigs_symmetric; residual bounds hold for both
/// ||A v - sigma u|| and ||A^T u - sigma v||.
SpectrumResult top_k_svd(const LinOp& A, int k, double tol = 1e-10, int max_iter = 0);

/// Leading spectrum for scree plots: top-k eigenvalues (symmetric) or
/// singular values (otherwise), in descending magnitude.
std::vector<double> spectrum_for_scree(const LinOp& A, int k, bool symmetric,
                                       double tol = 1e-10, int max_iter = 0);

}  // namespace specnet

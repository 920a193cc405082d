#include <doctest.h>

#include <cmath>

#include "specnet/dcbm.hpp"
#include "specnet/rng.hpp"

using namespace specnet;

namespace {

DcbmParams er_params(int n, double p) {
    DcbmParams params;
    params.K = 1;
    params.P = DenseMatrix(1, 1);
    params.P.at(0, 0) = p;
    params.theta.assign(n, 1.0);
    params.labels.assign(n, 0);
    return params;
}

}  // namespace

TEST_CASE("validation") {
    DcbmParams params = er_params(10, 0.5);
    validate(params);

    DcbmParams too_hot = er_params(10, 0.5);
    too_hot.theta.assign(10, 2.0);  // 2 * 2 * 0.5 = 2 > 1
    CHECK_THROWS_AS(validate(too_hot), std::invalid_argument);

    DcbmParams asym = er_params(4, 0.2);
    asym.K = 2;
    asym.P = DenseMatrix(2, 2);
    asym.P.at(0, 1) = 0.3;  // not symmetric, undirected
    asym.labels = {0, 0, 1, 1};
    CHECK_THROWS_AS(validate(asym), std::invalid_argument);

    DcbmParams negative = er_params(4, -0.1);
    CHECK_THROWS_AS(validate(negative), std::invalid_argument);

    DcbmParams stray_delta = er_params(4, 0.2);
    stray_delta.delta.assign(4, 1.0);
    CHECK_THROWS_AS(validate(stray_delta), std::invalid_argument);
}

TEST_CASE("theta = 1, K = 1 collapses to Erdos-Renyi") {
    const int n = 80;
    const double p = 0.2;
    const double pairs = n * (n - 1) / 2.0;
    const double sigma = std::sqrt(pairs * p * (1 - p));
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
        auto [g, labels] = sample_undirected(er_params(n, p), seed);
        CHECK(std::abs(static_cast<double>(g.edge_count()) - pairs * p) < 4.0 * sigma);
    }
}

TEST_CASE("P = 0 yields the empty graph") {
    auto [g, labels] = sample_undirected(er_params(30, 0.0), 9);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("directed Erdos-Renyi in-degree mean") {
    const int n = 60;
    const double p = 0.15;
    DcbmParams params = er_params(n, p);
    params.directed = true;
    params.delta.assign(n, 1.0);
    double mean_in = 0.0;
    const int reps = 20;
    for (int rep = 0; rep < reps; ++rep) {
        auto [g, labels] = sample_directed(params, 100 + rep);
        for (int v = 0; v < n; ++v) mean_in += g.in_degree(v);
    }
    mean_in /= static_cast<double>(reps) * n;
    CHECK(mean_in == doctest::Approx(p * (n - 1)).epsilon(0.05));
}

TEST_CASE("a nearly silent citee block receives almost no citations") {
    const int n = 60;
    DcbmParams params;
    params.K = 2;
    params.directed = true;
    params.P = DenseMatrix(2, 2);
    for (double& v : params.P.data) v = 0.3;
    params.labels.resize(n);
    for (int i = 0; i < n; ++i) params.labels[i] = i < n / 2 ? 0 : 1;
    params.theta.assign(n, 1.0);
    params.delta.resize(n);
    for (int i = 0; i < n; ++i) params.delta[i] = i < n / 2 ? 1.0 : 1e-4;

    // expected in-degree of a block-1 node: sum_i theta_i * delta_j * P = (n-1) * 0.3 * 1e-4
    double total_block1_in = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        auto [g, labels] = sample_directed(params, 500 + rep);
        for (int v = n / 2; v < n; ++v) total_block1_in += g.in_degree(v);
    }
    CHECK(total_block1_in <= 3.0);  // ~0.05 expected over all reps
}

TEST_CASE("per-node expected degree matches the closed form") {
    DcbmParams params = equal_block_params(600, 3, 0.2, 0.02, 0.5, 1.5, false, 77);
    const int n = 600;
    std::vector<double> expected(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            expected[i] += params.theta[i] * params.theta[j] *
                           params.P.at(params.labels[i], params.labels[j]);
        }
    }
    std::vector<double> mean(n, 0.0);
    const int reps = 50;
    for (int rep = 0; rep < reps; ++rep) {
        auto [g, labels] = sample_undirected(params, 900 + rep);
        for (int v = 0; v < n; ++v) mean[v] += g.degree(v);
    }
    double total_mean = 0.0, total_expected = 0.0;
    for (int v = 0; v < n; ++v) {
        mean[v] /= reps;
        total_mean += mean[v];
        total_expected += expected[v];
    }
    CHECK(total_mean / n == doctest::Approx(total_expected / n).epsilon(0.05));
}

TEST_CASE("determinism: identical (params, seed) give identical graphs") {
    DcbmParams params = equal_block_params(100, 2, 0.3, 0.05, 0.5, 1.5, false, 3);
    auto [g1, l1] = sample_undirected(params, 21);
    auto [g2, l2] = sample_undirected(params, 21);
    CHECK(g1.edges() == g2.edges());
    auto [g3, l3] = sample_undirected(params, 22);
    CHECK(g1.edges() != g3.edges());
}

TEST_CASE("scaling theta by c and P by 1/c^2 leaves the probabilities unchanged") {
    DcbmParams params = equal_block_params(40, 2, 0.3, 0.05, 0.5, 1.5, false, 5);
    DenseMatrix base = edge_probability_matrix(params);

    const double c = 1.7;
    DcbmParams scaled = params;
    for (double& t : scaled.theta) t *= c;
    for (double& p : scaled.P.data) p /= c * c;
    DenseMatrix rescaled = edge_probability_matrix(scaled);
    for (std::size_t i = 0; i < base.data.size(); ++i) {
        CHECK(std::abs(base.data[i] - rescaled.data[i]) < 1e-12);
    }
}

TEST_CASE("Monte-Carlo mean adjacency approaches the probability matrix") {
    DcbmParams params = equal_block_params(40, 2, 0.4, 0.05, 0.5, 1.4, false, 8);
    DenseMatrix probs = edge_probability_matrix(params);
    const int n = 40;
    const int reps = 200;
    DenseMatrix mean(n, n);
    for (int rep = 0; rep < reps; ++rep) {
        auto [g, labels] = sample_undirected(params, 4000 + rep);
        for (const auto& [i, j] : g.edges()) {
            mean.at(i, j) += 1.0;
            mean.at(j, i) += 1.0;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double p = probs.at(i, j);
            double se = std::sqrt(std::max(p * (1 - p), 1e-12) / reps);
            CHECK(std::abs(mean.at(i, j) / reps - p) <= 4.0 * se + 1e-9);
        }
    }
}

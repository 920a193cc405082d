#include "specnet/dcbm.hpp"

#include <algorithm>
#include <stdexcept>

#include "specnet/rng.hpp"

namespace specnet {

namespace {

// Largest pair product of heterogeneity weights between blocks a and b:
// max_a * max_b across blocks, the top two values within one block.
double max_pair_product(const std::vector<double>& top2_a, const std::vector<double>& top2_b,
                        bool same_block) {
    if (same_block) return top2_a[0] * top2_a[1];
    return top2_a[0] * top2_b[0];
}

std::vector<std::vector<double>> top2_by_block(const std::vector<double>& weights,
                                               const std::vector<int>& labels, int K) {
    std::vector<std::vector<double>> top2(K, {0.0, 0.0});
    for (std::size_t i = 0; i < weights.size(); ++i) {
        auto& t = top2[labels[i]];
        if (weights[i] > t[0]) {
            t[1] = t[0];
            t[0] = weights[i];
        } else if (weights[i] > t[1]) {
            t[1] = weights[i];
        }
    }
    return top2;
}

}  // namespace

void validate(const DcbmParams& params) {
    const int n = static_cast<int>(params.theta.size());
    const int K = params.K;
    if (K < 1) throw std::invalid_argument("dcbm: K must be >= 1");
    if (params.P.rows != K || params.P.cols != K) {
        throw std::invalid_argument("dcbm: P must be K x K");
    }
    if (static_cast<int>(params.labels.size()) != n) {
        throw std::invalid_argument("dcbm: labels must have one entry per node");
    }
    for (int l : params.labels) {
        if (l < 0 || l >= K) throw std::invalid_argument("dcbm: label outside [0, K)");
    }
    for (double t : params.theta) {
        if (!(t > 0.0)) throw std::invalid_argument("dcbm: theta entries must be positive");
    }
    if (params.directed) {
        if (params.delta.size() != params.theta.size()) {
            throw std::invalid_argument("dcbm: directed model needs delta per node");
        }
        for (double d : params.delta) {
            if (!(d > 0.0)) throw std::invalid_argument("dcbm: delta entries must be positive");
        }
    } else if (!params.delta.empty()) {
        throw std::invalid_argument("dcbm: delta is only meaningful for the directed model");
    }
    for (int a = 0; a < K; ++a) {
        for (int b = 0; b < K; ++b) {
            double p = params.P.at(a, b);
            if (p < 0.0) throw std::invalid_argument("dcbm: P entries must be nonnegative");
            if (!params.directed && p != params.P.at(b, a)) {
                throw std::invalid_argument("dcbm: P must be symmetric for the undirected model");
            }
        }
    }

    const auto top_theta = top2_by_block(params.theta, params.labels, K);
    const auto top_other = params.directed ? top2_by_block(params.delta, params.labels, K)
                                           : top_theta;
    for (int a = 0; a < K; ++a) {
        for (int b = 0; b < K; ++b) {
            double weight = params.directed
                                ? top_theta[a][0] * top_other[b][0]
                                : max_pair_product(top_theta[a], top_theta[b], a == b);
            if (params.directed && a == b) {
                // Ordered pairs within one block exclude i == j; the exact
                // bound would need the joint argmax, so use the safe product.
                weight = top_theta[a][0] * top_other[a][0];
            }
            if (weight * params.P.at(a, b) > 1.0) {
                throw std::invalid_argument("dcbm: edge probability exceeds 1 for blocks " +
                                            std::to_string(a) + ", " + std::to_string(b));
            }
        }
    }
}

DenseMatrix edge_probability_matrix(const DcbmParams& params) {
    validate(params);
    const int n = static_cast<int>(params.theta.size());
    DenseMatrix probs(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double w = params.directed ? params.theta[i] * params.delta[j]
                                       : params.theta[i] * params.theta[j];
            probs.at(i, j) = w * params.P.at(params.labels[i], params.labels[j]);
        }
    }
    return probs;
}

std::pair<Graph, PartitionLabels> sample_undirected(const DcbmParams& params,
                                                    std::uint64_t seed) {
    if (params.directed) throw std::invalid_argument("sample_undirected: params are directed");
    validate(params);
    const int n = static_cast<int>(params.theta.size());
    Rng rng(seed);
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double p = params.theta[i] * params.theta[j] *
                       params.P.at(params.labels[i], params.labels[j]);
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
        }
    }
    PartitionLabels planted{params.labels, params.K, params.K};
    planted.k_effective = 1 + *std::max_element(params.labels.begin(), params.labels.end());
    return {Graph(n, false, edges), std::move(planted)};
}

std::pair<Graph, PartitionLabels> sample_directed(const DcbmParams& params, std::uint64_t seed) {
    if (!params.directed) throw std::invalid_argument("sample_directed: params are undirected");
    validate(params);
    const int n = static_cast<int>(params.theta.size());
    Rng rng(seed);
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double p = params.theta[i] * params.delta[j] *
                       params.P.at(params.labels[i], params.labels[j]);
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
        }
    }
    PartitionLabels planted{params.labels, params.K, params.K};
    planted.k_effective = 1 + *std::max_element(params.labels.begin(), params.labels.end());
    return {Graph(n, true, edges), std::move(planted)};
}

DcbmParams equal_block_params(int n, int K, double p_within, double p_between, double theta_low,
                              double theta_high, bool directed, std::uint64_t seed) {
    if (n < 1 || K < 1 || K > n) throw std::invalid_argument("equal_block_params: bad n or K");
    DcbmParams params;
    params.K = K;
    params.directed = directed;
    params.P = DenseMatrix(K, K);
    for (int a = 0; a < K; ++a) {
        for (int b = 0; b < K; ++b) params.P.at(a, b) = a == b ? p_within : p_between;
    }
    params.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        params.labels[i] = static_cast<int>((static_cast<long long>(i) * K) / n);
    }
    Rng rng = Rng::derive(seed, 0x7e7aULL);
    params.theta.resize(n);
    for (double& t : params.theta) t = rng.uniform(theta_low, theta_high);
    if (directed) {
        params.delta.resize(n);
        for (double& d : params.delta) d = rng.uniform(theta_low, theta_high);
    }
    validate(params);
    return params;
}

}  // namespace specnet

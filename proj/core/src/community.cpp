#include "specnet/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "specnet/kmeans.hpp"

namespace specnet {

namespace {

DenseMatrix columns_from(const std::vector<std::vector<double>>& vectors, int n) {
    DenseMatrix m(n, static_cast<int>(vectors.size()));
    for (int j = 0; j < m.cols; ++j) {
        for (int i = 0; i < n; ++i) m.at(i, j) = vectors[j][i];
    }
    return m;
}

int compact_labels(std::vector<int>& labels) {
    std::vector<int> remap;
    for (int& l : labels) {
        auto it = std::find(remap.begin(), remap.end(), l);
        if (it == remap.end()) {
            remap.push_back(l);
            l = static_cast<int>(remap.size()) - 1;
        } else {
            l = static_cast<int>(it - remap.begin());
        }
    }
    return static_cast<int>(remap.size());
}

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

void check_k(int K, int n) {
    if (K < 2) throw std::invalid_argument("community detection requires K >= 2");
    if (K > n) throw std::invalid_argument("K exceeds the node count");
}

}  // namespace

RatioMatrix entrywise_ratios(const DenseMatrix& vectors,
                             const std::vector<std::uint8_t>& support, double clamp) {
    const int n = vectors.rows;
    const int K = vectors.cols;
    if (K < 2) throw std::invalid_argument("entrywise_ratios needs at least two vectors");
    if (static_cast<int>(support.size()) != n) {
        throw std::invalid_argument("support size must match the vector length");
    }
    RatioMatrix out;
    out.entries = DenseMatrix(n, K - 1);
    out.support = support;
    for (int i = 0; i < n; ++i) {
        if (!support[i]) continue;
        const double den = vectors.at(i, 0);
        for (int k = 0; k + 1 < K; ++k) {
            const double num = vectors.at(i, k + 1);
            double r;
            if (clamp > 0.0) {
                double sign = (num == 0.0) ? 0.0 : (std::signbit(num) == std::signbit(den) ? 1.0 : -1.0);
                double mag = (den == 0.0) ? clamp
                                          : std::min(std::abs(num) / std::abs(den), clamp);
                r = sign * mag;
            } else {
                r = num / den;
            }
            out.entries.at(i, k) = r;
        }
    }
    return out;
}

PartitionLabels score(const Graph& g, int K, std::uint64_t seed, const DetectOptions& opts) {
    if (g.directed()) throw std::invalid_argument("score requires an undirected graph");
    const int n = g.node_count();
    check_k(K, n);
    if (connected_components(g).count() != 1) {
        throw std::invalid_argument("score requires a connected graph; extract the giant component");
    }

    SpectrumResult eig = top_k_eigs_symmetric(adjacency_operator(g), K, opts.tol, opts.max_iter);
    DenseMatrix vecs = columns_from(eig.left_vectors, n);
    const double clamp = opts.clamp_ratios ? std::log(static_cast<double>(n)) : 0.0;
    RatioMatrix ratios = entrywise_ratios(vecs, std::vector<std::uint8_t>(n, 1), clamp);

    KMeansResult km = kmeans(ratios.entries, K, opts.restarts, seed);
    PartitionLabels out;
    out.labels = std::move(km.labels);
    out.k_requested = K;
    out.k_effective = compact_labels(out.labels);
    return out;
}

PartitionLabels dscore(const Graph& g, int K, std::uint64_t seed, const DetectOptions& opts) {
    if (!g.directed()) throw std::invalid_argument("dscore requires a directed graph");
    const int n = g.node_count();
    check_k(K, n);
    if (weakly_connected_components(g).count() != 1) {
        throw std::invalid_argument(
            "dscore requires a weakly connected graph; extract the giant component");
    }

    const Graph citer = citer_network(g);
    const Graph citee = citee_network(g);
    const std::vector<int> n1 = largest_component_nodes(citer);
    const std::vector<int> n2 = largest_component_nodes(citee);
    std::vector<std::uint8_t> in1(n, 0), in2(n, 0);
    for (int v : n1) in1[v] = 1;
    for (int v : n2) in2[v] = 1;

    std::vector<int> overlap;
    for (int v = 0; v < n; ++v) {
        if (in1[v] && in2[v]) overlap.push_back(v);
    }
    if (static_cast<int>(overlap.size()) < K) {
        throw std::runtime_error(
            "dscore degeneracy: the citer/citee giant components overlap in " +
            std::to_string(overlap.size()) + " nodes, fewer than K");
    }

    SpectrumResult svd = top_k_svd(adjacency_operator(g), K, opts.tol, opts.max_iter);
    const double clamp = std::log(static_cast<double>(n));
    RatioMatrix left = entrywise_ratios(columns_from(svd.left_vectors, n), in1, clamp);
    RatioMatrix right = entrywise_ratios(columns_from(svd.right_vectors, n), in2, clamp);
    const int d = K - 1;

    // Step 1: k-means on [R_left, R_right] over the overlap.
    DenseMatrix points(static_cast<int>(overlap.size()), 2 * d);
    for (std::size_t r = 0; r < overlap.size(); ++r) {
        for (int k = 0; k < d; ++k) {
            points.at(static_cast<int>(r), k) = left.entries.at(overlap[r], k);
            points.at(static_cast<int>(r), d + k) = right.entries.at(overlap[r], k);
        }
    }
    KMeansResult km = kmeans(points, K, opts.restarts, seed);

    std::vector<int> labels(n, -1);
    for (std::size_t r = 0; r < overlap.size(); ++r) labels[overlap[r]] = km.labels[r];

    // Steps 2-3: nearest community center (row means of the restricted
    // ratio matrices, which are exactly the center blocks), ties to the
    // smaller community id.
    auto assign_nearest = [&](int node, const DenseMatrix& ratios, int block_offset) {
        int arg = 0;
        double best = std::numeric_limits<double>::infinity();
        for (int c = 0; c < K; ++c) {
            std::span<const double> center =
                km.centers.row(c).subspan(block_offset, static_cast<std::size_t>(d));
            double dist = sq_dist(ratios.row(node), center);
            if (dist < best) {
                best = dist;
                arg = c;
            }
        }
        labels[node] = arg;
    };
    for (int v = 0; v < n; ++v) {
        if (in1[v] && !in2[v]) assign_nearest(v, left.entries, 0);
    }
    for (int v = 0; v < n; ++v) {
        if (in2[v] && !in1[v]) assign_nearest(v, right.entries, d);
    }

    // Step 4: everything else joins the community with the most weak-edges
    // (edges of the symmetrized graph) into already-labeled nodes.
    const Graph weak = symmetrize(g);
    for (int v = 0; v < n; ++v) {
        if (in1[v] || in2[v]) continue;
        std::vector<long long> count(K, 0);
        for (int w : weak.neighbors(v)) {
            if (in1[w] || in2[w]) ++count[labels[w]];
        }
        long long most = 0;
        int arg = -1;
        for (int c = 0; c < K; ++c) {
            if (count[c] > most) {
                most = count[c];
                arg = c;
            }
        }
        if (arg < 0) {
            throw std::runtime_error("dscore: node " + std::to_string(v) +
                                     " has no weak-edge into the labeled subsets");
        }
        labels[v] = arg;
    }

    PartitionLabels out;
    out.labels = std::move(labels);
    out.k_requested = K;
    out.k_effective = compact_labels(out.labels);
    return out;
}

namespace {

// One candidate bisection of a node group by the leading eigenvector of
// the group-restricted generalized modularity matrix
//   B_ij - delta_ij * sum_{k in g} B_ik,   B = A - d d^T / (2m),
// with degrees taken from the full graph.
struct Bisection {
    double gain = 0.0;  // modularity change; <= 0 means "do not split"
    std::vector<int> side_a, side_b;
};

Bisection best_bisection(const Graph& g, const std::vector<int>& group, double m2,
                         const DetectOptions& opts) {
    Bisection result;
    const int s = static_cast<int>(group.size());
    if (s < 2) return result;

    std::vector<int> pos(g.node_count(), -1);
    for (int i = 0; i < s; ++i) pos[group[i]] = i;

    std::vector<std::vector<int>> sub_adj(s);
    std::vector<double> deg(s), k_in(s, 0.0);
    double dsum = 0.0;
    for (int i = 0; i < s; ++i) {
        deg[i] = g.degree(group[i]);
        dsum += deg[i];
        for (int w : g.neighbors(group[i])) {
            if (pos[w] >= 0) {
                sub_adj[i].push_back(pos[w]);
                k_in[i] += 1.0;
            }
        }
    }

    auto apply_b = [&](std::span<const double> x, std::span<double> y) {
        double ddot = 0.0;
        for (int i = 0; i < s; ++i) ddot += deg[i] * x[i];
        for (int i = 0; i < s; ++i) {
            double ax = 0.0;
            for (int j : sub_adj[i]) ax += x[j];
            y[i] = ax - deg[i] * ddot / m2 - x[i] * (k_in[i] - deg[i] * dsum / m2);
        }
    };

    // Gershgorin-style shift making the operator's top eigenvalue the one
    // of largest magnitude.
    double shift = 0.0;
    for (int i = 0; i < s; ++i) {
        double row = k_in[i] + deg[i] * dsum / m2 + std::abs(k_in[i] - deg[i] * dsum / m2);
        shift = std::max(shift, row);
    }
    shift += 1.0;

    LinOp shifted;
    shifted.rows = s;
    shifted.cols = s;
    shifted.apply = [&](std::span<const double> x, std::span<double> y) {
        apply_b(x, y);
        for (int i = 0; i < s; ++i) y[i] += shift * x[i];
    };

    SpectrumResult eig = top_k_eigs_symmetric(shifted, 1, opts.tol, opts.max_iter);
    if (eig.values[0] - shift <= 1e-12) return result;

    std::vector<double> sign_vec(s);
    for (int i = 0; i < s; ++i) sign_vec[i] = eig.left_vectors[0][i] >= 0.0 ? 1.0 : -1.0;
    std::vector<double> bs(s);
    apply_b(sign_vec, bs);
    double gain = 0.0;
    for (int i = 0; i < s; ++i) gain += sign_vec[i] * bs[i];
    gain /= 2.0 * m2;
    if (gain <= 1e-12) return result;

    for (int i = 0; i < s; ++i) {
        (sign_vec[i] > 0.0 ? result.side_a : result.side_b).push_back(group[i]);
    }
    if (result.side_a.empty() || result.side_b.empty()) return Bisection{};
    result.gain = gain;
    return result;
}

}  // namespace

PartitionLabels nsc(const Graph& g, int K, const DetectOptions& opts) {
    if (g.directed()) throw std::invalid_argument("nsc requires an undirected graph");
    const int n = g.node_count();
    check_k(K, n);
    if (connected_components(g).count() != 1) {
        throw std::invalid_argument("nsc requires a connected graph; extract the giant component");
    }

    double m2 = 0.0;
    for (int v = 0; v < n; ++v) m2 += g.degree(v);
    if (m2 == 0.0) throw std::invalid_argument("nsc requires at least one edge");

    std::vector<std::vector<int>> communities;
    {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        communities.push_back(std::move(all));
    }

    while (static_cast<int>(communities.size()) < K) {
        double best_gain = 0.0;
        int best_ci = -1;
        Bisection best;
        for (int ci = 0; ci < static_cast<int>(communities.size()); ++ci) {
            Bisection b = best_bisection(g, communities[ci], m2, opts);
            if (b.gain > best_gain) {
                best_gain = b.gain;
                best_ci = ci;
                best = std::move(b);
            }
        }
        if (best_ci < 0) break;  // no positive-gain split remains

        // The side holding the smallest node keeps the split community's id.
        if (std::min(best.side_a.front(), best.side_b.front()) == best.side_b.front()) {
            std::swap(best.side_a, best.side_b);
        }
        communities[best_ci] = std::move(best.side_a);
        communities.push_back(std::move(best.side_b));
    }

    PartitionLabels out;
    out.labels.assign(n, 0);
    for (int ci = 0; ci < static_cast<int>(communities.size()); ++ci) {
        for (int v : communities[ci]) out.labels[v] = ci;
    }
    out.k_requested = K;
    out.k_effective = static_cast<int>(communities.size());
    return out;
}

std::vector<int> community_sizes(const PartitionLabels& p) {
    std::vector<int> sizes(p.k_effective, 0);
    for (int l : p.labels) {
        if (l < 0 || l >= p.k_effective) {
            throw std::invalid_argument("label outside [0, k_effective)");
        }
        ++sizes[l];
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::vector<std::vector<long long>> intersection_table(const PartitionLabels& p,
                                                       std::span<const int> map_p,
                                                       const PartitionLabels& q,
                                                       std::span<const int> map_q,
                                                       int universe_size) {
    if (map_p.size() != p.labels.size() || map_q.size() != q.labels.size()) {
        throw std::invalid_argument("index maps must match the label vectors");
    }
    auto project = [universe_size](std::span<const int> map, std::span<const int> labels) {
        std::vector<int> onto(universe_size, -1);
        for (std::size_t i = 0; i < map.size(); ++i) {
            int u = map[i];
            if (u < 0 || u >= universe_size) {
                throw std::invalid_argument("index map leaves the universe");
            }
            if (onto[u] != -1) throw std::invalid_argument("index map is not injective");
            onto[u] = labels[i];
        }
        return onto;
    };
    const std::vector<int> pu = project(map_p, p.labels);
    const std::vector<int> qu = project(map_q, q.labels);

    std::vector<std::vector<long long>> table(
        p.k_effective + 1, std::vector<long long>(q.k_effective + 1, 0));
    for (int u = 0; u < universe_size; ++u) {
        int a = pu[u] == -1 ? p.k_effective : pu[u];
        int b = qu[u] == -1 ? q.k_effective : qu[u];
        ++table[a][b];
    }
    return table;
}

}  // namespace specnet

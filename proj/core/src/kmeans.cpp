#include "specnet/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specnet/rng.hpp"

namespace specnet {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

// k-means++ seeding: first center uniform, then proportional to the
// squared distance from the nearest chosen center.
DenseMatrix seed_centers(const DenseMatrix& points, int k, Rng& rng) {
    const int n = points.rows;
    const int dim = points.cols;
    DenseMatrix centers(k, dim);
    std::vector<double> d2(n, std::numeric_limits<double>::infinity());

    int first = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
    for (int j = 0; j < dim; ++j) centers.at(0, j) = points.at(first, j);

    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], sq_dist(points.row(i), centers.row(c - 1)));
            total += d2[i];
        }
        int pick;
        if (total > 0.0) {
            double target = rng.uniform01() * total;
            double acc = 0.0;
            pick = n - 1;
            for (int i = 0; i < n; ++i) {
                acc += d2[i];
                if (acc >= target) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
        }
        for (int j = 0; j < dim; ++j) centers.at(c, j) = points.at(pick, j);
    }
    return centers;
}

struct Run {
    std::vector<int> labels;
    DenseMatrix centers;
    double inertia = std::numeric_limits<double>::infinity();
    std::vector<double> history;
};

Run lloyd(const DenseMatrix& points, int k, Rng rng) {
    const int n = points.rows;
    const int dim = points.cols;
    Run run;
    run.centers = seed_centers(points, k, rng);
    run.labels.assign(n, -1);
    std::vector<int> counts(k, 0);

    constexpr int kMaxIterations = 500;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        // Assignment; ties go to the lowest cluster id.
        bool changed = false;
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < n; ++i) {
            int arg = 0;
            double best = sq_dist(points.row(i), run.centers.row(0));
            for (int c = 1; c < k; ++c) {
                double d = sq_dist(points.row(i), run.centers.row(c));
                if (d < best) {
                    best = d;
                    arg = c;
                }
            }
            if (run.labels[i] != arg) changed = true;
            run.labels[i] = arg;
            ++counts[arg];
        }

        // Empty-cluster repair: move in the point farthest from its center,
        // never draining a cluster below one point.
        bool repaired = false;
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            int far = -1;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (counts[run.labels[i]] < 2) continue;
                double d = sq_dist(points.row(i), run.centers.row(run.labels[i]));
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            if (far < 0) throw std::logic_error("kmeans: cannot repair empty cluster");
            --counts[run.labels[far]];
            run.labels[far] = c;
            ++counts[c];
            repaired = true;
        }

        // Update step: centers become cluster means.
        std::fill(run.centers.data.begin(), run.centers.data.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < dim; ++j) run.centers.at(run.labels[i], j) += points.at(i, j);
        }
        for (int c = 0; c < k; ++c) {
            for (int j = 0; j < dim; ++j) run.centers.at(c, j) /= counts[c];
        }

        double inertia = 0.0;
        for (int i = 0; i < n; ++i) {
            inertia += sq_dist(points.row(i), run.centers.row(run.labels[i]));
        }
        run.history.push_back(inertia);
        run.inertia = inertia;

        if (!changed && !repaired) break;
    }
    return run;
}

}  // namespace

KMeansResult kmeans(const DenseMatrix& points, int k, int restarts, std::uint64_t seed) {
    const int n = points.rows;
    if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
    if (k > n) throw std::invalid_argument("kmeans: k exceeds the number of points");
    if (restarts < 1) throw std::invalid_argument("kmeans: restarts must be >= 1");
    for (double v : points.data) {
        if (!std::isfinite(v)) throw std::invalid_argument("kmeans: non-finite coordinate");
    }

    Run best;
    for (int r = 0; r < restarts; ++r) {
        Run run = lloyd(points, k, Rng::derive(seed, static_cast<std::uint64_t>(r)));
        if (run.inertia < best.inertia) best = std::move(run);
    }

    KMeansResult out;
    out.labels = std::move(best.labels);
    out.centers = std::move(best.centers);
    out.inertia = best.inertia;
    out.iteration_inertia = std::move(best.history);
    return out;
}

}  // namespace specnet

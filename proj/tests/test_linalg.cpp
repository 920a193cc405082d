#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numeric>

#include "specnet/linalg.hpp"
#include "specnet/rng.hpp"
#include "support/oracles.hpp"

using namespace specnet;

namespace {

LinOp dense_operator(const DenseMatrix& m) {
    LinOp op;
    op.rows = m.rows;
    op.cols = m.cols;
    op.apply = [&m](std::span<const double> x, std::span<double> y) {
        for (int i = 0; i < m.rows; ++i) {
            double s = 0.0;
            for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * x[j];
            y[i] = s;
        }
    };
    op.apply_t = [&m](std::span<const double> x, std::span<double> y) {
        for (int j = 0; j < m.cols; ++j) {
            double s = 0.0;
            for (int i = 0; i < m.rows; ++i) s += m.at(i, j) * x[i];
            y[j] = s;
        }
    };
    return op;
}

DenseMatrix random_binary(int rows, int cols, double p, bool symmetric, Rng& rng) {
    DenseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = symmetric ? i : 0; j < cols; ++j) {
            double v = rng.bernoulli(p) ? 1.0 : 0.0;
            m.at(i, j) = v;
            if (symmetric) m.at(j, i) = v;
        }
    }
    return m;
}

double vector_diff_up_to_sign(std::span<const double> a, std::span<const double> b) {
    double plus = 0.0, minus = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        plus = std::max(plus, std::abs(a[i] - b[i]));
        minus = std::max(minus, std::abs(a[i] + b[i]));
    }
    return std::min(plus, minus);
}

}  // namespace

TEST_CASE("eigenpairs of the 2-cycle adjacency") {
    DenseMatrix a(2, 2);
    a.at(0, 1) = a.at(1, 0) = 1.0;
    SpectrumResult r = top_k_eigs_symmetric(dense_operator(a), 2);
    CHECK(r.values[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.values[1] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(r.left_vectors[0][0] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(r.left_vectors[0][1] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("Perron pair of the complete graph K5") {
    DenseMatrix a(5, 5);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) a.at(i, j) = i == j ? 0.0 : 1.0;
    }
    SpectrumResult r = top_k_eigs_symmetric(dense_operator(a), 1);
    CHECK(r.values[0] == doctest::Approx(4.0).epsilon(1e-10));
    for (int i = 0; i < 5; ++i) {
        CHECK(r.left_vectors[0][i] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-8));
    }
}

TEST_CASE("leading eigenvalue of the path of 3 is sqrt(2)") {
    DenseMatrix a(3, 3);
    a.at(0, 1) = a.at(1, 0) = a.at(1, 2) = a.at(2, 1) = 1.0;
    SpectrumResult r = top_k_eigs_symmetric(dense_operator(a), 1);
    CHECK(r.values[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("eigensolver rejects bad k and asymmetric operators") {
    DenseMatrix a(3, 3);
    a.at(0, 1) = 1.0;  // asymmetric
    CHECK_THROWS_AS(top_k_eigs_symmetric(dense_operator(a), 1), std::invalid_argument);
    DenseMatrix sym(2, 2);
    sym.at(0, 1) = sym.at(1, 0) = 1.0;
    CHECK_THROWS_AS(top_k_eigs_symmetric(dense_operator(sym), 3), std::invalid_argument);
}

TEST_CASE("eigensolver reports non-convergence under an impossible budget") {
    Rng rng(5);
    DenseMatrix a = random_binary(30, 30, 0.4, true, rng);
    CHECK_THROWS_WITH_AS(top_k_eigs_symmetric(dense_operator(a), 6, 1e-10, 3),
                         doctest::Contains("did not converge"), std::runtime_error);
}

TEST_CASE("svd of the single-arc adjacency") {
    DenseMatrix a(2, 2);
    a.at(0, 1) = 1.0;
    SpectrumResult r = top_k_svd(dense_operator(a), 1);
    CHECK(r.values[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.left_vectors[0][0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.left_vectors[0][1] == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(r.right_vectors[0][0] == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(r.right_vectors[0][1] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("singular values of symmetric input equal absolute eigenvalues") {
    Rng rng(11);
    DenseMatrix a = random_binary(10, 10, 0.4, true, rng);
    SpectrumResult eig = top_k_eigs_symmetric(dense_operator(a), 4);
    SpectrumResult svd = top_k_svd(dense_operator(a), 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(svd.values[i] == doctest::Approx(std::abs(eig.values[i])).epsilon(1e-8));
    }
}

TEST_CASE("eigenpairs match a dense reference on random 0/1 matrices") {
    Rng rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_int(39));
        int k = 1 + static_cast<int>(rng.uniform_int(std::min(n, 6)));
        DenseMatrix a = random_binary(n, n, 0.3, true, rng);

        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m(i, j) = a.at(i, j);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m);
        std::vector<double> by_mag(ref.eigenvalues().data(),
                                   ref.eigenvalues().data() + n);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return std::abs(by_mag[x]) > std::abs(by_mag[y]);
        });

        SpectrumResult r = top_k_eigs_symmetric(dense_operator(a), k);
        for (int q = 0; q < k; ++q) {
            CHECK(std::abs(r.values[q] - by_mag[order[q]]) < 1e-8);
            // vector comparison is well-posed only for simple eigenvalues
            double gap = 1e9;
            for (int other = 0; other < n; ++other) {
                if (other != order[q]) gap = std::min(gap, std::abs(by_mag[other] - by_mag[order[q]]));
            }
            if (gap > 1e-6) {
                Eigen::VectorXd v = ref.eigenvectors().col(order[q]);
                std::vector<double> vv(v.data(), v.data() + n);
                CHECK(vector_diff_up_to_sign(r.left_vectors[q], vv) < 1e-6);
            }
        }
        // orthogonality
        for (int x = 0; x < k; ++x) {
            for (int y = x + 1; y < k; ++y) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += r.left_vectors[x][i] * r.left_vectors[y][i];
                CHECK(std::abs(dot) < 1e-6);
            }
        }
    }
}

TEST_CASE("singular triplets match a dense reference on random 0/1 matrices") {
    Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 2 + static_cast<int>(rng.uniform_int(12));
        int cols = 2 + static_cast<int>(rng.uniform_int(12));
        int k = 1 + static_cast<int>(rng.uniform_int(std::min({rows, cols, 4})));
        DenseMatrix a = random_binary(rows, cols, 0.35, false, rng);

        Eigen::MatrixXd m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) m(i, j) = a.at(i, j);
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> ref(m, Eigen::ComputeThinU | Eigen::ComputeThinV);

        SpectrumResult r = top_k_svd(dense_operator(a), k);
        for (int q = 0; q < k; ++q) {
            CHECK(std::abs(r.values[q] - ref.singularValues()(q)) < 1e-8);
            double gap = q + 1 < std::min(rows, cols)
                             ? ref.singularValues()(q) - ref.singularValues()(q + 1)
                             : ref.singularValues()(q);
            if (q > 0) gap = std::min(gap, ref.singularValues()(q - 1) - ref.singularValues()(q));
            if (gap > 1e-6 && ref.singularValues()(q) > 1e-8) {
                Eigen::VectorXd u = ref.matrixU().col(q);
                std::vector<double> uu(u.data(), u.data() + rows);
                CHECK(vector_diff_up_to_sign(r.left_vectors[q], uu) < 1e-6);
                Eigen::VectorXd v = ref.matrixV().col(q);
                std::vector<double> vv(v.data(), v.data() + cols);
                CHECK(vector_diff_up_to_sign(r.right_vectors[q], vv) < 1e-6);
            }
        }
    }
}

TEST_CASE("svd residuals hold on a rank-deficient matrix") {
    DenseMatrix a(4, 4);  // rank 1: all-ones
    for (double& v : a.data) v = 1.0;
    SpectrumResult r = top_k_svd(dense_operator(a), 3);
    CHECK(r.values[0] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(r.values[1] == doctest::Approx(0.0).epsilon(1e-10));
    std::vector<double> tmp(4);
    for (int q = 0; q < 3; ++q) {
        LinOp op = dense_operator(a);
        op.apply(r.right_vectors[q], tmp);
        for (int i = 0; i < 4; ++i) tmp[i] -= r.values[q] * r.left_vectors[q][i];
        double res = 0.0;
        for (double v : tmp) res = std::max(res, std::abs(v));
        CHECK(res < 1e-9);
    }
}

TEST_CASE("scree values: complete graph K4 and the zero matrix") {
    DenseMatrix k4(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) k4.at(i, j) = i == j ? 0.0 : 1.0;
    }
    std::vector<double> values = spectrum_for_scree(dense_operator(k4), 4, true);
    CHECK(values[0] == doctest::Approx(3.0).epsilon(1e-9));
    for (int q = 1; q < 4; ++q) CHECK(values[q] == doctest::Approx(-1.0).epsilon(1e-9));

    DenseMatrix zero(3, 3);
    for (double v : spectrum_for_scree(dense_operator(zero), 3, true)) {
        CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("adjacency operator matches the dense matrix on a digraph") {
    Graph g(4, true, {{0, 1}, {1, 2}, {3, 1}, {2, 0}});
    LinOp op = adjacency_operator(g);
    Rng rng(3);
    std::vector<double> x(4), y(4), yt(4);
    for (double& v : x) v = rng.uniform01();
    op.apply(x, y);
    op.apply_t(x, yt);
    for (int i = 0; i < 4; ++i) {
        double expect = 0.0, expect_t = 0.0;
        for (int j = 0; j < 4; ++j) {
            if (g.has_edge(i, j)) expect += x[j];
            if (g.has_edge(j, i)) expect_t += x[j];
        }
        CHECK(y[i] == doctest::Approx(expect));
        CHECK(yt[i] == doctest::Approx(expect_t));
    }
}

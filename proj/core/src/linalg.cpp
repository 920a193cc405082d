#include "specnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "specnet/rng.hpp"

namespace specnet {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double c, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

// Symmetric tridiagonal QL with implicit shifts (EISPACK tql2 lineage).
// d holds the diagonal and receives the eigenvalues; e[i] couples i and
// i+1 (e.back() is overwritten); columns of z (caller-initialized to the
// identity) receive the eigenvectors.
void tridiag_ql(std::vector<double>& d, std::vector<double> e, DenseMatrix& z) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    e.resize(n);
    e[n - 1] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd + 1e-300) break;
            }
            if (m != l) {
                if (iter++ == 64) throw std::runtime_error("tridiagonal QL: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int row = 0; row < n; ++row) {
                        f = z.at(row, i + 1);
                        z.at(row, i + 1) = s * z.at(row, i) + c * f;
                        z.at(row, i) = c * z.at(row, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Flips a vector so its entry of largest absolute value (first on ties)
// is positive.  Returns the sign applied.
double fix_sign(std::vector<double>& v) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double a = std::abs(v[i]);
        if (a > best) {
            best = a;
            arg = i;
        }
    }
    if (v.empty() || v[arg] >= 0.0) return 1.0;
    for (double& x : v) x = -x;
    return -1.0;
}

constexpr std::uint64_t kStartVectorSeed = 0x5ca1ab1e5eedULL;

struct RitzSet {
    std::vector<double> values;                // sorted by descending |value|
    std::vector<std::vector<double>> vectors;  // unit norm, mutually orthogonal
};

// Lanczos with full reorthogonalization.  Grows the Krylov basis (with
// deterministic random restarts on breakdown, so repeated eigenvalues are
// found with their multiplicities) until the k Ritz pairs of largest
// magnitude have explicit residuals ||A x - theta x|| <= tol * ||A||.
RitzSet lanczos_symmetric(const LinOp& A, int k, double tol, int max_iter) {
    const int n = A.rows;
    if (A.cols != n) throw std::invalid_argument("symmetric eigensolver requires a square operator");
    if (k < 1 || k > n) {
        throw std::invalid_argument("requested " + std::to_string(k) + " eigenpairs of an order-" +
                                    std::to_string(n) + " operator");
    }
    const int max_steps = std::min(n, max_iter > 0 ? max_iter : 10 * n);

    Rng rng(kStartVectorSeed);
    std::vector<std::vector<double>> basis;
    std::vector<double> alphas, betas;

    // All-ones start vector with a small deterministic perturbation.
    {
        std::vector<double> v(n);
        for (double& x : v) x = 1.0 + 0.01 * (rng.uniform01() - 0.5);
        double nv = norm(v);
        for (double& x : v) x /= nv;
        basis.push_back(std::move(v));
    }

    std::vector<double> w(n);
    double anorm = 0.0;
    bool exhausted = false;

    auto reorthogonalize = [&](std::vector<double>& x) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) axpy(-dot(x, b), b, x);
        }
    };

    auto push_restart_vector = [&]() -> bool {
        for (int attempt = 0; attempt < 8; ++attempt) {
            std::vector<double> r(n);
            for (double& x : r) x = rng.uniform01() - 0.5;
            reorthogonalize(r);
            double nr = norm(r);
            if (nr > 1e-6) {
                for (double& x : r) x /= nr;
                basis.push_back(std::move(r));
                return true;
            }
        }
        return false;  // basis spans the whole space
    };

    RitzSet best;
    double best_residual = std::numeric_limits<double>::infinity();
    int next_check = std::min(max_steps, std::max(2 * k + 2, 10));

    while (true) {
        const int j = static_cast<int>(alphas.size());
        A.apply(basis[j], w);
        double alpha = dot(basis[j], w);
        alphas.push_back(alpha);
        reorthogonalize(w);
        double beta = norm(w);
        anorm = std::max({anorm, std::abs(alpha), beta});

        const int m = static_cast<int>(alphas.size());
        if (m < max_steps) {
            if (beta > 1e-12 * std::max(anorm, 1.0)) {
                betas.push_back(beta);
                std::vector<double> v(w);
                for (double& x : v) x /= beta;
                basis.push_back(std::move(v));
            } else {
                betas.push_back(0.0);
                if (!push_restart_vector()) exhausted = true;
            }
        }

        const bool last = exhausted || m == max_steps;
        if (m < next_check && !last) continue;
        next_check = std::min(max_steps, m + std::max(8, m / 2));

        // Ritz extraction from the current tridiagonal section.
        std::vector<double> theta(alphas);
        DenseMatrix z(m, m);
        for (int i = 0; i < m; ++i) z.at(i, i) = 1.0;
        tridiag_ql(theta, betas, z);

        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::abs(theta[a]) > std::abs(theta[b]);
        });

        const int take = std::min(k, m);
        RitzSet cur;
        cur.values.reserve(take);
        cur.vectors.reserve(take);
        double scale = 0.0;
        for (int q = 0; q < m; ++q) scale = std::max(scale, std::abs(theta[q]));
        double worst = 0.0;
        for (int q = 0; q < take; ++q) {
            const int col = order[q];
            std::vector<double> x(n, 0.0);
            for (int i = 0; i < m; ++i) {
                if (z.at(i, col) != 0.0) axpy(z.at(i, col), basis[i], x);
            }
            double nx = norm(x);
            if (nx > 0.0) {
                for (double& e : x) e /= nx;
            }
            A.apply(x, w);
            axpy(-theta[col], x, w);
            worst = std::max(worst, norm(w));
            cur.values.push_back(theta[col]);
            cur.vectors.push_back(std::move(x));
        }

        const double bound = tol * std::max(scale, 1e-300);
        if (take == k && worst < best_residual) {
            best_residual = worst;
            best = std::move(cur);
        }
        if (take == k && best_residual <= bound) return best;
        if (last) {
            if (take == k && best_residual <= std::max(bound, 1e-9 * std::max(scale, 1.0))) {
                // Full or exhausted basis: the decomposition is as exact as
                // it gets in floating point even if the requested tol was
                // tighter than representable.
                return best;
            }
            throw std::runtime_error(
                "eigensolver did not converge after " + std::to_string(m) +
                " Lanczos steps; best residual " + std::to_string(best_residual) +
                " exceeds bound " + std::to_string(bound));
        }
    }
}

void spot_check_symmetry(const LinOp& A) {
    const int n = A.rows;
    Rng rng(0xC0FFEE0001ULL);
    std::vector<double> x(n), y(n), ax(n), ay(n);
    for (double& v : x) v = rng.uniform01() - 0.5;
    for (double& v : y) v = rng.uniform01() - 0.5;
    A.apply(x, ax);
    A.apply(y, ay);
    double lhs = dot(ax, y);
    double rhs = dot(x, ay);
    double scale = norm(ax) * norm(y) + norm(x) * norm(ay) + 1.0;
    if (std::abs(lhs - rhs) > 1e-8 * scale) {
        throw std::invalid_argument("operator failed the symmetry spot-check: <Ax,y> != <x,Ay>");
    }
}

}  // namespace

LinOp adjacency_operator(const Graph& g) {
    const int n = g.node_count();
    LinOp op;
    op.rows = n;
    op.cols = n;
    if (g.directed()) {
        op.apply = [&g, n](std::span<const double> x, std::span<double> y) {
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j : g.out_neighbors(i)) s += x[j];
                y[i] = s;
            }
        };
        op.apply_t = [&g, n](std::span<const double> x, std::span<double> y) {
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int i : g.in_neighbors(j)) s += x[i];
                y[j] = s;
            }
        };
    } else {
        op.apply = [&g, n](std::span<const double> x, std::span<double> y) {
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j : g.neighbors(i)) s += x[j];
                y[i] = s;
            }
        };
        op.apply_t = op.apply;
    }
    return op;
}

SpectrumResult top_k_eigs_symmetric(const LinOp& A, int k, double tol, int max_iter) {
    spot_check_symmetry(A);
    RitzSet ritz = lanczos_symmetric(A, k, tol, max_iter);
    SpectrumResult out;
    out.values = std::move(ritz.values);
    out.left_vectors = std::move(ritz.vectors);
    for (auto& v : out.left_vectors) fix_sign(v);
    out.right_vectors = out.left_vectors;
    return out;
}

SpectrumResult top_k_svd(const LinOp& A, int k, double tol, int max_iter) {
    const int r = A.rows;
    const int c = A.cols;
    if (k < 1 || k > std::min(r, c)) {
        throw std::invalid_argument("requested " + std::to_string(k) + " singular triplets of a " +
                                    std::to_string(r) + "x" + std::to_string(c) + " operator");
    }
    if (!A.apply_t) throw std::invalid_argument("top_k_svd requires apply_t");
    const int dim = r + c;

    // Symmetric augmentation [[0, A], [A^T, 0]]: its eigenvalues are
    // +-sigma_i plus zeros, eigenvectors stack the singular vector pairs.
    LinOp aug;
    aug.rows = dim;
    aug.cols = dim;
    aug.apply = [&A, r, c](std::span<const double> x, std::span<double> y) {
        A.apply(x.subspan(r, c), y.subspan(0, r));
        A.apply_t(x.subspan(0, r), y.subspan(r, c));
    };

    std::vector<double> tmp_r(r), tmp_c(c);
    auto triplet_residual = [&](double sigma, std::span<const double> u,
                                std::span<const double> v) {
        A.apply(v, tmp_r);
        for (int i = 0; i < r; ++i) tmp_r[i] -= sigma * u[i];
        double res = norm(tmp_r);
        A.apply_t(u, tmp_c);
        for (int i = 0; i < c; ++i) tmp_c[i] -= sigma * v[i];
        return std::max(res, norm(tmp_c));
    };

    int kk = std::min(dim, 2 * k);
    while (true) {
        RitzSet ritz = lanczos_symmetric(aug, kk, tol, max_iter);
        double sigma_max = ritz.values.empty() ? 0.0 : std::abs(ritz.values.front());
        const double zero_thresh = std::max(tol, 1e-12) * std::max(sigma_max, 1e-300);
        const double bound = tol * std::max(sigma_max, 1e-300) * 4.0 + 1e-13;

        SpectrumResult out;
        std::vector<std::size_t> zero_ids;
        for (std::size_t q = 0; q < ritz.values.size(); ++q) {
            if (static_cast<int>(out.values.size()) == k) break;
            double theta = ritz.values[q];
            if (theta > zero_thresh) {
                const auto& w2 = ritz.vectors[q];
                std::vector<double> u(w2.begin(), w2.begin() + r);
                std::vector<double> v(w2.begin() + r, w2.end());
                double nu = norm(u), nv = norm(v);
                if (nu < 1e-8 || nv < 1e-8) continue;  // defect; retry with a larger section
                for (double& x : u) x /= nu;
                for (double& x : v) x /= nv;
                double s = fix_sign(u);
                for (double& x : v) x *= s;
                out.values.push_back(theta);
                out.left_vectors.push_back(std::move(u));
                out.right_vectors.push_back(std::move(v));
            } else if (std::abs(theta) <= zero_thresh) {
                zero_ids.push_back(q);
            }
        }

        // Rank-deficient completion: the zero eigenspace of the augmented
        // operator stacks null(A^T) over null(A); orthonormalized blocks of
        // its Ritz vectors provide exact sigma = 0 triplets.
        if (static_cast<int>(out.values.size()) < k && !zero_ids.empty()) {
            std::vector<std::vector<double>> u_pool, v_pool;
            auto gram_schmidt = [](std::vector<double> x, const std::vector<std::vector<double>>& used,
                                   const std::vector<std::vector<double>>& pool)
                -> std::vector<double> {
                for (int pass = 0; pass < 2; ++pass) {
                    for (const auto& b : used) axpy(-dot(x, b), b, x);
                    for (const auto& b : pool) axpy(-dot(x, b), b, x);
                }
                double nx = norm(x);
                if (nx < 1e-6) return {};
                for (double& e : x) e /= nx;
                return x;
            };
            for (std::size_t q : zero_ids) {
                const auto& w2 = ritz.vectors[q];
                auto u = gram_schmidt(std::vector<double>(w2.begin(), w2.begin() + r),
                                      out.left_vectors, u_pool);
                if (!u.empty()) u_pool.push_back(std::move(u));
                auto v = gram_schmidt(std::vector<double>(w2.begin() + r, w2.end()),
                                      out.right_vectors, v_pool);
                if (!v.empty()) v_pool.push_back(std::move(v));
            }
            std::size_t have = std::min(u_pool.size(), v_pool.size());
            for (std::size_t i = 0; i < have && static_cast<int>(out.values.size()) < k; ++i) {
                if (triplet_residual(0.0, u_pool[i], v_pool[i]) > bound) continue;
                fix_sign(u_pool[i]);
                fix_sign(v_pool[i]);
                out.values.push_back(0.0);
                out.left_vectors.push_back(std::move(u_pool[i]));
                out.right_vectors.push_back(std::move(v_pool[i]));
            }
        }

        if (static_cast<int>(out.values.size()) == k) {
            for (int q = 0; q < k; ++q) {
                double res = triplet_residual(out.values[q], out.left_vectors[q],
                                              out.right_vectors[q]);
                if (res > bound) {
                    throw std::runtime_error("singular triplet " + std::to_string(q) +
                                             " failed its residual bound: " + std::to_string(res));
                }
            }
            return out;
        }
        if (kk == dim) {
            throw std::runtime_error("top_k_svd could not extract " + std::to_string(k) +
                                     " triplets (numerical rank too small)");
        }
        kk = std::min(dim, 2 * kk);
    }
}

std::vector<double> spectrum_for_scree(const LinOp& A, int k, bool symmetric, double tol,
                                       int max_iter) {
    if (symmetric) return top_k_eigs_symmetric(A, k, tol, max_iter).values;
    return top_k_svd(A, k, tol, max_iter).values;
}

}  // namespace specnet

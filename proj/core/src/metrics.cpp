#include "specnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace specnet {

namespace {

void require_connected_undirected(const Graph& g, const char* what) {
    if (g.directed()) {
        throw std::invalid_argument(std::string(what) + " requires an undirected graph");
    }
    if (g.node_count() > 0 && connected_components(g).count() != 1) {
        throw std::invalid_argument(std::string(what) +
                                    " requires a connected graph; restrict to a component first");
    }
}

// Contingency counts shared by ARI and VI.
struct Contingency {
    std::map<std::pair<int, int>, long long> joint;
    std::map<int, long long> left, right;
    long long n = 0;
};

Contingency cross_tabulate(std::span<const int> p, std::span<const int> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("partition comparison requires equal-length label vectors");
    }
    if (p.empty()) throw std::invalid_argument("partition comparison requires nonempty labels");
    Contingency t;
    t.n = static_cast<long long>(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        ++t.joint[{p[i], q[i]}];
        ++t.left[p[i]];
        ++t.right[q[i]];
    }
    return t;
}

double choose2(long long n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

}  // namespace

CentralityScores degree_centrality(const Graph& g, DegreeMode mode) {
    const int n = g.node_count();
    CentralityScores out;
    out.scores.resize(n);
    switch (mode) {
    case DegreeMode::undirected:
        if (g.directed()) {
            throw std::invalid_argument("undirected degree mode on a directed graph");
        }
        out.kind = CentralityKind::degree;
        for (int v = 0; v < n; ++v) out.scores[v] = g.degree(v);
        break;
    case DegreeMode::in:
        if (!g.directed()) throw std::invalid_argument("in-degree mode on an undirected graph");
        out.kind = CentralityKind::in_degree;
        for (int v = 0; v < n; ++v) out.scores[v] = g.in_degree(v);
        break;
    case DegreeMode::out:
        if (!g.directed()) throw std::invalid_argument("out-degree mode on an undirected graph");
        out.kind = CentralityKind::out_degree;
        for (int v = 0; v < n; ++v) out.scores[v] = g.out_degree(v);
        break;
    }
    return out;
}

CentralityScores closeness_centrality(const Graph& g) {
    require_connected_undirected(g, "closeness_centrality");
    const int n = g.node_count();
    CentralityScores out{CentralityKind::closeness, std::vector<double>(n, 0.0)};
    std::vector<int> dist(n);
    std::vector<int> frontier;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        frontier.assign(1, s);
        long long total = 0;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int v : frontier) {
                total += dist[v];
                for (int w : g.neighbors(v)) {
                    if (dist[w] == -1) {
                        dist[w] = dist[v] + 1;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
        out.scores[s] = n > 1 ? 1.0 / static_cast<double>(total) : 0.0;
    }
    return out;
}

CentralityScores betweenness_centrality(const Graph& g) {
    require_connected_undirected(g, "betweenness_centrality");
    const int n = g.node_count();
    CentralityScores out{CentralityKind::betweenness, std::vector<double>(n, 0.0)};

    std::vector<std::vector<int>> preds(n);
    std::vector<long long> sigma(n);
    std::vector<int> dist(n);
    std::vector<double> delta(n);
    std::vector<int> order;
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        for (auto& p : preds) p.clear();
        std::fill(sigma.begin(), sigma.end(), 0);
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();

        sigma[s] = 1;
        dist[s] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            order.push_back(v);
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : preds[w]) {
                delta[v] += static_cast<double>(sigma[v]) / static_cast<double>(sigma[w]) *
                            (1.0 + delta[w]);
            }
            if (w != s) out.scores[w] += delta[w];
        }
    }
    // Each unordered pair {s, t} was visited from both endpoints.
    for (double& v : out.scores) v *= 0.5;
    return out;
}

double adjusted_rand_index(std::span<const int> p, std::span<const int> q) {
    Contingency t = cross_tabulate(p, q);
    double sum_joint = 0.0, sum_left = 0.0, sum_right = 0.0;
    for (const auto& [key, c] : t.joint) sum_joint += choose2(c);
    for (const auto& [key, c] : t.left) sum_left += choose2(c);
    for (const auto& [key, c] : t.right) sum_right += choose2(c);
    const double pairs = choose2(t.n);
    if (pairs == 0.0) return 1.0;  // single node: identical by convention
    const double expected = sum_left * sum_right / pairs;
    const double maximum = 0.5 * (sum_left + sum_right);
    if (maximum == expected) return 1.0;  // both partitions trivial
    return (sum_joint - expected) / (maximum - expected);
}

double variation_of_information(std::span<const int> p, std::span<const int> q) {
    Contingency t = cross_tabulate(p, q);
    const double n = static_cast<double>(t.n);
    double h_left = 0.0, h_right = 0.0, mutual = 0.0;
    for (const auto& [key, c] : t.left) {
        double f = c / n;
        h_left -= f * std::log(f);
    }
    for (const auto& [key, c] : t.right) {
        double f = c / n;
        h_right -= f * std::log(f);
    }
    for (const auto& [key, c] : t.joint) {
        double f = c / n;
        double fl = static_cast<double>(t.left[key.first]) / n;
        double fr = static_cast<double>(t.right[key.second]) / n;
        mutual += f * std::log(f / (fl * fr));
    }
    double vi = h_left + h_right - 2.0 * mutual;
    return vi < 0.0 ? 0.0 : vi;  // clip float noise at the identical-partition end
}

double transitivity(const Graph& g) {
    if (g.directed()) throw std::invalid_argument("transitivity requires an undirected graph");
    const int n = g.node_count();
    long long triples = 0;
    long long closed_triples = 0;  // adjacent neighbor pairs; 3 per triangle
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        long long d = static_cast<long long>(nb.size());
        triples += d * (d - 1) / 2;
        for (std::size_t x = 0; x < nb.size(); ++x) {
            for (std::size_t y = x + 1; y < nb.size(); ++y) {
                if (g.has_edge(nb[x], nb[y])) ++closed_triples;
            }
        }
    }
    if (triples == 0) return 0.0;
    return static_cast<double>(closed_triples) / static_cast<double>(triples);
}

double gini(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("gini: empty input");
    std::vector<double> x(values.begin(), values.end());
    double total = 0.0;
    for (double v : x) {
        if (v < 0.0) throw std::invalid_argument("gini: negative value");
        total += v;
    }
    if (total == 0.0) throw std::invalid_argument("gini: all values are zero");
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double weighted = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        weighted += static_cast<double>(i + 1) * x[i];
    }
    return (2.0 * weighted - (n + 1.0) * total) / (n * total);
}

std::vector<std::pair<double, double>> lorenz_curve(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("lorenz_curve: empty input");
    std::vector<double> x(values.begin(), values.end());
    double total = 0.0;
    for (double v : x) {
        if (v < 0.0) throw std::invalid_argument("lorenz_curve: negative value");
        total += v;
    }
    if (total == 0.0) throw std::invalid_argument("lorenz_curve: all values are zero");
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    std::vector<std::pair<double, double>> curve;
    curve.reserve(x.size() + 1);
    curve.emplace_back(0.0, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i];
        curve.emplace_back(static_cast<double>(i + 1) / n, acc / total);
    }
    return curve;
}

std::vector<std::pair<int, double>> degree_ccdf(const Graph& g, DegreeMode mode) {
    const std::vector<double>& deg = degree_centrality(g, mode).scores;
    const double n = static_cast<double>(deg.size());
    std::map<int, int> hist;
    for (double d : deg) ++hist[static_cast<int>(d)];
    std::vector<std::pair<int, double>> out;
    if (hist.empty()) return out;

    long long above = static_cast<long long>(deg.size());
    out.emplace_back(hist.begin()->first - 1, 1.0);
    for (const auto& [d, count] : hist) {
        above -= count;
        out.emplace_back(d, static_cast<double>(above) / n);
    }
    return out;
}

TailFit powerlaw_tail_slope(std::span<const std::pair<int, double>> ccdf, int d_min) {
    std::vector<std::pair<double, double>> pts;  // (log d, log f)
    for (const auto& [d, f] : ccdf) {
        if (d >= d_min && d > 0 && f > 0.0) pts.emplace_back(std::log(d), std::log(f));
    }
    if (pts.size() < 3) {
        throw std::invalid_argument("powerlaw_tail_slope: fewer than 3 usable tail points");
    }
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    TailFit fit;
    fit.points_used = static_cast<int>(pts.size());
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    double intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (const auto& [x, y] : pts) {
        double r = y - (intercept + fit.slope * x);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / static_cast<double>(pts.size()));
    return fit;
}

std::vector<double> divided_paper_credits(const BipartiteGraph& b) {
    std::vector<double> credit(b.author_count(), 0.0);
    for (int p = 0; p < b.paper_count(); ++p) {
        auto authors = b.authors_of(p);
        double share = 1.0 / static_cast<double>(authors.size());
        for (int a : authors) credit[a] += share;
    }
    return credit;
}

std::vector<double> paper_counts(const BipartiteGraph& b) {
    std::vector<double> counts(b.author_count(), 0.0);
    for (int a = 0; a < b.author_count(); ++a) counts[a] = b.left_degree(a);
    return counts;
}

}  // namespace specnet

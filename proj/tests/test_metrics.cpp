#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "specnet/metrics.hpp"
#include "specnet/rng.hpp"
#include "support/oracles.hpp"

using namespace specnet;

TEST_CASE("degree centrality") {
    Graph star(5, false, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(degree_centrality(star, DegreeMode::undirected).scores[0] == 4);
    Graph digraph(3, true, {{0, 1}, {2, 1}});
    CHECK(degree_centrality(digraph, DegreeMode::in).scores[1] == 2);
    CHECK(degree_centrality(digraph, DegreeMode::out).scores[0] == 1);
    CHECK_THROWS_AS(degree_centrality(star, DegreeMode::in), std::invalid_argument);
    CHECK_THROWS_AS(degree_centrality(digraph, DegreeMode::undirected), std::invalid_argument);
}

TEST_CASE("closeness on a path and a clique") {
    Graph path(3, false, {{0, 1}, {1, 2}});
    auto c = closeness_centrality(path).scores;
    CHECK(c[1] == doctest::Approx(0.5));
    CHECK(c[0] == doctest::Approx(1.0 / 3.0));

    Graph k4(4, false, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (double v : closeness_centrality(k4).scores) CHECK(v == doctest::Approx(1.0 / 3.0));

    Graph disconnected(3, false, {{0, 1}});
    CHECK_THROWS_AS(closeness_centrality(disconnected), std::invalid_argument);
}

TEST_CASE("betweenness on a path, a 4-cycle, and a clique") {
    Graph path(3, false, {{0, 1}, {1, 2}});
    auto b = betweenness_centrality(path).scores;
    CHECK(b[1] == doctest::Approx(1.0));
    CHECK(b[0] == doctest::Approx(0.0));

    Graph c4(4, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (double v : betweenness_centrality(c4).scores) CHECK(v == doctest::Approx(0.5));

    Graph k5(5, false,
             {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    for (double v : betweenness_centrality(k5).scores) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("betweenness and closeness agree with brute force on small graphs") {
    Rng rng(17);
    int done = 0;
    while (done < 40) {
        int n = 3 + static_cast<int>(rng.uniform_int(5));
        Graph g = oracle::random_connected_graph(n, 0.3, rng);
        ++done;
        auto bc = betweenness_centrality(g).scores;
        auto bc_ref = oracle::betweenness_bruteforce(g);
        auto cc = closeness_centrality(g).scores;
        auto cc_ref = oracle::closeness_bruteforce(g);
        for (int v = 0; v < n; ++v) {
            CHECK(std::abs(bc[v] - bc_ref[v]) < 1e-9);
            CHECK(std::abs(cc[v] - cc_ref[v]) < 1e-9);
        }
    }
}

TEST_CASE("adjusted rand index examples") {
    std::vector<int> a{1, 1, 2, 2};
    CHECK(adjusted_rand_index(a, a) == doctest::Approx(1.0));
    std::vector<int> b{1, 2, 1, 2};
    CHECK(adjusted_rand_index(a, b) == doctest::Approx(-0.5));
    std::vector<int> renamed{7, 7, 3, 3};
    CHECK(adjusted_rand_index(a, renamed) == doctest::Approx(1.0));
    CHECK_THROWS_AS(adjusted_rand_index(a, std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("variation of information examples") {
    std::vector<int> a{1, 1, 2, 2};
    CHECK(variation_of_information(a, a) == doctest::Approx(0.0));
    std::vector<int> b{1, 2, 1, 2};
    CHECK(variation_of_information(a, b) == doctest::Approx(2.0 * std::log(2.0)));
}

TEST_CASE("ARI and VI are symmetric and renaming-invariant") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_int(7));
        auto p = oracle::random_labels(n, 3, rng);
        auto q = oracle::random_labels(n, 3, rng);
        CHECK(adjusted_rand_index(p, q) == doctest::Approx(adjusted_rand_index(q, p)));
        CHECK(variation_of_information(p, q) ==
              doctest::Approx(variation_of_information(q, p)));
        auto renamed = p;
        for (int& l : renamed) l = 10 - l;
        CHECK(adjusted_rand_index(renamed, q) == doctest::Approx(adjusted_rand_index(p, q)));
        CHECK(variation_of_information(renamed, q) ==
              doctest::Approx(variation_of_information(p, q)));
        // brute-force agreement
        CHECK(std::abs(adjusted_rand_index(p, q) - oracle::ari_bruteforce(p, q)) < 1e-9);
        CHECK(std::abs(variation_of_information(p, q) - oracle::vi_bruteforce(p, q)) < 1e-9);
    }
}

TEST_CASE("transitivity examples") {
    Graph triangle(3, false, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(transitivity(triangle) == doctest::Approx(1.0));
    Graph path(3, false, {{0, 1}, {1, 2}});
    CHECK(transitivity(path) == doctest::Approx(0.0));
    Graph diag_square(4, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK(transitivity(diag_square) == doctest::Approx(0.75));
    CHECK(transitivity(Graph(3, false, {})) == doctest::Approx(0.0));
}

TEST_CASE("gini examples and scale invariance") {
    std::vector<double> equal{2.0, 2.0, 2.0};
    CHECK(gini(equal) == doctest::Approx(0.0));
    std::vector<double> pair{0.0, 1.0};
    CHECK(gini(pair) == doctest::Approx(0.5));
    CHECK_THROWS_AS(gini(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(gini(std::vector<double>{0.0, 0.0}), std::invalid_argument);

    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_int(7));
        std::vector<double> x(n);
        for (double& v : x) v = rng.uniform01() * 5.0;
        double g1 = gini(x);
        CHECK(std::abs(g1 - oracle::gini_bruteforce(x)) < 1e-9);
        std::vector<double> scaled(x);
        for (double& v : scaled) v *= 17.5;
        CHECK(std::abs(gini(scaled) - g1) < 1e-12);
    }
}

TEST_CASE("lorenz curve shape") {
    std::vector<double> equal{1.0, 1.0, 1.0, 1.0};
    for (const auto& [x, y] : lorenz_curve(equal)) CHECK(y == doctest::Approx(x));

    std::vector<double> spike{0.0, 0.0, 0.0, 1.0};
    auto curve = lorenz_curve(spike);
    CHECK(curve[3].first == doctest::Approx(0.75));
    CHECK(curve[3].second == doctest::Approx(0.0));
    CHECK(curve[4].second == doctest::Approx(1.0));

    Rng rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> x(8);
        for (double& v : x) v = rng.uniform01();
        auto c = lorenz_curve(x);
        CHECK(c.front() == std::pair<double, double>{0.0, 0.0});
        CHECK(c.back().second == doctest::Approx(1.0));
        for (std::size_t i = 1; i < c.size(); ++i) {
            CHECK(c[i].first >= c[i - 1].first);
            CHECK(c[i].second >= c[i - 1].second - 1e-15);
            CHECK(c[i].second <= c[i].first + 1e-12);  // on or below the diagonal
        }
    }
}

TEST_CASE("degree ccdf jump points") {
    Graph k3(3, false, {{0, 1}, {1, 2}, {0, 2}});
    auto ccdf = degree_ccdf(k3, DegreeMode::undirected);
    REQUIRE(ccdf.size() == 2);
    CHECK(ccdf[0] == std::pair<int, double>{1, 1.0});
    CHECK(ccdf[1] == std::pair<int, double>{2, 0.0});

    Graph star(5, false, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto s = degree_ccdf(star, DegreeMode::undirected);
    CHECK(s[0] == std::pair<int, double>{0, 1.0});
    CHECK(s[1] == std::pair<int, double>{1, 0.2});
    CHECK(s[2] == std::pair<int, double>{4, 0.0});
    // strictly decreasing fractions
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i].second < s[i - 1].second);
}

TEST_CASE("power-law tail slope") {
    // exact CCDF ~ d^-2 over d = 2..64
    std::vector<std::pair<int, double>> powerlaw;
    for (int d = 2; d <= 64; d *= 2) powerlaw.emplace_back(d, std::pow(d, -2.0));
    TailFit fit = powerlaw_tail_slope(powerlaw, 2);
    CHECK(fit.slope == doctest::Approx(-2.0).epsilon(0.01));
    CHECK(fit.rms_residual < 1e-10);

    // exponential decay fits badly: large residual flags it
    std::vector<std::pair<int, double>> expo;
    for (int d = 1; d <= 40; d += 4) expo.emplace_back(d, std::exp(-0.5 * d));
    TailFit bad = powerlaw_tail_slope(expo, 1);
    CHECK(bad.rms_residual > 0.5);

    std::vector<std::pair<int, double>> flat;
    for (int d = 1; d <= 8; ++d) flat.emplace_back(d, 0.25);
    CHECK(powerlaw_tail_slope(flat, 1).slope == doctest::Approx(0.0));

    std::vector<std::pair<int, double>> too_few{{1, 0.5}, {2, 0.1}};
    CHECK_THROWS_AS(powerlaw_tail_slope(too_few, 1), std::invalid_argument);
}

TEST_CASE("paper credit vectors") {
    BipartiteGraph b(3, 2, {{0, 0}, {1, 0}, {1, 1}});
    auto divided = divided_paper_credits(b);
    CHECK(divided[0] == doctest::Approx(0.5));
    CHECK(divided[1] == doctest::Approx(1.5));
    CHECK(divided[2] == doctest::Approx(0.0));
    auto counts = paper_counts(b);
    CHECK(counts[1] == doctest::Approx(2.0));
}

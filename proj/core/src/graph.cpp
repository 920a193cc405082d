#include "specnet/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace specnet {

namespace {

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_node(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument(std::string(what) + " index " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
    }
}

}  // namespace

Graph::Graph(int n, bool directed, std::span<const Edge> edges)
    : n_(n), directed_(directed) {
    if (n < 0) throw std::invalid_argument("node count must be nonnegative");
    adj_.resize(n_);
    if (directed_) in_.resize(n_);
    for (const auto& [i, j] : edges) {
        check_node(i, n_, "edge");
        check_node(j, n_, "edge");
        if (i == j) continue;  // self-loops dropped at construction
        if (directed_) {
            adj_[i].push_back(j);
            in_[j].push_back(i);
        } else {
            adj_[i].push_back(j);
            adj_[j].push_back(i);
        }
    }
    for (auto& list : adj_) sort_unique(list);
    for (auto& list : in_) sort_unique(list);
    std::int64_t total = 0;
    for (const auto& list : adj_) total += static_cast<std::int64_t>(list.size());
    edge_count_ = directed_ ? total : total / 2;
}

std::span<const int> Graph::neighbors(int v) const {
    if (directed_) throw std::invalid_argument("neighbors() requires an undirected graph");
    check_node(v, n_, "node");
    return adj_[v];
}

std::span<const int> Graph::out_neighbors(int v) const {
    if (!directed_) throw std::invalid_argument("out_neighbors() requires a directed graph");
    check_node(v, n_, "node");
    return adj_[v];
}

std::span<const int> Graph::in_neighbors(int v) const {
    if (!directed_) throw std::invalid_argument("in_neighbors() requires a directed graph");
    check_node(v, n_, "node");
    return in_[v];
}

bool Graph::has_edge(int i, int j) const {
    check_node(i, n_, "node");
    check_node(j, n_, "node");
    const auto& list = adj_[i];
    return std::binary_search(list.begin(), list.end(), j);
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int i = 0; i < n_; ++i) {
        for (int j : adj_[i]) {
            if (directed_ || i < j) out.emplace_back(i, j);
        }
    }
    return out;
}

void Graph::set_names(std::vector<std::string> names) {
    if (!names.empty() && static_cast<int>(names.size()) != n_) {
        throw std::invalid_argument("names must be empty or have one entry per node");
    }
    names_ = std::move(names);
}

BipartiteGraph::BipartiteGraph(int n_authors, int n_papers,
                               std::span<const Incidence> incidences)
    : n_left_(n_authors), n_right_(n_papers) {
    if (n_authors < 0 || n_papers < 0) {
        throw std::invalid_argument("bipartite side sizes must be nonnegative");
    }
    papers_of_author_.resize(n_left_);
    authors_of_paper_.resize(n_right_);
    for (const auto& [a, p] : incidences) {
        check_node(a, n_left_, "author");
        check_node(p, n_right_, "paper");
        papers_of_author_[a].push_back(p);
        authors_of_paper_[p].push_back(a);
    }
    for (auto& list : papers_of_author_) sort_unique(list);
    for (auto& list : authors_of_paper_) sort_unique(list);
    for (int p = 0; p < n_right_; ++p) {
        if (authors_of_paper_[p].empty()) {
            throw std::invalid_argument("paper " + std::to_string(p) + " has no incident author");
        }
    }
}

std::span<const int> BipartiteGraph::papers_of(int author) const {
    check_node(author, n_left_, "author");
    return papers_of_author_[author];
}

std::span<const int> BipartiteGraph::authors_of(int paper) const {
    check_node(paper, n_right_, "paper");
    return authors_of_paper_[paper];
}

std::vector<int> ComponentDecomposition::members(int component) const {
    if (component < 0 || component >= count()) {
        throw std::invalid_argument("component id out of range");
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(sizes[component]));
    for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
        if (labels[v] == component) out.push_back(v);
    }
    return out;
}

namespace {

// Search labeling in node order, then relabel components by (size desc,
// smallest member asc): the giant is component 0 and `sizes` comes out
// sorted, with size ties resolved by the smallest contained node index.
ComponentDecomposition decompose(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> raw(n, -1);
    std::vector<int> raw_sizes;
    std::vector<int> first_member;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (raw[s] != -1) continue;
        const int c = static_cast<int>(raw_sizes.size());
        raw[s] = c;
        first_member.push_back(s);
        queue.assign(1, s);
        int size = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++size;
            for (int w : adj[v]) {
                if (raw[w] == -1) {
                    raw[w] = c;
                    queue.push_back(w);
                }
            }
        }
        raw_sizes.push_back(size);
    }

    const int k = static_cast<int>(raw_sizes.size());
    std::vector<int> order(k);
    for (int c = 0; c < k; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (raw_sizes[a] != raw_sizes[b]) return raw_sizes[a] > raw_sizes[b];
        return first_member[a] < first_member[b];
    });
    std::vector<int> rank(k);
    for (int r = 0; r < k; ++r) rank[order[r]] = r;

    ComponentDecomposition d;
    d.labels.resize(n);
    for (int v = 0; v < n; ++v) d.labels[v] = rank[raw[v]];
    d.sizes.resize(k);
    for (int c = 0; c < k; ++c) d.sizes[rank[c]] = raw_sizes[c];
    d.giant = 0;
    return d;
}

std::vector<std::vector<int>> symmetric_adjacency(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        if (g.directed()) {
            for (int w : g.out_neighbors(v)) adj[v].push_back(w);
            for (int w : g.in_neighbors(v)) adj[v].push_back(w);
            sort_unique(adj[v]);
        } else {
            auto nb = g.neighbors(v);
            adj[v].assign(nb.begin(), nb.end());
        }
    }
    return adj;
}

}  // namespace

ComponentDecomposition connected_components(const Graph& g) {
    if (g.directed()) {
        throw std::invalid_argument(
            "connected_components requires an undirected graph; "
            "use weakly_connected_components for digraphs");
    }
    return decompose(g.node_count(), symmetric_adjacency(g));
}

ComponentDecomposition weakly_connected_components(const Graph& g) {
    if (!g.directed()) {
        throw std::invalid_argument("weakly_connected_components requires a directed graph");
    }
    return decompose(g.node_count(), symmetric_adjacency(g));
}

Graph symmetrize(const Graph& g) {
    if (!g.directed()) return g;
    std::vector<Graph::Edge> edges = g.edges();
    Graph out(g.node_count(), false, edges);
    out.set_names(g.names());
    return out;
}

Graph coauthorship_from_bipartite(const BipartiteGraph& b, int threshold) {
    if (threshold < 1) throw std::invalid_argument("coauthorship threshold must be >= 1");
    // Count shared papers per author pair by expanding each paper's author list.
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < b.paper_count(); ++p) {
        auto authors = b.authors_of(p);
        for (std::size_t x = 0; x < authors.size(); ++x) {
            for (std::size_t y = x + 1; y < authors.size(); ++y) {
                pairs.emplace_back(authors[x], authors[y]);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<Graph::Edge> edges;
    std::size_t i = 0;
    while (i < pairs.size()) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        if (static_cast<int>(j - i) >= threshold) edges.push_back(pairs[i]);
        i = j;
    }
    return Graph(b.author_count(), false, edges);
}

namespace {

// Shared-neighbor projection: connect all pairs inside each node's
// `lists[k]`.  Since self-loops are absent, the third node k is never one
// of the connected pair.
Graph project_common(int n, const Graph& g, bool use_in_lists) {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k) {
        auto list = use_in_lists ? g.in_neighbors(k) : g.out_neighbors(k);
        for (std::size_t x = 0; x < list.size(); ++x) {
            for (std::size_t y = x + 1; y < list.size(); ++y) {
                pairs.emplace_back(list[x], list[y]);
            }
        }
    }
    Graph out(n, false, pairs);
    out.set_names(g.names());
    return out;
}

}  // namespace

Graph citer_network(const Graph& g) {
    if (!g.directed()) throw std::invalid_argument("citer_network requires a directed graph");
    // i and j share a citee k  <=>  both i and j are in-neighbors of k.
    return project_common(g.node_count(), g, true);
}

Graph citee_network(const Graph& g) {
    if (!g.directed()) throw std::invalid_argument("citee_network requires a directed graph");
    // i and j share a citer k  <=>  both i and j are out-neighbors of k.
    return project_common(g.node_count(), g, false);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, std::span<const int> keep) {
    if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty node subset");
    const int n = g.node_count();
    std::vector<int> old_of_new(keep.begin(), keep.end());
    std::sort(old_of_new.begin(), old_of_new.end());
    if (std::adjacent_find(old_of_new.begin(), old_of_new.end()) != old_of_new.end()) {
        throw std::invalid_argument("induced_subgraph: duplicate node in subset");
    }
    std::vector<int> new_of_old(n, -1);
    for (std::size_t v = 0; v < old_of_new.size(); ++v) {
        check_node(old_of_new[v], n, "subset");
        new_of_old[old_of_new[v]] = static_cast<int>(v);
    }

    std::vector<Graph::Edge> edges;
    for (const auto& [i, j] : g.edges()) {
        if (new_of_old[i] != -1 && new_of_old[j] != -1) {
            edges.emplace_back(new_of_old[i], new_of_old[j]);
        }
    }
    Graph sub(static_cast<int>(old_of_new.size()), g.directed(), edges);
    if (!g.names().empty()) {
        std::vector<std::string> names;
        names.reserve(old_of_new.size());
        for (int v : old_of_new) names.push_back(g.names()[v]);
        sub.set_names(std::move(names));
    }
    return {std::move(sub), std::move(old_of_new)};
}

std::vector<int> largest_component_nodes(const Graph& g) {
    ComponentDecomposition d =
        g.directed() ? weakly_connected_components(g) : connected_components(g);
    if (d.count() == 0) return {};
    return d.members(d.giant);
}

}  // namespace specnet

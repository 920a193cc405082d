#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace specnet {

/// Sparse binary graph, undirected or directed.  No self-loops, no
/// multi-edges, no weights.  Immutable after construction; concurrent
/// reads are safe.
///
/// Undirected graphs keep one logical edge per unordered pair but answer
/// adjacency symmetrically.  Directed graphs keep both out- and in-neighbor
/// lists, since the citer/citee projections and centrality traversals need
/// both directions.
class Graph {
public:
    using Edge = std::pair<int, int>;

    /// Builds a graph over nodes 0..n-1.  Self-loops are dropped; duplicate
    /// edges (and, when undirected, mirrored pairs) collapse to one edge.
    /// Throws std::invalid_argument on out-of-range endpoints.
    Graph(int n, bool directed, std::span<const Edge> edges);

    Graph(int n, bool directed, std::initializer_list<Edge> edges)
        : Graph(n, directed, std::span<const Edge>(edges.begin(), edges.size())) {}

    int node_count() const { return n_; }
    bool directed() const { return directed_; }

    /// Number of logical edges: unordered pairs (undirected) or arcs (directed).
    std::int64_t edge_count() const { return edge_count_; }

    /// Undirected neighbors; throws on directed graphs.
    std::span<const int> neighbors(int v) const;
    /// Directed out-/in-neighbors; throw on undirected graphs.
    std::span<const int> out_neighbors(int v) const;
    std::span<const int> in_neighbors(int v) const;

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

    bool has_edge(int i, int j) const;

    /// Canonical edge list: i < j for undirected, (source, target) for directed.
    std::vector<Edge> edges() const;

    /// Optional external node identifiers (e.g. author names); empty if unset.
    const std::vector<std::string>& names() const { return names_; }
    void set_names(std::vector<std::string> names);

private:
    int n_ = 0;
    bool directed_ = false;
    std::int64_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;  // undirected: symmetric lists; directed: out-lists
    std::vector<std::vector<int>> in_;   // directed only
    std::vector<std::string> names_;
};

/// Author-paper incidence structure.  Every paper must have at least one
/// incident author; indices are validated at construction.
class BipartiteGraph {
public:
    using Incidence = std::pair<int, int>;  // (author, paper)

    BipartiteGraph(int n_authors, int n_papers, std::span<const Incidence> incidences);

    BipartiteGraph(int n_authors, int n_papers, std::initializer_list<Incidence> incidences)
        : BipartiteGraph(n_authors, n_papers,
                         std::span<const Incidence>(incidences.begin(), incidences.size())) {}

    int author_count() const { return n_left_; }
    int paper_count() const { return n_right_; }

    std::span<const int> papers_of(int author) const;
    std::span<const int> authors_of(int paper) const;

    /// Number of papers an author appears on (Table-1 style "number of papers").
    int left_degree(int author) const { return static_cast<int>(papers_of(author).size()); }

private:
    int n_left_ = 0;
    int n_right_ = 0;
    std::vector<std::vector<int>> papers_of_author_;
    std::vector<std::vector<int>> authors_of_paper_;
};

/// Connectivity decomposition.  Component ids are assigned by descending
/// size, ties broken by the smallest contained node index, so `sizes` is
/// sorted descending, sizes[c] is component c's size and the giant is
/// always component 0.
struct ComponentDecomposition {
    std::vector<int> labels;  // node -> component id
    std::vector<int> sizes;   // indexed by component id, descending
    int giant = 0;

    int count() const { return static_cast<int>(sizes.size()); }
    int giant_size() const { return sizes.empty() ? 0 : sizes[giant]; }

    /// Nodes of one component, ascending.
    std::vector<int> members(int component) const;
};

/// Components of an undirected graph.  Throws on directed input; use
/// weakly_connected_components for digraphs.
ComponentDecomposition connected_components(const Graph& g);

/// Components of a digraph with edge directions ignored.
ComponentDecomposition weakly_connected_components(const Graph& g);

/// Undirected copy of a digraph (edge iff an arc exists in either direction).
Graph symmetrize(const Graph& g);

/// Undirected coauthorship graph: authors i, j adjacent iff they share at
/// least `threshold` common papers.  All authors are retained as nodes,
/// including isolated ones.  threshold must be >= 1.
Graph coauthorship_from_bipartite(const BipartiteGraph& b, int threshold);

/// Citer network: undirected edge (i, j), i != j, iff some third node k is
/// cited by both i and j.
Graph citer_network(const Graph& g);

/// Citee network: undirected edge (i, j), i != j, iff some third node k
/// cites both i and j.
Graph citee_network(const Graph& g);

/// Subgraph induced on `keep` (non-empty, valid, duplicate-free).  Returns
/// the reindexed graph and the map new-index -> original-index.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, std::span<const int> keep);

/// Nodes of the largest component (weak for directed input), ascending.
std::vector<int> largest_component_nodes(const Graph& g);

}  // namespace specnet

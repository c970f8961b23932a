#pragma once

#include <span>
#include <utility>
#include <vector>

#include "contractia/errors.hpp"
#include "contractia/vertex_set.hpp"

namespace contractia {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph; duplicate edges collapse, loops and
    /// out-of-range ids throw InvalidArgument.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }
    VertexSet vertices() const { return VertexSet::range(order()); }

    VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return adjacency_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
    /// 0 for the empty graph.
    int min_degree() const;

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    /// Same vertex set plus the given edges.
    Graph with_edges(std::span<const Edge> extra) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adjacency_;
    int edge_count_ = 0;
};

/// A graph carved out of a parent graph, with the id translation both ways.
struct Subgraph {
    Graph graph;
    /// to_original[new_id] = parent id
    std::vector<Vertex> to_original;
    /// from_original[parent_id] = new id, or -1 when the vertex was dropped
    std::vector<Vertex> from_original;

    VertexSet lift(VertexSet local) const;
    VertexSet project(VertexSet parent) const;
};

/// G - R. Throws InvalidArgument unless R is a subset of V(G).
Subgraph delete_set(const Graph& g, VertexSet removed);
/// G(R). Kept vertices are renumbered in ascending parent-id order.
Subgraph induced(const Graph& g, VertexSet kept);

/// Vertices outside R adjacent to some member of R.
VertexSet neighbors_of_set(const Graph& g, VertexSet r);
/// e_G(R, R1); the sets must be disjoint.
int edges_between(const Graph& g, VertexSet r, VertexSet r1);
/// Whether G(R) is connected. The empty set is not connected.
bool is_connected_set(const Graph& g, VertexSet r);

}  // namespace contractia

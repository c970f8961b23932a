#pragma once

#include <vector>

#include "contractia/graph.hpp"

namespace contractia {

// Most predicates here take a `within` mask and act on the induced subgraph
// G(within) while keeping the parent's vertex ids. The overloads without a
// mask act on the whole graph.

/// Vertices reachable from v inside G(within); v must be in `within`.
VertexSet component_of(const Graph& g, VertexSet within, Vertex v);
/// Components of G(within), ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);

/// G(within) is connected; false for the empty set.
bool is_connected(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

/// G(within) is 2-connected. At least three vertices are required, so K2
/// and K1 are not 2-connected while K3 is.
bool is_biconnected(const Graph& g, VertexSet within);
bool is_biconnected(const Graph& g);

/// At least k+1 vertices and G stays connected after deleting any k-1.
bool is_k_connected(const Graph& g, int k);

/// G(within) is connected and every vertex has exactly two neighbours there.
bool is_simple_cycle(const Graph& g, VertexSet within);

/// Exact vertex connectivity (n-1 for complete graphs) computed from
/// vertex-disjoint path counts. Requires n >= 2.
int vertex_connectivity(const Graph& g);
/// The same quantity by exhaustive search over deletion sets (n <= 16).
int exhaustive_vertex_connectivity(const Graph& g);

/// A separating vertex set and two vertices it separates.
struct Cutset {
    VertexSet vertices;
    Vertex witness_a = -1;
    Vertex witness_b = -1;

    bool operator==(const Cutset&) const = default;
};

/// Every `size`-subset of `within` whose removal disconnects G(within), in
/// lexicographic order. Throws InvalidArgument when size >= |within| - 1.
std::vector<Cutset> enumerate_cutsets(const Graph& g, VertexSet within, int size);
std::vector<Cutset> enumerate_cutsets(const Graph& g, int size);

/// R splits X when X - R meets at least two components of G(within) - R.
/// Throws PreconditionError if R is not a cutset of G(within).
bool splits(const Graph& g, VertexSet within, VertexSet r, VertexSet x);
bool splits(const Graph& g, VertexSet r, VertexSet x);

/// Neither cutset splits the other.
bool independent(const Graph& g, VertexSet within, const Cutset& s, const Cutset& t);
bool independent(const Graph& g, const Cutset& s, const Cutset& t);

}  // namespace contractia

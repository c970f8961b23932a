#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contractia/connectivity.hpp"

namespace contractia {

/// A maximal vertex set split by no single 2-cutset.
struct Part {
    VertexSet vertices;
    /// Members lying in some single cutset.
    VertexSet boundary;
    VertexSet interior;
    /// G'(A) is a cycle, where G' adds an edge for every single cutset.
    bool is_cycle = false;
    /// The part is a leaf of the block tree.
    bool is_pendant = false;

    int length() const { return vertices.size(); }
};

/// Bipartite incidence between single cutsets and parts: S -- A iff S is a
/// subset of A. Node ids 0..cutset_count-1 are cutsets, the rest are parts.
class BlockTree {
public:
    enum class NodeKind { cutset, part };
    struct Node {
        NodeKind kind;
        /// Index into Decomposition::single_cutsets or ::parts.
        int index;
    };

    BlockTree() = default;
    BlockTree(int cutset_count, int part_count, std::vector<std::pair<int, int>> edges);

    const std::vector<Node>& nodes() const { return nodes_; }
    /// (cutset node, part node) pairs.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int cutset_count() const { return cutset_count_; }
    int degree(int node) const { return static_cast<int>(adjacent_[node].size()); }
    const std::vector<int>& adjacent(int node) const { return adjacent_[node]; }
    int part_node(int part_index) const { return cutset_count_ + part_index; }

    bool is_connected() const;
    /// Connected and |edges| == |nodes| - 1.
    bool is_tree() const;
    /// Degree-1 nodes. A single-node tree has no leaves.
    std::vector<int> leaves() const;

private:
    int cutset_count_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacent_;
};

struct Decomposition {
    /// The vertex set of the decomposed (sub)graph.
    VertexSet universe;
    std::vector<Cutset> single_cutsets;
    /// Sorted lexicographically by member list.
    std::vector<Part> parts;
    BlockTree tree;

    /// Union of all single cutsets.
    VertexSet cutset_vertices() const;
};

// Every operation below requires G(within) to be 2-connected and throws
// PreconditionError otherwise.

/// 2-cutsets of G(within) independent of every other 2-cutset.
std::vector<Cutset> single_cutsets(const Graph& g, VertexSet within);
std::vector<Cutset> single_cutsets(const Graph& g);

/// Parts, boundary and interior, cycle and pendant flags, and the block tree.
Decomposition decompose(const Graph& g, VertexSet within);
Decomposition decompose(const Graph& g);

/// G plus the edge ab for every single cutset {a, b} of G(within). Vertices
/// outside `within` keep their original edges.
Graph augmented(const Graph& g, VertexSet within);
Graph augmented(const Graph& g);

/// Builds and validates the block tree; throws InternalError if it is not a
/// tree whose leaves are all parts.
BlockTree block_tree(const Graph& g, VertexSet within);
BlockTree block_tree(const Graph& g);

/// Pendant parts in part order.
std::vector<Part> classify_pendant(const Decomposition& d);

/// Graphviz rendering of the block tree: cutsets boxed, parts oval.
std::string to_dot(const Decomposition& d);

}  // namespace contractia

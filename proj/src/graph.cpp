#include "contractia/graph.hpp"

#include <algorithm>
#include <string>

#include "contractia/connectivity.hpp"

namespace contractia {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0 || n > VertexSet::kMaxVertices) {
        throw InvalidArgument("vertex count " + std::to_string(n) + " outside 0.." +
                              std::to_string(VertexSet::kMaxVertices));
    }
    Graph g;
    g.adjacency_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an id outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw InvalidArgument("loop edge at vertex " + std::to_string(u));
        g.adjacency_[u].insert(v);
        g.adjacency_[v].insert(u);
    }
    int degree_sum = 0;
    for (VertexSet a : g.adjacency_) degree_sum += a.size();
    g.edge_count_ = degree_sum / 2;
    return g;
}

int Graph::min_degree() const {
    if (adjacency_.empty()) return 0;
    int best = VertexSet::kMaxVertices;
    for (VertexSet a : adjacency_) best = std::min(best, a.size());
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
    std::vector<Edge> all = edges();
    all.insert(all.end(), extra.begin(), extra.end());
    return from_edges(order(), all);
}

VertexSet Subgraph::lift(VertexSet local) const {
    VertexSet out;
    for (Vertex v : local) out.insert(to_original.at(v));
    return out;
}

VertexSet Subgraph::project(VertexSet parent) const {
    VertexSet out;
    for (Vertex v : parent) {
        if (v < static_cast<int>(from_original.size()) && from_original[v] >= 0) {
            out.insert(from_original[v]);
        }
    }
    return out;
}

namespace {

void require_subset(const Graph& g, VertexSet r, const char* what) {
    if (!r.is_subset_of(g.vertices())) {
        throw InvalidArgument(std::string(what) + ": set " + r.to_string() +
                              " is not contained in V(G)");
    }
}

}  // namespace

Subgraph induced(const Graph& g, VertexSet kept) {
    require_subset(g, kept, "induced");
    Subgraph sub;
    sub.from_original.assign(g.order(), -1);
    for (Vertex v : kept) {
        sub.from_original[v] = static_cast<Vertex>(sub.to_original.size());
        sub.to_original.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (kept.contains(u) && kept.contains(v)) {
            edges.emplace_back(sub.from_original[u], sub.from_original[v]);
        }
    }
    sub.graph = Graph::from_edges(static_cast<int>(sub.to_original.size()), edges);
    return sub;
}

Subgraph delete_set(const Graph& g, VertexSet removed) {
    require_subset(g, removed, "delete_set");
    return induced(g, g.vertices() - removed);
}

VertexSet neighbors_of_set(const Graph& g, VertexSet r) {
    VertexSet out;
    for (Vertex v : r) out |= g.neighbors(v);
    return out - r;
}

int edges_between(const Graph& g, VertexSet r, VertexSet r1) {
    if (r.intersects(r1)) {
        throw InvalidArgument("edges_between: sets " + r.to_string() + " and " + r1.to_string() +
                              " overlap");
    }
    int count = 0;
    for (Vertex v : r) count += (g.neighbors(v) & r1).size();
    return count;
}

bool is_connected_set(const Graph& g, VertexSet r) { return is_connected(g, r); }

}  // namespace contractia

#include "contractia/decomposition.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace contractia {

BlockTree::BlockTree(int cutset_count, int part_count, std::vector<std::pair<int, int>> edges)
    : cutset_count_(cutset_count), edges_(std::move(edges)) {
    for (int i = 0; i < cutset_count; ++i) nodes_.push_back({NodeKind::cutset, i});
    for (int i = 0; i < part_count; ++i) nodes_.push_back({NodeKind::part, i});
    adjacent_.resize(nodes_.size());
    for (auto [a, b] : edges_) {
        adjacent_[a].push_back(b);
        adjacent_[b].push_back(a);
    }
}

bool BlockTree::is_connected() const {
    if (nodes_.empty()) return false;
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : adjacent_[a]) {
            if (!seen[b]) {
                seen[b] = true;
                ++reached;
                stack.push_back(b);
            }
        }
    }
    return reached == nodes_.size();
}

bool BlockTree::is_tree() const { return is_connected() && edges_.size() + 1 == nodes_.size(); }

std::vector<int> BlockTree::leaves() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
        if (degree(i) == 1) out.push_back(i);
    }
    return out;
}

VertexSet Decomposition::cutset_vertices() const {
    VertexSet out;
    for (const Cutset& s : single_cutsets) out |= s.vertices;
    return out;
}

namespace {

void require_biconnected(const Graph& g, VertexSet within, const char* op) {
    if (!is_biconnected(g, within)) {
        throw PreconditionError(std::string(op) + ": graph on " + within.to_string() +
                                " is not 2-connected");
    }
}

std::vector<Cutset> single_cutsets_unchecked(const Graph& g, VertexSet within) {
    if (within.size() < 4) return {};
    std::vector<Cutset> all = enumerate_cutsets(g, within, 2);
    std::vector<Cutset> out;
    for (const Cutset& s : all) {
        bool single = std::all_of(all.begin(), all.end(), [&](const Cutset& t) {
            return independent(g, within, s, t);
        });
        if (single) out.push_back(s);
    }
    return out;
}

// Bron-Kerbosch with pivoting over a bitset adjacency.
void maximal_cliques(const std::array<VertexSet, VertexSet::kMaxVertices>& adj, VertexSet clique,
                     VertexSet candidates, VertexSet excluded, std::vector<VertexSet>& out) {
    if (candidates.empty() && excluded.empty()) {
        out.push_back(clique);
        return;
    }
    Vertex pivot = (candidates | excluded).first();
    int best = -1;
    for (Vertex u : candidates | excluded) {
        int c = (candidates & adj[u]).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (Vertex v : candidates - adj[pivot]) {
        maximal_cliques(adj, clique.with(v), candidates & adj[v], excluded & adj[v], out);
        candidates.erase(v);
        excluded.insert(v);
    }
}

}  // namespace

std::vector<Cutset> single_cutsets(const Graph& g, VertexSet within) {
    require_biconnected(g, within, "single_cutsets");
    return single_cutsets_unchecked(g, within);
}

std::vector<Cutset> single_cutsets(const Graph& g) { return single_cutsets(g, g.vertices()); }

Graph augmented(const Graph& g, VertexSet within) {
    require_biconnected(g, within, "augmented");
    std::vector<Edge> extra;
    for (const Cutset& s : single_cutsets_unchecked(g, within)) {
        extra.emplace_back(s.vertices.first(), s.vertices.without(s.vertices.first()).first());
    }
    return g.with_edges(extra);
}

Graph augmented(const Graph& g) { return augmented(g, g.vertices()); }

Decomposition decompose(const Graph& g, VertexSet within) {
    require_biconnected(g, within, "decompose");
    Decomposition d;
    d.universe = within;
    d.single_cutsets = single_cutsets_unchecked(g, within);

    // Two vertices may share a part iff no single cutset separates them, so
    // parts are exactly the maximal cliques of this compatibility relation.
    std::array<VertexSet, VertexSet::kMaxVertices> compatible{};
    for (Vertex v : within) compatible[v] = within.without(v);
    for (const Cutset& s : d.single_cutsets) {
        VertexSet rest = within - s.vertices;
        for (VertexSet c : components(g, rest)) {
            for (Vertex v : c) compatible[v] -= rest - c;
        }
    }
    std::vector<VertexSet> cliques;
    maximal_cliques(compatible, VertexSet{}, within, VertexSet{}, cliques);
    std::sort(cliques.begin(), cliques.end(), lex_less);

    for (VertexSet a : cliques) {
        for (const Cutset& s : d.single_cutsets) {
            if (splits(g, within, s.vertices, a)) {
                throw InternalError("part " + a.to_string() + " is split by " +
                                    s.vertices.to_string());
            }
        }
        for (Vertex y : within - a) {
            bool extendable = std::none_of(d.single_cutsets.begin(), d.single_cutsets.end(),
                                           [&](const Cutset& s) {
                                               return splits(g, within, s.vertices, a.with(y));
                                           });
            if (extendable) {
                throw InternalError("part " + a.to_string() + " is not maximal; " +
                                    std::to_string(y) + " can join");
            }
        }
    }
    if (!d.single_cutsets.empty() &&
        std::find(cliques.begin(), cliques.end(), within) != cliques.end()) {
        throw InternalError("a part equals the whole vertex set although single cutsets exist");
    }

    VertexSet boundary_all = d.cutset_vertices();
    std::vector<Edge> extra;
    for (const Cutset& s : d.single_cutsets) {
        extra.emplace_back(s.vertices.first(), s.vertices.without(s.vertices.first()).first());
    }
    Graph g_prime = g.with_edges(extra);

    std::vector<std::pair<int, int>> tree_edges;
    const int cutset_count = static_cast<int>(d.single_cutsets.size());
    for (int pi = 0; pi < static_cast<int>(cliques.size()); ++pi) {
        Part part;
        part.vertices = cliques[pi];
        part.boundary = cliques[pi] & boundary_all;
        part.interior = cliques[pi] - boundary_all;
        part.is_cycle = is_simple_cycle(g_prime, part.vertices);
        d.parts.push_back(part);
        for (int si = 0; si < cutset_count; ++si) {
            if (d.single_cutsets[si].vertices.is_subset_of(part.vertices)) {
                tree_edges.emplace_back(si, cutset_count + pi);
            }
        }
    }
    d.tree = BlockTree(cutset_count, static_cast<int>(d.parts.size()), std::move(tree_edges));

    if (!d.tree.is_tree()) {
        throw InternalError("block tree of " + within.to_string() + " is not a tree");
    }
    for (int leaf : d.tree.leaves()) {
        const BlockTree::Node& node = d.tree.nodes()[leaf];
        if (node.kind != BlockTree::NodeKind::part) {
            throw InternalError("block tree leaf is the cutset " +
                                d.single_cutsets[node.index].vertices.to_string());
        }
        d.parts[node.index].is_pendant = true;
    }
    return d;
}

Decomposition decompose(const Graph& g) { return decompose(g, g.vertices()); }

BlockTree block_tree(const Graph& g, VertexSet within) { return decompose(g, within).tree; }

BlockTree block_tree(const Graph& g) { return block_tree(g, g.vertices()); }

std::vector<Part> classify_pendant(const Decomposition& d) {
    std::vector<Part> out;
    for (const Part& p : d.parts) {
        if (p.is_pendant) out.push_back(p);
    }
    return out;
}

std::string to_dot(const Decomposition& d) {
    std::ostringstream out;
    out << "graph block_tree {\n";
    for (size_t i = 0; i < d.single_cutsets.size(); ++i) {
        out << "  c" << i << " [shape=box, label=\"" << d.single_cutsets[i].vertices.to_string()
            << "\"];\n";
    }
    for (size_t i = 0; i < d.parts.size(); ++i) {
        out << "  p" << i << " [shape=ellipse, label=\"" << d.parts[i].vertices.to_string()
            << "\"];\n";
    }
    const int cutset_count = d.tree.cutset_count();
    for (auto [c, p] : d.tree.edges()) {
        out << "  c" << c << " -- p" << (p - cutset_count) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace contractia

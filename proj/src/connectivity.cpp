#include "contractia/connectivity.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <string>

#include "contractia/subsets.hpp"

namespace contractia {

VertexSet component_of(const Graph& g, VertexSet within, Vertex v) {
    VertexSet reached = VertexSet::single(v);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex u : frontier) next |= g.neighbors(u);
        next = (next & within) - reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet c = component_of(g, within, rest.first());
        out.push_back(c);
        rest -= c;
    }
    return out;
}

bool is_connected(const Graph& g, VertexSet within) {
    if (within.empty()) return false;
    return component_of(g, within, within.first()) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

bool is_biconnected(const Graph& g, VertexSet within) {
    if (within.size() < 3 || !is_connected(g, within)) return false;
    for (Vertex v : within) {
        if (!is_connected(g, within.without(v))) return false;
    }
    return true;
}

bool is_biconnected(const Graph& g) { return is_biconnected(g, g.vertices()); }

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    if (g.order() < k + 1) return false;
    if (k > 3) return vertex_connectivity(g) >= k;
    VertexSet all = g.vertices();
    return for_each_subset(all, k - 1, [&](VertexSet removed) {
        return is_connected(g, all - removed);
    });
}

bool is_simple_cycle(const Graph& g, VertexSet within) {
    if (within.size() < 3) return false;
    for (Vertex v : within) {
        if ((g.neighbors(v) & within).size() != 2) return false;
    }
    return is_connected(g, within);
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths for nonadjacent s, t,
// via unit vertex capacities on the split graph (in = 2v, out = 2v + 1).
int local_connectivity(const Graph& g, Vertex s, Vertex t) {
    const int n = g.order();
    const int nodes = 2 * n;
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    std::vector<int> cap(static_cast<size_t>(nodes) * nodes, 0);
    auto at = [&](int a, int b) -> int& { return cap[static_cast<size_t>(a) * nodes + b]; };
    for (Vertex v = 0; v < n; ++v) {
        at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
        for (Vertex u : g.neighbors(v)) at(2 * v + 1, 2 * u) = kInf;
    }
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent(nodes);
    while (true) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = source;
        std::queue<int> queue;
        queue.push(source);
        while (!queue.empty() && parent[sink] < 0) {
            int a = queue.front();
            queue.pop();
            for (int b = 0; b < nodes; ++b) {
                if (parent[b] < 0 && at(a, b) > 0) {
                    parent[b] = a;
                    queue.push(b);
                }
            }
        }
        if (parent[sink] < 0) break;
        for (int b = sink; b != source; b = parent[b]) {
            at(parent[b], b) -= 1;
            at(b, parent[b]) += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw InvalidArgument("vertex_connectivity needs at least 2 vertices");
    // Even's scheme: some vertex among the first kappa + 1 lies outside any
    // minimum separator, so pairs starting there suffice.
    int best = n - 1;
    for (Vertex s = 0; s < n && s <= best; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            best = std::min(best, local_connectivity(g, s, t));
        }
    }
    return best;
}

int exhaustive_vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw InvalidArgument("exhaustive_vertex_connectivity needs at least 2 vertices");
    if (n > 16) throw InvalidArgument("exhaustive_vertex_connectivity is limited to 16 vertices");
    VertexSet all = g.vertices();
    for (int size = 0; size <= n - 2; ++size) {
        bool found = !for_each_subset(all, size, [&](VertexSet removed) {
            return is_connected(g, all - removed);
        });
        if (found) return size;
    }
    return n - 1;
}

std::vector<Cutset> enumerate_cutsets(const Graph& g, VertexSet within, int size) {
    if (size < 0 || size >= within.size() - 1) {
        throw InvalidArgument("cutset size " + std::to_string(size) + " must be below " +
                              std::to_string(within.size() - 1));
    }
    std::vector<Cutset> out;
    for_each_subset(within, size, [&](VertexSet removed) {
        VertexSet rest = within - removed;
        VertexSet first = component_of(g, rest, rest.first());
        if (first != rest) out.push_back({removed, rest.first(), (rest - first).first()});
        return true;
    });
    return out;
}

std::vector<Cutset> enumerate_cutsets(const Graph& g, int size) {
    return enumerate_cutsets(g, g.vertices(), size);
}

bool splits(const Graph& g, VertexSet within, VertexSet r, VertexSet x) {
    VertexSet rest = within - r;
    if (!r.is_subset_of(within) || rest.empty() || is_connected(g, rest)) {
        throw PreconditionError("splits: " + r.to_string() + " is not a cutset");
    }
    VertexSet target = (x & within) - r;
    if (target.empty()) return false;
    return !target.is_subset_of(component_of(g, rest, target.first()));
}

bool splits(const Graph& g, VertexSet r, VertexSet x) { return splits(g, g.vertices(), r, x); }

bool independent(const Graph& g, VertexSet within, const Cutset& s, const Cutset& t) {
    return !splits(g, within, s.vertices, t.vertices) && !splits(g, within, t.vertices, s.vertices);
}

bool independent(const Graph& g, const Cutset& s, const Cutset& t) {
    return independent(g, g.vertices(), s, t);
}

}  // namespace contractia

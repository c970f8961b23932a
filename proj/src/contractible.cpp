#include "contractia/contractible.hpp"

#include <algorithm>

#include "contractia/connectivity.hpp"
#include "contractia/subsets.hpp"

namespace contractia {

std::string to_string(ContractibleClause clause) {
    switch (clause) {
        case ContractibleClause::ok: return "ok";
        case ContractibleClause::set_not_connected: return "set-not-connected";
        case ContractibleClause::remainder_not_2_connected: return "remainder-not-2-connected";
    }
    return "unknown";
}

std::string to_string(OracleStatus status) {
    switch (status) {
        case OracleStatus::found: return "found";
        case OracleStatus::none: return "none";
        case OracleStatus::budget_exceeded: return "budget";
    }
    return "unknown";
}

ContractibleClause contractibility_clause(const Graph& g, VertexSet w) {
    VertexSet all = g.vertices();
    if (w.empty()) throw InvalidArgument("contractibility of the empty set is undefined");
    if (!w.is_subset_of(all)) throw InvalidArgument("set " + w.to_string() + " leaves V(G)");
    if (w == all) throw InvalidArgument("contractibility of V(G) itself is undefined");
    if (!is_connected(g, w)) return ContractibleClause::set_not_connected;
    if (!is_biconnected(g, all - w)) return ContractibleClause::remainder_not_2_connected;
    return ContractibleClause::ok;
}

bool is_contractible(const Graph& g, VertexSet w) {
    return contractibility_clause(g, w) == ContractibleClause::ok;
}

std::optional<Vertex> extend_once(const Graph& g, VertexSet w) {
    if (!is_contractible(g, w)) {
        throw PreconditionError("extend_once: " + w.to_string() + " is not contractible");
    }
    VertexSet all = g.vertices();
    // W + x stays connected only for x adjacent to W.
    for (Vertex x : neighbors_of_set(g, w)) {
        if (is_biconnected(g, all - w.with(x))) return x;
    }
    return std::nullopt;
}

namespace {

class ConnectedSetSearch {
public:
    ConnectedSetSearch(const Graph& g, int size, std::uint64_t budget, std::uint64_t& examined)
        : g_(g), all_(g.vertices()), size_(size), budget_(budget), examined_(examined) {}

    /// Returns true once a contractible set is found or the budget runs out.
    bool run() {
        for (Vertex root : all_) {
            allowed_ = VertexSet::from_bits(all_.bits() & ~((std::uint64_t{1} << root) - 1));
            if (allowed_.size() < size_) break;
            if (grow(VertexSet::single(root), VertexSet{})) return true;
        }
        return false;
    }

    std::optional<VertexSet> found;
    bool out_of_budget = false;

private:
    // Include/exclude branching on the smallest frontier vertex visits every
    // connected set with minimum `root` exactly once.
    bool grow(VertexSet current, VertexSet excluded) {
        if (current.size() == size_) {
            if (examined_ >= budget_) {
                out_of_budget = true;
                return true;
            }
            ++examined_;
            if (is_biconnected(g_, all_ - current)) {
                found = current;
                return true;
            }
            return false;
        }
        VertexSet frontier = (neighbors_of_set(g_, current) & allowed_) - excluded;
        if (frontier.empty()) return false;
        Vertex v = frontier.first();
        if (grow(current.with(v), excluded)) return true;
        return grow(current, excluded.with(v));
    }

    const Graph& g_;
    VertexSet all_;
    VertexSet allowed_;
    int size_;
    std::uint64_t budget_;
    std::uint64_t& examined_;
};

void require_oracle_args(int size_min, int size_max) {
    if (size_min < 1) throw InvalidArgument("oracle size_min must be at least 1");
    if (size_max < size_min) throw InvalidArgument("oracle size_max is below size_min");
}

OracleResult verified(const Graph& g, OracleResult r) {
    if (r.set && !is_contractible(g, *r.set)) {
        throw InternalError("oracle witness " + r.set->to_string() + " failed re-verification");
    }
    return r;
}

}  // namespace

OracleResult oracle_find(const Graph& g, int size_min, int size_max, OracleOptions options) {
    require_oracle_args(size_min, size_max);
    OracleResult result;
    const int largest = std::min(size_max, g.order() - 3);
    for (int size = size_min; size <= largest; ++size) {
        ConnectedSetSearch search(g, size, options.budget, result.examined);
        if (search.run()) {
            if (search.out_of_budget) {
                result.status = OracleStatus::budget_exceeded;
                return result;
            }
            result.status = OracleStatus::found;
            result.set = search.found;
            return verified(g, result);
        }
    }
    return result;
}

OracleResult oracle_find_by_combinations(const Graph& g, int size_min, int size_max,
                                         OracleOptions options) {
    require_oracle_args(size_min, size_max);
    OracleResult result;
    VertexSet all = g.vertices();
    const int largest = std::min(size_max, g.order() - 3);
    for (int size = size_min; size <= largest; ++size) {
        bool stopped = !for_each_subset(all, size, [&](VertexSet w) {
            if (result.examined >= options.budget) {
                result.status = OracleStatus::budget_exceeded;
                return false;
            }
            ++result.examined;
            if (is_connected(g, w) && is_biconnected(g, all - w)) {
                result.status = OracleStatus::found;
                result.set = w;
                return false;
            }
            return true;
        });
        if (stopped) return verified(g, result);
    }
    return result;
}

namespace {

bool induces_path(const Graph& g, VertexSet s) {
    if (!is_connected(g, s)) return false;
    int degree_sum = 0;
    for (Vertex v : s) {
        int d = (g.neighbors(v) & s).size();
        if (d > 2) return false;
        degree_sum += d;
    }
    return degree_sum / 2 == s.size() - 1;
}

}  // namespace

StructureReport check_structure_lemmas(const Graph& g, VertexSet w) {
    if (!is_contractible(g, w)) {
        throw PreconditionError("check_structure_lemmas: " + w.to_string() + " is not contractible");
    }
    if (extend_once(g, w)) {
        throw PreconditionError("check_structure_lemmas: " + w.to_string() + " is not maximal");
    }
    const VertexSet h = g.vertices() - w;
    if (is_simple_cycle(g, h)) {
        throw PreconditionError("check_structure_lemmas: G - W is a simple cycle");
    }

    StructureReport report;
    auto fail = [&](const std::string& check, const std::string& detail) {
        report.violations.push_back(check + ": " + detail);
    };

    Decomposition d = decompose(g, h);
    report.pendant_parts = classify_pendant(d);

    for (const Part& part : d.parts) {
        if (!part.is_cycle) continue;
        for (Vertex v : part.interior) {
            if (!g.neighbors(v).intersects(w)) {
                fail("cycle-part-inner-adjacent-to-W",
                     "vertex " + std::to_string(v) + " of " + part.vertices.to_string());
            }
        }
    }

    const auto& pendant = report.pendant_parts;
    if (pendant.size() < 2) {
        fail("at-least-two-pendant-parts", std::to_string(pendant.size()) + " found");
    }
    for (const Part& part : pendant) {
        if (!part.is_cycle) fail("pendant-part-is-cycle", part.vertices.to_string());
        if (part.length() < 4) {
            fail("pendant-cycle-length-at-least-4",
                 part.vertices.to_string() + " has length " + std::to_string(part.length()));
        }
        if (!is_biconnected(g, h - part.interior)) {
            fail("remainder-minus-pendant-interior-2-connected", part.vertices.to_string());
        }
    }

    for (size_t i = 0; i < pendant.size(); ++i) {
        for (size_t j = i + 1; j < pendant.size(); ++j) {
            const VertexSet w1 = pendant[i].interior;
            const VertexSet w2 = pendant[j].interior;
            const std::string pair = w1.to_string() + "/" + w2.to_string();
            if (!induces_path(g, w1) || !induces_path(g, w2)) fail("interiors-simple-paths", pair);
            if (w1.size() < 2 || w2.size() < 2) fail("interiors-at-least-2-vertices", pair);
            if (w1.intersects(w2)) fail("interiors-disjoint", pair);
            for (Vertex v : w1 | w2) {
                if ((g.neighbors(v) & h).size() != 2) {
                    fail("interior-degree-2-in-remainder", "vertex " + std::to_string(v));
                }
            }
            if (!is_biconnected(g, h - w1) || !is_biconnected(g, h - w2)) {
                fail("remainder-minus-interior-2-connected", pair);
            }
            if (neighbors_of_set(g, w1).intersects(w2) || neighbors_of_set(g, w2).intersects(w1)) {
                fail("interiors-nonadjacent", pair);
            }
        }
    }

    return report;
}

}  // namespace contractia

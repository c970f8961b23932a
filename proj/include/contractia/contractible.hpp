#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contractia/decomposition.hpp"
#include "contractia/graph.hpp"

namespace contractia {

/// Which half of the contractibility predicate holds.
enum class ContractibleClause {
    ok,
    set_not_connected,
    remainder_not_2_connected,
};

std::string to_string(ContractibleClause clause);

/// First failing clause of "G(W) connected and G - W 2-connected".
/// Throws InvalidArgument when W is empty, equals V(G), or leaves V(G).
ContractibleClause contractibility_clause(const Graph& g, VertexSet w);
bool is_contractible(const Graph& g, VertexSet w);

/// Smallest x outside W with W + x contractible; nullopt means W is maximal.
/// Throws PreconditionError if W itself is not contractible.
std::optional<Vertex> extend_once(const Graph& g, VertexSet w);

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleOptions {
    /// Upper bound on candidate sets examined before giving up.
    std::uint64_t budget = kDefaultOracleBudget;
};

enum class OracleStatus { found, none, budget_exceeded };

std::string to_string(OracleStatus status);

struct OracleResult {
    OracleStatus status = OracleStatus::none;
    std::optional<VertexSet> set;
    std::uint64_t examined = 0;
};

/// Exhaustive search for a contractible W with size_min <= |W| <= size_max.
/// Sizes are tried smallest first; within a size, connected sets are grown
/// from their smallest vertex outward, so the witness is deterministic.
/// Every returned set is re-verified.
OracleResult oracle_find(const Graph& g, int size_min, int size_max, OracleOptions options = {});

/// Same question answered by plain lexicographic enumeration of all subsets,
/// sharing no enumeration code with oracle_find. Used to double-check
/// negative answers.
OracleResult oracle_find_by_combinations(const Graph& g, int size_min, int size_max,
                                         OracleOptions options = {});

/// Result of checking the structure of G - W for a maximal contractible W.
struct StructureReport {
    bool is_cycle_remainder = false;
    std::vector<Part> pendant_parts;
    /// "<check>: <detail>" for every failed check; empty when all passed.
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks, for H = G - W:
///  - every inner vertex of a cycle part has a neighbour in W;
///  - at least two pendant parts, all cycles of length at least 4;
///  - H - Int(A) is 2-connected for every pendant part A;
///  - for every pair of pendant parts with interiors W1, W2: both induce
///    paths on at least 2 vertices, are disjoint, have H-degree 2, leave H
///    2-connected when removed, and have no edges between them.
/// Throws PreconditionError unless W is maximal contractible and H is not a
/// simple cycle.
StructureReport check_structure_lemmas(const Graph& g, VertexSet w);

}  // namespace contractia

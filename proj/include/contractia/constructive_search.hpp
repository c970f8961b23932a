#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "contractia/contractible.hpp"

namespace contractia {

/// floor((2k + 1) / 3) + 2, the minimum degree under which a k-contractible
/// set is guaranteed constructively. Requires k >= 5.
int delta_threshold(int k);

/// floor((k - 5) / 3), the slack c used at induction level k.
int level_slack(int k);

/// (v1, v2, v3, v4): v1 v2 adjacent, v3 and v4 the pair whose common
/// neighbour in W gets swapped out.
using Quadruple = std::array<Vertex, 4>;

/// A hypothesis of the single-vertex exchange step does not hold.
class LemmaConditionError : public PreconditionError {
public:
    LemmaConditionError(int condition, const std::string& what)
        : PreconditionError(what), condition_(condition) {}
    /// 1: degree/adjacency, 2: 2-connectivity after exchange, 3: counting.
    int condition() const { return condition_; }

private:
    int condition_;
};

/// Every vertex of W is non-adjacent to {v1, v2}, so there is nothing to
/// route forbidden vertices to.
class NoRoutingTarget : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Bookkeeping of one exchange W -> {v1, v2} + (W - x).
struct SelectionTrace {
    Quadruple quad{};
    /// N(v3) & N(v4) & W
    VertexSet candidates;
    /// W - N({v1, v2})
    VertexSet forbidden;
    /// For each forbidden f, the next vertex on a shortest path inside G(W)
    /// from f to W - forbidden.
    VertexSet path_second;
    Vertex chosen = -1;
    VertexSet result;
    /// Number of x in candidates - path_second for which the exchange is
    /// contractible; filled only when cross-checking.
    std::optional<int> valid_outside_path_second;
    /// Set when the chosen x failed and another candidate was used instead.
    std::optional<Vertex> fallback_choice;
};

/// Computes C, F, P and picks the smallest x in C - P.
/// Throws NoRoutingTarget if F = W, LemmaConditionError(3) if |C| <= |F|.
SelectionTrace select_common_neighbor(const Graph& g, VertexSet w, const Quadruple& quad);

/// Verifies the three exchange conditions, performs the exchange and checks
/// the result. If the selected x unexpectedly fails, every other candidate
/// is tried and the trace records the fallback. `cross_check` fills
/// SelectionTrace::valid_outside_path_second.
SelectionTrace lemma4_extend(const Graph& g, VertexSet w, const Quadruple& quad,
                             bool cross_check = false);

enum class LemmaCase {
    cycle_remainder,      // G - W is a simple cycle
    long_pendant_part,    // a pendant part has at least 5 vertices
    short_pendant_parts,  // every pendant part has 4 vertices
};

std::string to_string(LemmaCase c);

struct StepOutcome {
    VertexSet set;
    LemmaCase lemma_case;
    SelectionTrace selection;
};

/// Counters over N_v = N(v) & W for the interiors {u1, u2}, {w1, w2} of two
/// pendant 4-vertex parts.
struct PendantStats {
    int f1 = 0, f2 = 0, f3 = 0;
    int e1 = 0, e2 = 0, e3 = 0;
    int k = 0;
    int c = 0;

    /// 2 f1 + f2 + f3 + 2 e1 + e2 + e3
    int weighted_sum() const { return 2 * f1 + f2 + f3 + 2 * e1 + e2 + e3; }
    /// Each |N_v| >= k - c - 2.
    bool degree_bounds_hold() const;
};

/// Raised when neither orientation of any pendant pair admits the exchange,
/// which the minimum-degree hypothesis rules out.
class UnreachableCase : public InternalError {
public:
    UnreachableCase(const std::string& what, PendantStats stats)
        : InternalError(what), stats_(stats) {}
    const PendantStats& stats() const { return stats_; }

private:
    PendantStats stats_;
};

/// Throws PreconditionError unless both parts are pendant with 4 vertices.
PendantStats case222_stats(const Graph& g, VertexSet w, const Part& a, const Part& b);

/// Given a maximal contractible W, builds a contractible set of size |W| + 1
/// by a single exchange, choosing the vertices by the shape of G - W.
StepOutcome step_from_maximal(const Graph& g, VertexSet w, bool cross_check = false);

enum class CaseTag {
    base_oracle,
    extend_once,
    case1_cycle,
    case21_pendant5,
    case221_pendant4,
    fallback_exhaustive_c,
    fallback_oracle,
};

std::string to_string(CaseTag tag);

struct LevelRecord {
    int level = 0;
    CaseTag tag = CaseTag::base_oracle;
    /// The case that fired, also when the exchange needed a fallback.
    std::optional<LemmaCase> lemma_case;
    /// Maximal set the exchange started from.
    std::optional<VertexSet> maximal_set;
    std::optional<SelectionTrace> selection;
    std::optional<StructureReport> structure;
    /// Oracle independently found a set of this size.
    std::optional<bool> oracle_agrees;
    std::string note;
};

enum class Method { automatic, constructive, oracle };

std::string to_string(Method m);

struct SearchOptions {
    Method method = Method::automatic;
    /// Run the structure checks and an oracle cross-check at every level.
    bool check_lemmas = false;
    /// Count all valid exchange vertices at every step.
    bool cross_check = false;
    OracleOptions oracle;
};

enum class SearchStatus { found, none, budget_exceeded };

std::string to_string(SearchStatus s);

struct SearchResult {
    int k = 0;
    SearchStatus status = SearchStatus::none;
    std::optional<VertexSet> set;
    /// k >= 5, v(G) >= k + 3 and min degree >= delta_threshold(k).
    bool hypotheses_hold = false;
    std::vector<LevelRecord> levels;

    bool used_tag(CaseTag tag) const;
};

bool search_hypotheses_hold(const Graph& g, int k);

/// Finds a k-contractible set. With the hypotheses in place the set is built
/// level by level from a 4-contractible base; otherwise, or if a level
/// fails, the automatic method falls back to exhaustive search.
/// Throws PreconditionError if G is not 3-connected, and for the
/// constructive method if the hypotheses fail or a level cannot be built.
SearchResult find_k_contractible(const Graph& g, int k, const SearchOptions& options = {});

}  // namespace contractia

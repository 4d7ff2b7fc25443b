#ifndef TW_VERIFY_HPP
#define TW_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tw/constructions.hpp"
#include "tw/decomposition.hpp"
#include "tw/graph.hpp"
#include "tw/oracle.hpp"
#include "tw/proof_engines.hpp"

namespace tw {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // witness reference or counterexample
    double seconds = 0.0;
};

struct VerificationReport {
    std::string subject;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(std::string name, bool pass, std::string detail, double seconds);
};

/// Checks the three conditions of "strongly k-ghost-free" for (G, u, v):
/// (1) no k-ghost-edges; (2) every non-edge other than uv avoidable in a
/// decomposition keeping u, v together; (3) when uv is a non-edge, a
/// validated linked witness separating u from v with the two link bags
/// of size <= k. Condition (3) is existential; a witness is taken from
/// `structure` when given (explicit base construction or the primed
/// splice), otherwise from the explicit two-bag form.
VerificationReport verify_strongly_ghost_free(
    const MarkedGraph& mg, int k, const OracleLimits& limits = {},
    const ParallelStructure* structure = nullptr, int threads = 1);

struct SearchConstraints {
    bool v_in_own_subtree = false;
    std::optional<VertexPair> must_pair;
    std::optional<VertexPair> avoid_pair;
};

enum class SearchOutcome { found, none, budget_exhausted };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::none;
    std::optional<TreeDecomposition> decomposition;
};

/// Backtracking search for bags turning the given tree over V(G) into a
/// valid width <= k decomposition of G under the constraints. Complete
/// (found/none) within max_vertices; larger instances are admitted as a
/// best-effort generator bounded by step_budget and may report
/// budget_exhausted.
SearchResult search_tree_indexed_decomposition(
    const Graph& g, const Graph& t, int k, const SearchConstraints& constraints,
    int max_vertices = 12, long long step_budget = 10'000'000);

struct PipelineOptions {
    int k = 3;
    int r = 1;
    int scaled_height = 1;
    int scaled_arity = 2;
    std::uint64_t seed = 42;
    OracleLimits limits;
    // Above this size, ghost-freeness is certified by the inductive
    // lemma witnesses instead of the exhaustive oracle scan.
    int direct_check_cap = 22;
    int threads = 1;
    int spanning_tree_samples = 1000;
    int search_tree_samples = 25;
};

/// The scaled end-to-end pipeline: builds G_r, checks its treewidth and
/// strong ghost-freeness, builds the scaled tower and checks its
/// treewidth and lifted witnesses, emits matching certificates over
/// spanning trees, and runs the witness-bag bound on every
/// tree-indexed decomposition found. Deterministic per (inputs, seed).
VerificationReport theorem_pipeline(const PipelineOptions& opts);

}  // namespace tw

#endif

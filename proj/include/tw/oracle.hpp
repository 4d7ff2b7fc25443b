#ifndef TW_ORACLE_HPP
#define TW_ORACLE_HPP

#include <optional>
#include <vector>

#include "tw/decomposition.hpp"
#include "tw/graph.hpp"

namespace tw {

struct OracleLimits {
    // Ceiling for the 2^n subset DP.
    int max_vertices = 24;
    // Exact safe reductions (pendant / isolated vertex peeling) applied
    // before the DP; lets tree-like instances exceed max_vertices.
    bool use_reductions = true;
};

/// Non-edge query object for ghost-edge tests.
struct GhostQuery {
    Graph graph;
    int k = 1;
    VertexPair pair;

    GhostQuery(Graph g, int k_, VertexPair p);
};

/// Exact treewidth by dynamic programming over eliminated vertex
/// subsets. Incremental in k starting from the degeneracy lower bound.
int exact_treewidth(const Graph& g, const OracleLimits& limits = {});

/// Lexicographically least elimination ordering of width exactly tw(g).
EliminationOrdering optimal_elimination_ordering(const Graph& g,
                                                 const OracleLimits& limits = {});

struct AvoidanceResult {
    bool feasible = false;
    // Present when feasible: a width <= k decomposition meeting the
    // requested bag constraints.
    std::optional<TreeDecomposition> witness;
};

/// Does g have a width <= k tree decomposition in which x and y never
/// share a bag? Decided by the subset DP with a transition filter: a
/// vertex may be eliminated only if its bag (itself plus its reduced
/// neighborhood) has size <= k+1 and does not contain both x and y.
/// See docs/avoidance-reduction.md for why this filter is exactly the
/// quantifier over all decompositions.
AvoidanceResult decide_width_avoiding_pair(const Graph& g, int k, Vertex x,
                                           Vertex y,
                                           const OracleLimits& limits = {},
                                           bool want_witness = true);

/// Width <= k decomposition of g with u, v sharing a bag and optionally
/// a second pair never sharing one. Reduction: decompose g plus the
/// edge uv.
AvoidanceResult decomposition_with_pair_in_bag(
    const Graph& g, int k, Vertex u, Vertex v,
    std::optional<VertexPair> avoid = std::nullopt,
    const OracleLimits& limits = {}, bool want_witness = true);

/// True iff every width <= k decomposition of the graph puts the pair
/// in a common bag. Requires tw(g) <= k.
bool is_k_ghost_edge(const GhostQuery& q, const OracleLimits& limits = {});

/// All k-ghost-edges of g, as normalized pairs in lexicographic order.
std::vector<VertexPair> ghost_edges(const Graph& g, int k,
                                    const OracleLimits& limits = {},
                                    int threads = 1);

bool is_k_ghost_free(const Graph& g, int k, const OracleLimits& limits = {},
                     int threads = 1);

}  // namespace tw

#endif

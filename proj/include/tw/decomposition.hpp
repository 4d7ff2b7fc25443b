#ifndef TW_DECOMPOSITION_HPP
#define TW_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "tw/graph.hpp"

namespace tw {

/// A tree over node ids plus one bag (sorted vertex set of the decomposed
/// graph) per node. Whether it actually decomposes a given graph is
/// checked lazily via validate().
struct TreeDecomposition {
    Graph tree;
    std::vector<std::vector<Vertex>> bags;

    bool operator==(const TreeDecomposition&) const = default;
};

struct ValidationResult {
    bool valid = false;
    std::string violation;  // names the failing axiom and edge/vertex

    explicit operator bool() const { return valid; }
};

/// Checks the two tree-decomposition axioms against g: every edge of g
/// lies inside some bag (T1) and every vertex's node set induces a
/// non-empty connected subtree (T2); bags must be subsets of V(g).
ValidationResult validate(const Graph& g, const TreeDecomposition& d);

/// Max bag size minus one. Empty bags are permitted and contribute -1.
int width(const TreeDecomposition& d);

/// Node ids whose bags contain v, sorted.
std::vector<int> subtree_of(const TreeDecomposition& d, Vertex v);

/// True iff some bag contains both x and y.
bool pair_in_common_bag(const TreeDecomposition& d, Vertex x, Vertex y);

/// For a valid decomposition and an edge ab of g, the tree path between
/// any node of T_a and any node of T_b stays inside T_a union T_b. This
/// predicate tests that containment for one vertex pair.
bool tree_path_covered_by_subtrees(const TreeDecomposition& d, Vertex a,
                                   Vertex b);

using EliminationOrdering = std::vector<Vertex>;

struct EliminationResult {
    TreeDecomposition decomposition;
    std::vector<VertexPair> fill;  // edges added by the elimination
};

/// Simulates vertex elimination along the ordering: each step records the
/// eliminated vertex plus its current neighborhood as a bag and turns
/// that neighborhood into a clique. The bag of step i attaches to the bag
/// of the earliest-eliminated vertex among its later neighbors
/// (deterministic assembly). The result always validates against g.
EliminationResult from_elimination_ordering(const Graph& g,
                                            const EliminationOrdering& order);

}  // namespace tw

#endif

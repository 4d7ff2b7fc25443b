#ifndef TW_PROOF_ENGINES_HPP
#define TW_PROOF_ENGINES_HPP

#include "tw/constructions.hpp"
#include "tw/decomposition.hpp"
#include "tw/graph.hpp"

namespace tw {

/// A decomposition together with its advertised special nodes:
/// pair_node has the marked pair in its bag; link_a/link_b are the
/// adjacent nodes of a condition-(3) style witness (u in B_a, v in B_b,
/// both bags of size <= k, u and v never in a common bag).
struct BuiltDecomposition {
    TreeDecomposition d;
    int pair_node = -1;
    int link_a = -1;
    int link_b = -1;
};

/// Splices width <= k decompositions of the two components (each with a
/// node s_i whose bag holds both marks) through a 4-node path carrying
/// the connector bags {u,u1,v1}, {u,v,v1}, {u,v,v2}, {u,u2,v2}. Output:
/// a decomposition of the parallel connection with the new marks sharing
/// bag B_b.
BuiltDecomposition lemma31_main(const ParallelStructure& s,
                                const TreeDecomposition& d1, int s1,
                                const TreeDecomposition& d2, int s2);

/// Same splice with the primed connector bags {u,u1,v1}, {u,v1,u2},
/// {v,v1,u2}, {v,u2,v2}: the new marks never share a bag and the middle
/// two nodes form a size-3 linked witness pair.
BuiltDecomposition lemma31_prime(const ParallelStructure& s,
                                 const TreeDecomposition& d1, int s1,
                                 const TreeDecomposition& d2, int s2);

/// The 2-node path construction separating the first component's marks
/// while keeping the new marks together: component 1 contributes a
/// linked witness (its link bags get augmented by the new v, legal since
/// they had size <= k), component 2 any decomposition with its marks in
/// bag s2.
BuiltDecomposition lemma31_case4(const ParallelStructure& s, int k,
                                 const BuiltDecomposition& d3_link_of_g1,
                                 const TreeDecomposition& d2_with_pair, int s2);

/// Lifts a decomposition of the tower base to the whole tower-tree:
/// every tree vertex contributes the bag {itself, parent}, each tree
/// hangs off the first base node whose bag holds its root. Width and all
/// bag-avoidance properties of the input survive.
TreeDecomposition lemma22_lift(const TreeDecomposition& d_base,
                               const TowerGraph& tower);

struct MatchingCertificate {
    std::vector<VertexPair> matching;        // the a_i b_i pairs, |M| = r
    std::vector<Vertex> path;                // (u_r, v_r)-path in T
    std::vector<Vertex> common_vertices;     // intersection of V(C_T^e)
    std::vector<VertexPair> common_path_edges;  // intersection with E(P)
};

/// The inductive matching construction: peel off the outermost level,
/// pick the lexicographically least non-tree edge joining the two pieces
/// of T minus the interior component, and recurse. The certificate's
/// intersections are recomputed from scratch via fundamental cycles.
MatchingCertificate lemma32_matching(const ParallelStructure& s,
                                     const Graph& t);

/// Independent re-check of a certificate against the graph and tree it
/// claims to certify; throws internal_error on any discrepancy.
void verify_matching_certificate(const ParallelStructure& s, const Graph& t,
                                 const MatchingCertificate& cert);

struct Lemma33Result {
    Vertex witness = -1;  // a vertex in every matched fundamental cycle
    int bag_size = 0;
    bool pass = false;    // |B_x| >= r and width >= r-1
};

/// Witness-bag bound for spanning-tree-indexed decompositions whose
/// index tree is the graph's own spanning tree with v in T_v throughout.
Lemma33Result lemma33_check(const ParallelStructure& s,
                            const TreeDecomposition& d);

/// Recursive witness builders used by the verifier: a width <= k
/// decomposition with the marks in a common bag (single bag at level 0,
/// lemma31_main above), and a condition-(3) witness (explicit two-bag
/// decomposition for the clique-minus-uv base, lemma31_prime above).
BuiltDecomposition pair_in_bag_decomposition(const ParallelStructure& s);
BuiltDecomposition condition3_decomposition(const ParallelStructure& s);

}  // namespace tw

#endif

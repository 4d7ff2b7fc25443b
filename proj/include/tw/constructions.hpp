#ifndef TW_CONSTRUCTIONS_HPP
#define TW_CONSTRUCTIONS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tw/graph.hpp"

namespace tw {

using BigInt = boost::multiprecision::cpp_int;

enum class BaseVariant { clique, clique_minus_uv };

/// (K_{k+1}, u, v) or (K_{k+1} minus uv, u, v), marks at vertices 0, 1.
MarkedGraph base_marked(int k, BaseVariant variant);

/// A marked graph together with the recursion tree of how it was built
/// by iterated parallel connection. For level >= 1, removing the marked
/// pair leaves exactly two components, the images of the children under
/// the recorded relabeling maps.
struct ParallelStructure {
    MarkedGraph marked;
    int level = 0;
    std::shared_ptr<const ParallelStructure> left, right;
    std::vector<Vertex> left_map;   // child vertex -> vertex here
    std::vector<Vertex> right_map;
};

/// One parallel-connection level: fresh u, v joined to the two copies'
/// marks. Copy ids: first copy at offset 0, second at offset |V(a)|,
/// then u, v take the next two ids.
ParallelStructure parallel_connection(const MarkedGraph& a,
                                      const MarkedGraph& b);

/// r-fold self-iteration of parallel connection starting from base.
ParallelStructure iterated_parallel(const MarkedGraph& base, int r);

/// Throws internal_error if any level of the recursion tree violates the
/// ParallelStructure invariants.
void check_structure(const ParallelStructure& s);

/// An arbitrary-precision value that may be too large to materialize, in
/// which case only its defining expression is kept.
struct BigValue {
    bool exact = false;
    BigInt value;
    std::string expr;

    static BigValue make(BigInt v);
    static BigValue symbolic(std::string e);
    std::string str() const;  // decimal when exact, expression otherwise
};

struct ScaledOverride {
    int height = 1;
    int arity = 2;
};

/// Symbolic description of a tower-tree graph's parameters. Entries use
/// 0-based indexing: heights[j] holds the conventional h_{j+1}.
struct TowerPlan {
    int k = 1;
    int n = 1;
    std::vector<BigValue> heights;
    std::vector<BigValue> arities;
    std::vector<BigValue> tree_sizes;
    std::optional<ScaledOverride> scaled;
};

/// Exact h, w and tree-size sequences for a tower over an n-vertex base.
/// Values whose representation would exceed cap_bits bits stay symbolic;
/// the recurrences make them grow beyond any physical representation
/// after the first few terms.
TowerPlan tower_parameters(int k, int n, long cap_bits = 1L << 20);

/// Number of vertices of the complete rooted arity-ary tree of height
/// `height`: root at depth 0, every internal vertex with exactly `arity`
/// children, all leaves at depth `height`.
BigInt complete_tree_size(const BigInt& arity, const BigInt& height);

/// A materialized scaled tower-tree with its attachment data.
struct TowerGraph {
    Graph graph;
    int base_n = 0;
    std::vector<int> tree_index;  // per vertex: index of its tree S_j
    std::vector<Vertex> parent;   // parent within the tree; -1 at roots
    std::vector<int> depth;
};

/// Hangs a complete arity-ary tree of height `height` from every vertex
/// of the base, root identified with the vertex. Uniform scaled
/// parameters; refuses to materialize more than max_vertices vertices
/// (the error message carries the exact size).
TowerGraph tower_tree(const Graph& base, int height, int arity,
                      long max_vertices = 1'000'000);

}  // namespace tw

#endif

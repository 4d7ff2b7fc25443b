#ifndef TW_GRAPH_HPP
#define TW_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tw {

// Invalid input (unknown vertex, wrong structure, bad precondition).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance too large for the configured limits.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A lemma-engine internal consistency check failed; indicates a
// construction bug, not bad user input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph over dense vertex ids 0..n-1.
/// Value-semantic and immutable after construction; "mutating"
/// operations return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<VertexPair>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }
    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
    bool has_edge(Vertex a, Vertex b) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as normalized (a < b) pairs in lexicographic order.
    std::vector<VertexPair> edges() const;

    Graph with_edge(Vertex a, Vertex b) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;

    void add_edge_unchecked(Vertex a, Vertex b);
    void require_vertex(Vertex v) const;
};

/// A graph with an ordered distinguished vertex pair (u, v).
struct MarkedGraph {
    Graph graph;
    Vertex u = -1;
    Vertex v = -1;

    MarkedGraph() = default;
    MarkedGraph(Graph g, Vertex u_, Vertex v_);

    bool operator==(const MarkedGraph&) const = default;
};

Graph complement(const Graph& g);

struct DisjointUnion {
    Graph graph;
    std::vector<Vertex> map_first;   // vertex of g1 -> vertex of union
    std::vector<Vertex> map_second;  // vertex of g2 -> vertex of union
};
DisjointUnion disjoint_union(const Graph& g1, const Graph& g2);

/// New vertex gets id n and is joined to attach_at.
Graph add_pendant(const Graph& g, Vertex attach_at);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Components of the subgraph induced on vertices with present[v] == true.
std::vector<std::vector<Vertex>> components(const Graph& g,
                                            const std::vector<bool>& present);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// True iff V(t) = V(g), E(t) subset of E(g), and t is a tree.
bool is_spanning_tree(const Graph& g, const Graph& t);

/// The unique simple x-y path in a tree, in order from x to y.
std::vector<Vertex> tree_path(const Graph& t, Vertex x, Vertex y);

struct Cycle {
    std::vector<Vertex> vertices;     // in cycle order, starting at e.first
    std::vector<VertexPair> edges;    // normalized pairs
};

/// The fundamental cycle C_T^e of a non-tree edge e w.r.t. spanning tree t.
Cycle fundamental_cycle(const Graph& g, const Graph& t, VertexPair e);

/// Enumerates every spanning tree of a connected graph exactly once.
/// Deterministic order: lexicographic in the set of chosen edge indices
/// (edges sorted as by Graph::edges). The callback may return false to
/// stop early.
void for_each_spanning_tree(const Graph& g,
                            const std::function<bool(const Graph&)>& visit);

std::vector<Graph> all_spanning_trees(const Graph& g);

/// Number of spanning trees via the Kirchhoff matrix-tree theorem
/// (exact integer determinant). Intended as an independent cross-check
/// for the enumerator.
std::uint64_t spanning_tree_count(const Graph& g);

/// Uniform random spanning tree via Wilson's loop-erased random walk.
/// Deterministic per rng state.
Graph random_spanning_tree(const Graph& g, std::mt19937_64& rng);

std::string to_string(const VertexPair& e);

}  // namespace tw

#endif

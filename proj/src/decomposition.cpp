#include "tw/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace tw {

namespace {

bool bag_contains(const std::vector<Vertex>& bag, Vertex v) {
    return std::binary_search(bag.begin(), bag.end(), v);
}

bool nodes_connected_in_tree(const Graph& tree, const std::vector<int>& nodes) {
    if (nodes.empty()) return false;
    std::set<int> in(nodes.begin(), nodes.end());
    std::set<int> seen;
    std::queue<int> q;
    q.push(nodes[0]);
    seen.insert(nodes[0]);
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        for (int s : tree.neighbors(t))
            if (in.count(s) && !seen.count(s)) {
                seen.insert(s);
                q.push(s);
            }
    }
    return seen.size() == in.size();
}

}  // namespace

ValidationResult validate(const Graph& g, const TreeDecomposition& d) {
    if (!is_tree(d.tree))
        return {false, "index tree is empty or not a tree"};
    if (static_cast<int>(d.bags.size()) != d.tree.num_vertices())
        return {false, "bag count does not match tree node count"};
    for (int t = 0; t < d.tree.num_vertices(); ++t) {
        for (Vertex v : d.bags[t])
            if (!g.has_vertex(v))
                return {false, "bag " + std::to_string(t) +
                                   " contains non-vertex " + std::to_string(v)};
        if (!std::is_sorted(d.bags[t].begin(), d.bags[t].end()))
            return {false, "bag " + std::to_string(t) + " is not sorted"};
    }
    for (auto [a, b] : g.edges()) {
        bool covered = false;
        for (const auto& bag : d.bags)
            if (bag_contains(bag, a) && bag_contains(bag, b)) {
                covered = true;
                break;
            }
        if (!covered)
            return {false, "(T1) edge " + to_string({a, b}) + " is in no bag"};
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto nodes = subtree_of(d, v);
        if (nodes.empty())
            return {false,
                    "(T2) vertex " + std::to_string(v) + " is in no bag"};
        if (!nodes_connected_in_tree(d.tree, nodes))
            return {false, "(T2) subtree of vertex " + std::to_string(v) +
                               " is disconnected"};
    }
    return {true, ""};
}

int width(const TreeDecomposition& d) {
    int w = -1;
    for (const auto& bag : d.bags)
        w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

std::vector<int> subtree_of(const TreeDecomposition& d, Vertex v) {
    std::vector<int> nodes;
    for (int t = 0; t < static_cast<int>(d.bags.size()); ++t)
        if (bag_contains(d.bags[t], v)) nodes.push_back(t);
    return nodes;
}

bool pair_in_common_bag(const TreeDecomposition& d, Vertex x, Vertex y) {
    for (const auto& bag : d.bags)
        if (bag_contains(bag, x) && bag_contains(bag, y)) return true;
    return false;
}

bool tree_path_covered_by_subtrees(const TreeDecomposition& d, Vertex a,
                                   Vertex b) {
    auto ta = subtree_of(d, a);
    auto tb = subtree_of(d, b);
    if (ta.empty() || tb.empty()) return false;
    std::vector<int> both;
    std::merge(ta.begin(), ta.end(), tb.begin(), tb.end(),
               std::back_inserter(both));
    both.erase(std::unique(both.begin(), both.end()), both.end());
    // In a tree, all pairwise paths staying inside a node set is the
    // same as that set inducing a connected subgraph.
    return nodes_connected_in_tree(d.tree, both);
}

EliminationResult from_elimination_ordering(const Graph& g,
                                            const EliminationOrdering& order) {
    const int n = g.num_vertices();
    {
        std::vector<bool> seen(n, false);
        if (static_cast<int>(order.size()) != n)
            throw domain_error("elimination ordering has wrong length");
        for (Vertex v : order) {
            if (!g.has_vertex(v) || seen[v])
                throw domain_error("elimination ordering is not a permutation");
            seen[v] = true;
        }
    }
    if (n == 0) {
        EliminationResult out;
        out.decomposition.tree = Graph(1);
        out.decomposition.bags = {{}};
        return out;
    }

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::set<Vertex>> adj(n);
    for (auto [a, b] : g.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }

    EliminationResult out;
    out.decomposition.bags.resize(n);
    std::vector<VertexPair> tree_edges;
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> nbhd(adj[v].begin(), adj[v].end());
        std::vector<Vertex> bag = nbhd;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        out.decomposition.bags[i] = bag;
        // Attach to the bag of the earliest-eliminated remaining neighbor.
        if (!nbhd.empty()) {
            int attach = *std::min_element(
                nbhd.begin(), nbhd.end(),
                [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
            tree_edges.emplace_back(i, pos[attach]);
        } else if (i + 1 < n) {
            tree_edges.emplace_back(i, i + 1);
        }
        // Make the neighborhood a clique and remove v.
        for (Vertex a : nbhd) {
            adj[a].erase(v);
            for (Vertex b : nbhd) {
                if (a >= b) continue;
                if (adj[a].insert(b).second) {
                    adj[b].insert(a);
                    if (!g.has_edge(a, b))
                        out.fill.emplace_back(std::min(a, b), std::max(a, b));
                }
            }
        }
        adj[v].clear();
    }
    std::sort(out.fill.begin(), out.fill.end());
    out.fill.erase(std::unique(out.fill.begin(), out.fill.end()),
                   out.fill.end());
    out.decomposition.tree = Graph(n, tree_edges);
    return out;
}

}  // namespace tw

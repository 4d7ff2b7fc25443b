#include "tw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace tw {

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return std::popcount(m); }

/// Decision procedure for "g has an elimination ordering whose bags all
/// have size <= k+1 (and, optionally, none contains both avoided
/// vertices)". Memoized DFS over eliminated subsets; the first complete
/// ordering found is returned through `order`.
class SubsetSolver {
public:
    SubsetSolver(const Graph& g, int k, Mask avoid_mask, bool lexicographic)
        : n_(g.num_vertices()),
          k_(k),
          avoid_(avoid_mask),
          lex_(lexicographic),
          full_((n_ == 32) ? ~Mask(0) : ((Mask(1) << n_) - 1)),
          adj_(n_, 0),
          failed_((std::size_t(1) << n_) / 64 + 1, 0) {
        if (n_ > 31)
            throw resource_error("subset DP supports at most 31 vertices");
        for (auto [a, b] : g.edges()) {
            adj_[a] |= Mask(1) << b;
            adj_[b] |= Mask(1) << a;
        }
        order_.reserve(n_);
    }

    bool solve() { return dfs(0); }
    const std::vector<Vertex>& order() const { return order_; }

private:
    int n_;
    int k_;
    Mask avoid_;
    bool lex_;
    Mask full_;
    std::vector<Mask> adj_;
    std::vector<std::uint64_t> failed_;
    std::vector<Vertex> order_;

    bool is_failed(Mask s) const {
        return (failed_[s >> 6] >> (s & 63)) & 1;
    }
    void mark_failed(Mask s) { failed_[s >> 6] |= std::uint64_t(1) << (s & 63); }

    // Vertices outside s adjacent to v directly or through eliminated
    // vertices. Depends only on the set s, not on elimination order.
    Mask reduced_neighborhood(Vertex v, Mask s) const {
        Mask q = 0;
        Mask seen = Mask(1) << v;
        Mask stack = adj_[v];
        while (stack) {
            int w = std::countr_zero(stack);
            stack &= stack - 1;
            Mask bit = Mask(1) << w;
            if (seen & bit) continue;
            seen |= bit;
            if (s & bit)
                stack |= adj_[w] & ~seen;
            else
                q |= bit;
        }
        return q;
    }

    bool bag_ok(Vertex v, Mask q) const {
        if (!avoid_) return true;
        Mask bag = q | (Mask(1) << v);
        return (bag & avoid_) != avoid_;
    }

    bool dfs(Mask s) {
        if (s == full_) return true;
        if (is_failed(s)) return false;
        struct Cand {
            Vertex v;
            int qsize;
        };
        std::vector<Cand> cands;
        cands.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) {
            if (s & (Mask(1) << v)) continue;
            Mask q = reduced_neighborhood(v, s);
            if (popcount(q) <= k_ && bag_ok(v, q))
                cands.push_back({v, popcount(q)});
        }
        if (!lex_)
            std::stable_sort(cands.begin(), cands.end(),
                             [](const Cand& a, const Cand& b) {
                                 return a.qsize < b.qsize;
                             });
        for (const Cand& c : cands) {
            order_.push_back(c.v);
            if (dfs(s | (Mask(1) << c.v))) return true;
            order_.pop_back();
        }
        mark_failed(s);
        return false;
    }
};

void require_size(const Graph& g, const OracleLimits& limits) {
    if (g.num_vertices() > limits.max_vertices)
        throw resource_error("graph has " + std::to_string(g.num_vertices()) +
                             " vertices, oracle limit is " +
                             std::to_string(limits.max_vertices));
}

int degeneracy(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        Vertex v = -1;
        for (Vertex w = 0; w < n; ++w)
            if (!gone[w] && (v == -1 || deg[w] < deg[v])) v = w;
        best = std::max(best, deg[v]);
        gone[v] = true;
        for (Vertex w : g.neighbors(v))
            if (!gone[w]) --deg[w];
    }
    return best;
}

bool decide_width(const Graph& g, int k, Mask avoid_mask,
                  std::vector<Vertex>* order_out, bool lexicographic) {
    SubsetSolver solver(g, k, avoid_mask, lexicographic);
    if (!solver.solve()) return false;
    if (order_out) *order_out = solver.order();
    return true;
}

// Peels degree <= 1 vertices and reports the remaining core together
// with the width floor contributed by the peeled part (1 if any pendant
// was removed, 0 for isolated vertices only, -1 if nothing remains of an
// empty graph).
struct PeelResult {
    Graph core;
    int floor = -1;
};

PeelResult peel_low_degree(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<bool> alive(n, true);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    PeelResult out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v] || deg[v] > 1) continue;
            out.floor = std::max(out.floor, deg[v]);
            alive[v] = false;
            changed = true;
            for (Vertex w : g.neighbors(v))
                if (alive[w]) --deg[w];
        }
    }
    std::vector<Vertex> remap(n, -1);
    int nc = 0;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) remap[v] = nc++;
    std::vector<VertexPair> es;
    for (auto [a, b] : g.edges())
        if (alive[a] && alive[b]) es.emplace_back(remap[a], remap[b]);
    out.core = Graph(nc, es);
    return out;
}

Graph induced_on(const Graph& g, const std::vector<Vertex>& verts) {
    std::vector<Vertex> remap(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        remap[verts[i]] = i;
    std::vector<VertexPair> es;
    for (auto [a, b] : g.edges())
        if (remap[a] >= 0 && remap[b] >= 0) es.emplace_back(remap[a], remap[b]);
    return Graph(static_cast<int>(verts.size()), es);
}

int treewidth_of_core(const Graph& core, const OracleLimits& limits) {
    int best = -1;
    for (const auto& comp : components(core)) {
        Graph sub = induced_on(core, comp);
        require_size(sub, limits);
        int k = degeneracy(sub);
        while (!decide_width(sub, k, 0, nullptr, false)) ++k;
        best = std::max(best, k);
    }
    return best;
}

}  // namespace

GhostQuery::GhostQuery(Graph g, int k_, VertexPair p)
    : graph(std::move(g)), k(k_), pair(p) {
    if (pair.first > pair.second) std::swap(pair.first, pair.second);
    if (pair.first == pair.second)
        throw domain_error("ghost query pair must be two distinct vertices");
    if (graph.has_edge(pair.first, pair.second))
        throw domain_error("ghost query pair " + to_string(pair) +
                           " is an edge");
    if (k < 1) throw domain_error("ghost query requires k >= 1");
}

int exact_treewidth(const Graph& g, const OracleLimits& limits) {
    if (g.num_vertices() == 0) return -1;
    if (!limits.use_reductions) {
        require_size(g, limits);
        return std::max(treewidth_of_core(g, limits), 0);
    }
    PeelResult peeled = peel_low_degree(g);
    int core_tw = treewidth_of_core(peeled.core, limits);
    return std::max({core_tw, peeled.floor, 0});
}

EliminationOrdering optimal_elimination_ordering(const Graph& g,
                                                 const OracleLimits& limits) {
    require_size(g, limits);
    if (g.num_vertices() == 0) return {};
    int k = exact_treewidth(g, limits);
    std::vector<Vertex> order;
    if (!decide_width(g, std::max(k, 0), 0, &order, true))
        throw internal_error("optimal ordering reconstruction failed");
    return order;
}

AvoidanceResult decide_width_avoiding_pair(const Graph& g, int k, Vertex x,
                                           Vertex y, const OracleLimits& limits,
                                           bool want_witness) {
    if (!g.has_vertex(x) || !g.has_vertex(y) || x == y)
        throw domain_error("avoided pair must be two distinct vertices");
    if (g.has_edge(x, y))
        throw domain_error("avoided pair " + to_string({x, y}) +
                           " is an edge of the graph");
    require_size(g, limits);
    Mask avoid = (Mask(1) << x) | (Mask(1) << y);
    if (!decide_width(g, k, avoid, nullptr, false)) return {false, {}};
    AvoidanceResult out;
    out.feasible = true;
    if (want_witness) {
        std::vector<Vertex> order;
        if (!decide_width(g, k, avoid, &order, true))
            throw internal_error(
                "witness reconstruction disagrees with decision");
        out.witness = from_elimination_ordering(g, order).decomposition;
    }
    return out;
}

AvoidanceResult decomposition_with_pair_in_bag(const Graph& g, int k, Vertex u,
                                               Vertex v,
                                               std::optional<VertexPair> avoid,
                                               const OracleLimits& limits,
                                               bool want_witness) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
        throw domain_error("pair-in-bag vertices must be two distinct vertices");
    Graph augmented = g.has_edge(u, v) ? g : g.with_edge(u, v);
    if (avoid) {
        auto [x, y] = *avoid;
        VertexPair norm{std::min(x, y), std::max(x, y)};
        if (norm == VertexPair{std::min(u, v), std::max(u, v)})
            throw domain_error("avoid pair coincides with the required pair");
        return decide_width_avoiding_pair(augmented, k, x, y, limits,
                                          want_witness);
    }
    require_size(augmented, limits);
    if (!decide_width(augmented, k, 0, nullptr, false)) return {false, {}};
    AvoidanceResult out;
    out.feasible = true;
    if (want_witness) {
        std::vector<Vertex> order;
        if (!decide_width(augmented, k, 0, &order, true))
            throw internal_error(
                "witness reconstruction disagrees with decision");
        out.witness = from_elimination_ordering(augmented, order).decomposition;
    }
    return out;
}

bool is_k_ghost_edge(const GhostQuery& q, const OracleLimits& limits) {
    if (exact_treewidth(q.graph, limits) > q.k)
        throw domain_error("ghost edges are undefined: tw(G) > k");
    require_size(q.graph, limits);
    Mask avoid = (Mask(1) << q.pair.first) | (Mask(1) << q.pair.second);
    return !decide_width(q.graph, q.k, avoid, nullptr, false);
}

std::vector<VertexPair> ghost_edges(const Graph& g, int k,
                                    const OracleLimits& limits, int threads) {
    if (exact_treewidth(g, limits) > k)
        throw domain_error("ghost edges are undefined: tw(G) > k");
    require_size(g, limits);
    std::vector<VertexPair> non_edges;
    for (Vertex a = 0; a < g.num_vertices(); ++a)
        for (Vertex b = a + 1; b < g.num_vertices(); ++b)
            if (!g.has_edge(a, b)) non_edges.emplace_back(a, b);

    std::vector<char> ghost(non_edges.size(), 0);
    auto run = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < non_edges.size(); i += step) {
            Mask avoid = (Mask(1) << non_edges[i].first) |
                         (Mask(1) << non_edges[i].second);
            ghost[i] = !decide_width(g, k, avoid, nullptr, false);
        }
    };
    threads = std::max(1, threads);
    if (threads == 1 || non_edges.size() < 2) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(run, static_cast<std::size_t>(t), threads);
        for (auto& th : pool) th.join();
    }

    std::vector<VertexPair> out;
    for (std::size_t i = 0; i < non_edges.size(); ++i)
        if (ghost[i]) out.push_back(non_edges[i]);
    return out;
}

bool is_k_ghost_free(const Graph& g, int k, const OracleLimits& limits,
                     int threads) {
    return ghost_edges(g, k, limits, threads).empty();
}

}  // namespace tw

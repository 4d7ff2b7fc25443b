#include "tw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace tw {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw domain_error("negative vertex count");
}

Graph::Graph(int n, const std::vector<VertexPair>& edges) : Graph(n) {
    std::set<VertexPair> seen;
    for (auto [a, b] : edges) {
        require_vertex(a);
        require_vertex(b);
        if (a == b) throw domain_error("loop edge " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (seen.insert({a, b}).second) add_edge_unchecked(a, b);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::add_edge_unchecked(Vertex a, Vertex b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    ++m_;
}

void Graph::require_vertex(Vertex v) const {
    if (!has_vertex(v))
        throw domain_error("unknown vertex id " + std::to_string(v));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    require_vertex(a);
    require_vertex(b);
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    require_vertex(v);
    return adj_[v];
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(m_);
    for (Vertex a = 0; a < n_; ++a)
        for (Vertex b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
    require_vertex(a);
    require_vertex(b);
    if (a == b) throw domain_error("loop edge");
    auto es = edges();
    es.emplace_back(std::min(a, b), std::max(a, b));
    return Graph(n_, es);
}

MarkedGraph::MarkedGraph(Graph g, Vertex u_, Vertex v_)
    : graph(std::move(g)), u(u_), v(v_) {
    if (!graph.has_vertex(u) || !graph.has_vertex(v))
        throw domain_error("mark is not a vertex of the graph");
    if (u == v) throw domain_error("marks must be distinct");
}

Graph complement(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<VertexPair> es;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!g.has_edge(a, b)) es.emplace_back(a, b);
    return Graph(n, es);
}

DisjointUnion disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.num_vertices();
    const int n2 = g2.num_vertices();
    std::vector<VertexPair> es = g1.edges();
    for (auto [a, b] : g2.edges()) es.emplace_back(a + n1, b + n1);
    DisjointUnion out;
    out.graph = Graph(n1 + n2, es);
    out.map_first.resize(n1);
    out.map_second.resize(n2);
    std::iota(out.map_first.begin(), out.map_first.end(), 0);
    std::iota(out.map_second.begin(), out.map_second.end(), n1);
    return out;
}

Graph add_pendant(const Graph& g, Vertex attach_at) {
    if (!g.has_vertex(attach_at))
        throw domain_error("unknown vertex id " + std::to_string(attach_at));
    auto es = g.edges();
    es.emplace_back(attach_at, g.num_vertices());
    return Graph(g.num_vertices() + 1, es);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    return components(g, std::vector<bool>(g.num_vertices(), true));
}

std::vector<std::vector<Vertex>> components(const Graph& g,
                                            const std::vector<bool>& present) {
    const int n = g.num_vertices();
    if (static_cast<int>(present.size()) != n)
        throw domain_error("present mask size mismatch");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (!present[s] || seen[s]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (present[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return true;
    return components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 &&
           is_connected(g);
}

bool is_spanning_tree(const Graph& g, const Graph& t) {
    if (t.num_vertices() != g.num_vertices()) return false;
    if (!is_tree(t)) return false;
    for (auto [a, b] : t.edges())
        if (!g.has_edge(a, b)) return false;
    return true;
}

std::vector<Vertex> tree_path(const Graph& t, Vertex x, Vertex y) {
    if (!is_tree(t)) throw domain_error("tree_path: input is not a tree");
    if (!t.has_vertex(x) || !t.has_vertex(y))
        throw domain_error("tree_path: unknown endpoint");
    std::vector<Vertex> parent(t.num_vertices(), -2);
    std::queue<Vertex> q;
    q.push(x);
    parent[x] = -1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (v == y) break;
        for (Vertex w : t.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                q.push(w);
            }
    }
    std::vector<Vertex> path;
    for (Vertex v = y; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

Cycle fundamental_cycle(const Graph& g, const Graph& t, VertexPair e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw domain_error("fundamental_cycle: " + to_string(e) +
                           " is not an edge of the graph");
    if (!is_spanning_tree(g, t))
        throw domain_error("fundamental_cycle: not a spanning tree");
    if (t.has_edge(e.first, e.second))
        throw domain_error("fundamental_cycle: " + to_string(e) +
                           " is a tree edge");
    Cycle c;
    c.vertices = tree_path(t, e.first, e.second);
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        Vertex a = c.vertices[i], b = c.vertices[i + 1];
        c.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    c.edges.push_back(e);
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

namespace {

// Union-find over vertex ids; small enough to copy freely.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

// Can the chosen edges plus all edges from idx onward still connect g?
bool completable(const std::vector<VertexPair>& es, std::size_t idx, Dsu dsu,
                 int parts) {
    for (std::size_t i = idx; i < es.size() && parts > 1; ++i)
        if (dsu.unite(es[i].first, es[i].second)) --parts;
    return parts == 1;
}

void enumerate_trees(const Graph& g, const std::vector<VertexPair>& es,
                     std::size_t idx, Dsu& dsu, int parts,
                     std::vector<VertexPair>& chosen, bool& stop,
                     const std::function<bool(const Graph&)>& visit) {
    if (stop) return;
    if (parts == 1) {
        if (!visit(Graph(g.num_vertices(), chosen))) stop = true;
        return;
    }
    if (idx >= es.size()) return;
    auto [a, b] = es[idx];
    Dsu saved = dsu;
    if (dsu.unite(a, b)) {
        chosen.push_back(es[idx]);
        enumerate_trees(g, es, idx + 1, dsu, parts - 1, chosen, stop, visit);
        chosen.pop_back();
        dsu = saved;
    }
    if (!stop && completable(es, idx + 1, dsu, parts))
        enumerate_trees(g, es, idx + 1, dsu, parts, chosen, stop, visit);
}

}  // namespace

void for_each_spanning_tree(const Graph& g,
                            const std::function<bool(const Graph&)>& visit) {
    if (!is_connected(g))
        throw domain_error("spanning trees: graph is disconnected");
    if (g.num_vertices() == 0) return;
    auto es = g.edges();
    Dsu dsu(g.num_vertices());
    std::vector<VertexPair> chosen;
    bool stop = false;
    enumerate_trees(g, es, 0, dsu, g.num_vertices(), chosen, stop, visit);
}

std::vector<Graph> all_spanning_trees(const Graph& g) {
    std::vector<Graph> out;
    for_each_spanning_tree(g, [&](const Graph& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::uint64_t spanning_tree_count(const Graph& g) {
    if (!is_connected(g))
        throw domain_error("spanning tree count: graph is disconnected");
    const int n = g.num_vertices();
    if (n <= 1) return 1;
    // Integer determinant of a Laplacian minor (Bareiss fraction-free
    // elimination).
    const int d = n - 1;
    std::vector<std::vector<__int128>> a(d, std::vector<__int128>(d, 0));
    for (int i = 0; i < d; ++i) a[i][i] = g.degree(i);
    for (auto [x, y] : g.edges()) {
        if (x < d && y < d) {
            a[x][y] -= 1;
            a[y][x] -= 1;
        }
    }
    __int128 prev = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < d; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            for (int j = 0; j < d; ++j) a[k][j] = -a[k][j];
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<std::uint64_t>(a[d - 1][d - 1]);
}

Graph random_spanning_tree(const Graph& g, std::mt19937_64& rng) {
    if (!is_connected(g))
        throw domain_error("random spanning tree: graph is disconnected");
    const int n = g.num_vertices();
    if (n == 0) return Graph(0);
    std::vector<bool> in_tree(n, false);
    std::vector<Vertex> next(n, -1);
    in_tree[0] = true;
    for (Vertex s = 1; s < n; ++s) {
        if (in_tree[s]) continue;
        // Loop-erased random walk from s until it hits the tree.
        Vertex v = s;
        while (!in_tree[v]) {
            const auto& nb = g.neighbors(v);
            std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
            next[v] = nb[pick(rng)];
            v = next[v];
        }
        v = s;
        while (!in_tree[v]) {
            in_tree[v] = true;
            v = next[v];
        }
    }
    // After every retrace, next[v] is the final tree arc for each v != 0.
    std::vector<VertexPair> es;
    for (Vertex v = 1; v < n; ++v)
        es.emplace_back(std::min(v, next[v]), std::max(v, next[v]));
    return Graph(n, es);
}

std::string to_string(const VertexPair& e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace tw

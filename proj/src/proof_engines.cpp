#include "tw/proof_engines.hpp"

#include <algorithm>
#include <set>

namespace tw {

namespace {

struct Marks {
    Vertex u, v, u1, v1, u2, v2;
};

Marks marks_of(const ParallelStructure& s) {
    if (s.level < 1)
        throw domain_error("construction needs a level >= 1 parallel structure");
    return Marks{s.marked.u,
                 s.marked.v,
                 s.left_map[s.left->marked.u],
                 s.left_map[s.left->marked.v],
                 s.right_map[s.right->marked.u],
                 s.right_map[s.right->marked.v]};
}

std::vector<Vertex> sorted_bag(std::vector<Vertex> bag) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    return bag;
}

void require_component_decomposition(const ParallelStructure& child,
                                     const std::vector<Vertex>& /*map*/,
                                     const TreeDecomposition& d, int s_node,
                                     const char* which) {
    auto res = validate(child.marked.graph, d);
    if (!res)
        throw domain_error(std::string("component decomposition ") + which +
                           " invalid: " + res.violation);
    if (s_node < 0 || s_node >= static_cast<int>(d.bags.size()))
        throw domain_error(std::string("component decomposition ") + which +
                           ": connector node out of range");
    const auto& bag = d.bags[s_node];
    if (!std::binary_search(bag.begin(), bag.end(), child.marked.u) ||
        !std::binary_search(bag.begin(), bag.end(), child.marked.v))
        throw domain_error(std::string("component decomposition ") + which +
                           ": connector bag lacks the marked pair");
}

// Common splice skeleton of the two four-node path constructions: a
// 4-node path with given connector bags, components hanging off nodes a
// and d via their connector nodes.
TreeDecomposition splice_path4(const ParallelStructure& s,
                               const TreeDecomposition& d1, int s1,
                               const TreeDecomposition& d2, int s2,
                               std::vector<std::vector<Vertex>> path_bags) {
    require_component_decomposition(*s.left, s.left_map, d1, s1, "1");
    require_component_decomposition(*s.right, s.right_map, d2, s2, "2");

    const int off1 = 4;
    const int off2 = 4 + d1.tree.num_vertices();
    std::vector<VertexPair> tree_edges = {{0, 1}, {1, 2}, {2, 3}};
    for (auto [a, b] : d1.tree.edges())
        tree_edges.emplace_back(a + off1, b + off1);
    for (auto [a, b] : d2.tree.edges())
        tree_edges.emplace_back(a + off2, b + off2);
    tree_edges.emplace_back(0, s1 + off1);
    tree_edges.emplace_back(3, s2 + off2);

    TreeDecomposition out;
    out.tree = Graph(off2 + d2.tree.num_vertices(), tree_edges);
    out.bags.resize(out.tree.num_vertices());
    for (int i = 0; i < 4; ++i) out.bags[i] = sorted_bag(path_bags[i]);
    for (int i = 0; i < d1.tree.num_vertices(); ++i) {
        std::vector<Vertex> bag;
        for (Vertex v : d1.bags[i]) bag.push_back(s.left_map[v]);
        out.bags[i + off1] = sorted_bag(std::move(bag));
    }
    for (int i = 0; i < d2.tree.num_vertices(); ++i) {
        std::vector<Vertex> bag;
        for (Vertex v : d2.bags[i]) bag.push_back(s.right_map[v]);
        out.bags[i + off2] = sorted_bag(std::move(bag));
    }
    return out;
}

}  // namespace

BuiltDecomposition lemma31_main(const ParallelStructure& s,
                                const TreeDecomposition& d1, int s1,
                                const TreeDecomposition& d2, int s2) {
    Marks m = marks_of(s);
    BuiltDecomposition out;
    out.d = splice_path4(s, d1, s1, d2, s2,
                         {{m.u, m.u1, m.v1},
                          {m.u, m.v, m.v1},
                          {m.u, m.v, m.v2},
                          {m.u, m.u2, m.v2}});
    out.pair_node = 1;
    return out;
}

BuiltDecomposition lemma31_prime(const ParallelStructure& s,
                                 const TreeDecomposition& d1, int s1,
                                 const TreeDecomposition& d2, int s2) {
    Marks m = marks_of(s);
    BuiltDecomposition out;
    out.d = splice_path4(s, d1, s1, d2, s2,
                         {{m.u, m.u1, m.v1},
                          {m.u, m.v1, m.u2},
                          {m.v, m.v1, m.u2},
                          {m.v, m.u2, m.v2}});
    out.link_a = 1;
    out.link_b = 2;
    return out;
}

BuiltDecomposition lemma31_case4(const ParallelStructure& s, int k,
                                 const BuiltDecomposition& d3_link_of_g1,
                                 const TreeDecomposition& d2_with_pair,
                                 int s2) {
    Marks m = marks_of(s);
    const TreeDecomposition& d3 = d3_link_of_g1.d;
    const int a1 = d3_link_of_g1.link_a;
    const int b1 = d3_link_of_g1.link_b;

    auto res = validate(s.left->marked.graph, d3);
    if (!res)
        throw domain_error("component 1 decomposition invalid: " +
                           res.violation);
    if (a1 < 0 || b1 < 0 || a1 >= static_cast<int>(d3.bags.size()) ||
        b1 >= static_cast<int>(d3.bags.size()) || !d3.tree.has_edge(a1, b1))
        throw domain_error("component 1 witness: linked nodes missing or "
                           "not adjacent");
    const Vertex cu1 = s.left->marked.u, cv1 = s.left->marked.v;
    if (!std::binary_search(d3.bags[a1].begin(), d3.bags[a1].end(), cu1))
        throw domain_error("component 1 witness: bag a1 lacks u1");
    if (!std::binary_search(d3.bags[b1].begin(), d3.bags[b1].end(), cv1))
        throw domain_error("component 1 witness: bag b1 lacks v1");
    for (int node : {a1, b1})
        if (static_cast<int>(d3.bags[node].size()) > k)
            throw domain_error("component 1 witness: bag " +
                               std::to_string(node) + " has size " +
                               std::to_string(d3.bags[node].size()) +
                               " > k = " + std::to_string(k));
    if (pair_in_common_bag(d3, cu1, cv1))
        throw domain_error("component 1 witness: u1, v1 share a bag");
    require_component_decomposition(*s.right, s.right_map, d2_with_pair, s2,
                                    "2");

    const int off3 = 2;
    const int off2 = 2 + d3.tree.num_vertices();
    std::vector<VertexPair> tree_edges = {{0, 1}};
    for (auto [a, b] : d3.tree.edges())
        tree_edges.emplace_back(a + off3, b + off3);
    for (auto [a, b] : d2_with_pair.tree.edges())
        tree_edges.emplace_back(a + off2, b + off2);
    tree_edges.emplace_back(0, a1 + off3);
    tree_edges.emplace_back(1, s2 + off2);

    BuiltDecomposition out;
    out.d.tree = Graph(off2 + d2_with_pair.tree.num_vertices(), tree_edges);
    out.d.bags.resize(out.d.tree.num_vertices());
    out.d.bags[0] = sorted_bag({m.u, m.v, m.u1, m.u2});
    out.d.bags[1] = sorted_bag({m.v, m.u2, m.v2});
    for (int i = 0; i < d3.tree.num_vertices(); ++i) {
        std::vector<Vertex> bag;
        for (Vertex v : d3.bags[i]) bag.push_back(s.left_map[v]);
        if (i == a1 || i == b1) bag.push_back(m.v);
        out.d.bags[i + off3] = sorted_bag(std::move(bag));
    }
    for (int i = 0; i < d2_with_pair.tree.num_vertices(); ++i) {
        std::vector<Vertex> bag;
        for (Vertex v : d2_with_pair.bags[i]) bag.push_back(s.right_map[v]);
        out.d.bags[i + off2] = sorted_bag(std::move(bag));
    }
    out.pair_node = 0;
    return out;
}

TreeDecomposition lemma22_lift(const TreeDecomposition& d_base,
                               const TowerGraph& tower) {
    // Base graph = the tower restricted to its first base_n vertices.
    std::vector<VertexPair> base_edges;
    for (auto [a, b] : tower.graph.edges())
        if (a < tower.base_n && b < tower.base_n) base_edges.emplace_back(a, b);
    Graph base(tower.base_n, base_edges);
    auto res = validate(base, d_base);
    if (!res)
        throw domain_error("base decomposition invalid: " + res.violation);

    const int nb = d_base.tree.num_vertices();
    const int nv = tower.graph.num_vertices();
    std::vector<VertexPair> tree_edges = d_base.tree.edges();
    TreeDecomposition out;
    out.bags = d_base.bags;
    out.bags.resize(nb + nv);
    for (Vertex v = 0; v < nv; ++v) {
        std::vector<Vertex> bag = {v};
        if (tower.parent[v] != -1) {
            bag.push_back(tower.parent[v]);
            tree_edges.emplace_back(nb + v, nb + tower.parent[v]);
        } else {
            // Root of S_j: attach the whole tree below the first base
            // node whose bag holds a_j.
            int tj = subtree_of(d_base, v).front();
            tree_edges.emplace_back(nb + v, tj);
        }
        out.bags[nb + v] = sorted_bag(std::move(bag));
    }
    out.tree = Graph(nb + nv, tree_edges);
    return out;
}

namespace {

std::vector<VertexPair> matching_rec(const ParallelStructure& s,
                                     const Graph& t) {
    const Graph& g = s.marked.graph;
    const Vertex ur = s.marked.u, vr = s.marked.v;
    std::vector<Vertex> path = tree_path(t, ur, vr);

    std::vector<bool> present(g.num_vertices(), true);
    present[ur] = present[vr] = false;
    auto comps = components(g, present);
    if (comps.size() != 2)
        throw internal_error("parallel structure without two components");

    // All interior path vertices live in one component; if the path had
    // none (cannot happen for honest spanning trees, since the marks are
    // never adjacent), default to the component with the smaller minimum
    // vertex id.
    int c1_idx = comps[0][0] < comps[1][0] ? 0 : 1;
    if (path.size() > 2) {
        Vertex inner = path[1];
        c1_idx = std::binary_search(comps[0].begin(), comps[0].end(), inner)
                     ? 0
                     : 1;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (!std::binary_search(comps[c1_idx].begin(), comps[c1_idx].end(),
                                    path[i]))
                throw internal_error("path interior spans both components");
    }
    const std::vector<Vertex>& c1 = comps[c1_idx];
    std::vector<bool> in_c1(g.num_vertices(), false);
    for (Vertex v : c1) in_c1[v] = true;

    // T minus V(C1) must split into two pieces, one per mark.
    std::vector<bool> outside(g.num_vertices(), true);
    for (Vertex v : c1) outside[v] = false;
    auto t_pieces = components(t, outside);
    if (t_pieces.size() != 2)
        throw internal_error("T minus V(C1) does not have two components");
    std::vector<bool> in_piece0(g.num_vertices(), false);
    for (Vertex v : t_pieces[0]) in_piece0[v] = true;

    VertexPair er{-1, -1};
    for (auto [a, b] : g.edges()) {
        if (in_c1[a] || in_c1[b]) continue;
        if (in_piece0[a] != in_piece0[b]) {
            er = {a, b};
            break;  // edges() is lexicographic, first hit is least
        }
    }
    if (er.first < 0)
        throw internal_error("no edge links the two tree pieces");
    if (t.has_edge(er.first, er.second))
        throw internal_error("linking edge unexpectedly in the tree");

    if (s.level == 1) return {er};

    // Recurse on C1 with the tree restricted to it, in child coordinates.
    const bool left_side = [&] {
        std::vector<Vertex> img = s.left_map;
        std::sort(img.begin(), img.end());
        return img == c1;
    }();
    const ParallelStructure& child = left_side ? *s.left : *s.right;
    const std::vector<Vertex>& map = left_side ? s.left_map : s.right_map;
    std::vector<Vertex> inv(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(map.size()); ++i) inv[map[i]] = i;

    std::vector<VertexPair> sub_edges;
    for (auto [a, b] : t.edges())
        if (in_c1[a] && in_c1[b])
            sub_edges.emplace_back(std::min(inv[a], inv[b]),
                                   std::max(inv[a], inv[b]));
    Graph t_sub(static_cast<int>(map.size()), sub_edges);
    if (!is_spanning_tree(child.marked.graph, t_sub))
        throw internal_error("restricted tree is not spanning in the child");

    std::vector<VertexPair> m = matching_rec(child, t_sub);
    for (auto& [a, b] : m) {
        a = map[a];
        b = map[b];
        if (a > b) std::swap(a, b);
    }
    m.push_back(er);
    return m;
}

std::vector<VertexPair> path_edge_set(const std::vector<Vertex>& path) {
    std::vector<VertexPair> es;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        es.emplace_back(std::min(path[i], path[i + 1]),
                        std::max(path[i], path[i + 1]));
    std::sort(es.begin(), es.end());
    return es;
}

template <typename T>
std::vector<T> intersect_sorted(const std::vector<T>& a,
                                const std::vector<T>& b) {
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

MatchingCertificate lemma32_matching(const ParallelStructure& s,
                                     const Graph& t) {
    if (s.level < 1)
        throw domain_error("lemma32_matching requires level >= 1");
    if (!is_spanning_tree(s.marked.graph, t))
        throw domain_error("lemma32_matching: not a spanning tree");

    MatchingCertificate cert;
    cert.matching = matching_rec(s, t);
    cert.path = tree_path(t, s.marked.u, s.marked.v);

    // Intersections recomputed from scratch; the recursion's own
    // bookkeeping is never trusted.
    bool first = true;
    std::vector<Vertex> vs;
    std::vector<VertexPair> es;
    for (const auto& e : cert.matching) {
        Cycle c = fundamental_cycle(s.marked.graph, t, e);
        std::vector<Vertex> cv = c.vertices;
        std::sort(cv.begin(), cv.end());
        if (first) {
            vs = cv;
            es = c.edges;
            first = false;
        } else {
            vs = intersect_sorted(vs, cv);
            es = intersect_sorted(es, c.edges);
        }
    }
    cert.common_vertices = vs;
    cert.common_path_edges = intersect_sorted(es, path_edge_set(cert.path));
    verify_matching_certificate(s, t, cert);
    return cert;
}

void verify_matching_certificate(const ParallelStructure& s, const Graph& t,
                                 const MatchingCertificate& cert) {
    const Graph& g = s.marked.graph;
    if (static_cast<int>(cert.matching.size()) != s.level)
        throw internal_error("certificate matching size != r");
    std::set<Vertex> endpoints;
    for (auto [a, b] : cert.matching) {
        if (!g.has_edge(a, b))
            throw internal_error("matching edge " + to_string({a, b}) +
                                 " not in the graph");
        if (t.has_edge(a, b))
            throw internal_error("matching edge " + to_string({a, b}) +
                                 " lies in the tree");
        if (!endpoints.insert(a).second || !endpoints.insert(b).second)
            throw internal_error("matching edges share an endpoint");
    }
    if (cert.path != tree_path(t, s.marked.u, s.marked.v))
        throw internal_error("certificate path mismatch");

    std::vector<Vertex> vs;
    std::vector<VertexPair> es;
    bool first = true;
    for (const auto& e : cert.matching) {
        Cycle c = fundamental_cycle(g, t, e);
        std::vector<Vertex> cv = c.vertices;
        std::sort(cv.begin(), cv.end());
        if (first) {
            vs = cv;
            es = c.edges;
            first = false;
        } else {
            vs = intersect_sorted(vs, cv);
            es = intersect_sorted(es, c.edges);
        }
    }
    es = intersect_sorted(es, path_edge_set(cert.path));
    if (vs != cert.common_vertices || vs.empty())
        throw internal_error("common cycle vertices wrong or empty");
    if (es != cert.common_path_edges || es.empty())
        throw internal_error("common path edges wrong or empty");
}

Lemma33Result lemma33_check(const ParallelStructure& s,
                            const TreeDecomposition& d) {
    const Graph& g = s.marked.graph;
    auto res = validate(g, d);
    if (!res) throw domain_error("decomposition invalid: " + res.violation);
    if (!is_spanning_tree(g, d.tree))
        throw domain_error("index tree is not a spanning tree of the graph");
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!std::binary_search(d.bags[v].begin(), d.bags[v].end(), v))
            throw domain_error("vertex " + std::to_string(v) +
                               " is not in its own subtree");

    MatchingCertificate cert = lemma32_matching(s, d.tree);

    Lemma33Result out;
    out.witness = cert.common_vertices.front();
    for (auto [a, b] : cert.matching) {
        // Load-bearing step: the cycle of each matched pair is covered
        // by the two endpoint subtrees.
        if (!tree_path_covered_by_subtrees(d, a, b))
            throw internal_error("cycle not covered by endpoint subtrees");
        Cycle c = fundamental_cycle(g, d.tree, {a, b});
        auto ta = subtree_of(d, a);
        auto tb = subtree_of(d, b);
        for (Vertex x : c.vertices) {
            bool in_ta = std::binary_search(ta.begin(), ta.end(), x);
            bool in_tb = std::binary_search(tb.begin(), tb.end(), x);
            if (!in_ta && !in_tb)
                throw internal_error("cycle vertex outside both subtrees");
        }
        const auto& bx = d.bags[out.witness];
        if (!std::binary_search(bx.begin(), bx.end(), a) &&
            !std::binary_search(bx.begin(), bx.end(), b))
            throw internal_error("witness bag misses a matched pair");
    }
    out.bag_size = static_cast<int>(d.bags[out.witness].size());
    out.pass = out.bag_size >= s.level && width(d) >= s.level - 1;
    return out;
}

BuiltDecomposition pair_in_bag_decomposition(const ParallelStructure& s) {
    if (s.level == 0) {
        BuiltDecomposition out;
        out.d.tree = Graph(1);
        std::vector<Vertex> all(s.marked.graph.num_vertices());
        for (int i = 0; i < s.marked.graph.num_vertices(); ++i) all[i] = i;
        out.d.bags = {all};
        out.pair_node = 0;
        return out;
    }
    BuiltDecomposition d1 = pair_in_bag_decomposition(*s.left);
    BuiltDecomposition d2 = pair_in_bag_decomposition(*s.right);
    return lemma31_main(s, d1.d, d1.pair_node, d2.d, d2.pair_node);
}

BuiltDecomposition condition3_decomposition(const ParallelStructure& s) {
    if (s.level == 0) {
        const MarkedGraph& mg = s.marked;
        if (mg.graph.has_edge(mg.u, mg.v))
            throw domain_error("condition (3) is vacuous: uv is an edge");
        std::vector<Vertex> rest;
        for (Vertex w = 0; w < mg.graph.num_vertices(); ++w)
            if (w != mg.u && w != mg.v) rest.push_back(w);
        BuiltDecomposition out;
        out.d.tree = Graph(2, {{0, 1}});
        std::vector<Vertex> ba = rest, bb = rest;
        ba.push_back(mg.u);
        bb.push_back(mg.v);
        out.d.bags = {sorted_bag(std::move(ba)), sorted_bag(std::move(bb))};
        out.link_a = 0;
        out.link_b = 1;
        return out;
    }
    BuiltDecomposition d1 = pair_in_bag_decomposition(*s.left);
    BuiltDecomposition d2 = pair_in_bag_decomposition(*s.right);
    return lemma31_prime(s, d1.d, d1.pair_node, d2.d, d2.pair_node);
}

}  // namespace tw

#include "tw/constructions.hpp"

#include <algorithm>
#include <limits>

namespace tw {

MarkedGraph base_marked(int k, BaseVariant variant) {
    if (k < 1) throw domain_error("base_marked requires k >= 1");
    const int n = k + 1;
    std::vector<VertexPair> es;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (variant == BaseVariant::clique_minus_uv && a == 0 && b == 1)
                continue;
            es.emplace_back(a, b);
        }
    return MarkedGraph(Graph(n, es), 0, 1);
}

ParallelStructure parallel_connection(const MarkedGraph& a,
                                      const MarkedGraph& b) {
    const int na = a.graph.num_vertices();
    const int nb = b.graph.num_vertices();
    const Vertex u = na + nb;
    const Vertex v = na + nb + 1;

    std::vector<VertexPair> es = a.graph.edges();
    for (auto [x, y] : b.graph.edges()) es.emplace_back(x + na, y + na);
    es.emplace_back(std::min(u, a.u), std::max(u, a.u));
    es.emplace_back(std::min(u, Vertex(b.u + na)), std::max(u, Vertex(b.u + na)));
    es.emplace_back(std::min(v, a.v), std::max(v, a.v));
    es.emplace_back(std::min(v, Vertex(b.v + na)), std::max(v, Vertex(b.v + na)));

    ParallelStructure out;
    out.marked = MarkedGraph(Graph(na + nb + 2, es), u, v);
    out.level = 1;
    out.left = std::make_shared<const ParallelStructure>(
        ParallelStructure{a, 0, nullptr, nullptr, {}, {}});
    out.right = std::make_shared<const ParallelStructure>(
        ParallelStructure{b, 0, nullptr, nullptr, {}, {}});
    out.left_map.resize(na);
    out.right_map.resize(nb);
    for (int i = 0; i < na; ++i) out.left_map[i] = i;
    for (int i = 0; i < nb; ++i) out.right_map[i] = i + na;
    return out;
}

ParallelStructure iterated_parallel(const MarkedGraph& base, int r) {
    if (r < 0) throw domain_error("iterated_parallel requires r >= 0");
    if (r == 0) return ParallelStructure{base, 0, nullptr, nullptr, {}, {}};
    ParallelStructure child = iterated_parallel(base, r - 1);
    ParallelStructure out = parallel_connection(child.marked, child.marked);
    auto shared = std::make_shared<const ParallelStructure>(std::move(child));
    out.left = shared;
    out.right = shared;
    out.level = r;
    return out;
}

void check_structure(const ParallelStructure& s) {
    if (s.level == 0) {
        if (s.left || s.right)
            throw internal_error("level-0 structure has children");
        return;
    }
    if (!s.left || !s.right)
        throw internal_error("level >= 1 structure is missing children");
    const Graph& g = s.marked.graph;
    const Vertex u = s.marked.u, v = s.marked.v;

    std::vector<bool> present(g.num_vertices(), true);
    present[u] = present[v] = false;
    auto comps = components(g, present);
    if (comps.size() != 2)
        throw internal_error("removing the marked pair must leave exactly "
                             "two components, got " +
                             std::to_string(comps.size()));

    for (int side = 0; side < 2; ++side) {
        const auto& child = side == 0 ? *s.left : *s.right;
        const auto& map = side == 0 ? s.left_map : s.right_map;
        std::vector<Vertex> image = map;
        std::sort(image.begin(), image.end());
        if (image != comps[0] && image != comps[1])
            throw internal_error("child image is not a component");
        // Image must induce an isomorphic copy under the relabeling.
        for (auto [x, y] : child.marked.graph.edges())
            if (!g.has_edge(map[x], map[y]))
                throw internal_error("child edge missing in parent");
    }
    std::vector<Vertex> nu = g.neighbors(u);
    std::vector<Vertex> expect_u = {s.left_map[s.left->marked.u],
                                    s.right_map[s.right->marked.u]};
    std::sort(expect_u.begin(), expect_u.end());
    if (nu != expect_u)
        throw internal_error("u is not adjacent to exactly the child u-marks");
    std::vector<Vertex> nv = g.neighbors(v);
    std::vector<Vertex> expect_v = {s.left_map[s.left->marked.v],
                                    s.right_map[s.right->marked.v]};
    std::sort(expect_v.begin(), expect_v.end());
    if (nv != expect_v)
        throw internal_error("v is not adjacent to exactly the child v-marks");

    check_structure(*s.left);
    check_structure(*s.right);
}

BigValue BigValue::make(BigInt v) {
    BigValue out;
    out.exact = true;
    out.value = std::move(v);
    return out;
}

BigValue BigValue::symbolic(std::string e) {
    BigValue out;
    out.exact = false;
    out.expr = std::move(e);
    return out;
}

std::string BigValue::str() const {
    return exact ? value.str() : expr;
}

BigInt complete_tree_size(const BigInt& arity, const BigInt& height) {
    if (arity < 1 || height < 0)
        throw domain_error("complete_tree_size: arity >= 1, height >= 0");
    if (arity == 1) return height + 1;
    if (height + 1 > (std::numeric_limits<unsigned>::max)())
        throw resource_error("complete_tree_size: height too large to expand");
    // sum_{i=0}^{h} w^i
    BigInt h = height;
    BigInt pw = boost::multiprecision::pow(
        arity, static_cast<unsigned>(h + 1));
    return (pw - 1) / (arity - 1);
}

namespace {

// Bit-length estimate of base^exp without computing it.
bool power_fits(const BigInt& base, const BigInt& exp, long cap_bits) {
    long base_bits = static_cast<long>(boost::multiprecision::msb(base)) + 1;
    return exp * base_bits <= cap_bits;
}

}  // namespace

TowerPlan tower_parameters(int k, int n, long cap_bits) {
    if (k < 1 || n < 1) throw domain_error("tower_parameters: k, n >= 1");
    TowerPlan plan;
    plan.k = k;
    plan.n = n;

    // h_1 = 2, h_j = (k+2)^(2 h_{j-1}) + 1.
    const BigInt hb = k + 2;
    plan.heights.push_back(BigValue::make(2));
    for (int j = 2; j <= n; ++j) {
        const BigValue& prev = plan.heights.back();
        std::string expr = "(" + hb.str() + ")^(2*h_" +
                           std::to_string(j - 1) + ")+1";
        if (prev.exact && power_fits(hb, 2 * prev.value, cap_bits)) {
            BigInt e = 2 * prev.value;
            plan.heights.push_back(BigValue::make(
                boost::multiprecision::pow(hb, static_cast<unsigned>(e)) + 1));
        } else {
            plan.heights.push_back(BigValue::symbolic(expr));
        }
    }

    // w_n = (k+1)n + 1, then downward
    // w_j = (k+1)(n + sum_{i=j+1}^n |V(S_i)|) + 1.
    plan.arities.assign(n, BigValue{});
    plan.tree_sizes.assign(n, BigValue{});
    BigValue running_sum = BigValue::make(0);  // sum of |V(S_i)|, i > j
    for (int j = n; j >= 1; --j) {
        BigValue& w = plan.arities[j - 1];
        if (running_sum.exact) {
            w = BigValue::make(BigInt(k + 1) * (n + running_sum.value) + 1);
        } else {
            w = BigValue::symbolic("(" + std::to_string(k + 1) + ")*(" +
                                   std::to_string(n) + "+sum(|V(S_i)|,i=" +
                                   std::to_string(j + 1) + ".." +
                                   std::to_string(n) + "))+1");
        }
        const BigValue& h = plan.heights[j - 1];
        BigValue& sz = plan.tree_sizes[j - 1];
        std::string size_expr =
            "sum(w_" + std::to_string(j) + "^i,i=0..h_" + std::to_string(j) + ")";
        if (w.exact && h.exact && power_fits(w.value, h.value + 1, cap_bits)) {
            sz = BigValue::make(complete_tree_size(w.value, h.value));
        } else {
            sz = BigValue::symbolic(size_expr);
        }
        if (running_sum.exact && sz.exact)
            running_sum = BigValue::make(running_sum.value + sz.value);
        else
            running_sum = BigValue::symbolic("symbolic");
    }
    return plan;
}

TowerGraph tower_tree(const Graph& base, int height, int arity,
                      long max_vertices) {
    if (height < 0 || arity < 1)
        throw domain_error("tower_tree: height >= 0, arity >= 1");
    const int n = base.num_vertices();
    BigInt per_tree = complete_tree_size(arity, height);
    BigInt total = BigInt(n) + BigInt(n) * (per_tree - 1);
    if (total > max_vertices)
        throw resource_error("tower materialization needs " + total.str() +
                             " vertices, limit is " +
                             std::to_string(max_vertices));

    TowerGraph out;
    out.base_n = n;
    std::vector<VertexPair> es = base.edges();
    out.tree_index.assign(n, 0);
    out.parent.assign(n, -1);
    out.depth.assign(n, 0);
    for (int j = 0; j < n; ++j) out.tree_index[j] = j;

    int next_id = n;
    for (int j = 0; j < n; ++j) {
        // BFS layers below root a_j.
        std::vector<Vertex> layer = {j};
        for (int d = 1; d <= height; ++d) {
            std::vector<Vertex> next_layer;
            for (Vertex p : layer)
                for (int c = 0; c < arity; ++c) {
                    Vertex id = next_id++;
                    es.emplace_back(std::min(p, id), std::max(p, id));
                    out.tree_index.push_back(j);
                    out.parent.push_back(p);
                    out.depth.push_back(d);
                    next_layer.push_back(id);
                }
            layer = std::move(next_layer);
        }
    }
    out.graph = Graph(next_id, es);
    return out;
}

}  // namespace tw

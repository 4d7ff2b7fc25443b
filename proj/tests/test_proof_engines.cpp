#include <random>
#include <set>

#include "doctest.h"
#include "tw/oracle.hpp"
#include "tw/proof_engines.hpp"

using namespace tw;

namespace {

TreeDecomposition single_bag(const Graph& g) {
    TreeDecomposition d;
    d.tree = Graph(1);
    std::vector<Vertex> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    d.bags = {all};
    return d;
}

}  // namespace

TEST_CASE("lemma31_main splice of two K_4 copies") {
    auto k4 = base_marked(3, BaseVariant::clique);
    auto s = parallel_connection(k4, k4);
    auto d = single_bag(k4.graph);
    auto out = lemma31_main(s, d, 0, d, 0);
    const Graph& g = s.marked.graph;
    REQUIRE(validate(g, out.d).valid);
    CHECK(width(out.d) == 3);
    CHECK(out.pair_node >= 0);
    CHECK(pair_in_common_bag(out.d, s.marked.u, s.marked.v));
    // the advertised node really holds the pair
    auto bag = out.d.bags[out.pair_node];
    CHECK(std::count(bag.begin(), bag.end(), s.marked.u) == 1);
    CHECK(std::count(bag.begin(), bag.end(), s.marked.v) == 1);
    // no cross-component pair shares a bag
    for (Vertex x = 0; x < 4; ++x)
        for (Vertex y = 0; y < 4; ++y)
            CHECK(!pair_in_common_bag(out.d, s.left_map[x], s.right_map[y]));
    // for any x outside N(v) + {u}: v never shares a bag with x
    std::set<Vertex> allowed(g.neighbors(s.marked.v).begin(),
                             g.neighbors(s.marked.v).end());
    allowed.insert(s.marked.u);
    allowed.insert(s.marked.v);
    for (Vertex x = 0; x < g.num_vertices(); ++x)
        if (!allowed.count(x)) CHECK(!pair_in_common_bag(out.d, s.marked.v, x));
}

TEST_CASE("lemma31_prime separates the new marks with a linked witness") {
    auto k4 = base_marked(3, BaseVariant::clique);
    auto s = parallel_connection(k4, k4);
    auto d = single_bag(k4.graph);
    auto out = lemma31_prime(s, d, 0, d, 0);
    REQUIRE(validate(s.marked.graph, out.d).valid);
    CHECK(width(out.d) == 3);
    CHECK(!pair_in_common_bag(out.d, s.marked.u, s.marked.v));
    REQUIRE(out.link_a >= 0);
    REQUIRE(out.link_b >= 0);
    CHECK(s.marked.graph.num_vertices() == 10);
    CHECK(out.d.tree.has_edge(out.link_a, out.link_b));
    CHECK(out.d.bags[out.link_a].size() == 3);
    CHECK(out.d.bags[out.link_b].size() == 3);
    auto& ba = out.d.bags[out.link_a];
    auto& bb = out.d.bags[out.link_b];
    CHECK(std::count(ba.begin(), ba.end(), s.marked.u) == 1);
    CHECK(std::count(bb.begin(), bb.end(), s.marked.v) == 1);
}

TEST_CASE("lemma31_main rejects bad component inputs") {
    auto k4 = base_marked(3, BaseVariant::clique);
    auto s = parallel_connection(k4, k4);
    auto d = single_bag(k4.graph);
    // s1 out of range
    CHECK_THROWS_AS(lemma31_main(s, d, 5, d, 0), domain_error);
    // marks not in the claimed bag
    TreeDecomposition partial;
    partial.tree = Graph(2, {{0, 1}});
    partial.bags = {{0, 2, 3}, {1, 2, 3}};
    CHECK_THROWS_AS(lemma31_main(s, partial, 0, d, 0), domain_error);
    // invalid component decomposition
    TreeDecomposition broken;
    broken.tree = Graph(1);
    broken.bags = {{0, 1}};
    CHECK_THROWS_AS(lemma31_main(s, broken, 0, d, 0), domain_error);
}

TEST_CASE("lemma31_case4 on (K_4 minus uv, K_4)") {
    auto k4m = base_marked(3, BaseVariant::clique_minus_uv);
    auto k4 = base_marked(3, BaseVariant::clique);
    auto s = parallel_connection(k4m, k4);
    // condition-(3) two-bag witness for K_4 minus uv
    BuiltDecomposition d3;
    d3.d.tree = Graph(2, {{0, 1}});
    d3.d.bags = {{0, 2, 3}, {1, 2, 3}};
    d3.link_a = 0;
    d3.link_b = 1;
    auto out = lemma31_case4(s, 3, d3, single_bag(k4.graph), 0);
    const Graph& g = s.marked.graph;
    REQUIRE(validate(g, out.d).valid);
    CHECK(width(out.d) == 3);
    Vertex u1 = s.left_map[k4m.u], v1 = s.left_map[k4m.v];
    CHECK(!pair_in_common_bag(out.d, u1, v1));
    CHECK(pair_in_common_bag(out.d, s.marked.u, s.marked.v));
    // B_a = {u, v, u_1, u_2} has size 4 = k + 1
    REQUIRE(out.pair_node >= 0);
    CHECK(out.d.bags[out.pair_node].size() == 4);
    for (auto& bag : out.d.bags) CHECK(bag.size() <= 4);
}

TEST_CASE("lemma31_case4 rejects oversized link bags") {
    auto k4m = base_marked(3, BaseVariant::clique_minus_uv);
    auto k4 = base_marked(3, BaseVariant::clique);
    auto s = parallel_connection(k4m, k4);
    BuiltDecomposition bad;
    bad.d.tree = Graph(2, {{0, 1}});
    bad.d.bags = {{0, 1, 2, 3}, {1, 2, 3}};  // link bag of size 4 > k
    bad.link_a = 0;
    bad.link_b = 1;
    CHECK_THROWS_AS(lemma31_case4(s, 3, bad, single_bag(k4.graph), 0),
                    domain_error);
}

TEST_CASE("lemma22_lift preserves avoidance and width") {
    auto k4m = base_marked(3, BaseVariant::clique_minus_uv);
    auto avoid = decide_width_avoiding_pair(k4m.graph, 3, k4m.u, k4m.v);
    REQUIRE(avoid.feasible);
    auto tower = tower_tree(k4m.graph, 1, 2);
    auto lifted = lemma22_lift(*avoid.witness, tower);
    REQUIRE(validate(tower.graph, lifted).valid);
    CHECK(width(lifted) <= 3);
    CHECK(!pair_in_common_bag(lifted, k4m.u, k4m.v));
}

TEST_CASE("lemma22_lift: per-tree and cross-tree bullets") {
    auto k4 = base_marked(3, BaseVariant::clique);
    auto tower = tower_tree(k4.graph, 2, 2);
    auto lifted = lemma22_lift(single_bag(k4.graph), tower);
    REQUIRE(validate(tower.graph, lifted).valid);
    const int nv = tower.graph.num_vertices();
    for (Vertex a = 0; a < nv; ++a)
        for (Vertex b = a + 1; b < nv; ++b) {
            if (tower.graph.has_edge(a, b)) continue;
            if (a < tower.base_n && b < tower.base_n) continue;
            // same-tree non-edges and cross-tree pairs never share a bag
            CHECK(!pair_in_common_bag(lifted, a, b));
        }
}

TEST_CASE("lemma22_lift rejects invalid base decompositions") {
    auto k4 = base_marked(3, BaseVariant::clique);
    auto tower = tower_tree(k4.graph, 1, 2);
    TreeDecomposition broken;
    broken.tree = Graph(1);
    broken.bags = {{0, 1}};
    CHECK_THROWS_AS(lemma22_lift(broken, tower), domain_error);
}

TEST_CASE("lemma32 certificates for every spanning tree of G_1") {
    auto s = iterated_parallel(base_marked(3, BaseVariant::clique), 1);
    const Graph& g = s.marked.graph;
    std::set<VertexPair> edges;
    for (auto e : g.edges()) edges.insert(e);
    int count = 0;
    for_each_spanning_tree(g, [&](const Graph& t) {
        auto cert = lemma32_matching(s, t);
        CHECK(cert.matching.size() == 1);
        CHECK(!cert.common_vertices.empty());
        CHECK(!cert.common_path_edges.empty());
        CHECK(edges.count(cert.matching[0]) == 1);
        CHECK(!t.has_edge(cert.matching[0].first, cert.matching[0].second));
        CHECK(cert.path.front() == s.marked.u);
        CHECK(cert.path.back() == s.marked.v);
        CHECK_NOTHROW(verify_matching_certificate(s, t, cert));
        ++count;
        return true;
    });
    CHECK(count == 1280);
}

TEST_CASE("lemma32 matching properties at r = 2, sampled") {
    auto s = iterated_parallel(base_marked(3, BaseVariant::clique), 2);
    std::mt19937_64 rng(61);
    for (int i = 0; i < 50; ++i) {
        Graph t = random_spanning_tree(s.marked.graph, rng);
        auto cert = lemma32_matching(s, t);
        REQUIRE(cert.matching.size() == 2);
        // matching: the two edges share no endpoint
        auto [a1, b1] = cert.matching[0];
        auto [a2, b2] = cert.matching[1];
        std::set<Vertex> ends{a1, b1, a2, b2};
        CHECK(ends.size() == 4);
        CHECK(!cert.common_path_edges.empty());
        CHECK_NOTHROW(verify_matching_certificate(s, t, cert));
    }
}

TEST_CASE("tampered certificates are rejected") {
    auto s = iterated_parallel(base_marked(3, BaseVariant::clique), 1);
    std::mt19937_64 rng(67);
    Graph t = random_spanning_tree(s.marked.graph, rng);
    auto cert = lemma32_matching(s, t);
    auto bad = cert;
    bad.matching.clear();
    CHECK_THROWS_AS(verify_matching_certificate(s, t, bad), internal_error);
    bad = cert;
    bad.common_vertices.push_back(s.marked.u);
    bad.common_vertices.push_back(s.marked.v);
    CHECK_THROWS_AS(verify_matching_certificate(s, t, bad), internal_error);
    // non-spanning tree input
    CHECK_THROWS_AS(lemma32_matching(s, Graph(4, {{0, 1}, {1, 2}, {2, 3}})),
                    domain_error);
}

TEST_CASE("lemma33_check preconditions") {
    auto s = iterated_parallel(base_marked(3, BaseVariant::clique), 1);
    TreeDecomposition d;
    d.tree = Graph(3, {{0, 1}, {1, 2}});  // not a spanning tree of G_1
    d.bags = {{0}, {1}, {2}};
    CHECK_THROWS_AS(lemma33_check(s, d), domain_error);
}

TEST_CASE("pair_in_bag and condition3 builders at every level") {
    for (auto variant : {BaseVariant::clique, BaseVariant::clique_minus_uv}) {
        for (int r = 0; r <= 2; ++r) {
            auto s = iterated_parallel(base_marked(3, variant), r);
            const MarkedGraph& mg = s.marked;
            auto with_pair = pair_in_bag_decomposition(s);
            REQUIRE(validate(mg.graph, with_pair.d).valid);
            CHECK(width(with_pair.d) <= 3);
            CHECK(pair_in_common_bag(with_pair.d, mg.u, mg.v));
            if (!mg.graph.has_edge(mg.u, mg.v)) {
                auto c3 = condition3_decomposition(s);
                REQUIRE(validate(mg.graph, c3.d).valid);
                CHECK(width(c3.d) <= 3);
                CHECK(!pair_in_common_bag(c3.d, mg.u, mg.v));
                REQUIRE(c3.link_a >= 0);
                REQUIRE(c3.link_b >= 0);
                CHECK(c3.d.tree.has_edge(c3.link_a, c3.link_b));
                CHECK(c3.d.bags[c3.link_a].size() <= 3);
                CHECK(c3.d.bags[c3.link_b].size() <= 3);
                auto& ba = c3.d.bags[c3.link_a];
                auto& bb = c3.d.bags[c3.link_b];
                CHECK(std::count(ba.begin(), ba.end(), mg.u) == 1);
                CHECK(std::count(bb.begin(), bb.end(), mg.v) == 1);
            }
        }
    }
}

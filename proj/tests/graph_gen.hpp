#ifndef TESTS_GRAPH_GEN_HPP
#define TESTS_GRAPH_GEN_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tw/graph.hpp"

namespace testgen {

// Graphs on n vertices as bitmasks over the n(n-1)/2 pairs (i<j),
// pair (i,j) at index i*n - i*(i+1)/2 + (j-i-1).
inline int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t img = 0;
        std::uint64_t m = mask;
        while (m) {
            int idx = std::countr_zero(m);
            m &= m - 1;
            // invert pair index
            int i = 0, base = 0;
            while (base + (n - i - 1) <= idx) {
                base += n - i - 1;
                ++i;
            }
            int j = i + 1 + (idx - base);
            int a = perm[i], b = perm[j];
            if (a > b) std::swap(a, b);
            img |= std::uint64_t(1) << pair_index(n, a, b);
        }
        best = std::min(best, img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline tw::Graph mask_to_graph(int n, std::uint64_t mask) {
    std::vector<tw::VertexPair> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask & (std::uint64_t(1) << pair_index(n, i, j)))
                es.emplace_back(i, j);
    return tw::Graph(n, es);
}

// Every graph on n vertices up to isomorphism, built by extending the
// (n-1)-vertex canon with all possible new-vertex neighborhoods.
inline const std::vector<std::uint64_t>& canonical_graphs(int n) {
    static std::vector<std::vector<std::uint64_t>> cache{{}, {0}};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        std::set<std::uint64_t> out;
        for (std::uint64_t small : cache[m - 1]) {
            // re-embed: pair indices for m-1 vertices map into the
            // m-vertex numbering (same i<j<m-1 pairs, different strides)
            std::uint64_t base = 0;
            std::uint64_t s = small;
            while (s) {
                int idx = std::countr_zero(s);
                s &= s - 1;
                int i = 0, acc = 0;
                while (acc + (m - 1 - i - 1) <= idx) {
                    acc += m - 1 - i - 1;
                    ++i;
                }
                int j = i + 1 + (idx - acc);
                base |= std::uint64_t(1) << pair_index(m, i, j);
            }
            for (std::uint64_t nb = 0; nb < (std::uint64_t(1) << (m - 1));
                 ++nb) {
                std::uint64_t mask = base;
                for (int i = 0; i < m - 1; ++i)
                    if (nb & (std::uint64_t(1) << i))
                        mask |= std::uint64_t(1) << pair_index(m, i, m - 1);
                out.insert(canonical_mask(m, mask));
            }
        }
        cache.emplace_back(out.begin(), out.end());
    }
    return cache[n];
}

inline std::vector<tw::Graph> all_connected_graphs(int n) {
    std::vector<tw::Graph> out;
    for (std::uint64_t mask : canonical_graphs(n)) {
        tw::Graph g = mask_to_graph(n, mask);
        if (tw::is_connected(g)) out.push_back(g);
    }
    return out;
}

inline tw::Graph random_connected_graph(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pd(0.2, 0.8);
    std::bernoulli_distribution flip;
    for (;;) {
        double p = pd(rng);
        std::vector<tw::VertexPair> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::generate_canonical<double, 53>(rng) < p)
                    es.emplace_back(i, j);
        tw::Graph g(n, es);
        if (tw::is_connected(g)) return g;
    }
}

}  // namespace testgen

#endif

#ifndef TESTS_NAIVE_ORACLE_HPP
#define TESTS_NAIVE_ORACLE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "tw/graph.hpp"

namespace testgen {

// Brute force over all |V|! elimination orderings with explicit fill
// simulation on adjacency matrices. Independent of the subset DP:
// returns the plain treewidth and, for every pair, the least width
// achievable by an ordering none of whose step bags contains both
// endpoints (the "fill avoids the pair" filter).
struct NaiveWidths {
    int treewidth = 0;
    std::map<tw::VertexPair, int> best_avoiding;  // all pairs i<j
};

inline NaiveWidths naive_widths(const tw::Graph& g) {
    const int n = g.num_vertices();
    NaiveWidths out;
    out.treewidth = n > 0 ? n - 1 : 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.best_avoiding[{i, j}] = n;  // sentinel: not yet achieved
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<char>> base(n, std::vector<char>(n, 0));
    for (auto [a, b] : g.edges()) base[a][b] = base[b][a] = 1;
    do {
        auto adj = base;
        std::vector<char> gone(n, 0);
        int maxbag = 0;
        std::vector<std::vector<int>> bags;
        for (int v : order) {
            std::vector<int> bag{v};
            for (int w = 0; w < n; ++w)
                if (!gone[w] && adj[v][w]) bag.push_back(w);
            maxbag = std::max(maxbag, static_cast<int>(bag.size()));
            for (std::size_t a = 1; a < bag.size(); ++a)
                for (std::size_t b = a + 1; b < bag.size(); ++b)
                    adj[bag[a]][bag[b]] = adj[bag[b]][bag[a]] = 1;
            gone[v] = 1;
            bags.push_back(std::move(bag));
        }
        int w = maxbag - 1;
        out.treewidth = std::min(out.treewidth, w);
        for (auto& [pair, best] : out.best_avoiding) {
            if (w >= best) continue;
            bool avoided = true;
            for (const auto& bag : bags) {
                bool hx = false, hy = false;
                for (int x : bag) {
                    hx = hx || x == pair.first;
                    hy = hy || x == pair.second;
                }
                if (hx && hy) {
                    avoided = false;
                    break;
                }
            }
            if (avoided) best = w;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace testgen

#endif

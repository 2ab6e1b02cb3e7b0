#pragma once

// Test-side graph generation: exhaustive labeled graphs, non-isomorphic
// representatives (by canonical relabeling), standard small graphs, and the
// random instance generators used by the certificate soundness suite.
// Everything here is independent of the recognizer implementations it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ordpat/graph.hpp"

namespace ordpat::testgen {

// Edge bits in graph6 order: for j in 1..n-1, for i in 0..j-1.
inline int pair_bit(int i, int j) { // requires i < j
    return j * (j - 1) / 2 + i;
}

inline UndirectedGraph graph_from_mask(int n, std::uint64_t mask) {
    UndirectedGraph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_bit(i, j)) & 1u) g.add_edge(i, j);
    return g;
}

inline std::uint64_t mask_of(const UndirectedGraph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= (std::uint64_t{1} << pair_bit(u, v));
    return mask;
}

inline std::uint64_t relabel_mask(int n, std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_bit(i, j)) & 1u) {
                int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                out |= (std::uint64_t{1} << pair_bit(a, b));
            }
    return out;
}

inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = relabel_mask(n, mask, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, relabel_mask(n, mask, perm));
    return best;
}

inline std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

// All non-isomorphic graphs on exactly n vertices, built by extending the
// (n-1)-vertex representatives with every possible new neighborhood.
inline std::vector<std::uint64_t> nonisomorphic_masks(int n) {
    if (n == 0) return {0};
    std::vector<std::uint64_t> prev = nonisomorphic_masks(n - 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t base : prev) {
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
            std::uint64_t mask = base;
            for (int i = 0; i < n - 1; ++i)
                if ((nb >> i) & 1u) mask |= (std::uint64_t{1} << pair_bit(i, n - 1));
            out.push_back(canonical_mask(n, mask));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<UndirectedGraph> nonisomorphic_graphs(int n) {
    std::vector<UndirectedGraph> out;
    for (std::uint64_t mask : nonisomorphic_masks(n)) out.push_back(graph_from_mask(n, mask));
    return out;
}

// ---------------------------------------------------------------------------
// Named small graphs

inline UndirectedGraph path_graph(int n) {
    UndirectedGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline UndirectedGraph cycle_graph(int n) {
    UndirectedGraph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline UndirectedGraph complete_graph(int n) {
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline UndirectedGraph star_graph(int leaves) { // center is vertex 0
    UndirectedGraph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline UndirectedGraph complete_bipartite_graph(int a, int b) {
    UndirectedGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline UndirectedGraph disjoint_union(const UndirectedGraph& a, const UndirectedGraph& b) {
    UndirectedGraph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

// ---------------------------------------------------------------------------
// Random members of specific classes

inline UndirectedGraph random_k_tree(std::mt19937& rng, int n, int k) {
    if (n <= k + 1) return complete_graph(std::max(1, n));
    UndirectedGraph g(n);
    std::vector<std::vector<int>> cliques;
    std::vector<int> base;
    for (int v = 0; v <= k; ++v) base.push_back(v);
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);
    cliques.push_back(base);
    for (int v = k + 1; v < n; ++v) {
        const auto& clique = cliques[std::uniform_int_distribution<std::size_t>(
            0, cliques.size() - 1)(rng)];
        std::vector<int> chosen = clique;
        if (static_cast<int>(chosen.size()) > k) {
            std::shuffle(chosen.begin(), chosen.end(), rng);
            chosen.resize(static_cast<std::size_t>(k));
        }
        for (int u : chosen) g.add_edge(u, v);
        for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
            std::vector<int> next;
            for (std::size_t i = 0; i < chosen.size(); ++i)
                if (i != drop) next.push_back(chosen[i]);
            next.push_back(v);
            cliques.push_back(next);
        }
    }
    return g;
}

inline UndirectedGraph random_indifference_graph(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> dist(0.0, std::max(1.0, n / 3.0));
    std::vector<double> coord(static_cast<std::size_t>(n));
    for (double& x : coord) x = dist(rng);
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::abs(coord[static_cast<std::size_t>(u)] - coord[static_cast<std::size_t>(v)]) <=
                1.0)
                g.add_edge(u, v);
    return g;
}

inline UndirectedGraph random_threshold_graph(std::mt19937& rng, int n) {
    UndirectedGraph g(n);
    std::bernoulli_distribution dominating(0.5);
    for (int v = 1; v < n; ++v)
        if (dominating(rng))
            for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

inline UndirectedGraph random_bipartite_graph(std::mt19937& rng, int n, double p) {
    std::uniform_int_distribution<int> side_dist(0, 1);
    std::bernoulli_distribution edge(p);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (int& s : side) s = side_dist(rng);
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && edge(rng))
                g.add_edge(u, v);
    return g;
}

// Comparability graph of a random partial order (random DAG, transitively closed).
inline UndirectedGraph random_comparability_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution rel(p);
    std::vector<int> topo(static_cast<std::size_t>(n));
    std::iota(topo.begin(), topo.end(), 0);
    std::shuffle(topo.begin(), topo.end(), rng);
    std::vector<std::vector<bool>> below(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel(rng)) below[static_cast<std::size_t>(topo[static_cast<std::size_t>(i)])]
                               [static_cast<std::size_t>(topo[static_cast<std::size_t>(j)])] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (below[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                for (int j = 0; j < n; ++j)
                    if (below[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                        below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (below[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ||
                below[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                g.add_edge(u, v);
    return g;
}

} // namespace ordpat::testgen

#pragma once

// Simple loopless undirected graphs with vertices 0..n-1, plus vertex
// orderings (permutations used as membership certificates).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordpat {

class UndirectedGraph {
public:
    UndirectedGraph() : UndirectedGraph(0) {}

    explicit UndirectedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        if (n_ <= 64) masks_.assign(static_cast<std::size_t>(n_), 0);
    }

    static UndirectedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        UndirectedGraph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }
    std::int64_t m() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
        if (!masks_.empty()) {
            masks_[static_cast<std::size_t>(u)] |= (std::uint64_t{1} << v);
            masks_[static_cast<std::size_t>(v)] |= (std::uint64_t{1} << u);
        }
        ++m_;
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        if (!masks_.empty()) return (masks_[static_cast<std::size_t>(u)] >> v) & 1u;
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    UndirectedGraph complement() const {
        UndirectedGraph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

    // Subgraph induced by `vertices`; resulting ids follow the given order.
    UndirectedGraph induced(const std::vector<int>& vertices) const {
        UndirectedGraph g(static_cast<int>(vertices.size()));
        for (std::size_t a = 0; a < vertices.size(); ++a)
            for (std::size_t b = a + 1; b < vertices.size(); ++b)
                if (has_edge(vertices[a], vertices[b]))
                    g.add_edge(static_cast<int>(a), static_cast<int>(b));
        return g;
    }

    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (int s = 0; s < n_; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            std::vector<int> comp{s}, stack{s};
            seen[static_cast<std::size_t>(s)] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : neighbors(v)) {
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = true;
                        comp.push_back(u);
                        stack.push_back(u);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    std::vector<int> isolated_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (degree(v) == 0) out.push_back(v);
        return out;
    }

    bool operator==(const UndirectedGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 0.." +
                                        std::to_string(n_ - 1));
    }

    static void insert_sorted(std::vector<int>& a, int v) {
        a.insert(std::upper_bound(a.begin(), a.end(), v), v);
    }

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> masks_; // adjacency bitmasks when n <= 64
};

// Permutation of 0..n-1: order[position] = vertex, with the inverse map.
class VertexOrdering {
public:
    VertexOrdering() = default;

    explicit VertexOrdering(std::vector<int> order) : order_(std::move(order)) {
        const int n = static_cast<int>(order_.size());
        inverse_.assign(static_cast<std::size_t>(n), -1);
        for (int pos = 0; pos < n; ++pos) {
            int v = order_[static_cast<std::size_t>(pos)];
            if (v < 0 || v >= n || inverse_[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("ordering is not a permutation of 0..n-1");
            inverse_[static_cast<std::size_t>(v)] = pos;
        }
    }

    static VertexOrdering identity(int n) {
        std::vector<int> ord(static_cast<std::size_t>(n));
        std::iota(ord.begin(), ord.end(), 0);
        return VertexOrdering(std::move(ord));
    }

    int size() const { return static_cast<int>(order_.size()); }
    int vertex_at(int pos) const { return order_[static_cast<std::size_t>(pos)]; }
    int position_of(int v) const { return inverse_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& order() const { return order_; }

    VertexOrdering reversed() const {
        std::vector<int> ord(order_.rbegin(), order_.rend());
        return VertexOrdering(std::move(ord));
    }

    bool operator==(const VertexOrdering& other) const { return order_ == other.order_; }

private:
    std::vector<int> order_;
    std::vector<int> inverse_;
};

} // namespace ordpat

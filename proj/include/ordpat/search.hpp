#pragma once

// Graph search toolbox: generic search, BFS, DFS, LexBFS, LexBFS+, MNS and
// maximal degree search, all emitting vertex orderings.  LexBFS/LexBFS+ run on
// a shared partition-refinement engine.
//
// Unspecified tie-breaks are least-vertex-id.  LexBFS+ breaks ties toward the
// vertex latest in the prior ordering.  On disconnected graphs every search
// restarts at the least-id unvisited vertex after exhausting a component.

#include <list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ordpat/graph.hpp"

namespace ordpat {

enum class SearchAlgo { Generic, BFS, DFS, LexBFS, LexBFSPlus, MNS, MDS };

inline const char* search_algo_name(SearchAlgo a) {
    switch (a) {
    case SearchAlgo::Generic: return "generic";
    case SearchAlgo::BFS: return "bfs";
    case SearchAlgo::DFS: return "dfs";
    case SearchAlgo::LexBFS: return "lexbfs";
    case SearchAlgo::LexBFSPlus: return "lexbfs+";
    case SearchAlgo::MNS: return "mns";
    default: return "mds";
    }
}

struct SearchKind {
    SearchAlgo kind = SearchAlgo::LexBFS;
    std::optional<int> start;
    std::optional<VertexOrdering> prior; // required by LexBFSPlus
};

struct TraceEntry {
    int vertex = -1;
    std::vector<int> label; // positions of already-visited neighbors at choice time
    int degree = 0;         // remaining degree at choice time
};

struct SearchResult {
    VertexOrdering ordering;
    std::optional<std::vector<int>> layers; // BFS only, per vertex
    std::vector<TraceEntry> trace;
};

namespace detail {

inline void check_start(const UndirectedGraph& g, const std::optional<int>& start) {
    if (start && (*start < 0 || *start >= g.n()))
        throw std::invalid_argument("start vertex out of range");
}

// Partition refinement.  Buckets are kept in label order (front = largest
// label); each bucket stores (selection key, vertex) so that the begin element
// is the preferred tie-break choice.
inline std::vector<int> lexbfs_order(const UndirectedGraph& g, const std::vector<int>& key,
                                     std::optional<int> start) {
    const int n = g.n();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    using Bucket = std::set<std::pair<int, int>>;
    std::list<Bucket> buckets;
    std::vector<std::list<Bucket>::iterator> bucket_of(static_cast<std::size_t>(n));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);

    buckets.emplace_back();
    for (int v = 0; v < n; ++v) {
        buckets.back().insert({key[static_cast<std::size_t>(v)], v});
        bucket_of[static_cast<std::size_t>(v)] = std::prev(buckets.end());
    }
    if (start) {
        auto& all = buckets.back();
        all.erase({key[static_cast<std::size_t>(*start)], *start});
        buckets.emplace_front();
        buckets.front().insert({key[static_cast<std::size_t>(*start)], *start});
        bucket_of[static_cast<std::size_t>(*start)] = buckets.begin();
    }

    while (!buckets.empty()) {
        auto front = buckets.begin();
        int v = front->begin()->second;
        front->erase(front->begin());
        if (front->empty()) buckets.erase(front);
        visited[static_cast<std::size_t>(v)] = true;
        order.push_back(v);

        // Split each bucket holding neighbors of v: neighbors move to a fresh
        // bucket placed immediately in front (their label grew).
        std::map<Bucket*, std::list<Bucket>::iterator> split_of;
        std::vector<std::list<Bucket>::iterator> maybe_empty;
        for (int u : g.neighbors(v)) {
            if (visited[static_cast<std::size_t>(u)]) continue;
            auto bucket = bucket_of[static_cast<std::size_t>(u)];
            auto it = split_of.find(&*bucket);
            if (it == split_of.end()) {
                auto fresh = buckets.emplace(bucket);
                it = split_of.emplace(&*bucket, fresh).first;
                maybe_empty.push_back(bucket);
            }
            bucket->erase({key[static_cast<std::size_t>(u)], u});
            it->second->insert({key[static_cast<std::size_t>(u)], u});
            bucket_of[static_cast<std::size_t>(u)] = it->second;
        }
        for (auto bucket : maybe_empty)
            if (bucket->empty()) buckets.erase(bucket);
    }
    return order;
}

inline std::vector<int> bfs_order(const UndirectedGraph& g, std::optional<int> start,
                                  std::vector<int>& layers) {
    const int n = g.n();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    layers.assign(static_cast<std::size_t>(n), -1);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> queue;
    int next_root = 0;
    auto push_root = [&](int r) {
        visited[static_cast<std::size_t>(r)] = true;
        layers[static_cast<std::size_t>(r)] = 0;
        queue.push_back(r);
    };
    if (start) push_root(*start);
    std::size_t head = 0;
    while (static_cast<int>(order.size()) < n) {
        if (head == queue.size()) {
            while (next_root < n && visited[static_cast<std::size_t>(next_root)]) ++next_root;
            push_root(next_root);
        }
        int v = queue[head++];
        order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = true;
                layers[static_cast<std::size_t>(u)] = layers[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    return order;
}

inline std::vector<int> dfs_order(const UndirectedGraph& g, std::optional<int> start) {
    const int n = g.n();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<std::size_t> next_edge(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    int next_root = 0;
    auto push = [&](int v) {
        visited[static_cast<std::size_t>(v)] = true;
        order.push_back(v);
        stack.push_back(v);
    };
    if (start) push(*start);
    while (static_cast<int>(order.size()) < n || !stack.empty()) {
        if (stack.empty()) {
            while (next_root < n && visited[static_cast<std::size_t>(next_root)]) ++next_root;
            if (next_root >= n) break;
            push(next_root);
        }
        int v = stack.back();
        const auto& nb = g.neighbors(v);
        std::size_t& idx = next_edge[static_cast<std::size_t>(v)];
        while (idx < nb.size() && visited[static_cast<std::size_t>(nb[idx])]) ++idx;
        if (idx == nb.size()) {
            stack.pop_back();
        } else {
            push(nb[idx++]);
        }
    }
    return order;
}

inline std::vector<int> generic_order(const UndirectedGraph& g, std::optional<int> start) {
    const int n = g.n();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::set<int> eligible;
    int next_root = 0;
    auto visit = [&](int v) {
        visited[static_cast<std::size_t>(v)] = true;
        eligible.erase(v);
        order.push_back(v);
        for (int u : g.neighbors(v))
            if (!visited[static_cast<std::size_t>(u)]) eligible.insert(u);
    };
    if (start) visit(*start);
    while (static_cast<int>(order.size()) < n) {
        if (eligible.empty()) {
            while (next_root < n && visited[static_cast<std::size_t>(next_root)]) ++next_root;
            visit(next_root);
        } else {
            visit(*eligible.begin());
        }
    }
    return order;
}

inline std::vector<int> mns_order(const UndirectedGraph& g, std::optional<int> start) {
    const int n = g.n();
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
    std::vector<std::vector<std::uint64_t>> label(static_cast<std::size_t>(n),
                                                  std::vector<std::uint64_t>(words, 0));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    auto subset = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        for (std::size_t w = 0; w < words; ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    };
    auto visit = [&](int v) {
        visited[static_cast<std::size_t>(v)] = true;
        order.push_back(v);
        for (int u : g.neighbors(v))
            if (!visited[static_cast<std::size_t>(u)])
                label[static_cast<std::size_t>(u)][static_cast<std::size_t>(v / 64)] |=
                    (std::uint64_t{1} << (v % 64));
    };
    if (start) visit(*start);
    while (static_cast<int>(order.size()) < n) {
        int chosen = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            bool maximal = true;
            for (int u = 0; u < n && maximal; ++u) {
                if (u == v || visited[static_cast<std::size_t>(u)]) continue;
                if (label[static_cast<std::size_t>(v)] != label[static_cast<std::size_t>(u)] &&
                    subset(label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(u)]))
                    maximal = false;
            }
            if (maximal) { chosen = v; break; }
        }
        visit(chosen);
    }
    return order;
}

inline std::vector<int> mds_order(const UndirectedGraph& g, std::optional<int> start,
                                  std::vector<int>& degree_at_choice) {
    const int n = g.n();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    degree_at_choice.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> rem_deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rem_deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<bool> eligible(static_cast<std::size_t>(n), false);
    auto visit = [&](int v) {
        visited[static_cast<std::size_t>(v)] = true;
        degree_at_choice[static_cast<std::size_t>(v)] = rem_deg[static_cast<std::size_t>(v)];
        order.push_back(v);
        for (int u : g.neighbors(v)) {
            --rem_deg[static_cast<std::size_t>(u)];
            if (!visited[static_cast<std::size_t>(u)]) eligible[static_cast<std::size_t>(u)] = true;
        }
    };
    if (start) {
        visit(*start);
    } else if (n > 0) {
        int best = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(best)) best = v;
        visit(best);
    }
    while (static_cast<int>(order.size()) < n) {
        int chosen = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<std::size_t>(v)] || !eligible[static_cast<std::size_t>(v)]) continue;
            if (chosen < 0 || rem_deg[static_cast<std::size_t>(v)] > rem_deg[static_cast<std::size_t>(chosen)])
                chosen = v;
        }
        if (chosen < 0) {
            for (int v = 0; v < n; ++v)
                if (!visited[static_cast<std::size_t>(v)]) { chosen = v; break; }
        }
        visit(chosen);
    }
    return order;
}

inline std::vector<TraceEntry> build_trace(const UndirectedGraph& g, const VertexOrdering& ord,
                                           const std::vector<int>* degree_at_choice) {
    std::vector<TraceEntry> trace(static_cast<std::size_t>(ord.size()));
    for (int pos = 0; pos < ord.size(); ++pos) {
        int v = ord.vertex_at(pos);
        TraceEntry& e = trace[static_cast<std::size_t>(pos)];
        e.vertex = v;
        for (int u : g.neighbors(v))
            if (ord.position_of(u) < pos) e.label.push_back(ord.position_of(u));
        std::sort(e.label.begin(), e.label.end());
        e.degree = degree_at_choice ? (*degree_at_choice)[static_cast<std::size_t>(v)] : g.degree(v);
    }
    return trace;
}

} // namespace detail

inline SearchResult run_search(const UndirectedGraph& g, const SearchKind& spec) {
    detail::check_start(g, spec.start);
    std::vector<int> order;
    std::optional<std::vector<int>> layers;
    std::vector<int> mds_degrees;
    const std::vector<int>* deg_ptr = nullptr;

    switch (spec.kind) {
    case SearchAlgo::BFS: {
        std::vector<int> lay;
        order = detail::bfs_order(g, spec.start, lay);
        layers = std::move(lay);
        break;
    }
    case SearchAlgo::DFS:
        order = detail::dfs_order(g, spec.start);
        break;
    case SearchAlgo::Generic:
        order = detail::generic_order(g, spec.start);
        break;
    case SearchAlgo::LexBFS: {
        std::vector<int> key(static_cast<std::size_t>(g.n()));
        std::iota(key.begin(), key.end(), 0);
        order = detail::lexbfs_order(g, key, spec.start);
        break;
    }
    case SearchAlgo::LexBFSPlus: {
        if (!spec.prior || spec.prior->size() != g.n())
            throw std::invalid_argument("lexbfs+ requires a prior ordering covering all vertices");
        // Latest in the prior ordering = smallest key.
        std::vector<int> key(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v)
            key[static_cast<std::size_t>(v)] = g.n() - 1 - spec.prior->position_of(v);
        order = detail::lexbfs_order(g, key, spec.start);
        break;
    }
    case SearchAlgo::MNS:
        order = detail::mns_order(g, spec.start);
        break;
    case SearchAlgo::MDS:
        order = detail::mds_order(g, spec.start, mds_degrees);
        deg_ptr = &mds_degrees;
        break;
    }

    SearchResult result;
    result.ordering = VertexOrdering(std::move(order));
    result.layers = std::move(layers);
    result.trace = detail::build_trace(g, result.ordering, deg_ptr);
    return result;
}

// Multi-sweep search.  Sweep 1 is a plain run; later sweeps are LexBFS+ seeded
// with the previous ordering, except that BFS re-runs from the previous end
// vertex.
inline SearchResult multi_sweep(const UndirectedGraph& g, const SearchKind& spec, int sweeps) {
    if (sweeps < 1) throw std::invalid_argument("sweep count must be >= 1");
    if (g.n() == 0) return run_search(g, spec);
    SearchResult current = run_search(g, spec);
    for (int s = 2; s <= sweeps; ++s) {
        if (spec.kind == SearchAlgo::BFS) {
            SearchKind next{SearchAlgo::BFS, current.ordering.vertex_at(g.n() - 1), std::nullopt};
            current = run_search(g, next);
        } else {
            SearchKind next{SearchAlgo::LexBFSPlus, std::nullopt, current.ordering};
            current = run_search(g, next);
        }
    }
    return current;
}

} // namespace ordpat

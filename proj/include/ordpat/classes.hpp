#pragma once

// Definition-based membership tests, independent of vertex orderings: cycle
// checks, colorings, partition searches, degree profiles, forbidden-subgraph
// scans, orientation forcing.  These are the second route that recognizers and
// the ordering oracle are validated against.

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ordpat/class_id.hpp"
#include "ordpat/enumeration.hpp"
#include "ordpat/graph.hpp"

namespace ordpat {

inline bool is_edgeless(const UndirectedGraph& g) { return g.m() == 0; }

inline bool is_complete(const UndirectedGraph& g) {
    return g.m() == static_cast<std::int64_t>(g.n()) * (g.n() - 1) / 2;
}

inline bool is_acyclic(const UndirectedGraph& g) {
    // A forest has exactly n - #components edges.
    std::int64_t comp = static_cast<std::int64_t>(g.components().size());
    return g.m() == g.n() - comp;
}

inline bool is_triangle_free(const UndirectedGraph& g) {
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w != v && g.has_edge(v, w)) return false;
    return true;
}

inline bool is_bipartite(const UndirectedGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Two-coloring; requires bipartite.  Component roots (least id) get color 0.
inline std::vector<int> bipartition_colors(const UndirectedGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    throw std::domain_error("graph is not bipartite");
                }
            }
        }
    }
    return color;
}

inline bool is_clique_set(const UndirectedGraph& g, const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (!g.has_edge(verts[a], verts[b])) return false;
    return true;
}

inline bool is_independent_set(const UndirectedGraph& g, const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) return false;
    return true;
}

namespace detail {
inline constexpr int kSubsetScanLimit = 16;

inline void check_desk_bound(const UndirectedGraph& g, int bound, const char* what) {
    if (g.n() > bound)
        throw std::domain_error(std::string(what) + " check refuses " + std::to_string(g.n()) +
                                " vertices (bound " + std::to_string(bound) + ")");
}

// Does `verts` induce a single cycle covering all of them?
inline bool induces_cycle(const UndirectedGraph& g, const std::vector<int>& verts) {
    if (verts.size() < 3) return false;
    int edges = 0;
    for (std::size_t a = 0; a < verts.size(); ++a) {
        int deg = 0;
        for (std::size_t b = 0; b < verts.size(); ++b)
            if (a != b && g.has_edge(verts[a], verts[b])) ++deg;
        if (deg != 2) return false;
        edges += deg;
    }
    if (edges != 2 * static_cast<int>(verts.size())) return false;
    // Degree-2 everywhere with |E| = |V| means a disjoint union of cycles;
    // connectivity makes it a single one.
    UndirectedGraph sub = g.induced(verts);
    return sub.components().size() == 1;
}
} // namespace detail

// No induced cycle of length > 3; subset scan, desk scale only.
inline bool is_chordal(const UndirectedGraph& g) {
    detail::check_desk_bound(g, detail::kSubsetScanLimit, "chordal");
    const int n = g.n();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 4) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) verts.push_back(v);
        if (detail::induces_cycle(g, verts)) return false;
    }
    return true;
}

// Asteroidal triple: three pairwise non-adjacent vertices such that every two
// are joined by a path avoiding the closed neighborhood of the third.
inline bool has_asteroidal_triple(const UndirectedGraph& g) {
    const int n = g.n();
    // reach[w][v]: vertices reachable from v in G minus N[w].
    std::vector<std::vector<std::vector<bool>>> reach(
        static_cast<std::size_t>(n),
        std::vector<std::vector<bool>>(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false)));
    for (int w = 0; w < n; ++w) {
        std::vector<bool> banned(static_cast<std::size_t>(n), false);
        banned[static_cast<std::size_t>(w)] = true;
        for (int u : g.neighbors(w)) banned[static_cast<std::size_t>(u)] = true;
        for (int v = 0; v < n; ++v) {
            if (banned[static_cast<std::size_t>(v)]) continue;
            auto& r = reach[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
            if (r[static_cast<std::size_t>(v)]) continue;
            std::vector<int> stack{v};
            r[static_cast<std::size_t>(v)] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : g.neighbors(x)) {
                    if (!banned[static_cast<std::size_t>(y)] && !r[static_cast<std::size_t>(y)]) {
                        r[static_cast<std::size_t>(y)] = true;
                        stack.push_back(y);
                    }
                }
            }
            // Share the computed set among all vertices of that region.
            for (int x = 0; x < n; ++x)
                if (r[static_cast<std::size_t>(x)])
                    reach[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)] = r;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                bool ab = reach[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)]
                               [static_cast<std::size_t>(b)];
                bool ac = reach[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]
                               [static_cast<std::size_t>(c)];
                bool bc = reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                               [static_cast<std::size_t>(c)];
                if (ab && ac && bc) return true;
            }
        }
    return false;
}

// Orientation forcing: comparability iff no forcing class contains an edge in
// both directions.
inline bool is_comparability(const UndirectedGraph& g) {
    const int n = g.n();
    auto edges = g.edges();
    // Arc ids: edge e gets arcs 2e (u->v) and 2e+1 (v->u).
    std::vector<int> parent(edges.size() * 2);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

    // arc id leaving v toward u, for each edge.
    std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        out[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(2 * e));
        out[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(2 * e + 1));
    }
    for (int v = 0; v < n; ++v) {
        const auto& arcs = out[static_cast<std::size_t>(v)];
        for (std::size_t a = 0; a < arcs.size(); ++a)
            for (std::size_t b = a + 1; b < arcs.size(); ++b) {
                if (!g.has_edge(arcs[a].first, arcs[b].first)) {
                    // Arcs sharing source v to non-adjacent heads force each other,
                    // and so do the reversed arcs sharing target v.
                    unite(arcs[a].second, arcs[b].second);
                    unite(arcs[a].second ^ 1, arcs[b].second ^ 1);
                }
            }
    }
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (find(static_cast<int>(2 * e)) == find(static_cast<int>(2 * e + 1))) return false;
    return true;
}

// Iterated removal of isolated or dominating vertices.
inline bool is_threshold(const UndirectedGraph& g) {
    std::vector<bool> removed(static_cast<std::size_t>(g.n()), false);
    std::vector<int> deg(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int remaining = g.n();
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < g.n() && pick < 0; ++v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            if (deg[static_cast<std::size_t>(v)] == 0 ||
                deg[static_cast<std::size_t>(v)] == remaining - 1)
                pick = v;
        }
        if (pick < 0) return false;
        removed[static_cast<std::size_t>(pick)] = true;
        --remaining;
        for (int u : g.neighbors(pick))
            if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    }
    return true;
}

inline bool is_split_graph(const UndirectedGraph& g) {
    // Degree profile: top-m vertices by degree form the clique side iff the
    // counting identity holds; verify structurally.
    const int n = g.n();
    std::vector<int> by_deg(static_cast<std::size_t>(n));
    std::iota(by_deg.begin(), by_deg.end(), 0);
    std::sort(by_deg.begin(), by_deg.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int m_star = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(by_deg[static_cast<std::size_t>(i)]) >= i) m_star = i + 1;
    std::vector<int> clique(by_deg.begin(), by_deg.begin() + m_star);
    std::vector<int> indep(by_deg.begin() + m_star, by_deg.end());
    return is_clique_set(g, clique) && is_independent_set(g, indep);
}

inline bool has_induced_claw(const UndirectedGraph& g) {
    for (int c = 0; c < g.n(); ++c) {
        const auto& nb = g.neighbors(c);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (std::size_t d = b + 1; d < nb.size(); ++d)
                    if (!g.has_edge(nb[a], nb[d]) && !g.has_edge(nb[b], nb[d])) return true;
            }
    }
    return false;
}

namespace detail {
// Scan all 4-subsets for an induced subgraph with the given unordered shape.
template <typename Pred>
inline bool scan_four_subsets(const UndirectedGraph& g, Pred&& pred) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (pred(a, b, c, d)) return true;
    return false;
}

inline int induced_edge_count4(const UndirectedGraph& g, int a, int b, int c, int d) {
    int m = 0;
    int vs[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.has_edge(vs[i], vs[j])) ++m;
    return m;
}

inline bool degrees_are(const UndirectedGraph& g, int a, int b, int c, int d,
                        std::array<int, 4> sorted_degrees) {
    int vs[4] = {a, b, c, d};
    std::array<int, 4> deg{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && g.has_edge(vs[i], vs[j])) ++deg[static_cast<std::size_t>(i)];
    std::sort(deg.begin(), deg.end());
    return deg == sorted_degrees;
}
} // namespace detail

inline bool has_induced_p4(const UndirectedGraph& g) {
    return detail::scan_four_subsets(g, [&](int a, int b, int c, int d) {
        return detail::induced_edge_count4(g, a, b, c, d) == 3 &&
               detail::degrees_are(g, a, b, c, d, {1, 1, 2, 2});
    });
}

inline bool has_induced_c4(const UndirectedGraph& g) {
    return detail::scan_four_subsets(g, [&](int a, int b, int c, int d) {
        return detail::induced_edge_count4(g, a, b, c, d) == 4 &&
               detail::degrees_are(g, a, b, c, d, {2, 2, 2, 2});
    });
}

inline bool has_induced_2k2(const UndirectedGraph& g) {
    return detail::scan_four_subsets(g, [&](int a, int b, int c, int d) {
        return detail::induced_edge_count4(g, a, b, c, d) == 2 &&
               detail::degrees_are(g, a, b, c, d, {1, 1, 1, 1});
    });
}

// Caterpillar component test: pruning the leaves of a tree must leave a path
// (or nothing).
inline bool component_is_caterpillar(const UndirectedGraph& g, const std::vector<int>& comp) {
    if (comp.size() <= 2) return true;
    std::vector<bool> in_comp(static_cast<std::size_t>(g.n()), false);
    for (int v : comp) in_comp[static_cast<std::size_t>(v)] = true;
    std::vector<bool> kept = in_comp;
    for (int v : comp) {
        int deg = 0;
        for (int u : g.neighbors(v))
            if (in_comp[static_cast<std::size_t>(u)]) ++deg;
        if (deg <= 1) kept[static_cast<std::size_t>(v)] = false;
    }
    for (int v : comp) {
        if (!kept[static_cast<std::size_t>(v)]) continue;
        int deg = 0;
        for (int u : g.neighbors(v))
            if (kept[static_cast<std::size_t>(u)]) ++deg;
        if (deg > 2) return false;
    }
    // Remaining degrees <= 2 inside a tree: spine is a path automatically.
    return true;
}

// ---------------------------------------------------------------------------
// Whole-graph predicates for the catalog classes; each follows the class
// definition and already accounts for isolated vertices where the definition
// does.

inline bool is_star(const UndirectedGraph& g) {
    if (g.m() == 0) return true;
    auto [u, v] = g.edges().front();
    for (int c : {u, v}) {
        bool ok = true;
        for (auto [a, b] : g.edges())
            if (a != c && b != c) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

inline bool is_star_forest(const UndirectedGraph& g) {
    for (const auto& comp : g.components())
        if (!is_star(g.induced(comp))) return false;
    return true;
}

inline bool is_two_star(const UndirectedGraph& g) {
    if (g.m() == 0) return true;
    if (!is_acyclic(g)) return false;
    int nontrivial = 0;
    for (const auto& comp : g.components())
        if (comp.size() > 1) ++nontrivial;
    if (nontrivial != 1) return false;
    for (auto [x, y] : g.edges()) {
        bool dominating = true;
        for (auto [a, b] : g.edges())
            if (a != x && a != y && b != x && b != y) { dominating = false; break; }
        if (dominating) return true;
    }
    return false;
}

inline bool is_one_split(const UndirectedGraph& g) {
    const std::int64_t full = static_cast<std::int64_t>(g.n()) * (g.n() - 1) / 2;
    return g.m() <= 1 || g.m() == full || g.m() == full - 1;
}

inline bool is_augmented_clique(const UndirectedGraph& g) {
    if (g.n() == 0) return true;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> core;
        for (int v = 0; v < g.n(); ++v)
            if (v != s && g.degree(v) > 0) core.push_back(v);
        if (is_clique_set(g, core)) return true;
    }
    return false;
}

inline bool is_clique_class(const UndirectedGraph& g) {
    std::vector<int> core;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) core.push_back(v);
    return is_clique_set(g, core);
}

inline bool is_cluster(const UndirectedGraph& g) { // disjoint union of cliques
    for (const auto& comp : g.components())
        if (!is_clique_set(g, comp)) return false;
    return true;
}

inline bool is_complete_bipartite_class(const UndirectedGraph& g) {
    std::vector<int> core;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) core.push_back(v);
    if (core.empty()) return true;
    UndirectedGraph sub = g.induced(core);
    if (sub.components().size() != 1 || !is_bipartite(sub)) return false;
    std::vector<int> color = bipartition_colors(sub);
    for (int u = 0; u < sub.n(); ++u)
        for (int v = u + 1; v < sub.n(); ++v)
            if (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)] &&
                !sub.has_edge(u, v))
                return false;
    return true;
}

inline bool is_bipartite_chain(const UndirectedGraph& g) {
    return is_bipartite(g) && !has_induced_2k2(g);
}

inline bool is_trivially_perfect(const UndirectedGraph& g) {
    return !has_induced_p4(g) && !has_induced_c4(g);
}

inline bool is_interval(const UndirectedGraph& g) {
    return is_chordal(g) && !has_asteroidal_triple(g);
}

inline bool is_proper_interval(const UndirectedGraph& g) {
    return is_interval(g) && !has_induced_claw(g);
}

inline bool is_caterpillar(const UndirectedGraph& g) {
    if (!is_acyclic(g)) return false;
    for (const auto& comp : g.components())
        if (!component_is_caterpillar(g, comp)) return false;
    return true;
}

inline bool is_linear_forest(const UndirectedGraph& g) {
    if (!is_acyclic(g)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

inline bool is_permutation_graph(const UndirectedGraph& g) {
    return is_comparability(g) && is_comparability(g.complement());
}

// ---------------------------------------------------------------------------

// First-principles membership for a class; `complemented` tests the complement
// graph.  Throws on graphs too large for a subset-scan-based check.
inline bool definition_check(const UndirectedGraph& g, ClassId c, bool complemented = false) {
    if (complemented) return definition_check(g.complement(), c, false);
    switch (c) {
    case ClassId::Forest: return is_acyclic(g);
    case ClassId::LinearForest: return is_linear_forest(g);
    case ClassId::Star: return is_star(g);
    case ClassId::Interval: return is_interval(g);
    case ClassId::Split: return is_split_graph(g);
    case ClassId::Bipartite: return is_bipartite(g);
    case ClassId::Chordal: return is_chordal(g);
    case ClassId::Comparability: return is_comparability(g);
    case ClassId::TriangleFree: return is_triangle_free(g);
    case ClassId::Permutation: return is_permutation_graph(g);
    case ClassId::Threshold: return is_threshold(g);
    case ClassId::ProperInterval: return is_proper_interval(g);
    case ClassId::Caterpillar: return is_caterpillar(g);
    case ClassId::TriviallyPerfect: return is_trivially_perfect(g);
    case ClassId::BipartiteChain: return is_bipartite_chain(g);
    case ClassId::TwoStar: return is_two_star(g);
    case ClassId::OneSplit: return is_one_split(g);
    case ClassId::AugmentedClique: return is_augmented_clique(g);
    case ClassId::BipartitePermutation: return is_bipartite(g) && is_permutation_graph(g);
    case ClassId::TriangleFreeCoChordal:
        return is_triangle_free(g) && is_chordal(g.complement());
    case ClassId::Clique: return is_clique_class(g);
    default: return is_complete_bipartite_class(g);
    }
}

// Membership under a catalog label (class + connectivity convention).
inline bool definition_check_label(const UndirectedGraph& g_in, const ClassLabel& label) {
    if (label.trivial)
        throw std::domain_error("trivial catalog labels have no class predicate");
    UndirectedGraph g = label.complemented ? g_in.complement() : g_in;
    switch (label.connectivity) {
    case Connectivity::Unrestricted:
        if (label.class_id == ClassId::Star) return is_star_forest(g);
        if (label.class_id == ClassId::Clique) return is_cluster(g);
        return definition_check(g, label.class_id);
    case Connectivity::ForbidsIsolated:
        if (is_edgeless(g)) return true;
        return g.isolated_vertices().empty() && definition_check(g, label.class_id);
    case Connectivity::IsolatedOnlyIfSmallCore: {
        if (!is_clique_class(g)) return false;
        int core = 0;
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) > 0) ++core;
        return core == g.n() || core < 3;
    }
    default:
        return definition_check(g, label.class_id);
    }
}

} // namespace ordpat

#pragma once

// Certifying recognition: each recognizer builds candidate orderings from
// searches or structural constructions, verifies them with the generic
// checker, and answers Member only on verified success.  A wrong candidate
// strategy can therefore cause a false negative but never a false positive;
// completeness is established by the desk-scale agreement suites.

#include <functional>
#include <optional>
#include <vector>

#include "ordpat/checker.hpp"
#include "ordpat/class_id.hpp"
#include "ordpat/classes.hpp"
#include "ordpat/enumeration.hpp"
#include "ordpat/search.hpp"

namespace ordpat {

struct RecognitionResult {
    ClassId class_id = ClassId::Forest;
    bool complemented = false;
    bool member = false;
    FamilyBits family_used;
    std::optional<VertexOrdering> certificate;   // set when member
    std::optional<OccurrenceWitness> refutation; // violation on the lead candidate
    std::optional<VertexOrdering> refuted_ordering; // ordering the witness refers to
};

namespace detail {

inline std::vector<int> map_back(const std::vector<int>& local, const std::vector<int>& comp) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(comp[static_cast<std::size_t>(v)]);
    return out;
}

template <typename Fn>
inline std::optional<VertexOrdering> per_component(const UndirectedGraph& g, Fn&& local_order) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.n()));
    for (const auto& comp : g.components()) {
        auto local = local_order(g.induced(comp));
        if (!local) return std::nullopt;
        for (int v : map_back(*local, comp)) order.push_back(v);
    }
    return VertexOrdering(order);
}

inline std::vector<int> lexbfs(const UndirectedGraph& g, std::optional<int> start = std::nullopt) {
    return run_search(g, {SearchAlgo::LexBFS, start, std::nullopt}).ordering.order();
}

inline VertexOrdering nsweep(const UndirectedGraph& g) {
    return multi_sweep(g, {SearchAlgo::LexBFS, std::nullopt, std::nullopt}, std::max(1, g.n()))
        .ordering;
}

inline VertexOrdering double_bfs_concat(const UndirectedGraph& g) {
    auto ord = per_component(g, [](const UndirectedGraph& c) -> std::optional<std::vector<int>> {
        auto first = run_search(c, {SearchAlgo::BFS, std::nullopt, std::nullopt}).ordering;
        int end = first.vertex_at(c.n() - 1);
        return run_search(c, {SearchAlgo::BFS, end, std::nullopt}).ordering.order();
    });
    return *ord;
}

inline void append_sorted(std::vector<int>& out, std::vector<int> part) {
    std::sort(part.begin(), part.end());
    out.insert(out.end(), part.begin(), part.end());
}

// Quasi-threshold construction ordering: universal vertices of each component
// go last, recursively.  Fails when a connected piece has no universal vertex.
inline bool tp_construct(const UndirectedGraph& g, const std::vector<int>& comp,
                         std::vector<int>& out) {
    if (comp.size() == 1) {
        out.push_back(comp[0]);
        return true;
    }
    UndirectedGraph sub = g.induced(comp);
    std::vector<int> universal, rest_local;
    for (int v = 0; v < sub.n(); ++v)
        (sub.degree(v) == sub.n() - 1 ? universal : rest_local).push_back(v);
    if (universal.empty()) return false;
    UndirectedGraph inner = sub.induced(rest_local);
    for (const auto& inner_comp : inner.components()) {
        std::vector<int> orig;
        for (int v : inner_comp)
            orig.push_back(comp[static_cast<std::size_t>(rest_local[static_cast<std::size_t>(v)])]);
        if (!tp_construct(g, orig, out)) return false;
    }
    for (int v : universal) out.push_back(comp[static_cast<std::size_t>(v)]);
    return true;
}

// Repeatedly take a vertex whose remaining neighbors form a clique and whose
// remaining non-neighbors form an independent set.
inline std::optional<VertexOrdering> peel_simplicial_both(const UndirectedGraph& g) {
    const int n = g.n();
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            std::vector<int> nbrs, rest;
            for (int u = 0; u < n; ++u) {
                if (u == v || gone[static_cast<std::size_t>(u)]) continue;
                (g.has_edge(v, u) ? nbrs : rest).push_back(u);
            }
            if (is_clique_set(g, nbrs) && is_independent_set(g, rest)) pick = v;
        }
        if (pick < 0) return std::nullopt;
        gone[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
    }
    return VertexOrdering(order);
}

struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
    bool valid = false;
};

inline SplitPartition split_partition(const UndirectedGraph& g) {
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
    SplitPartition part;
    part.clique.assign(by_deg.begin(), by_deg.begin() + m_star);
    part.independent.assign(by_deg.begin() + m_star, by_deg.end());
    part.valid = is_clique_set(g, part.clique) && is_independent_set(g, part.independent);
    return part;
}

inline std::optional<VertexOrdering> perm_topo(const UndirectedGraph& g) {
    const int n = g.n();
    VertexOrdering comp_order = nsweep(g.complement()); // transitive on edges if comparability
    VertexOrdering cocomp_order = nsweep(g);            // transitive on non-edges
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    auto before = [&](int u, int v) {
        if (g.has_edge(u, v)) return comp_order.position_of(u) < comp_order.position_of(v);
        return cocomp_order.position_of(u) < cocomp_order.position_of(v);
    };
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && before(u, v)) ++indeg[static_cast<std::size_t>(v)];
    std::set<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.insert(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int u = 0; u < n; ++u)
            if (u != v && before(v, u) && --indeg[static_cast<std::size_t>(u)] == 0) ready.insert(u);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return VertexOrdering(order);
}

inline std::vector<int> sorted_by_degree(const UndirectedGraph& g, std::vector<int> verts,
                                         bool ascending) {
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return ascending ? g.degree(a) < g.degree(b) : g.degree(a) > g.degree(b);
        return a < b;
    });
    return verts;
}

inline std::vector<VertexOrdering> class_candidates(const UndirectedGraph& g, ClassId c);

inline void push_order(std::vector<VertexOrdering>& out, std::vector<int> order) {
    out.emplace_back(std::move(order));
}

inline std::vector<VertexOrdering> star_candidates(const UndirectedGraph& g) {
    std::vector<VertexOrdering> out;
    if (g.m() == 0) {
        out.push_back(VertexOrdering::identity(g.n()));
        return out;
    }
    auto [eu, ev] = g.edges().front();
    for (int c : {eu, ev}) {
        bool covers = true;
        for (auto [a, b] : g.edges())
            if (a != c && b != c) { covers = false; break; }
        if (!covers) continue;
        std::vector<int> leaves = g.neighbors(c), iso = g.isolated_vertices();
        std::vector<int> v1, v2, v3;
        v1 = iso; append_sorted(v1, leaves); v1.push_back(c);
        v2 = leaves; std::sort(v2.begin(), v2.end());
        v2.insert(v2.end(), iso.begin(), iso.end()); v2.push_back(c);
        v3 = leaves; std::sort(v3.begin(), v3.end()); v3.push_back(c);
        v3.insert(v3.end(), iso.begin(), iso.end());
        push_order(out, v1);
        push_order(out, v2);
        push_order(out, v3);
        break;
    }
    // Star forest: leaves then center, component after component.
    auto forest = per_component(g, [](const UndirectedGraph& comp) -> std::optional<std::vector<int>> {
        if (comp.m() == 0) return VertexOrdering::identity(comp.n()).order();
        int center = 0;
        for (int v = 1; v < comp.n(); ++v)
            if (comp.degree(v) > comp.degree(center)) center = v;
        std::vector<int> order;
        for (int v = 0; v < comp.n(); ++v)
            if (v != center) order.push_back(v);
        order.push_back(center);
        return order;
    });
    if (forest) out.push_back(*forest);
    return out;
}

inline std::vector<VertexOrdering> clique_candidates(const UndirectedGraph& g) {
    std::vector<VertexOrdering> out;
    std::vector<int> iso = g.isolated_vertices(), core;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) core.push_back(v);
    std::vector<int> v1 = iso;
    v1.insert(v1.end(), core.begin(), core.end());
    push_order(out, v1);
    if (core.size() == 2) {
        std::vector<int> v2{core[0]};
        v2.insert(v2.end(), iso.begin(), iso.end());
        v2.push_back(core[1]);
        push_order(out, v2);
    }
    auto cluster = per_component(g, [](const UndirectedGraph& comp) {
        return std::optional<std::vector<int>>(VertexOrdering::identity(comp.n()).order());
    });
    if (cluster) out.push_back(*cluster);
    return out;
}

inline std::vector<VertexOrdering> complete_bipartite_candidates(const UndirectedGraph& g) {
    std::vector<VertexOrdering> out;
    if (!is_bipartite(g)) return out;
    std::vector<int> color = bipartition_colors(g);
    std::vector<int> iso = g.isolated_vertices(), a, b;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0) continue;
        (color[static_cast<std::size_t>(v)] == 0 ? a : b).push_back(v);
    }
    for (int swap = 0; swap < 2; ++swap) {
        const auto& s1 = swap ? b : a;
        const auto& s2 = swap ? a : b;
        std::vector<int> v1 = iso;
        v1.insert(v1.end(), s1.begin(), s1.end());
        v1.insert(v1.end(), s2.begin(), s2.end());
        push_order(out, v1);
        std::vector<int> v2(s1);
        v2.insert(v2.end(), iso.begin(), iso.end());
        v2.insert(v2.end(), s2.begin(), s2.end());
        push_order(out, v2);
    }
    return out;
}

inline std::vector<VertexOrdering> bipartite_chain_candidates(const UndirectedGraph& g) {
    std::vector<VertexOrdering> out;
    if (!is_bipartite(g)) return out;
    std::vector<int> color = bipartition_colors(g);
    for (int swap = 0; swap < 2; ++swap) {
        std::vector<int> a, b;
        for (int v = 0; v < g.n(); ++v)
            ((color[static_cast<std::size_t>(v)] == 0) != (swap == 1) ? a : b).push_back(v);
        // Shrinking neighborhoods first on one side, growing on the other;
        // isolated vertices land at the end of the first side.
        std::vector<int> order = sorted_by_degree(g, a, false);
        auto tail = sorted_by_degree(g, b, true);
        order.insert(order.end(), tail.begin(), tail.end());
        push_order(out, order);
    }
    return out;
}

inline std::vector<VertexOrdering> one_split_candidates(const UndirectedGraph& g) {
    std::vector<VertexOrdering> out;
    const int n = g.n();
    std::optional<std::pair<int, int>> special; // non-adjacent pair to stretch apart
    if (g.m() == 1) {
        special = g.edges().front();
    } else {
        for (int u = 0; u < n && !special; ++u)
            for (int v = u + 1; v < n && !special; ++v)
                if (!g.has_edge(u, v)) special = {u, v};
    }
    if (!special) {
        out.push_back(VertexOrdering::identity(n));
        return out;
    }
    std::vector<int> order{special->first};
    for (int v = 0; v < n; ++v)
        if (v != special->first && v != special->second) order.push_back(v);
    order.push_back(special->second);
    push_order(out, order);
    out.push_back(VertexOrdering::identity(n));
    return out;
}

inline std::vector<VertexOrdering> augmented_clique_candidates(const UndirectedGraph& g) {
    std::vector<VertexOrdering> out;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> core, iso;
        for (int v = 0; v < g.n(); ++v) {
            if (v == s) continue;
            (g.degree(v) > 0 ? core : iso).push_back(v);
        }
        if (!is_clique_set(g, core)) continue;
        std::vector<int> order = iso;
        order.push_back(s);
        std::vector<int> adj, nonadj;
        for (int v : core) (g.has_edge(s, v) ? adj : nonadj).push_back(v);
        order.insert(order.end(), adj.begin(), adj.end());
        order.insert(order.end(), nonadj.begin(), nonadj.end());
        push_order(out, order);
        break;
    }
    return out;
}

inline std::vector<VertexOrdering> class_candidates(const UndirectedGraph& g, ClassId c) {
    std::vector<VertexOrdering> out;
    switch (c) {
    case ClassId::Chordal:
        push_order(out, lexbfs(g));
        break;
    case ClassId::Interval:
        out.push_back(nsweep(g));
        break;
    case ClassId::ProperInterval:
        out.push_back(
            multi_sweep(g, {SearchAlgo::LexBFS, std::nullopt, std::nullopt}, 3).ordering);
        break;
    case ClassId::TriviallyPerfect: {
        auto search = per_component(g, [](const UndirectedGraph& comp) -> std::optional<std::vector<int>> {
            int start = 0;
            for (int v = 1; v < comp.n(); ++v)
                if (comp.degree(v) > comp.degree(start)) start = v;
            return lexbfs(comp, start);
        });
        if (search) out.push_back(search->reversed());
        std::vector<int> order;
        bool ok = true;
        for (const auto& comp : g.components())
            if (!tp_construct(g, comp, order)) { ok = false; break; }
        if (ok && !order.empty()) push_order(out, order);
        else if (ok) out.push_back(VertexOrdering::identity(0));
        break;
    }
    case ClassId::LinearForest:
    case ClassId::Caterpillar:
        out.push_back(double_bfs_concat(g));
        break;
    case ClassId::Forest:
        push_order(out, run_search(g, {SearchAlgo::Generic, std::nullopt, std::nullopt})
                            .ordering.order());
        break;
    case ClassId::Star:
        return star_candidates(g);
    case ClassId::TwoStar: {
        if (g.m() == 0) {
            out.push_back(VertexOrdering::identity(g.n()));
            break;
        }
        for (auto [x, y] : g.edges()) {
            bool dominating = true;
            for (auto [a, b] : g.edges())
                if (a != x && a != y && b != x && b != y) { dominating = false; break; }
            if (!dominating) continue;
            std::vector<int> order = g.isolated_vertices();
            std::vector<int> xs, ys;
            for (int v : g.neighbors(x))
                if (v != y) xs.push_back(v);
            for (int v : g.neighbors(y))
                if (v != x && !g.has_edge(x, v)) ys.push_back(v);
            append_sorted(order, xs);
            append_sorted(order, ys);
            order.push_back(x);
            order.push_back(y);
            push_order(out, order);
            break;
        }
        break;
    }
    case ClassId::Bipartite: {
        auto ord = per_component(g, [](const UndirectedGraph& comp) -> std::optional<std::vector<int>> {
            auto res = run_search(comp, {SearchAlgo::BFS, std::nullopt, std::nullopt});
            std::vector<int> evens, odds;
            for (int v : res.ordering.order())
                ((*res.layers)[static_cast<std::size_t>(v)] % 2 == 0 ? evens : odds).push_back(v);
            evens.insert(evens.end(), odds.begin(), odds.end());
            return evens;
        });
        if (ord) out.push_back(*ord);
        break;
    }
    case ClassId::Split: {
        auto part = split_partition(g);
        std::vector<int> order = g.isolated_vertices();
        for (int v : part.independent)
            if (g.degree(v) > 0) order.push_back(v);
        order.insert(order.end(), part.clique.begin(), part.clique.end());
        push_order(out, order);
        break;
    }
    case ClassId::Threshold: {
        if (auto peel = peel_simplicial_both(g)) out.push_back(*peel);
        auto part = split_partition(g);
        std::vector<int> order = sorted_by_degree(g, part.independent, true);
        auto clique = sorted_by_degree(g, part.clique, true);
        order.insert(order.end(), clique.begin(), clique.end());
        push_order(out, order);
        break;
    }
    case ClassId::TriangleFree:
        out.push_back(VertexOrdering::identity(g.n()));
        break;
    case ClassId::TriangleFreeCoChordal:
        push_order(out, lexbfs(g.complement()));
        break;
    case ClassId::Comparability:
        out.push_back(nsweep(g.complement()));
        break;
    case ClassId::Permutation:
        if (auto topo = perm_topo(g)) out.push_back(*topo);
        break;
    case ClassId::BipartitePermutation:
        if (auto topo = perm_topo(g)) out.push_back(*topo);
        out.push_back(nsweep(g));
        break;
    case ClassId::BipartiteChain:
        return bipartite_chain_candidates(g);
    case ClassId::OneSplit:
        return one_split_candidates(g);
    case ClassId::AugmentedClique:
        return augmented_clique_candidates(g);
    case ClassId::Clique:
        return clique_candidates(g);
    case ClassId::CompleteBipartite:
        return complete_bipartite_candidates(g);
    }
    return out;
}

inline std::vector<VertexOrdering> with_reverses(std::vector<VertexOrdering> cands, int n) {
    std::vector<VertexOrdering> out;
    for (const auto& c : cands) {
        bool dup = false;
        for (const auto& o : out)
            if (o == c) { dup = true; break; }
        if (!dup) out.push_back(c);
        VertexOrdering r = c.reversed();
        dup = false;
        for (const auto& o : out)
            if (o == r) { dup = true; break; }
        if (!dup) out.push_back(r);
    }
    if (out.empty()) out.push_back(VertexOrdering::identity(n));
    return out;
}

} // namespace detail

// Linear certificate check for the chordal pattern: along the ordering, the
// earlier neighbors of every vertex must form a clique.  Each vertex only
// compares against its latest earlier neighbor (parent); transitivity of the
// parent chain covers the rest.
inline std::optional<OccurrenceWitness> chordal_certificate_violation(const UndirectedGraph& g,
                                                                      const VertexOrdering& ord) {
    const int n = g.n();
    // pending[u]: (x, v) pairs requiring edge x-u, discovered at vertex v.
    std::vector<std::vector<std::pair<int, int>>> pending(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        int v = ord.vertex_at(pos);
        int parent = -1;
        for (int u : g.neighbors(v))
            if (ord.position_of(u) < pos && (parent < 0 || ord.position_of(u) > ord.position_of(parent)))
                parent = u;
        if (parent < 0) continue;
        for (int u : g.neighbors(v))
            if (u != parent && ord.position_of(u) < pos)
                pending[static_cast<std::size_t>(parent)].emplace_back(u, v);
    }
    std::vector<bool> mark(static_cast<std::size_t>(n), false);
    for (int u = 0; u < n; ++u) {
        if (pending[static_cast<std::size_t>(u)].empty()) continue;
        for (int w : g.neighbors(u)) mark[static_cast<std::size_t>(w)] = true;
        for (auto [x, v] : pending[static_cast<std::size_t>(u)]) {
            if (!mark[static_cast<std::size_t>(x)]) {
                std::vector<int> positions{ord.position_of(x), ord.position_of(u),
                                           ord.position_of(v)};
                std::sort(positions.begin(), positions.end());
                return OccurrenceWitness{catalog_pattern(4), positions};
            }
        }
        for (int w : g.neighbors(u)) mark[static_cast<std::size_t>(w)] = false;
    }
    return std::nullopt;
}

// LexBFS plus the linear verifier; suitable for large graphs.
inline RecognitionResult recognize_chordal_fast(const UndirectedGraph& g) {
    RecognitionResult result;
    result.class_id = ClassId::Chordal;
    result.family_used = defining_family_bits(ClassId::Chordal);
    VertexOrdering ord(detail::lexbfs(g));
    auto violation = chordal_certificate_violation(g, ord);
    if (!violation) {
        result.member = true;
        result.certificate = ord;
    } else {
        result.member = false;
        result.refutation = violation;
        result.refuted_ordering = ord;
        result.certificate = std::nullopt;
    }
    return result;
}

inline RecognitionResult recognize(const UndirectedGraph& g, ClassId c, bool complemented = false) {
    if (c == ClassId::Chordal && !complemented && g.n() > 64) return recognize_chordal_fast(g);

    RecognitionResult result;
    result.class_id = c;
    result.complemented = complemented;
    result.family_used = defining_family_bits(c, complemented);
    PatternFamily family = decode_family(result.family_used);
    UndirectedGraph target = complemented ? g.complement() : g;
    auto candidates = detail::with_reverses(detail::class_candidates(target, c), g.n());
    for (const auto& cand : candidates) {
        if (avoids(g, cand, family)) {
            result.member = true;
            result.certificate = cand;
            return result;
        }
    }
    result.member = false;
    result.refutation = find_violation(g, candidates.front(), family);
    result.refuted_ordering = candidates.front();
    return result;
}

// Convention-aware recognition against a catalog entry's own family.
inline RecognitionResult recognize_entry(const UndirectedGraph& g, const CatalogEntry& entry) {
    if (entry.label.trivial)
        throw std::domain_error("trivial catalog entries are not recognized structurally");
    RecognitionResult result;
    result.class_id = entry.label.class_id;
    result.complemented = entry.label.complemented;
    result.family_used = entry.family;
    PatternFamily family = decode_family(entry.family);
    UndirectedGraph target = entry.label.complemented ? g.complement() : g;
    auto candidates =
        detail::with_reverses(detail::class_candidates(target, entry.label.class_id), g.n());
    for (const auto& cand : candidates) {
        if (avoids(g, cand, family)) {
            result.member = true;
            result.certificate = cand;
            return result;
        }
    }
    result.member = false;
    result.refutation = find_violation(g, candidates.front(), family);
    result.refuted_ordering = candidates.front();
    return result;
}

inline std::vector<RecognitionResult> classify_all(const UndirectedGraph& g) {
    std::vector<RecognitionResult> out;
    out.reserve(2 * kAllClasses.size());
    for (ClassId c : kAllClasses)
        for (bool complemented : {false, true}) out.push_back(recognize(g, c, complemented));
    return out;
}

} // namespace ordpat

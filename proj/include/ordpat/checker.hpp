#pragma once

// Generic pattern-occurrence checking on ordered graphs, and the exhaustive
// ordering oracle for small graphs.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordpat/family.hpp"
#include "ordpat/graph.hpp"
#include "ordpat/pattern.hpp"

namespace ordpat {

// Certifies a pattern occurrence: the pattern together with the (0-based,
// strictly increasing) positions of the realizing vertex tuple.
struct OccurrenceWitness {
    Pattern pattern;
    std::vector<int> positions;

    std::vector<int> vertices(const VertexOrdering& ord) const {
        std::vector<int> out;
        out.reserve(positions.size());
        for (int p : positions) out.push_back(ord.vertex_at(p));
        return out;
    }
};

namespace detail {
// Decided pairs of a pattern, flattened for the hot path.
struct CompiledPattern {
    int size = 0;
    // (i, j, required) with i < j, 1-based pattern positions.
    std::vector<std::tuple<int, int, bool>> decided;
};

inline CompiledPattern compile_pattern(const Pattern& p) {
    CompiledPattern out;
    out.size = p.size();
    for (auto [i, j] : p.pairs()) {
        PairState s = p.at(i, j);
        if (s == PairState::Undecided) continue;
        out.decided.emplace_back(i, j, s == PairState::Edge);
    }
    return out;
}

inline bool tuple_matches(const UndirectedGraph& g, const VertexOrdering& ord,
                          const CompiledPattern& p, const std::vector<int>& positions) {
    for (auto [i, j, want_edge] : p.decided) {
        int u = ord.vertex_at(positions[static_cast<std::size_t>(i - 1)]);
        int v = ord.vertex_at(positions[static_cast<std::size_t>(j - 1)]);
        if (g.has_edge(u, v) != want_edge) return false;
    }
    return true;
}

// Visits increasing k-tuples of positions in lexicographic order; stops when
// the visitor returns true.
template <typename Visit>
inline bool for_each_tuple(int n, int k, std::vector<int>& tuple, Visit&& visit) {
    if (k > n) return false;
    for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (visit(tuple)) return true;
        int i = k - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++tuple[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
    }
}
} // namespace detail

// True iff the vertices at the given (increasing) positions realize the pattern.
inline bool occurs_at(const UndirectedGraph& g, const VertexOrdering& ord, const Pattern& p,
                      const std::vector<int>& positions) {
    if (static_cast<int>(positions.size()) != p.size())
        throw std::domain_error("position tuple arity does not match pattern size");
    for (std::size_t i = 0; i + 1 < positions.size(); ++i)
        if (positions[i] >= positions[i + 1])
            throw std::domain_error("positions must be strictly increasing");
    for (int pos : positions)
        if (pos < 0 || pos >= g.n()) throw std::domain_error("position out of range");
    return detail::tuple_matches(g, ord, detail::compile_pattern(p), positions);
}

// First witness in (pattern order, position tuple) lexicographic order, or
// nothing when the ordering avoids every pattern of the family.
inline std::optional<OccurrenceWitness> find_violation(const UndirectedGraph& g,
                                                       const VertexOrdering& ord,
                                                       const PatternFamily& family) {
    const int n = g.n();
    for (const auto& pat : family.patterns()) {
        auto compiled = detail::compile_pattern(pat);
        if (compiled.size > n) continue;
        std::vector<int> tuple(static_cast<std::size_t>(compiled.size));
        std::optional<OccurrenceWitness> found;
        detail::for_each_tuple(n, compiled.size, tuple, [&](const std::vector<int>& positions) {
            if (detail::tuple_matches(g, ord, compiled, positions)) {
                found = OccurrenceWitness{pat, positions};
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

inline bool avoids(const UndirectedGraph& g, const VertexOrdering& ord, const PatternFamily& family) {
    return !find_violation(g, ord, family).has_value();
}

namespace detail {
// Tight avoidance test used inside the permutation scan of the oracle.
inline bool avoids_compiled(const UndirectedGraph& g, const std::vector<int>& order,
                            const std::vector<CompiledPattern>& fam) {
    const int n = static_cast<int>(order.size());
    for (const auto& p : fam) {
        if (p.size > n) continue;
        if (p.size == 3) {
            bool hit = false;
            for (int a = 0; a < n && !hit; ++a)
                for (int b = a + 1; b < n && !hit; ++b)
                    for (int c = b + 1; c < n && !hit; ++c) {
                        bool ok = true;
                        for (auto [i, j, want] : p.decided) {
                            int u = order[static_cast<std::size_t>(i == 1 ? a : (i == 2 ? b : c))];
                            int v = order[static_cast<std::size_t>(j == 2 ? b : c)];
                            if (g.has_edge(u, v) != want) { ok = false; break; }
                        }
                        if (ok) hit = true;
                    }
            if (hit) return false;
        } else {
            std::vector<int> tuple(static_cast<std::size_t>(p.size));
            bool hit = for_each_tuple(n, p.size, tuple, [&](const std::vector<int>& positions) {
                for (auto [i, j, want] : p.decided) {
                    int u = order[static_cast<std::size_t>(positions[static_cast<std::size_t>(i - 1)])];
                    int v = order[static_cast<std::size_t>(positions[static_cast<std::size_t>(j - 1)])];
                    if (g.has_edge(u, v) != want) return false;
                }
                return true;
            });
            if (hit) return false;
        }
    }
    return true;
}
} // namespace detail

inline constexpr int kDefaultOracleLimit = 8;

struct OracleLimitError : std::runtime_error {
    explicit OracleLimitError(int n, int limit)
        : std::runtime_error("oracle refuses " + std::to_string(n) + " vertices (limit " +
                             std::to_string(limit) + ")") {}
};

// Exhaustive search over all n! orderings; returns the lexicographically first
// ordering avoiding the family, or nothing if none exists.
inline std::optional<VertexOrdering> oracle_membership(const UndirectedGraph& g,
                                                       const PatternFamily& family,
                                                       int limit = kDefaultOracleLimit) {
    if (g.n() > limit) throw OracleLimitError(g.n(), limit);
    std::vector<detail::CompiledPattern> compiled;
    compiled.reserve(family.size());
    for (const auto& p : family.patterns()) compiled.push_back(detail::compile_pattern(p));
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    do {
        if (detail::avoids_compiled(g, order, compiled)) return VertexOrdering(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

inline bool oracle_member(const UndirectedGraph& g, const PatternFamily& family,
                          int limit = kDefaultOracleLimit) {
    return oracle_membership(g, family, limit).has_value();
}

} // namespace ordpat

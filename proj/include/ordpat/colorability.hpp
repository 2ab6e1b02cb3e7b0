#pragma once

// Straight-line patterns of arbitrary length and the constructive equivalence
// between orderings avoiding them and partitions into a independent sets and
// b cliques.  Also ships a few named four-node patterns usable with the
// generic checker.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordpat/checker.hpp"
#include "ordpat/graph.hpp"
#include "ordpat/pattern.hpp"

namespace ordpat {

// Sequence over {Edge, NonEdge}; a letters of one kind, b of the other.
using LineWord = std::vector<PairState>;

inline LineWord parse_line_word(std::string_view text) {
    LineWord word;
    for (char c : text) {
        if (c == 'E' || c == 'e') word.push_back(PairState::Edge);
        else if (c == 'N' || c == 'n') word.push_back(PairState::NonEdge);
        else if (c == ' ' || c == ',') continue;
        else throw std::invalid_argument("line word may only contain E and N letters");
    }
    if (word.empty()) throw std::invalid_argument("empty line word");
    return word;
}

inline std::string format_line_word(const LineWord& w) {
    std::string out;
    for (PairState s : w) out.push_back(s == PairState::Edge ? 'E' : 'N');
    return out;
}

// Pattern on |w|+1 vertices whose decided pairs are exactly the consecutive
// ones, labeled by the word's letters.
inline Pattern straight_line_pattern(const LineWord& w) {
    if (w.empty()) throw std::invalid_argument("empty line word");
    for (PairState s : w)
        if (s == PairState::Undecided)
            throw std::invalid_argument("line word letters must be decided");
    Pattern p(static_cast<int>(w.size()) + 1);
    for (std::size_t i = 0; i < w.size(); ++i)
        p.set(static_cast<int>(i) + 1, static_cast<int>(i) + 2, w[i]);
    return p;
}

enum class PartKind { Independent, Clique };

struct ABColoring {
    // parts[i] pairs with letter i of the word; empty parts are permitted.
    std::vector<PartKind> kinds;
    std::vector<std::vector<int>> parts;

    int part_of(int v) const {
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int u : parts[i])
                if (u == v) return static_cast<int>(i);
        return -1;
    }
};

inline bool coloring_is_valid(const UndirectedGraph& g, const ABColoring& col) {
    if (col.kinds.size() != col.parts.size()) return false;
    std::vector<int> assigned(static_cast<std::size_t>(g.n()), 0);
    for (const auto& part : col.parts)
        for (int v : part) {
            if (v < 0 || v >= g.n()) return false;
            ++assigned[static_cast<std::size_t>(v)];
        }
    for (int v = 0; v < g.n(); ++v)
        if (assigned[static_cast<std::size_t>(v)] != 1) return false;
    for (std::size_t i = 0; i < col.parts.size(); ++i) {
        const auto& part = col.parts[i];
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b) {
                bool edge = g.has_edge(part[a], part[b]);
                if (col.kinds[i] == PartKind::Independent && edge) return false;
                if (col.kinds[i] == PartKind::Clique && !edge) return false;
            }
    }
    return true;
}

struct InvalidCertificateError : std::domain_error {
    OccurrenceWitness witness;
    explicit InvalidCertificateError(OccurrenceWitness w)
        : std::domain_error("ordering does not avoid the straight-line pattern"),
          witness(std::move(w)) {}
};

// Inductive peeling: letters are consumed right to left; an Edge letter
// extracts the vertices with no later neighbor among the remaining ones (an
// independent part), a NonEdge letter dually extracts the vertices with no
// later non-neighbor (a clique part).
inline ABColoring coloring_from_ordering(const UndirectedGraph& g, const VertexOrdering& ord,
                                         const LineWord& w) {
    Pattern pattern = straight_line_pattern(w);
    if (auto violation = find_violation(g, ord, PatternFamily{pattern}))
        throw InvalidCertificateError(*violation);

    ABColoring col;
    col.kinds.resize(w.size());
    col.parts.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        col.kinds[i] = (w[i] == PairState::Edge) ? PartKind::Independent : PartKind::Clique;

    std::vector<int> remaining = ord.order(); // ordering restricted to survivors
    for (std::size_t step = w.size(); step-- > 0;) {
        bool edge_letter = (w[step] == PairState::Edge);
        std::vector<int> extracted, kept;
        for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
            bool has_later = false;
            for (std::size_t later = pos + 1; later < remaining.size() && !has_later; ++later) {
                bool adj = g.has_edge(remaining[pos], remaining[later]);
                if (edge_letter ? adj : !adj) has_later = true;
            }
            (has_later ? kept : extracted).push_back(remaining[pos]);
        }
        col.parts[step] = extracted;
        remaining = kept;
    }
    if (!remaining.empty())
        throw std::logic_error("peeling left vertices behind despite a verified ordering");
    return col;
}

// Concatenate the parts in letter order; the part paired with the last letter
// goes last.  The result is checker-verified before returning.
inline VertexOrdering ordering_from_coloring(const UndirectedGraph& g, const ABColoring& col,
                                             const LineWord& w) {
    if (col.parts.size() != w.size())
        throw std::domain_error("coloring has " + std::to_string(col.parts.size()) +
                                " parts for a word of length " + std::to_string(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
        PartKind want = (w[i] == PairState::Edge) ? PartKind::Independent : PartKind::Clique;
        if (col.kinds[i] != want)
            throw std::domain_error("part kind does not match letter " + std::to_string(i));
    }
    if (!coloring_is_valid(g, col)) throw std::domain_error("invalid coloring");
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.n()));
    for (const auto& part : col.parts) {
        std::vector<int> sorted = part;
        std::sort(sorted.begin(), sorted.end());
        order.insert(order.end(), sorted.begin(), sorted.end());
    }
    VertexOrdering result(order);
    if (auto violation = find_violation(g, result, PatternFamily{straight_line_pattern(w)}))
        throw std::logic_error("constructed ordering fails verification");
    return result;
}

inline constexpr int kDefaultColoringLimit = 10;

// Brute-force part assignment with pruning.
inline std::optional<ABColoring> ab_colorable_oracle(const UndirectedGraph& g, const LineWord& w,
                                                     int limit = kDefaultColoringLimit) {
    if (g.n() > limit) throw OracleLimitError(g.n(), limit);
    ABColoring col;
    col.kinds.resize(w.size());
    col.parts.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        col.kinds[i] = (w[i] == PairState::Edge) ? PartKind::Independent : PartKind::Clique;

    std::function<bool(int)> assign = [&](int v) {
        if (v == g.n()) return true;
        for (std::size_t i = 0; i < col.parts.size(); ++i) {
            bool fits = true;
            for (int u : col.parts[i]) {
                bool edge = g.has_edge(u, v);
                if (col.kinds[i] == PartKind::Independent && edge) { fits = false; break; }
                if (col.kinds[i] == PartKind::Clique && !edge) { fits = false; break; }
            }
            if (!fits) continue;
            col.parts[i].push_back(v);
            if (assign(v + 1)) return true;
            col.parts[i].pop_back();
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return col;
}

// Least k such that some ordering avoids the straight-line pattern with k
// edges; equals the chromatic number.
inline int mirsky_chromatic(const UndirectedGraph& g, int limit = kDefaultOracleLimit) {
    if (g.n() > limit) throw OracleLimitError(g.n(), limit);
    if (g.n() == 0) return 0;
    for (int k = 1; k <= g.n(); ++k) {
        LineWord w(static_cast<std::size_t>(k), PairState::Edge);
        if (oracle_member(g, PatternFamily{straight_line_pattern(w)}, limit)) return k;
    }
    return g.n();
}

// Named four-node patterns checkable with the generic machinery.
inline Pattern outerplanar_pattern() {
    Pattern p(4);
    p.set(1, 3, PairState::Edge);
    p.set(2, 4, PairState::Edge);
    return p;
}

inline Pattern queue_one_pattern() {
    Pattern p(4);
    p.set(1, 4, PairState::Edge);
    p.set(2, 3, PairState::Edge);
    return p;
}

inline Pattern p_box_pattern() {
    Pattern p(4);
    p.set(1, 3, PairState::Edge);
    p.set(2, 4, PairState::Edge);
    p.set(2, 3, PairState::NonEdge);
    return p;
}

inline const std::vector<std::pair<std::string, Pattern>>& extra_pattern_catalog() {
    static const std::vector<std::pair<std::string, Pattern>> catalog = {
        {"outerplanar", outerplanar_pattern()},
        {"queue-1", queue_one_pattern()},
        {"p-box", p_box_pattern()},
    };
    return catalog;
}

} // namespace ordpat

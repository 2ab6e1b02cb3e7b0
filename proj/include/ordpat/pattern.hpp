#pragma once

// Ordered trigraph patterns: every vertex pair of an ordered graph template is
// classified as edge, non-edge or undecided.  A pattern with no undecided pair
// is "full".  Patterns on three nodes carry a fixed catalog numbering 0..26.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordpat {

enum class PairState : std::uint8_t { Edge, NonEdge, Undecided };

inline char pair_state_char(PairState s) {
    switch (s) {
    case PairState::Edge: return 'E';
    case PairState::NonEdge: return 'N';
    default: return 'U';
    }
}

// Vertices of a pattern are the positions 1..k; pairs are stored with i < j.
class Pattern {
public:
    explicit Pattern(int size, PairState fill = PairState::Undecided)
        : size_(size), states_(static_cast<std::size_t>(size) * (size - 1) / 2, fill) {
        if (size < 2) throw std::invalid_argument("pattern needs at least 2 vertices");
    }

    int size() const { return size_; }
    int pair_count() const { return static_cast<int>(states_.size()); }

    PairState at(int i, int j) const { return states_[pair_index(i, j)]; }
    void set(int i, int j, PairState s) { states_[pair_index(i, j)] = s; }

    bool is_full() const {
        return std::none_of(states_.begin(), states_.end(),
                            [](PairState s) { return s == PairState::Undecided; });
    }

    const std::vector<PairState>& states() const { return states_; }

    bool operator==(const Pattern& other) const {
        return size_ == other.size_ && states_ == other.states_;
    }
    bool operator!=(const Pattern& other) const { return !(*this == other); }

    // Lexicographic on (size, pair states); used for canonical family order.
    bool operator<(const Pattern& other) const {
        if (size_ != other.size_) return size_ < other.size_;
        return states_ < other.states_;
    }

    // All (i, j) pairs, i < j, in lexicographic order.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(states_.size());
        for (int i = 1; i <= size_; ++i)
            for (int j = i + 1; j <= size_; ++j) out.emplace_back(i, j);
        return out;
    }

private:
    std::size_t pair_index(int i, int j) const {
        if (i < 1 || j <= i || j > size_) throw std::out_of_range("pattern pair out of range");
        // pairs (1,2),(1,3),...,(1,k),(2,3),...
        std::size_t before = static_cast<std::size_t>(i - 1) * size_ -
                             static_cast<std::size_t>(i) * (i - 1) / 2;
        return before + static_cast<std::size_t>(j - i - 1);
    }

    int size_;
    std::vector<PairState> states_;
};

// ---------------------------------------------------------------------------
// Three-node catalog, numbered 0..26.  Indices 0..7 are the full patterns.

inline constexpr int kCatalogSize = 27;

namespace detail {
// States in pair order (1,2),(1,3),(2,3).  'E' edge, 'N' non-edge, 'U' undecided.
inline constexpr std::array<const char*, kCatalogSize> kCatalogStates = {
    "EEE", "EEN", "ENE", "ENN", "NEE", "NEN", "NNE", "NNN",  // full
    "UEE", "UEN", "UNE", "UNN",                              // (1,2) undecided
    "EUE", "EUN", "NUE", "NUN",                              // (1,3) undecided
    "EEU", "ENU", "NEU", "NNU",                              // (2,3) undecided
    "UUE", "UUN", "UEU", "UNU", "EUU", "NUU", "UUU",
};

inline PairState state_of_char(char c) {
    switch (c) {
    case 'E': return PairState::Edge;
    case 'N': return PairState::NonEdge;
    case 'U': return PairState::Undecided;
    default: throw std::invalid_argument("bad pair state character");
    }
}
} // namespace detail

inline constexpr std::array<const char*, kCatalogSize> kCatalogNames = {
    "Triangle-Free",    // 0
    "mirror-Chordal",   // 1
    "Comparability",    // 2
    "co-Chordal",       // 3
    "Chordal",          // 4
    "co-Comparability", // 5
    "mirror-co-Chordal",// 6
    "co-Triangle-Free", // 7
    "Forest",           // 8
    "mirror-Interval",  // 9
    "mirror-co-Interval", // 10
    "co-Forest",        // 11
    "Bipartite",        // 12
    "Split",            // 13
    "co-Split",         // 14
    "co-Bipartite",     // 15
    "mirror-Forest",    // 16
    "co-Interval",      // 17
    "Interval",         // 18
    "mirror-co-Forest", // 19
    "mirror-Star",      // 20
    "mirror-co-Star",   // 21
    "Linear Forest",    // 22
    "co-Linear Forest", // 23
    "Star",             // 24
    "co-Star",          // 25
    "No Graph",         // 26
};

inline Pattern catalog_pattern(int index) {
    if (index < 0 || index >= kCatalogSize)
        throw std::domain_error("catalog index out of range 0..26: " + std::to_string(index));
    Pattern p(3);
    const char* s = detail::kCatalogStates[static_cast<std::size_t>(index)];
    p.set(1, 2, detail::state_of_char(s[0]));
    p.set(1, 3, detail::state_of_char(s[1]));
    p.set(2, 3, detail::state_of_char(s[2]));
    return p;
}

inline std::optional<int> catalog_index_of(const Pattern& p) {
    if (p.size() != 3) return std::nullopt;
    for (int i = 0; i < kCatalogSize; ++i)
        if (catalog_pattern(i) == p) return i;
    return std::nullopt;
}

inline std::string pattern_display_name(const Pattern& p) {
    if (auto idx = catalog_index_of(p)) return kCatalogNames[static_cast<std::size_t>(*idx)];
    std::ostringstream os;
    os << p.size() << "-node pattern";
    return os.str();
}

// ---------------------------------------------------------------------------
// Operations

// Reverse the vertex ordering: pair (i,j) takes the state of (k+1-j, k+1-i).
inline Pattern mirror(const Pattern& p) {
    const int k = p.size();
    Pattern out(k);
    for (auto [i, j] : p.pairs()) out.set(i, j, p.at(k + 1 - j, k + 1 - i));
    return out;
}

// Exchange edges and non-edges; undecided pairs stay undecided.
inline Pattern complement(const Pattern& p) {
    Pattern out(p.size());
    for (auto [i, j] : p.pairs()) {
        PairState s = p.at(i, j);
        if (s == PairState::Edge) s = PairState::NonEdge;
        else if (s == PairState::NonEdge) s = PairState::Edge;
        out.set(i, j, s);
    }
    return out;
}

// Decide an undecided pair both ways: first as edge, second as non-edge.
inline std::pair<Pattern, Pattern> split(const Pattern& p, std::pair<int, int> pair) {
    auto [i, j] = pair;
    if (p.at(i, j) != PairState::Undecided)
        throw std::domain_error("split requires an undecided pair");
    Pattern as_edge = p, as_non_edge = p;
    as_edge.set(i, j, PairState::Edge);
    as_non_edge.set(i, j, PairState::NonEdge);
    return {as_edge, as_non_edge};
}

// Relabel pattern vertices by a permutation of 1..k (positions keep their order;
// this permutes which pair carries which state).
inline Pattern permute(const Pattern& p, const std::vector<int>& perm) {
    const int k = p.size();
    if (static_cast<int>(perm.size()) != k) throw std::invalid_argument("bad permutation size");
    Pattern out(k);
    for (auto [i, j] : p.pairs()) {
        int a = perm[static_cast<std::size_t>(i - 1)];
        int b = perm[static_cast<std::size_t>(j - 1)];
        if (a > b) std::swap(a, b);
        out.set(i, j, p.at(a, b));
    }
    return out;
}

namespace detail {
inline bool extension_search(const Pattern& big, const Pattern& small, std::vector<int>& map,
                             int next_small, int min_big) {
    const int ks = small.size(), kb = big.size();
    if (next_small > ks) {
        for (int i = 1; i <= ks; ++i)
            for (int j = i + 1; j <= ks; ++j) {
                PairState want = small.at(i, j);
                if (want == PairState::Undecided) continue;
                PairState got = big.at(map[static_cast<std::size_t>(i - 1)],
                                       map[static_cast<std::size_t>(j - 1)]);
                // A decided pair must stay decided the same way; an undecided
                // pair of the small pattern may become anything.
                if (got != want) return false;
            }
        return true;
    }
    for (int v = min_big; v <= kb - (ks - next_small); ++v) {
        map[static_cast<std::size_t>(next_small - 1)] = v;
        if (extension_search(big, small, map, next_small + 1, v + 1)) return true;
    }
    return false;
}
} // namespace detail

// True iff `big` can be obtained from `small` by appending vertices (anywhere,
// keeping the relative order of small's vertices) and deciding undecided pairs.
inline bool is_extension(const Pattern& big, const Pattern& small) {
    if (big.size() < small.size()) return false;
    std::vector<int> map(static_cast<std::size_t>(small.size()));
    return detail::extension_search(big, small, map, 1, 1);
}

// ---------------------------------------------------------------------------
// Textual pattern syntax: `k; E:(i,j),(i,j); N:(i,j)` -- unlisted pairs are
// undecided.  Catalog patterns are also addressable as `#18`, `18`, or by name.

namespace detail {
inline std::string normalize_name(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == ' ' || c == '-' || c == '_') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}
} // namespace detail

inline std::optional<int> catalog_index_by_name(std::string_view name) {
    std::string key = detail::normalize_name(name);
    for (int i = 0; i < kCatalogSize; ++i)
        if (detail::normalize_name(kCatalogNames[static_cast<std::size_t>(i)]) == key) return i;
    return std::nullopt;
}

inline std::string valid_pattern_names() {
    std::string out;
    for (int i = 0; i < kCatalogSize; ++i) {
        if (i) out += ", ";
        out += kCatalogNames[static_cast<std::size_t>(i)];
    }
    return out;
}

namespace detail {
inline std::vector<std::pair<int, int>> parse_pair_list(const std::string& text, int k) {
    std::vector<std::pair<int, int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in pair list: " + text);
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in pair list");
        std::string inner = text.substr(pos + 1, close - pos - 1);
        std::size_t comma = inner.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("pair needs two indices: " + inner);
        int i = std::stoi(trim(inner.substr(0, comma)));
        int j = std::stoi(trim(inner.substr(comma + 1)));
        if (i > j) std::swap(i, j);
        if (i < 1 || j > k || i == j)
            throw std::invalid_argument("pair out of range for " + std::to_string(k) + " vertices");
        out.emplace_back(i, j);
        pos = close + 1;
    }
    return out;
}
} // namespace detail

inline Pattern parse_pattern(std::string_view text) {
    std::string t = detail::trim(text);
    if (t.empty()) throw std::invalid_argument("empty pattern");
    if (t[0] == '#') t = t.substr(1);
    // Inline syntax contains ';'.
    if (t.find(';') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            std::size_t semi = t.find(';', pos);
            parts.push_back(detail::trim(t.substr(pos, semi == std::string::npos ? semi : semi - pos)));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        int k = 0;
        try {
            k = std::stoi(parts[0]);
        } catch (const std::exception&) {
            throw std::invalid_argument("pattern syntax must start with the vertex count: " + t);
        }
        Pattern p(k);
        for (std::size_t idx = 1; idx < parts.size(); ++idx) {
            const std::string& part = parts[idx];
            if (part.empty()) continue;
            std::size_t colon = part.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("expected 'E:' or 'N:' section: " + part);
            std::string tag = detail::trim(part.substr(0, colon));
            PairState state;
            if (tag == "E" || tag == "e") state = PairState::Edge;
            else if (tag == "N" || tag == "n") state = PairState::NonEdge;
            else throw std::invalid_argument("unknown pattern section '" + tag + "' (want E or N)");
            for (auto [i, j] : detail::parse_pair_list(part.substr(colon + 1), k)) {
                if (p.at(i, j) != PairState::Undecided)
                    throw std::invalid_argument("pair listed twice in pattern: (" + std::to_string(i) +
                                                "," + std::to_string(j) + ")");
                p.set(i, j, state);
            }
        }
        return p;
    }
    // Plain catalog index.
    bool digits = std::all_of(t.begin(), t.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) {
        int idx = std::stoi(t);
        if (idx < 0 || idx >= kCatalogSize)
            throw std::invalid_argument("catalog index out of range 0..26: " + t);
        return catalog_pattern(idx);
    }
    if (auto idx = catalog_index_by_name(t)) return catalog_pattern(*idx);
    throw std::invalid_argument("unknown pattern '" + t + "'; valid names: " + valid_pattern_names());
}

inline std::string format_pattern(const Pattern& p) {
    std::ostringstream os;
    os << p.size();
    std::string edges, nonedges;
    for (auto [i, j] : p.pairs()) {
        std::string cell = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (p.at(i, j) == PairState::Edge) edges += (edges.empty() ? "" : ",") + cell;
        else if (p.at(i, j) == PairState::NonEdge) nonedges += (nonedges.empty() ? "" : ",") + cell;
    }
    if (!edges.empty()) os << "; E:" << edges;
    if (!nonedges.empty()) os << "; N:" << nonedges;
    if (edges.empty() && nonedges.empty()) os << ";";
    return os.str();
}

} // namespace ordpat

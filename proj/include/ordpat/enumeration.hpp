#pragma once

// Enumerates the split-minimal three-node pattern families and carries the
// verified family -> graph-class catalog (87 entries).
//
// Pipeline: all 255 non-empty sets of full patterns (bits 0..7), deduplicated
// under complement / mirror / mirror-complement equivalence, zero-extended to
// 27 bits, then rewritten with the split rule until split-minimal.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ordpat/class_id.hpp"
#include "ordpat/family.hpp"

namespace ordpat {

// Connectivity conventions attached to catalog labels.  The core predicate of
// a class describes graphs assembled from one "core" part plus isolated
// vertices (or from arbitrary unions, for union-closed classes); the
// convention says how isolated vertices and extra components may appear.
enum class Connectivity {
    Unrestricted,              // every connected component is a core member
    AllowsIsolated,            // whole-graph class predicate (isolated vertices fine)
    ForbidsIsolated,           // edgeless graphs, or a member with no isolated vertex
    SingleNontrivialComponent, // one non-trivial component plus isolated vertices
    IsolatedOnlyIfSmallCore,   // isolated vertices only while the core has < 3 vertices
};

inline const char* connectivity_name(Connectivity c) {
    switch (c) {
    case Connectivity::Unrestricted: return "unrestricted";
    case Connectivity::AllowsIsolated: return "allows-isolated-nodes";
    case Connectivity::ForbidsIsolated: return "forbids-isolated-nodes";
    case Connectivity::SingleNontrivialComponent: return "single-nontrivial-component";
    default: return "isolated-only-if-small-core";
    }
}

struct ClassLabel {
    bool trivial = false; // members come from a fixed finite list of components
    ClassId class_id = ClassId::Forest;
    bool complemented = false;
    Connectivity connectivity = Connectivity::Unrestricted;
};

struct CatalogEntry {
    int index = 0; // 1..87
    FamilyBits family;
    ClassLabel label;
};

// ---------------------------------------------------------------------------
// Algorithm: representatives of the full-pattern families

// Reversing an 8-bit vector complements every full pattern of the family.
inline std::uint32_t complement8(std::uint32_t v) {
    std::uint32_t out = 0;
    for (int i = 0; i < 8; ++i)
        if ((v >> i) & 1u) out |= (1u << (7 - i));
    return out;
}

// Swapping bits 1<->4 and 3<->6 mirrors every full pattern of the family.
inline std::uint32_t exchange8(std::uint32_t v) {
    std::uint32_t out = v & ~0b01011010u;
    if ((v >> 1) & 1u) out |= (1u << 4);
    if ((v >> 4) & 1u) out |= (1u << 1);
    if ((v >> 3) & 1u) out |= (1u << 6);
    if ((v >> 6) & 1u) out |= (1u << 3);
    return out;
}

namespace detail {
// Order on families viewed as sorted index lists: the lowest pattern index on
// which two families differ decides, presence winning.  This is the scan order
// under which the kept representatives reproduce the published catalog.
inline bool setlex_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    if (!diff) return false;
    int low = __builtin_ctz(diff);
    return (a >> low) & 1u;
}
} // namespace detail

// Keeps one representative per equivalence class of non-empty full-pattern
// families under {complement, exchange, both}.  Exactly 87 survive.
inline std::vector<FamilyBits> enumerate_full_representatives() {
    std::vector<std::uint32_t> kept;
    for (std::uint32_t q = 1; q < 256; ++q) {
        std::uint32_t orbit[3] = {complement8(q), exchange8(q), exchange8(complement8(q))};
        bool minimal = true;
        for (std::uint32_t p : orbit)
            if (p != q && detail::setlex_less(p, q)) { minimal = false; break; }
        if (minimal) kept.push_back(q);
    }
    std::sort(kept.begin(), kept.end(), detail::setlex_less);
    std::vector<FamilyBits> out;
    out.reserve(kept.size());
    for (std::uint32_t v : kept) out.push_back(FamilyBits{v});
    return out;
}

// Triplets (a, b, c): pattern c splits into patterns a and b, so a family
// containing both a and b may replace them by c.  List A eliminates pairs of
// full patterns, list B pairs with one undecided pair, list C pairs with two.
inline constexpr std::array<std::array<int, 3>, 12> kSplitTripletsA = {{
    {0, 1, 16}, {0, 2, 12}, {0, 4, 8},  {1, 3, 13}, {1, 5, 9},  {2, 3, 17},
    {2, 6, 10}, {3, 7, 11}, {4, 5, 18}, {4, 6, 14}, {5, 7, 15}, {6, 7, 19},
}};
inline constexpr std::array<std::array<int, 3>, 12> kSplitTripletsB = {{
    {8, 9, 22},   {8, 10, 20},  {9, 11, 21},  {10, 11, 23}, {12, 13, 24}, {12, 14, 20},
    {13, 15, 21}, {14, 15, 25}, {16, 17, 24}, {16, 18, 22}, {17, 19, 23}, {18, 19, 25},
}};
inline constexpr std::array<std::array<int, 3>, 3> kSplitTripletsC = {{
    {20, 21, 26}, {22, 23, 26}, {24, 25, 26},
}};

inline FamilyBits reduce_to_split_minimal(FamilyBits f) {
    auto apply = [&](const auto& list) {
        for (const auto& t : list) {
            if (f.test(t[0]) && f.test(t[1])) {
                f.bits &= ~((1u << t[0]) | (1u << t[1]));
                f.set(t[2]);
            }
        }
    };
    apply(kSplitTripletsA);
    apply(kSplitTripletsB);
    apply(kSplitTripletsC);
    return f;
}

inline std::vector<FamilyBits> enumerate_split_minimal() {
    std::vector<FamilyBits> out;
    for (FamilyBits rep : enumerate_full_representatives())
        out.push_back(reduce_to_split_minimal(rep));
    return out;
}

// ---------------------------------------------------------------------------
// Verified catalog: every split-minimal family with its class label.  The
// table is data under test (the desk-scale fidelity suite re-derives every
// label against the ordering oracle) rather than trusted input.

namespace detail {
struct RawEntry {
    std::initializer_list<int> fam;
    ClassId cls;
    bool complemented;
    Connectivity conn;
    bool trivial;
};
} // namespace detail

inline const std::vector<CatalogEntry>& family_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        using C = Connectivity;
        const ClassId dummy = ClassId::Forest;
        auto trivial = [&](std::initializer_list<int> fam) {
            return detail::RawEntry{fam, dummy, false, C::Unrestricted, true};
        };
        auto entry = [&](std::initializer_list<int> fam, ClassId cls, C conn,
                         bool complemented = false) {
            return detail::RawEntry{fam, cls, complemented, conn, false};
        };
        std::vector<detail::RawEntry> raw = {
            entry({2}, ClassId::Comparability, C::Unrestricted),            // 1
            entry({2, 5}, ClassId::Permutation, C::Unrestricted),           // 2
            entry({1}, ClassId::Chordal, C::Unrestricted),                  // 3
            entry({1, 6}, ClassId::Threshold, C::AllowsIsolated),           // 4
            entry({9}, ClassId::Interval, C::Unrestricted),                 // 5
            entry({1, 4}, ClassId::ProperInterval, C::Unrestricted),        // 6
            entry({4, 9}, ClassId::ProperInterval, C::Unrestricted),        // 7
            entry({13}, ClassId::Split, C::AllowsIsolated),                 // 8
            entry({4, 13}, ClassId::AugmentedClique, C::AllowsIsolated),    // 9
            entry({13, 14}, ClassId::OneSplit, C::AllowsIsolated),          // 10
            entry({1, 2}, ClassId::TriviallyPerfect, C::Unrestricted),      // 11
            entry({1, 10}, ClassId::Threshold, C::AllowsIsolated),          // 12
            entry({2, 9}, ClassId::TriviallyPerfect, C::Unrestricted),      // 13
            entry({9, 10}, ClassId::Threshold, C::AllowsIsolated),          // 14
            entry({1, 2, 4}, ClassId::Clique, C::Unrestricted),             // 15
            entry({2, 4, 9}, ClassId::Clique, C::Unrestricted),             // 16
            entry({2, 13}, ClassId::Threshold, C::AllowsIsolated),          // 17
            entry({10, 13}, ClassId::AugmentedClique, C::AllowsIsolated, true), // 18
            entry({2, 5, 13}, ClassId::Threshold, C::AllowsIsolated),       // 19
            entry({2, 4, 13}, ClassId::Clique, C::SingleNontrivialComponent), // 20
            entry({4, 10, 13}, ClassId::Clique, C::IsolatedOnlyIfSmallCore),  // 21
            entry({2, 13, 18}, ClassId::Clique, C::SingleNontrivialComponent), // 22
            entry({10, 13, 18}, ClassId::Clique, C::ForbidsIsolated),       // 23
            entry({0}, ClassId::TriangleFree, C::Unrestricted),             // 24
            trivial({0, 7}),                                                // 25
            entry({0, 5}, ClassId::BipartitePermutation, C::Unrestricted),  // 26
            entry({0, 3}, ClassId::TriangleFreeCoChordal, C::Unrestricted), // 27
            entry({0, 3, 6}, ClassId::BipartiteChain, C::AllowsIsolated),   // 28
            entry({0, 3, 5}, ClassId::CompleteBipartite, C::SingleNontrivialComponent), // 29
            entry({0, 3, 5, 6}, ClassId::CompleteBipartite, C::ForbidsIsolated), // 30
            entry({12}, ClassId::Bipartite, C::Unrestricted),               // 31
            trivial({7, 12}),                                               // 32
            entry({5, 12}, ClassId::BipartitePermutation, C::Unrestricted), // 33
            trivial({12, 15}),                                              // 34
            entry({3, 12}, ClassId::BipartiteChain, C::AllowsIsolated),     // 35
            entry({3, 6, 12}, ClassId::BipartiteChain, C::AllowsIsolated),  // 36
            entry({3, 5, 12}, ClassId::CompleteBipartite, C::SingleNontrivialComponent), // 37
            entry({3, 5, 6, 12}, ClassId::CompleteBipartite, C::ForbidsIsolated), // 38
            entry({16}, ClassId::Forest, C::Unrestricted),                  // 39
            trivial({7, 16}),                                               // 40
            entry({6, 16}, ClassId::Star, C::AllowsIsolated),               // 41
            trivial({16, 19}),                                              // 42
            entry({5, 16}, ClassId::Caterpillar, C::Unrestricted),          // 43
            trivial({15, 16}),                                              // 44
            entry({5, 6, 16}, ClassId::Star, C::AllowsIsolated),            // 45
            entry({4, 16}, ClassId::LinearForest, C::Unrestricted),         // 46
            trivial({4, 7, 16}),                                            // 47
            entry({22}, ClassId::LinearForest, C::Unrestricted),            // 48
            trivial({7, 22}),                                               // 49
            entry({3, 16}, ClassId::TwoStar, C::AllowsIsolated),            // 50
            trivial({11, 16}),                                              // 51
            entry({3, 6, 16}, ClassId::Star, C::AllowsIsolated),            // 52
            entry({3, 5, 16}, ClassId::Star, C::AllowsIsolated),            // 53
            entry({3, 5, 6, 16}, ClassId::Star, C::ForbidsIsolated),        // 54
            trivial({3, 4, 16}),                                            // 55
            trivial({4, 11, 16}),                                           // 56
            trivial({3, 14, 16}),                                           // 57
            trivial({11, 14, 16}),                                          // 58
            trivial({3, 22}),                                               // 59
            trivial({3, 6, 22}),                                            // 60
            entry({2, 16}, ClassId::Star, C::Unrestricted),                 // 61 (star forests)
            trivial({2, 7, 16}),                                            // 62
            entry({10, 16}, ClassId::Star, C::AllowsIsolated),              // 63
            trivial({7, 10, 16}),                                           // 64
            entry({2, 5, 16}, ClassId::Star, C::Unrestricted),              // 65 (star forests)
            trivial({2, 15, 16}),                                           // 66
            entry({5, 10, 16}, ClassId::Star, C::AllowsIsolated),           // 67
            trivial({10, 15, 16}),                                          // 68
            trivial({2, 4, 16}),                                            // 69
            trivial({2, 4, 7, 16}),                                         // 70
            trivial({2, 22}),                                               // 71
            trivial({2, 7, 22}),                                            // 72
            entry({24}, ClassId::Star, C::AllowsIsolated),                  // 73
            trivial({7, 24}),                                               // 74
            entry({6, 24}, ClassId::Star, C::AllowsIsolated),               // 75
            trivial({19, 24}),                                              // 76
            entry({5, 24}, ClassId::Star, C::AllowsIsolated),               // 77
            trivial({15, 24}),                                              // 78
            entry({5, 6, 24}, ClassId::Star, C::ForbidsIsolated),           // 79
            trivial({4, 24}),                                               // 80
            trivial({4, 7, 24}),                                            // 81
            trivial({14, 24}),                                              // 82
            trivial({7, 14, 24}),                                           // 83
            trivial({18, 24}),                                              // 84
            trivial({7, 18, 24}),                                           // 85
            trivial({6, 18, 24}),                                           // 86
            trivial({26}),                                                  // 87
        };
        std::vector<CatalogEntry> out;
        out.reserve(raw.size());
        int index = 1;
        for (const auto& r : raw) {
            CatalogEntry e;
            e.index = index++;
            e.family = family_bits(r.fam);
            e.label.trivial = r.trivial;
            e.label.class_id = r.cls;
            e.label.complemented = r.complemented;
            e.label.connectivity = r.conn;
            out.push_back(e);
        }
        return out;
    }();
    return catalog;
}

// Exact-match lookup; unknown families are not in the catalog.
inline const CatalogEntry& class_label(FamilyBits f) {
    for (const auto& e : family_catalog())
        if (e.family == f) return e;
    throw std::domain_error("family " + to_string(f) + " is not one of the 87 catalog families");
}

inline std::string label_text(const ClassLabel& label) {
    if (label.trivial) return "trivial";
    std::string out = label.complemented ? std::string("co-") + class_name(label.class_id)
                                         : class_name(label.class_id);
    return out;
}

} // namespace ordpat

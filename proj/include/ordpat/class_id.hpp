#pragma once

// The named graph classes recognizable from three-node pattern families, and
// the canonical defining family of each.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ordpat/family.hpp"

namespace ordpat {

enum class ClassId {
    Forest,
    LinearForest,
    Star,
    Interval,
    Split,
    Bipartite,
    Chordal,
    Comparability,
    TriangleFree,
    Permutation,
    Threshold,
    ProperInterval,
    Caterpillar,
    TriviallyPerfect,
    BipartiteChain,
    TwoStar,
    OneSplit,
    AugmentedClique,
    BipartitePermutation,
    TriangleFreeCoChordal,
    Clique,
    CompleteBipartite,
};

inline constexpr int kClassCount = 22;

inline constexpr std::array<ClassId, kClassCount> kAllClasses = {
    ClassId::Forest,          ClassId::LinearForest,
    ClassId::Star,            ClassId::Interval,
    ClassId::Split,           ClassId::Bipartite,
    ClassId::Chordal,         ClassId::Comparability,
    ClassId::TriangleFree,    ClassId::Permutation,
    ClassId::Threshold,       ClassId::ProperInterval,
    ClassId::Caterpillar,     ClassId::TriviallyPerfect,
    ClassId::BipartiteChain,  ClassId::TwoStar,
    ClassId::OneSplit,        ClassId::AugmentedClique,
    ClassId::BipartitePermutation, ClassId::TriangleFreeCoChordal,
    ClassId::Clique,          ClassId::CompleteBipartite,
};

inline const char* class_name(ClassId c) {
    switch (c) {
    case ClassId::Forest: return "forest";
    case ClassId::LinearForest: return "linear-forest";
    case ClassId::Star: return "star";
    case ClassId::Interval: return "interval";
    case ClassId::Split: return "split";
    case ClassId::Bipartite: return "bipartite";
    case ClassId::Chordal: return "chordal";
    case ClassId::Comparability: return "comparability";
    case ClassId::TriangleFree: return "triangle-free";
    case ClassId::Permutation: return "permutation";
    case ClassId::Threshold: return "threshold";
    case ClassId::ProperInterval: return "proper-interval";
    case ClassId::Caterpillar: return "caterpillar";
    case ClassId::TriviallyPerfect: return "trivially-perfect";
    case ClassId::BipartiteChain: return "bipartite-chain";
    case ClassId::TwoStar: return "two-star";
    case ClassId::OneSplit: return "one-split";
    case ClassId::AugmentedClique: return "augmented-clique";
    case ClassId::BipartitePermutation: return "bipartite-permutation";
    case ClassId::TriangleFreeCoChordal: return "triangle-free-co-chordal";
    case ClassId::Clique: return "clique";
    default: return "complete-bipartite";
    }
}

inline std::optional<ClassId> class_by_name(std::string_view name) {
    std::string key = detail::normalize_name(name);
    for (ClassId c : kAllClasses)
        if (detail::normalize_name(class_name(c)) == key) return c;
    return std::nullopt;
}

inline std::string valid_class_names() {
    std::string out;
    for (ClassId c : kAllClasses) {
        if (!out.empty()) out += ", ";
        out += class_name(c);
    }
    return out;
}

// Canonical defining family of each class.  Complemented classes use the
// pattern-wise complement of these bits.
inline FamilyBits defining_family_bits(ClassId c) {
    switch (c) {
    case ClassId::Forest: return family_bits({8});
    case ClassId::LinearForest: return family_bits({22});
    case ClassId::Star: return family_bits({24});
    case ClassId::Interval: return family_bits({9});
    case ClassId::Split: return family_bits({13});
    case ClassId::Bipartite: return family_bits({12});
    case ClassId::Chordal: return family_bits({4});
    case ClassId::Comparability: return family_bits({2});
    case ClassId::TriangleFree: return family_bits({0});
    case ClassId::Permutation: return family_bits({2, 5});
    case ClassId::Threshold: return family_bits({1, 6});
    case ClassId::ProperInterval: return family_bits({1, 4});
    case ClassId::Caterpillar: return family_bits({5, 8});
    case ClassId::TriviallyPerfect: return family_bits({1, 2});
    case ClassId::BipartiteChain: return family_bits({3, 12});
    case ClassId::TwoStar: return family_bits({3, 16});
    case ClassId::OneSplit: return family_bits({13, 14});
    case ClassId::AugmentedClique: return family_bits({4, 13});
    case ClassId::BipartitePermutation: return family_bits({0, 5});
    case ClassId::TriangleFreeCoChordal: return family_bits({0, 3});
    case ClassId::Clique: return family_bits({2, 4, 13});
    default: return family_bits({0, 3, 5}); // complete bipartite
    }
}

inline FamilyBits defining_family_bits(ClassId c, bool complemented) {
    FamilyBits f = defining_family_bits(c);
    return complemented ? complement_bits(f) : f;
}

inline PatternFamily defining_family(ClassId c, bool complemented = false) {
    return decode_family(defining_family_bits(c, complemented));
}

} // namespace ordpat

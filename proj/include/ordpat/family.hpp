#pragma once

// Pattern families (finite sets of patterns) and the 27-bit encoding of
// three-node families: bit i is set iff catalog pattern i is in the family.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ordpat/pattern.hpp"

namespace ordpat {

struct FamilyBits {
    std::uint32_t bits = 0;

    bool test(int i) const { return (bits >> i) & 1u; }
    void set(int i) { bits |= (1u << i); }
    int count() const { return __builtin_popcount(bits); }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < kCatalogSize; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const FamilyBits&) const = default;
    auto operator<=>(const FamilyBits&) const = default;
};

inline FamilyBits family_bits(std::initializer_list<int> idxs) {
    FamilyBits f;
    for (int i : idxs) f.set(i);
    return f;
}

inline std::string to_string(const FamilyBits& f) {
    std::string out = "{";
    bool first = true;
    for (int i : f.indices()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

// Set of patterns; duplicates collapse and order is canonical (catalog patterns
// first by index, then remaining patterns by size and pair states).
class PatternFamily {
public:
    PatternFamily() = default;

    explicit PatternFamily(std::vector<Pattern> patterns) {
        for (auto& p : patterns) add(std::move(p));
    }

    PatternFamily(std::initializer_list<Pattern> patterns) {
        for (const auto& p : patterns) add(p);
    }

    void add(Pattern p) {
        auto key = sort_key(p);
        auto it = patterns_.begin();
        auto kit = keys_.begin();
        while (it != patterns_.end() && *kit < key) { ++it; ++kit; }
        if (it != patterns_.end() && *it == p) return;
        patterns_.insert(it, std::move(p));
        keys_.insert(kit, key);
    }

    const std::vector<Pattern>& patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }
    bool empty() const { return patterns_.empty(); }

    bool contains(const Pattern& p) const {
        for (const auto& q : patterns_)
            if (q == p) return true;
        return false;
    }

    bool operator==(const PatternFamily& other) const { return patterns_ == other.patterns_; }

private:
    // Catalog patterns sort by catalog index; others after, by (size, states).
    static std::vector<int> sort_key(const Pattern& p) {
        std::vector<int> key;
        if (auto idx = catalog_index_of(p)) {
            key = {0, *idx};
        } else {
            key = {1, p.size()};
            for (PairState s : p.states()) key.push_back(static_cast<int>(s));
        }
        return key;
    }

    std::vector<Pattern> patterns_;
    std::vector<std::vector<int>> keys_;
};

inline PatternFamily mirror(const PatternFamily& f) {
    PatternFamily out;
    for (const auto& p : f.patterns()) out.add(mirror(p));
    return out;
}

inline PatternFamily complement(const PatternFamily& f) {
    PatternFamily out;
    for (const auto& p : f.patterns()) out.add(complement(p));
    return out;
}

inline FamilyBits encode_family(const PatternFamily& f) {
    FamilyBits bits;
    for (const auto& p : f.patterns()) {
        if (p.size() != 3)
            throw std::domain_error("only three-node families have a bit encoding");
        auto idx = catalog_index_of(p);
        if (!idx) throw std::domain_error("pattern is not in the three-node catalog");
        bits.set(*idx);
    }
    return bits;
}

inline PatternFamily decode_family(const FamilyBits& bits) {
    PatternFamily out;
    for (int i : bits.indices()) out.add(catalog_pattern(i));
    return out;
}

inline FamilyBits mirror_bits(const FamilyBits& f) {
    FamilyBits out;
    for (int i : f.indices()) out.set(*catalog_index_of(mirror(catalog_pattern(i))));
    return out;
}

inline FamilyBits complement_bits(const FamilyBits& f) {
    FamilyBits out;
    for (int i : f.indices()) out.set(*catalog_index_of(complement(catalog_pattern(i))));
    return out;
}

// Family extension: every pattern of `base` has an extension in `ext` and
// every pattern of `ext` extends some pattern of `base`.
inline bool family_extends(const PatternFamily& ext, const PatternFamily& base) {
    for (const auto& p : base.patterns()) {
        bool found = false;
        for (const auto& q : ext.patterns())
            if (is_extension(q, p)) { found = true; break; }
        if (!found) return false;
    }
    for (const auto& q : ext.patterns()) {
        bool found = false;
        for (const auto& p : base.patterns())
            if (is_extension(q, p)) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

// Comma-separated catalog indices or names, or one inline pattern expression.
inline PatternFamily parse_family(std::string_view text) {
    std::string t = detail::trim(text);
    if (t.empty()) throw std::invalid_argument("empty family");
    PatternFamily out;
    if (t.find(';') != std::string::npos) {
        out.add(parse_pattern(t));
        return out;
    }
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t comma = t.find(',', pos);
        std::string token = detail::trim(t.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (!token.empty()) out.add(parse_pattern(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty family");
    return out;
}

} // namespace ordpat

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ordpat/checker.hpp"
#include "ordpat/classes.hpp"
#include "ordpat/enumeration.hpp"
#include "support/gen.hpp"

using namespace ordpat;
using namespace ordpat::testgen;

TEST_CASE("bit operations on full-pattern families") {
    CHECK(exchange8(family_bits({1}).bits) == family_bits({4}).bits);
    CHECK(exchange8(family_bits({3}).bits) == family_bits({6}).bits);
    CHECK(exchange8(family_bits({0, 2, 5, 7}).bits) == family_bits({0, 2, 5, 7}).bits);
    CHECK(complement8(family_bits({0}).bits) == family_bits({7}).bits);
    CHECK(complement8(family_bits({1, 6}).bits) == family_bits({1, 6}).bits);

    // They agree with the pattern-level operations.
    for (int i = 0; i < 8; ++i) {
        CHECK(FamilyBits{exchange8(family_bits({i}).bits)} ==
              encode_family(PatternFamily{mirror(catalog_pattern(i))}));
        CHECK(FamilyBits{complement8(family_bits({i}).bits)} ==
              encode_family(PatternFamily{complement(catalog_pattern(i))}));
    }
}

TEST_CASE("split-minimal reduction examples") {
    CHECK(reduce_to_split_minimal(family_bits({4, 5})) == family_bits({18}));
    CHECK(reduce_to_split_minimal(family_bits({0, 1, 2, 3, 4, 5, 6, 7})) == family_bits({26}));
    CHECK(reduce_to_split_minimal(family_bits({0})) == family_bits({0}));
}

TEST_CASE("reduction is idempotent and leaves no splittable pair") {
    auto splittable = [](FamilyBits f) {
        for (const auto& t : kSplitTripletsA)
            if (f.test(t[0]) && f.test(t[1])) return true;
        for (const auto& t : kSplitTripletsB)
            if (f.test(t[0]) && f.test(t[1])) return true;
        for (const auto& t : kSplitTripletsC)
            if (f.test(t[0]) && f.test(t[1])) return true;
        return false;
    };
    for (std::uint32_t v = 1; v < 256; ++v) {
        FamilyBits reduced = reduce_to_split_minimal(FamilyBits{v});
        CHECK_FALSE(splittable(reduced));
        CHECK(reduce_to_split_minimal(reduced) == reduced);
    }
}

TEST_CASE("split triplets are genuine pattern splits") {
    auto check_triplet = [](const std::array<int, 3>& t) {
        Pattern whole = catalog_pattern(t[2]);
        bool found = false;
        for (auto [i, j] : whole.pairs()) {
            if (whole.at(i, j) != PairState::Undecided) continue;
            auto [as_edge, as_non] = split(whole, {i, j});
            if ((as_edge == catalog_pattern(t[0]) && as_non == catalog_pattern(t[1])) ||
                (as_edge == catalog_pattern(t[1]) && as_non == catalog_pattern(t[0])))
                found = true;
        }
        CHECK(found);
    };
    for (const auto& t : kSplitTripletsA) check_triplet(t);
    for (const auto& t : kSplitTripletsB) check_triplet(t);
    for (const auto& t : kSplitTripletsC) check_triplet(t);
}

TEST_CASE("87 representatives, 87 split-minimal families") {
    auto reps = enumerate_full_representatives();
    CHECK(reps.size() == 87);
    for (const auto& r : reps) CHECK((r.bits & ~0xffu) == 0);

    auto families = enumerate_split_minimal();
    CHECK(families.size() == 87);
    std::set<std::uint32_t> distinct;
    for (const auto& f : families) distinct.insert(f.bits);
    CHECK(distinct.size() == 87);

    std::set<std::uint32_t> expected;
    for (const auto& e : family_catalog()) expected.insert(e.family.bits);
    CHECK(distinct == expected);

    CHECK(distinct.count(family_bits({2, 5}).bits) == 1);
    CHECK(distinct.count(family_bits({26}).bits) == 1);
}

TEST_CASE("catalog labels resolve") {
    CHECK(class_label(family_bits({2, 5})).label.class_id == ClassId::Permutation);
    CHECK(class_label(family_bits({1, 6})).label.class_id == ClassId::Threshold);
    CHECK(class_label(family_bits({13, 14})).label.class_id == ClassId::OneSplit);
    CHECK(class_label(family_bits({10, 13})).label.complemented);
    CHECK(class_label(family_bits({26})).label.trivial);
    CHECK_THROWS_AS(class_label(family_bits({0, 1})), std::domain_error);

    int trivial = 0;
    for (const auto& e : family_catalog()) trivial += e.label.trivial ? 1 : 0;
    CHECK(trivial == 34);
}

TEST_CASE("split rule is sound end to end") {
    // Every 8-bit family keeps the same members after reduction.
    std::vector<UndirectedGraph> graphs;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) graphs.push_back(g);
    for (std::uint32_t v = 1; v < 256; ++v) {
        PatternFamily full = decode_family(FamilyBits{v});
        PatternFamily reduced = decode_family(reduce_to_split_minimal(FamilyBits{v}));
        for (const auto& g : graphs)
            CHECK(oracle_member(g, full) == oracle_member(g, reduced));
    }
}

TEST_CASE("equivalence removal is sound") {
    // Every removed 8-bit family defines the same class as its kept
    // representative, up to complementation of the graph.
    auto reps = enumerate_full_representatives();
    std::set<std::uint32_t> kept;
    for (const auto& r : reps) kept.insert(r.bits);

    std::vector<UndirectedGraph> graphs;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) graphs.push_back(g);

    for (std::uint32_t q = 1; q < 256; ++q) {
        if (kept.count(q)) continue;
        std::uint32_t mirror_rep = exchange8(q);
        std::uint32_t comp_reps[2] = {complement8(q), exchange8(complement8(q))};
        PatternFamily fq = decode_family(FamilyBits{q});
        if (kept.count(mirror_rep)) {
            PatternFamily fp = decode_family(FamilyBits{mirror_rep});
            for (const auto& g : graphs) CHECK(oracle_member(g, fq) == oracle_member(g, fp));
        } else {
            std::uint32_t p = kept.count(comp_reps[0]) ? comp_reps[0] : comp_reps[1];
            REQUIRE(kept.count(p) == 1);
            PatternFamily fp = decode_family(FamilyBits{p});
            for (const auto& g : graphs)
                CHECK(oracle_member(g, fq) == oracle_member(g.complement(), fp));
        }
    }
}

TEST_CASE("catalog fidelity at desk scale") {
    // Oracle membership in each catalog family equals the labeled class
    // predicate, over all non-isomorphic graphs with up to 5 vertices.
    std::vector<UndirectedGraph> graphs;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) graphs.push_back(g);
    for (const auto& entry : family_catalog()) {
        if (entry.label.trivial) continue;
        PatternFamily fam = decode_family(entry.family);
        for (const auto& g : graphs) {
            bool oracle = oracle_member(g, fam);
            bool definition = definition_check_label(g, entry.label);
            INFO("family " << to_string(entry.family) << " index " << entry.index << " on graph n="
                           << g.n() << " mask=" << mask_of(g));
            CHECK(oracle == definition);
        }
    }
}

TEST_CASE("trivial families really are trivial at desk scale") {
    // Ramsey-type example: no 6-vertex graph has an ordering avoiding both
    // all-edge and all-non-edge triangle patterns.
    for (const auto& g : nonisomorphic_graphs(6))
        CHECK_FALSE(oracle_member(g, decode_family(family_bits({0, 7}))));
}

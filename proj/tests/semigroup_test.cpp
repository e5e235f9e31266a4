#include <gtest/gtest.h>

#include <vector>

#include "nsg/semigroup.hpp"

using namespace nsg;
using V = std::vector<value_t>;

namespace {

V gens_of(const NumericalSemigroup& s) { return V(s.generators().begin(), s.generators().end()); }

} // namespace

TEST(FromGenerators, AlreadyMinimal) {
    const auto s = NumericalSemigroup::from_generators({7, 8, 17, 18});
    EXPECT_EQ(gens_of(s), (V{7, 8, 17, 18}));
    EXPECT_EQ(s.multiplicity(), 7);
    EXPECT_EQ(s.embedding_dimension(), 4u);
}

TEST(FromGenerators, DropsRepresentable) {
    // 25 = 7 + 18
    const auto s = NumericalSemigroup::from_generators({7, 8, 17, 18, 25});
    EXPECT_EQ(gens_of(s), (V{7, 8, 17, 18}));
}

TEST(FromGenerators, OrderAndDuplicatesDoNotMatter) {
    const auto s = NumericalSemigroup::from_generators({18, 7, 25, 8, 17, 7, 14});
    EXPECT_EQ(gens_of(s), (V{7, 8, 17, 18}));
}

TEST(FromGenerators, One) {
    const auto s = NumericalSemigroup::from_generators({1});
    EXPECT_EQ(gens_of(s), (V{1}));
    EXPECT_EQ(frobenius(s), -1);
    EXPECT_EQ(NumericalSemigroup::from_generators({5, 1, 3}), s);
}

TEST(FromGenerators, Errors) {
    EXPECT_THROW(NumericalSemigroup::from_generators({4, 6}), non_coprime);
    EXPECT_THROW(NumericalSemigroup::from_generators(std::span<const value_t>{}), empty_input);
    EXPECT_THROW(NumericalSemigroup::from_generators({3, 0, 5}), non_positive_generator);
    EXPECT_THROW(NumericalSemigroup::from_generators({3, -5}), non_positive_generator);
    try {
        NumericalSemigroup::from_generators({4, 6, 10});
        FAIL();
    } catch (const non_coprime& e) {
        EXPECT_EQ(e.gcd(), 2);
    }
}

TEST(FromGenerators, Idempotent) {
    const auto s = NumericalSemigroup::from_generators({11, 13, 15, 26, 39});
    EXPECT_EQ(NumericalSemigroup::from_generators(s.generators()), s);
}

TEST(Contains, Basics) {
    const auto s = NumericalSemigroup::from_generators({7, 8, 17, 18});
    EXPECT_FALSE(s.contains(27));
    EXPECT_TRUE(s.contains(28));
    EXPECT_TRUE(s.contains(0));
    EXPECT_FALSE(s.contains(-7));
    EXPECT_TRUE(contains(s, 34));
    for (value_t n = 28; n < 200; ++n) EXPECT_TRUE(s.contains(n)) << n;
}

TEST(AperySet, WithRespectToMultiplicity) {
    const auto s = NumericalSemigroup::from_generators({7, 8, 17, 18});
    const auto ap = apery_set(s, 7);
    EXPECT_EQ(ap.sorted(), (V{0, 8, 16, 17, 18, 26, 34}));
    EXPECT_EQ(ap.size(), 7u);
    EXPECT_EQ(ap[0], 0);

    const auto t = NumericalSemigroup::from_generators({8, 9, 22, 23});
    EXPECT_EQ(apery_set(t, 8).sorted(), (V{0, 9, 18, 22, 23, 27, 36, 45}));
}

TEST(AperySet, OtherBases) {
    const auto s = NumericalSemigroup::from_generators({3, 5, 7});
    // Ap(<3,5,7>, 5): least elements per residue mod 5
    EXPECT_EQ(apery_set(s, 5).sorted(), (V{0, 3, 6, 7, 9}));
    // non-generator base
    const auto ap10 = apery_set(s, 10);
    EXPECT_EQ(ap10.size(), 10u);
    for (value_t w : ap10.by_residue()) {
        EXPECT_TRUE(s.contains(w));
        EXPECT_FALSE(s.contains(w - 10));
    }
}

TEST(AperySet, NotMember) {
    const auto s = NumericalSemigroup::from_generators({7, 8, 17, 18});
    EXPECT_THROW(apery_set(s, 27), not_member);
    EXPECT_THROW(apery_set(s, 0), not_member);
    EXPECT_THROW(apery_set(s, -7), not_member);
}

TEST(AperySet, NaturalNumbers) {
    const auto n = NumericalSemigroup::from_generators({1});
    EXPECT_EQ(apery_set(n, 1).sorted(), (V{0}));
}

TEST(AperySet, FromValuesRejectsBadSystems) {
    const V dup{0, 7, 3};
    EXPECT_THROW(AperySet::from_values(3, dup), error);
    const V short_list{0, 1};
    EXPECT_THROW(AperySet::from_values(3, short_list), error);
    const V ok{0, 4, 8};
    EXPECT_EQ(AperySet::from_values(3, ok)[1], 4);
}

TEST(Frobenius, Examples) {
    EXPECT_EQ(frobenius(NumericalSemigroup::from_generators({7, 8, 17, 18})), 27);
    EXPECT_EQ(frobenius(NumericalSemigroup::from_generators({2, 3})), 1);
    EXPECT_EQ(frobenius(NumericalSemigroup::from_generators({8, 9, 22, 23})), 37);
}

TEST(Genus, FromApery) {
    EXPECT_EQ(genus_from_apery(NumericalSemigroup::from_generators({7, 8, 17, 18})), 14);
    EXPECT_EQ(genus_from_apery(NumericalSemigroup::from_generators({1})), 0);
    EXPECT_EQ(genus_from_apery(NumericalSemigroup::from_generators({8, 9, 22, 23})), 19);
}

TEST(GapProfile, Examples) {
    EXPECT_EQ(gap_profile(NumericalSemigroup::from_generators({2, 3})), (GapProfile{1, 1, {1}}));
    EXPECT_EQ(gap_profile(NumericalSemigroup::from_generators({3, 5, 7})), (GapProfile{4, 3, {1, 2, 4}}));
    const auto g = gap_profile(NumericalSemigroup::from_generators({7, 8, 17, 18}));
    EXPECT_EQ(g.genus, 14);
    EXPECT_EQ(g.frobenius, 27);
    EXPECT_EQ(gap_profile(NumericalSemigroup::from_generators({1})), (GapProfile{-1, 0, {}}));
}

TEST(Symmetry, Examples) {
    EXPECT_TRUE(is_symmetric(NumericalSemigroup::from_generators({7, 8, 17, 18})));
    EXPECT_FALSE(is_symmetric(NumericalSemigroup::from_generators({3, 4, 5})));
    EXPECT_TRUE(is_symmetric(NumericalSemigroup::from_generators({2, 3})));
    // odd F but not symmetric: <3,5,7> has F = 4 (even); <4,5,11> has F = 7, genus 5
    const auto s = NumericalSemigroup::from_generators({4, 5, 11});
    EXPECT_EQ(frobenius(s), 7);
    EXPECT_FALSE(is_symmetric(s));
}

TEST(CheckedArithmetic, Overflow) {
    EXPECT_THROW(add(infinity, 1), overflow);
    EXPECT_THROW(mul(infinity / 2 + 1, 2), overflow);
    EXPECT_THROW(sub(-infinity - 1, 1), overflow);
    EXPECT_EQ(mul(-3, 4), -12);
}

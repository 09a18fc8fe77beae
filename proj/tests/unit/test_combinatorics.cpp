#include <gtest/gtest.h>

#include "specht/combinatorics.hpp"

using namespace specht;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST(Partition, RejectsIncreasingParts) {
    EXPECT_THROW(P({2, 3}), std::invalid_argument);
    EXPECT_THROW(P({3, 0}), std::invalid_argument);
    EXPECT_EQ(P({4, 3, 1}).n(), 8);
}

TEST(Partition, MakeShapeDropsTrailingZeros) {
    auto s = make_shape({4, 3, 0});
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, P({4, 3}));
    EXPECT_FALSE(make_shape({1, 2}));
}

TEST(Partition, HookLikeShape) {
    EXPECT_EQ(*hook_like_shape(4, 3, 0), P({4, 3}));
    EXPECT_EQ(*hook_like_shape(2, 2, 3), P({2, 2, 1, 1, 1}));
    EXPECT_FALSE(hook_like_shape(1, 2, 0));
    EXPECT_FALSE(hook_like_shape(3, 0, 2));
    EXPECT_EQ(*hook_like_shape(3, 0, 0), P({3}));
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(conjugate(P({4, 3})), P({2, 2, 2, 1}));
    EXPECT_EQ(conjugate(P({5})), P({1, 1, 1, 1, 1}));
    EXPECT_EQ(conjugate(P({2, 2, 1, 1, 1})), P({5, 2}));
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, HookLengths) {
    const std::vector<std::vector<int>> expected{{5, 4, 3, 1}, {3, 2, 1}};
    EXPECT_EQ(hook_lengths(P({4, 3})), expected);
}

TEST(Partition, DimensionByHookFormula) {
    EXPECT_EQ(dim_specht(P({7})), 1u);
    EXPECT_EQ(dim_specht(P({4, 3})), 14u);
    EXPECT_EQ(dim_specht(P({2, 2, 1, 1, 1})), 14u);
    EXPECT_EQ(dim_specht(P({4, 2})), 9u);
    EXPECT_EQ(dim_specht(P({2, 2})), 2u);
    EXPECT_EQ(dim_specht(std::optional<Partition>{}), 0u);
}

TEST(Partition, DimensionMatchesSytCount) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) EXPECT_EQ(enumerate_syt(p).size(), dim_specht(p)) << p.to_string();
}

TEST(Partition, SumOfSquaredDimensionsIsFactorial) {
    for (int n = 1; n <= 8; ++n) {
        mpz_class s = 0;
        for (const auto& p : partitions_of(n)) s += mpz_class(static_cast<unsigned long>(dim_specht(p))) * dim_specht(p);
        EXPECT_EQ(s, factorial(n));
    }
}

TEST(Partition, PartitionCounts) {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), counts[static_cast<std::size_t>(n)]);
}

TEST(Partition, Branching) {
    EXPECT_EQ(branching_dims(P({5})), std::vector<Partition>{P({4})});
    const std::vector<Partition> expected{P({3, 3, 1}), P({4, 2, 1}), P({4, 3})};
    EXPECT_EQ(branching_dims(P({4, 3, 1})), expected);
    for (int n = 2; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) {
            std::uint64_t s = 0;
            for (const auto& q : branching_dims(p)) s += dim_specht(q);
            EXPECT_EQ(s, dim_specht(p));
        }
}

TEST(Binomial, Conventions) {
    EXPECT_EQ(binomial(9, 3), 84);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Permutation, CompositionAndSign) {
    const Permutation a({2, 3, 1});
    const Permutation b = Permutation::transposition(3, 1, 2);
    EXPECT_EQ((a * b)(1), 3);  // a(b(1)) = a(2)
    EXPECT_EQ(a.sign(), 1);
    EXPECT_EQ(b.sign(), -1);
    EXPECT_EQ((a * a.inverse())(2), 2);
    EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST(Tableau, ValidatesFilling) {
    EXPECT_THROW(Tableau({{1, 2}, {2}}), std::invalid_argument);
    EXPECT_THROW(Tableau({{1}, {2, 3}}), std::invalid_argument);
    EXPECT_NO_THROW(Tableau({{4, 2, 1, 7}, {3, 5}, {6}}));
}

TEST(Tableau, Standardness) {
    EXPECT_TRUE(Tableau({{1, 3}, {2}}).is_standard());
    EXPECT_FALSE(Tableau({{2, 1}, {3}}).is_standard());
    EXPECT_FALSE(Tableau({{1, 2}, {3, 4}, {5}}).relabel(Permutation::transposition(5, 1, 3)).is_standard());
}

TEST(Tableau, SortColumnsSign) {
    Tableau t({{3, 1}, {2, 4}, {5}});
    const int s = t.sort_columns();
    EXPECT_EQ(t.rows(), (std::vector<std::vector<int>>{{2, 1}, {3, 4}, {5}}));
    EXPECT_EQ(s, -1);
}

TEST(Syt, SmallShapes) {
    const auto one = enumerate_syt(P({1, 1}));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].rows(), (std::vector<std::vector<int>>{{1}, {2}}));
    const auto two = enumerate_syt(P({2, 1}));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].rows(), (std::vector<std::vector<int>>{{1, 2}, {3}}));
    EXPECT_EQ(two[1].rows(), (std::vector<std::vector<int>>{{1, 3}, {2}}));
    EXPECT_EQ(enumerate_syt(P({2, 2})).size(), 2u);
}

TEST(Syt, AllStandardAndDistinct) {
    for (const auto& p : partitions_of(7)) {
        const auto syt = enumerate_syt(p);
        for (std::size_t k = 0; k < syt.size(); ++k) {
            EXPECT_TRUE(syt[k].is_standard());
            if (k) {
                EXPECT_LT(syt[k - 1].reading_word(), syt[k].reading_word());
            }
        }
    }
}

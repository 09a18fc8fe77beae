#include <gtest/gtest.h>

#include <random>

#include "specht/linalg.hpp"

using namespace specht;

TEST(ModArithmetic, Basics) {
    EXPECT_EQ(mod_mul(kPrime - 1, kPrime - 1), 1u);
    EXPECT_EQ(mod_add(kPrime - 1, 2), 1u);
    EXPECT_EQ(mod_mul(mod_inv(12345), 12345), 1u);
    EXPECT_EQ(mod_from_mpq(mpq_class(1, 2)), (kPrime + 1) / 2);
    EXPECT_EQ(mod_from_mpz(mpz_class(-1)), kPrime - 1);
    EXPECT_THROW(mod_inv(0), std::domain_error);
}

TEST(ModularEchelon, SmallRanks) {
    // rows (1,1,0), (0,1,1), (1,2,1): rank 2
    std::vector<ModRow> rows{{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{0, 1}, {1, 2}, {2, 1}}};
    EXPECT_EQ(rank_mod_p(rows, 3), 2u);
    EXPECT_EQ(rank_mod_p({}, 4), 0u);
}

TEST(ExactEchelon, SmallRanks) {
    std::vector<IntRow> rows{{{0, 2}, {1, 4}}, {{0, 3}, {1, 6}}, {{1, 5}}};
    EXPECT_EQ(rank_exact(rows, 2), 2u);
    EXPECT_EQ(integral_row({{0, mpq_class(1, 2)}, {3, mpq_class(2, 3)}}),
              (IntRow{{0, mpz_class(3)}, {3, mpz_class(4)}}));
}

TEST(Echelon, ModularAndExactAgreeOnRandomIntegerMatrices) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t rows = 6 + rep % 5, cols = 8;
        std::vector<ModRow> mr;
        std::vector<IntRow> ir;
        // low-rank construction: rows are combinations of 4 random rows
        std::vector<std::vector<int>> base(4, std::vector<int>(cols));
        for (auto& b : base)
            for (auto& x : b) x = val(rng);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<long> row(cols, 0);
            for (auto& b : base) {
                const int f = val(rng);
                for (std::size_t c = 0; c < cols; ++c) row[c] += f * b[c];
            }
            ModRow m;
            IntRow i;
            for (std::size_t c = 0; c < cols; ++c) {
                if (row[c] == 0) continue;
                m.emplace_back(static_cast<std::uint32_t>(c), mod_from_mpz(mpz_class(row[c])));
                i.emplace_back(static_cast<std::uint32_t>(c), mpz_class(row[c]));
            }
            mr.push_back(m);
            ir.push_back(i);
        }
        const auto q = rank_exact(ir, cols);
        EXPECT_LE(q, 4u);
        EXPECT_EQ(rank_mod_p(mr, cols), q);
    }
}

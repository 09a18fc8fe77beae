#include <gtest/gtest.h>

#include "specht/report.hpp"
#include "specht/verify.hpp"

using namespace specht;

TEST(Betti, SevenThreeTable) {
    const auto t = betti_table(7, 3);
    EXPECT_EQ(t.at(0, 3), 14u);
    EXPECT_EQ(t.at(1, 4), 21u);
    EXPECT_EQ(t.at(2, 6), 14u);
    EXPECT_EQ(t.at(3, 7), 6u);
    EXPECT_EQ(t.entries.size(), 4u);
    EXPECT_TRUE(statement_star_check(t));
}

TEST(Betti, SixTwoHasNineGenerators) { EXPECT_EQ(module_ranks(6, 2).front(), 9u); }

TEST(Betti, PlacementRejectsMisplacedEntry) {
    auto t = betti_table(7, 3);
    t.entries[{2, 5}] = 1;
    EXPECT_FALSE(statement_star_check(t));
}

TEST(ClosedForms, AgreeOverRange) {
    for (int n = 2; n <= 12; ++n)
        for (int d = 1; 2 * d <= n; ++d) EXPECT_TRUE(betti_alternating_sum_check(n, d)) << n << "," << d;
}

TEST(ClosedForms, IndexRange) {
    EXPECT_THROW(betti_closed_form(7, 3, 5), std::out_of_range);
    EXPECT_THROW(betti_closed_form(7, 3, -1), std::out_of_range);
    EXPECT_NO_THROW(betti_closed_form(7, 3, 4));
}

TEST(Hilbert, SixTwo) {
    const auto h = hilbert_series(6, 2);
    EXPECT_EQ(h.numerator, (std::vector<mpz_class>{1, 4, 1}));
    EXPECT_EQ(h.denominator_exponent, 2);
    EXPECT_EQ(h.top_degree(), 2);
    EXPECT_EQ(h.coefficient(0), 1);
    EXPECT_EQ(h.coefficient(1), 6);
}

TEST(Hilbert, EqualRowsTopCoefficient) {
    for (int d = 2; d <= 6; ++d) EXPECT_EQ(hilbert_series(2 * d, d).numerator.back(), binomial(2 * d - 1, d - 2));
}

TEST(Hilbert, MatchesIdealDimensions) {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
        for (const auto& r : hilbert_crosscheck(n, d, d + 3, nullptr)) {
            ASSERT_TRUE(r.measured);
            EXPECT_TRUE(r.agree()) << n << "," << d << " j=" << r.j;
        }
    }
}

TEST(Euler, FormulaAndComplexAgree) {
    for (int n = 2; n <= 12; ++n)
        for (int d = 1; 2 * d <= n; ++d) EXPECT_TRUE(euler_characteristic_check(n, d)) << n << "," << d;
    EXPECT_TRUE(euler_characteristic_check(build_complex(6, 3)));
}

TEST(Euler, DetectsWrongRank) {
    std::vector<int> twists{-3, -4, -6, -7};
    EXPECT_EQ(euler_lhs({14, 21, 14, 6}, twists), euler_rhs(7, 3));
    EXPECT_NE(euler_lhs({14, 21, 14, 5}, twists), euler_rhs(7, 3));
}

TEST(Structure, ChainAndMinimality) {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 1}, {6, 2}, {7, 3}}) {
        const auto cx = build_complex(n, d);
        EXPECT_TRUE(chain_complex_check(cx).passed) << n << "," << d;
        EXPECT_TRUE(minimality_check(cx).passed) << n << "," << d;
    }
}

TEST(Structure, MinimalityFlagsUnitEntry) {
    auto cx = build_complex(5, 2);
    cx.differentials[0].entries.begin()->second = Polynomial::constant(5, 1);
    const auto r = minimality_check(cx);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.failures.front().index, 1);
}

TEST(Structure, Equivariance) {
    const auto cx = build_complex(6, 2);
    for (int i = 1; i <= 3; ++i) {
        EXPECT_TRUE(equivariance_check(cx, i, Permutation::transposition(6, 1, 2)));
        EXPECT_TRUE(equivariance_check(cx, i, Permutation::transposition(6, 3, 6)));
    }
}

TEST(Structure, LowestDegreeInjective) {
    const auto cx = build_complex(7, 3);
    EXPECT_TRUE(lowest_degree_injectivity(cx, 3));
}

TEST(Relations, RandomTableauxSevenThree) {
    const auto cx = build_complex(7, 3);
    std::mt19937 rng(3);
    for (int i = 0; i <= 3; ++i) {
        const auto& shape = cx.modules[static_cast<std::size_t>(i)].shape;
        std::vector<Tableau> ts;
        std::vector<int> w(7);
        for (int k = 0; k < 40; ++k) {
            std::iota(w.begin(), w.end(), 1);
            std::shuffle(w.begin(), w.end(), rng);
            ts.push_back(tableau_from_word(shape, w));
        }
        const auto rep = check_relations(cx, i, ts);
        EXPECT_GT(rep.relations, 0u);
        EXPECT_TRUE(rep.passed()) << "i=" << i;
    }
}

TEST(Exactness, SmallComplexes) {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
        const auto cx = build_complex(n, d);
        for (const auto& g : graded_exactness(cx)) EXPECT_TRUE(g.ok()) << n << "," << d << " j=" << g.j;
    }
}

TEST(Exactness, DirectAndReducedMethodsAgree) {
    const auto cx = build_complex(6, 2);
    ExactnessOptions a, b;
    a.method = ExactnessMethod::Direct;
    b.method = ExactnessMethod::Reduced;
    const auto ra = graded_exactness(cx, a), rb = graded_exactness(cx, b);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t k = 0; k < ra.size(); ++k) {
        EXPECT_TRUE(ra[k].ok());
        EXPECT_TRUE(rb[k].ok());
        EXPECT_EQ(ra[k].euler, rb[k].euler);
    }
}

TEST(Exactness, FaultIsDetected) {
    auto cx = build_complex(6, 2);
    inject_sign_fault(cx, 2);
    const auto rep = verify_complex(cx);
    EXPECT_FALSE(rep.passed());
    EXPECT_EQ(rep.checks.front().name, "chain_complex");
    EXPECT_FALSE(rep.checks.front().passed);
}

TEST(Filtration, SevenThreeClassSizes) {
    const auto f = filtration_check(build_complex(7, 3));
    ASSERT_FALSE(f.levels.empty());
    const auto& l1 = *std::find_if(f.levels.begin(), f.levels.end(), [](const auto& l) { return l.i == 1; });
    EXPECT_EQ(l1.class_sizes, (std::array<std::size_t, 3>{0, 16, 5}));
    EXPECT_TRUE(f.ok());
}

TEST(Filtration, RequiresStrictInequality) { EXPECT_THROW(filtration_check(build_complex(6, 3)), std::invalid_argument); }

TEST(Filtration, BoxClasses) {
    EXPECT_EQ(classify_box_n(Tableau({{1, 2, 7}, {3, 4, 5}, {6}})), BoxClass::EndOfFirstRow);
    EXPECT_EQ(classify_box_n(Tableau({{1, 2, 3}, {4, 5, 7}, {6}})), BoxClass::EndOfSecondRow);
    EXPECT_EQ(classify_box_n(Tableau({{1, 2, 3}, {4, 5, 6}, {7}})), BoxClass::BottomOfFirstColumn);
}

TEST(PrimeIntersection, CollapseSize) {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {7, 3}}) {
        const auto r = prime_intersection_check(n, d);
        EXPECT_EQ(r.collapse_size, n - d + 1);
        EXPECT_TRUE(r.all_vanish);
        EXPECT_TRUE(r.sharp);
    }
}

TEST(PrimeIntersection, CollapseSubstitution) {
    const auto p = difference(3, 1, 3);
    EXPECT_TRUE(collapse(p, {1, 3}).is_zero());
    EXPECT_FALSE(collapse(p, {1, 2}).is_zero());
}

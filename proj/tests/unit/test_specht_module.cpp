#include <gtest/gtest.h>

#include <random>

#include "specht/specht_module.hpp"

using namespace specht;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

Tableau random_tableau(const Partition& shape, std::mt19937_64& rng) {
    std::vector<int> word(static_cast<std::size_t>(shape.n()));
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    return tableau_from_word(shape, word);
}
}  // namespace

TEST(Polytabloid, RowShapeIsSingleTabloid) {
    const Tableau t({{3, 1, 2}});
    const auto v = polytabloid(t);
    EXPECT_EQ(v.size(), 1u);
    EXPECT_EQ(v.coefficient(Tabloid::of(t)), 1);
}

TEST(Polytabloid, TwoTermExamples) {
    const auto v = polytabloid(Tableau({{1}, {2}}));
    EXPECT_EQ(v.size(), 2u);
    EXPECT_EQ(v.coefficient(Tabloid::of(Tableau({{1}, {2}}))), 1);
    EXPECT_EQ(v.coefficient(Tabloid::of(Tableau({{2}, {1}}))), -1);
    const auto w = polytabloid(Tableau({{1, 2}, {3}}));
    EXPECT_EQ(w.size(), 2u);
    EXPECT_EQ(w.coefficient(Tabloid::of(Tableau({{1, 2}, {3}}))), 1);
    EXPECT_EQ(w.coefficient(Tabloid::of(Tableau({{3, 2}, {1}}))), -1);
}

TEST(Polytabloid, ColumnStabilizerOrder) {
    EXPECT_EQ(column_stabilizer_order(Tableau({{1, 2, 3}, {4, 5}, {6}})), 12);
    std::size_t count = 0;
    for_each_column_stabilizer_element(Tableau({{1}, {2}}), [&](const Permutation&, int) { ++count; });
    EXPECT_EQ(count, 2u);
}

TEST(Tabloid, KeyRoundTrip) {
    const Tableau t({{4, 2, 1, 7}, {3, 5}, {6}});
    const auto tab = Tabloid::of(t);
    EXPECT_EQ(Tabloid::from_key(t.shape(), tab.key()), tab);
}

TEST(Straighten, StandardIsUnit) {
    Straightener s(P({3, 2}));
    for (std::size_t k = 0; k < s.basis().dim(); ++k)
        EXPECT_EQ(s.straighten(s.basis()[k]), SpechtVector::unit(P({3, 2}), k));
}

TEST(Straighten, ColumnSwapNegates) {
    Straightener g(P({3, 2}));
    SolvingStraightener o(P({3, 2}));
    const Tableau t = g.basis()[1];
    auto rows = t.rows();
    std::swap(rows[0][0], rows[1][0]);
    const Tableau swapped(rows);
    SpechtVector expected = SpechtVector::unit(P({3, 2}), 1);
    expected *= mpq_class(-1);
    EXPECT_EQ(g.straighten(swapped), expected);
    EXPECT_EQ(o.straighten(swapped), expected);
}

TEST(Straighten, NonStandardTwoByTwo) {
    const Tableau t({{1, 3}, {4, 2}});
    Straightener g(P({2, 2}));
    SolvingStraightener o(P({2, 2}));
    const auto v = g.straighten(t);
    EXPECT_EQ(v.coords.size(), 2u);
    EXPECT_EQ(v, o.straighten(t));
    // expanding reproduces the polytabloid
    EXPECT_EQ(to_tabloids(v, g.basis()), polytabloid(t));
}

TEST(Straighten, AgreesWithSolverExhaustivelyOnTwoTwoOne) {
    const auto shape = P({2, 2, 1});
    Straightener g(shape);
    SolvingStraightener o(shape);
    std::vector<int> word{1, 2, 3, 4, 5};
    std::size_t checked = 0;
    do {
        const Tableau t = tableau_from_word(shape, word);
        ASSERT_EQ(g.straighten(t), o.straighten(t)) << t.to_string();
        ++checked;
    } while (std::next_permutation(word.begin(), word.end()));
    EXPECT_EQ(checked, 120u);
}

TEST(Straighten, ColumnStabilizerSign) {
    std::mt19937_64 rng(7);
    const auto shape = P({3, 2, 1, 1});
    Straightener g(shape);
    for (int rep = 0; rep < 50; ++rep) {
        const Tableau t = random_tableau(shape, rng);
        const auto base = g.straighten(t);
        for_each_column_stabilizer_element(t, [&](const Permutation& sigma, int sign) {
            SpechtVector expected = base;
            expected *= mpq_class(sign);
            EXPECT_EQ(g.straighten(t.relabel(sigma)), expected);
        });
    }
}

TEST(Straighten, ResultsIndependentOfMemoization) {
    std::mt19937_64 rng(11);
    const auto shape = P({3, 3, 1});
    Straightener a(shape), b(shape);
    b.set_memoization(false);
    for (int rep = 0; rep < 200; ++rep) {
        const Tableau t = random_tableau(shape, rng);
        EXPECT_EQ(a.straighten(t), b.straighten(t));
    }
}

TEST(SpechtPolynomial, IntroductionExample) {
    const int n = 7;
    const Polynomial f = specht_polynomial(Tableau({{4, 2, 1, 7}, {3, 5}, {6}}));
    const Polynomial expected = difference(n, 4, 3) * difference(n, 3, 6) * difference(n, 4, 6) * difference(n, 2, 5);
    EXPECT_EQ(f, expected);
    EXPECT_EQ(f.size(), 12u);  // 6 Vandermonde monomials times 2
    EXPECT_EQ(f.degree(), 4);
    std::vector<mpq_class> all_equal(7, mpq_class(3));
    EXPECT_EQ(f.substitute(all_equal), 0);
    // x = (0,...,6): (3-2)(2-5)(3-5)(1-4) = -18
    std::vector<mpq_class> x;
    for (int k = 0; k < 7; ++k) x.emplace_back(k);
    EXPECT_EQ(f.substitute(x), -18);
}

TEST(SpechtPolynomial, RowAndHookShapes) {
    EXPECT_EQ(specht_polynomial(Tableau({{1, 2, 3}})), Polynomial::constant(3, 1));
    EXPECT_EQ(specht_polynomial(Tableau({{1, 2, 4}, {3}})), difference(4, 1, 3));
}

TEST(SpechtPolynomial, IsomorphismRespectsStraightening) {
    std::mt19937_64 rng(3);
    for (const auto& shape : {P({3, 2}), P({2, 2, 1, 1}), P({4, 2, 1})}) {
        Straightener g(shape);
        for (int rep = 0; rep < 100; ++rep) {
            const Tableau t = random_tableau(shape, rng);
            EXPECT_EQ(specht_vector_to_polynomial(g.straighten(t), g.basis()), specht_polynomial(t));
        }
    }
    EXPECT_TRUE(specht_vector_to_polynomial(SpechtVector{P({2, 1}), {}}, SpechtBasis(P({2, 1}))).is_zero());
}

TEST(Action, IdentityAndCompatibility) {
    std::mt19937_64 rng(5);
    const auto shape = P({3, 2, 1});
    Straightener g(shape);
    SpechtVector v{shape, {}};
    v.add(0, 2);
    v.add(3, mpq_class(-1, 3));
    v.add(7, 5);
    EXPECT_EQ(act(Permutation::identity(6), v, g), v);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<int> img{1, 2, 3, 4, 5, 6};
        std::shuffle(img.begin(), img.end(), rng);
        const Permutation sigma(img);
        EXPECT_EQ(specht_vector_to_polynomial(act(sigma, v, g), g.basis()),
                  act_permutation(sigma, specht_vector_to_polynomial(v, g.basis())));
    }
}

TEST(Garnir, ThreeTermRelationAtSevenThree) {
    const auto shape = P({3, 3, 1});
    Straightener g(shape);
    const std::array<Tableau, 3> ts{Tableau({{1, 4, 6}, {2, 5, 7}, {3}}), Tableau({{1, 4, 5}, {2, 6, 7}, {3}}),
                                    Tableau({{1, 4, 5}, {2, 7, 6}, {3}})};
    EXPECT_TRUE(garnir_relation_check(ts, {1, -1, 1}, g));
    EXPECT_FALSE(garnir_relation_check(ts, {1, 1, 1}, g));
    const Polynomial sum = specht_polynomial(ts[0]) - specht_polynomial(ts[1]) + specht_polynomial(ts[2]);
    EXPECT_TRUE(sum.is_zero());
}

TEST(Garnir, MalformedTriplesRejected) {
    Straightener g(P({3, 3, 1}));
    const Tableau t({{1, 4, 6}, {2, 5, 7}, {3}});
    EXPECT_THROW(garnir_relation_check({t, t, t}, {1, -1, 1}, g), std::invalid_argument);
    const std::array<Tableau, 3> far{t, Tableau({{7, 6, 5}, {4, 3, 2}, {1}}), Tableau({{2, 1, 3}, {4, 5, 6}, {7}})};
    EXPECT_THROW(garnir_relation_check(far, {1, -1, 1}, g), std::invalid_argument);
}

TEST(SpechtPolynomial, StandardPolynomialsIndependent) {
    // rank of {f_T} equals the number of standard tableaux
    for (const auto& shape : {P({3, 2}), P({2, 2, 1}), P({4, 2})}) {
        const auto basis = enumerate_syt(shape);
        std::vector<std::vector<mpq_class>> rows;
        std::map<Monomial, std::size_t> col;
        std::vector<Polynomial> polys;
        for (const auto& t : basis) {
            polys.push_back(specht_polynomial(t));
            for (const auto& [m, c] : polys.back().terms()) col.emplace(m, col.size());
        }
        for (const auto& p : polys) {
            std::vector<mpq_class> r(col.size(), 0);
            for (const auto& [m, c] : p.terms()) r[col[m]] = c;
            rows.push_back(r);
        }
        // Gaussian elimination
        std::size_t rank = 0;
        for (std::size_t c = 0; c < col.size() && rank < rows.size(); ++c) {
            std::size_t piv = rank;
            while (piv < rows.size() && rows[piv][c] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][c] == 0) continue;
                const mpq_class f = rows[r][c] / rows[rank][c];
                for (std::size_t k = 0; k < col.size(); ++k) rows[r][k] -= f * rows[rank][k];
            }
            ++rank;
        }
        EXPECT_EQ(rank, basis.size()) << shape.to_string();
    }
}

#include <waring/groebner.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace waring;

namespace {

SparsePoly poly(std::size_t nv, std::vector<std::pair<std::vector<unsigned>, long>> terms) {
    std::vector<Term> ts;
    for (auto& [e, c] : terms) {
        Term t;
        for (std::size_t i = 0; i < e.size(); ++i) {
            t.mono.e[i] = static_cast<std::uint16_t>(e[i]);
            t.mono.degree += e[i];
        }
        t.coeff = c;
        ts.push_back(t);
    }
    return SparsePoly::from_terms(nv, ts);
}

}  // namespace

TEST(Groebner, LinearSystemReducesToVariables) {
    // x + y - 3, x - y - 1  ->  x - 2, y - 1
    auto gb = groebner_basis({poly(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -3}}), poly(2, {{{1, 0}, 1}, {{0, 1}, -1}, {{0, 0}, -1}})});
    ASSERT_TRUE(gb.completed);
    ASSERT_EQ(gb.basis.size(), 2u);
    EXPECT_EQ(normal_set(gb.basis, 2).size(), 1u);
    EXPECT_TRUE(normal_form(poly(2, {{{1, 0}, 1}, {{0, 0}, -2}}), gb.basis).is_zero());
    EXPECT_TRUE(normal_form(poly(2, {{{0, 1}, 1}, {{0, 0}, -1}}), gb.basis).is_zero());
}

TEST(Groebner, CircleAndLine) {
    auto gb = groebner_basis({poly(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -2}}), poly(2, {{{1, 0}, 1}, {{0, 1}, -1}})});
    ASSERT_TRUE(gb.completed);
    EXPECT_TRUE(is_zero_dimensional(gb.basis, 2));
    EXPECT_EQ(normal_set(gb.basis, 2).size(), 2u);
}

TEST(Groebner, UnitIdeal) {
    auto gb = groebner_basis({poly(1, {{{1}, 1}}), poly(1, {{{1}, 1}, {{0}, 1}})});
    ASSERT_TRUE(gb.completed);
    EXPECT_TRUE(is_unit_ideal(gb.basis));
    EXPECT_EQ(affine_dimension(gb.basis, 1), -1);
}

TEST(Groebner, DimensionOfCoordinateAxes) {
    // xy = 0 in the plane: dimension 1; xz = yz = 0 in space: dimension 2
    auto g1 = groebner_basis({poly(2, {{{1, 1}, 1}})});
    EXPECT_EQ(affine_dimension(g1.basis, 2), 1);
    auto g2 = groebner_basis({poly(3, {{{1, 0, 1}, 1}}), poly(3, {{{0, 1, 1}, 1}})});
    EXPECT_EQ(affine_dimension(g2.basis, 3), 2);
}

TEST(Groebner, GeneratorsReduceToZero) {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t nv = 2 + trial % 2;
        std::vector<SparsePoly> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<Term> ts;
            for (int k = 0; k < 4; ++k) {
                Term t;
                for (std::size_t i = 0; i < nv; ++i) {
                    t.mono.e[i] = static_cast<std::uint16_t>(std::abs(c(rng)) % 3);
                    t.mono.degree += t.mono.e[i];
                }
                t.coeff = c(rng);
                ts.push_back(t);
            }
            gens.push_back(SparsePoly::from_terms(nv, ts));
        }
        auto gb = groebner_basis(gens);
        ASSERT_TRUE(gb.completed);
        for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb.basis).is_zero());
        // S-polynomials of the basis reduce to zero
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
                EXPECT_TRUE(normal_form(detail::s_polynomial(gb.basis[i], gb.basis[j]), gb.basis).is_zero());
    }
}

TEST(Groebner, DegreeCapIsReported) {
    GroebnerLimits tight{2, 100000};
    // x^2 y + 1 and x y^2 + 1 need the pair with lcm x^2 y^2
    auto gb = groebner_basis({poly(2, {{{2, 1}, 1}, {{0, 0}, 1}}), poly(2, {{{1, 2}, 1}, {{0, 0}, 1}})}, tight);
    EXPECT_FALSE(gb.completed);
}

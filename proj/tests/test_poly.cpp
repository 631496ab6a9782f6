#include "support.hpp"

#include <waring/poly.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace waring;
using testutil::random_point;
using testutil::random_poly;

TEST(Monomials, RoundTripAllSmallSpaces) {
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t d = 0; d <= 8; ++d) {
            const std::size_t count = monomial_count(n, d);
            for (std::size_t i = 0; i < count; ++i) {
                Multidegree m = multidegree_of(i, n, d);
                ASSERT_EQ(total_degree(m), d);
                ASSERT_EQ(monomial_index(m, n, d), i) << "n=" << n << " d=" << d;
            }
        }
}

TEST(Monomials, LeadingAndTrailingPowers) {
    EXPECT_EQ(monomial_index({5, 0, 0}, 2, 5), 0u);
    EXPECT_EQ(monomial_index({0, 0, 5}, 2, 5), monomial_count(2, 5) - 1);
}

TEST(Monomials, QuadraticsInThreeVariablesAreDistinct) {
    auto all = monomials(2, 2);
    ASSERT_EQ(all.size(), 6u);
    std::set<Multidegree> seen(all.begin(), all.end());
    EXPECT_EQ(seen.size(), 6u);
}

TEST(Monomials, IndexMatchesBruteForceGrevlexSort) {
    // every multidegree of degree 3 in 3 variables, sorted by the comparator
    std::vector<Multidegree> all;
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; a + b <= 3; ++b) all.push_back({a, b, 3 - a - b});
    ASSERT_EQ(all.size(), 10u);
    std::sort(all.begin(), all.end(), [](const Multidegree& a, const Multidegree& b) { return grevlex_greater(a, b); });
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(monomial_index(all[i], 2, 3), i);
    // x0^2 x1 sits right after x0^3
    EXPECT_EQ(monomial_index({2, 1, 0}, 2, 3), 1u);
}

TEST(Monomials, RejectsDegreeMismatch) {
    EXPECT_THROW(monomial_index({1, 1, 0}, 2, 3), std::invalid_argument);
    EXPECT_THROW(monomial_index({1, 2}, 2, 3), std::invalid_argument);
}

TEST(PowLinearForm, PureVariable) {
    auto f = pow_linear_form(make_linear_form<Rational>({1, 0, 0}), 5);
    EXPECT_EQ(f[0], 1);
    for (std::size_t i = 1; i < f.size(); ++i) EXPECT_EQ(f[i], 0);
}

TEST(PowLinearForm, BinomialSquare) {
    auto f = pow_linear_form(make_linear_form<Rational>({1, 1}), 2);
    EXPECT_EQ(f.coeff({2, 0}), 1);
    EXPECT_EQ(f.coeff({1, 1}), 2);
    EXPECT_EQ(f.coeff({0, 2}), 1);
}

TEST(PowLinearForm, EvaluationIsMultiplicative) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const std::size_t d = 1 + trial % 6;
        auto v = make_linear_form(testutil::random_ints(rng, n + 1));
        auto f = pow_linear_form(v, d);
        for (int k = 0; k < 5; ++k) {
            auto p = testutil::random_ints(rng, n + 1);
            Rational lv = evaluate(v, p);
            Rational expect = 1;
            for (std::size_t e = 0; e < d; ++e) expect *= lv;
            ASSERT_EQ(evaluate(f, p), expect);
        }
    }
}

TEST(PartialDerivative, PowersOfX0) {
    auto f = HomPoly<Rational>::monomial(2, {5, 0, 0});
    auto f0 = partial_derivative(f, 0);
    EXPECT_EQ(f0.degree(), 4u);
    EXPECT_EQ(f0, HomPoly<Rational>::monomial(2, {4, 0, 0}, Rational(5)));
    EXPECT_TRUE(partial_derivative(f, 1).is_zero());
}

TEST(PartialDerivative, EulerIdentity) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const std::size_t d = 1 + trial % 5;
        auto f = random_poly(rng, n, d);
        HomPoly<Rational> sum(n, d);
        for (std::size_t i = 0; i <= n; ++i) sum += multiply(HomPoly<Rational>::variable(n, i), partial_derivative(f, i));
        EXPECT_EQ(sum, f * Rational(static_cast<long>(d)));
    }
}

TEST(PartialDerivative, MixedPartialsCommute) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto f = random_poly(rng, n, 2 + trial % 5);
        const std::size_t i = trial % (n + 1);
        const std::size_t j = (trial / 2) % (n + 1);
        EXPECT_EQ(partial_derivative(partial_derivative(f, i), j), partial_derivative(partial_derivative(f, j), i));
    }
}

TEST(PartialDerivative, MultiIndexMatchesIteratedPartials) {
    std::mt19937_64 rng(14);
    auto f = random_poly(rng, 2, 6);
    auto g = partial_derivative(partial_derivative(partial_derivative(f, 0), 2), 2);
    EXPECT_EQ(derivative(f, {1, 0, 2}), g);
}

TEST(Evaluate, SimpleValues) {
    HomPoly<Rational> f = HomPoly<Rational>::monomial(2, {2, 0, 0}) + HomPoly<Rational>::monomial(2, {0, 2, 0});
    EXPECT_EQ(evaluate(f, std::vector<Rational>{1, 1, 0}), 2);
    std::mt19937_64 rng(15);
    auto g = random_poly(rng, 3, 4);
    EXPECT_EQ(evaluate(g, std::vector<Rational>(4, Rational(0))), 0);
}

TEST(Evaluate, Homogeneity) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const std::size_t d = 1 + trial % 6;
        auto f = random_poly(rng, n, d);
        auto p = random_point(rng, n + 1);
        Rational lambda(static_cast<long>(trial % 7) - 3, 2);
        std::vector<Rational> q = p;
        for (auto& x : q) x *= lambda;
        Rational scale = 1;
        for (std::size_t e = 0; e < d; ++e) scale *= lambda;
        EXPECT_EQ(evaluate(f, q), scale * evaluate(f, p));
    }
}

TEST(Evaluate, FloatAgreesWithExact) {
    std::mt19937_64 rng(17);
    auto f = random_poly(rng, 2, 5);
    auto p = random_point(rng, 3);
    auto fd = convert<double>(f);
    std::vector<double> pd;
    for (const auto& x : p) pd.push_back(x.get_d());
    EXPECT_NEAR(evaluate(fd, pd), evaluate(f, p).get_d(), 1e-6 * std::max(1.0, std::abs(evaluate(f, p).get_d())));
}

#include "support.hpp"

#include <waring/bounds.hpp>
#include <waring/solve.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace waring;

namespace {

TensorMap<Rational> random_map(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t a) {
    const std::size_t len = monomial_count(n, m) * binomial(long(n + 1), long(a));
    return tensor_map_from_vector(testutil::random_ints(rng, len), n, m, a);
}

SparsePoly affine(std::size_t nv, std::vector<std::pair<std::vector<unsigned>, long>> terms) {
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

TEST(ZeroDimensional, SquareRootsOfOne) {
    std::mt19937_64 rng(1);
    auto gb = groebner_basis({affine(1, {{{2}, 1}, {{0}, -1}})});
    auto sol = solve_zero_dimensional(gb.basis, 1, rng);
    ASSERT_TRUE(sol.reduced);
    ASSERT_EQ(sol.exact.size(), 2u);
    EXPECT_TRUE(sol.numeric.empty());
    std::vector<Rational> xs = {sol.exact[0][0], sol.exact[1][0]};
    std::sort(xs.begin(), xs.end());
    EXPECT_EQ(xs[0], -1);
    EXPECT_EQ(xs[1], 1);
}

TEST(ZeroDimensional, CircleMeetsDiagonal) {
    std::mt19937_64 rng(2);
    auto gb = groebner_basis({affine(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -2}}), affine(2, {{{1, 0}, 1}, {{0, 1}, -1}})});
    auto sol = solve_zero_dimensional(gb.basis, 2, rng);
    ASSERT_EQ(sol.exact.size(), 2u);
    for (const auto& p : sol.exact) {
        EXPECT_EQ(p[0], p[1]);
        EXPECT_EQ(p[0] * p[0], 1);
    }
}

TEST(ZeroDimensional, IrrationalAndComplexRoots) {
    std::mt19937_64 rng(3);
    // x^2 - 2 and y^2 + 1
    auto gb = groebner_basis({affine(2, {{{2, 0}, 1}, {{0, 0}, -2}}), affine(2, {{{0, 2}, 1}, {{0, 0}, 1}})});
    auto sol = solve_zero_dimensional(gb.basis, 2, rng);
    ASSERT_TRUE(sol.reduced);
    EXPECT_TRUE(sol.exact.empty());
    ASSERT_EQ(sol.numeric.size(), 4u);
    for (const auto& p : sol.numeric) {
        EXPECT_NEAR(std::abs(p[0] * p[0] - 2.0), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(p[1] * p[1] + 1.0), 0.0, 1e-12);
    }
}

TEST(ZeroDimensional, DoubleRootIsNotReduced) {
    std::mt19937_64 rng(4);
    auto gb = groebner_basis({affine(1, {{{2}, 1}, {{1}, -2}, {{0}, 1}})});
    EXPECT_FALSE(solve_zero_dimensional(gb.basis, 1, rng).reduced);
}

TEST(BaseLocus, ClassifiesSimpleIdeals) {
    // x1 x2 = 0 in P^2: two lines
    PolyIdeal lines{2, {HomPoly<Rational>::monomial(2, {0, 1, 1})}};
    auto l = base_locus(lines);
    EXPECT_EQ(l.status, LocusStatus::positive_dimensional);
    EXPECT_EQ(l.dimension, 1);
    // x1^2 = x2 = 0: a double point
    PolyIdeal fat{2, {HomPoly<Rational>::monomial(2, {0, 2, 0}), HomPoly<Rational>::monomial(2, {0, 0, 1})}};
    EXPECT_EQ(base_locus(fat).status, LocusStatus::non_reduced);
    // x0 = x1 = x2 = 0 is empty projectively
    PolyIdeal none{2, {HomPoly<Rational>::variable(2, 0), HomPoly<Rational>::variable(2, 1), HomPoly<Rational>::variable(2, 2)}};
    EXPECT_EQ(base_locus(none).status, LocusStatus::empty);
    // x1 = x2 = 0 is [1:0:0]
    PolyIdeal pt{2, {HomPoly<Rational>::variable(2, 1), HomPoly<Rational>::variable(2, 2)}};
    auto p = base_locus(pt);
    ASSERT_EQ(p.status, LocusStatus::finite_reduced);
    ASSERT_EQ(p.points.size(), 1u);
    ASSERT_TRUE(p.points[0].exact);
    EXPECT_EQ(p.points[0].rational, (std::vector<Rational>{1, 0, 0}));
}

TEST(EigenEquations, MatrixCaseGivesClassicalEigenvectors) {
    // diag(1,2,3): eigenvectors are the coordinate points
    TensorMap<Rational> t{2, 1, 1, {}};
    for (std::size_t j = 0; j < 3; ++j) t.w.push_back(HomPoly<Rational>::variable(2, j) * Rational(long(j + 1)));
    auto locus = base_locus(eigen_equation_ideal({t}, 2));
    ASSERT_EQ(locus.status, LocusStatus::finite_reduced);
    ASSERT_EQ(locus.points.size(), 3u);
    for (const auto& p : locus.points) {
        ASSERT_TRUE(p.exact);
        int nonzero = 0;
        for (const auto& x : p.rational) nonzero += sgn(x) != 0;
        EXPECT_EQ(nonzero, 1);
    }
}

TEST(EigenEquations, IdentityLikeMapIsTrivial) {
    // M(v^2) = x0 * v: every point is an eigenvector
    TensorMap<Rational> t{2, 2, 1, {}};
    for (std::size_t j = 0; j < 3; ++j) t.w.push_back(multiply(HomPoly<Rational>::variable(2, 0), HomPoly<Rational>::variable(2, j)));
    for (const auto& g : eigen_equations(t)) EXPECT_TRUE(g.is_zero());
}

TEST(EigenIdeal, MinorsAgreeWithWedgeEquations) {
    std::mt19937_64 rng(61);
    const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {3, 2}, {3, 1}, {3, 3}};
    for (auto [n, a] : cases) {
        for (int trial = 0; trial < 3; ++trial) {
            auto t = random_map(rng, n, 1, a);
            auto minors = eigen_ideal({t}, n, a);
            auto wedge = eigen_equation_ideal({t}, n);
            // every wedge equation is a multiple-free combination check: zero sets agree at sampled points
            auto lm = base_locus(minors);
            auto lw = base_locus(wedge);
            ASSERT_EQ(lm.status, lw.status) << n << "," << a;
            EXPECT_EQ(lm.points.size(), lw.points.size()) << n << "," << a;
            for (const auto& p : lw.points) EXPECT_LT(point_residual(minors, p), 1e-8);
        }
    }
}

TEST(EigenIdeal, QuinticMinorsAreTwoByTwo) {
    std::mt19937_64 rng(62);
    auto t = random_map(rng, 2, 2, 1);
    auto ideal = eigen_ideal({t}, 2, 1);
    EXPECT_EQ(ideal.generators.size(), 3u);
    for (const auto& g : ideal.generators) EXPECT_EQ(g.degree(), 3u);
}

TEST(EigenCount, MatchesClosedForm) {
    const std::size_t cases[][3] = {{2, 1, 1}, {2, 2, 1}, {2, 3, 1}, {3, 1, 2}, {3, 2, 2}};
    std::mt19937_64 rng(63);
    for (const auto& c : cases) {
        auto expect = eigenvector_count(c[0], c[1], c[2]);
        ASSERT_TRUE(expect.finite());
        for (int trial = 0; trial < 2; ++trial) {
            auto t = random_map(rng, c[0], c[1], c[2]);
            auto locus = base_locus(eigen_equation_ideal({t}, c[0]));
            ASSERT_EQ(locus.status, LocusStatus::finite_reduced);
            EXPECT_EQ(locus.points.size(), expect.value) << c[0] << c[1] << c[2];
            auto ideal = eigen_equation_ideal({t}, c[0]);
            for (const auto& p : locus.points) EXPECT_LT(point_residual(ideal, p), 1e-8);
        }
    }
}

// v is an eigenvector of M exactly when M lies in the kernel of P_{v^d}.
TEST(EigenvectorKernel, BothDirections) {
    std::mt19937_64 rng(64);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const std::size_t m = 1 + trial % 2;
        const std::size_t d = m + 2;
        const std::size_t a = 1 + trial % n;
        auto v = testutil::random_point(rng, n + 1);
        auto p = koszul_flattening(pow_linear_form(make_linear_form(v), d), m, a);
        auto ker = kernel(p.matrix);
        // a random kernel element has v as eigenvector
        std::vector<Rational> mv(p.matrix.cols());
        for (const auto& b : ker.vectors) {
            Rational c = std::uniform_int_distribution<int>(-5, 5)(rng);
            for (std::size_t i = 0; i < mv.size(); ++i) mv[i] += c * b[i];
        }
        for (const auto& g : eigen_equations(tensor_map_from_vector(mv, n, m, a))) ASSERT_EQ(evaluate(g, v), 0);
        // a random map has v as eigenvector iff it is annihilated
        auto mr = testutil::random_ints(rng, p.matrix.cols());
        bool annihilated = true;
        for (const auto& x : p.matrix.apply(mr)) annihilated = annihilated && sgn(x) == 0;
        bool eigen = true;
        for (const auto& g : eigen_equations(tensor_map_from_vector(mr, n, m, a))) eigen = eigen && sgn(evaluate(g, v)) == 0;
        EXPECT_EQ(annihilated, eigen);
        ++checked;
    }
    EXPECT_GE(checked, 50);
}

TEST(EigenvectorKernel, SummandsAreCommonEigenvectors) {
    std::mt19937_64 rng(65);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2;
        const std::size_t r = 2 + trial % 4;
        std::vector<std::vector<Rational>> vs;
        HomPoly<Rational> f(n, 5);
        for (std::size_t i = 0; i < r; ++i) {
            vs.push_back(testutil::random_point(rng, n + 1));
            f += pow_linear_form(make_linear_form(vs.back()), 5);
        }
        auto p = koszul_flattening(f, 2, 1);
        for (const auto& t : tensor_maps(kernel(p.matrix), n, 2, 1))
            for (const auto& g : eigen_equations(t))
                for (const auto& v : vs) ASSERT_EQ(evaluate(g, v), 0);
    }
}

TEST(PowerIteration, SymmetricMatrixEigenvectors) {
    // symmetric matrix with eigenvalues 1, 2, 4 in a rotated basis
    TensorMap<double> t{2, 1, 1, {}};
    const double a[3][3] = {{2.5, 0.5, 0.0}, {0.5, 2.5, 0.0}, {0.0, 0.0, 1.0}};
    for (std::size_t i = 0; i < 3; ++i) t.w.emplace_back(2, 1, std::vector<double>{a[i][0], a[i][1], a[i][2]});
    auto pts = power_iteration_eigenvectors(t);
    ASSERT_GE(pts.size(), 1u);
    // the dominant eigenvector (1,1,0)/sqrt2 is always among the limits
    const std::vector<Complex> dom = {1.0, 1.0, 0.0};
    bool seen = false;
    for (const auto& p : pts) seen = seen || angular_distance(p.numeric, dom) < 1e-6;
    EXPECT_TRUE(seen);
    for (const auto& p : pts) {
        auto img = t.apply(std::vector<double>{p.numeric[0].real(), p.numeric[1].real(), p.numeric[2].real()});
        std::vector<Complex> ci(img.begin(), img.end());
        EXPECT_LT(angular_distance(ci, p.numeric), 1e-6);
    }
}

TEST(PowerIteration, IdentityLikeMapConvergesImmediately) {
    TensorMap<double> t{2, 1, 1, {}};
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<double> c(3, 0.0);
        c[j] = 1.0;
        t.w.emplace_back(2, 1, c);
    }
    PowerIterationOptions opts;
    opts.starts = 10;
    opts.max_iterations = 2;
    EXPECT_EQ(power_iteration_eigenvectors(t, opts).size(), 10u);
}

TEST(PowerIteration, LimitsAreAmongSolverPoints) {
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 3; ++trial) {
        auto t = random_map(rng, 2, 2, 1);
        auto locus = base_locus(eigen_equation_ideal({t}, 2));
        ASSERT_EQ(locus.points.size(), 7u);
        TensorMap<double> td{2, 2, 1, {}};
        for (const auto& w : t.w) td.w.push_back(convert<double>(w));
        for (const auto& p : power_iteration_eigenvectors(td)) {
            bool found = false;
            for (const auto& q : locus.points) found = found || angular_distance(p.numeric, q.numeric) < 1e-6;
            EXPECT_TRUE(found);
        }
    }
}

#ifndef WARING_LINALG_HPP
#define WARING_LINALG_HPP

#include <waring/matrix.hpp>

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

namespace waring {

/// Singular values at or below this fraction of the largest count as zero.
inline constexpr double kRankTolerance = 1e-10;

template <class S>
struct KernelBasis {
    std::vector<std::vector<S>> vectors;
    std::size_t dimension() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
};

enum class SolveStatus { unique, family, inconsistent };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::unique: return "unique";
        case SolveStatus::family: return "family";
        case SolveStatus::inconsistent: return "inconsistent";
    }
    return "?";
}

template <class S>
struct SolveReport {
    SolveStatus status = SolveStatus::inconsistent;
    std::vector<S> solution;               // particular solution (least squares in float mode)
    std::size_t family_dimension = 0;      // dim of the affine family when status == family
    std::vector<std::vector<S>> nullspace; // directions of the family
    double residual = 0.0;                 // ||A x - b||_inf
};

// ---------------------------------------------------------------------------
// Exact mode: fraction-free (Bareiss) elimination over the integers.
// ---------------------------------------------------------------------------

/// Row echelon form with integer entries; every entry is a minor of the input.
struct Echelon {
    std::vector<std::vector<Integer>> rows;
    std::vector<std::size_t> pivots;  // pivot column of row k
};

namespace detail {

inline std::vector<std::vector<Integer>> integer_rows(const DenseMatrix<Rational>& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(r, c);
            out[r][c] = x.get_num() * (l / x.get_den());
        }
    }
    return out;
}

}  // namespace detail

inline Echelon bareiss_echelon(std::vector<std::vector<Integer>> a, std::size_t cols) {
    Echelon e;
    const std::size_t rows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

inline Echelon bareiss_echelon(const DenseMatrix<Rational>& m) {
    return bareiss_echelon(detail::integer_rows(m), m.cols());
}

namespace detail {

// Solves the echelon system for the given right-hand column values, with free variables fixed.
inline std::vector<Rational> back_substitute(const Echelon& e, std::size_t cols,
                                             const std::vector<Rational>& rhs,
                                             std::vector<Rational> x) {
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        Rational acc = rhs[k];
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (sgn(e.rows[k][j]) != 0 && sgn(x[j]) != 0) acc -= Rational(e.rows[k][j]) * x[j];
        x[pc] = acc / Rational(e.rows[k][pc]);
    }
    return x;
}

inline std::vector<Rational> primitive(std::vector<Rational> v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (sgn(g) != 0)
        for (auto& x : v) x /= g;
    return v;
}

inline std::vector<std::vector<Rational>> echelon_kernel(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> out;
    const std::vector<Rational> zero_rhs(e.pivots.size(), Rational(0));
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        out.push_back(primitive(back_substitute(e, cols, zero_rhs, std::move(x))));
    }
    return out;
}

}  // namespace detail

inline KernelBasis<Rational> kernel(const DenseMatrix<Rational>& m) {
    Echelon e = bareiss_echelon(m);
    return {detail::echelon_kernel(e, m.cols())};
}

inline std::size_t rank_of(const DenseMatrix<Rational>& m) { return bareiss_echelon(m).pivots.size(); }

inline SolveReport<Rational> solve_linear(const DenseMatrix<Rational>& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    DenseMatrix<Rational> aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    Echelon e = bareiss_echelon(aug);
    SolveReport<Rational> rep;
    const std::size_t n = a.cols();
    if (!e.pivots.empty() && e.pivots.back() == n) {
        rep.status = SolveStatus::inconsistent;
        rep.residual = std::numeric_limits<double>::infinity();
        return rep;
    }
    std::vector<Rational> rhs(e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) rhs[k] = Rational(e.rows[k][n]);
    Echelon coef = e;
    for (auto& row : coef.rows) row.pop_back();
    rep.solution = detail::back_substitute(coef, n, rhs, std::vector<Rational>(n, Rational(0)));
    rep.nullspace = detail::echelon_kernel(coef, n);
    rep.family_dimension = rep.nullspace.size();
    rep.status = rep.family_dimension == 0 ? SolveStatus::unique : SolveStatus::family;
    rep.residual = 0.0;
    return rep;
}

// ---------------------------------------------------------------------------
// Float mode: singular value decomposition with a relative threshold.
// ---------------------------------------------------------------------------

template <class S>
    requires(!ExactScalar<S>)
std::size_t numerical_rank(const Eigen::JacobiSVD<Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>>& svd,
                           double tol = kRankTolerance) {
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++r;
    return r;
}

template <class S>
    requires(!ExactScalar<S>)
KernelBasis<S> kernel(const DenseMatrix<S>& m, double tol = kRankTolerance) {
    using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
    KernelBasis<S> out;
    if (m.cols() == 0) return out;
    Mat e = to_eigen(m);
    if (m.rows() == 0) e = Mat::Zero(1, static_cast<Eigen::Index>(m.cols()));
    Eigen::JacobiSVD<Mat> svd(e, Eigen::ComputeFullV);
    const std::size_t r = numerical_rank<S>(svd, tol);
    const Mat& v = svd.matrixV();
    for (std::size_t c = r; c < m.cols(); ++c) {
        std::vector<S> x(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) x[i] = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
        out.vectors.push_back(std::move(x));
    }
    return out;
}

template <class S>
    requires(!ExactScalar<S>)
std::size_t rank_of(const DenseMatrix<S>& m, double tol = kRankTolerance) {
    using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(to_eigen(m));
    return numerical_rank<S>(svd, tol);
}

/// Least-squares solve; inconsistent when the residual exceeds consistency_tol * max(1, ||b||).
template <class S>
    requires(!ExactScalar<S>)
SolveReport<S> solve_linear(const DenseMatrix<S>& a, const std::vector<S>& b, double consistency_tol = 1e-8,
                            double rank_tol = kRankTolerance) {
    using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    SolveReport<S> rep;
    Mat e = to_eigen(a);
    Vec rhs(static_cast<Eigen::Index>(b.size()));
    double bnorm = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        rhs(static_cast<Eigen::Index>(i)) = b[i];
        bnorm = std::max(bnorm, std::abs(b[i]));
    }
    Eigen::JacobiSVD<Mat> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const std::size_t r = numerical_rank<S>(svd, rank_tol);
    svd.setThreshold(rank_tol);
    Vec x = svd.solve(rhs);
    Vec res = e * x - rhs;
    rep.residual = res.size() ? res.cwiseAbs().maxCoeff() : 0.0;
    rep.solution.assign(x.data(), x.data() + x.size());
    for (std::size_t c = r; c < a.cols(); ++c) {
        std::vector<S> v(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i)
            v[i] = svd.matrixV()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
        rep.nullspace.push_back(std::move(v));
    }
    rep.family_dimension = rep.nullspace.size();
    if (rep.residual > consistency_tol * std::max(1.0, bnorm)) {
        rep.status = SolveStatus::inconsistent;
    } else {
        rep.status = rep.family_dimension == 0 ? SolveStatus::unique : SolveStatus::family;
    }
    return rep;
}

}  // namespace waring

#endif  // WARING_LINALG_HPP

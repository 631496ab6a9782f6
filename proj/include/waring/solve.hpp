#ifndef WARING_SOLVE_HPP
#define WARING_SOLVE_HPP

#include <waring/flatten.hpp>
#include <waring/groebner.hpp>
#include <waring/linalg.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace waring {

// ---------------------------------------------------------------------------
// Tensor maps M in Hom(S^m V, Λ^a V)
// ---------------------------------------------------------------------------

/// w[J] is the coordinate of M(v^m) on e_J, for a-subsets J in colex order.
template <class S>
struct TensorMap {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t a = 0;
    std::vector<HomPoly<S>> w;

    /// M(v^m) as Λ^a coordinates.
    template <class P>
    std::vector<P> apply(const std::vector<P>& v) const {
        std::vector<P> out;
        out.reserve(w.size());
        for (const auto& wj : w) out.push_back(evaluate<S, P>(wj, std::span<const P>(v)));
        return out;
    }
};

/// Groups a source-space vector of a flattening into binomial(n+1,a) degree-m blocks.
template <class S>
TensorMap<S> tensor_map_from_vector(const std::vector<S>& vec, std::size_t n, std::size_t m, std::size_t a) {
    const std::size_t block = monomial_count(n, m);
    const std::size_t blocks = binomial(long(n + 1), long(a));
    if (vec.size() != block * blocks) throw std::invalid_argument("tensor_map_from_vector: wrong length");
    TensorMap<S> t{n, m, a, {}};
    for (std::size_t j = 0; j < blocks; ++j)
        t.w.emplace_back(n, m, std::vector<S>(vec.begin() + long(j * block), vec.begin() + long((j + 1) * block)));
    return t;
}

template <class S>
std::vector<TensorMap<S>> tensor_maps(const KernelBasis<S>& k, std::size_t n, std::size_t m, std::size_t a) {
    std::vector<TensorMap<S>> out;
    for (const auto& v : k.vectors) out.push_back(tensor_map_from_vector(v, n, m, a));
    return out;
}

/*
 * The left kernel of a Koszul flattening, read as tensor maps. P_f with
 * parameters (m, a) is, up to a global sign, the transpose of the flattening
 * with (d-m-1, n-a), so its left kernel vectors group into that shape.
 */
template <class S>
std::vector<TensorMap<S>> cokernel_maps(const FlatteningMatrix<S>& p) {
    auto k = kernel(p.matrix.transpose());
    return tensor_maps(k, p.n, p.d - p.m - 1, p.n - p.a);
}

/*
 * Homogeneous equations of degree m+1 cutting out the eigenvectors of M:
 * the coordinates of M(x^m) ∧ x in Λ^{a+1}. For a = 0 the map is a single
 * polynomial and its zero set is the eigenvector locus.
 */
template <class S>
std::vector<HomPoly<S>> eigen_equations(const TensorMap<S>& t) {
    if (t.a == 0) return t.w;
    std::vector<HomPoly<S>> out;
    auto js = subsets(t.n + 1, t.a);
    for (const auto& l : subsets(t.n + 1, t.a + 1)) {
        HomPoly<S> eq(t.n, t.m + 1);
        for (std::size_t pos = 0; pos < l.size(); ++pos) {
            Subset j = l;
            j.erase(j.begin() + long(pos));
            // e_J ∧ e_l: move e_l past the a - pos entries of J after it
            const bool negative = (t.a - pos) % 2 == 1;
            HomPoly<S> term = multiply(t.w[subset_index(js, j)], HomPoly<S>::variable(t.n, l[pos]));
            if (negative) eq -= term;
            else eq += term;
        }
        out.push_back(std::move(eq));
    }
    return out;
}

/// Homogeneous ideal in x_0..x_n given by generators.
struct PolyIdeal {
    std::size_t n = 0;
    std::vector<HomPoly<Rational>> generators;
};

/// Keeps a basis of the span of the generators of each degree, dropping zeros.
inline PolyIdeal independent_generators(const PolyIdeal& ideal) {
    PolyIdeal out{ideal.n, {}};
    std::vector<std::size_t> degrees;
    for (const auto& g : ideal.generators)
        if (std::find(degrees.begin(), degrees.end(), g.degree()) == degrees.end()) degrees.push_back(g.degree());
    std::sort(degrees.begin(), degrees.end());
    for (std::size_t deg : degrees) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& g : ideal.generators)
            if (g.degree() == deg && !g.is_zero()) rows.push_back(g.coeffs());
        if (rows.empty()) continue;
        const std::size_t cols = monomial_count(ideal.n, deg);
        DenseMatrix<Rational> m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        Echelon e = bareiss_echelon(m);
        for (const auto& row : e.rows) {
            Integer g = 0;
            for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            std::vector<Rational> c(cols);
            for (std::size_t i = 0; i < cols; ++i) c[i] = Rational(row[i] / g);
            out.generators.emplace_back(ideal.n, deg, std::move(c));
        }
    }
    return out;
}

/// The compact eigenvector equations of every map, as one ideal.
inline PolyIdeal eigen_equation_ideal(const std::vector<TensorMap<Rational>>& maps, std::size_t n) {
    PolyIdeal ideal{n, {}};
    for (const auto& t : maps)
        for (auto& g : eigen_equations(t)) ideal.generators.push_back(std::move(g));
    return independent_generators(ideal);
}

namespace detail {

// Determinant of a square matrix of signed variables, by Laplace expansion along row 0.
inline HomPoly<Rational> signed_variable_det(const std::vector<std::vector<SignedVariable>>& a, std::size_t n) {
    const std::size_t k = a.size();
    if (k == 0) return HomPoly<Rational>(n, 0, {Rational(1)});
    HomPoly<Rational> acc(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        if (a[0][c].sign == 0) continue;
        std::vector<std::vector<SignedVariable>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<SignedVariable> row = a[r];
            row.erase(row.begin() + long(c));
            minor.push_back(std::move(row));
        }
        HomPoly<Rational> sub = signed_variable_det(minor, n);
        if (sub.is_zero()) continue;
        HomPoly<Rational> term = multiply(HomPoly<Rational>::variable(n, a[0][c].var), sub);
        if ((a[0][c].sign < 0) != (c % 2 == 1)) acc -= term;
        else acc += term;
    }
    return acc;
}

template <class F>
void for_each_combination(std::size_t universe, std::size_t k, F&& f) {
    for (const auto& s : subsets(universe, k)) f(s);
}

}  // namespace detail

/*
 * Minors of size binomial(n,a-1)+1 of the block matrix (k_{n+2-a} | w) for
 * each map. Minors avoiding the w column vanish identically, so only those
 * through it are generated, by expansion along that column.
 */
inline PolyIdeal eigen_ideal(const std::vector<TensorMap<Rational>>& maps, std::size_t n, std::size_t a) {
    if (a < 1 || a > n) throw std::invalid_argument("eigen_ideal: wedge degree must satisfy 1 <= a <= n");
    if (maps.empty()) throw std::invalid_argument("eigen_ideal: empty kernel");
    const KoszulMatrix k = koszul_matrix(n, n + 2 - a);
    // rows of k_{n+2-a} are (n+1-a)-subsets; map them to the Λ^a coordinate of M through the Hodge star
    auto js = subsets(n + 1, a);
    std::vector<std::size_t> w_index(k.rows());
    std::vector<int> w_sign(k.rows());
    for (std::size_t r = 0; r < k.rows(); ++r) {
        Subset j = complement(k.row_labels[r], n + 1);
        w_index[r] = subset_index(js, j);
        w_sign[r] = hodge_sign(j, n + 1);
    }
    const std::size_t size = binomial(long(n), long(a - 1)) + 1;
    PolyIdeal ideal{n, {}};
    for (const auto& t : maps) {
        detail::for_each_combination(k.rows(), size, [&](const Subset& rows) {
            detail::for_each_combination(k.cols(), size - 1, [&](const Subset& cols) {
                HomPoly<Rational> minor(n, t.m + size - 1);
                for (std::size_t pos = 0; pos < rows.size(); ++pos) {
                    std::vector<std::vector<SignedVariable>> sub;
                    for (std::size_t q = 0; q < rows.size(); ++q) {
                        if (q == pos) continue;
                        std::vector<SignedVariable> row;
                        for (std::size_t c : cols) row.push_back(k(rows[q], c));
                        sub.push_back(std::move(row));
                    }
                    HomPoly<Rational> cof = detail::signed_variable_det(sub, n);
                    if (cof.is_zero()) continue;
                    // w sits in the last column (index size-1)
                    const bool negative = ((pos + size - 1) % 2 == 1) != (w_sign[rows[pos]] < 0);
                    HomPoly<Rational> term = multiply(t.w[w_index[rows[pos]]], cof);
                    if (negative) minor -= term;
                    else minor += term;
                }
                if (!minor.is_zero()) ideal.generators.push_back(std::move(minor));
            });
        });
    }
    return ideal;
}

// ---------------------------------------------------------------------------
// Projective points
// ---------------------------------------------------------------------------

/// Deduplication threshold: sine of the angle between representatives.
inline constexpr double kPointTolerance = 1e-6;

struct ProjectivePoint {
    bool exact = false;
    std::vector<Rational> rational;  // when exact; first nonzero coordinate is 1
    std::vector<Complex> numeric;    // always filled; unit norm, first nonzero coordinate real-positive

    std::size_t size() const { return numeric.size(); }
};

inline std::vector<Complex> normalize_numeric(std::vector<Complex> v) {
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::invalid_argument("ProjectivePoint: zero vector");
    double biggest = 0.0;
    for (const auto& x : v) biggest = std::max(biggest, std::abs(x));
    Complex phase(1.0, 0.0);
    for (const auto& x : v)
        if (std::abs(x) > 1e-9 * biggest) {
            phase = x / std::abs(x);
            break;
        }
    for (auto& x : v) {
        x /= phase * norm;
        if (std::abs(x.imag()) < 1e-300) x.imag(0.0);
    }
    return v;
}

inline ProjectivePoint make_point(std::vector<Rational> v) {
    ProjectivePoint p;
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it == v.end()) throw std::invalid_argument("ProjectivePoint: zero vector");
    Rational lead = *it;
    for (auto& x : v) x /= lead;
    p.exact = true;
    p.rational = v;
    for (const auto& x : v) p.numeric.emplace_back(x.get_d(), 0.0);
    p.numeric = normalize_numeric(std::move(p.numeric));
    return p;
}

inline ProjectivePoint make_point(std::vector<Complex> v) {
    ProjectivePoint p;
    p.numeric = normalize_numeric(std::move(v));
    return p;
}

/// Sine of the angle between the lines spanned by two points.
inline double angular_distance(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Complex dot = 0.0;
    double nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += std::conj(u[i]) * v[i];
        nu += std::norm(u[i]);
        nv += std::norm(v[i]);
    }
    double c = std::norm(dot) / (nu * nv);
    return std::sqrt(std::max(0.0, 1.0 - c));
}

inline bool same_point(const ProjectivePoint& p, const ProjectivePoint& q, double tol = kPointTolerance) {
    if (p.exact && q.exact) return p.rational == q.rational;
    return angular_distance(p.numeric, q.numeric) <= tol;
}

/// Largest |g(p)| / max|coeff(g)| over the generators, at the normalized point.
inline double point_residual(const PolyIdeal& ideal, const ProjectivePoint& p) {
    double worst = 0.0;
    for (const auto& g : ideal.generators) {
        double scale = max_norm(g);
        if (scale == 0.0) continue;
        if (p.exact) {
            if (sgn(evaluate(g, p.rational)) != 0) worst = std::max(worst, 1.0);
        } else {
            Complex v = evaluate<Rational, Complex>(g, std::span<const Complex>(p.numeric));
            worst = std::max(worst, std::abs(v) / scale);
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Zero-dimensional solving
// ---------------------------------------------------------------------------

enum class LocusStatus { finite_reduced, positive_dimensional, non_reduced, empty, budget_exceeded };

inline const char* to_string(LocusStatus s) {
    switch (s) {
        case LocusStatus::finite_reduced: return "finite_reduced";
        case LocusStatus::positive_dimensional: return "positive_dimensional";
        case LocusStatus::non_reduced: return "non_reduced";
        case LocusStatus::empty: return "empty";
        case LocusStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

struct BaseLocus {
    LocusStatus status = LocusStatus::empty;
    std::vector<ProjectivePoint> points;
    int dimension = -1;        // projective dimension; 0 when finite
    std::size_t degree = 0;    // length of the affine quotient ring
    std::string detail;

    bool all_exact() const {
        return std::all_of(points.begin(), points.end(), [](const ProjectivePoint& p) { return p.exact; });
    }
};

struct SolverOptions {
    std::uint64_t seed = 0x5eed;
    GroebnerLimits limits{};
    int charts = 5;
    int separating_forms = 3;
};

/// Solutions of a zero-dimensional affine system, coordinates y_1..y_n.
struct AffineSolutions {
    bool reduced = true;
    std::size_t degree = 0;
    std::vector<std::vector<Rational>> exact;
    std::vector<std::vector<Complex>> numeric;
};

namespace detail {

// Univariate polynomials over Q, coefficient i on t^i.
using UPoly = std::vector<Rational>;

inline void trim(UPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline UPoly poly_rem(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        trim(a);
    }
    return a;
}

inline UPoly poly_gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            Rational lc = b.back();
            for (auto& x : b) x /= lc;
        }
    }
    return a;
}

inline UPoly poly_derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(long(i)));
    trim(d);
    return d;
}

// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier recurrence.
inline UPoly charpoly(const DenseMatrix<Rational>& a) {
    const std::size_t n = a.rows();
    UPoly c(n + 1);
    c[n] = 1;
    DenseMatrix<Rational> mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        DenseMatrix<Rational> next(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t t = 0; t < n; ++t)
                    if (sgn(mk(t, j)) != 0 && sgn(a(i, t)) != 0) s += a(i, t) * mk(t, j);
                next(i, j) = s;
            }
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t) tr += a(i, t) * mk(t, i);
        c[n - k] = -tr / Rational(long(k));
    }
    return c;
}

// Rational roots of p (assumed squarefree), located from numerical approximations.
inline std::vector<Rational> rational_roots(const UPoly& p, const std::vector<Complex>& approx) {
    // primitive integer form
    Integer l = 1;
    for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto& x : p) z.push_back(x.get_num() * (l / x.get_den()));
    Integer g = 0;
    for (const auto& x : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : z) x /= g;
    const Integer lc = abs(z.back());
    std::size_t bits = 0;
    for (const auto& x : z) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(256 + 4 * bits);

    auto eval_exact = [&](const Rational& t) {
        Rational acc = 0;
        for (std::size_t i = z.size(); i-- > 0;) acc = acc * t + Rational(z[i]);
        return acc;
    };

    std::vector<Rational> roots;
    for (const auto& c : approx) {
        if (std::abs(c.imag()) > 1e-6 * std::max(1.0, std::abs(c.real()))) continue;
        mpf_class x(c.real(), prec);
        for (int it = 0; it < 200; ++it) {
            mpf_class v(0, prec), dv(0, prec);
            for (std::size_t i = z.size(); i-- > 0;) {
                dv = dv * x + v;
                v = v * x + mpf_class(z[i], prec);
            }
            if (sgn(dv) == 0) break;
            mpf_class step(v / dv, prec);
            x -= step;
            mpf_class bound(abs(x) + 1, prec);
            mpf_div_2exp(bound.get_mpf_t(), bound.get_mpf_t(), prec - 32);
            if (abs(step) <= bound) break;
        }
        mpf_class scaled(x * mpf_class(lc, prec), prec);
        scaled = floor(scaled + mpf_class(0.5, prec));
        Rational cand(Integer(scaled), lc);
        cand.canonicalize();
        if (sgn(eval_exact(cand)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
    }
    return roots;
}

// Coordinates of NF(q) on the normal set.
inline std::vector<Rational> coordinates(const SparsePoly& q, const std::vector<SparsePoly>& basis,
                                         const std::vector<Exponents>& normal) {
    SparsePoly r = normal_form(q, basis);
    std::vector<Rational> out(normal.size());
    for (const auto& t : r.terms()) {
        auto it = std::find(normal.begin(), normal.end(), t.mono);
        out[static_cast<std::size_t>(it - normal.begin())] = t.coeff;
    }
    return out;
}

// Gauss-Newton on the affine system, complex arithmetic.
inline std::vector<Complex> newton_refine(const std::vector<SparsePoly>& system, std::vector<Complex> y, int iterations = 30) {
    const std::size_t nv = y.size();
    if (nv == 0) return y;
    std::vector<std::vector<SparsePoly>> jac(system.size());
    for (std::size_t i = 0; i < system.size(); ++i)
        for (std::size_t j = 0; j < nv; ++j) jac[i].push_back(system[i].derivative(j));
    for (int it = 0; it < iterations; ++it) {
        Eigen::MatrixXcd j(long(system.size()), long(nv));
        Eigen::VectorXcd f(long(system.size()));
        for (std::size_t i = 0; i < system.size(); ++i) {
            f(long(i)) = system[i].evaluate(y);
            for (std::size_t k = 0; k < nv; ++k) j(long(i), long(k)) = jac[i][k].evaluate(y);
        }
        Eigen::VectorXcd step = j.completeOrthogonalDecomposition().solve(f);
        double ynorm = 0.0, snorm = 0.0;
        for (std::size_t k = 0; k < nv; ++k) {
            y[k] -= step(long(k));
            ynorm = std::max(ynorm, std::abs(y[k]));
            snorm = std::max(snorm, std::abs(step(long(k))));
        }
        if (!(snorm > 1e-15 * (1.0 + ynorm))) break;
    }
    return y;
}

}  // namespace detail

/*
 * All solutions of a zero-dimensional ideal given by its reduced Gröbner basis,
 * via the multiplication matrix of a random linear form on the quotient ring.
 * The ideal is radical exactly when that matrix has a squarefree characteristic
 * polynomial for some form; failing that for every attempted form reports
 * non-reduced. Rational eigenvalues give exact points; the rest are numerical
 * and refined by Newton's method.
 */
inline AffineSolutions solve_zero_dimensional(const std::vector<SparsePoly>& basis, std::size_t nvars,
                                              std::mt19937_64& rng, int separating_forms = 3) {
    AffineSolutions out;
    if (is_unit_ideal(basis)) return out;
    const std::vector<Exponents> normal = normal_set(basis, nvars);
    const std::size_t n = normal.size();
    out.degree = n;

    std::vector<std::vector<Rational>> var_coords;
    for (std::size_t i = 0; i < nvars; ++i)
        var_coords.push_back(detail::coordinates(SparsePoly::from_terms(nvars, {Term{var_power(i, 1), Rational(1)}}), basis, normal));

    std::uniform_int_distribution<int> dist(-7, 7);
    for (int attempt = 0; attempt < separating_forms; ++attempt) {
        std::vector<Rational> ell(nvars);
        for (auto& c : ell) c = dist(rng);
        // multiplication matrix: column j holds NF(ell * b_j)
        DenseMatrix<Rational> mult(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Term> terms;
            for (std::size_t i = 0; i < nvars; ++i)
                if (sgn(ell[i]) != 0) terms.push_back({mono_mul(normal[j], var_power(i, 1)), ell[i]});
            auto c = detail::coordinates(SparsePoly::from_terms(nvars, terms), basis, normal);
            for (std::size_t i = 0; i < n; ++i) mult(i, j) = c[i];
        }
        detail::UPoly cp = detail::charpoly(mult);
        if (detail::poly_gcd(cp, detail::poly_derivative(cp)).size() > 1) continue;

        // left eigenvectors u: u(b) = b(point); u(1) is the entry for the constant monomial (index 0)
        DenseMatrix<Rational> mt = mult.transpose();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(to_eigen(convert<Complex>(mt)));
        std::vector<Complex> lambdas;
        for (Eigen::Index i = 0; i < ces.eigenvalues().size(); ++i) lambdas.push_back(ces.eigenvalues()(i));
        std::vector<Rational> exact_roots = detail::rational_roots(cp, lambdas);

        std::vector<bool> used(lambdas.size(), false);
        for (const auto& root : exact_roots) {
            DenseMatrix<Rational> shifted = mt;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= root;
            auto k = kernel(shifted);
            std::vector<Rational> u = k.vectors.at(0);
            Rational u0 = u[0];
            std::vector<Rational> y(nvars);
            for (std::size_t i = 0; i < nvars; ++i) {
                Rational s = 0;
                for (std::size_t b = 0; b < n; ++b) s += var_coords[i][b] * u[b];
                y[i] = s / u0;
            }
            out.exact.push_back(std::move(y));
            // retire the nearest numerical eigenvalue
            std::size_t best = 0;
            double bd = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < lambdas.size(); ++i) {
                if (used[i]) continue;
                double dd = std::abs(lambdas[i] - Complex(root.get_d(), 0.0));
                if (dd < bd) {
                    bd = dd;
                    best = i;
                }
            }
            used[best] = true;
        }
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            if (used[i]) continue;
            Eigen::VectorXcd u = ces.eigenvectors().col(long(i));
            std::vector<Complex> y(nvars);
            for (std::size_t v = 0; v < nvars; ++v) {
                Complex s = 0.0;
                for (std::size_t b = 0; b < n; ++b) s += var_coords[v][b].get_d() * u(long(b));
                y[v] = s / u(0);
            }
            out.numeric.push_back(detail::newton_refine(basis, std::move(y)));
        }
        out.reduced = true;
        return out;
    }
    out.reduced = false;
    return out;
}

namespace detail {

// Substitutes x = A x' into a homogeneous polynomial.
inline HomPoly<Rational> change_coordinates(const HomPoly<Rational>& f, const DenseMatrix<Rational>& a) {
    const std::size_t n = f.n();
    const std::size_t d = f.degree();
    std::vector<std::vector<HomPoly<Rational>>> powers(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        powers[j].push_back(HomPoly<Rational>(n, 0, {Rational(1)}));
        if (d > 0) {
            auto l = make_linear_form(a.row(j));
            for (std::size_t e = 1; e <= d; ++e) powers[j].push_back(pow_linear_form(l, e));
        }
    }
    HomPoly<Rational> out(n, d);
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (sgn(f[k]) == 0) continue;
        Multidegree m = multidegree_of(k, n, d);
        HomPoly<Rational> term(n, 0, {f[k]});
        for (std::size_t j = 0; j <= n; ++j)
            if (m[j] > 0) term = multiply(term, powers[j][m[j]]);
        out += term;
    }
    return out;
}

}  // namespace detail

/*
 * Projective zero set of a homogeneous ideal, computed in the affine chart
 * r·x = 1 for a random integer r with r_0 = 1. A chart is rejected when the
 * hyperplane r·x = 0 meets the zero set, and a new r is drawn.
 */
inline BaseLocus base_locus(const PolyIdeal& ideal, const SolverOptions& opts = {}) {
    BaseLocus locus;
    const std::size_t n = ideal.n;
    if (n + 1 > kMaxVars) throw std::invalid_argument("base_locus: too many variables");
    PolyIdeal gens = independent_generators(ideal);
    if (gens.generators.empty()) {
        locus.status = LocusStatus::positive_dimensional;
        locus.dimension = int(n);
        locus.detail = "all generators vanish identically";
        return locus;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int chart = 0; chart < opts.charts; ++chart) {
        // x = A x', where x'_0 = r·x and x'_i = x_i
        std::vector<Rational> r(n + 1);
        r[0] = 1;
        for (std::size_t i = 1; i <= n; ++i) r[i] = dist(rng);
        DenseMatrix<Rational> a = DenseMatrix<Rational>::identity(n + 1);
        for (std::size_t i = 1; i <= n; ++i) a(0, i) = -r[i];

        std::vector<SparsePoly> affine, infinity;
        for (const auto& g : gens.generators) {
            HomPoly<Rational> h = detail::change_coordinates(g, a);
            affine.push_back(dehomogenize(h));
            SparsePoly hi = dehomogenize(h, true);
            if (!hi.is_zero()) infinity.push_back(std::move(hi));
        }
        GroebnerResult gb = groebner_basis(affine, opts.limits);
        if (!gb.completed) {
            locus.status = LocusStatus::budget_exceeded;
            locus.detail = "Groebner basis exceeded its degree or pair budget";
            return locus;
        }
        const int dim = affine_dimension(gb.basis, n);
        if (dim > 0) {
            locus.status = LocusStatus::positive_dimensional;
            locus.dimension = dim;
            return locus;
        }
        GroebnerResult gi = groebner_basis(infinity, opts.limits);
        if (!gi.completed) {
            locus.status = LocusStatus::budget_exceeded;
            locus.detail = "Groebner basis at infinity exceeded its budget";
            return locus;
        }
        const bool meets_infinity = n > 0 && affine_dimension(gi.basis, n) > 0;
        if (meets_infinity) continue;
        if (dim < 0) {
            locus.status = LocusStatus::empty;
            locus.dimension = -1;
            return locus;
        }
        AffineSolutions sol = solve_zero_dimensional(gb.basis, n, rng, opts.separating_forms);
        locus.degree = sol.degree;
        if (!sol.reduced) {
            locus.status = LocusStatus::non_reduced;
            locus.dimension = 0;
            return locus;
        }
        auto lift = [&](auto y) {
            using P = typename decltype(y)::value_type;
            std::vector<P> xp(n + 1);
            xp[0] = P(1);
            for (std::size_t i = 1; i <= n; ++i) xp[i] = y[i - 1];
            std::vector<P> x(n + 1, P(0));
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j <= n; ++j)
                    if (sgn(a(i, j)) != 0) x[i] += scalar_cast<P>(a(i, j)) * xp[j];
            return x;
        };
        for (auto& y : sol.exact) locus.points.push_back(make_point(lift(std::move(y))));
        for (auto& y : sol.numeric) locus.points.push_back(make_point(lift(std::move(y))));
        locus.status = LocusStatus::finite_reduced;
        locus.dimension = 0;
        return locus;
    }
    // every chart met the zero set at infinity: there is a component there
    locus.status = LocusStatus::positive_dimensional;
    locus.dimension = 0;
    locus.detail = "zero set met every sampled hyperplane at infinity";
    return locus;
}

// ---------------------------------------------------------------------------
// Power iteration for a = 1
// ---------------------------------------------------------------------------

struct PowerIterationOptions {
    std::size_t starts = 200;
    std::size_t max_iterations = 20000;
    double tolerance = 1e-12;
    std::uint64_t seed = 0x5eed;
};

/*
 * Shifted fixed-point iteration v <- normalize(M(v^m) + alpha v), alpha = 1 + |M|,
 * from random real unit starts. Limits are deduplicated projectively; the
 * result is a subset of the real eigenvectors.
 */
inline std::vector<ProjectivePoint> power_iteration_eigenvectors(const TensorMap<double>& t,
                                                                 const PowerIterationOptions& opts = {}) {
    if (t.a != 1) throw std::invalid_argument("power_iteration_eigenvectors: needs a = 1");
    const std::size_t dim = t.n + 1;
    double norm = 0.0;
    for (const auto& wj : t.w)
        for (double c : wj.coeffs()) norm += std::fabs(c);
    const double alpha = 1.0 + norm;
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<ProjectivePoint> found;
    for (std::size_t s = 0; s < opts.starts; ++s) {
        std::vector<double> v(dim);
        double nv = 0.0;
        for (auto& x : v) {
            x = gauss(rng);
            nv += x * x;
        }
        nv = std::sqrt(nv);
        for (auto& x : v) x /= nv;
        bool converged = false;
        for (std::size_t it = 0; it < opts.max_iterations; ++it) {
            std::vector<double> next = t.apply(v);
            double nn = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                next[i] += alpha * v[i];
                nn += next[i] * next[i];
            }
            nn = std::sqrt(nn);
            if (nn == 0.0) break;
            double change = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                next[i] /= nn;
                change = std::max(change, std::fabs(next[i] - v[i]));
            }
            v = std::move(next);
            if (change < opts.tolerance) {
                converged = true;
                break;
            }
        }
        if (!converged) continue;
        std::vector<Complex> c(v.begin(), v.end());
        ProjectivePoint p = make_point(c);
        bool dup = std::any_of(found.begin(), found.end(), [&](const ProjectivePoint& q) { return same_point(p, q); });
        if (!dup) found.push_back(std::move(p));
    }
    return found;
}

}  // namespace waring

#endif  // WARING_SOLVE_HPP

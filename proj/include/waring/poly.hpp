#ifndef WARING_POLY_HPP
#define WARING_POLY_HPP

#include <waring/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace waring {

/// Exponent vector of a monomial in x_0..x_n.
using Multidegree = std::vector<unsigned>;

inline unsigned total_degree(const Multidegree& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

/*
 * Graded reverse lexicographic order. For equal total degree, a > b iff the
 * last nonzero entry of a - b is negative. Dense coefficient vectors list
 * monomials in DESCENDING order, so index 0 is x_0^d and the last index is x_n^d.
 */
inline bool grevlex_greater(const Multidegree& a, const Multidegree& b) {
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/// Number of monomials of degree d in n+1 variables.
inline std::size_t monomial_count(std::size_t n, std::size_t d) {
    return binomial(static_cast<long>(n + d), static_cast<long>(d));
}

namespace detail {
// monomials of degree t in the first v variables
inline std::size_t block_count(std::size_t v, std::size_t t) {
    if (v == 0) return t == 0 ? 1 : 0;
    return binomial(static_cast<long>(v - 1 + t), static_cast<long>(t));
}
}  // namespace detail

/// Rank of m among the degree-d monomials of n+1 variables in descending grevlex.
inline std::size_t monomial_index(const Multidegree& m, std::size_t n, std::size_t d) {
    if (m.size() != n + 1) throw std::invalid_argument("monomial_index: wrong number of exponents");
    if (total_degree(m) != d) throw std::invalid_argument("monomial_index: degree mismatch");
    std::size_t index = 0;
    std::size_t deg = d;
    for (std::size_t v = n; v >= 1; --v) {
        for (unsigned k = 0; k < m[v]; ++k) index += detail::block_count(v, deg - k);
        deg -= m[v];
    }
    return index;
}

inline Multidegree multidegree_of(std::size_t index, std::size_t n, std::size_t d) {
    if (index >= monomial_count(n, d)) throw std::out_of_range("multidegree_of: index out of range");
    Multidegree m(n + 1, 0);
    std::size_t deg = d;
    for (std::size_t v = n; v >= 1; --v) {
        unsigned k = 0;
        while (index >= detail::block_count(v, deg - k)) {
            index -= detail::block_count(v, deg - k);
            ++k;
        }
        m[v] = k;
        deg -= k;
    }
    m[0] = static_cast<unsigned>(deg);
    return m;
}

/// All degree-d monomials of n+1 variables, in index order.
inline std::vector<Multidegree> monomials(std::size_t n, std::size_t d) {
    std::vector<Multidegree> out;
    std::size_t count = monomial_count(n, d);
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(multidegree_of(i, n, d));
    return out;
}

template <class S>
S from_integer(const Integer& z) {
    if constexpr (std::is_same_v<S, Rational>) {
        return Rational(z);
    } else if constexpr (std::is_same_v<S, double>) {
        return z.get_d();
    } else {
        return S(z.get_d());
    }
}

/// prod_j a_j! / (a_j - b_j)!, the scalar produced by applying d^b to x^a (b <= a).
inline Integer falling_factor(const Multidegree& a, const Multidegree& b) {
    Integer r = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (unsigned t = 0; t < b[j]; ++t) r *= a[j] - t;
    }
    return r;
}

inline Integer multinomial(const Multidegree& a) {
    Integer r = factorial(total_degree(a));
    for (unsigned e : a) r /= factorial(e);
    return r;
}

/// Dense homogeneous polynomial of degree d in x_0..x_n.
template <class S>
class HomPoly {
public:
    using Scalar = S;

    HomPoly() = default;
    HomPoly(std::size_t n, std::size_t d) : n_(n), d_(d), coeffs_(monomial_count(n, d), S(0)) {}
    HomPoly(std::size_t n, std::size_t d, std::vector<S> coeffs)
        : n_(n), d_(d), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != monomial_count(n, d))
            throw std::invalid_argument("HomPoly: coefficient vector has wrong length");
    }

    static HomPoly monomial(std::size_t n, const Multidegree& m, S c = S(1)) {
        HomPoly p(n, total_degree(m));
        p[monomial_index(m, n, p.degree())] = std::move(c);
        return p;
    }

    static HomPoly variable(std::size_t n, std::size_t i) {
        Multidegree m(n + 1, 0);
        m.at(i) = 1;
        return monomial(n, m);
    }

    std::size_t n() const { return n_; }
    std::size_t nvars() const { return n_ + 1; }
    std::size_t degree() const { return d_; }
    std::size_t size() const { return coeffs_.size(); }

    const S& operator[](std::size_t i) const { return coeffs_[i]; }
    S& operator[](std::size_t i) { return coeffs_[i]; }
    const S& coeff(const Multidegree& m) const { return coeffs_[monomial_index(m, n_, d_)]; }
    S& coeff(const Multidegree& m) { return coeffs_[monomial_index(m, n_, d_)]; }
    const std::vector<S>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const S& c) { return waring::is_zero(c); });
    }

    HomPoly& operator+=(const HomPoly& o) {
        check_same_space(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    HomPoly& operator-=(const HomPoly& o) {
        check_same_space(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    HomPoly& operator*=(const S& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(HomPoly a, const S& c) { return a *= c; }
    friend HomPoly operator*(const S& c, HomPoly a) { return a *= c; }
    friend HomPoly operator-(HomPoly a) {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }
    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_same_space(const HomPoly& o) const {
        if (n_ != o.n_ || d_ != o.d_) throw std::invalid_argument("HomPoly: mismatched spaces");
    }

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<S> coeffs_;
};

/// A degree-1 HomPoly; coefficient i is the coordinate on x_i.
template <class S>
using LinearForm = HomPoly<S>;

template <class S>
LinearForm<S> make_linear_form(std::vector<S> coords) {
    if (coords.empty()) throw std::invalid_argument("make_linear_form: no coordinates");
    std::size_t n = coords.size() - 1;
    return LinearForm<S>(n, 1, std::move(coords));
}

template <class To, class From>
HomPoly<To> convert(const HomPoly<From>& f) {
    std::vector<To> c;
    c.reserve(f.size());
    for (const auto& x : f.coeffs()) c.push_back(scalar_cast<To>(x));
    return HomPoly<To>(f.n(), f.degree(), std::move(c));
}

/// Expands (sum_j v_j x_j)^d by the multinomial theorem.
template <class S>
HomPoly<S> pow_linear_form(const LinearForm<S>& v, std::size_t d) {
    if (v.degree() != 1) throw std::invalid_argument("pow_linear_form: not a linear form");
    if (d < 1) throw std::invalid_argument("pow_linear_form: degree must be positive");
    const std::size_t n = v.n();
    // powers[j][e] = v_j^e
    std::vector<std::vector<S>> powers(n + 1, std::vector<S>(d + 1, S(1)));
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t e = 1; e <= d; ++e) powers[j][e] = powers[j][e - 1] * v[j];
    HomPoly<S> out(n, d);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Multidegree a = multidegree_of(i, n, d);
        S c = from_integer<S>(multinomial(a));
        for (std::size_t j = 0; j <= n; ++j) c *= powers[j][a[j]];
        out[i] = c;
    }
    return out;
}

template <class S>
HomPoly<S> partial_derivative(const HomPoly<S>& f, std::size_t i) {
    if (f.degree() < 1) throw std::invalid_argument("partial_derivative: degree must be positive");
    if (i > f.n()) throw std::out_of_range("partial_derivative: variable index out of range");
    HomPoly<S> out(f.n(), f.degree() - 1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        Multidegree a = multidegree_of(k, f.n(), out.degree());
        a[i] += 1;
        out[k] = f.coeff(a) * from_integer<S>(Integer(a[i]));
    }
    return out;
}

/// Mixed partial derivative d^mu f.
template <class S>
HomPoly<S> derivative(const HomPoly<S>& f, const Multidegree& mu) {
    unsigned order = total_degree(mu);
    if (mu.size() != f.nvars()) throw std::invalid_argument("derivative: wrong number of exponents");
    if (order > f.degree()) throw std::invalid_argument("derivative: order exceeds degree");
    HomPoly<S> out(f.n(), f.degree() - order);
    for (std::size_t k = 0; k < out.size(); ++k) {
        Multidegree b = multidegree_of(k, f.n(), out.degree());
        Multidegree a = b;
        for (std::size_t j = 0; j < a.size(); ++j) a[j] += mu[j];
        out[k] = f.coeff(a) * from_integer<S>(falling_factor(a, mu));
    }
    return out;
}

template <class S, class P>
P evaluate(const HomPoly<S>& f, std::span<const P> p) {
    if (p.size() != f.nvars()) throw std::invalid_argument("evaluate: point has wrong dimension");
    const std::size_t d = f.degree();
    std::vector<std::vector<P>> powers(p.size(), std::vector<P>(d + 1, P(1)));
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t e = 1; e <= d; ++e) powers[j][e] = powers[j][e - 1] * p[j];
    P acc(0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (is_zero(f[k])) continue;
        Multidegree a = multidegree_of(k, f.n(), d);
        P term = scalar_cast<P>(f[k]);
        for (std::size_t j = 0; j < a.size(); ++j) term *= powers[j][a[j]];
        acc += term;
    }
    return acc;
}

template <class S>
S evaluate(const HomPoly<S>& f, const std::vector<S>& p) {
    return evaluate<S, S>(f, std::span<const S>(p));
}

template <class S>
HomPoly<S> multiply(const HomPoly<S>& f, const HomPoly<S>& g) {
    if (f.n() != g.n()) throw std::invalid_argument("multiply: different variable counts");
    HomPoly<S> out(f.n(), f.degree() + g.degree());
    std::vector<Multidegree> gm = monomials(g.n(), g.degree());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (is_zero(f[i])) continue;
        Multidegree a = multidegree_of(i, f.n(), f.degree());
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (is_zero(g[j])) continue;
            Multidegree c = a;
            for (std::size_t t = 0; t < c.size(); ++t) c[t] += gm[j][t];
            out.coeff(c) += f[i] * g[j];
        }
    }
    return out;
}

/// Largest coefficient magnitude.
template <class S>
double max_norm(const HomPoly<S>& f) {
    double m = 0.0;
    for (const auto& c : f.coeffs()) m = std::max(m, ScalarTraits<S>::magnitude(c));
    return m;
}

}  // namespace waring

#endif  // WARING_POLY_HPP

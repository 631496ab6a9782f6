#ifndef WARING_GROEBNER_HPP
#define WARING_GROEBNER_HPP

#include <waring/poly.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace waring {

// Sparse polynomials in at most kMaxVars variables over the rationals, with
// Buchberger's algorithm for the grevlex order. Used only on the small affine
// systems produced by dehomogenizing an eigenvector ideal.

inline constexpr std::size_t kMaxVars = 8;

struct Exponents {
    std::array<std::uint16_t, kMaxVars> e{};
    unsigned degree = 0;

    friend bool operator==(const Exponents& a, const Exponents& b) { return a.e == b.e; }
    friend bool operator!=(const Exponents& a, const Exponents& b) { return a.e != b.e; }
};

/// Grevlex: higher degree first, ties broken by the smaller last differing exponent.
inline bool grevlex_greater(const Exponents& a, const Exponents& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    for (std::size_t i = kMaxVars; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    r.degree = a.degree + b.degree;
    return r;
}

inline Exponents mono_div(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    r.degree = a.degree - b.degree;
    return r;
}

inline Exponents mono_lcm(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.degree += r.e[i];
    }
    return r;
}

inline Exponents var_power(std::size_t var, unsigned k) {
    Exponents r;
    r.e[var] = static_cast<std::uint16_t>(k);
    r.degree = k;
    return r;
}

struct Term {
    Exponents mono;
    Rational coeff;
};

/// Terms kept in strictly decreasing grevlex order with nonzero coefficients.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {
        if (nvars > kMaxVars) throw std::invalid_argument("SparsePoly: too many variables");
    }

    static SparsePoly constant(std::size_t nvars, const Rational& c) {
        SparsePoly p(nvars);
        if (sgn(c) != 0) p.terms_.push_back({Exponents{}, c});
        return p;
    }

    /// Builds from unordered terms, merging duplicates.
    static SparsePoly from_terms(std::size_t nvars, std::vector<Term> terms) {
        SparsePoly p(nvars);
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
            } else if (sgn(t.coeff) != 0) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Exponents& leading_monomial() const { return terms_.front().mono; }
    const Rational& leading_coeff() const { return terms_.front().coeff; }
    unsigned degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree);
        return d;
    }

    void make_monic() {
        if (terms_.empty()) return;
        Rational inv = 1 / terms_.front().coeff;
        for (auto& t : terms_) t.coeff *= inv;
    }

    /// this - c * x^shift * g
    SparsePoly minus_multiple(const Rational& c, const Exponents& shift, const SparsePoly& g) const {
        SparsePoly out(nvars_);
        out.terms_.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                out.terms_.push_back(terms_[i++]);
                continue;
            }
            Exponents gm = mono_mul(g.terms_[j].mono, shift);
            if (i == terms_.size() || grevlex_greater(gm, terms_[i].mono)) {
                out.terms_.push_back({gm, -c * g.terms_[j].coeff});
                ++j;
            } else if (gm == terms_[i].mono) {
                Rational v = terms_[i].coeff - c * g.terms_[j].coeff;
                if (sgn(v) != 0) out.terms_.push_back({gm, std::move(v)});
                ++i;
                ++j;
            } else {
                out.terms_.push_back(terms_[i++]);
            }
        }
        return out;
    }

    SparsePoly times_monomial(const Exponents& m, const Rational& c = 1) const {
        SparsePoly out(nvars_);
        for (const auto& t : terms_) out.terms_.push_back({mono_mul(t.mono, m), t.coeff * c});
        return out;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        return a.minus_multiple(Rational(-1), Exponents{}, b);
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
        return true;
    }

    template <class P>
    P evaluate(const std::vector<P>& x) const {
        P acc(0);
        for (const auto& t : terms_) {
            P v = scalar_cast<P>(t.coeff);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < t.mono.e[i]; ++k) v *= x[i];
            acc += v;
        }
        return acc;
    }

    /// Partial derivative with respect to variable i.
    SparsePoly derivative(std::size_t i) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.mono.e[i] == 0) continue;
            Term d = t;
            d.coeff *= t.mono.e[i];
            d.mono.e[i] -= 1;
            d.mono.degree -= 1;
            out.push_back(std::move(d));
        }
        return from_terms(nvars_, std::move(out));
    }

private:
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

/*
 * Sets x_0 = 1 in a homogeneous polynomial in x_0..x_n, giving a sparse
 * polynomial in y_1..y_n (stored as variables 0..n-1). With at_infinity set,
 * x_0 = 0 instead and the result stays homogeneous in x_1..x_n.
 */
inline SparsePoly dehomogenize(const HomPoly<Rational>& f, bool at_infinity = false) {
    const std::size_t nv = f.n();
    std::vector<Term> terms;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (sgn(f[k]) == 0) continue;
        Multidegree a = multidegree_of(k, f.n(), f.degree());
        if (at_infinity && a[0] != 0) continue;
        Term t;
        for (std::size_t i = 1; i <= f.n(); ++i) {
            t.mono.e[i - 1] = static_cast<std::uint16_t>(a[i]);
            t.mono.degree += a[i];
        }
        t.coeff = f[k];
        terms.push_back(std::move(t));
    }
    return SparsePoly::from_terms(nv, std::move(terms));
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

struct GroebnerLimits {
    unsigned degree_cap = 64;       // S-pairs whose lcm exceeds this abort the run
    std::size_t pair_limit = 100000;
};

struct GroebnerResult {
    bool completed = false;  // false when a limit was hit
    std::vector<SparsePoly> basis;
    std::size_t pairs_processed = 0;
};

/// Fully reduces p modulo the monic polynomials in g.
inline SparsePoly normal_form(SparsePoly p, const std::vector<SparsePoly>& g) {
    std::vector<Term> rest;
    const std::size_t nv = p.nvars();
    while (!p.is_zero()) {
        const Term& lt = p.terms().front();
        const SparsePoly* div = nullptr;
        for (const auto& h : g)
            if (!h.is_zero() && divides(h.leading_monomial(), lt.mono)) {
                div = &h;
                break;
            }
        if (div) {
            Rational c = lt.coeff / div->leading_coeff();
            Exponents s = mono_div(lt.mono, div->leading_monomial());
            p = p.minus_multiple(c, s, *div);
        } else {
            rest.push_back(lt);
            p = p.minus_multiple(lt.coeff, Exponents{}, SparsePoly::from_terms(nv, {Term{lt.mono, Rational(1)}}));
        }
    }
    return SparsePoly::from_terms(nv, std::move(rest));
}

namespace detail {

inline SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g) {
    Exponents l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    SparsePoly a = f.times_monomial(mono_div(l, f.leading_monomial()), 1 / f.leading_coeff());
    return a.minus_multiple(1 / g.leading_coeff(), mono_div(l, g.leading_monomial()), g);
}

inline bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

inline std::vector<SparsePoly> reduce_basis(std::vector<SparsePoly> g) {
    // drop elements whose leading monomial is divisible by another's
    std::vector<SparsePoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& a = g[j].leading_monomial();
            const auto& b = g[i].leading_monomial();
            if (divides(a, b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<SparsePoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        SparsePoly lead = SparsePoly::from_terms(minimal[i].nvars(), {minimal[i].terms().front()});
        SparsePoly tail = minimal[i].minus_multiple(Rational(1), Exponents{}, lead);
        minimal[i] = lead + normal_form(tail, others);
        minimal[i].make_monic();
    }
    std::sort(minimal.begin(), minimal.end(), [](const SparsePoly& a, const SparsePoly& b) {
        return grevlex_greater(b.leading_monomial(), a.leading_monomial());
    });
    return minimal;
}

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by gens (grevlex).
inline GroebnerResult groebner_basis(const std::vector<SparsePoly>& gens, const GroebnerLimits& limits = {}) {
    GroebnerResult res;
    std::vector<SparsePoly> g;
    for (const auto& p : gens) {
        SparsePoly h = normal_form(p, g);
        if (h.is_zero()) continue;
        h.make_monic();
        g.push_back(std::move(h));
    }
    if (g.empty()) {
        res.completed = true;
        return res;
    }

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    auto add_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
    };
    for (std::size_t k = 1; k < g.size(); ++k) add_pairs(k);

    auto pair_degree = [&](const Pair& p) { return mono_lcm(g[p.first].leading_monomial(), g[p.second].leading_monomial()).degree; };
    auto is_pending = [&](std::size_t i, std::size_t j) { return pending.count({std::min(i, j), std::max(i, j)}) > 0; };

    while (!pending.empty()) {
        // normal selection strategy: smallest lcm degree first
        auto best = pending.begin();
        unsigned best_deg = pair_degree(*best);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            unsigned dg = pair_degree(*it);
            if (dg < best_deg) {
                best = it;
                best_deg = dg;
            }
        }
        Pair p = *best;
        pending.erase(best);
        const auto& li = g[p.first].leading_monomial();
        const auto& lj = g[p.second].leading_monomial();
        if (detail::coprime(li, lj)) continue;
        Exponents l = mono_lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == p.first || k == p.second) continue;
            if (divides(g[k].leading_monomial(), l) && !is_pending(p.first, k) && !is_pending(p.second, k)) chain = true;
        }
        if (chain) continue;
        if (l.degree > limits.degree_cap || ++res.pairs_processed > limits.pair_limit) {
            res.basis = g;
            return res;
        }
        SparsePoly h = normal_form(detail::s_polynomial(g[p.first], g[p.second]), g);
        if (h.is_zero()) continue;
        h.make_monic();
        g.push_back(std::move(h));
        add_pairs(g.size() - 1);
        if (g.back().leading_monomial().degree == 0) break;  // the unit ideal
    }
    if (!g.empty() && g.back().leading_monomial().degree == 0) {
        res.basis = {SparsePoly::constant(g.back().nvars(), Rational(1))};
    } else {
        res.basis = detail::reduce_basis(std::move(g));
    }
    res.completed = true;
    return res;
}

// ---------------------------------------------------------------------------
// Reading off the quotient ring from leading monomials
// ---------------------------------------------------------------------------

inline bool is_unit_ideal(const std::vector<SparsePoly>& basis) {
    for (const auto& g : basis)
        if (g.leading_monomial().degree == 0) return true;
    return false;
}

/// Krull dimension of the affine variety; -1 for the unit ideal.
inline int affine_dimension(const std::vector<SparsePoly>& basis, std::size_t nvars) {
    if (is_unit_ideal(basis)) return -1;
    int best = 0;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& g : basis) {
            const auto& lm = g.leading_monomial();
            bool inside = true;
            for (std::size_t i = 0; i < nvars; ++i)
                if (lm.e[i] && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

inline bool is_zero_dimensional(const std::vector<SparsePoly>& basis, std::size_t nvars) {
    return affine_dimension(basis, nvars) <= 0;
}

/// Standard monomials of a zero-dimensional ideal in increasing grevlex order.
inline std::vector<Exponents> normal_set(const std::vector<SparsePoly>& basis, std::size_t nvars) {
    if (!is_zero_dimensional(basis, nvars)) throw std::invalid_argument("normal_set: ideal is not zero-dimensional");
    std::vector<Exponents> out;
    if (is_unit_ideal(basis)) return out;
    auto standard = [&](const Exponents& m) {
        for (const auto& g : basis)
            if (divides(g.leading_monomial(), m)) return false;
        return true;
    };
    std::vector<Exponents> layer = {Exponents{}};
    std::set<std::array<std::uint16_t, kMaxVars>> seen;
    while (!layer.empty()) {
        std::vector<Exponents> next;
        for (const auto& m : layer) {
            if (!standard(m)) continue;
            out.push_back(m);
            for (std::size_t i = 0; i < nvars; ++i) {
                Exponents x = mono_mul(m, var_power(i, 1));
                if (seen.insert(x.e).second) next.push_back(x);
            }
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) { return grevlex_greater(b, a); });
    return out;
}

}  // namespace waring

#endif  // WARING_GROEBNER_HPP

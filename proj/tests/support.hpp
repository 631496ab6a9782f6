#pragma once

#include <waring/decompose.hpp>
#include <waring/poly.hpp>

#include <cmath>
#include <random>
#include <vector>

namespace testutil {

using waring::HomPoly;
using waring::Rational;

inline std::vector<Rational> random_ints(std::mt19937_64& rng, std::size_t count, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Rational> v(count);
    for (auto& x : v) x = dist(rng);
    return v;
}

inline HomPoly<Rational> random_poly(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    return HomPoly<Rational>(n, d, random_ints(rng, waring::monomial_count(n, d)));
}

inline std::vector<double> random_reals(std::mt19937_64& rng, std::size_t count) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> v(count);
    for (auto& x : v) x = dist(rng);
    return v;
}

inline HomPoly<double> random_real_poly(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    return HomPoly<double>(n, d, random_reals(rng, waring::monomial_count(n, d)));
}

// nonzero integer vector
inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t nvars) {
    while (true) {
        auto v = random_ints(rng, nvars);
        for (const auto& x : v)
            if (sgn(x) != 0) return v;
    }
}

// (u + sqrt(q) w)^d + (u - sqrt(q) w)^d, rational although the summands are not
inline HomPoly<Rational> conjugate_pair(const std::vector<Rational>& u, const std::vector<Rational>& w, long q,
                                        std::size_t d) {
    using namespace waring;
    const std::size_t n = u.size() - 1;
    auto lu = make_linear_form(u), lw = make_linear_form(w);
    HomPoly<Rational> out(n, d);
    for (std::size_t k = 0; k <= d; k += 2) {
        Rational c = 2 * Rational(long(binomial(long(d), long(k))));
        for (std::size_t j = 0; j < k / 2; ++j) c *= q;
        HomPoly<Rational> t(n, 0, {c});
        if (k < d) t = multiply(t, pow_linear_form(lu, d - k));
        if (k > 0) t = multiply(t, pow_linear_form(lw, k));
        out += t;
    }
    return out;
}

// u ± sqrt(q) w as complex vectors
inline std::vector<waring::Complex> conjugate_point(const std::vector<Rational>& u, const std::vector<Rational>& w,
                                                    long q, int sign) {
    const waring::Complex root = q < 0 ? waring::Complex(0.0, std::sqrt(double(-q))) : std::sqrt(double(q));
    std::vector<waring::Complex> v;
    for (std::size_t i = 0; i < u.size(); ++i) v.push_back(u[i].get_d() + double(sign) * root * w[i].get_d());
    return v;
}

// every expected point appears exactly once among the summands, and nothing else
inline bool same_point_set(const std::vector<waring::Summand>& terms, const std::vector<waring::ProjectivePoint>& want) {
    if (terms.size() != want.size()) return false;
    std::vector<bool> used(terms.size(), false);
    for (const auto& p : want) {
        bool hit = false;
        for (std::size_t i = 0; i < terms.size() && !hit; ++i) {
            if (used[i] || !waring::same_point(terms[i].point, p)) continue;
            used[i] = hit = true;
        }
        if (!hit) return false;
    }
    return true;
}

inline std::vector<waring::ProjectivePoint> points_of(const std::vector<std::vector<Rational>>& forms) {
    std::vector<waring::ProjectivePoint> out;
    for (const auto& v : forms) out.push_back(waring::make_point(v));
    return out;
}

}  // namespace testutil

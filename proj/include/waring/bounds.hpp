#ifndef WARING_BOUNDS_HPP
#define WARING_BOUNDS_HPP

#include <waring/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace waring {

/// Rank of a general form of degree d in n+1 variables (Alexander-Hirschowitz).
inline std::size_t generic_rank(std::size_t n, std::size_t d) {
    if (n < 1 || d < 2) throw std::invalid_argument("generic_rank: needs n >= 1 and d >= 2");
    if (d == 2) return n + 1;
    if (d == 4 && n >= 2 && n <= 4) return binomial(long(n + 2), 2);
    if (n == 4 && d == 3) return 8;
    const std::size_t count = binomial(long(n + d), long(d));
    return (count + n) / (n + 1);
}

/// Whether rank k falls in one of the defective families.
inline bool is_defective(std::size_t n, std::size_t d, std::size_t k) {
    if (d == 2) return k >= 2 && k <= n;
    if (d == 4 && n >= 2 && n <= 4) return k == binomial(long(n + 2), 2) - 1;
    if (n == 4 && d == 3) return k == 7;
    return false;
}

enum class UniquenessClass {
    unique,
    defective_infinitely_many,
    weakly_defective_two,
    finitely_many_generic,
    infinitely_many_generic,
    rank_exceeds_generic
};

inline const char* to_string(UniquenessClass u) {
    switch (u) {
        case UniquenessClass::unique: return "unique";
        case UniquenessClass::defective_infinitely_many: return "defective_infinitely_many";
        case UniquenessClass::weakly_defective_two: return "weakly_defective_two";
        case UniquenessClass::finitely_many_generic: return "finitely_many_generic";
        case UniquenessClass::infinitely_many_generic: return "infinitely_many_generic";
        case UniquenessClass::rank_exceeds_generic: return "rank_exceeds_generic";
    }
    return "?";
}

/*
 * Number of decompositions of a general form of rank r. At the generic rank
 * the three families with exceptional generic rank always have a positive
 * dimensional set of decompositions, so they are classified as infinite.
 */
inline UniquenessClass uniqueness_class(std::size_t n, std::size_t d, std::size_t r) {
    if (r < 1) throw std::invalid_argument("uniqueness_class: needs r >= 1");
    const std::size_t g = generic_rank(n, d);
    if (r > g) return UniquenessClass::rank_exceeds_generic;
    if (r < g) {
        if (is_defective(n, d, r)) return UniquenessClass::defective_infinitely_many;
        if ((n == 2 && d == 6 && r == 9) || (n == 3 && d == 4 && r == 8)) return UniquenessClass::weakly_defective_two;
        return UniquenessClass::unique;
    }
    if ((n == 1 && d % 2 == 1) || (n == 2 && d == 5) || (n == 3 && d == 3)) return UniquenessClass::unique;
    const bool exceptional = d == 2 || (d == 4 && n >= 2 && n <= 4) || (n == 4 && d == 3);
    if (exceptional) return UniquenessClass::infinitely_many_generic;
    return binomial(long(n + d), long(d)) % (n + 1) == 0 ? UniquenessClass::finitely_many_generic
                                                          : UniquenessClass::infinitely_many_generic;
}

/// Count of eigenvectors of a general map in Hom(S^m V, Λ^a V).
struct EigenCount {
    enum Kind { finite_count, infinite } kind = finite_count;
    std::size_t value = 0;

    bool finite() const { return kind == finite_count; }
    std::string str() const { return finite() ? std::to_string(value) : "infinite"; }
    friend bool operator==(const EigenCount&, const EigenCount&) = default;
};

inline EigenCount eigenvector_count(std::size_t n, std::size_t m, std::size_t a) {
    if (m < 1) throw std::invalid_argument("eigenvector_count: needs m >= 1");
    if (a > n + 1) throw std::invalid_argument("eigenvector_count: needs a <= n+1");
    auto pow = [](std::size_t b, std::size_t e) {
        std::size_t r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= b;
        return r;
    };
    if (n == 1 && (a == 0 || a == 2)) return {EigenCount::finite_count, m};
    if (a == 0 || a == n + 1) return {EigenCount::infinite, 0};
    if (a == 1) {
        // (m^{n+1} - 1) / (m - 1), written as a sum so that m = 1 is covered
        std::size_t s = 0;
        for (std::size_t i = 0; i <= n; ++i) s += pow(m, i);
        return {EigenCount::finite_count, s};
    }
    if (a + 1 == n) {
        const std::size_t top = pow(m + 1, n + 1);
        const std::size_t num = n % 2 == 0 ? top + 1 : top - 1;
        return {EigenCount::finite_count, num / (m + 2)};
    }
    if (a >= 2 && a + 2 <= n) return {EigenCount::finite_count, 0};
    // a = n >= 2: a single equation of degree m+1, a hypersurface
    return {EigenCount::infinite, 0};
}

enum class Method { catalecticant, koszul_a1, koszul_general, automatic };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::catalecticant: return "catalecticant";
        case Method::koszul_a1: return "koszul";
        case Method::koszul_general: return "koszul-general";
        case Method::automatic: return "auto";
    }
    return "?";
}

enum class Applicability { guaranteed, borderline_retry, not_guaranteed };

inline const char* to_string(Applicability a) {
    switch (a) {
        case Applicability::guaranteed: return "guaranteed";
        case Applicability::borderline_retry: return "borderline_retry";
        case Applicability::not_guaranteed: return "not_guaranteed";
    }
    return "?";
}

/// Largest r covered by the Koszul bound for n >= 3, d = 2m+1 (0 if none applies).
inline std::size_t koszul_general_threshold(std::size_t n, std::size_t d) {
    if (n < 3 || d % 2 == 0) return 0;
    const std::size_t m = (d - 1) / 2;
    std::size_t bound = binomial(long(m + n), long(n));
    if (n == 3) {
        // (1/3)((1/2)(m+4)(m+3)(m+1) - m^2/2 - m/2 - 8), kept over the integers as sixths
        const long six = 3 * long(m + 4) * long(m + 3) * long(m + 1) - 3 * long(m * m) - 3 * long(m) - 48;
        if (six > 0) bound = std::max<std::size_t>(bound, std::size_t(six / 18));
        // cubic surfaces: the five points of the pentahedral decomposition
        if (m == 1) bound = std::max<std::size_t>(bound, 5);
    }
    return bound;
}

/// Whether the method's theorem covers a general form of rank r.
inline Applicability applicability(std::size_t n, std::size_t d, std::size_t r, Method method) {
    if (n < 1 || d < 2) throw std::invalid_argument("applicability: needs n >= 1 and d >= 2");
    switch (method) {
        case Method::catalecticant: {
            const std::size_t m = (d + 1) / 2;
            if (d % 2 == 0) {
                const std::size_t b = binomial(long(n + m), long(n));
                if (r + n + 1 <= b) return Applicability::guaranteed;
                if (r + n == b) return Applicability::borderline_retry;
                return Applicability::not_guaranteed;
            }
            return r <= binomial(long(n + m - 1), long(n)) ? Applicability::guaranteed : Applicability::not_guaranteed;
        }
        case Method::koszul_a1: {
            if (n != 2 || d % 2 == 0) return Applicability::not_guaranteed;
            const std::size_t m = (d - 1) / 2;
            if (2 * r <= m * m + 3 * m + 4) return Applicability::guaranteed;
            if (2 * r <= m * m + 4 * m + 2) return Applicability::borderline_retry;
            return Applicability::not_guaranteed;
        }
        case Method::koszul_general: {
            if (n == 2) return applicability(n, d, r, Method::koszul_a1);
            const std::size_t t = koszul_general_threshold(n, d);
            return t > 0 && r <= t ? Applicability::guaranteed : Applicability::not_guaranteed;
        }
        case Method::automatic: break;
    }
    throw std::invalid_argument("applicability: method must be concrete");
}

/// dim Hom(S^m V, Λ^a V) - binomial(n,a) r, for the two (n,a) with closed forms.
inline std::optional<std::size_t> expected_kernel_dim(std::size_t n, std::size_t d, std::size_t m, std::size_t a,
                                                      std::size_t r) {
    if (!((n == 2 && a == 1) || (n == 3 && a == 2))) return std::nullopt;
    if (m < 1 || m + 1 > d) return std::nullopt;
    const std::size_t source = binomial(long(n + m), long(n)) * binomial(long(n + 1), long(a));
    const std::size_t used = binomial(long(n), long(a)) * r;
    if (used > source) return std::nullopt;
    return source - used;
}

}  // namespace waring

#endif  // WARING_BOUNDS_HPP

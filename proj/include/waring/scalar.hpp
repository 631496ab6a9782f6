#ifndef WARING_SCALAR_HPP
#define WARING_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace waring {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

/// Zero threshold used by every float-mode comparison in the library.
inline constexpr double kFloatZero = 1e-12;

/*
 * ScalarTraits<T> is the single point where the exact and float fields
 * differ. Exact types answer is_zero() exactly; float types compare
 * against an explicit tolerance.
 */
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long v) { return Rational(v); }
    static bool is_zero(const Rational& x, double = 0.0) { return sgn(x) == 0; }
    static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
    static Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
    static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double from_int(long v) { return static_cast<double>(v); }
    static bool is_zero(double x, double tol = kFloatZero) { return std::fabs(x) <= tol; }
    static double magnitude(double x) { return std::fabs(x); }
    static Complex to_complex(double x) { return {x, 0.0}; }
    static std::string to_string(double x) {
        std::ostringstream os;
        os.precision(std::numeric_limits<double>::max_digits10);
        os << x;
        return os.str();
    }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static bool is_zero(const Complex& x, double tol = kFloatZero) { return std::abs(x) <= tol; }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static Complex to_complex(const Complex& x) { return x; }
    static std::string to_string(const Complex& x) {
        std::ostringstream os;
        os.precision(std::numeric_limits<double>::max_digits10);
        if (x.imag() == 0.0) {
            os << x.real();
        } else {
            os << x.real() << (x.imag() < 0 ? "-" : "+") << std::fabs(x.imag()) << "i";
        }
        return os.str();
    }
};

template <class T>
concept ExactScalar = ScalarTraits<T>::exact;

template <class T>
bool is_zero(const T& x) {
    return ScalarTraits<T>::is_zero(x);
}

/// Exact binomial coefficient; 0 when k < 0 or k > n.
inline std::size_t binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return static_cast<std::size_t>(r);
}

inline Integer factorial(unsigned k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

/// Converts a decimal literal such as "-1.25e3" or "3" into the exact rational it denotes.
inline Rational parse_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed decimal '" + text + "'");
    long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        std::size_t used = 0;
        try {
            exponent = std::stol(text.substr(i), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed exponent in '" + text + "'");
        }
        i += used;
    }
    if (i != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
    Integer num(digits, 10);
    long power = exponent - scale;
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(power < 0 ? -power : power));
    Rational r = power < 0 ? Rational(num, ten_pow) : Rational(num * ten_pow);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

/// Parses "p", "p/q" (integers) into an exact rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && i == 0);
        if (!ok) throw std::invalid_argument("malformed rational '" + text + "'");
    }
    Rational r;
    std::string body = text[0] == '+' ? text.substr(1) : text;
    if (r.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

template <class To, class From>
To scalar_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<To, Complex>) {
        return ScalarTraits<From>::to_complex(x);
    } else if constexpr (std::is_same_v<To, double> && std::is_same_v<From, Rational>) {
        return x.get_d();
    } else if constexpr (std::is_same_v<To, Rational> && std::is_same_v<From, double>) {
        return Rational(x);
    } else {
        static_assert(!sizeof(To), "unsupported scalar conversion");
    }
}

}  // namespace waring

#endif  // WARING_SCALAR_HPP

#ifndef WARING_POLYFILE_HPP
#define WARING_POLYFILE_HPP

// Plain-text polynomial files:
//
//   waring <n> <d> <exact|float>
//   <coefficient> <e0> <e1> ... <en>
//   ...
//
// '#' starts a comment. Exact coefficients are integers or p/q, float
// coefficients are decimals; both are stored as exact rationals.

#include <waring/decompose.hpp>
#include <waring/groebner.hpp>
#include <waring/poly.hpp>
#include <waring/scalar.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

enum class Field { exact, floating };

inline const char* to_string(Field f) { return f == Field::exact ? "exact" : "float"; }

struct PolyFile {
    Field field = Field::exact;
    HomPoly<Rational> poly;
};

/// Malformed input, positioned at a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

struct Token {
    std::string text;
    std::size_t column;
};

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline unsigned long parse_count(const Token& t, std::size_t line, const char* what) {
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, t.column, std::string("expected a non-negative integer for ") + what + ", got '" +
                                             t.text + "'");
    if (t.text.size() > 6) throw ParseError(line, t.column, std::string(what) + " is too large");
    return std::stoul(t.text);
}

}  // namespace detail

inline PolyFile parse_polyfile(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    std::optional<PolyFile> file;
    std::size_t n = 0, d = 0;
    std::vector<bool> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        if (!file) {
            if (toks[0].text != "waring")
                throw ParseError(lineno, toks[0].column, "expected header 'waring <n> <d> <exact|float>'");
            if (toks.size() != 4) {
                const std::size_t col = toks.size() > 4 ? toks[4].column : raw.size() + 1;
                throw ParseError(lineno, col, "header needs exactly: waring <n> <d> <exact|float>");
            }
            n = detail::parse_count(toks[1], lineno, "n");
            d = detail::parse_count(toks[2], lineno, "d");
            if (n < 1) throw ParseError(lineno, toks[1].column, "n must be at least 1");
            if (n + 1 > kMaxVars) throw ParseError(lineno, toks[1].column, "at most " + std::to_string(kMaxVars) + " variables are supported");
            if (d > 64) throw ParseError(lineno, toks[2].column, "degree is too large");
            PolyFile f;
            if (toks[3].text == "exact") f.field = Field::exact;
            else if (toks[3].text == "float") f.field = Field::floating;
            else throw ParseError(lineno, toks[3].column, "field must be 'exact' or 'float', got '" + toks[3].text + "'");
            f.poly = HomPoly<Rational>(n, d);
            seen.assign(f.poly.size(), false);
            file = std::move(f);
            continue;
        }
        if (toks.size() != n + 2) {
            const std::size_t col = toks.size() > n + 2 ? toks[n + 2].column : raw.size() + 1;
            throw ParseError(lineno, col,
                             "expected a coefficient and " + std::to_string(n + 1) + " exponents, got " +
                                 std::to_string(toks.size()) + " fields");
        }
        Rational c;
        try {
            c = file->field == Field::exact ? parse_rational(toks[0].text) : parse_decimal(toks[0].text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, toks[0].column, e.what());
        }
        Multidegree m(n + 1);
        std::size_t total = 0;
        for (std::size_t j = 0; j <= n; ++j) {
            m[j] = unsigned(detail::parse_count(toks[j + 1], lineno, "an exponent"));
            total += m[j];
        }
        if (total != d)
            throw ParseError(lineno, toks[1].column,
                             "exponents sum to " + std::to_string(total) + ", expected " + std::to_string(d));
        const std::size_t k = monomial_index(m, n, d);
        if (seen[k]) throw ParseError(lineno, toks[1].column, "monomial listed twice");
        seen[k] = true;
        file->poly[k] = c;
    }
    if (!file) throw ParseError(lineno + 1, 1, "missing header 'waring <n> <d> <exact|float>'");
    return *file;
}

inline PolyFile parse_polyfile(const std::string& text) {
    std::istringstream in(text);
    return parse_polyfile(in);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

/// Exact decimal expansion when the denominator is 2^a 5^b, else 17 significant digits.
inline std::string decimal_string(const Rational& x) {
    Integer den = x.get_den();
    std::size_t twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x.get_d());
        return buf;
    }
    const std::size_t places = std::max(twos, fives);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    Integer scaled = x.get_num() * (scale / x.get_den());
    const bool negative = sgn(scaled) < 0;
    if (negative) scaled = -scaled;
    std::string digits = scaled.get_str();
    if (places == 0) return (negative ? "-" : "") + digits;
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return (negative ? "-" : "") + digits;
}

inline std::string coefficient_string(const Rational& c, Field field) {
    return field == Field::exact ? c.get_str() : decimal_string(c);
}

inline std::string print_polyfile(const PolyFile& f) {
    std::ostringstream out;
    out << "waring " << f.poly.n() << " " << f.poly.degree() << " " << to_string(f.field) << "\n";
    for (std::size_t k = 0; k < f.poly.size(); ++k) {
        if (sgn(f.poly[k]) == 0) continue;
        out << coefficient_string(f.poly[k], f.field);
        for (unsigned e : multidegree_of(k, f.poly.n(), f.poly.degree())) out << " " << e;
        out << "\n";
    }
    return out.str();
}

/// 15 significant digits, dropping parts that are negligible next to |z|.
inline std::string complex_string(Complex z) {
    const double scale = std::max(1.0, std::abs(z));
    if (std::fabs(z.real()) <= 1e-13 * scale) z.real(0.0);
    if (std::fabs(z.imag()) <= 1e-13 * scale) z.imag(0.0);
    char buf[80];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.15g", z.real() == 0.0 ? 0.0 : z.real());
    } else if (z.real() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.15gi", z.imag());
    } else {
        std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    }
    return buf;
}

/// Coefficient and coordinates of a summand in the requested field.
struct RenderedTerm {
    std::string coefficient;
    std::vector<std::string> coordinates;
    std::string form;  // e.g. "1 * (x0 - 2*x1)^5"
};

inline RenderedTerm render_term(const Summand& t, std::size_t d, Field field) {
    RenderedTerm r;
    const bool exact = field == Field::exact && t.exact;
    r.coefficient = exact ? t.coefficient.get_str() : complex_string(t.numeric_coefficient);
    std::string lin;
    const std::size_t nv = t.point.numeric.size();
    for (std::size_t j = 0; j < nv; ++j) {
        std::string s = exact ? t.point.rational[j].get_str() : complex_string(t.point.numeric[j]);
        r.coordinates.push_back(s);
        if (s == "0") continue;
        const std::string var = "x" + std::to_string(j);
        const bool compound = !exact && s.find('i') != std::string::npos && s.find_first_of("+-", 1) != std::string::npos;
        std::string piece;
        bool negative = false;
        if (compound) piece = "(" + s + ")*" + var;
        else {
            negative = s[0] == '-';
            if (negative) s.erase(0, 1);
            piece = s == "1" ? var : s + "*" + var;
        }
        if (lin.empty()) lin = negative ? "-" + piece : piece;
        else lin += (negative ? " - " : " + ") + piece;
    }
    r.form = r.coefficient + " * (" + lin + ")^" + std::to_string(d);
    return r;
}

}  // namespace waring

#endif  // WARING_POLYFILE_HPP

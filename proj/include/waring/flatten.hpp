#ifndef WARING_FLATTEN_HPP
#define WARING_FLATTEN_HPP

#include <waring/matrix.hpp>
#include <waring/poly.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace waring {

// ---------------------------------------------------------------------------
// Exterior algebra bookkeeping. Basis vectors e_J of Λ^k are indexed by sorted
// k-subsets J of {0..n}, listed in colexicographic order (01, 02, 12, 03, ...).
// ---------------------------------------------------------------------------

using Subset = std::vector<std::size_t>;

inline bool colex_less(const Subset& a, const Subset& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/// All k-subsets of {0..universe-1} in colex order.
inline std::vector<Subset> subsets(std::size_t universe, std::size_t k) {
    std::vector<Subset> out;
    if (k > universe) return out;
    Subset s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        // next combination in lex order
        std::size_t i = k;
        while (i > 0 && s[i - 1] == universe - k + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

inline std::size_t subset_index(const std::vector<Subset>& list, const Subset& s) {
    auto it = std::lower_bound(list.begin(), list.end(), s, colex_less);
    if (it == list.end() || *it != s) throw std::out_of_range("subset_index: subset not listed");
    return static_cast<std::size_t>(it - list.begin());
}

inline Subset complement(const Subset& s, std::size_t universe) {
    Subset out;
    for (std::size_t i = 0; i < universe; ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
    return out;
}

/// Sign of the permutation sorting seq; 0 if seq has a repeated entry.
inline int permutation_sign(std::vector<std::size_t> seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return 0;
            if (seq[i] > seq[j]) sign = -sign;
        }
    }
    return sign;
}

/// Sign of e_J ∧ e_{complement(J)} against e_0 ∧ ... ∧ e_n.
inline int hodge_sign(const Subset& j, std::size_t universe) {
    Subset seq = j;
    Subset c = complement(j, universe);
    seq.insert(seq.end(), c.begin(), c.end());
    return permutation_sign(seq);
}

// ---------------------------------------------------------------------------
// Koszul matrices
// ---------------------------------------------------------------------------

/// An entry of a Koszul matrix: 0 (sign == 0) or sign * x_var.
struct SignedVariable {
    int sign = 0;
    std::size_t var = 0;
};

/*
 * k_i : R(-i)^{binom(n+1,i)} -> R(-i+1)^{binom(n+1,i-1)}, the standard Koszul
 * differential e_{j_0} ∧ ... ∧ e_{j_{i-1}} -> sum_t (-1)^t x_{j_t} e_{J \ j_t}.
 * Rows are the (i-1)-subsets, columns the i-subsets, both in colex order.
 */
struct KoszulMatrix {
    std::size_t n = 0;
    std::size_t index = 0;
    std::vector<Subset> row_labels;
    std::vector<Subset> col_labels;
    std::vector<SignedVariable> entries;  // row-major

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }
    const SignedVariable& operator()(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }

    /// Substitutes x = point.
    template <class S>
    DenseMatrix<S> at(const std::vector<S>& point) const {
        DenseMatrix<S> m(rows(), cols());
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < cols(); ++c) {
                const auto& e = (*this)(r, c);
                if (e.sign > 0) m(r, c) = point[e.var];
                if (e.sign < 0) m(r, c) = -point[e.var];
            }
        return m;
    }

    /// Entry (r, c) as a linear form.
    template <class S>
    HomPoly<S> entry_poly(std::size_t r, std::size_t c) const {
        const auto& e = (*this)(r, c);
        HomPoly<S> p(n, 1);
        if (e.sign != 0) p[e.var] = S(e.sign);
        return p;
    }
};

inline KoszulMatrix koszul_matrix(std::size_t n, std::size_t i) {
    if (i < 1 || i > n + 1) throw std::invalid_argument("koszul_matrix: index out of range");
    KoszulMatrix k;
    k.n = n;
    k.index = i;
    k.row_labels = subsets(n + 1, i - 1);
    k.col_labels = subsets(n + 1, i);
    k.entries.assign(k.rows() * k.cols(), SignedVariable{});
    for (std::size_t c = 0; c < k.cols(); ++c) {
        const Subset& l = k.col_labels[c];
        for (std::size_t t = 0; t < l.size(); ++t) {
            Subset rest = l;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
            std::size_t r = subset_index(k.row_labels, rest);
            k.entries[r * k.cols() + c] = SignedVariable{t % 2 == 0 ? 1 : -1, l[t]};
        }
    }
    return k;
}

// ---------------------------------------------------------------------------
// Flattenings
// ---------------------------------------------------------------------------

enum class FlatteningKind { catalecticant, koszul };

template <class S>
struct FlatteningMatrix {
    FlatteningKind kind = FlatteningKind::catalecticant;
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t m = 0;
    std::size_t a = 0;  // 0 for the catalecticant
    DenseMatrix<S> matrix;
    std::size_t bundle_rank = 1;

    /// Size of one column block (degree-m monomials).
    std::size_t source_block() const { return monomial_count(n, m); }
    /// Number of column blocks: one per a-subset.
    std::size_t source_blocks() const { return kind == FlatteningKind::koszul ? binomial(long(n + 1), long(a)) : 1; }
};

namespace detail {

/*
 * Catalecticant block with entry (beta, mu) = d^beta d^mu f, rows indexed by
 * degree (deg f - m) monomials and columns by degree m monomials. Column mu
 * is the derivative d^mu f written in divided-power coordinates.
 */
template <class S>
DenseMatrix<S> catalecticant_block(const HomPoly<S>& f, std::size_t m) {
    const std::size_t n = f.n();
    const std::size_t d = f.degree();
    const std::size_t rd = d - m;
    auto row_monos = monomials(n, rd);
    auto col_monos = monomials(n, m);
    DenseMatrix<S> out(row_monos.size(), col_monos.size());
    for (std::size_t c = 0; c < col_monos.size(); ++c) {
        for (std::size_t r = 0; r < row_monos.size(); ++r) {
            Multidegree a = row_monos[r];
            for (std::size_t j = 0; j <= n; ++j) a[j] += col_monos[c][j];
            const S& coeff = f.coeff(a);
            if (is_zero(coeff)) continue;
            Integer scale = 1;
            for (unsigned e : a) scale *= factorial(e);
            out(r, c) = coeff * from_integer<S>(scale);
        }
    }
    return out;
}

}  // namespace detail

/// C_f^m : S^m V* -> S^{d-m} V, shape binom(n+d-m,n) x binom(n+m,n).
template <class S>
FlatteningMatrix<S> catalecticant(const HomPoly<S>& f, std::size_t m) {
    if (m < 1 || m + 1 > f.degree()) throw std::invalid_argument("catalecticant: order m must satisfy 1 <= m <= d-1");
    FlatteningMatrix<S> out;
    out.kind = FlatteningKind::catalecticant;
    out.n = f.n();
    out.d = f.degree();
    out.m = m;
    out.a = 0;
    out.bundle_rank = 1;
    out.matrix = detail::catalecticant_block(f, m);
    return out;
}

/*
 * Koszul flattening P_f : Hom(S^m V, Λ^a V) -> Hom(Λ^{n-a} V, S^{d-m-1} V).
 *
 * Built from k_{n+1-a} by replacing each ±x_i with ±C^m_{f_i}, f_i = ∂f/∂x_i.
 * Rows: (n-a)-subsets K of the Koszul rows, each expanded to the degree d-m-1
 * monomials. Columns: a-subsets J in colex order, where J is the complement of
 * the Koszul column label; the column block carries the sign of e_J ∧ e_{J^c},
 * so block (K, J) equals sum_i sign(e_J ∧ e_i ∧ e_K) C_{f_i}.
 */
template <class S>
FlatteningMatrix<S> koszul_flattening(const HomPoly<S>& f, std::size_t m, std::size_t a) {
    const std::size_t n = f.n();
    const std::size_t d = f.degree();
    if (a > n) throw std::invalid_argument("koszul_flattening: wedge degree a must satisfy 0 <= a <= n");
    if (m < 1 || m + 1 > d) throw std::invalid_argument("koszul_flattening: order m must satisfy 1 <= m <= d-1");
    if (a == 0) return catalecticant(f, m);

    std::vector<DenseMatrix<S>> blocks;
    blocks.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) blocks.push_back(detail::catalecticant_block(partial_derivative(f, i), m));
    const std::size_t br = blocks[0].rows();
    const std::size_t bc = blocks[0].cols();

    KoszulMatrix k = koszul_matrix(n, n + 1 - a);
    std::vector<Subset> col_sets = subsets(n + 1, a);

    FlatteningMatrix<S> out;
    out.kind = FlatteningKind::koszul;
    out.n = n;
    out.d = d;
    out.m = m;
    out.a = a;
    out.bundle_rank = binomial(long(n), long(a));
    out.matrix = DenseMatrix<S>(k.rows() * br, col_sets.size() * bc);

    for (std::size_t kc = 0; kc < k.cols(); ++kc) {
        Subset j = complement(k.col_labels[kc], n + 1);
        const std::size_t jb = subset_index(col_sets, j);
        const int hs = hodge_sign(j, n + 1);
        for (std::size_t kr = 0; kr < k.rows(); ++kr) {
            const SignedVariable& e = k(kr, kc);
            if (e.sign == 0) continue;
            const int s = e.sign * hs;
            const DenseMatrix<S>& blk = blocks[e.var];
            for (std::size_t r = 0; r < br; ++r)
                for (std::size_t c = 0; c < bc; ++c) {
                    const S& x = blk(r, c);
                    if (is_zero(x)) continue;
                    out.matrix(kr * br + r, jb * bc + c) = s > 0 ? x : S(-x);
                }
        }
    }
    return out;
}

}  // namespace waring

#endif  // WARING_FLATTEN_HPP

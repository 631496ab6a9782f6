#ifndef WARING_MATRIX_HPP
#define WARING_MATRIX_HPP

#include <waring/scalar.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace waring {

/// Row-major dense matrix over an exact or float scalar.
template <class S>
class DenseMatrix {
public:
    using Scalar = S;

    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<S>& data() const { return data_; }

    std::vector<S> row(std::size_t r) const {
        return std::vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    std::vector<S> column(std::size_t c) const {
        std::vector<S> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    std::vector<S> apply(const std::vector<S>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("DenseMatrix::apply: dimension mismatch");
        std::vector<S> y(rows_, S(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!is_zero((*this)(r, c))) y[r] += (*this)(r, c) * x[c];
        return y;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    DenseMatrix& operator+=(const DenseMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("DenseMatrix: shape mismatch");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(const DenseMatrix& a) {
        DenseMatrix m = a;
        for (auto& x : m.data_) x = -x;
        return m;
    }
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

template <class To, class From>
DenseMatrix<To> convert(const DenseMatrix<From>& m) {
    DenseMatrix<To> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = scalar_cast<To>(m(r, c));
    return out;
}

template <class S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> to_eigen(const DenseMatrix<S>& m) {
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    return e;
}

}  // namespace waring

#endif  // WARING_MATRIX_HPP

#ifndef BIOTJKD_MATRIX_HPP
#define BIOTJKD_MATRIX_HPP

#include "biotjkd/complex.hpp"

#include <cstddef>
#include <vector>

namespace biotjkd {

// Dense rectangular matrix of Complex, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = Complex(1);
        return I;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix adjoint() const {
        Matrix R(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                R(j, i) = conj((*this)(i, j));
        return R;
    }

    Real max_abs() const {
        Real m(0);
        for (const auto& z : data_) {
            Real a = abs(z);
            if (a > m) m = a;
        }
        return m;
    }

    Real frobenius_norm() const {
        Real s(0);
        for (const auto& z : data_) s += norm(z);
        using std::sqrt;
        return sqrt(s);
    }

    CVector column(std::size_t j) const {
        CVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

inline Matrix operator*(const Matrix& A, const Matrix& B) {
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Complex& a = A(i, k);
            if (a.re == 0 && a.im == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C(i, j) += a * B(k, j);
        }
    return C;
}

inline CVector operator*(const Matrix& A, const CVector& x) {
    CVector y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            y[i] += A(i, j) * x[j];
    return y;
}

} // namespace biotjkd

#endif

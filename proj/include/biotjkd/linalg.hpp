#ifndef BIOTJKD_LINALG_HPP
#define BIOTJKD_LINALG_HPP

#include "biotjkd/errors.hpp"
#include "biotjkd/matrix.hpp"

namespace biotjkd {

// Solves A x = b by LU with partial pivoting at the ambient precision.
// Throws SingularMatrix when a pivot underflows 10^(5-digits) relative to
// the row norm.
CVector solve_linear(const Matrix& A, const CVector& b);

struct EigResult {
    RVector eigenvalues; // ascending
    Matrix eigenvectors; // unitary, columns match eigenvalues
};

// Cyclic Jacobi eigendecomposition of a Hermitian matrix: H = X diag(d) X*.
EigResult hermitian_eig(const Matrix& H);

struct GenEigResult {
    RVector eigenvalues;
    Matrix vectors; // V with V* S2 V = I and V* S1 V = diag(eigenvalues)
};

// S1 V = S2 V diag(L) via Cholesky reduction of the positive definite S2.
GenEigResult generalized_hermitian_eig(const Matrix& S1, const Matrix& S2);

// Upper-triangular R with S = R* R. Throws NotPositiveDefinite (with the
// failing pivot index) when a diagonal pivot is not strictly positive.
Matrix cholesky_upper(const Matrix& S);

// Roots of c[0] + c[1] s + ... + c[n] s^n. Hardware-precision companion
// eigenvalues seed a simultaneous Newton (Aberth) refinement at the ambient
// precision.
CVector poly_roots(const CVector& coeffs);

// Horner evaluation.
Complex poly_eval(const CVector& coeffs, const Complex& s);

// log10 of the 2-norm condition number via one-sided Jacobi SVD at the
// ambient precision. Returns +inf (sentinel) for numerically singular input.
Real cond2_log10(const Matrix& A);

// All singular values, descending.
RVector singular_values(const Matrix& A);

} // namespace biotjkd

#endif

#include "biotjkd/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <numeric>

namespace biotjkd {

namespace {

Real singular_threshold() {
    unsigned d = current_digits();
    return pow10_neg(d > 5 ? d - 5 : 1);
}

} // namespace

CVector solve_linear(const Matrix& A, const CVector& b) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n)
        throw InvalidRange("solve_linear: dimension mismatch");

    Matrix LU = A;
    CVector x = b;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    RVector row_norm(n, Real(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Real a = abs(A(i, j));
            if (a > row_norm[i]) row_norm[i] = a;
        }

    const Real thresh = singular_threshold();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        Real best = abs(LU(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            Real a = abs(LU(i, k));
            if (a > best) { best = a; piv = i; }
        }
        if (best <= thresh * row_norm[perm[piv]])
            throw SingularMatrix("solve_linear: pivot underflow at column " + std::to_string(k));
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(LU(k, j), LU(piv, j));
            std::swap(x[k], x[piv]);
            std::swap(perm[k], perm[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex m = LU(i, k) / LU(k, k);
            LU(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j)
                LU(i, j) -= m * LU(k, j);
            x[i] -= m * x[k];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j)
            x[i] -= LU(i, j) * x[j];
        x[i] /= LU(i, i);
    }
    return x;
}

namespace {

// One complex Jacobi rotation: phase factor times a real rotation chosen to
// annihilate the (p,q) entry of the Hermitian 2x2 [[app, apq],[conj(apq), aqq]].
struct Rot {
    Complex j11, j12, j21, j22;
};

Rot make_rotation(const Real& app, const Real& aqq, const Complex& apq) {
    using std::sqrt;
    Real g = abs(apq);
    Complex w = apq / g;
    Real tau = (aqq - app) / (2 * g);
    Real t = (tau >= 0 ? Real(1) : Real(-1)) / (abs(tau) + sqrt(1 + tau * tau));
    Real c = 1 / sqrt(1 + t * t);
    Real s = t * c;
    return {w * c, w * s, Complex(-s), Complex(c)};
}

} // namespace

EigResult hermitian_eig(const Matrix& H) {
    const std::size_t n = H.rows();
    if (H.cols() != n)
        throw InvalidRange("hermitian_eig: matrix not square");

    Real scale = H.max_abs();
    Real herm_tol = singular_threshold() * scale;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (abs(H(i, j) - conj(H(j, i))) > herm_tol)
                throw NotHermitian("hermitian_eig: entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") violates Hermitian symmetry");

    Matrix W = H;
    Matrix X = Matrix::identity(n);
    const Real off_tol = pow10_neg(current_digits()) * (scale == 0 ? Real(1) : scale);

    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (abs(W(p, q)) <= off_tol) continue;
                rotated = true;
                Rot r = make_rotation(W(p, p).re, W(q, q).re, W(p, q));
                for (std::size_t i = 0; i < n; ++i) {
                    Complex hp = W(i, p), hq = W(i, q);
                    W(i, p) = hp * r.j11 + hq * r.j21;
                    W(i, q) = hp * r.j12 + hq * r.j22;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    Complex hp = W(p, j), hq = W(q, j);
                    W(p, j) = conj(r.j11) * hp + conj(r.j21) * hq;
                    W(q, j) = conj(r.j12) * hp + conj(r.j22) * hq;
                }
                W(p, q) = Complex(0);
                W(q, p) = Complex(0);
                W(p, p).im = 0;
                W(q, q).im = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    Complex xp = X(i, p), xq = X(i, q);
                    X(i, p) = xp * r.j11 + xq * r.j21;
                    X(i, q) = xp * r.j12 + xq * r.j22;
                }
            }
        if (!rotated) break;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return W(a, a).re < W(b, b).re; });

    EigResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.eigenvalues[k] = W(order[k], order[k]).re;
        for (std::size_t i = 0; i < n; ++i)
            res.eigenvectors(i, k) = X(i, order[k]);
    }
    return res;
}

Matrix cholesky_upper(const Matrix& S) {
    const std::size_t n = S.rows();
    Matrix R(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Real d = S(k, k).re;
        for (std::size_t i = 0; i < k; ++i) d -= norm(R(i, k));
        if (d <= 0)
            throw NotPositiveDefinite("cholesky: nonpositive pivot at index " + std::to_string(k), k);
        using std::sqrt;
        Real rkk = sqrt(d);
        R(k, k) = Complex(rkk);
        for (std::size_t j = k + 1; j < n; ++j) {
            Complex v = S(k, j);
            for (std::size_t i = 0; i < k; ++i) v -= conj(R(i, k)) * R(i, j);
            R(k, j) = v / rkk;
        }
    }
    return R;
}

GenEigResult generalized_hermitian_eig(const Matrix& S1, const Matrix& S2) {
    const std::size_t n = S1.rows();
    if (S1.cols() != n || S2.rows() != n || S2.cols() != n)
        throw InvalidRange("generalized_hermitian_eig: dimension mismatch");

    Matrix R = cholesky_upper(S2);

    // C = R^{-*} S1 R^{-1}
    Matrix Y(n, n); // Y = R^{-*} S1, forward substitution (R* is lower)
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Complex v = S1(i, j);
            for (std::size_t k = 0; k < i; ++k) v -= conj(R(k, i)) * Y(k, j);
            Y(i, j) = v / R(i, i).re;
        }
    Matrix C(n, n); // C R = Y, solved row-wise left to right
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex v = Y(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= C(i, k) * R(k, j);
            C(i, j) = v / R(j, j).re;
        }
    // C is Hermitian in exact arithmetic; the two substitutions leave a
    // roundoff skew that the strict symmetry check would reject.
    for (std::size_t i = 0; i < n; ++i) {
        C(i, i).im = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            C(i, j) = (C(i, j) + conj(C(j, i))) / Real(2);
            C(j, i) = conj(C(i, j));
        }
    }

    EigResult e = hermitian_eig(C);

    Matrix V(n, n); // R V = X, back substitution per column
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = n; i-- > 0;) {
            Complex v = e.eigenvectors(i, j);
            for (std::size_t k = i + 1; k < n; ++k) v -= R(i, k) * V(k, j);
            V(i, j) = v / R(i, i).re;
        }

    return {std::move(e.eigenvalues), std::move(V)};
}

Complex poly_eval(const CVector& coeffs, const Complex& s) {
    Complex v(0);
    for (std::size_t i = coeffs.size(); i-- > 0;)
        v = v * s + coeffs[i];
    return v;
}

namespace {

CVector poly_derivative(const CVector& c) {
    CVector d(c.size() > 1 ? c.size() - 1 : 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        d[i - 1] = c[i] * Real(static_cast<int>(i));
    return d;
}

} // namespace

CVector poly_roots(const CVector& coeffs) {
    if (coeffs.empty())
        throw DegenerateLeadingCoefficient("poly_roots: empty coefficient vector");
    const std::size_t deg = coeffs.size() - 1;
    Real cmax(0);
    for (const auto& c : coeffs) {
        Real a = abs(c);
        if (a > cmax) cmax = a;
    }
    if (abs(coeffs[deg]) <= pow10_neg(current_digits()) * cmax)
        throw DegenerateLeadingCoefficient("poly_roots: leading coefficient vanishes");

    CVector c = coeffs;
    CVector roots;
    while (c.size() > 1 && c[0].re == 0 && c[0].im == 0) {
        roots.emplace_back(Real(0));
        c.erase(c.begin());
    }
    const std::size_t n = c.size() - 1;
    if (n == 0) return roots;

    // Scale s = gamma*y so the scaled roots cluster around unit magnitude.
    using std::pow;
    Real gamma = pow(abs(c[0] / c[n]), Real(1) / static_cast<int>(n));
    if (gamma == 0) gamma = 1;

    CVector m(n + 1); // monic in y
    Real gp(1);
    for (std::size_t j = 0; j <= n; ++j) {
        m[j] = c[j] * gp / c[n];
        gp *= gamma;
    }
    for (std::size_t j = 0; j <= n; ++j) m[j] /= m[n];

    // Hardware-precision companion-matrix seeds.
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < n; ++i) comp(i, n - 1) = -to_cd(m[i]);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);

    CVector z(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto ev = es.eigenvalues()(static_cast<Eigen::Index>(i));
        z[i] = Complex(Real(ev.real()), Real(ev.imag()));
        if (!std::isfinite(ev.real()) || !std::isfinite(ev.imag()))
            z[i] = Complex(cos(Real(i)), sin(Real(i))); // fallback seed on a circle
    }
    // Separate coincident seeds so the Aberth repulsion term stays finite.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (abs(z[i] - z[j]) < pow10_neg(12) * (abs(z[i]) + 1))
                z[i] += Complex(pow10_neg(6) * (abs(z[i]) + 1), pow10_neg(7));

    // Aberth-Ehrlich: Newton steps with simultaneous repulsion.
    const CVector dm = poly_derivative(m);
    const Real tol = pow10_neg(current_digits());
    for (int iter = 0; iter < 400; ++iter) {
        Real max_step(0);
        for (std::size_t i = 0; i < n; ++i) {
            Complex pv = poly_eval(m, z[i]);
            Complex dv = poly_eval(dm, z[i]);
            if (abs(dv) == 0) {
                z[i] += Complex(pow10_neg(8), pow10_neg(9));
                max_step = 1;
                continue;
            }
            Complex w = pv / dv;
            Complex sum(0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += Complex(1) / (z[i] - z[j]);
            Complex denomc = Complex(1) - w * sum;
            Complex step = (abs(denomc) == 0) ? w : w / denomc;
            z[i] -= step;
            Real rel = abs(step) / (abs(z[i]) + 1);
            if (rel > max_step) max_step = rel;
        }
        if (max_step <= tol) break;
    }

    for (std::size_t i = 0; i < n; ++i) roots.push_back(z[i] * gamma);
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        Real ma = abs(a), mb = abs(b);
        if (ma != mb) return ma < mb;
        return a.im < b.im;
    });
    return roots;
}

RVector singular_values(const Matrix& A) {
    Matrix G = A.rows() >= A.cols() ? A : A.adjoint();
    const std::size_t m = G.rows(), n = G.cols();
    const Real tol = pow10_neg(current_digits());
    const Real tol2 = tol * tol;

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                Real a(0), b(0);
                Complex cpq(0);
                for (std::size_t i = 0; i < m; ++i) {
                    a += norm(G(i, p));
                    b += norm(G(i, q));
                    cpq += conj(G(i, p)) * G(i, q);
                }
                if (a == 0 || b == 0) continue;
                if (norm(cpq) <= tol2 * a * b) continue;
                rotated = true;
                Rot r = make_rotation(a, b, cpq);
                for (std::size_t i = 0; i < m; ++i) {
                    Complex gp = G(i, p), gq = G(i, q);
                    G(i, p) = gp * r.j11 + gq * r.j21;
                    G(i, q) = gp * r.j12 + gq * r.j22;
                }
            }
        if (!rotated) break;
    }

    RVector sv(n);
    using std::sqrt;
    for (std::size_t j = 0; j < n; ++j) {
        Real s(0);
        for (std::size_t i = 0; i < m; ++i) s += norm(G(i, j));
        sv[j] = sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), [](const Real& x, const Real& y) { return x > y; });
    return sv;
}

Real cond2_log10(const Matrix& A) {
    RVector sv = singular_values(A);
    if (sv.empty() || sv.front() == 0)
        return Real(std::numeric_limits<double>::infinity());
    Real smin = sv.back();
    if (smin == 0)
        return Real(std::numeric_limits<double>::infinity());
    return log10(sv.front() / smin);
}

} // namespace biotjkd

#ifndef BIOTJKD_COMPLEX_HPP
#define BIOTJKD_COMPLEX_HPP

#include "biotjkd/precision.hpp"

#include <complex>
#include <vector>

namespace biotjkd {

// Complex scalar over Real. std::complex is not usable with a
// variable-precision backend, so the needed operations are spelled out here.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r) : re(r), im(0) {}
    Complex(double r, double i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

// |z|^2
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

inline Real abs(const Complex& z) {
    using std::sqrt;
    return sqrt(norm(z));
}

inline Complex& Complex::operator/=(const Complex& o) {
    Real d = norm(o);
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }

inline bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
}

// Principal square root: branch cut on the negative real axis, Re >= 0.
inline Complex sqrt(const Complex& z) {
    using boost::multiprecision::sqrt;
    using boost::multiprecision::abs;
    if (z.im == 0) {
        if (z.re >= 0) return {sqrt(z.re), Real(0)};
        return {Real(0), sqrt(-z.re)};
    }
    Real m = biotjkd::abs(z);
    Real t = sqrt((m + abs(z.re)) / 2);
    if (z.re >= 0)
        return {t, z.im / (2 * t)};
    Real s = abs(z.im) / (2 * t);
    return {s, z.im >= 0 ? t : -t};
}

inline Complex exp(const Complex& z) {
    using boost::multiprecision::exp;
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline std::complex<double> to_cd(const Complex& z) {
    return {to_d(z.re), to_d(z.im)};
}

using RVector = std::vector<Real>;
using CVector = std::vector<Complex>;

} // namespace biotjkd

#endif

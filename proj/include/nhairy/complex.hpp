#pragma once

#include "nhairy/precision.hpp"

#include <string>

namespace nhairy {

// Complex number over the arbitrary-precision Real. std::complex requires a
// standard floating type, so we roll the handful of operations we need.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(Real&& r) : re(std::move(r)), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(double r) : re(r), im(0) {}
    Complex(double r, double i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}

    bool is_real() const { return im.is_zero(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) {
        re *= s;
        im *= s;
        return *this;
    }
    Complex& operator/=(const Real& s) {
        re /= s;
        im /= s;
        return *this;
    }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }

inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Complex conj(const Complex& a) { return Complex(a.re, -a.im); }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = norm(b);
    return Complex((a.re * b.re + a.im * b.im) / d,
                   (a.im * b.re - a.re * b.im) / d);
}
inline Complex operator/(Complex a, const Real& s) { return a /= s; }
inline Complex operator/(const Real& s, const Complex& b) {
    return Complex(s) / b;
}

inline bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
}

inline Complex polar(const Real& r, const Real& theta) {
    return Complex(r * cos(theta), r * sin(theta));
}

// Principal square root (branch cut on the negative real axis).
inline Complex sqrt(const Complex& a) {
    if (a.im.is_zero()) {
        if (a.re >= 0) return Complex(sqrt(a.re), Real(0));
        return Complex(Real(0), sqrt(-a.re));
    }
    Real r = abs(a);
    Real w = sqrt((r + fabs(a.re)) / 2);
    if (a.re >= 0) return Complex(w, a.im / (2 * w));
    Complex res(fabs(a.im) / (2 * w), w);
    if (a.im < 0) res.im = -res.im;
    return res;
}

inline bool isfinite(const Real& x) {
    return mpfr_number_p(x.backend().data()) != 0;
}
inline bool isfinite(const Complex& a) {
    return isfinite(a.re) && isfinite(a.im);
}

inline std::string to_decimal_string(const Complex& z, unsigned digits) {
    return "(" + z.re.str(digits) + ", " + z.im.str(digits) + ")";
}

// Copy with precision raised (never lowered) to `digits`.
inline Real at_precision(const Real& x, unsigned digits) {
    Real y = x;
    if (y.precision() < digits) y.precision(digits);
    return y;
}
inline Complex at_precision(const Complex& z, unsigned digits) {
    return Complex(at_precision(z.re, digits), at_precision(z.im, digits));
}

} // namespace nhairy

#pragma once

#include "unirank/real.hpp"

namespace unirank {

// Complex value over Real; principal branches throughout.
struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 192) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    static Complex of(double r, double i, mpfr_prec_t prec) {
        return {Real::of(r, prec), Real::of(i, prec)};
    }
    static Complex real(Real r) {
        Real z(r.prec());
        return {std::move(r), std::move(z)};
    }
    static Complex imaginary(Real i) {
        Real z(i.prec());
        return {std::move(z), std::move(i)};
    }

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
    friend Complex operator*(const Complex& a, long s) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, long s) { return {a.re / s, a.im / s}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    Complex conj() const { return {re, -im}; }

    friend Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }
    friend Real arg(const Complex& a) { return atan2(a.im, a.re); }

    friend Complex exp(const Complex& a) {
        Real m = exp(a.re);
        return {m * cos(a.im), m * sin(a.im)};
    }

    friend Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

    // principal-branch power with real exponent
    friend Complex pow(const Complex& a, const Real& e) {
        Complex l = log(a);
        return exp(Complex{l.re * e, l.im * e});
    }

    friend Complex sinh(const Complex& a) {
        Complex p = exp(a), m = exp(-a);
        return (p - m) / Real::of(2L, a.prec());
    }
    friend Complex cosh(const Complex& a) {
        Complex p = exp(a), m = exp(-a);
        return (p + m) / Real::of(2L, a.prec());
    }

    std::string str() const { return "(" + re.str() + ", " + im.str() + ")"; }
};

} // namespace unirank

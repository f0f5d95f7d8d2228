#pragma once

#include <cmath>
#include <stdexcept>

#include "unirank/complex.hpp"
#include "unirank/quadrature.hpp"
#include "unirank/specfun.hpp"

namespace unirank::kernels {

using specfun::Rat;

// Point tau = x + i y in the upper half plane, with the derived nomes.
struct UpperHalfPoint {
    Real x, y;

    UpperHalfPoint(Real re, Real im) : x(std::move(re)), y(std::move(im)) {
        if (!(y.sign() > 0)) throw std::invalid_argument("UpperHalfPoint: need Im tau > 0");
    }

    static UpperHalfPoint imaginary(const Real& im) { return {Real::of(0L, im.prec()), im}; }

    Complex tau() const { return {x, y}; }

    // q = e^{2 pi i tau}, |q| < 1
    Complex q(mpfr_prec_t prec) const {
        const Real two_pi = Real::pi(prec) * 2L;
        return exp(Complex{-two_pi * y.to_prec(prec), two_pi * x.to_prec(prec)});
    }

    // zeta(z) = e^{2 pi i z}
    static Complex zeta(const Complex& z, mpfr_prec_t prec) {
        const Real two_pi = Real::pi(prec) * 2L;
        return exp(Complex{-two_pi * z.im.to_prec(prec), two_pi * z.re.to_prec(prec)});
    }
};

namespace detail {

inline Complex complex_ipow(const Complex& z, unsigned e) {
    Complex r = Complex::of(1, 0, z.prec());
    Complex base = z;
    unsigned n = e;
    while (n > 0) {
        if (n & 1U) r *= base;
        base *= base;
        n >>= 1U;
    }
    return r;
}

// Gamma((l+1)/2): factorial for odd l, rational multiple of sqrt(pi) for even l.
inline Real gamma_half(unsigned l, mpfr_prec_t prec) {
    if (l % 2 == 1) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), (l - 1) / 2);
        return Real::of(mpz_class(f), prec);
    }
    const unsigned p = l / 2;
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), 2 * p);
    mpz_class pf;
    mpz_fac_ui(pf.get_mpz_t(), p);
    mpz_class four_p;
    mpz_ui_pow_ui(four_p.get_mpz_t(), 4, p);
    den = pf * four_p;
    return Real::of(Rat(num, den), prec) * sqrt(Real::pi(prec));
}

} // namespace detail

// ---- partial theta function -----------------------------------------------------

// F(z; tau) = sum_{n >= 0} zeta^{kn+d} q^{(kn+d)^2}, summed directly until the
// term bound e^{-2 pi y (kn+d)^2} e^{2 pi |Im z| (kn+d)} is negligible.
inline Complex partial_theta_direct(const Rat& d, int k, const Complex& z, const Complex& tau,
                                    mpfr_prec_t prec) {
    if (k < 1) throw std::invalid_argument("partial_theta_direct: k must be positive");
    if (sgn(d) <= 0) throw std::invalid_argument("partial_theta_direct: d must be positive");
    if (!(tau.im.sign() > 0))
        throw std::invalid_argument("partial_theta_direct: need Im tau > 0");
    const mpfr_prec_t work = prec + 32;
    const Real two_pi = Real::pi(work) * 2L;
    const Complex zw{z.re.to_prec(work), z.im.to_prec(work)};
    const Complex tw{tau.re.to_prec(work), tau.im.to_prec(work)};
    Complex acc(work);
    const Real cutoff = ldexp(Real::of(1L, work), -(prec + 8));
    for (long n = 0;; ++n) {
        const Real e = Real::of(Rat(Rat(n) * k + d), work);
        // 2 pi i (z e + tau e^2)
        Complex expo = (zw * e + tw * (e * e));
        Complex term = exp(Complex{-two_pi * expo.im, two_pi * expo.re});
        acc += term;
        // bound on the next terms
        Real bound = exp(two_pi * (abs(zw.im) * e - tw.im * (e * e)));
        if (bound < cutoff * (abs(acc) + Real::of(1L, work)) && n > 0) break;
        if (n > 1000000) throw std::runtime_error("partial_theta_direct: no convergence");
    }
    return {acc.re.to_prec(prec), acc.im.to_prec(prec)};
}

// Asymptotic expansion of the partial theta function near tau = 0 with the
// algebraic part summed to tau^N; valid for |z| < 1/(4k).
inline Complex partial_theta_expansion(const Rat& d, int k, const Complex& z,
                                       const Complex& tau, int N, mpfr_prec_t prec) {
    if (k < 1) throw std::invalid_argument("partial_theta_expansion: k must be positive");
    if (N < 0) throw std::invalid_argument("partial_theta_expansion: N must be >= 0");
    if (!(tau.im.sign() > 0))
        throw std::invalid_argument("partial_theta_expansion: need Im tau > 0");
    const mpfr_prec_t work = prec + 48;
    const Real quarter_k = Real::of(Rat(1, 4 * k), work);
    const Complex zw{z.re.to_prec(work), z.im.to_prec(work)};
    if (!(abs(zw) < quarter_k))
        throw std::domain_error("partial_theta_expansion: |z| >= 1/(4k), outside the proven "
                                "convergence region");
    const Complex tw{tau.re.to_prec(work), tau.im.to_prec(work)};
    const Real pi = Real::pi(work);
    const Real two_pi = pi * 2L;

    // (-i tau)^{-1/2} pieces; -i tau lies in the right half plane since y > 0
    const Complex minus_i_tau{tw.im, -tw.re};

    // 2 k pi i z
    const Complex zfac = Complex{-two_pi * zw.im, two_pi * zw.re} * Real::of(static_cast<long>(k), work);

    const Rat dk = Rat(d) / k;

    Complex acc(work);
    Complex zpow = Complex::of(1, 0, work); // (2 k pi i z)^l / l!
    const Real cutoff = ldexp(Real::of(1L, work), -(prec + 8));
    int small_streak = 0;
    for (int l = 0;; ++l) {
        // main term: Gamma((l+1)/2) / (2 (2 pi)^{(l+1)/2} k^{l+1}) (-i tau)^{-(l+1)/2}
        const Real gl = detail::gamma_half(static_cast<unsigned>(l), work);
        Real denom = pow(Real::of(static_cast<long>(k), work), l + 1) * 2L;
        const Real half_pow = Real::of(Rat(l + 1, 2), work);
        denom *= exp(log(two_pi) * half_pow);
        Complex main = pow(minus_i_tau, -half_pow) * (gl / denom);

        // Bernoulli sum: sum_{j=0}^{N} (2 k^2 pi i)^j / j! * B_{2j+l+1}(d/k)/(2j+l+1) tau^j
        Complex bsum(work);
        Complex jfac = Complex::of(1, 0, work);
        const Complex kk_pi_i = Complex{Real::of(0L, work), pi * (2L * k * k)};
        for (int j = 0; j <= N; ++j) {
            const Rat b = specfun::bernoulli_poly(static_cast<unsigned>(2 * j + l + 1), dk);
            bsum += jfac * Real::of(Rat(b / Rat(2 * j + l + 1)), work);
            jfac = jfac * kk_pi_i * tw / static_cast<long>(j + 1);
        }

        Complex term = zpow * (main - bsum);
        acc += term;

        const Real tmag = abs(term);
        if (l > 0 && tmag < cutoff * (abs(acc) + Real::of(1L, work))) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
        if (l > 8 * static_cast<int>(prec))
            throw std::runtime_error("partial_theta_expansion: l-sum did not settle");
        zpow = zpow * zfac / static_cast<long>(l + 1);
    }
    return {acc.re.to_prec(prec), acc.im.to_prec(prec)};
}

// ---- moment integrals -------------------------------------------------------------

struct KernelPair {
    Complex quadrature;
    Complex closed;
};

namespace detail {

// sinh(w)/w and cosh(w) with a series guard near w = 0 so the removable
// behavior stays fully accurate.
inline Complex sinh_over_w(const Complex& w, mpfr_prec_t prec) {
    if (abs(w) > ldexp(Real::of(1L, prec), -8)) {
        return sinh(w) / w;
    }
    Complex acc = Complex::of(1, 0, prec);
    Complex term = Complex::of(1, 0, prec);
    const Complex w2 = w * w;
    for (long j = 1; j <= 24; ++j) {
        term = term * w2 / (2 * j) / (2 * j + 1);
        acc += term;
    }
    return acc;
}

inline Complex tau_power(const Complex& tau, unsigned e) { return complex_ipow(tau, e); }

} // namespace detail

// integral of t^{2l+1} / sinh(pi i t / tau) over [0, a], with the closed form
// E_{2l+1}(0) tau^{2l+2} / 2 it approaches as Im(-1/tau) grows.
inline KernelPair moment_sinh(int ell, const Real& a, const Complex& tau, mpfr_prec_t prec) {
    if (ell < 0) throw std::invalid_argument("moment_sinh: ell must be >= 0");
    if (!(a.sign() > 0)) throw std::invalid_argument("moment_sinh: a must be positive");
    if (!(tau.im.sign() > 0)) throw std::invalid_argument("moment_sinh: need Im tau > 0");
    const mpfr_prec_t work = prec + 32;
    const Complex tw{tau.re.to_prec(work), tau.im.to_prec(work)};
    const Complex pi_i_over_tau = Complex{Real::of(0L, work), Real::pi(work)} / tw;
    auto f = [&](const Real& t) -> Complex {
        const Complex w = pi_i_over_tau * t;
        // t^{2l+1} / sinh(w) = t^{2l} / (pi i / tau) / (sinh(w)/w)
        Real tp = pow(t, 2 * ell);
        return Complex{tp, Real::of(0L, work)} / pi_i_over_tau / detail::sinh_over_w(w, work);
    };
    // scale estimate from the closed form
    Rat e = specfun::euler_poly(static_cast<unsigned>(2 * ell + 1), 0);
    Complex closed = detail::tau_power(tw, static_cast<unsigned>(2 * ell + 2)) *
                     Real::of(e / 2, work);
    Real tol = abs(closed) * ldexp(Real::of(1L, work), -(prec + 8));
    Complex quad =
        quadrature::integrate(f, Real::of(0L, work), a.to_prec(work), work, tol);
    return {Complex{quad.re.to_prec(prec), quad.im.to_prec(prec)},
            Complex{closed.re.to_prec(prec), closed.im.to_prec(prec)}};
}

// integral of t^{2l} / cosh(pi i t / tau) over [0, a], with the closed form
// -i E_{2l} (tau/2)^{2l+1}.
inline KernelPair moment_cosh(int ell, const Real& a, const Complex& tau, mpfr_prec_t prec) {
    if (ell < 0) throw std::invalid_argument("moment_cosh: ell must be >= 0");
    if (!(a.sign() > 0)) throw std::invalid_argument("moment_cosh: a must be positive");
    if (!(tau.im.sign() > 0)) throw std::invalid_argument("moment_cosh: need Im tau > 0");
    const mpfr_prec_t work = prec + 32;
    const Complex tw{tau.re.to_prec(work), tau.im.to_prec(work)};
    const Complex pi_i_over_tau = Complex{Real::of(0L, work), Real::pi(work)} / tw;
    auto f = [&](const Real& t) -> Complex {
        const Complex w = pi_i_over_tau * t;
        Real tp = pow(t, 2 * ell);
        return Complex{tp, Real::of(0L, work)} / cosh(w);
    };
    Int e = specfun::euler_number(static_cast<unsigned>(2 * ell));
    Complex half_tau = tw / Real::of(2L, work);
    Complex closed = detail::tau_power(half_tau, static_cast<unsigned>(2 * ell + 1)) *
                     Real::of(mpz_class(e), work);
    closed = Complex{closed.im, -closed.re}; // multiply by -i
    Real tol = abs(closed) * ldexp(Real::of(1L, work), -(prec + 8));
    Complex quad =
        quadrature::integrate(f, Real::of(0L, work), a.to_prec(work), work, tol);
    return {Complex{quad.re.to_prec(prec), quad.im.to_prec(prec)},
            Complex{closed.re.to_prec(prec), closed.im.to_prec(prec)}};
}

// ---- contour integral behind the circle-method main term ---------------------------

struct ContourPair {
    Complex contour;
    Real bessel;
};

// P = (1/2 pi i) integral_{1-i}^{1+i} v^s e^{pi sqrt(kn/6)(1/v + v)} dv compared
// with I_{-s-1}(pi sqrt(2kn/3)).  Integer s only; the Bessel side needs the
// integer-order symmetry.
inline ContourPair wright_contour(int s, int k, long n, mpfr_prec_t prec) {
    if (s < 1) throw std::invalid_argument("wright_contour: s must be a positive integer");
    if (k < 1 || n < 1) throw std::invalid_argument("wright_contour: k, n must be positive");
    const mpfr_prec_t xd_guard =
        static_cast<mpfr_prec_t>(3.0 * std::sqrt(static_cast<double>(k) * n));
    const mpfr_prec_t work = prec + 64 + xd_guard;
    const Real pi = Real::pi(work);
    const Real c = pi * sqrt(Real::of(Rat(k, 6), work) * Real::of(n, work));
    auto f = [&](const Real& t) -> Complex {
        const Complex v{Real::of(1L, work), t};
        const Complex inv = Complex::of(1, 0, work) / v;
        return detail::complex_ipow(v, static_cast<unsigned>(s)) * exp((inv + v) * c);
    };
    // v = 1 + i t, dv = i dt; (1/2 pi i) integral f dv = (1/2 pi) integral f dt
    Real scale_est = exp(c * 2L) / (pi * 2L);
    Real tol = scale_est * ldexp(Real::of(1L, work), -(prec + 8));
    Complex integral = quadrature::integrate(f, Real::of(-1L, work), Real::of(1L, work), work,
                                             tol) /
                       (pi * 2L);
    Real arg = pi * sqrt(Real::of(Rat(2 * k, 3), work) * Real::of(n, work));
    Real bessel = specfun::bessel_i(s + 1, arg, work);
    return {Complex{integral.re.to_prec(prec), integral.im.to_prec(prec)},
            bessel.to_prec(prec)};
}

} // namespace unirank::kernels

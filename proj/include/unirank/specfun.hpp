#pragma once

#include <gmpxx.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "unirank/laurent.hpp"
#include "unirank/real.hpp"

namespace unirank::specfun {

using Rat = mpq_class;

inline Rat binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

namespace detail {

// prefix copies are handed out under the lock; the caches only grow
inline std::vector<Rat> bernoulli_prefix(unsigned upto) {
    static std::mutex mu;
    static std::vector<Rat> cache{Rat(1), Rat(-1, 2)};
    std::lock_guard<std::mutex> g(mu);
    while (cache.size() <= upto) {
        const unsigned long n = cache.size();
        // sum_{k<n} C(n+1,k) B_k = 0 for n >= 1
        Rat s = 0;
        for (unsigned long k = 0; k < n; ++k) s += binom(n + 1, k) * cache[k];
        Rat b = -s / Rat(static_cast<unsigned long>(n + 1));
        b.canonicalize();
        cache.push_back(b);
    }
    return {cache.begin(), cache.begin() + upto + 1};
}

inline Int euler_number_at(unsigned even_index) {
    static std::mutex mu;
    static std::vector<Int> cache{Int(1)}; // E_0, E_2, E_4, ... by half-index
    std::lock_guard<std::mutex> g(mu);
    while (cache.size() <= even_index / 2) {
        const unsigned long n = cache.size();
        // sum_{k=0..n} C(2n, 2k) E_{2k} = 0 for n >= 1
        Int s = 0;
        for (unsigned long k = 0; k < n; ++k) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), 2 * n, 2 * k);
            s += b * cache[k];
        }
        cache.push_back(-s);
    }
    return cache[even_index / 2];
}

} // namespace detail

inline Rat bernoulli_number(unsigned n) { return detail::bernoulli_prefix(n)[n]; }

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact.
inline Rat bernoulli_poly(unsigned n, const Rat& x) {
    const auto B = detail::bernoulli_prefix(n);
    Rat acc = 0;
    Rat xpow = 1;
    // iterate k = n down to 0 so x powers build up
    for (unsigned k = n + 1; k-- > 0;) {
        acc += binom(n, k) * B[k] * xpow;
        xpow *= x;
    }
    acc.canonicalize();
    return acc;
}

// E_n for even n (0 for odd n), from the secant-series recurrence.
inline Int euler_number(unsigned n) {
    if (n % 2 == 1) return Int(0);
    return detail::euler_number_at(n);
}

// E_n(x), exact, via E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x).
inline Rat euler_poly(unsigned n, const Rat& x) {
    std::vector<Rat> e(n + 1);
    std::vector<Rat> xpow(n + 1);
    xpow[0] = 1;
    for (unsigned k = 1; k <= n; ++k) xpow[k] = xpow[k - 1] * x;
    for (unsigned m = 0; m <= n; ++m) {
        Rat s = 0;
        for (unsigned k = 0; k < m; ++k) s += binom(m, k) * e[k];
        e[m] = xpow[m] - s / 2;
        e[m].canonicalize();
    }
    return e[n];
}

// e^{-x} I_{|k|}(x) by the ascending series; integer order, so I_{-k} = I_k.
// All series terms are positive, so the only precision loss is the magnitude
// range covered by the e^{-x} scaling; guard bits grow linearly in x.
inline Real bessel_i_scaled(long k, const Real& x, mpfr_prec_t prec) {
    if (!(x.sign() > 0)) throw std::invalid_argument("bessel_i_scaled: x must be positive");
    const unsigned long ka = static_cast<unsigned long>(k < 0 ? -k : k);
    const double xd = x.to_double();
    const mpfr_prec_t work =
        prec + static_cast<mpfr_prec_t>(std::ceil(xd / std::log(2.0))) + 32;
    const Real xw = x.to_prec(work);
    const Real half = xw / 2L;
    const Real half2 = half * half;
    Real term = Real::of(1L, work);
    for (unsigned long i = 1; i <= ka; ++i) term = term * half / static_cast<long>(i);
    Real sum = term;
    const Real cutoff = ldexp(Real::of(1L, work), -(prec + 32));
    for (unsigned long j = 1;; ++j) {
        term = term * half2 / static_cast<long>(j) / static_cast<long>(j + ka);
        sum += term;
        if (static_cast<double>(j) > xd / 2 && term < cutoff * sum) break;
        if (j > 100000000UL) throw std::runtime_error("bessel_i_scaled: series did not terminate");
    }
    return (sum * exp(-xw)).to_prec(prec);
}

inline Real bessel_i(long k, const Real& x, mpfr_prec_t prec) {
    const mpfr_prec_t work = prec + 32;
    Real s = bessel_i_scaled(k, x.to_prec(work), work);
    return (s * exp(x.to_prec(work))).to_prec(prec);
}

enum class ProfileKind { X, Y };

// value = mantissa * e^{exponent}
struct Scaled {
    Real mantissa;
    Real exponent;

    Real ln(mpfr_prec_t prec) const {
        if (!(mantissa.sign() > 0))
            throw std::domain_error("Scaled::ln: nonpositive mantissa");
        return (log(mantissa.to_prec(prec + 16)) + exponent.to_prec(prec + 16)).to_prec(prec);
    }
};

// X_k(n) = (2 sqrt(3n))^{-k} I_{-k}(2 pi sqrt(n/3));
// Y_k(n) = (4 sqrt(n))^{-k}  I_{-k}(pi sqrt(n)).
inline Scaled bessel_profile(ProfileKind kind, long k, long n, mpfr_prec_t prec) {
    if (k < 1) throw std::invalid_argument("bessel_profile: order must be >= 1");
    if (n < 1) throw std::invalid_argument("bessel_profile: n must be >= 1");
    const mpfr_prec_t work = prec + 48;
    const Real pi = Real::pi(work);
    const Real rn = Real::of(n, work);
    Real arg(work), base(work);
    if (kind == ProfileKind::X) {
        arg = pi * 2L * sqrt(rn / 3L);
        base = sqrt(rn * 3L) * 2L;
    } else {
        arg = pi * sqrt(rn);
        base = sqrt(rn) * 4L;
    }
    Real mant = bessel_i_scaled(k, arg, work) * pow(base, -k);
    return {mant.to_prec(prec), arg.to_prec(prec)};
}

} // namespace unirank::specfun

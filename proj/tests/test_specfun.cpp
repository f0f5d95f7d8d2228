#include <catch2/catch.hpp>

#include <random>

#include "unirank/pi_poly.hpp"
#include "unirank/specfun.hpp"

using namespace unirank;
using namespace unirank::specfun;

namespace {

bool rel_within_bits(const Real& got, const Real& want, long bits) {
    if (want.is_zero()) return abs(got) <= ldexp(Real::of(1L, got.prec()), -bits);
    return abs(got - want) <= ldexp(abs(want), -bits);
}

} // namespace

TEST_CASE("bernoulli polynomial values") {
    CHECK(bernoulli_poly(0, Rat(7, 3)) == 1);
    CHECK(bernoulli_poly(1, Rat(1, 4)) == Rat(-1, 4));
    CHECK(bernoulli_poly(3, Rat(1, 4)) == Rat(3, 64));
    CHECK(bernoulli_poly(1, Rat(1, 3)) == Rat(-1, 6));
    CHECK(bernoulli_poly(3, Rat(1, 3)) == Rat(1, 27));
}

TEST_CASE("bernoulli polynomials satisfy the defining recurrence", "[property]") {
    // sum_{k=0}^{n} C(n+1,k) B_k(x) = (n+1) x^n, independent route
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
    for (int iter = 0; iter < 12; ++iter) {
        Rat x(num(rng), den(rng));
        x.canonicalize();
        for (unsigned n = 0; n <= 9; ++n) {
            Rat lhs = 0;
            for (unsigned k = 0; k <= n; ++k) lhs += binom(n + 1, k) * bernoulli_poly(k, x);
            Rat xpow = 1;
            for (unsigned i = 0; i < n; ++i) xpow *= x;
            CHECK(lhs == Rat(n + 1) * xpow);
        }
    }
}

TEST_CASE("bernoulli half-argument identity") {
    for (unsigned n = 0; n <= 20; ++n) {
        Rat lhs = bernoulli_poly(n, Rat(1, 2));
        Rat pow2 = Rat(1);
        for (unsigned i = 0; i + 1 < n; ++i) pow2 /= 2; // 2^{1-n}
        if (n == 0) pow2 = 2;
        Rat rhs = (pow2 - 1) * bernoulli_number(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("euler polynomial values") {
    CHECK(euler_poly(0, Rat(5, 7)) == 1);
    CHECK(euler_poly(1, Rat(0)) == Rat(-1, 2));
    CHECK(euler_poly(3, Rat(0)) == Rat(1, 4));
    CHECK(euler_poly(5, Rat(0)) == Rat(-1, 2));
}

TEST_CASE("euler polynomials against the bernoulli route", "[property]") {
    // E_n(x) = 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 5);
    for (int iter = 0; iter < 12; ++iter) {
        Rat x(num(rng), den(rng));
        x.canonicalize();
        for (unsigned n = 0; n <= 9; ++n) {
            Rat two_pow = 1;
            for (unsigned i = 0; i <= n; ++i) two_pow *= 2;
            Rat rhs = Rat(2) / Rat(n + 1) *
                      (bernoulli_poly(n + 1, x) - two_pow * bernoulli_poly(n + 1, x / 2));
            rhs.canonicalize();
            CHECK(euler_poly(n, x) == rhs);
        }
    }
}

TEST_CASE("euler polynomial endpoint and midpoint identities") {
    for (unsigned n = 3; n <= 19; n += 2)
        CHECK(euler_poly(n, Rat(0)) + euler_poly(n, Rat(1)) == 0);
    for (unsigned n = 0; n <= 20; ++n) {
        Rat two_pow = 1;
        for (unsigned i = 0; i < n; ++i) two_pow *= 2;
        CHECK(euler_poly(n, Rat(1, 2)) * two_pow == Rat(euler_number(n)));
    }
}

TEST_CASE("euler numbers") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
    CHECK(euler_number(10) == -50521);
    CHECK(euler_number(3) == 0);
    CHECK(euler_number(7) == 0);
}

TEST_CASE("scaled bessel function basics") {
    const mpfr_prec_t prec = 192;
    // I_0(x) e^{-x} -> 1 as x -> 0+
    Real tiny = ldexp(Real::of(1L, prec), -60);
    Real v = bessel_i_scaled(0, tiny, prec);
    CHECK(rel_within_bits(v, Real::of(1L, prec), 50));

    // integer-order symmetry
    Real x = Real::of(7.25, prec);
    CHECK(bessel_i_scaled(-3, x, prec) == bessel_i_scaled(3, x, prec));

    // leading term: I_1(x) ~ x/2 for small x
    Real small = Real::of(1e-8, prec);
    Real lead = bessel_i_scaled(1, small, prec) * exp(small);
    CHECK(rel_within_bits(lead, small / 2L, 50));

    CHECK_THROWS_AS(bessel_i_scaled(0, Real::of(0L, prec), prec), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i_scaled(0, Real::of(-1L, prec), prec), std::invalid_argument);
}

TEST_CASE("bessel self-consistency at doubled precision", "[property]") {
    for (double xd : {0.5, 3.0, 25.0, 80.0}) {
        Real x1 = Real::of(xd, 128);
        Real x2 = Real::of(xd, 256);
        Real a = bessel_i_scaled(2, x1, 128);
        Real b = bessel_i_scaled(2, x2, 256);
        CHECK(rel_within_bits(a, b.to_prec(128), 120));
    }
}

TEST_CASE("bessel three-term recurrence", "[property]") {
    const mpfr_prec_t prec = 160;
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> xs(0.01, 100.0);
    for (int iter = 0; iter < 10; ++iter) {
        const double xd = xs(rng);
        Real x = Real::of(xd, prec);
        for (long k : {1L, 2L, 5L}) {
            Real lhs = bessel_i_scaled(k - 1, x, prec) - bessel_i_scaled(k + 1, x, prec);
            Real rhs = bessel_i_scaled(k, x, prec) * 2L * static_cast<long>(k) / x;
            CHECK(rel_within_bits(lhs, rhs, prec - 8));
        }
    }
}

TEST_CASE("bessel profiles") {
    const mpfr_prec_t prec = 192;
    auto x3 = bessel_profile(ProfileKind::X, 3, 3, prec);
    CHECK(rel_within_bits(x3.exponent, Real::pi(prec) * 2L, prec - 8));
    auto y2 = bessel_profile(ProfileKind::Y, 2, 4, prec);
    CHECK(rel_within_bits(y2.exponent, Real::pi(prec) * 2L, prec - 8));

    // X_3 / X_4 = 2 sqrt(3n) I_3/I_4 > 1 for all tested n
    for (long n : {1L, 5L, 50L, 500L}) {
        auto a = bessel_profile(ProfileKind::X, 3, n, prec);
        auto b = bessel_profile(ProfileKind::X, 4, n, prec);
        CHECK(a.mantissa > b.mantissa);
    }

    CHECK_THROWS_AS(bessel_profile(ProfileKind::X, 0, 5, prec), std::invalid_argument);
    CHECK_THROWS_AS(bessel_profile(ProfileKind::X, 3, 0, prec), std::invalid_argument);
}

TEST_CASE("symbolic pi constants evaluate correctly") {
    const mpfr_prec_t prec = 192;
    PiPoly half_pi_sq = PiPoly::of(Rat(1, 2), 2);
    Real got = half_pi_sq.eval(prec);
    Real want = Real::pi(prec) * Real::pi(prec) / 2L;
    CHECK(rel_within_bits(got, want, prec - 4));

    CHECK(PiPoly().eval(prec).is_zero());

    // pi/(2 sqrt 2) and pi sqrt2/4 are the same canonical element
    Quad inv_two_sqrt2 = Quad(0, 2).inverse();
    CHECK(inv_two_sqrt2 == Quad(0, Rat(1, 4)));
    PiPoly a = PiPoly::of_quad(inv_two_sqrt2, 1);
    PiPoly b = PiPoly::of_quad(Quad(0, Rat(1, 4)), 1);
    CHECK(a == b);
    CHECK(a.eval(prec) == b.eval(prec));
}

TEST_CASE("pi poly ring arithmetic") {
    PiPoly p = PiPoly::of(Rat(2), 1) + PiPoly::of(Rat(1, 3), 0);
    PiPoly q = PiPoly::of(Rat(1), 1) - PiPoly::of(Rat(1, 3), 0);
    PiPoly prod = p * q;
    CHECK(prod.coeff(2) == Quad(Rat(2)));
    CHECK(prod.coeff(1) == Quad(Rat(-2, 3) + Rat(1, 3)));
    CHECK(prod.coeff(0) == Quad(Rat(-1, 9)));
    CHECK((p - p).is_zero());

    PiPoly s = PiPoly::of_quad(Quad(1, 1), 0);
    PiPoly t = PiPoly::of_quad(Quad(-1, 1), 0);
    CHECK(s * t == PiPoly::of(Rat(1)));  // (1+s2)(-1+s2) = 1
}

#include <catch2/catch.hpp>

#include <random>

#include "unirank/qseries.hpp"

using namespace unirank;

namespace {

LaurentPoly zmono(long c, long e) { return LaurentPoly::monomial(Int(c), e); }

QSeries random_series(std::mt19937& rng, int trunc) {
    std::uniform_int_distribution<int> coeff(-1000, 1000);
    std::uniform_int_distribution<int> expo(-5, 5);
    std::uniform_int_distribution<int> nterms(0, 3);
    QSeries s(trunc);
    for (int n = 0; n <= trunc; ++n) {
        LaurentPoly p;
        const int k = nterms(rng);
        for (int i = 0; i < k; ++i) p += zmono(coeff(rng), expo(rng));
        s.set(n, std::move(p));
    }
    return s;
}

} // namespace

TEST_CASE("LaurentPoly arithmetic basics") {
    LaurentPoly a = zmono(2, -1) + zmono(3, 4);
    CHECK(a.coeff(-1) == 2);
    CHECK(a.coeff(4) == 3);
    CHECK(a.coeff(0) == 0);
    CHECK(a.min_exp() == -1);
    CHECK(a.max_exp() == 4);

    LaurentPoly b = zmono(-2, -1) + zmono(7, 0);
    LaurentPoly s = a + b;
    CHECK(s.coeff(-1) == 0);
    CHECK(s.term_count() == 2);

    LaurentPoly p = (zmono(1, 0) + zmono(1, 1)) * (zmono(1, 0) - zmono(1, 1));
    CHECK(p == zmono(1, 0) - zmono(1, 2));
}

TEST_CASE("series product examples") {
    // (1 + zq)(1 - z^{-1}q) = 1 + (z - z^{-1})q - q^2
    QSeries a(2), b(2);
    a.set(0, zmono(1, 0));
    a.set(1, zmono(1, 1));
    b.set(0, zmono(1, 0));
    b.set(1, zmono(-1, -1));
    QSeries p = mul(a, b);
    CHECK(p.coeff(0, 0) == 1);
    CHECK(p.coeff(1, 1) == 1);
    CHECK(p.coeff(-1, 1) == -1);
    CHECK(p.coeff(0, 2) == -1);
    CHECK(p.at(2).term_count() == 1);

    // a * 1 == a
    std::mt19937 rng(7);
    QSeries r = random_series(rng, 12);
    CHECK(mul(r, QSeries::one(12)) == r);

    // telescoping: (sum_{n<=N} q^n)(1-q) == 1 mod q^{N+1}
    const int N = 9;
    QSeries geo(N);
    for (int n = 0; n <= N; ++n) geo.set(n, zmono(1, 0));
    QSeries one_minus_q(N);
    one_minus_q.set(0, zmono(1, 0));
    one_minus_q.set(1, zmono(-1, 0));
    CHECK(mul(geo, one_minus_q) == QSeries::one(N));
}

TEST_CASE("series product requires equal truncation") {
    QSeries a(3), b(4);
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a += b, std::invalid_argument);
}

TEST_CASE("pochhammer products") {
    // (zq;q)_2 = (1 - zq)(1 - zq^2) = 1 - zq - zq^2 + z^2 q^3
    QSeries p = pochhammer({.sign = +1, .zeta_exp = 1, .q_offset = 1, .q_step = 1, .count = 2}, 4);
    CHECK(p.coeff(0, 0) == 1);
    CHECK(p.coeff(1, 1) == -1);
    CHECK(p.coeff(1, 2) == -1);
    CHECK(p.coeff(2, 3) == 1);
    CHECK(p.at(4).zero());

    // (-q;q)_2 = (1+q)(1+q^2) = 1 + q + q^2 + q^3
    QSeries m = pochhammer({.sign = -1, .zeta_exp = 0, .q_offset = 1, .q_step = 1, .count = 2}, 4);
    for (int n = 0; n <= 3; ++n) CHECK(m.coeff(0, n) == 1);
    CHECK(m.at(4).zero());

    // empty product
    QSeries e = pochhammer({.count = 0}, 3);
    CHECK(e == QSeries::one(3));
}

TEST_CASE("pochhammer splits multiplicatively", "[property]") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> cnt(0, 4), off(1, 3), step(1, 3), ze(-2, 2);
    for (int iter = 0; iter < 40; ++iter) {
        const int a = cnt(rng), b = cnt(rng), c = off(rng), s = step(rng);
        const long e = ze(rng);
        const int sign = (iter % 2 == 0) ? +1 : -1;
        const int N = 18;
        QSeries whole =
            pochhammer({.sign = sign, .zeta_exp = e, .q_offset = c, .q_step = s, .count = a + b}, N);
        QSeries left =
            pochhammer({.sign = sign, .zeta_exp = e, .q_offset = c, .q_step = s, .count = a}, N);
        QSeries right = pochhammer(
            {.sign = sign, .zeta_exp = e, .q_offset = c + a * s, .q_step = s, .count = b}, N);
        CHECK(whole == mul(left, right));
    }
}

TEST_CASE("division by one factor") {
    const int N = 8;
    // 1 / (1-q)
    QSeries g = div_factor(QSeries::one(N), +1, 0, 1);
    for (int n = 0; n <= N; ++n) CHECK(g.coeff(0, n) == 1);

    // 1 / (1-zq): coefficient of q^n is z^n
    QSeries gz = div_factor(QSeries::one(N), +1, 1, 1);
    for (int n = 0; n <= N; ++n) {
        CHECK(gz.coeff(n, n) == 1);
        CHECK(gz.at(n).term_count() == 1);
    }

    // (1-q^2)/(1-q) = 1 + q
    QSeries num(N);
    num.set(0, zmono(1, 0));
    num.set(2, zmono(-1, 0));
    QSeries q = div_factor(num, +1, 0, 1);
    CHECK(q.coeff(0, 0) == 1);
    CHECK(q.coeff(0, 1) == 1);
    for (int n = 2; n <= N; ++n) CHECK(q.at(n).zero());

    CHECK_THROWS_AS(div_factor(QSeries::one(3), +1, 0, 0), std::invalid_argument);
}

TEST_CASE("div_factor inverts mul_factor", "[property]") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> js(1, 5), ze(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        QSeries a = random_series(rng, 16);
        const int sign = (iter % 2 == 0) ? +1 : -1;
        const long e = ze(rng);
        const int j = js(rng);
        CHECK(div_factor(mul_factor(a, sign, e, j), sign, e, j) == a);
        CHECK(mul_factor(div_factor(a, sign, e, j), sign, e, j) == a);
    }
}

TEST_CASE("ring axioms on random instances", "[property]") {
    std::mt19937 rng(101);
    for (int iter = 0; iter < 25; ++iter) {
        QSeries a = random_series(rng, 14);
        QSeries b = random_series(rng, 14);
        QSeries c = random_series(rng, 14);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    }
}

TEST_CASE("exact division by (1+z)") {
    // (1+z)/(1+z) = 1
    QSeries a(2);
    a.set(0, zmono(1, 0) + zmono(1, 1));
    QSeries r = div_one_plus_zeta(a);
    CHECK(r == QSeries::one(2));

    // (z^{-1} + 1) q / (1+z) = z^{-1} q
    QSeries b(2);
    b.set(1, zmono(1, -1) + zmono(1, 0));
    QSeries rb = div_one_plus_zeta(b);
    CHECK(rb.coeff(-1, 1) == 1);
    CHECK(rb.at(1).term_count() == 1);

    // 1 / (1+z) is not a Laurent polynomial
    CHECK_THROWS_AS(div_one_plus_zeta(QSeries::one(2)), integrity_error);
}

TEST_CASE("division by (1+z) inverts multiplication", "[property]") {
    std::mt19937 rng(409);
    for (int iter = 0; iter < 25; ++iter) {
        QSeries a = random_series(rng, 12);
        LaurentPoly one_plus_z = zmono(1, 0) + zmono(1, 1);
        QSeries b(12);
        for (int n = 0; n <= 12; ++n) b.set(n, a.at(n) * one_plus_z);
        CHECK(div_one_plus_zeta(b) == a);
    }
}

TEST_CASE("coefficient access bounds") {
    QSeries a = QSeries::one(3);
    CHECK(a.coeff(0, 0) == 1);
    CHECK(a.coeff(5, 2) == 0);
    CHECK_THROWS_AS(a.coeff(0, 4), std::out_of_range);
    CHECK_THROWS_AS(a.coeff(0, -1), std::out_of_range);
}

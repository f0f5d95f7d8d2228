#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "unirank/family.hpp"
#include "unirank/qseries.hpp"

namespace unirank::genfun {

using Exp = QSeries::Exp;

namespace detail {

inline void mul_each_coeff(QSeries& s, const LaurentPoly& p) {
    for (int n = 0; n <= s.trunc(); ++n) {
        if (s.at(n).zero()) continue;
        s.set(n, s.at(n) * p);
    }
}

// 1 / ((zq)_inf (z^{-1}q)_inf), truncated.
inline QSeries crank_denominator(int trunc) {
    QSeries d = QSeries::one(trunc);
    for (int k = 1; k <= trunc; ++k) {
        d.div_factor(+1, +1, k);
        d.div_factor(+1, -1, k);
    }
    return d;
}

inline Int minus_one_pow(long n) { return (n % 2 == 0) ? Int(1) : Int(-1); }

} // namespace detail

// ---- combinatorial sum side -------------------------------------------------

// Sum over peaks of q^{weight(c)} / (ascent and descent Pochhammer factors),
// with the numerator corrections the v and nu families need.  The outer sum
// stops once a term's minimal q-exponent exceeds the truncation order.
inline QSeries sum_side(Family f, int trunc) {
    QSeries acc = QSeries(trunc);
    switch (f) {
        case Family::u: {
            QSeries term = QSeries::one(trunc);
            acc = term;
            for (int c = 1; c <= trunc; ++c) {
                term.shift_q(1);
                term.div_factor(+1, +1, c);
                term.div_factor(+1, -1, c);
                acc += term;
            }
            break;
        }
        case Family::w: {
            QSeries term = QSeries::one(trunc);
            acc = term;
            for (int c = 1; 2 * c <= trunc; ++c) {
                term.shift_q(2);
                term.div_factor(+1, +1, c);
                term.div_factor(+1, -1, c);
                acc += term;
            }
            break;
        }
        case Family::v: {
            QSeries term = QSeries::one(trunc);
            acc = term;
            for (int c = 1; c <= trunc; ++c) {
                term.shift_q(1);
                term.div_factor(+1, +1, c);
                term.div_factor(+1, -1, c);
                // numerator ratio (q^{c+1})_c / (q^c)_{c-1}
                term.mul_factor(+1, 0, 2 * c - 1);
                term.mul_factor(+1, 0, 2 * c);
                term.div_factor(+1, 0, c);
                acc += term;
            }
            break;
        }
        case Family::nu: {
            if (trunc < 1) break; // every term carries q^{2n+1}
            QSeries term = QSeries::one(trunc);
            term.shift_q(1);
            term.div_factor(+1, +1, 1);
            term.div_factor(+1, -1, 1);
            acc = term;
            for (int t = 1; 2 * t + 1 <= trunc; ++t) {
                term.shift_q(2);
                term.mul_factor(-1, 0, 2 * t - 1);
                term.mul_factor(-1, 0, 2 * t);
                term.div_factor(+1, +1, 2 * t + 1);
                term.div_factor(+1, -1, 2 * t + 1);
                acc += term;
            }
            break;
        }
    }
    return acc;
}

// ---- partial-theta / product side -------------------------------------------

inline QSeries theta_side(Family f, int trunc) {
    const int N = trunc;
    switch (f) {
        case Family::u: {
            // theta numerator over the infinite product, plus the finite
            // partial-theta correction carrying (1-z).
            QSeries num(N);
            for (long n = 0;; ++n) {
                const long T = n * (n + 1) / 2;
                if (T > N) break;
                num.add_at(static_cast<int>(T),
                           LaurentPoly::monomial(detail::minus_one_pow(n), 2 * n + 1));
            }
            QSeries r1 = mul(num, detail::crank_denominator(N));

            QSeries corr(N);
            for (long n = 0;; ++n) {
                const long T = n * (3 * n + 1) / 2;
                if (T > N) break;
                corr.add_at(static_cast<int>(T),
                            LaurentPoly::monomial(detail::minus_one_pow(n), 3 * n));
                const long T2 = T + 2 * n + 1;
                if (T2 <= N)
                    corr.add_at(static_cast<int>(T2),
                                LaurentPoly::monomial(-detail::minus_one_pow(n), 3 * n + 2));
            }
            LaurentPoly one_minus_z = LaurentPoly::constant(1) - LaurentPoly::monomial(1, 1);
            detail::mul_each_coeff(corr, one_minus_z);
            return r1 + corr;
        }
        case Family::w: {
            QSeries num(N);
            num.add_at(0, LaurentPoly::monomial(1, 2));
            for (long n = 1;; ++n) {
                const long T = n * (n + 1) / 2;
                if (T > N) break;
                LaurentPoly p = LaurentPoly::monomial(detail::minus_one_pow(n), 2 * n) +
                                LaurentPoly::monomial(detail::minus_one_pow(n), 2 * n + 2);
                num.add_at(static_cast<int>(T), p);
            }
            QSeries r1 = mul(num, detail::crank_denominator(N));

            QSeries corr(N);
            for (long n = 1;; ++n) {
                const long T = n * (3 * n - 1) / 2;
                if (T > N) break;
                corr.add_at(static_cast<int>(T),
                            LaurentPoly::monomial(detail::minus_one_pow(n), 3 * n - 2));
                const long T2 = T + n;
                if (T2 <= N)
                    corr.add_at(static_cast<int>(T2),
                                LaurentPoly::monomial(detail::minus_one_pow(n), 3 * n - 1));
            }
            // (1+z^2)(1-z)
            LaurentPoly pre = (LaurentPoly::constant(1) + LaurentPoly::monomial(1, 2)) *
                              (LaurentPoly::constant(1) - LaurentPoly::monomial(1, 1));
            detail::mul_each_coeff(corr, pre);
            corr.add_at(0, LaurentPoly::constant(1) - LaurentPoly::monomial(1, 2));
            return r1 + corr;
        }
        case Family::v: {
            QSeries num(N);
            for (long n = 0;; ++n) {
                const long T = 3 * n * n + 2 * n;
                if (T > N) break;
                num.add_at(static_cast<int>(T), LaurentPoly::monomial(1, 3 * n));
                const long T2 = T + 2 * n + 1;
                if (T2 <= N) num.add_at(static_cast<int>(T2), LaurentPoly::monomial(-1, 3 * n + 1));
            }
            QSeries r1 = mul(num, detail::crank_denominator(N));
            r1.mul_zeta(1);

            QSeries corr(N);
            for (long n = 0;; ++n) {
                const long T = n * n + n;
                if (T > N) break;
                corr.add_at(static_cast<int>(T), LaurentPoly::monomial(1, n));
            }
            LaurentPoly one_minus_z = LaurentPoly::constant(1) - LaurentPoly::monomial(1, 1);
            detail::mul_each_coeff(corr, one_minus_z);
            return r1 + corr;
        }
        case Family::nu: {
            // (-q)_inf / ((zq;q^2)_inf (z^{-1}q;q^2)_inf)
            QSeries prod = QSeries::one(N);
            for (int k = 1; k <= N; ++k) prod.mul_factor(-1, 0, k);
            for (int j = 1; j <= N; j += 2) {
                prod.div_factor(+1, +1, j);
                prod.div_factor(+1, -1, j);
            }
            QSeries theta_a(N);
            for (long n = 0;; ++n) {
                const long T = n * (n + 1) / 2;
                if (T > N) break;
                theta_a.add_at(static_cast<int>(T),
                               LaurentPoly::monomial(detail::minus_one_pow(n), n));
            }
            QSeries g = mul(theta_a, prod);
            for (long n = 0;; ++n) {
                const long T = n * n + n;
                if (T > N) break;
                g.add_at(static_cast<int>(T),
                         LaurentPoly::monomial(-detail::minus_one_pow(n), n));
            }
            // both pieces share the denominator (1+z); divide exactly, last
            g.mul_zeta(1);
            g.div_one_plus_zeta();
            return g;
        }
    }
    throw std::logic_error("theta_side: bad family enum");
}

// ---- identity verification ----------------------------------------------------

struct MatchReport {
    bool match = true;
    int q_order = -1;
    Exp zeta_exp = 0;
    Int lhs, rhs;

    std::string describe() const {
        if (match) return "match";
        return "mismatch at q^" + std::to_string(q_order) + " z^" + std::to_string(zeta_exp) +
               ": " + lhs.get_str() + " vs " + rhs.get_str();
    }
};

inline MatchReport compare_series(const QSeries& a, const QSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("compare_series: mismatched truncation orders");
    MatchReport rep;
    for (int n = 0; n <= a.trunc(); ++n) {
        const LaurentPoly& pa = a.at(n);
        const LaurentPoly& pb = b.at(n);
        if (pa == pb) continue;
        // locate the smallest differing exponent
        LaurentPoly diff = pa - pb;
        const Exp m = diff.min_exp();
        rep.match = false;
        rep.q_order = n;
        rep.zeta_exp = m;
        rep.lhs = pa.coeff(m);
        rep.rhs = pb.coeff(m);
        return rep;
    }
    return rep;
}

inline MatchReport identity_report(Family f, int trunc) {
    return compare_series(sum_side(f, trunc), theta_side(f, trunc));
}

// Crank-style rewrite of 1/((zq)_inf (z^{-1}q)_inf) as a Lerch-type sum over
// (q)_inf^2.  The n = 0 term of the bilateral sum is 1/(1-z); it is cancelled
// symbolically against the (1-z) prefactor, the n >= 1 terms are expanded
// geometrically, and the n <= -1 terms are first rewritten to positive
// q-powers.
inline MatchReport crank_identity_report(int trunc) {
    const int N = trunc;
    QSeries lhs = detail::crank_denominator(N);

    QSeries bracket = QSeries::one(N);
    LaurentPoly one_minus_z = LaurentPoly::constant(1) - LaurentPoly::monomial(1, 1);
    for (long n = 1;; ++n) {
        const long T = n * (n + 1) / 2;
        if (T > N) break;
        QSeries s(N);
        for (long i = 0; T + n * i <= N; ++i) {
            LaurentPoly p = LaurentPoly::monomial(1, i) + LaurentPoly::monomial(-1, -i - 1);
            s.add_at(static_cast<int>(T + n * i), p);
        }
        detail::mul_each_coeff(s, one_minus_z);
        s.mul_scalar(detail::minus_one_pow(n));
        bracket += s;
    }
    for (int k = 1; k <= N; ++k) {
        bracket.div_factor(+1, 0, k);
        bracket.div_factor(+1, 0, k);
    }
    return compare_series(lhs, bracket);
}

// ---- cached rank counts -------------------------------------------------------

// Read-mostly cache of the built series, one slot per family.  A request past
// the cached truncation rebuilds the slot at the larger order.
class RankTable {
public:
    static RankTable& instance() {
        static RankTable t;
        return t;
    }

    void set_limit(long limit) {
        std::lock_guard<std::mutex> g(mu_);
        limit_ = limit;
    }

    long limit() const { return limit_; }

    std::shared_ptr<const QSeries> series(Family f, long min_trunc) {
        if (min_trunc < 0) throw std::invalid_argument("RankTable: negative truncation");
        if (min_trunc > limit_)
            throw std::invalid_argument("RankTable: truncation " + std::to_string(min_trunc) +
                                        " beyond configured maximum " + std::to_string(limit_));
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = cache_.find(f);
            if (it != cache_.end() && it->second->trunc() >= min_trunc) return it->second;
        }
        // build outside the lock; single writer per key is enough for the
        // intended read-mostly use
        long build_to = std::max<long>(min_trunc, 64);
        auto built = std::make_shared<const QSeries>(sum_side(f, static_cast<int>(build_to)));
        std::lock_guard<std::mutex> g(mu_);
        auto& slot = cache_[f];
        if (!slot || slot->trunc() < built->trunc()) slot = built;
        return cache_[f];
    }

    Int count(Family f, long m, long n) {
        if (n < 0) throw std::invalid_argument("rank_count: negative weight");
        auto s = series(f, n);
        return s->coeff(m, static_cast<int>(n));
    }

private:
    RankTable() = default;
    std::mutex mu_;
    std::map<Family, std::shared_ptr<const QSeries>> cache_;
    long limit_ = 2000;
};

inline Int rank_count(Family f, long m, long n) { return RankTable::instance().count(f, m, n); }

} // namespace unirank::genfun

#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unirank/errors.hpp"
#include "unirank/laurent.hpp"

namespace unirank {

// Truncated power series in q with LaurentPoly coefficients, known modulo
// q^{trunc+1}.  The truncation order is fixed at construction; binary
// operations require equal truncation orders and never re-truncate silently.
class QSeries {
public:
    using Exp = LaurentPoly::Exp;

    explicit QSeries(int trunc) : trunc_(trunc), c_(static_cast<std::size_t>(trunc) + 1) {
        if (trunc < 0) throw std::invalid_argument("QSeries: negative truncation order");
    }

    static QSeries one(int trunc) {
        QSeries s(trunc);
        s.c_[0] = LaurentPoly::constant(1);
        return s;
    }

    int trunc() const { return trunc_; }

    const LaurentPoly& at(int n) const {
        check_order(n);
        return c_[static_cast<std::size_t>(n)];
    }

    // Coefficient of z^m q^n; n out of range is a usage error.
    const Int& coeff(Exp m, int n) const { return at(n).coeff(m); }

    void set(int n, LaurentPoly p) {
        check_order(n);
        c_[static_cast<std::size_t>(n)] = std::move(p);
    }

    void add_at(int n, const LaurentPoly& p) {
        check_order(n);
        c_[static_cast<std::size_t>(n)] += p;
    }

    QSeries& operator+=(const QSeries& o) {
        check_same_trunc(o);
        for (int n = 0; n <= trunc_; ++n) c_[n] += o.c_[n];
        return *this;
    }

    QSeries& operator-=(const QSeries& o) {
        check_same_trunc(o);
        for (int n = 0; n <= trunc_; ++n) c_[n] -= o.c_[n];
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) {
        a += b;
        return a;
    }
    friend QSeries operator-(QSeries a, const QSeries& b) {
        a -= b;
        return a;
    }

    bool operator==(const QSeries&) const = default;

    // ---- in-place builders -------------------------------------------------

    // *this *= q^k (coefficients above the truncation order fall away).
    void shift_q(int k) {
        if (k == 0) return;
        if (k < 0 || k > trunc_ + 1) throw std::invalid_argument("QSeries::shift_q: bad shift");
        for (int n = trunc_; n >= k; --n) c_[n] = std::move(c_[n - k]);
        for (int n = 0; n < k && n <= trunc_; ++n) c_[n] = LaurentPoly{};
    }

    void mul_zeta(Exp e) {
        if (e == 0) return;
        for (auto& p : c_) p.shift(e);
    }

    void mul_scalar(const Int& k) {
        for (auto& p : c_) p *= k;
    }

    // *this *= (1 - sign * z^e * q^j), j >= 1.
    void mul_factor(int sign, Exp e, int j) {
        if (j < 1) throw std::invalid_argument("QSeries::mul_factor: q-step must be >= 1");
        for (int n = trunc_; n >= j; --n) c_[n].add_shifted(c_[n - j], -sign, e);
    }

    // *this /= (1 - sign * z^e * q^j) via the geometric series; j = 0 would
    // not be a unit perturbation of 1 and is rejected.
    void div_factor(int sign, Exp e, int j) {
        if (j < 1) throw std::invalid_argument("QSeries::div_factor: q-step must be >= 1");
        for (int n = j; n <= trunc_; ++n) c_[n].add_shifted(c_[n - j], sign, e);
    }

    // Exact division by (1 + z) in the Laurent ring, order by order.  A
    // nonzero remainder at any q-order signals a wrongly assembled series.
    void div_one_plus_zeta() {
        for (int n = 0; n <= trunc_; ++n) {
            auto q = c_[n].div_one_plus_zeta();
            if (!q) {
                throw integrity_error("QSeries: coefficient of q^" + std::to_string(n) +
                                      " is not divisible by (1+z)");
            }
            c_[n] = std::move(*q);
        }
    }

    std::string str(int max_order = -1) const {
        std::ostringstream os;
        int hi = max_order < 0 ? trunc_ : std::min(max_order, trunc_);
        bool any = false;
        for (int n = 0; n <= hi; ++n) {
            if (c_[n].zero()) continue;
            if (any) os << " + ";
            any = true;
            os << "(" << c_[n].str() << ")";
            if (n > 0) os << "*q^" << n;
        }
        if (!any) return "0";
        return os.str();
    }

private:
    int trunc_;
    std::vector<LaurentPoly> c_;

    void check_order(int n) const {
        if (n < 0 || n > trunc_)
            throw std::out_of_range("QSeries: q-order " + std::to_string(n) +
                                    " outside truncation " + std::to_string(trunc_));
    }

    void check_same_trunc(const QSeries& o) const {
        if (trunc_ != o.trunc_)
            throw std::invalid_argument("QSeries: mismatched truncation orders " +
                                        std::to_string(trunc_) + " vs " + std::to_string(o.trunc_));
    }
};

// Product of two series with equal truncation order.
inline QSeries mul(const QSeries& a, const QSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("mul: mismatched truncation orders");
    const int N = a.trunc();
    QSeries r(N);
    for (int i = 0; i <= N; ++i) {
        const LaurentPoly& ai = a.at(i);
        if (ai.zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            const LaurentPoly& bj = b.at(j);
            if (bj.zero()) continue;
            LaurentPoly prod = ai * bj;
            r.add_at(i + j, prod);
        }
    }
    return r;
}

inline QSeries div_factor(QSeries a, int sign, QSeries::Exp e, int j) {
    a.div_factor(sign, e, j);
    return a;
}

inline QSeries mul_factor(QSeries a, int sign, QSeries::Exp e, int j) {
    a.mul_factor(sign, e, j);
    return a;
}

inline QSeries div_one_plus_zeta(QSeries a) {
    a.div_one_plus_zeta();
    return a;
}

// Specification of the product prod_{k=0}^{count-1} (1 - sign * z^e * q^{c + k s}).
// An absent count means the infinite product, truncated at the series order
// (factors with c + k s > trunc are 1 modulo q^{trunc+1}).
struct PochFactorSpec {
    int sign = +1;                  // factor is (1 - sign z^e q^{c+ks})
    LaurentPoly::Exp zeta_exp = 0;  // e
    int q_offset = 1;               // c >= 1
    int q_step = 1;                 // s >= 1
    std::optional<long> count;      // n, or infinite
};

inline QSeries pochhammer(const PochFactorSpec& spec, int trunc) {
    if (spec.q_offset < 1 || spec.q_step < 1)
        throw std::invalid_argument("pochhammer: require q_offset >= 1 and q_step >= 1");
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    if (spec.count && *spec.count < 0)
        throw std::invalid_argument("pochhammer: negative factor count");
    QSeries r = QSeries::one(trunc);
    long k = 0;
    while (!spec.count || k < *spec.count) {
        const long j = spec.q_offset + k * static_cast<long>(spec.q_step);
        if (j > trunc) break;  // remaining factors are 1 mod q^{trunc+1}
        r.mul_factor(spec.sign, spec.zeta_exp, static_cast<int>(j));
        ++k;
    }
    return r;
}

} // namespace unirank

#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>

#include "unirank/real.hpp"

namespace unirank::specfun {

// Element of the quadratic field Q(sqrt 2), kept exact.
struct Quad {
    mpq_class a, b; // a + b*sqrt(2)

    Quad() : a(0), b(0) {}
    Quad(mpq_class p, mpq_class q = 0) : a(std::move(p)), b(std::move(q)) {
        a.canonicalize();
        b.canonicalize();
    }

    static Quad sqrt2_times(mpq_class q) { return Quad(0, std::move(q)); }

    bool is_zero() const { return a == 0 && b == 0; }

    friend Quad operator+(const Quad& x, const Quad& y) { return Quad(x.a + y.a, x.b + y.b); }
    friend Quad operator-(const Quad& x, const Quad& y) { return Quad(x.a - y.a, x.b - y.b); }
    friend Quad operator-(const Quad& x) { return Quad(-x.a, -x.b); }
    friend Quad operator*(const Quad& x, const Quad& y) {
        return Quad(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    friend Quad operator*(const Quad& x, const mpq_class& s) { return Quad(x.a * s, x.b * s); }
    friend Quad operator/(const Quad& x, const mpq_class& s) { return Quad(x.a / s, x.b / s); }
    // 1/(a + b.sqrt2) = (a - b.sqrt2)/(a^2 - 2 b^2)
    Quad inverse() const {
        mpq_class n = a * a - 2 * b * b;
        if (n == 0) throw std::domain_error("Quad::inverse of zero");
        return Quad(a / n, -b / n);
    }

    bool operator==(const Quad&) const = default;

    Real eval(mpfr_prec_t prec) const {
        return (Real::of(a, prec + 8) + Real::of(b, prec + 8) * Real::sqrt2(prec + 8))
            .to_prec(prec);
    }

    std::string str() const {
        std::ostringstream os;
        if (b == 0) {
            os << a.get_str();
        } else if (a == 0) {
            os << b.get_str() << "*sqrt2";
        } else {
            os << a.get_str() << (b > 0 ? " + " : " - ") << mpq_class(abs(b)).get_str() << "*sqrt2";
        }
        return os.str();
    }
};

// Exact symbolic constant: finite sum of terms (a + b*sqrt2) * pi^k with
// rational a, b.  Equality is structural after canonicalization (no zero
// coefficients are stored).
class PiPoly {
public:
    PiPoly() = default;

    static PiPoly of(mpq_class r, unsigned pi_pow = 0) {
        return of_quad(Quad(std::move(r)), pi_pow);
    }

    static PiPoly of_quad(Quad q, unsigned pi_pow = 0) {
        PiPoly p;
        if (!q.is_zero()) p.c_.emplace(pi_pow, std::move(q));
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    const std::map<unsigned, Quad>& terms() const { return c_; }

    Quad coeff(unsigned pi_pow) const {
        auto it = c_.find(pi_pow);
        return it == c_.end() ? Quad() : it->second;
    }

    PiPoly& operator+=(const PiPoly& o) {
        for (const auto& [k, q] : o.c_) add_term(k, q);
        return *this;
    }
    PiPoly& operator-=(const PiPoly& o) {
        for (const auto& [k, q] : o.c_) add_term(k, -q);
        return *this;
    }

    friend PiPoly operator+(PiPoly x, const PiPoly& y) {
        x += y;
        return x;
    }
    friend PiPoly operator-(PiPoly x, const PiPoly& y) {
        x -= y;
        return x;
    }
    friend PiPoly operator-(const PiPoly& x) {
        PiPoly r;
        for (const auto& [k, q] : x.c_) r.c_.emplace(k, -q);
        return r;
    }

    friend PiPoly operator*(const PiPoly& x, const PiPoly& y) {
        PiPoly r;
        for (const auto& [kx, qx] : x.c_)
            for (const auto& [ky, qy] : y.c_) r.add_term(kx + ky, qx * qy);
        return r;
    }

    PiPoly& operator*=(const Quad& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& [k, q] : c_) q = q * s;
        return *this;
    }

    PiPoly& operator*=(const mpq_class& s) { return *this *= Quad(s); }

    PiPoly& mul_pi_pow(unsigned d) {
        if (d == 0 || c_.empty()) return *this;
        std::map<unsigned, Quad> shifted;
        for (auto& [k, q] : c_) shifted.emplace(k + d, std::move(q));
        c_ = std::move(shifted);
        return *this;
    }

    bool operator==(const PiPoly&) const = default;

    Real eval(mpfr_prec_t prec) const {
        const mpfr_prec_t work = prec + 16;
        Real acc(work);
        const Real& pi = Real::pi(work);
        for (const auto& [k, q] : c_)
            acc += q.eval(work) * pow(pi, static_cast<long>(k));
        return acc.to_prec(prec);
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, q] : c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << q.str() << ")";
            if (k == 1) os << "*pi";
            if (k > 1) os << "*pi^" << k;
        }
        return os.str();
    }

private:
    std::map<unsigned, Quad> c_;

    void add_term(unsigned k, const Quad& q) {
        if (q.is_zero()) return;
        auto [it, inserted] = c_.emplace(k, q);
        if (!inserted) {
            it->second = it->second + q;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
};

} // namespace unirank::specfun

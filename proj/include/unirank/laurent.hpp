#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unirank {

using Int = mpz_class;

// Finite integer-coefficient Laurent polynomial in one formal variable z
// (one q-coefficient slice of a bivariate series).  Terms are kept sorted by
// exponent and no stored coefficient is zero.
class LaurentPoly {
public:
    using Exp = std::int64_t;
    using Term = std::pair<Exp, Int>;

    LaurentPoly() = default;

    static LaurentPoly constant(Int c) { return monomial(std::move(c), 0); }

    static LaurentPoly monomial(Int c, Exp e) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace_back(e, std::move(c));
        return p;
    }

    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Exp min_exp() const {
        require_nonzero();
        return terms_.front().first;
    }
    Exp max_exp() const {
        require_nonzero();
        return terms_.back().first;
    }

    const Int& coeff(Exp e) const {
        auto it = lower_bound(e);
        if (it != terms_.end() && it->first == e) return it->second;
        return zero_int();
    }

    const std::vector<Term>& terms() const { return terms_; }

    // *this += sign * z^shift * src, sign in {+1,-1}.  Merge of two sorted
    // term lists; reuses a thread-local scratch buffer so steady-state
    // operation allocates nothing.
    void add_shifted(const LaurentPoly& src, int sign, Exp shift) {
        if (src.zero()) return;
        if (terms_.empty()) {
            terms_.reserve(src.terms_.size());
            for (const auto& [e, c] : src.terms_) {
                terms_.emplace_back(e + shift, sign > 0 ? c : Int(-c));
            }
            return;
        }
        auto& scratch = scratch_buffer();
        scratch.clear();
        scratch.reserve(terms_.size() + src.terms_.size());
        auto a = terms_.begin();
        const auto a_end = terms_.end();
        auto b = src.terms_.begin();
        const auto b_end = src.terms_.end();
        while (a != a_end && b != b_end) {
            const Exp be = b->first + shift;
            if (a->first < be) {
                scratch.emplace_back(std::move(*a));
                ++a;
            } else if (a->first > be) {
                scratch.emplace_back(be, sign > 0 ? b->second : Int(-b->second));
                ++b;
            } else {
                Int sum = std::move(a->second);
                if (sign > 0)
                    sum += b->second;
                else
                    sum -= b->second;
                if (sum != 0) scratch.emplace_back(a->first, std::move(sum));
                ++a;
                ++b;
            }
        }
        for (; a != a_end; ++a) scratch.emplace_back(std::move(*a));
        for (; b != b_end; ++b)
            scratch.emplace_back(b->first + shift, sign > 0 ? b->second : Int(-b->second));
        terms_.swap(scratch);
    }

    // *this += k * z^shift * src for arbitrary integer k.
    void add_scaled_shifted(const LaurentPoly& src, const Int& k, Exp shift) {
        if (src.zero() || k == 0) return;
        if (k == 1) {
            add_shifted(src, +1, shift);
            return;
        }
        if (k == -1) {
            add_shifted(src, -1, shift);
            return;
        }
        auto& scratch = scratch_buffer();
        scratch.clear();
        scratch.reserve(terms_.size() + src.terms_.size());
        auto a = terms_.begin();
        const auto a_end = terms_.end();
        auto b = src.terms_.begin();
        const auto b_end = src.terms_.end();
        while (a != a_end && b != b_end) {
            const Exp be = b->first + shift;
            if (a->first < be) {
                scratch.emplace_back(std::move(*a));
                ++a;
            } else if (a->first > be) {
                scratch.emplace_back(be, Int(k * b->second));
                ++b;
            } else {
                Int sum = std::move(a->second);
                sum += k * b->second;
                if (sum != 0) scratch.emplace_back(a->first, std::move(sum));
                ++a;
                ++b;
            }
        }
        for (; a != a_end; ++a) scratch.emplace_back(std::move(*a));
        for (; b != b_end; ++b) scratch.emplace_back(b->first + shift, Int(k * b->second));
        terms_.swap(scratch);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        add_shifted(o, +1, 0);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        add_shifted(o, -1, 0);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        a += b;
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        a -= b;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        const LaurentPoly& outer = a.term_count() <= b.term_count() ? a : b;
        const LaurentPoly& inner = a.term_count() <= b.term_count() ? b : a;
        for (const auto& [e, c] : outer.terms_) r.add_scaled_shifted(inner, c, e);
        return r;
    }

    LaurentPoly& operator*=(const Int& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        if (k != 1)
            for (auto& [e, c] : terms_) c *= k;
        return *this;
    }

    void negate() {
        for (auto& [e, c] : terms_) c = -c;
    }

    void shift(Exp d) {
        for (auto& [e, c] : terms_) e += d;
    }

    // Exact quotient by (1 + z); nullopt when the division leaves a remainder.
    std::optional<LaurentPoly> div_one_plus_zeta() const {
        if (zero()) return LaurentPoly{};
        const Exp lo = min_exp();
        const Exp hi = max_exp();
        LaurentPoly q;
        q.terms_.reserve(terms_.size());
        Int carry = 0; // quotient coefficient at exponent e-1
        auto it = terms_.begin();
        for (Exp e = lo; e < hi; ++e) {
            Int cur = (it != terms_.end() && it->first == e) ? it->second : Int(0);
            if (it != terms_.end() && it->first == e) ++it;
            Int qc = cur - carry;
            if (qc != 0) q.terms_.emplace_back(e, qc);
            carry = std::move(qc);
        }
        // remainder: top coefficient must equal the final carry
        if (it == terms_.end() || it->first != hi || it->second != carry) return std::nullopt;
        return q;
    }

    bool operator==(const LaurentPoly&) const = default;

    std::string str(const char* var = "z") const {
        if (zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0)
                os << "-";
            first = false;
            Int a = abs(c);
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;

    std::vector<Term>::const_iterator lower_bound(Exp e) const {
        auto it = terms_.begin();
        auto last = terms_.end();
        // supports are short for typical polynomials; binary search pays off
        // only on the wide series slices
        std::size_t count = terms_.size();
        while (count > 0) {
            std::size_t step = count / 2;
            auto mid = it + step;
            if (mid->first < e) {
                it = mid + 1;
                count -= step + 1;
            } else {
                count = step;
            }
        }
        (void)last;
        return it;
    }

    static const Int& zero_int() {
        static const Int z(0);
        return z;
    }

    static std::vector<Term>& scratch_buffer() {
        thread_local std::vector<Term> buf;
        return buf;
    }

    void require_nonzero() const {
        if (terms_.empty()) throw std::logic_error("LaurentPoly: exponent range of zero polynomial");
    }
};

} // namespace unirank

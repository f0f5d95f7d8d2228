#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "unirank/complex.hpp"
#include "unirank/errors.hpp"

namespace unirank::quadrature {

// Gauss-Legendre nodes/weights on (-1, 1) at the requested precision, by
// Newton refinement of double-precision seeds against the Legendre
// recurrence.  Cached per (order, precision).
struct Rule {
    std::vector<Real> nodes;   // only the nonnegative half; symmetric
    std::vector<Real> weights;
    unsigned order = 0;
};

inline const Rule& gauss_legendre(unsigned order, mpfr_prec_t prec) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("gauss_legendre: order must be even and >= 2");
    static std::mutex mu;
    static std::map<std::pair<unsigned, mpfr_prec_t>, Rule> cache;
    std::lock_guard<std::mutex> g(mu);
    auto key = std::make_pair(order, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const mpfr_prec_t work = prec + 32;
    Rule rule;
    rule.order = order;
    const unsigned half = order / 2;
    for (unsigned i = 1; i <= half; ++i) {
        double seed = std::cos(3.14159265358979323846 * (i - 0.25) / (order + 0.5));
        Real x = Real::of(seed, work);
        for (int iter = 0; iter < 64; ++iter) {
            // Legendre recurrence for P_n(x) and P_{n-1}(x)
            Real p0 = Real::of(1L, work), p1 = x;
            for (unsigned k = 2; k <= order; ++k) {
                Real pk = (x * p1 * static_cast<long>(2 * k - 1) -
                           p0 * static_cast<long>(k - 1)) /
                          static_cast<long>(k);
                p0 = p1;
                p1 = pk;
            }
            // P'_n(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
            Real denom = x * x - Real::of(1L, work);
            Real deriv = (x * p1 - p0) * static_cast<long>(order) / denom;
            Real step = p1 / deriv;
            x -= step;
            if (step.is_zero() || abs(step) < ldexp(Real::of(1L, work), -(prec + 16))) break;
        }
        // weight = 2 / ((1 - x^2) P'_n(x)^2)
        Real p0 = Real::of(1L, work), p1 = x;
        for (unsigned k = 2; k <= order; ++k) {
            Real pk =
                (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) /
                static_cast<long>(k);
            p0 = p1;
            p1 = pk;
        }
        Real denom = x * x - Real::of(1L, work);
        Real deriv = (x * p1 - p0) * static_cast<long>(order) / denom;
        Real w = Real::of(2L, work) / ((Real::of(1L, work) - x * x) * deriv * deriv);
        rule.nodes.push_back(x.to_prec(prec));
        rule.weights.push_back(w.to_prec(prec));
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

using Integrand = std::function<Complex(const Real&)>;

inline Complex fixed_panel(const Integrand& f, const Real& a, const Real& b, const Rule& rule,
                           mpfr_prec_t prec) {
    const Real mid = (a + b) / 2L;
    const Real rad = (b - a) / 2L;
    Complex acc(prec);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Real& x = rule.nodes[i];
        const Real& w = rule.weights[i];
        acc += (f(mid + rad * x) + f(mid - rad * x)) * w;
    }
    return acc * rad;
}

// Adaptive bisection with a fixed Gauss rule per panel; a panel is accepted
// when one extra bisection moves its value by less than its share of the
// absolute tolerance.
inline Complex integrate(const Integrand& f, const Real& a, const Real& b, mpfr_prec_t prec,
                         const Real& abs_tol, unsigned order = 32, int max_depth = 42) {
    const Rule& rule = gauss_legendre(order, prec);
    struct Frame {
        Real a, b, tol;
        Complex whole;
        int depth;
    };
    Complex total(prec);
    std::vector<Frame> stack;
    stack.push_back({a, b, abs_tol, fixed_panel(f, a, b, rule, prec), 0});
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        const Real mid = (fr.a + fr.b) / 2L;
        Complex left = fixed_panel(f, fr.a, mid, rule, prec);
        Complex right = fixed_panel(f, mid, fr.b, rule, prec);
        Real err = abs(fr.whole - left - right);
        if (err <= fr.tol || fr.depth >= max_depth) {
            if (fr.depth >= max_depth && !(err <= fr.tol))
                throw numeric_error(
                    "quadrature: panel did not converge (depth " + std::to_string(fr.depth) +
                    ", residual " + err.str(6) + ", tolerance " + fr.tol.str(6) + ")");
            total += left + right;
            continue;
        }
        Real half_tol = fr.tol / 2L;
        stack.push_back({fr.a, mid, half_tol, std::move(left), fr.depth + 1});
        stack.push_back({mid, fr.b, half_tol, std::move(right), fr.depth + 1});
    }
    return total;
}

// Self-consistency handle: the same integral with every panel forced one
// level deeper (doubled subdivision), for verification tests.
inline Complex integrate_refined(const Integrand& f, const Real& a, const Real& b,
                                 mpfr_prec_t prec, const Real& abs_tol, unsigned order = 32) {
    const Real mid = (a + b) / 2L;
    return integrate(f, a, mid, prec, abs_tol / 2L, order) +
           integrate(f, mid, b, prec, abs_tol / 2L, order);
}

} // namespace unirank::quadrature

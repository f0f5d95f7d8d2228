#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "unirank/asymptotics.hpp"
#include "unirank/enumerate.hpp"
#include "unirank/genfun.hpp"
#include "unirank/kernels.hpp"

namespace unirank::verify {

struct Failure {
    std::string id;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<std::string> lines; // one entry per executed check
    std::vector<Failure> failures;

    bool pass() const { return failures.empty(); }

    void check(bool ok, const std::string& id, const std::string& detail) {
        lines.push_back((ok ? "ok   " : "FAIL ") + id + (detail.empty() ? "" : "  " + detail));
        if (!ok) failures.push_back({id, detail});
    }
};

// ---- identities ---------------------------------------------------------------

inline SuiteReport identities(int trunc = 200, int crank_trunc = 100) {
    SuiteReport rep;
    rep.name = "identities";
    for (Family f : all_families) {
        auto r = genfun::identity_report(f, trunc);
        rep.check(r.match, std::string("two-sides-") + family_name(f) + "@" + std::to_string(trunc),
                  r.match ? "" : r.describe());
    }
    auto c = genfun::crank_identity_report(crank_trunc);
    rep.check(c.match, "crank-rewrite@" + std::to_string(crank_trunc),
              c.match ? "" : c.describe());
    return rep;
}

// ---- symmetry -----------------------------------------------------------------

inline SuiteReport symmetry(long n_max = 500) {
    SuiteReport rep;
    rep.name = "symmetry";
    for (Family f : all_families) {
        auto s = genfun::RankTable::instance().series(f, n_max);
        long bad_n = -1;
        LaurentPoly::Exp bad_m = 0;
        for (long n = 0; n <= n_max && bad_n < 0; ++n) {
            for (const auto& [m, c] : s->at(static_cast<int>(n)).terms()) {
                if (s->coeff(-m, static_cast<int>(n)) != c) {
                    bad_n = n;
                    bad_m = m;
                    break;
                }
            }
        }
        std::ostringstream detail;
        if (bad_n >= 0) detail << "first asymmetry at n=" << bad_n << " m=" << bad_m;
        rep.check(bad_n < 0, std::string("rank-symmetry-") + family_name(f) + "@" +
                                 std::to_string(n_max),
                  detail.str());
    }
    return rep;
}

// ---- enumeration oracle --------------------------------------------------------

inline SuiteReport oracle(long n_max = 30) {
    SuiteReport rep;
    rep.name = "oracle";
    for (Family f : all_families) {
        auto s = genfun::RankTable::instance().series(f, n_max);
        bool ok = true;
        std::string detail;
        for (long n = (f == Family::nu ? 1 : 0); n <= n_max && ok; ++n) {
            auto h = enumeration::ranks(f, n);
            for (const auto& [m, c] : s->at(static_cast<int>(n)).terms()) {
                if (h.at(m) != c) {
                    ok = false;
                    detail = "series vs enumeration differ at n=" + std::to_string(n) +
                             " m=" + std::to_string(m);
                    break;
                }
            }
            for (const auto& [m, c] : h.counts) {
                if (s->coeff(m, static_cast<int>(n)) != c) {
                    ok = false;
                    detail = "enumeration vs series differ at n=" + std::to_string(n) +
                             " m=" + std::to_string(m);
                    break;
                }
            }
        }
        rep.check(ok, std::string("oracle-") + family_name(f) + "@" + std::to_string(n_max),
                  detail);
    }
    return rep;
}

// ---- rank inequalities ----------------------------------------------------------

struct InequalityOnset {
    Family family;
    long lower_rank;  // j
    long higher_rank; // m
    long onset;       // minimal n0 with strict decrease through n_max; -1 if none
};

// For each 0 <= j < m <= m_max, the minimal n0 such that
// count(j, n) > count(m, n) for all n0 <= n <= n_max.
inline std::vector<InequalityOnset> inequality_onsets(Family f, long m_max, long n_max) {
    auto s = genfun::RankTable::instance().series(f, n_max);
    std::vector<InequalityOnset> out;
    for (long m = 1; m <= m_max; ++m) {
        for (long j = 0; j < m; ++j) {
            long last_violation = 0; // n = 0 row never satisfies strictness for j vs m
            for (long n = 1; n <= n_max; ++n) {
                const Int& cj = s->coeff(j, static_cast<int>(n));
                const Int& cm = s->coeff(m, static_cast<int>(n));
                if (!(cj > cm)) last_violation = n;
            }
            long onset = last_violation >= n_max ? -1 : last_violation + 1;
            out.push_back({f, j, m, onset});
        }
    }
    return out;
}

inline SuiteReport inequalities(long m_max = 10, long onset_max = 1000, long n_max = 1500) {
    SuiteReport rep;
    rep.name = "inequalities";
    for (Family f : all_families) {
        for (const auto& o : inequality_onsets(f, m_max, n_max)) {
            const std::string id = std::string(family_name(f)) + " j=" +
                                   std::to_string(o.lower_rank) + " m=" +
                                   std::to_string(o.higher_rank);
            if (o.onset < 0) {
                rep.check(false, id, "FAIL-AT-END: violated at n_max " + std::to_string(n_max));
            } else {
                rep.check(o.onset <= onset_max, id, "n0=" + std::to_string(o.onset));
            }
        }
    }
    return rep;
}

// ---- symbolic coefficient reproduction -------------------------------------------

inline SuiteReport coefficients(long m_max = 10) {
    SuiteReport rep;
    rep.name = "coefficients";
    for (Family f : all_families) {
        bool ok = true;
        std::string detail;
        for (long m = 0; m <= m_max && ok; ++m) {
            auto expanded = asym::expansion_series(f, m, asym::main_term_order(f));
            auto table = asym::main_term_series(f, m);
            if (expanded.terms.size() != table.terms.size()) {
                ok = false;
                detail = "term count mismatch at m=" + std::to_string(m);
                break;
            }
            for (std::size_t i = 0; i < table.terms.size(); ++i) {
                if (expanded.terms[i].first != table.terms[i].first ||
                    !(expanded.terms[i].second == table.terms[i].second)) {
                    ok = false;
                    detail = "coefficient mismatch at m=" + std::to_string(m) + " index " +
                             std::to_string(table.terms[i].first);
                    break;
                }
            }
        }
        rep.check(ok, std::string("main-terms-") + family_name(f), detail);
    }
    return rep;
}

// ---- numeric kernel checks ---------------------------------------------------------

struct ThetaOrderResult {
    specfun::Rat d;
    int k = 0;
    bool z_zero = true;
    int N = 0;
    double ratio1 = 0, ratio2 = 0; // err(y)/err(y/2) per halving step
    bool ok = false;
};

inline std::vector<ThetaOrderResult> theta_order_scan(mpfr_prec_t prec = 256) {
    using specfun::Rat;
    std::vector<ThetaOrderResult> out;
    const std::vector<std::pair<Rat, int>> pairs{
        {Rat(1), 4}, {Rat(3), 4}, {Rat(1, 2), 2}, {Rat(3, 2), 2}};
    for (const auto& [d, k] : pairs) {
        for (bool z_zero : {true, false}) {
            Complex z = z_zero
                            ? Complex::of(0, 0, prec)
                            : Complex::real(Real::of(Rat(1, 8 * k), prec));
            for (int N : {2, 3, 4}) {
                double errs[3];
                int idx = 0;
                for (long yden : {8L, 16L, 32L}) {
                    Complex tau{Real::of(0L, prec), Real::of(Rat(1, yden), prec)};
                    Complex direct = kernels::partial_theta_direct(d, k, z, tau, prec);
                    Complex expans = kernels::partial_theta_expansion(d, k, z, tau, N, prec);
                    errs[idx++] = abs(direct - expans).to_double();
                }
                ThetaOrderResult r;
                r.d = d;
                r.k = k;
                r.z_zero = z_zero;
                r.N = N;
                r.ratio1 = errs[0] / errs[1];
                r.ratio2 = errs[1] / errs[2];
                const double target = std::pow(2.0, N + 1);
                r.ok = r.ratio1 >= target / 1.5 && r.ratio1 <= target * 1.5 &&
                       r.ratio2 >= target / 1.5 && r.ratio2 <= target * 1.5;
                out.push_back(r);
            }
        }
    }
    return out;
}

struct MomentClosedResult {
    char kind = 'I'; // I = sinh moment, K = cosh moment
    int ell = 0;
    double rel_err = 0;
    bool ok = false;
};

inline std::vector<MomentClosedResult> moment_closed_scan(mpfr_prec_t prec = 192,
                                                          double tol = 1e-6) {
    using specfun::Rat;
    std::vector<MomentClosedResult> out;
    const Complex tau{Real::of(0L, prec), Real::of(Rat(1, 100), prec)};
    const Real a = Real::of(Rat(1, 16), prec);
    for (int ell : {0, 1, 2}) {
        auto pi = kernels::moment_sinh(ell, a, tau, prec);
        double ei = (abs(pi.quadrature - pi.closed) / abs(pi.closed)).to_double();
        out.push_back({'I', ell, ei, ei <= tol});
        auto pk = kernels::moment_cosh(ell, a, tau, prec);
        double ek = (abs(pk.quadrature - pk.closed) / abs(pk.closed)).to_double();
        out.push_back({'K', ell, ek, ek <= tol});
    }
    return out;
}

struct MomentSlopeResult {
    double slope = 0, expected = 0;
    bool ok = false;
};

// residual ~ e^{-pi a Im(-1/tau)}: fit ln(residual) against Im(-1/tau)
inline MomentSlopeResult moment_residual_slope(mpfr_prec_t prec = 192) {
    using specfun::Rat;
    const Real a = Real::of(Rat(1, 16), prec);
    const double ims[3] = {60, 90, 120};
    double logres[3];
    for (int i = 0; i < 3; ++i) {
        Complex tau{Real::of(0L, prec), Real::of(Rat(1, static_cast<long>(ims[i])), prec)};
        auto p = kernels::moment_sinh(0, a, tau, prec);
        logres[i] = std::log(abs(p.quadrature - p.closed).to_double());
    }
    MomentSlopeResult r;
    r.slope = (logres[2] - logres[0]) / (ims[2] - ims[0]);
    r.expected = -3.14159265358979323846 / 16;
    r.ok = r.slope <= r.expected * 0.8 && r.slope >= r.expected * 1.2;
    return r;
}

struct ContourRateResult {
    int s = 0;
    double max_im_ratio = 0;
    double slope = 0, bound = 0;
    bool ok = false;
};

inline std::vector<ContourRateResult> contour_rate_scan(mpfr_prec_t prec = 224) {
    std::vector<ContourRateResult> out;
    const int k = 2;
    const double bound = (3.14159265358979323846 / 2) * std::sqrt(3.0 * k / 2.0);
    for (int s : {1, 2, 3}) {
        ContourRateResult r;
        r.s = s;
        r.bound = bound;
        double lnd[3], roots[3];
        int i = 0;
        for (long n : {25L, 100L, 400L}) {
            auto p = kernels::wright_contour(s, k, n, prec);
            double imr = (abs(p.contour.im) / abs(p.contour.re)).to_double();
            r.max_im_ratio = std::max(r.max_im_ratio, imr);
            lnd[i] = log(abs(p.contour - Complex::real(p.bessel))).to_double();
            roots[i] = std::sqrt(static_cast<double>(n));
            ++i;
        }
        double sx = roots[0] + roots[1] + roots[2];
        double sy = lnd[0] + lnd[1] + lnd[2];
        double sxx = roots[0] * roots[0] + roots[1] * roots[1] + roots[2] * roots[2];
        double sxy = roots[0] * lnd[0] + roots[1] * lnd[1] + roots[2] * lnd[2];
        r.slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
        r.ok = r.slope <= bound && r.max_im_ratio < 1e-20;
        out.push_back(r);
    }
    return out;
}

inline SuiteReport kernel_checks(mpfr_prec_t prec = 192) {
    SuiteReport rep;
    rep.name = "kernels";
    for (const auto& r : theta_order_scan(std::max<mpfr_prec_t>(prec, 256))) {
        std::ostringstream id, detail;
        id << "theta-order d=" << r.d.get_str() << " k=" << r.k << " z=" << (r.z_zero ? "0" : "1/(8k)")
           << " N=" << r.N;
        detail << "ratios " << r.ratio1 << ", " << r.ratio2 << " vs 2^" << (r.N + 1);
        rep.check(r.ok, id.str(), detail.str());
    }
    for (const auto& r : moment_closed_scan(prec)) {
        std::ostringstream id, detail;
        id << "moment-" << r.kind << " ell=" << r.ell;
        detail << "relative error " << r.rel_err;
        rep.check(r.ok, id.str(), detail.str());
    }
    {
        auto r = moment_residual_slope(prec);
        std::ostringstream detail;
        detail << "slope " << r.slope << " expected " << r.expected << " (within 20%)";
        rep.check(r.ok, "moment-residual-slope", detail.str());
    }
    for (const auto& r : contour_rate_scan(std::max<mpfr_prec_t>(prec, 224))) {
        std::ostringstream id, detail;
        id << "contour-rate s=" << r.s;
        detail << "slope " << r.slope << " <= " << r.bound << ", max |Im|/|Re| "
               << r.max_im_ratio;
        rep.check(r.ok, id.str(), detail.str());
    }
    return rep;
}

} // namespace unirank::verify

// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Tolerances and scales are pinned in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "unirank/unirank.hpp"

using namespace unirank;
using specfun::Rat;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
    int id;
    std::string title;
    bool pass = true;
    double seconds = 0;
    std::vector<std::string> notes;
};

std::vector<Result> results;

void report(Result r) { results.push_back(std::move(r)); }

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: worked-example totals -------------------------------------

void criterion1() {
    Result r{1, "worked-example totals from both routes (< 1 s)"};
    const auto t0 = Clock::now();
    struct Want {
        Family f;
        long n;
        long total;
    };
    for (auto [f, n, total] : {Want{Family::u, 4, 12}, Want{Family::w, 6, 11},
                               Want{Family::v, 4, 10}, Want{Family::nu, 5, 12}}) {
        QSeries s = genfun::sum_side(f, static_cast<int>(n));
        Int series_total = 0;
        for (const auto& [m, c] : s.at(static_cast<int>(n)).terms()) series_total += c;
        Int enum_total = enumeration::ranks(f, n).total();
        const bool ok = series_total == total && enum_total == total;
        if (!ok)
            r.notes.push_back(std::string(family_name(f)) + ": series " + series_total.get_str() +
                              ", enumerator " + enum_total.get_str() + ", want " +
                              std::to_string(total));
        r.pass = r.pass && ok;
    }
    r.seconds = elapsed(t0);
    r.pass = r.pass && r.seconds < 1.0;
    report(std::move(r));
}

// ---- criterion 2: oracle equivalence ------------------------------------------

void criterion2() {
    Result r{2, "enumeration oracle equals series coefficients, n <= 30 (< 2 min)"};
    const auto t0 = Clock::now();
    auto rep = verify::oracle(30);
    r.pass = rep.pass();
    for (const auto& f : rep.failures) r.notes.push_back(f.id + ": " + f.detail);
    r.seconds = elapsed(t0);
    r.pass = r.pass && r.seconds < 120.0;
    report(std::move(r));
}

// ---- criterion 3: identity suite ------------------------------------------------

void criterion3() {
    Result r{3, "two-sided identities at trunc 200, crank rewrite at 100 (< 5 min)"};
    const auto t0 = Clock::now();
    auto rep = verify::identities(200, 100);
    r.pass = rep.pass();
    for (const auto& f : rep.failures) r.notes.push_back(f.id + ": " + f.detail);
    r.seconds = elapsed(t0);
    r.pass = r.pass && r.seconds < 300.0;
    report(std::move(r));
}

// ---- criterion 4: symmetry -------------------------------------------------------

void criterion4() {
    Result r{4, "rank symmetry for all stored ranks, n <= 500 (< 10 min)"};
    const auto t0 = Clock::now();
    auto rep = verify::symmetry(500);
    r.pass = rep.pass();
    for (const auto& f : rep.failures) r.notes.push_back(f.id + ": " + f.detail);
    r.seconds = elapsed(t0);
    r.pass = r.pass && r.seconds < 600.0;
    report(std::move(r));
}

// ---- criterion 5: coefficient reproduction ---------------------------------------

void criterion5() {
    Result r{5, "expansion reproduces the stated three-term coefficient tables"};
    const auto t0 = Clock::now();
    using asym::PiPoly;
    using specfun::Quad;
    struct Entry {
        int index;
        Rat c_num;
        Rat c_m2;
        unsigned pi_pow;
        bool sqrt2;
    };
    struct Spec {
        Family f;
        int order;
        std::vector<Entry> rows;
    };
    // the stated tables: u {pi^2/2, pi^3/3, (59-36m^2)pi^4/72},
    // w {pi^3/3, 55pi^4/24, (1841-108m^2)pi^5/324},
    // v {pi^2/3, 4pi^3/27, (101-72m^2)pi^4/216},
    // nu {pi/(2sqrt2), 5pi^2/(8sqrt2), (77-64m^2)pi^3/(64sqrt2)}
    const std::vector<Spec> specs{
        {Family::u, 4,
         {{3, Rat(1, 2), Rat(0), 2, false},
          {4, Rat(1, 3), Rat(0), 3, false},
          {5, Rat(59, 72), Rat(-36, 72), 4, false}}},
        {Family::w, 5,
         {{4, Rat(1, 3), Rat(0), 3, false},
          {5, Rat(55, 24), Rat(0), 4, false},
          {6, Rat(1841, 324), Rat(-108, 324), 5, false}}},
        {Family::v, 4,
         {{3, Rat(1, 3), Rat(0), 2, false},
          {4, Rat(4, 27), Rat(0), 3, false},
          {5, Rat(101, 216), Rat(-72, 216), 4, false}}},
        {Family::nu, 3,
         {{2, Rat(1, 2), Rat(0), 1, true},
          {3, Rat(5, 8), Rat(0), 2, true},
          {4, Rat(77, 64), Rat(-64, 64), 3, true}}},
    };
    auto as_pipoly = [](const Entry& e, long m) {
        Rat v = e.c_num + e.c_m2 * Rat(m * m);
        if (!e.sqrt2) return PiPoly::of(v, e.pi_pow);
        // r/(sqrt2) = (r/2) sqrt2
        return PiPoly::of_quad(Quad(0, v / 2), e.pi_pow);
    };
    for (const auto& spec : specs) {
        bool fam_ok = true;
        std::vector<std::string> diffs;
        for (long m = 0; m <= 10; ++m) {
            auto got = asym::expansion_series(spec.f, m, spec.order);
            for (const auto& e : spec.rows) {
                const PiPoly want = as_pipoly(e, m);
                const PiPoly* have = got.coeff(e.index);
                const bool ok = want.is_zero() ? (have == nullptr) : (have && *have == want);
                if (!ok) {
                    fam_ok = false;
                    if (m == 0 || (m == 1 && e.c_m2 != 0))
                        diffs.push_back("index " + std::to_string(e.index) + " at m=" +
                                        std::to_string(m) + ": stated " + want.str() +
                                        ", computed " + (have ? have->str() : std::string("0")));
                }
            }
        }
        if (fam_ok) {
            r.notes.push_back(std::string(family_name(spec.f)) +
                              ": stated table reproduced exactly for m = 0..10");
        } else {
            for (const auto& d : diffs)
                r.notes.push_back(std::string(family_name(spec.f)) + ": " + d);
        }
        r.pass = r.pass && fam_ok;
    }
    r.seconds = elapsed(t0);
    report(std::move(r));
}

// ---- criterion 6: inequality onsets ------------------------------------------------

void criterion6() {
    Result r{6, "strict rank decrease: onset <= 1000, holds through 1500 (< 15 min)"};
    const auto t0 = Clock::now();
    for (Family f : all_families) {
        long worst = 0;
        long pairs = 0;
        bool ok = true;
        std::string bad;
        for (const auto& o : verify::inequality_onsets(f, 10, 1500)) {
            ++pairs;
            if (o.onset < 0) {
                ok = false;
                bad = "FAIL-AT-END at (j=" + std::to_string(o.lower_rank) +
                      ", m=" + std::to_string(o.higher_rank) + ")";
                break;
            }
            worst = std::max(worst, o.onset);
        }
        if (ok && worst > 1000) {
            ok = false;
            bad = "worst onset " + std::to_string(worst) + " > 1000";
        }
        r.notes.push_back(std::string(family_name(f)) + ": " +
                          (ok ? std::to_string(pairs) + " pairs, worst onset n0=" +
                                    std::to_string(worst)
                              : bad));
        r.pass = r.pass && ok;
    }
    r.seconds = elapsed(t0);
    r.pass = r.pass && r.seconds < 900.0;
    report(std::move(r));
}

// ---- criterion 7: asymptotic convergence -------------------------------------------

void criterion7() {
    Result r{7, "three-term gap decreasing over {100,400,900,1600}, slope -1.5 +/- 0.3"};
    const auto t0 = Clock::now();
    const mpfr_prec_t prec = 192;
    auto series = genfun::RankTable::instance().series(Family::u, 1600);
    const long grid[4] = {100, 400, 900, 1600};
    for (long m = 0; m <= 2; ++m) {
        auto main_terms = asym::main_term_series(Family::u, m);
        double gaps[4];
        for (int i = 0; i < 4; ++i) {
            const Int& exact = series->coeff(m, static_cast<int>(grid[i]));
            Real ln_exact = log_of(exact, prec);
            Real ln_asym = asym::eval_series(main_terms, grid[i], prec).ln(prec);
            gaps[i] = abs(Real::of(1L, prec) - exp(ln_asym - ln_exact)).to_double();
        }
        bool decreasing = gaps[0] > gaps[1] && gaps[1] > gaps[2] && gaps[2] > gaps[3];
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < 4; ++i) {
            const double x = std::log(static_cast<double>(grid[i]));
            const double y = std::log(gaps[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
        const bool slope_ok = slope >= -1.8 && slope <= -1.2;
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "m=%ld: gaps %.3e %.3e %.3e %.3e, log-log slope %.3f", m, gaps[0],
                      gaps[1], gaps[2], gaps[3], slope);
        r.notes.push_back(buf);
        r.pass = r.pass && decreasing && slope_ok;
    }
    r.seconds = elapsed(t0);
    report(std::move(r));
}

// ---- criterion 8: partial theta expansion order -------------------------------------

void criterion8() {
    Result r{8, "theta expansion error scales by 2^{-(N+1)} per halving (factor 1.5)"};
    const auto t0 = Clock::now();
    for (const auto& res : verify::theta_order_scan(256)) {
        if (!res.ok) {
            char buf[256];
            std::snprintf(buf, sizeof(buf), "d=%s k=%d z=%s N=%d: ratios %.3f, %.3f vs %d",
                          res.d.get_str().c_str(), res.k, res.z_zero ? "0" : "1/(8k)", res.N,
                          res.ratio1, res.ratio2, 1 << (res.N + 1));
            r.notes.push_back(buf);
            r.pass = false;
        }
    }
    r.seconds = elapsed(t0);
    report(std::move(r));
}

// ---- criterion 9: kernel closed forms ------------------------------------------------

void criterion9() {
    Result r{9, "moment quadrature vs closed form at 1e-6; residual slope -pi a within 20%"};
    const auto t0 = Clock::now();
    for (const auto& res : verify::moment_closed_scan(192)) {
        if (!res.ok) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "kernel %c ell=%d: relative error %.3e > 1e-6",
                          res.kind, res.ell, res.rel_err);
            r.notes.push_back(buf);
            r.pass = false;
        }
    }
    auto slope = verify::moment_residual_slope(192);
    if (!slope.ok) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "residual slope %.4f vs expected %.4f (+/- 20%%)",
                      slope.slope, slope.expected);
        r.notes.push_back(buf);
        r.pass = false;
    }
    r.seconds = elapsed(t0);
    report(std::move(r));
}

// ---- criterion 10: contour integral growth rate ---------------------------------------

void criterion10() {
    Result r{10, "contour-vs-bessel difference grows at rate <= (pi/2) sqrt(3k/2) sqrt(n)"};
    const auto t0 = Clock::now();
    for (const auto& res : verify::contour_rate_scan(224)) {
        char buf[200];
        std::snprintf(buf, sizeof(buf), "s=%d: slope %.4f (bound %.4f), max |Im|/|Re| %.2e",
                      res.s, res.slope, res.bound, res.max_im_ratio);
        r.notes.push_back(buf);
        r.pass = r.pass && res.ok;
    }
    r.seconds = elapsed(t0);
    report(std::move(r));
}

} // namespace

int main() {
    // the largest series first: later criteria reuse the cached builds
    std::printf("building series caches (u@1600, w/v/nu@1500)...\n");
    std::fflush(stdout);
    {
        const auto t0 = Clock::now();
        genfun::RankTable::instance().series(Family::u, 1600);
        genfun::RankTable::instance().series(Family::w, 1500);
        genfun::RankTable::instance().series(Family::v, 1500);
        genfun::RankTable::instance().series(Family::nu, 1500);
        std::printf("caches ready in %.1f s\n", elapsed(t0));
        std::fflush(stdout);
    }

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();

    int failures = 0;
    for (const auto& r : results) {
        std::printf("CRITERION %2d: %s  [%.1f s]  %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.seconds, r.title.c_str());
        for (const auto& n : r.notes) std::printf("              - %s\n", n.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}

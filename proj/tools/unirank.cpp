#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "unirank/unirank.hpp"

namespace {

using namespace unirank;
using specfun::Rat;

struct Options {
    std::string family = "u";
    long m_max = -1;
    long n_max = -1;
    long trunc = 500;
    long precision_bits = 192;
    std::string terms = "corollary";
    int order = -1;
    std::string format = "text";
    std::string out_path;
    int threads = 1;
};

void validate(const Options& o) {
    if (o.precision_bits < 64)
        throw CLI::ValidationError("--precision-bits", "precision must be >= 64 bits");
    if (o.trunc < 0) throw CLI::ValidationError("--trunc", "truncation must be >= 0");
    if (o.threads < 1) throw CLI::ValidationError("--threads", "thread count must be >= 1");
}

void write_output(const Options& o, const std::string& payload) {
    if (o.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(o.out_path);
    if (!out) throw std::runtime_error("cannot open output path " + o.out_path);
    out << payload;
}

std::string render(const Options& o, const io::Table& t) {
    if (o.format == "csv") return t.to_csv();
    if (o.format == "json") return t.to_json();
    return t.to_text();
}

// parallel map over row tasks with deterministic emission order
template <typename Task, typename Fn>
std::vector<std::vector<std::string>> run_rows(const std::vector<Task>& tasks, int threads,
                                               Fn&& fn) {
    std::vector<std::vector<std::string>> rows(tasks.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = fn(tasks[i]);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                rows[i] = fn(tasks[i]);
            }
        });
    }
    for (auto& th : pool) th.join();
    return rows;
}

std::string ln_string(const Real& v, long digits) { return v.str(static_cast<std::size_t>(digits)); }

long float_digits(const Options& o) {
    return static_cast<long>(static_cast<double>(o.precision_bits) * 0.3010) + 2;
}

asym::AsymSeries pick_series(const Options& o, Family f, long m) {
    if (o.terms == "corollary") return asym::main_term_series(f, m);
    if (o.terms == "theorem") {
        const int N = o.order > 0 ? o.order : asym::main_term_order(f);
        return asym::expansion_series(f, m, N);
    }
    throw CLI::ValidationError("--terms", "expected corollary or theorem");
}

int cmd_exact(const Options& o) {
    if (o.n_max < 0) throw CLI::ValidationError("--n-max", "empty n-range");
    validate(o);
    const Family f = family_from_name(o.family);
    genfun::RankTable::instance().set_limit(std::max(o.trunc, o.n_max) + 1);
    auto series = genfun::RankTable::instance().series(f, o.n_max);
    io::Table t;
    t.header = {"n", "m", "count"};
    for (long n = 0; n <= o.n_max; ++n) {
        const auto& poly = series->at(static_cast<int>(n));
        if (o.m_max < 0) {
            for (const auto& [m, c] : poly.terms())
                t.add_row({std::to_string(n), std::to_string(m), c.get_str()});
            if (poly.zero() && f == Family::nu)
                t.add_row({std::to_string(n), "0", "0"});
        } else {
            for (long m = -o.m_max; m <= o.m_max; ++m)
                t.add_row({std::to_string(n), std::to_string(m), poly.coeff(m).get_str()});
        }
    }
    write_output(o, render(o, t));
    return 0;
}

int cmd_asymptotic(const Options& o) {
    if (o.n_max < 1) throw CLI::ValidationError("--n-max", "empty n-range");
    validate(o);
    const Family f = family_from_name(o.family);
    const long mm = std::max<long>(o.m_max, 0);
    const long digits = float_digits(o);
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(o.precision_bits);

    struct Task {
        long n, m;
    };
    std::vector<Task> tasks;
    for (long n = 1; n <= o.n_max; ++n)
        for (long m = 0; m <= mm; ++m) tasks.push_back({n, m});
    auto rows = run_rows(tasks, o.threads, [&](const Task& task) -> std::vector<std::string> {
        auto series = pick_series(o, f, task.m);
        auto v = asym::eval_series(series, task.n, prec);
        std::string ln = "nan";
        if (v.mantissa.sign() > 0) ln = ln_string(v.ln(prec), digits);
        return {std::to_string(task.n), std::to_string(task.m), ln};
    });
    io::Table t;
    t.header = {"n", "m", "ln_asym"};
    for (auto& r : rows) t.add_row(std::move(r));
    write_output(o, render(o, t));
    return 0;
}

int cmd_compare(const Options& o) {
    if (o.n_max < 1) throw CLI::ValidationError("--n-max", "empty n-range");
    validate(o);
    const Family f = family_from_name(o.family);
    const long mm = std::max<long>(o.m_max, 0);
    const long digits = float_digits(o);
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(o.precision_bits);
    genfun::RankTable::instance().set_limit(std::max(o.trunc, o.n_max) + 1);
    auto series = genfun::RankTable::instance().series(f, o.n_max);

    struct Task {
        long n, m;
    };
    std::vector<Task> tasks;
    for (long n = 1; n <= o.n_max; ++n)
        for (long m = -mm; m <= mm; ++m) tasks.push_back({n, m});
    auto rows = run_rows(tasks, o.threads, [&](const Task& task) -> std::vector<std::string> {
        const Int& count = series->coeff(task.m, static_cast<int>(task.n));
        auto asym_series = pick_series(o, f, std::labs(task.m));
        auto v = asym::eval_series(asym_series, task.n, prec);
        std::string ln_exact = "-inf", ln_asym = "nan", gap = "inf";
        if (count > 0) ln_exact = ln_string(log_of(count, prec), digits);
        if (v.mantissa.sign() > 0) ln_asym = ln_string(v.ln(prec), digits);
        if (count > 0 && v.mantissa.sign() > 0) {
            Real g = abs(Real::of(1L, prec) - exp(v.ln(prec) - log_of(count, prec)));
            gap = ln_string(g, digits);
        }
        return {std::to_string(task.n), std::to_string(task.m), ln_exact, ln_asym, gap};
    });
    io::Table t;
    t.header = {"n", "m", "ln_exact", "ln_asym", "rel_gap"};
    for (auto& r : rows) t.add_row(std::move(r));
    write_output(o, render(o, t));
    return 0;
}

std::string failures_json(const verify::SuiteReport& rep) {
    std::string out = "[";
    for (std::size_t i = 0; i < rep.failures.size(); ++i) {
        out += (i ? "," : "");
        out += "{\"id\":\"" + rep.failures[i].id + "\",\"detail\":\"" + rep.failures[i].detail +
               "\"}";
    }
    out += "]";
    return out;
}

int emit_reports(const Options& o, const std::vector<verify::SuiteReport>& reps) {
    std::ostringstream os;
    bool all_pass = true;
    if (o.format == "json") {
        os << "[";
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const auto& rep = reps[i];
            all_pass = all_pass && rep.pass();
            os << (i ? ",\n" : "\n") << " {\"suite\":\"" << rep.name << "\",\"pass\":"
               << (rep.pass() ? "true" : "false") << ",\"failures\":" << failures_json(rep)
               << "}";
        }
        os << "\n]\n";
    } else {
        for (const auto& rep : reps) {
            all_pass = all_pass && rep.pass();
            os << "== suite " << rep.name << " ==\n";
            for (const auto& line : rep.lines) os << "  " << line << "\n";
            os << (rep.pass() ? "PASS" : "FAIL") << " " << rep.name << "\n";
            if (!rep.pass()) os << "failures: " << failures_json(rep) << "\n";
        }
    }
    write_output(o, os.str());
    return all_pass ? 0 : 1;
}

int cmd_verify(const Options& o, const std::string& suite, bool trunc_given, bool n_given) {
    validate(o);
    genfun::RankTable::instance().set_limit(std::max<long>({o.trunc, o.n_max, 1500}) + 1);
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(o.precision_bits);
    std::vector<verify::SuiteReport> reps;
    const long m_max = o.m_max < 0 ? 10 : o.m_max;
    if (suite == "identities" || suite == "all")
        reps.push_back(verify::identities(trunc_given ? static_cast<int>(o.trunc) : 200, 100));
    if (suite == "symmetry" || suite == "all")
        reps.push_back(verify::symmetry(n_given ? o.n_max : 500));
    if (suite == "oracle" || suite == "all")
        reps.push_back(verify::oracle(n_given ? std::min<long>(o.n_max, 40) : 30));
    if (suite == "inequalities" || suite == "all")
        reps.push_back(verify::inequalities(m_max, 1000, n_given ? o.n_max : 1500));
    if (suite == "kernels" || suite == "all") reps.push_back(verify::kernel_checks(prec));
    if (suite == "coefficients" || suite == "all") reps.push_back(verify::coefficients(m_max));
    if (reps.empty())
        throw CLI::ValidationError("suite", "expected one of identities, symmetry, oracle, "
                                            "inequalities, kernels, coefficients, all");
    return emit_reports(o, reps);
}

int cmd_kernels(const Options& o, const std::string& check) {
    validate(o);
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(o.precision_bits);
    io::Table t;
    bool all_ok = true;
    if (check == "theta") {
        t.header = {"d", "k", "z", "N", "ratio_step1", "ratio_step2", "target", "ok"};
        for (const auto& r : verify::theta_order_scan(std::max<mpfr_prec_t>(prec, 256))) {
            all_ok = all_ok && r.ok;
            t.add_row({r.d.get_str(), std::to_string(r.k), r.z_zero ? "0" : "1/(8k)",
                       std::to_string(r.N), std::to_string(r.ratio1), std::to_string(r.ratio2),
                       std::to_string(1 << (r.N + 1)), r.ok ? "yes" : "no"});
        }
    } else if (check == "moments") {
        t.header = {"kernel", "ell", "rel_err", "ok"};
        for (const auto& r : verify::moment_closed_scan(prec)) {
            all_ok = all_ok && r.ok;
            t.add_row({std::string(1, r.kind), std::to_string(r.ell), std::to_string(r.rel_err),
                       r.ok ? "yes" : "no"});
        }
        auto s = verify::moment_residual_slope(prec);
        all_ok = all_ok && s.ok;
        t.add_row({"slope", "-", std::to_string(s.slope) + " vs " + std::to_string(s.expected),
                   s.ok ? "yes" : "no"});
    } else if (check == "wright") {
        t.header = {"s", "slope", "bound", "max_im_ratio", "ok"};
        for (const auto& r : verify::contour_rate_scan(std::max<mpfr_prec_t>(prec, 224))) {
            all_ok = all_ok && r.ok;
            t.add_row({std::to_string(r.s), std::to_string(r.slope), std::to_string(r.bound),
                       std::to_string(r.max_im_ratio), r.ok ? "yes" : "no"});
        }
    } else if (check == "all") {
        auto rep = verify::kernel_checks(prec);
        return emit_reports(o, {rep});
    } else {
        throw CLI::ValidationError("check", "expected one of theta, moments, wright, all");
    }
    write_output(o, render(o, t));
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    if (const char* env = std::getenv("UNIRANK_PRECISION_BITS")) {
        o.precision_bits = std::strtol(env, nullptr, 10);
        if (o.precision_bits <= 0) o.precision_bits = 192;
    }

    CLI::App app{"exact and asymptotic rank statistics of unimodal sequences"};
    app.fallthrough(true);
    app.set_config("--config", "", "key=value configuration file");
    app.add_option("--family", o.family, "family: u, w, v or nu")->capture_default_str();
    app.add_option("--m-max", o.m_max, "largest |rank| to emit (default: all stored)");
    auto* n_opt = app.add_option("--n-max", o.n_max, "largest weight n");
    auto* trunc_opt =
        app.add_option("--trunc", o.trunc, "series truncation order")->capture_default_str();
    app.add_option("--precision-bits", o.precision_bits, "working precision in bits (>= 64)")
        ->capture_default_str();
    app.add_option("--terms", o.terms, "asymptotic series: corollary or theorem")
        ->capture_default_str();
    app.add_option("--N", o.order, "expansion order for --terms theorem");
    app.add_option("--format", o.format, "output format: csv, json or text")
        ->capture_default_str();
    app.add_option("--out", o.out_path, "write output to this path instead of stdout");
    app.add_option("--threads", o.threads, "worker threads for row evaluation")
        ->capture_default_str();

    auto* exact = app.add_subcommand("exact", "exact rank counts from the generating function");
    auto* asymptotic = app.add_subcommand("asymptotic", "asymptotic main-term evaluations");
    auto* compare = app.add_subcommand("compare", "exact vs asymptotic in log space");
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd->add_option("suite", suite, "identities, symmetry, oracle, inequalities, kernels, coefficients or all")
        ->required();
    auto* kernels_cmd = app.add_subcommand("kernels", "numeric kernel checks");
    std::string check;
    kernels_cmd->add_option("check", check, "theta, moments, wright or all")->required();
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
        if (exact->parsed()) return cmd_exact(o);
        if (asymptotic->parsed()) return cmd_asymptotic(o);
        if (compare->parsed()) return cmd_compare(o);
        if (verify_cmd->parsed())
            return cmd_verify(o, suite, trunc_opt->count() > 0, n_opt->count() > 0);
        if (kernels_cmd->parsed()) return cmd_kernels(o, check);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

// lplab: analyze series membership criteria, compute partial-theta section
// thresholds, and run the randomized verification suites.
//
// Exit codes: 0 completed (verdict content does not affect the code),
// 1 verification-suite failure, 2 malformed input, 3 numerical refusal.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lplab/report.hpp"
#include "lplab/rng.hpp"

namespace {

using namespace lplab;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOpts {
    std::string input;
    std::string family;
    double a = 0.0;
    bool has_a = false;
    std::vector<double> q;
    std::vector<double> coeffs;
    int degree = 64;
    std::string output = "json";
};

int cmd_analyze(const AnalyzeOpts& opt) {
    SeriesSpec spec;
    const bool inline_source = !opt.family.empty() || !opt.q.empty() || !opt.coeffs.empty();
    if (!opt.input.empty()) {
        if (inline_source) {
            throw InvalidInput("input: cannot combine --input with inline series flags");
        }
        spec = load_series_spec(opt.input);
    } else {
        if (!opt.family.empty()) spec.family = opt.family;
        if (opt.has_a) spec.a = opt.a;
        if (!opt.q.empty()) spec.q = opt.q;
        if (!opt.coeffs.empty()) spec.coeffs = opt.coeffs;
        spec.degree = opt.degree;
        validate_series_spec(spec);
    }

    CoefficientSeries s = build_series(spec);
    QuotientSequence quot = quotients_from_coeffs(s);
    std::vector<CriterionVerdict> verdicts = full_report(s);

    const int deg_used = std::min(s.degree(), 40);
    std::vector<double> trunc(s.coeffs.begin(), s.coeffs.begin() + deg_used + 1);
    RootReport roots = poly_roots(trunc);

    ordered_json rep = report_skeleton();
    rep["spec"] = to_json(spec);
    rep["quotients"] = to_json(quot);
    ordered_json varr = ordered_json::array();
    for (const auto& v : verdicts) varr.push_back(to_json(v));
    rep["verdicts"] = std::move(varr);
    rep["roots"] = to_json(roots);
    rep["timestamp"] = iso8601_utc_now();

    if (opt.output == "table") {
        std::printf("# a0=%s a1=%s q2=%s\n", fmt(quot.a0).c_str(), fmt(quot.a1).c_str(),
                    quot.max_index() >= 2 ? fmt(quot.q_at(2)).c_str() : "n/a");
        for (const auto& v : verdicts) {
            std::printf("%-24s %-13s %s\n", v.criterion.c_str(), status_name(v.status),
                        v.note.c_str());
        }
        std::printf("%-24s %-13s degree %d truncation\n", "root-verdict",
                    verdict_name(roots.verdict), deg_used);
    } else {
        std::printf("%s\n", rep.dump(2).c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

int cmd_theta(int n_max, double tol, const std::string& output) {
    if (n_max < 2) throw InvalidInput("n-max: must be >= 2");
    if (!(tol > 0.0)) throw InvalidInput("tol: must be > 0");

    ThetaThresholds t;
    if (n_max >= 5) {
        t = q_inf_bracket(n_max, tol);
    } else {
        // too few strands for an enclosure: report the cutoffs alone
        t.n_max = n_max;
        t.tol = tol;
        for (int n = 2; n <= n_max; ++n) t.c[n] = threshold_c(n, tol);
        for (const auto& [n, cn] : t.c) {
            if (n % 2 == 0) t.q_inf_high = (t.q_inf_high == 0.0) ? cn : std::min(t.q_inf_high, cn);
            else t.q_inf_low = std::max(t.q_inf_low, cn);
        }
    }

    if (output == "table") {
        for (const auto& [n, cn] : t.c) std::printf("%d\t%.12f\n", n, cn);
        std::printf("# bracket\t%.12f\t%.12f\n", t.q_inf_low, t.q_inf_high);
    } else {
        ordered_json rep = report_skeleton();
        rep["theta"] = to_json(t);
        rep["timestamp"] = iso8601_utc_now();
        std::printf("%s\n", rep.dump(2).c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify-lemmas
// ---------------------------------------------------------------------------

// Quartic minimum-modulus suite: for admissible (a, b, c) the minimum of
// |1 - z + z^2/a - z^3/(a^2 b) + z^4/(a^3 b^2 c)| over |z| = a is at least
// a/(b^2 c).
SuiteResult suite_circle_minimum(Pcg64& rng, std::optional<double> inject_a) {
    SuiteResult res;
    res.name = "circle-minimum";
    res.worst_margin = std::numeric_limits<double>::infinity();
    const double tol = 1e-10;

    auto run_one = [&](double a, double b, double c) {
        std::vector<double> p = {1.0, -1.0, 1.0 / a, -1.0 / (a * a * b),
                                 1.0 / (a * a * a * b * b * c)};
        CircleMin cm = min_modulus_on_circle(p, a);
        const double bound = a / (b * b * c);
        const double margin = cm.value - bound;
        res.worst_margin = std::min(res.worst_margin, margin);
        ++res.trials;
        if (margin < -tol) {
            ++res.failures;
            if (res.counterexample.empty()) {
                res.counterexample = "a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(c) +
                                     " min=" + fmt(cm.value) + " bound=" + fmt(bound);
            }
        }
    };

    if (inject_a) {
        const double a = *inject_a;
        if (!(a >= 3.0 && a < 4.0)) {
            ++res.skipped;
            res.note = "domain violation: a=" + fmt(a) +
                       " outside [3, 4); trial skipped, not counted as a failure";
        } else {
            run_one(a, a + 3.0 * rng.uniform(), 4.0 / 3.0 + 3.0 * rng.uniform());
        }
    }
    for (int t = 0; t < 1000; ++t) {
        const double a = 3.0 + rng.uniform();
        const double b = a + 3.0 * rng.uniform();
        const double c = 4.0 / 3.0 + 3.0 * rng.uniform();
        run_one(a, b, c);
    }
    return res;
}

// Tail-bound suite: the maximum of the degree >= 5 remainder of the
// alternating series on |z| = q2 never exceeds the closed-form bound.
SuiteResult suite_tail_bound(Pcg64& rng) {
    SuiteResult res;
    res.name = "tail-bound";
    res.worst_margin = std::numeric_limits<double>::infinity();
    const double tol = 1e-10;
    const int contour_samples = 2048;
    const double two_pi = 6.283185307179586476925286766559;

    for (int t = 0; t < 500; ++t) {
        std::vector<double> qs(59);
        for (double& qi : qs) qi = 1.5 + 4.5 * rng.uniform(); // q_2 .. q_60
        CoefficientSeries s = coeffs_from_quotients(1.0, 1.0, qs);
        const double q2 = qs[0], q3 = qs[1], q4 = qs[2], q5 = qs[3], q6 = qs[4];
        TailBound tb = tail_bound_lm2(q2, q3, q4, q5, q6);

        // alternating coefficients, truncated at degree 60 or the
        // materialization wall (the omitted tail is ~1e-280 at most)
        const int deg = std::min(60, s.degree());
        double max_r5 = 0.0;
        for (int j = 0; j < contour_samples; ++j) {
            const std::complex<double> z = std::polar(q2, two_pi * j / contour_samples);
            std::complex<double> acc(0.0, 0.0);
            for (int k = deg; k >= 5; --k) {
                const double ck = (k % 2 == 0) ? s.coeffs[static_cast<std::size_t>(k)]
                                               : -s.coeffs[static_cast<std::size_t>(k)];
                acc = acc * z + ck;
            }
            acc *= z * z * z * z * z;
            max_r5 = std::max(max_r5, std::abs(acc));
        }
        const double margin = tb.bound - max_r5;
        res.worst_margin = std::min(res.worst_margin, margin);
        ++res.trials;
        if (margin < -tol) {
            ++res.failures;
            if (res.counterexample.empty()) {
                res.counterexample = "q2=" + fmt(q2) + " q3=" + fmt(q3) + " q4=" + fmt(q4) +
                                     " q5=" + fmt(q5) + " q6=" + fmt(q6) +
                                     " max=" + fmt(max_r5) + " bound=" + fmt(tb.bound) +
                                     " gate_margin=" + fmt(tb.gate_margin);
            }
        }
    }
    return res;
}

// Apolarity suite: the constructed quartic has residual ~0 and the degree-4
// section keeps a root inside |z| <= q2.
SuiteResult suite_apolar(Pcg64& rng) {
    SuiteResult res;
    res.name = "apolar-quartic";
    res.worst_margin = std::numeric_limits<double>::infinity();

    for (int i = 0; i <= 10; ++i) {
        const double q2 = 3.0 + 0.1 * i;
        const double q3 = 1.5 + 4.5 * rng.uniform();
        const double q4 = 1.5 + 4.5 * rng.uniform();
        ApolarQuartic ap = apolar_quartic(q2, q3, q4);

        std::vector<double> s4 = {1.0, -1.0, 1.0 / q2, -1.0 / (q2 * q2 * q3),
                                  1.0 / (q2 * q2 * q2 * q3 * q3 * q4)};
        RootReport rr = poly_roots(s4);
        double min_mod = std::numeric_limits<double>::infinity();
        for (const auto& z : rr.roots) min_mod = std::min(min_mod, std::abs(z));

        const double enclosure_margin = (q2 + 1e-8) - min_mod;
        const double residual_margin = 1e-12 - ap.apolarity_residual;
        const double margin = std::min(enclosure_margin, residual_margin);
        res.worst_margin = std::min(res.worst_margin, margin);
        ++res.trials;
        if (margin < 0.0) {
            ++res.failures;
            if (res.counterexample.empty()) {
                res.counterexample = "q2=" + fmt(q2) + " q3=" + fmt(q3) + " q4=" + fmt(q4) +
                                     " min_root_mod=" + fmt(min_mod) +
                                     " residual=" + fmt(ap.apolarity_residual);
            }
        }
    }
    return res;
}

// Bound-chain suite: 3 <= sharp bound <= 3/(4 - q2) across [3, 4).
SuiteResult suite_bound_chain(Pcg64& rng) {
    SuiteResult res;
    res.name = "bound-chain";
    res.worst_margin = std::numeric_limits<double>::infinity();
    const double tol = 1e-12;

    for (int t = 0; t < 1000; ++t) {
        const double q2 = 3.0 + rng.uniform();
        Theorem2Bound b = thm2_bound(q2);
        const double margin = std::min(b.bound - 3.0, b.remark_bound - b.bound);
        res.worst_margin = std::min(res.worst_margin, margin);
        ++res.trials;
        if (margin < -tol) {
            ++res.failures;
            if (res.counterexample.empty()) {
                res.counterexample = "q2=" + fmt(q2) + " bound=" + fmt(b.bound) +
                                     " remark_bound=" + fmt(b.remark_bound);
            }
        }
    }
    return res;
}

int cmd_verify_lemmas(std::uint64_t seed, std::optional<double> lm1_a,
                      const std::string& output) {
    Pcg64 rng(seed);
    std::vector<SuiteResult> suites;
    suites.push_back(suite_circle_minimum(rng, lm1_a));
    suites.push_back(suite_tail_bound(rng));
    suites.push_back(suite_apolar(rng));
    suites.push_back(suite_bound_chain(rng));

    int total_failures = 0;
    for (const auto& s : suites) total_failures += s.failures;

    if (output == "table") {
        for (const auto& s : suites) {
            std::printf("%-16s trials=%-5d failures=%-3d skipped=%-2d worst_margin=%s\n",
                        s.name.c_str(), s.trials, s.failures, s.skipped,
                        fmt(s.worst_margin).c_str());
        }
    } else {
        ordered_json rep = report_skeleton();
        ordered_json arr = ordered_json::array();
        for (const auto& s : suites) arr.push_back(to_json(s));
        rep["suites"] = std::move(arr);
        rep["rng"] = {{"name", kRngName}, {"seed", seed}};
        rep["timestamp"] = iso8601_utc_now();
        std::printf("%s\n", rep.dump(2).c_str());
    }
    for (const auto& s : suites) {
        if (s.failures > 0) {
            std::fprintf(stderr, "suite %s: %d failure(s), first counterexample: %s\n",
                         s.name.c_str(), s.failures, s.counterexample.c_str());
        }
    }
    return total_failures > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Membership criteria, section thresholds and verification "
                 "suites for entire series with positive coefficients"};
    app.set_version_flag("--version", std::string(lplab::kVersion));
    app.require_subcommand(1);

    AnalyzeOpts aopt;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Run every membership criterion on a series");
    analyze->add_option("--input", aopt.input, "Path to a series-spec JSON document");
    analyze->add_option("--family", aopt.family,
                        "Series family: exponential | partial-theta | euler-like");
    auto* a_opt = analyze->add_option("--a", aopt.a, "Family parameter a (> 1)");
    analyze->add_option("--q", aopt.q, "Second quotients q_2, q_3, ...")->delimiter(',');
    analyze->add_option("--coeffs", aopt.coeffs, "Coefficients a_0, a_1, ...")->delimiter(',');
    analyze->add_option("--degree", aopt.degree, "Materialization degree for families")
        ->default_val(64);
    analyze->add_option("--output", aopt.output, "json | table")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "table"}));

    int n_max = 8;
    double tol = 1e-10;
    std::string theta_output = "json";
    CLI::App* theta = app.add_subcommand(
        "theta", "Section thresholds and the limit enclosure");
    theta->add_option("--n-max", n_max, "Largest section degree")->default_val(8);
    theta->add_option("--tol", tol, "Bisection width per threshold")->default_val(1e-10);
    theta->add_option("--output", theta_output, "json | table")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "table"}));

    std::uint64_t seed = 42;
    double lm1_a = 0.0;
    std::string verify_output = "json";
    CLI::App* verify = app.add_subcommand(
        "verify-lemmas", "Randomized property suites for the core inequalities");
    verify->add_option("--seed", seed, "Seed for the suite sampler")->default_val(42);
    auto* lm1_a_opt = verify->add_option(
        "--lm1-a", lm1_a, "Inject one circle-minimum trial at this a (domain-checked)");
    verify->add_option("--output", verify_output, "json | table")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    aopt.has_a = a_opt->count() > 0;
    try {
        if (analyze->parsed()) return cmd_analyze(aopt);
        if (theta->parsed()) return cmd_theta(n_max, tol, theta_output);
        if (verify->parsed()) {
            std::optional<double> inject;
            if (lm1_a_opt->count() > 0) inject = lm1_a;
            return cmd_verify_lemmas(seed, inject, verify_output);
        }
    } catch (const lplab::NumericRefusal& e) {
        std::fprintf(stderr, "numerical refusal: %s\n", e.what());
        return 3;
    } catch (const lplab::InvalidInput& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}

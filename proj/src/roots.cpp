#include "lplab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace lplab {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Scale-safe polynomial evaluation.
//
// Coefficient magnitudes can span hundreds of decades (steeply decaying
// series sections) and roots can sit at |z| ~ 1e12, so z^n must never be
// formed directly. For |z| > 1 everything is evaluated through the reversed
// polynomial at w = 1/z:
//   P(z) = z^n Pr(w),   Pr(w) = sum c_{n-j} w^j
//   P'(z) = n z^{n-1} Pr(w) - z^{n-2} Pr'(w)
// which keeps every intermediate within range and yields log|P| and arg P
// without overflow.
// ---------------------------------------------------------------------------

void horner_pd(const std::vector<cplx>& c, cplx z, cplx& p, cplx& dp) {
    const std::size_t n = c.size() - 1;
    p = c[n];
    dp = cplx(0.0, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
}

struct LogVal {
    double log_abs; // log|P(z)|, -inf at an exact zero
    double arg;     // argument of P(z), any branch
};

LogVal eval_logval(const std::vector<cplx>& c, cplx z) {
    const std::size_t n = c.size() - 1;
    const double az = std::abs(z);
    if (az <= 1.0) {
        cplx p, dp;
        horner_pd(c, z, p, dp);
        return {std::log(std::abs(p)), std::arg(p)};
    }
    cplx w = cplx(1.0, 0.0) / z;
    // Pr(w) = c0 w^n + c1 w^{n-1} + ... + cn, evaluated by Horner
    cplx pr = c[0];
    for (std::size_t j = 1; j <= n; ++j) pr = pr * w + c[j];
    return {static_cast<double>(n) * std::log(az) + std::log(std::abs(pr)),
            static_cast<double>(n) * std::arg(z) + std::arg(pr)};
}

// Newton correction P(z)/P'(z) plus log|P(z)|.
cplx newton_ratio(const std::vector<cplx>& c, cplx z, double& log_abs) {
    const std::size_t n = c.size() - 1;
    if (std::abs(z) <= 1.0) {
        cplx p, dp;
        horner_pd(c, z, p, dp);
        log_abs = std::log(std::abs(p));
        if (p == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
        if (dp == cplx(0.0, 0.0)) return cplx(0.0, 0.0); // stationary: caller nudges
        return p / dp;
    }
    // reversed-polynomial branch: Pr(w) = c0 w^n + ... + cn and Pr'(w)
    cplx w = cplx(1.0, 0.0) / z;
    cplx pr = c[0], dpr(0.0, 0.0);
    for (std::size_t j = 1; j <= n; ++j) {
        dpr = dpr * w + pr;
        pr = pr * w + c[j];
    }
    log_abs = static_cast<double>(n) * std::log(std::abs(z)) + std::log(std::abs(pr));
    cplx denom = static_cast<double>(n) * pr - w * dpr;
    if (pr == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
    if (denom == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
    return z * pr / denom;
}

// ---------------------------------------------------------------------------
// Newton-polygon initial guesses: upper convex hull of (k, log2|c_k|). Each
// hull edge from k1 to k2 contributes k2-k1 start points whose radius is the
// edge's root-modulus estimate; angles are offset roots of unity indexed
// globally so no start lies on the real axis.
// ---------------------------------------------------------------------------

std::vector<cplx> initial_guesses(const std::vector<cplx>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    struct Pt { double x, y; };
    std::vector<Pt> pts;
    pts.reserve(c.size());
    for (int k = 0; k <= n; ++k) {
        double m = std::abs(c[static_cast<std::size_t>(k)]);
        if (m > 0.0) pts.push_back({static_cast<double>(k), std::log2(m)});
    }
    auto cross = [](const Pt& a, const Pt& b, const Pt& p) {
        return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    };
    std::vector<Pt> hull;
    for (const Pt& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
            hull.pop_back();
        hull.push_back(p);
    }
    std::vector<cplx> z;
    z.reserve(static_cast<std::size_t>(n));
    int j = 0;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const double dk = hull[e + 1].x - hull[e].x;
        const double slope = (hull[e + 1].y - hull[e].y) / dk;
        const double radius = std::exp2(-slope);
        const int count = static_cast<int>(dk + 0.5);
        for (int m = 0; m < count; ++m, ++j) {
            double theta = (4.0 * j + 1.0) * kPi / (2.0 * n);
            z.push_back(std::polar(radius, theta));
        }
    }
    // Zero coefficients inside the hull cannot reduce the start count (hull
    // endpoints are the lowest and highest nonzero coefficients), but guard
    // anyway: pad with unit-circle starts if anything is missing.
    while (static_cast<int>(z.size()) < n) {
        double theta = (4.0 * static_cast<double>(z.size()) + 1.0) * kPi / (2.0 * n);
        z.push_back(std::polar(1.0, theta));
    }
    return z;
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich simultaneous iteration (Gauss-Seidel sweeps, deterministic
// order). Returns true when every root froze, i.e. its relative step fell
// below tol.
// ---------------------------------------------------------------------------

bool aberth(const std::vector<cplx>& c, std::vector<cplx>& z,
            int max_sweeps = 200, double tol = 1e-13) {
    const std::size_t n = z.size();
    // No sticky per-root freezing: a root can take one coincidentally small
    // step while its neighbors are still moving (an inflated correction
    // denominator does exactly that) and would then be stuck at a wrong
    // point. Convergence means a full sweep where every step is small.
    //
    // Ill-conditioned roots stop improving at the rounding-noise floor of
    // the Newton ratio, which can sit well above tol (the degree-40
    // exponential section stalls near 1e-8 relative). Accept stagnation:
    // once the sweep maximum stops shrinking while already small, further
    // sweeps only bounce inside the noise band, and the residual
    // certificate downstream is the actual accuracy gate.
    double best = kInf;
    int stalled = 0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double max_rel = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double log_abs;
            cplx w = newton_ratio(c, z[i], log_abs);
            if (log_abs == -kInf) continue; // sits on an exact zero
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i) continue;
                cplx d = z[i] - z[k];
                if (d == cplx(0.0, 0.0)) d = cplx(1e-30, 1e-30); // coincident iterates
                s += cplx(1.0, 0.0) / d;
            }
            cplx denom = cplx(1.0, 0.0) - w * s;
            cplx step = (denom == cplx(0.0, 0.0)) ? w : w / denom;
            // trust region: never jump further than the current scale
            double cap = 1.0 + std::abs(z[i]);
            double as = std::abs(step);
            if (as > cap) step *= cap / as;
            z[i] -= step;
            max_rel = std::max(max_rel, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (max_rel <= tol) return true;
        if (max_rel < 0.5 * best) {
            best = max_rel;
            stalled = 0;
        } else if (max_rel <= 1e-6) {
            if (++stalled >= 10) return true;
        } else {
            stalled = 0;
        }
    }
    return false;
}

// Companion-matrix eigenvalues, usable only when the monic ratios stay finite.
bool companion_roots(const std::vector<cplx>& c, std::vector<cplx>& out) {
    const int n = static_cast<int>(c.size()) - 1;
    const cplx lead = c[static_cast<std::size_t>(n)];
    std::vector<cplx> monic(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        cplx m = c[static_cast<std::size_t>(k)] / lead;
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) return false;
        monic[static_cast<std::size_t>(k)] = m;
    }
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success) return false;
    out.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    // polish each eigenvalue with a few Newton steps
    for (auto& zi : out) {
        for (int it = 0; it < 3; ++it) {
            double log_abs;
            cplx w = newton_ratio(c, zi, log_abs);
            if (log_abs == -kInf) break;
            double cap = 1.0 + std::abs(zi);
            if (std::abs(w) > cap) break;
            zi -= w;
        }
    }
    return true;
}

void solve_deg1(const std::vector<cplx>& c, std::vector<cplx>& out) {
    out.assign(1, -c[0] / c[1]);
}

void solve_deg2(const std::vector<cplx>& c, std::vector<cplx>& out) {
    const cplx a = c[2], b = c[1], c0 = c[0];
    // all-real fast path with exact double-root handling
    if (b.imag() == 0.0 && a.imag() == 0.0 && c0.imag() == 0.0) {
        double ra = a.real(), rb = b.real(), rc = c0.real();
        double disc = rb * rb - 4.0 * ra * rc;
        if (disc == 0.0) {
            double r = -rb / (2.0 * ra);
            out.assign(2, cplx(r, 0.0));
            return;
        }
        if (disc > 0.0) {
            double sq = std::sqrt(disc);
            double qq = -0.5 * (rb + std::copysign(sq, rb));
            if (qq == 0.0) { // rb == 0, rc < 0
                double r = std::sqrt(-rc / ra);
                out = {cplx(-r, 0.0), cplx(r, 0.0)};
                return;
            }
            out = {cplx(qq / ra, 0.0), cplx(rc / qq, 0.0)};
            return;
        }
        double re = -rb / (2.0 * ra);
        double im = std::sqrt(-disc) / (2.0 * ra);
        out = {cplx(re, -im), cplx(re, im)};
        return;
    }
    cplx disc = b * b - 4.0 * a * c0;
    cplx sq = std::sqrt(disc);
    if (std::real(std::conj(b) * sq) < 0.0) sq = -sq;
    cplx qq = -0.5 * (b + sq);
    if (qq == cplx(0.0, 0.0)) {
        out.assign(2, cplx(0.0, 0.0));
        out[1] = -b / a;
        return;
    }
    out = {qq / a, c0 / qq};
}

RootReport finish_report(const std::vector<cplx>& scaled_coeffs, double log_rescale,
                         std::vector<cplx> roots, int zero_roots, double im_tol,
                         bool converged) {
    RootReport rep;
    rep.im_tol = im_tol;
    rep.converged = converged;
    for (int i = 0; i < zero_roots; ++i) roots.push_back(cplx(0.0, 0.0));
    std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    rep.roots = std::move(roots);

    const std::size_t n_all = rep.roots.size();
    double coeff_scale = 0.0;
    for (const cplx& ck : scaled_coeffs) coeff_scale = std::max(coeff_scale, std::abs(ck));
    const double log_coeff_scale = std::log(coeff_scale);

    bool residual_ok = true;
    rep.residuals.reserve(n_all);
    const std::size_t deg_deflated = scaled_coeffs.size() - 1;
    for (const cplx& z : rep.roots) {
        double log_abs;
        if (z == cplx(0.0, 0.0)) {
            // exact deflated zero of the original polynomial
            rep.residuals.push_back(0.0);
            continue;
        }
        (void)newton_ratio(scaled_coeffs, z, log_abs);
        double log_res = log_abs + log_rescale;
        double bound = std::log(1e-8) + log_coeff_scale + log_rescale +
                       static_cast<double>(deg_deflated) * std::log1p(std::abs(z));
        if (!(log_res <= bound)) residual_ok = false;
        double r = std::exp(log_res);
        rep.residuals.push_back(std::isfinite(r) ? r : std::numeric_limits<double>::max());
    }

    rep.scale = 0.0;
    for (const cplx& z : rep.roots) rep.scale = std::max(rep.scale, std::abs(z));

    rep.min_separation = kInf;
    for (std::size_t i = 0; i < n_all; ++i) {
        for (std::size_t j = i + 1; j < n_all; ++j) {
            double d = std::abs(rep.roots[i] - rep.roots[j]);
            double s = std::max({1.0, std::abs(rep.roots[i]), std::abs(rep.roots[j])});
            rep.min_separation = std::min(rep.min_separation, d / s);
        }
    }
    rep.simple = rep.min_separation > 1e-6;

    if (!converged || !residual_ok) {
        rep.verdict = RootVerdict::Uncertain;
        return rep;
    }
    int n_real = 0, n_nonreal = 0;
    bool all_negative = true;
    for (const cplx& z : rep.roots) {
        bool is_real = std::abs(z.imag()) <= im_tol * std::max(1.0, std::abs(z));
        if (is_real) {
            ++n_real;
            if (!(z.real() < 0.0)) all_negative = false;
        } else {
            ++n_nonreal;
        }
    }
    if (n_nonreal == 0) {
        rep.verdict = all_negative ? RootVerdict::AllRealNegative : RootVerdict::AllReal;
    } else {
        rep.verdict = (n_real > 0) ? RootVerdict::Mixed : RootVerdict::ComplexPresent;
    }
    return rep;
}

RootReport poly_roots_impl(std::vector<cplx> c, double im_tol) {
    while (c.size() > 1 && c.back() == cplx(0.0, 0.0)) c.pop_back();
    if (c.size() < 2) throw InvalidInput("poly_roots: degree must be >= 1");

    int zero_roots = 0;
    while (c.front() == cplx(0.0, 0.0)) {
        c.erase(c.begin());
        ++zero_roots;
        if (c.size() == 1) { // P(z) = const * z^m
            return finish_report({cplx(1.0, 0.0)}, 0.0, {}, zero_roots, im_tol, true);
        }
    }

    // exact power-of-two rescale so max|c| lands in [1, 2)
    double maxc = 0.0;
    for (const cplx& ck : c) maxc = std::max(maxc, std::abs(ck));
    int e = 0;
    (void)std::frexp(maxc, &e);
    const double rescale = std::ldexp(1.0, 1 - e);
    for (cplx& ck : c) ck *= rescale;
    const double log_rescale = -std::log(rescale);

    const std::size_t deg = c.size() - 1;
    std::vector<cplx> roots;
    bool converged = true;
    if (deg == 1) {
        solve_deg1(c, roots);
    } else if (deg == 2) {
        solve_deg2(c, roots);
    } else {
        roots = initial_guesses(c);
        converged = aberth(c, roots);
    }
    RootReport rep = finish_report(c, log_rescale, std::move(roots), zero_roots, im_tol, converged);
    if (deg >= 3 && rep.verdict == RootVerdict::Uncertain) {
        // Aberth stalled, or its iterates failed the residual certificate.
        // Retry from companion-matrix eigenvalues when the monic ratios stay
        // finite; keep the retry only if it actually certifies (or if the
        // first pass never converged at all, so there is nothing to keep).
        std::vector<cplx> fb;
        if (companion_roots(c, fb)) {
            RootReport alt =
                finish_report(c, log_rescale, std::move(fb), zero_roots, im_tol, true);
            if (alt.verdict != RootVerdict::Uncertain || !rep.converged) rep = std::move(alt);
        }
    }
    return rep;
}

} // namespace

const char* verdict_name(RootVerdict v) {
    switch (v) {
        case RootVerdict::AllRealNegative: return "all-real-negative";
        case RootVerdict::AllReal: return "all-real";
        case RootVerdict::Mixed: return "mixed";
        case RootVerdict::ComplexPresent: return "complex-present";
        case RootVerdict::Uncertain: return "uncertain";
    }
    return "unknown";
}

RootReport poly_roots(const std::vector<double>& coeffs, double im_tol) {
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    return poly_roots_impl(std::move(c), im_tol);
}

RootReport poly_roots(const std::vector<std::complex<double>>& coeffs, double im_tol) {
    return poly_roots_impl(coeffs, im_tol);
}

RootReport is_real_rooted(const std::vector<double>& coeffs, double im_tol) {
    return poly_roots(coeffs, im_tol);
}

// ---------------------------------------------------------------------------
// Argument-principle disk counting.
// ---------------------------------------------------------------------------

namespace {

double wrap_angle(double d) { return std::remainder(d, 2.0 * kPi); }

struct ContourEval {
    const std::vector<cplx>* c;
    double radius;

    LogVal at(double theta) const {
        return eval_logval(*c, std::polar(radius, theta));
    }
};

} // namespace

DiskCount count_zeros_in_disk(const std::vector<double>& coeffs, double radius,
                              int initial_samples) {
    if (!(radius > 0.0)) throw InvalidInput("count_zeros_in_disk: radius must be > 0");
    if (coeffs.empty()) throw InvalidInput("count_zeros_in_disk: empty polynomial");
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    while (c.size() > 1 && c.back() == cplx(0.0, 0.0)) c.pop_back();

    DiskCount out;
    out.radius = radius;
    if (c.size() == 1) { // constant, no zeros anywhere
        out.count = 0;
        out.winding_samples = 0;
        out.min_modulus_on_contour = std::abs(c[0]);
        if (out.min_modulus_on_contour == 0.0)
            throw InvalidInput("count_zeros_in_disk: identically zero polynomial");
        return out;
    }

    const std::size_t n = c.size() - 1;
    // evaluation error bound on the contour, in log form:
    //   err <= 2(n+2) * u * sum |c_k| R^k
    double log_r = std::log(radius);
    double m_max = -kInf;
    std::vector<double> mk(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        double a = std::abs(c[k]);
        mk[k] = (a == 0.0) ? -kInf : std::log(a) + static_cast<double>(k) * log_r;
        m_max = std::max(m_max, mk[k]);
    }
    double sum_exp = 0.0;
    for (double m : mk) if (m != -kInf) sum_exp += std::exp(m - m_max);
    const double log_sum = m_max + std::log(sum_exp);
    const double log_err = std::log(2.0 * (static_cast<double>(n) + 2.0) * 0x1.0p-53) + log_sum;

    ContourEval ev{&c, radius};

    const int n0 = std::max(initial_samples, 16);
    std::vector<double> thetas(static_cast<std::size_t>(n0) + 1);
    std::vector<LogVal> vals(static_cast<std::size_t>(n0) + 1);
    for (int i = 0; i <= n0; ++i) {
        thetas[static_cast<std::size_t>(i)] = 2.0 * kPi * i / n0;
        vals[static_cast<std::size_t>(i)] = ev.at(thetas[static_cast<std::size_t>(i)]);
    }
    vals[static_cast<std::size_t>(n0)] = vals[0]; // identical point, stitch phases below

    long samples = n0;
    double min_log = kInf;
    for (int i = 0; i < n0; ++i) min_log = std::min(min_log, vals[static_cast<std::size_t>(i)].log_abs);

    double winding = 0.0;
    // The closing sample equals the first, but its *analytic* argument gained
    // n * 2pi from the z^n prefactor in the reversed-form evaluation; handle
    // segments uniformly by the wrapped local increment instead.
    struct Seg { double ta, tb; LogVal va, vb; int depth; };
    std::vector<Seg> stack;
    for (int i = n0; i-- > 0;) {
        stack.push_back({thetas[static_cast<std::size_t>(i)], thetas[static_cast<std::size_t>(i + 1)],
                         vals[static_cast<std::size_t>(i)], vals[static_cast<std::size_t>(i + 1)], 0});
    }
    const int max_depth = 26;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        double d = wrap_angle(s.vb.arg - s.va.arg);
        if (std::abs(d) < kPi / 2.0) {
            winding += d;
            continue;
        }
        if (s.depth >= max_depth) {
            throw NumericRefusal("count_zeros_in_disk: phase step never settled below pi/2; "
                                 "contour likely passes through a zero");
        }
        double tm = 0.5 * (s.ta + s.tb);
        LogVal vm = ev.at(tm);
        ++samples;
        min_log = std::min(min_log, vm.log_abs);
        stack.push_back({tm, s.tb, vm, s.vb, s.depth + 1});
        stack.push_back({s.ta, tm, s.va, vm, s.depth + 1});
    }

    if (!(min_log > std::log(10.0) + log_err)) {
        throw NumericRefusal("count_zeros_in_disk: contour min modulus within 10x of the "
                             "evaluation error; perturb the radius");
    }

    double turns = winding / (2.0 * kPi);
    long count = std::lround(turns);
    if (std::abs(turns - static_cast<double>(count)) > 0.05) {
        throw NumericRefusal("count_zeros_in_disk: winding sum is not close to an integer");
    }
    out.count = count;
    out.winding_samples = samples;
    double mm = std::exp(min_log);
    out.min_modulus_on_contour = std::isfinite(mm) ? mm : std::numeric_limits<double>::max();
    return out;
}

DiskCount count_zeros_in_disk(const CoefficientSeries& s, double radius,
                              int eval_degree, int initial_samples) {
    if (eval_degree < 1) throw InvalidInput("count_zeros_in_disk: eval_degree must be >= 1");
    int deg = std::min(eval_degree, s.degree());
    std::vector<double> phi(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        double a = s.coeffs[static_cast<std::size_t>(k)];
        phi[static_cast<std::size_t>(k)] = (k % 2 == 0) ? a : -a;
    }
    return count_zeros_in_disk(phi, radius, initial_samples);
}

// ---------------------------------------------------------------------------
// Minimum modulus on a circle.
// ---------------------------------------------------------------------------

CircleMin min_modulus_on_circle(const std::vector<double>& coeffs, double radius,
                                int grid) {
    if (coeffs.size() < 2) throw InvalidInput("min_modulus_on_circle: degree must be >= 1");
    if (!(radius > 0.0)) throw InvalidInput("min_modulus_on_circle: radius must be > 0");
    if (grid < 8) throw InvalidInput("min_modulus_on_circle: grid too small");
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    while (c.size() > 1 && c.back() == cplx(0.0, 0.0)) c.pop_back();

    auto g = [&](double theta) { return eval_logval(c, std::polar(radius, theta)).log_abs; };

    int best = 0;
    double best_val = kInf;
    std::vector<double> cache(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        double v = g(2.0 * kPi * i / grid);
        cache[static_cast<std::size_t>(i)] = v;
        if (v < best_val) { best_val = v; best = i; }
    }
    // golden-section refinement on the two cells around the best sample
    double a = 2.0 * kPi * (best - 1) / grid;
    double b = 2.0 * kPi * (best + 1) / grid;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = g(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = g(x2);
        }
    }
    double theta = 0.5 * (a + b);
    double vlog = std::min(std::min(f1, f2), best_val);
    // canonicalize for real coefficients: |P| is even in theta
    theta = std::fmod(theta + 2.0 * kPi, 2.0 * kPi);
    if (theta > kPi) theta = 2.0 * kPi - theta;
    double v = std::exp(vlog);
    return {theta, std::isfinite(v) ? v : std::numeric_limits<double>::max()};
}

// ---------------------------------------------------------------------------
// Certified sign scan on a segment.
// ---------------------------------------------------------------------------

namespace {

struct CertEval {
    const CoefficientSeries* s;
    Precision mode;

    // value and one-sided certainty band (truncation + rounding)
    std::pair<double, double> at(double x) const {
        EvalResult r = evaluate(*s, x, 1e-13, mode);
        if (!r.certified) {
            throw NumericRefusal("sign_scan_segment: uncertain evaluation at x=" +
                                 std::to_string(x));
        }
        return {r.value, r.tail_estimate};
    }

    bool nonpositive(double x) const {
        auto [v, band] = at(x);
        return v + band <= 0.0;
    }
};

} // namespace

std::optional<SegmentWitness> sign_scan_segment(const CoefficientSeries& s,
                                                double lo, double hi, int grid,
                                                Precision mode) {
    if (!(lo < hi)) throw InvalidInput("sign_scan_segment: need lo < hi");
    if (grid < 2) throw InvalidInput("sign_scan_segment: grid too small");
    CertEval ev{&s, mode};

    // Hutchinson candidate: in normalized coordinates the witness for
    // q2 >= 4 is -sqrt(q2); in original coordinates -(a0/a1) sqrt(q2).
    if (s.degree() >= 2) {
        QuotientSequence q = quotients_from_coeffs(s);
        double q2 = q.q_at(2);
        double cand = -(q.a0 / q.a1) * std::sqrt(q2);
        if (cand >= lo && cand <= hi) {
            auto [v, band] = ev.at(cand);
            if (v + band <= 0.0) return SegmentWitness{cand, v, false};
        }
    }

    const double h = (hi - lo) / grid;
    const bool from_hi = std::abs(hi) <= std::abs(lo);
    double prev_x = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= grid; ++i) {
        double x = from_hi ? hi - i * h : lo + i * h;
        if (i == grid) x = from_hi ? lo : hi; // avoid rounding drift at the far end
        auto [v, band] = ev.at(x);
        if (v + band <= 0.0) {
            if (!have_prev) return SegmentWitness{x, v, false};
            // refine the boundary of certified nonpositivity toward prev_x
            double neg = x, pos = prev_x;
            while (std::abs(neg - pos) > 1e-12 * std::max(1.0, std::abs(neg))) {
                double mid = 0.5 * (neg + pos);
                if (ev.nonpositive(mid)) neg = mid;
                else pos = mid;
            }
            auto [vr, band_r] = ev.at(neg);
            (void)band_r;
            return SegmentWitness{neg, vr, true};
        }
        prev_x = x;
        have_prev = true;
    }
    return std::nullopt;
}

} // namespace lplab

#include "lplab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lplab/roots.hpp"

namespace lplab {

namespace {

constexpr double kEqualityTol = 1e-12; // |q_m - m/(m-1)| at the exponential case

void put(CriterionVerdict& v, const std::string& key, double val) {
    v.computed.emplace_back(key, val);
}

} // namespace

const char* status_name(CriterionStatus s) {
    switch (s) {
        case CriterionStatus::Holds: return "holds";
        case CriterionStatus::Fails: return "fails";
        case CriterionStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

CriterionVerdict newton_check(const QuotientSequence& q) {
    CriterionVerdict v;
    v.criterion = "newton-inequality";
    const int n_max = q.max_index();
    if (n_max < 2) throw InvalidInput("newton_check: need quotients from index 2");

    double min_margin = std::numeric_limits<double>::infinity();
    int argmin = 2;
    int equality_at = 0;
    int equality_count = 0;
    for (int n = 2; n <= n_max; ++n) {
        const double floor_n = static_cast<double>(n) / (n - 1);
        const double margin = q.q_at(n) - floor_n;
        if (margin < min_margin) {
            min_margin = margin;
            argmin = n;
        }
        if (std::abs(margin) <= kEqualityTol) {
            ++equality_count;
            if (equality_at == 0) equality_at = n;
        }
    }
    put(v, "min_margin", min_margin);
    put(v, "min_margin_at", static_cast<double>(argmin));
    put(v, "window", static_cast<double>(n_max - 1));
    put(v, "equality_count", static_cast<double>(equality_count));

    // Margins inside the equality band count as attained equalities, not
    // violations: exact-equality families land a few ulps on either side.
    if (min_margin >= -kEqualityTol) {
        v.status = CriterionStatus::Holds;
        v.note = "necessary: q_n >= n/(n-1) on the materialized window";
        if (equality_count > 0) {
            v.witness = static_cast<double>(equality_at);
            v.note += "; equality attained at n=" + std::to_string(equality_at) +
                      ", which forces c*exp(alpha*z) for a member";
        }
    } else {
        v.status = CriterionStatus::Fails;
        v.witness = static_cast<double>(argmin);
        v.note = "necessary: q_" + std::to_string(argmin) +
                 " falls below n/(n-1); not in the class";
    }
    return v;
}

CriterionVerdict lemma_q2q3_check(double q2, double q3) {
    if (!(q2 > 0.0) || !(q3 > 0.0)) throw InvalidInput("lemma_q2q3_check: q2, q3 must be > 0");
    CriterionVerdict v;
    v.criterion = "q2q3-necessary";
    const double margin = q3 * (q2 - 4.0) + 3.0;
    put(v, "margin", margin);
    v.status = margin >= 0.0 ? CriterionStatus::Holds : CriterionStatus::Fails;
    v.note = margin >= 0.0 ? "necessary: q3(q2-4)+3 >= 0"
                           : "necessary: q3(q2-4)+3 < 0; not in the class";
    // Corollary consistency: margin >= 0 together with q3 >= q2 pins q2 to
    // (0,1] or [3,inf); with q2 > 1 that means q2 >= 3. Pure algebra, so a
    // violation beyond rounding slack indicates a computation bug.
    if (margin >= 0.0 && q3 >= q2 && q2 > 1.0) {
        put(v, "corollary_q2_minus_3", q2 - 3.0);
        if (q2 < 3.0 - 1e-9) {
            v.status = CriterionStatus::Inconclusive;
            v.note = "internal consistency check failed: margin >= 0, q3 >= q2, q2 > 1 "
                     "but q2 < 3";
        }
    }
    return v;
}

CriterionVerdict hutchinson_check(const QuotientSequence& q) {
    CriterionVerdict v;
    v.criterion = "hutchinson-threshold";
    const int n_max = q.max_index();
    if (n_max < 2) throw InvalidInput("hutchinson_check: need quotients from index 2");

    double min_margin = std::numeric_limits<double>::infinity();
    int argmin = 2;
    for (int n = 2; n <= n_max; ++n) {
        const double margin = q.q_at(n) - 4.0;
        if (margin < min_margin) {
            min_margin = margin;
            argmin = n;
        }
    }
    put(v, "min_margin", min_margin);
    put(v, "min_margin_at", static_cast<double>(argmin));
    put(v, "window", static_cast<double>(n_max - 1));
    if (min_margin >= 0.0) {
        v.status = CriterionStatus::Holds;
        v.note = "sufficient: q_n >= 4 everywhere; all sections are real-rooted with "
                 "simple negative zeros (verify downstream via root reports)";
    } else {
        v.status = CriterionStatus::Fails;
        v.witness = static_cast<double>(argmin);
        v.note = "sufficient condition not met at n=" + std::to_string(argmin) +
                 " (this alone decides nothing about membership)";
    }
    return v;
}

CriterionVerdict monotone_classify(const QuotientSequence& q,
                                   std::optional<double> limit_hint, double q_inf) {
    CriterionVerdict v;
    v.criterion = "quotient-monotonicity";
    if (q.q.size() < 3) throw InvalidInput("monotone_classify: need at least q_2, q_3, q_4");

    bool weakly_decreasing = true;
    bool weakly_increasing = true;
    for (std::size_t i = 1; i < q.q.size(); ++i) {
        const double slack = 1e-12 * std::max(1.0, std::abs(q.q[i - 1]));
        if (q.q[i] > q.q[i - 1] + slack) weakly_decreasing = false;
        if (q.q[i] < q.q[i - 1] - slack) weakly_increasing = false;
    }
    // constant sequences count as decreasing (the membership-side rule)
    const int direction = weakly_decreasing ? -1 : (weakly_increasing ? +1 : 0);
    const double limit = limit_hint.value_or(q.q.back());

    put(v, "window", static_cast<double>(q.q.size()));
    put(v, "direction", static_cast<double>(direction));
    put(v, "limit", limit);
    put(v, "q_inf", q_inf);
    put(v, "limit_minus_q_inf", limit - q_inf);

    if (direction == -1 && limit >= q_inf) {
        v.status = CriterionStatus::Holds;
        v.note = "classifier: quotients weakly decreasing with limit >= the section "
                 "threshold limit; in the class";
    } else if (direction == +1 && !weakly_decreasing && limit < q_inf) {
        v.status = CriterionStatus::Fails;
        v.note = "classifier: quotients weakly increasing with limit below the section "
                 "threshold limit; not in the class";
    } else {
        v.status = CriterionStatus::Inconclusive;
        v.note = "classifier hypotheses unmet on the materialized window";
    }
    return v;
}

CriterionVerdict thm1_zero_segment_check(const CoefficientSeries& s) {
    CriterionVerdict v;
    v.criterion = "zero-segment";
    QuotientSequence q = quotients_from_coeffs(s);
    if (q.max_index() < 3) {
        v.status = CriterionStatus::Inconclusive;
        v.note = "needs q_2 and q_3 (degree >= 3)";
        return v;
    }
    const double q2 = q.q_at(2);
    const double q3 = q.q_at(3);
    put(v, "q2", q2);
    put(v, "q3", q3);
    if (!(q2 <= q3)) {
        v.status = CriterionStatus::Inconclusive;
        v.note = "hypothesis q2 <= q3 not satisfied; no scan";
        return v;
    }

    CoefficientSeries g = normalize(s);
    const int grid = 1024;
    std::optional<SegmentWitness> w = sign_scan_segment(g, -q2, 0.0, grid);
    put(v, "scan_grid", static_cast<double>(grid));
    if (w) {
        v.status = CriterionStatus::Holds;
        v.witness = w->x0;
        put(v, "x0_normalized", w->x0);
        put(v, "z0_original", (q.a0 / q.a1) * w->x0);
        put(v, "value", w->value);
        v.note = "necessary: certified nonpositive value inside [-a1/a2, 0] "
                 "(normalized segment [-q2, 0])";
        return v;
    }
    // No certified nonpositive point: report the least certified upper value
    // seen on a sweep as a (negative) margin.
    double min_upper = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 256; ++i) {
        const double x = -q2 + (q2 * i) / 256.0;
        EvalResult r = evaluate(g, x, 1e-13);
        min_upper = std::min(min_upper, r.value + r.tail_estimate);
    }
    put(v, "margin", -min_upper);
    v.status = CriterionStatus::Fails;
    v.note = "necessary condition for membership numerically violated: no certified "
             "nonpositive value found at grid resolution";
    return v;
}

Theorem2Bound thm2_bound(double q2) {
    if (!(q2 >= 3.0) || !(q2 < 4.0)) {
        throw InvalidInput("thm2_bound: requires 3 <= q2 < 4 (got " + std::to_string(q2) + ")");
    }
    Theorem2Bound b;
    b.q2 = q2;
    b.bound = (-q2 * (2.0 * q2 - 9.0) + 2.0 * (q2 - 3.0) * std::sqrt(q2 * (q2 - 3.0))) /
              (q2 * (4.0 - q2));
    b.remark_bound = 3.0 / (4.0 - q2);
    return b;
}

CriterionVerdict thm2_check(double q2, double q3) {
    CriterionVerdict v;
    v.criterion = "q3-bound-from-q2";
    put(v, "q2", q2);
    put(v, "q3", q3);
    if (!(q2 >= 3.0)) {
        v.status = CriterionStatus::Inconclusive;
        v.note = "q2 < 3: outside the proved domain (a member with q3 >= q2 cannot "
                 "be here anyway)";
        return v;
    }
    if (!(q2 < 4.0)) {
        v.status = CriterionStatus::Inconclusive;
        v.note = "q2 >= 4: bound formula undefined (denominator changes sign)";
        return v;
    }
    Theorem2Bound b = thm2_bound(q2);
    const double margin = b.bound - q3;
    put(v, "bound", b.bound);
    put(v, "remark_bound", b.remark_bound);
    put(v, "margin", margin);
    if (margin >= 0.0) {
        v.status = CriterionStatus::Holds;
        v.note = "necessary (under q2 < 4, q2 <= q3): q3 within the sharp bound";
    } else {
        v.status = CriterionStatus::Fails;
        v.note = "necessary: q3 exceeds the sharp bound; not in the class under "
                 "q2 < 4, q2 <= q3";
    }
    return v;
}

CriterionVerdict thm3_check(double q2, double q3, double q4) {
    CriterionVerdict v;
    v.criterion = "witness-sufficiency";
    put(v, "q2", q2);
    put(v, "q3", q3);
    put(v, "q4", q4);
    if (!(q2 >= 3.0 && q2 < 4.0 && q3 >= 2.0 && q4 >= 3.0)) {
        v.status = CriterionStatus::Inconclusive;
        v.note = "hypothesis gate 3 <= q2 < 4, q3 >= 2, q4 >= 3 not satisfied";
        return v;
    }
    const double d = std::min(q2, q4);
    const double threshold = 8.0 / (d * (4.0 - d));
    const double margin = threshold - q3;
    put(v, "d", d);
    put(v, "threshold", threshold);
    put(v, "margin", margin);
    if (margin >= 0.0) {
        v.status = CriterionStatus::Holds;
        v.note = "sufficient: a point z0 in [-a1/a2, 0] with f(z0) <= 0 exists; "
                 "confirm with the zero-segment scan";
    } else {
        v.status = CriterionStatus::Inconclusive;
        v.note = "sufficient condition not met; no conclusion about a witness";
    }
    return v;
}

TailBound tail_bound_lm2(double q2, double q3, double q4, double q5, double q6) {
    for (double qi : {q2, q3, q4, q5, q6}) {
        if (!(qi > 1.0)) throw InvalidInput("tail_bound_lm2: all quotients must be > 1");
    }
    // denominator q3^3 q4^2 q5 q6 - q3^2 q4 factored to avoid cancellation
    const double prod = q3 * q4 * q5 * q6;
    const double denom = (q3 * q3 * q4) * (prod - 1.0);
    if (!(denom > 0.0)) throw InvalidInput("tail_bound_lm2: nonpositive denominator");
    TailBound t;
    t.bound = (q2 * q6) / denom;
    t.gate_margin = prod - (q6 + 1.0);
    return t;
}

ApolarQuartic apolar_quartic(double q2, double q3, double q4) {
    if (!(q2 >= 3.0)) throw InvalidInput("apolar_quartic: requires q2 >= 3");
    if (!(q3 > 1.0) || !(q4 > 1.0)) throw InvalidInput("apolar_quartic: q3, q4 must be > 1");
    ApolarQuartic out;
    const double b3 = (q2 - 6.0) / 2.0;
    const double b2 = -q2 * (1.0 + (q2 - 6.0) / 2.0);
    out.roots = {std::complex<double>(0.0, 0.0), std::complex<double>(0.0, 0.0),
                 std::complex<double>(q2, 0.0), std::complex<double>(-3.0 * (q2 - 4.0), 0.0)};

    // Bilinear apolarity sum between the degree-4 alternating section, written
    // in binomial-normalized form, and the constructed quartic. Only the b2
    // and b3 slots survive (b0 = b1 = 0), but the full five-term sum is formed
    // so the check stays honest if the construction changes.
    const double a[5] = {1.0, -0.25, 1.0 / (6.0 * q2), -1.0 / (4.0 * q2 * q2 * q3),
                         1.0 / (q2 * q2 * q2 * q3 * q3 * q4)};
    const double b[5] = {0.0, 0.0, b2, b3, 1.0};
    const double binom[5] = {1.0, 4.0, 6.0, 4.0, 1.0};
    double sum = 0.0, scale = 0.0;
    for (int k = 0; k <= 4; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double term = sign * binom[k] * a[k] * b[4 - k];
        sum += term;
        scale += std::abs(term);
    }
    out.apolarity_residual = (scale > 0.0) ? std::abs(sum) / scale : std::abs(sum);
    return out;
}

std::vector<CriterionVerdict> full_report(const CoefficientSeries& s,
                                          std::optional<double> q_inf) {
    if (s.degree() < 6) {
        throw InvalidInput("full_report: degree >= 6 required (tail bound needs q_2..q_6)");
    }
    const QuotientSequence q = quotients_from_coeffs(s);
    const double q2 = q.q_at(2), q3 = q.q_at(3), q4 = q.q_at(4);
    const double q5 = q.q_at(5), q6 = q.q_at(6);
    const double qi = q_inf.value_or(kQInfFallback);

    std::optional<double> limit_hint;
    switch (s.family) {
        case Family::PartialTheta: limit_hint = s.param * s.param; break;
        case Family::EulerLike: limit_hint = s.param; break;
        case Family::Exponential: limit_hint = 1.0; break;
        default: break;
    }

    std::vector<CriterionVerdict> out;
    auto guarded = [&out](const std::string& name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            CriterionVerdict v;
            v.criterion = name;
            v.status = CriterionStatus::Inconclusive;
            v.note = std::string("error: ") + e.what();
            out.push_back(std::move(v));
        }
    };

    guarded("newton-inequality", [&] { return newton_check(q); });
    guarded("q2q3-necessary", [&] { return lemma_q2q3_check(q2, q3); });
    guarded("hutchinson-threshold", [&] { return hutchinson_check(q); });
    guarded("quotient-monotonicity", [&] { return monotone_classify(q, limit_hint, qi); });
    guarded("zero-segment", [&] { return thm1_zero_segment_check(s); });
    guarded("q3-bound-from-q2", [&] { return thm2_check(q2, q3); });
    guarded("witness-sufficiency", [&] { return thm3_check(q2, q3, q4); });

    guarded("tail-bound", [&] {
        CriterionVerdict v;
        v.criterion = "tail-bound";
        TailBound t = tail_bound_lm2(q2, q3, q4, q5, q6);
        const double strict_margin = q2 / (q3 * q3 * q4) - t.bound;
        put(v, "bound", t.bound);
        put(v, "gate_margin", t.gate_margin);
        put(v, "strict_margin", strict_margin);
        if (t.gate_margin > 0.0) {
            v.status = CriterionStatus::Holds;
            v.note = "diagnostic: tail of the alternating series on |z| = q2 stays below "
                     "the section's fourth coefficient term, so zero counts transfer "
                     "between the series and its degree-4 section";
        } else {
            v.status = CriterionStatus::Fails;
            v.note = "diagnostic: transfer gate q3 q4 q5 q6 > q6 + 1 not satisfied";
        }
        return v;
    });

    guarded("apolar-quartic", [&] {
        CriterionVerdict v;
        v.criterion = "apolar-quartic";
        if (!(q2 >= 3.0)) {
            v.status = CriterionStatus::Inconclusive;
            v.note = "requires q2 >= 3 for the root-enclosure argument";
            return v;
        }
        ApolarQuartic ap = apolar_quartic(q2, q3, q4);
        const double z4 = ap.roots[3].real();
        const double max_mod = std::max(q2, std::abs(z4));
        put(v, "residual", ap.apolarity_residual);
        put(v, "z3", q2);
        put(v, "z4", z4);
        put(v, "max_root_modulus", max_mod);
        put(v, "enclosure_margin", q2 - max_mod);
        v.status = (ap.apolarity_residual <= 1e-12 && max_mod <= q2)
                       ? CriterionStatus::Holds
                       : CriterionStatus::Fails;
        v.note = "diagnostic: the constructed quartic pairs with the degree-4 section "
                 "and keeps all roots inside |z| <= q2, forcing the section to have a "
                 "zero there";
        return v;
    });

    guarded("section-roots", [&] {
        CriterionVerdict v;
        v.criterion = "section-roots";
        const int deg_used = std::min(s.degree(), 40);
        std::vector<double> c(s.coeffs.begin(), s.coeffs.begin() + deg_used + 1);
        RootReport r = poly_roots(c);
        put(v, "degree", static_cast<double>(deg_used));
        put(v, "min_separation", r.min_separation);
        long nonreal = 0;
        for (const auto& z : r.roots) {
            if (std::abs(z.imag()) > r.im_tol * std::max(1.0, std::abs(z))) ++nonreal;
        }
        put(v, "nonreal_count", static_cast<double>(nonreal));
        put(v, "margin", -static_cast<double>(nonreal));
        if (r.verdict == RootVerdict::Uncertain) {
            v.status = CriterionStatus::Inconclusive;
            v.note = "classifier: root verdict uncertain at this truncation";
        } else if (r.verdict == RootVerdict::AllRealNegative) {
            v.status = CriterionStatus::Holds;
            v.note = "classifier: the truncated section is real-rooted with negative "
                     "zeros (truncation-scale evidence only)";
        } else {
            v.status = CriterionStatus::Fails;
            v.note = "classifier: the truncated section has non-real zeros (sections of "
                     "a member need not be real-rooted; truncation-scale evidence only)";
        }
        return v;
    });

    return out;
}

} // namespace lplab

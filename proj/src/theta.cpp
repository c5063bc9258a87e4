#include "lplab/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lplab {

namespace {

// Normalized partial-theta section in the beta = a^2 variable:
//   S_n(x) = sum_{k=0}^n t_k,  t_0 = 1,  t_{k+1} = t_k * x * beta^{-k}.
// The normalized coefficients beta^{-k(k-1)/2} stay representable far beyond
// the section degrees used here, so the recurrence needs no rescaling.
struct SectionEval {
    int n;
    double beta;

    // value, derivative and their rounding bands at x
    void at(double x, double& v, double& band, double& dv, double& dband) const {
        double t = 1.0, pw = 1.0;
        double sum = t, abs_sum = std::abs(t);
        double dsum = 0.0, dabs_sum = 0.0;
        for (int k = 0; k < n; ++k) {
            t *= x * pw;
            pw /= beta;
            sum += t;
            abs_sum += std::abs(t);
            // d/dx of t_k(x) = k t_k / x
            const double dt = (x != 0.0) ? (k + 1) * t / x : 0.0;
            dsum += dt;
            dabs_sum += std::abs(dt);
        }
        const double u = 0x1.0p-53;
        v = sum;
        band = 4.0 * (n + 2) * u * abs_sum;
        dv = dsum;
        dband = 4.0 * (n + 2) * u * dabs_sum;
    }

    double value(double x) const {
        double v, band, dv, dband;
        at(x, v, band, dv, dband);
        return v;
    }
};

// Witness predicate for one section on the normalized interval [-beta, -1]:
// any certified nonpositive value counts; an endpoint value that is zero up
// to rounding counts only if the section decreases into the interval.
bool section_witness_beta(int n, double beta) {
    SectionEval sec{n, beta};
    const int grid = 2048;
    const double lo = -beta, hi = -1.0;
    const double h = (hi - lo) / grid;

    double best_v = std::numeric_limits<double>::infinity();
    int best_i = -1;
    for (int i = 0; i <= grid; ++i) {
        const double x = (i == grid) ? hi : lo + i * h;
        double v, band, dv, dband;
        sec.at(x, v, band, dv, dband);
        if (v + band <= 0.0) return true;
        if (i == 0 || i == grid) {
            if (std::abs(v) <= band) {
                // inward direction: +1 at the left endpoint, -1 at the right
                const double inward = (i == 0) ? dv : -dv;
                if (inward < -dband) return true;
            }
        }
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    if (best_i <= 0 || best_i >= grid) return false; // interior minimum only

    // golden-section refinement of the interior minimum
    double a = lo + (best_i - 1) * h;
    double b = lo + (best_i + 1) * h;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = sec.value(x1), f2 = sec.value(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-12 * std::max(1.0, std::abs(a)); ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = sec.value(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = sec.value(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    double v, band, dv, dband;
    sec.at(xm, v, band, dv, dband);
    return v + band <= 0.0;
}

} // namespace

bool section_has_witness(int n, double a) {
    if (n < 2) throw InvalidInput("section_has_witness: n must be >= 2");
    if (!(a > 1.0)) throw InvalidInput("section_has_witness: a must be > 1");
    return section_witness_beta(n, a * a);
}

double threshold_c(int n, double tol) {
    if (n < 2) throw InvalidInput("threshold_c: n must be >= 2");
    if (!(tol >= 1e-12)) throw InvalidInput("threshold_c: tol must be >= 1e-12");
    double lo = 2.5, hi = 4.5;
    if (section_witness_beta(n, lo) || !section_witness_beta(n, hi)) {
        throw NumericRefusal("threshold_c: witness predicate does not flip over "
                             "[2.5, 4.5] at n=" + std::to_string(n));
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (section_witness_beta(n, mid)) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

ThetaThresholds q_inf_bracket(int n_max, double tol) {
    if (n_max < 5) throw InvalidInput("q_inf_bracket: n_max must be >= 5");
    ThetaThresholds out;
    out.n_max = n_max;
    out.tol = tol;
    for (int n = 2; n <= n_max; ++n) out.c[n] = threshold_c(n, tol);

    double prev_even = std::numeric_limits<double>::infinity();
    double prev_odd = -std::numeric_limits<double>::infinity();
    out.q_inf_high = std::numeric_limits<double>::infinity();
    out.q_inf_low = -std::numeric_limits<double>::infinity();
    for (const auto& [n, cn] : out.c) {
        if (n % 2 == 0) {
            if (cn > prev_even + 2.0 * tol) {
                throw NumericRefusal("q_inf_bracket: even cutoffs failed to decrease at n=" +
                                     std::to_string(n));
            }
            prev_even = cn;
            out.q_inf_high = std::min(out.q_inf_high, cn);
        } else {
            if (cn < prev_odd - 2.0 * tol) {
                throw NumericRefusal("q_inf_bracket: odd cutoffs failed to increase at n=" +
                                     std::to_string(n));
            }
            prev_odd = cn;
            out.q_inf_low = std::max(out.q_inf_low, cn);
        }
    }
    // The reference limit is quoted truncated to 9 digits, so containment is
    // asserted with a one-digit slack.
    const double ref = kQInfFallback;
    if (out.q_inf_low > ref + 1e-8 || out.q_inf_high < ref - 1e-8) {
        throw NumericRefusal("q_inf_bracket: enclosure misses the reference limit");
    }
    return out;
}

CriterionVerdict g_a_membership(double a, int degree) {
    if (!(a > 1.0)) throw InvalidInput("g_a_membership: a must be > 1");
    if (degree < 4) throw InvalidInput("g_a_membership: degree must be >= 4");

    CriterionVerdict v;
    v.criterion = "partial-theta-membership";
    CoefficientSeries s = make_partial_theta(a, degree);

    const double lo = -a * a * a, hi = -a;
    const int grid = 2048;
    const double h = (hi - lo) / grid;

    auto certified = [&](double x) {
        EvalResult r = evaluate(s, x, 1e-13);
        if (!r.certified) {
            throw NumericRefusal("g_a_membership: uncertain tail at x=" + std::to_string(x));
        }
        return r;
    };

    std::optional<double> witness_x;
    double witness_val = 0.0;
    double best_v = std::numeric_limits<double>::infinity();
    int best_i = -1;
    for (int i = 0; i <= grid; ++i) {
        const double x = (i == grid) ? hi : lo + i * h;
        EvalResult r = certified(x);
        if (r.value + r.tail_estimate <= 0.0) {
            witness_x = x;
            witness_val = r.value;
            break;
        }
        if (r.value < best_v) {
            best_v = r.value;
            best_i = i;
        }
    }
    if (!witness_x && best_i > 0 && best_i < grid) {
        // refine the interior minimum before giving up
        double xa = lo + (best_i - 1) * h;
        double xb = lo + (best_i + 1) * h;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = xb - gr * (xb - xa), x2 = xa + gr * (xb - xa);
        double f1 = certified(x1).value, f2 = certified(x2).value;
        for (int it = 0; it < 200 && (xb - xa) > 1e-12 * std::max(1.0, std::abs(xa)); ++it) {
            if (f1 < f2) {
                xb = x2; x2 = x1; f2 = f1;
                x1 = xb - gr * (xb - xa); f1 = certified(x1).value;
            } else {
                xa = x1; x1 = x2; f1 = f2;
                x2 = xa + gr * (xb - xa); f2 = certified(x2).value;
            }
        }
        const double xm = 0.5 * (xa + xb);
        EvalResult r = certified(xm);
        if (r.value + r.tail_estimate <= 0.0) {
            witness_x = xm;
            witness_val = r.value;
        } else {
            best_v = std::min(best_v, r.value);
        }
    }

    // cross-check against the threshold-limit enclosure (computed once)
    static const ThetaThresholds kBracket = q_inf_bracket(8, 1e-10);
    const double beta = a * a;
    v.computed.emplace_back("a", a);
    v.computed.emplace_back("a_squared", beta);
    v.computed.emplace_back("q_inf_low", kBracket.q_inf_low);
    v.computed.emplace_back("q_inf_high", kBracket.q_inf_high);

    int expectation = 0; // +1 expect witness, -1 expect none, 0 undetermined
    if (beta > kBracket.q_inf_high + 2.0 * kBracket.tol) expectation = +1;
    if (beta < kBracket.q_inf_low - 2.0 * kBracket.tol) expectation = -1;

    if (witness_x) {
        v.status = CriterionStatus::Holds;
        v.witness = *witness_x;
        v.computed.emplace_back("witness_value", witness_val);
        v.note = "certified nonpositive value of the function on [-a^3, -a]";
        if (expectation == -1) {
            v.note += "; disagrees with the threshold-limit test (a^2 below the enclosure)";
        }
    } else {
        v.status = CriterionStatus::Fails;
        v.computed.emplace_back("min_value_on_grid", best_v);
        v.computed.emplace_back("margin", -best_v);
        v.note = "no certified nonpositive value found on [-a^3, -a]";
        if (expectation == +1) {
            v.note += "; disagrees with the threshold-limit test (a^2 above the enclosure)";
        }
    }
    v.computed.emplace_back("threshold_expectation", static_cast<double>(expectation));
    return v;
}

} // namespace lplab

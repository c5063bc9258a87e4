#include "lplab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lplab {

namespace {

// Materialized coefficients are kept well inside normal binary64 range so the
// downstream quotient and root machinery never sees a denormal or an inf.
// Superexponentially decaying families hit this wall before large requested
// degrees; the materialization is truncated there. Term recurrences used by
// the evaluators are ratio-based, so evaluation itself can certify tails far
// beyond the coefficient wall.
constexpr double kCoeffFloor = 0x1p-963; // ~1.0e-290
constexpr double kCoeffCeil  = 0x1p+963; // ~9.7e+289
constexpr int kEvalHorizonCap = 4096;

bool in_coeff_range(double v) {
    return std::isfinite(v) && v >= kCoeffFloor && v <= kCoeffCeil;
}

void check_positive_coeffs(const std::vector<double>& coeffs) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!(coeffs[k] > 0.0) || !std::isfinite(coeffs[k])) {
            throw InvalidInput("coefficient a_" + std::to_string(k) +
                               " must be positive and finite (got " +
                               std::to_string(coeffs[k]) + ")");
        }
    }
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Explicit: return "explicit";
        case Family::FromQuotients: return "from-quotients";
        case Family::Exponential: return "exponential";
        case Family::PartialTheta: return "partial-theta";
        case Family::EulerLike: return "euler-like";
    }
    return "unknown";
}

CoefficientSeries make_explicit(std::vector<double> coeffs) {
    if (coeffs.size() < 2) throw InvalidInput("coeffs: need at least a_0 and a_1 (degree >= 1)");
    check_positive_coeffs(coeffs);
    CoefficientSeries s;
    s.family = Family::Explicit;
    s.coeffs = std::move(coeffs);
    return s;
}

CoefficientSeries make_exponential(int degree) {
    if (degree < 1) throw InvalidInput("degree must be >= 1");
    CoefficientSeries s;
    s.family = Family::Exponential;
    s.coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    double a = 1.0;
    s.coeffs.push_back(a);
    for (int k = 1; k <= degree; ++k) {
        a /= static_cast<double>(k);
        if (!in_coeff_range(a)) break;
        s.coeffs.push_back(a);
    }
    return s;
}

CoefficientSeries make_partial_theta(double a, int degree) {
    if (!(a > 1.0)) throw InvalidInput("partial-theta parameter a must be > 1");
    if (degree < 1) throw InvalidInput("degree must be >= 1");
    CoefficientSeries s;
    s.family = Family::PartialTheta;
    s.param = a;
    const double inv_a2 = 1.0 / (a * a);
    double coeff = 1.0;
    double ratio = 1.0 / a; // a_{k+1}/a_k = a^{-(2k+1)}
    s.coeffs.push_back(coeff);
    for (int k = 1; k <= degree; ++k) {
        coeff *= ratio;
        ratio *= inv_a2;
        if (!in_coeff_range(coeff)) break;
        s.coeffs.push_back(coeff);
    }
    return s;
}

CoefficientSeries make_euler_like(double a, int degree) {
    if (!(a > 1.0)) throw InvalidInput("euler-like parameter a must be > 1");
    if (degree < 1) throw InvalidInput("degree must be >= 1");
    CoefficientSeries s;
    s.family = Family::EulerLike;
    s.param = a;
    double coeff = 1.0;
    double apow = 1.0; // a^k
    s.coeffs.push_back(coeff);
    for (int k = 1; k <= degree; ++k) {
        apow *= a;
        if (!std::isfinite(apow)) break;
        coeff /= (apow + 1.0);
        if (!in_coeff_range(coeff)) break;
        s.coeffs.push_back(coeff);
    }
    return s;
}

double QuotientSequence::p_at(int n) const {
    if (n < 1 || n > max_index()) throw InvalidInput("p_n index out of range: n=" + std::to_string(n));
    return p[static_cast<std::size_t>(n - 1)];
}

double QuotientSequence::q_at(int n) const {
    if (n < 2 || n > max_index()) throw InvalidInput("q_n index out of range: n=" + std::to_string(n));
    return q[static_cast<std::size_t>(n - 2)];
}

QuotientSequence quotients_from_coeffs(const CoefficientSeries& s) {
    if (s.degree() < 2) throw InvalidInput("quotients need degree >= 2");
    check_positive_coeffs(s.coeffs);
    QuotientSequence out;
    out.a0 = s.coeffs[0];
    out.a1 = s.coeffs[1];
    const int n = s.degree();
    out.p.reserve(static_cast<std::size_t>(n));
    out.q.reserve(static_cast<std::size_t>(n) - 1);
    for (int k = 1; k <= n; ++k) {
        // p_n = a_{n-1}/a_n; q_n as a ratio of ratios rather than
        // a_{n-1}^2/(a_{n-2} a_n), which would square tiny coefficients.
        out.p.push_back(s.coeffs[static_cast<std::size_t>(k - 1)] / s.coeffs[static_cast<std::size_t>(k)]);
        if (k >= 2) out.q.push_back(out.p[static_cast<std::size_t>(k - 1)] / out.p[static_cast<std::size_t>(k - 2)]);
    }
    return out;
}

CoefficientSeries coeffs_from_quotients(double a0, double a1, const std::vector<double>& q) {
    if (!(a0 > 0.0) || !std::isfinite(a0)) throw InvalidInput("a0 must be positive and finite");
    if (!(a1 > 0.0) || !std::isfinite(a1)) throw InvalidInput("a1 must be positive and finite");
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!(q[i] > 0.0) || !std::isfinite(q[i])) {
            throw InvalidInput("q_" + std::to_string(i + 2) + " must be positive and finite");
        }
    }
    CoefficientSeries s;
    s.family = Family::FromQuotients;
    s.coeffs = {a0, a1};
    double p = a0 / a1; // p_1
    double coeff = a1;
    for (std::size_t i = 0; i < q.size(); ++i) {
        p *= q[i];            // p_n = p_{n-1} q_n
        double next = coeff / p; // a_n = a_{n-1}/p_n
        if (!in_coeff_range(next)) break;
        coeff = next;
        s.coeffs.push_back(coeff);
    }
    return s;
}

CoefficientSeries normalize(const CoefficientSeries& s) {
    check_positive_coeffs(s.coeffs);
    if (s.coeffs.size() < 2) throw InvalidInput("normalize needs degree >= 1");
    const double a0 = s.coeffs[0];
    const double a1 = s.coeffs[1];
    CoefficientSeries g = s;
    g.xscale = s.xscale * (a0 / a1);
    g.coeffs.clear();
    g.coeffs.reserve(s.coeffs.size());
    // g_k = a_k (a0/a1)^k / a0, built multiplicatively so that g_0 = g_1 = 1
    // exactly and each q_n is untouched.
    double val = 1.0;
    g.coeffs.push_back(1.0);
    const double step = a0 / a1;
    for (std::size_t k = 1; k < s.coeffs.size(); ++k) {
        val *= step * (s.coeffs[k] / s.coeffs[k - 1]);
        if (!in_coeff_range(std::abs(val))) break;
        g.coeffs.push_back(val);
    }
    if (g.coeffs.size() < 2) throw InvalidInput("normalize: rescaling left fewer than two representable coefficients");
    return g;
}

namespace {

// Scalar adapters so the evaluation core can run in binary64 or double-double.
template <typename T> struct Num;

template <> struct Num<double> {
    static double from(double v) { return v; }
    static double add(double a, double b) { return a + b; }
    static double mul(double a, double b) { return a * b; }
    static double div(double a, double b) { return a / b; }
    static double abs(double a) { return std::abs(a); }
    static double to_double(double a) { return a; }
};

template <> struct Num<DD> {
    static DD from(double v) { return DD(v); }
    static DD add(const DD& a, const DD& b) { return dd::add(a, b); }
    static DD mul(const DD& a, const DD& b) { return dd::mul(a, b); }
    static DD div(const DD& a, const DD& b) { return dd::div(a, b); }
    static DD abs(const DD& a) { return dd::abs(a); }
    static double to_double(const DD& a) { return static_cast<double>(a); }
};

// Supplies successive coefficient ratios a_{k+1}/a_k. Families have closed
// form rules valid beyond the materialized degree (the series is entire);
// explicit and from-quotients series are polynomials and the rule ends at the
// materialized degree.
template <typename T>
struct RatioRule {
    using N = Num<T>;

    explicit RatioRule(const CoefficientSeries& s) : s_(&s) {
        switch (s.family) {
            case Family::Exponential:
                entire_ = true;
                break;
            case Family::PartialTheta: {
                entire_ = true;
                T a = N::from(s.param);
                theta_ratio_ = N::div(N::from(1.0), a);            // a^{-(2*0+1)}
                theta_step_ = N::div(N::from(1.0), N::mul(a, a));  // a^{-2}
                break;
            }
            case Family::EulerLike:
                entire_ = true;
                euler_pow_ = N::from(s.param); // a^{k+1} at k=0
                break;
            default:
                entire_ = false;
                break;
        }
        xscale_ = N::from(s.xscale);
    }

    bool entire() const { return entire_; }

    // Ratio for the step k -> k+1, or nullopt when the rule is exhausted.
    std::optional<T> next(int k) {
        T r{};
        switch (s_->family) {
            case Family::Exponential:
                r = N::div(N::from(1.0), N::from(static_cast<double>(k + 1)));
                break;
            case Family::PartialTheta:
                r = theta_ratio_;
                theta_ratio_ = N::mul(theta_ratio_, theta_step_);
                break;
            case Family::EulerLike:
                r = N::div(N::from(1.0), N::add(euler_pow_, N::from(1.0)));
                euler_pow_ = N::mul(euler_pow_, N::from(s_->param));
                break;
            default: {
                if (k + 1 > s_->degree()) return std::nullopt;
                const auto& c = s_->coeffs;
                r = N::div(N::from(c[static_cast<std::size_t>(k + 1)]),
                           N::from(c[static_cast<std::size_t>(k)]));
                // materialized coefficients already include any rescale
                return r;
            }
        }
        return N::mul(r, xscale_);
    }

private:
    const CoefficientSeries* s_;
    bool entire_ = false;
    T theta_ratio_{}, theta_step_{}, euler_pow_{}, xscale_{};
};

// For family rules the term-ratio magnitude |x| * a_{k+1}/a_k is
// non-increasing in k (1/(k+1), a^{-(2k+1)}, 1/(a^{k+1}+1) all decrease), so
// one observed ratio < 1 bounds every later one. That is what certifies both
// the Leibniz and the geometric tail bounds below.
template <typename T>
EvalResult eval_core(const CoefficientSeries& s, double x, double eps,
                     Precision resolved, int start_k) {
    using N = Num<T>;
    check_positive_coeffs(s.coeffs);
    if (!(eps > 0.0)) throw InvalidInput("eps must be > 0");

    EvalResult res;
    const double u = mode_epsilon(resolved);
    RatioRule<T> rule(s);
    const int horizon = std::min(kEvalHorizonCap, std::max(2 * s.degree(), 128));

    // Walk the term recurrence up to start_k without accumulating.
    T term = N::from(s.coeffs[0]);
    T xs = N::from(x);
    int k = 0;
    while (k < start_k) {
        auto r = rule.next(k);
        if (!r) { // polynomial ended before start_k: remainder is exactly zero
            res.value = 0.0;
            res.truncation_degree = s.degree();
            res.tail_estimate = 0.0;
            res.certified = true;
            return res;
        }
        term = N::mul(term, N::mul(xs, *r));
        ++k;
    }

    if (x == 0.0) {
        res.value = (start_k == 0) ? s.coeffs[0] : 0.0;
        res.truncation_degree = start_k;
        res.tail_estimate = 0.0;
        res.certified = true;
        return res;
    }

    T acc = term;
    T abs_acc = N::abs(term);
    const bool alternating = x < 0.0;
    bool leibniz_held = false;
    double trunc_bound = 0.0;
    bool certified = false;
    double next_term_signed = 0.0;

    while (true) {
        auto r = rule.next(k);
        if (!r) { // polynomial exhausted: zero tail
            trunc_bound = 0.0;
            certified = true;
            break;
        }
        T next = N::mul(term, N::mul(xs, *r));
        const double an = std::abs(N::to_double(next));
        const double at = std::abs(N::to_double(term));
        if (an == 0.0) { // terms fell below representable range
            trunc_bound = std::numeric_limits<double>::min();
            certified = true;
            leibniz_held = alternating;
            break;
        }
        const double sr = at > 0.0 ? an / at : 1.0;
        // For family rules sr bounds every later term ratio (the closed-form
        // ratios are non-increasing in k), so the tail is certified whenever
        // sr < 1: by Leibniz for alternating sums, geometrically otherwise.
        const bool decaying = rule.entire() && sr < 1.0;
        if (decaying) {
            double tail = alternating ? an : an / (1.0 - sr);
            if (tail <= 0.5 * eps) {
                trunc_bound = tail;
                certified = true;
                leibniz_held = alternating;
                next_term_signed = N::to_double(next);
                break;
            }
        }
        if (rule.entire() && k + 1 > horizon) { // budget exhausted
            if (decaying) {
                trunc_bound = alternating ? an : an / (1.0 - sr);
                certified = true;
                leibniz_held = alternating;
                next_term_signed = N::to_double(next);
            } else {
                trunc_bound = an;
                certified = false;
            }
            break;
        }
        acc = N::add(acc, next);
        abs_acc = N::add(abs_acc, N::abs(next));
        term = next;
        ++k;
    }

    const double abs_sum = N::to_double(abs_acc);
    const double rounding = 4.0 * static_cast<double>(k - start_k + 2) * u * abs_sum;
    res.value = N::to_double(acc);
    res.truncation_degree = k;
    res.tail_estimate = trunc_bound + rounding;
    res.certified = certified;
    if (alternating && leibniz_held && certified) {
        res.has_brackets = true;
        double lo = res.value, hi = res.value + next_term_signed;
        if (lo > hi) std::swap(lo, hi);
        res.lower = lo - rounding;
        res.upper = hi + rounding;
    }
    return res;
}

EvalResult eval_dispatch(const CoefficientSeries& s, double x, double eps,
                         Precision mode, int start_k) {
    Precision resolved = resolve_precision(mode);
    if (resolved == Precision::Extended) return eval_core<DD>(s, x, eps, resolved, start_k);
    return eval_core<double>(s, x, eps, resolved, start_k);
}

} // namespace

EvalResult evaluate(const CoefficientSeries& s, double x, double eps, Precision mode) {
    return eval_dispatch(s, x, eps, mode, 0);
}

EvalResult alternating_evaluate(const CoefficientSeries& s, double x, double eps, Precision mode) {
    return eval_dispatch(s, -x, eps, mode, 0);
}

double partial_sum(const CoefficientSeries& s, int n, double x, Precision mode) {
    if (n < 0) throw InvalidInput("partial_sum: n must be >= 0");
    if (n > s.degree()) {
        throw InvalidInput("partial_sum: n=" + std::to_string(n) +
                           " exceeds materialized degree " + std::to_string(s.degree()));
    }
    check_positive_coeffs(s.coeffs);
    Precision resolved = resolve_precision(mode);
    if (resolved == Precision::Extended) {
        DD acc = DD(s.coeffs[0]);
        DD term = acc;
        for (int k = 1; k <= n; ++k) {
            DD ratio = dd::div(DD(s.coeffs[static_cast<std::size_t>(k)]),
                               DD(s.coeffs[static_cast<std::size_t>(k - 1)]));
            term = dd::mul(term, dd::mul(DD(x), ratio));
            acc = dd::add(acc, term);
        }
        return static_cast<double>(acc);
    }
    double acc = s.coeffs[0];
    double term = acc;
    for (int k = 1; k <= n; ++k) {
        term *= x * (s.coeffs[static_cast<std::size_t>(k)] / s.coeffs[static_cast<std::size_t>(k - 1)]);
        acc += term;
    }
    return acc;
}

EvalResult remainder(const CoefficientSeries& s, int n, double x, double eps, Precision mode) {
    if (n < 0) throw InvalidInput("remainder: n must be >= 0");
    return eval_dispatch(s, x, eps, mode, n);
}

} // namespace lplab

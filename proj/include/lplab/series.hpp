#pragma once

// Power series with positive coefficients, their quotient sequences
// p_n = a_{n-1}/a_n and q_n = a_{n-1}^2 / (a_{n-2} a_n), and evaluation with
// certified truncation error. Everything downstream (root reports, membership
// criteria, the section thresholds) is driven by these types.

#include <optional>
#include <string>
#include <vector>

#include "lplab/common.hpp"
#include "lplab/precision.hpp"

namespace lplab {

enum class Family {
    Explicit,       // coefficients given directly; represents exactly a polynomial
    FromQuotients,  // reconstructed from a0, a1 and a finite quotient list
    Exponential,    // a_k = 1/k!
    PartialTheta,   // a_k = a^(-k^2), a > 1
    EulerLike       // a_k = 1/((a+1)(a^2+1)...(a^k+1)), a > 1
};

const char* family_name(Family f);

struct CoefficientSeries {
    Family family = Family::Explicit;
    double param = 0.0;           // the parameter a for PartialTheta / EulerLike
    double xscale = 1.0;          // argument rescale applied by normalize();
                                  // family coefficient rules pick it up so the
                                  // entire-function tail stays certifiable
    std::vector<double> coeffs;   // a_0 .. a_N, all strictly positive

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Family constructors. The requested degree is clamped so that every
// materialized coefficient is a normal binary64 value; superexponentially
// decaying families (partial-theta, euler-like) hit that wall well before
// degree 64 for larger parameters. a <= 1 is rejected.
CoefficientSeries make_explicit(std::vector<double> coeffs);
CoefficientSeries make_exponential(int degree = 64);
CoefficientSeries make_partial_theta(double a, int degree = 64);
CoefficientSeries make_euler_like(double a, int degree = 64);

struct QuotientSequence {
    double a0 = 1.0;
    double a1 = 1.0;
    std::vector<double> p; // p[i] = p_{i+1}, i.e. p_1 .. p_N
    std::vector<double> q; // q[i] = q_{i+2}, i.e. q_2 .. q_N

    int max_index() const { return static_cast<int>(p.size()); } // N

    double p_at(int n) const; // n in [1, N]
    double q_at(int n) const; // n in [2, N]
};

QuotientSequence quotients_from_coeffs(const CoefficientSeries& s);

// Rebuild coefficients from a0, a1 and q_2..q_N via the product formula
// a_n = a_{n-1} / p_n with p_n = p_{n-1} q_n. Degree is clamped to keep
// coefficients inside normal binary64 range.
CoefficientSeries coeffs_from_quotients(double a0, double a1, const std::vector<double>& q);

// Rescale to g_0 = g_1 = 1 (g(x) = f(a0/a1 * x) / a0). Leaves every q_n
// unchanged; clamps the materialized degree if the rescaling would overflow
// or underflow the far coefficients.
CoefficientSeries normalize(const CoefficientSeries& s);

struct EvalResult {
    double value = 0.0;
    int truncation_degree = 0;  // index of the last term actually summed
    double tail_estimate = 0.0; // |value - true sum| bound (truncation + rounding)
    bool certified = true;      // false: term decay never verified before cutoff

    // Partial-sum sandwich for alternating evaluation: when the terms were
    // verified decreasing in magnitude up to the cutoff, consecutive partial
    // sums bracket the limit.
    bool has_brackets = false;
    double lower = 0.0;
    double upper = 0.0;
};

// Sum of a_k x^k over the series' coefficient rule, stopping once the
// certified tail bound drops below eps or the materialized degree runs out.
// Explicit and from-quotients series are polynomials: their tail beyond the
// materialized list is exactly zero. x may be negative; for alternating sums
// the Leibniz bound certifies the tail, otherwise a geometric majorant from
// the observed term ratios is used, otherwise the result is flagged uncertain.
EvalResult evaluate(const CoefficientSeries& s, double x, double eps,
                    Precision mode = Precision::Auto);

// phi(x) = f(-x) for x typically > 0, with the S_odd <= phi <= S_even
// brackets reported when the Leibniz condition held.
EvalResult alternating_evaluate(const CoefficientSeries& s, double x, double eps,
                                Precision mode = Precision::Auto);

// S_n(x) = sum_{k=0}^{n} a_k x^k, exact up to rounding. Requires n <= degree.
double partial_sum(const CoefficientSeries& s, int n, double x,
                   Precision mode = Precision::Auto);

// R_n(x) = sum_{k=n}^{inf} a_k x^k with the same certification as evaluate().
EvalResult remainder(const CoefficientSeries& s, int n, double x, double eps,
                     Precision mode = Precision::Auto);

} // namespace lplab

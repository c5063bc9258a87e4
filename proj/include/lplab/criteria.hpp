#pragma once

// Membership criteria over quotient sequences: necessary conditions,
// sufficient conditions and classifiers for a series with positive
// coefficients to lie in the Laguerre-Polya class of type I. Every check
// returns a structured verdict whose margins are the literal inequality
// slacks, signed so that >= 0 always means the condition holds.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lplab/common.hpp"
#include "lplab/series.hpp"

namespace lplab {

enum class CriterionStatus { Holds, Fails, Inconclusive };

const char* status_name(CriterionStatus s);

struct CriterionVerdict {
    std::string criterion;
    CriterionStatus status = CriterionStatus::Inconclusive;
    // named reals (bounds, margins), insertion-ordered for stable reports
    std::vector<std::pair<std::string, double>> computed;
    std::optional<double> witness; // a point or an index, per criterion
    std::string note;
};

struct Theorem2Bound {
    double q2 = 0.0;
    double bound = 0.0;        // sharp upper bound for q3 given q2
    double remark_bound = 0.0; // the weaker closed form 3/(4 - q2)
};

// Limiting value of the section thresholds; used as the classifier cutoff
// when no sharper value is supplied by the theta module.
constexpr double kQInfFallback = 3.23363666;

// Necessary: q_n >= n/(n-1) for every materialized n; exact equality
// everywhere characterizes c*exp(alpha z). Margins are q_n - n/(n-1).
CriterionVerdict newton_check(const QuotientSequence& q);

// Necessary: q3(q2 - 4) + 3 >= 0. When q3 >= q2 and the margin is
// nonnegative, q2 >= 3 follows (checked internally for q2 > 1).
CriterionVerdict lemma_q2q3_check(double q2, double q3);

// Sufficient: q_n >= 4 for all materialized n implies every section is
// real-rooted with simple negative zeros (and membership follows).
CriterionVerdict hutchinson_check(const QuotientSequence& q);

// Classifier from the monotonicity of q_n over the materialized window:
// weakly decreasing with limit >= q_inf -> member; weakly increasing with
// limit < q_inf -> not a member; anything else is inconclusive. A caller
// limit hint overrides the last-entry estimate.
CriterionVerdict monotone_classify(const QuotientSequence& q,
                                   std::optional<double> limit_hint = std::nullopt,
                                   double q_inf = kQInfFallback);

// Necessary (for members with q2 <= q3): some z0 in [-a1/a2, 0] has
// f(z0) <= 0. Scans the normalized series over [-q2, 0] for a certified
// nonpositive value; no witness at full resolution reports a numeric
// violation of the necessary condition.
CriterionVerdict thm1_zero_segment_check(const CoefficientSeries& s);

// Sharp upper bound for q3 in terms of q2 on 3 <= q2 < 4, together with the
// weaker rational bound 3/(4 - q2). Throws InvalidInput outside [3, 4).
Theorem2Bound thm2_bound(double q2);

// Necessary (under q2 < 4, q2 <= q3): q3 <= thm2_bound(q2). Outside
// 3 <= q2 < 4 the verdict is inconclusive rather than extrapolated.
CriterionVerdict thm2_check(double q2, double q3);

// Sufficient for a zero witness in [-a1/a2, 0]: under 3 <= q2 < 4, q3 >= 2,
// q4 >= 3, if q3 <= 8/(d(4-d)) with d = min(q2, q4) a witness exists. A
// negative margin is inconclusive (a failed sufficient condition proves
// nothing); callers should confirm positives via thm1_zero_segment_check.
CriterionVerdict thm3_check(double q2, double q3, double q4);

struct TailBound {
    double bound = 0.0;       // sup of |phi - S_4| on the circle |z| = q2
    double gate_margin = 0.0; // q3 q4 q5 q6 - (q6 + 1), > 0 enables Rouche
};

// Tail bound q2 q6 / (q3^3 q4^2 q5 q6 - q3^2 q4) for the deviation of the
// alternating series from its degree-4 section on |z| = q2. Requires all
// quotients > 1 and a positive denominator (InvalidInput otherwise).
TailBound tail_bound_lm2(double q2, double q3, double q4, double q5, double q6);

struct ApolarQuartic {
    std::array<std::complex<double>, 4> roots; // {0, 0, q2, -3(q2-4)}
    double apolarity_residual = 0.0;           // scale-relative bilinear sum
};

// The quartic z^2 (z^2 + 2(q2-6) z - 3 q2 (q2-4)) apolar to the degree-4
// section of the alternating series; all four roots lie in |z| <= q2 once
// q2 >= 3, which forces the section to have a zero there. q3, q4 only enter
// the residual cross-check (the apolarity sum does not depend on them).
ApolarQuartic apolar_quartic(double q2, double q3 = 2.0, double q4 = 2.0);

// Runs the whole battery in a fixed order plus a truncation root-location
// classifier. Requires degree >= 6 (the tail bound needs q2..q6). Individual
// criterion errors are reported as inconclusive entries, never thrown.
std::vector<CriterionVerdict> full_report(const CoefficientSeries& s,
                                          std::optional<double> q_inf = std::nullopt);

} // namespace lplab

#pragma once

// Section thresholds for the partial-theta family: for each section degree n
// there is a cutoff c_n in the a^2 variable above which S_n(., g_a) acquires
// a certified nonpositive value on [-a^3, -a] (equivalently, becomes
// real-rooted). Even-degree cutoffs decrease, odd-degree cutoffs increase,
// and both converge to a common limit that the bracket below encloses.

#include <map>

#include "lplab/common.hpp"
#include "lplab/criteria.hpp"
#include "lplab/series.hpp"

namespace lplab {

struct ThetaThresholds {
    std::map<int, double> c; // n -> cutoff in the a^2 variable
    int n_max = 0;
    double q_inf_low = 0.0;  // max computed odd cutoff
    double q_inf_high = 0.0; // min computed even cutoff
    double tol = 0.0;        // bisection certificate width per cutoff
};

// True iff S_n(., g_a) attains a certified nonpositive value on [-a^3, -a]
// (scanned in normalized coordinates over [-a^2, -1]; 2048-point grid with
// golden-section refinement of the interior minimum). Endpoint values that
// are zero up to rounding count only when the section decreases into the
// interval, since the left endpoint of the odd sections vanishes identically.
bool section_has_witness(int n, double a);

// The witness cutoff c_n located by bisection in the a^2 variable over
// [2.5, 4.5], certified to width <= tol (tol >= 1e-12). Throws NumericRefusal
// if the witness predicate does not flip across the bracket.
double threshold_c(int n, double tol);

// Cutoffs c_2..c_n_max plus the enclosure [max odd, min even] of their common
// limit. Monotonicity of each parity strand is enforced up to 2*tol;
// violations beyond that raise NumericRefusal. Requires n_max >= 5.
ThetaThresholds q_inf_bracket(int n_max, double tol);

// Membership test for the full partial-theta function: holds iff g_a has a
// certified nonpositive value on [-a^3, -a]. Cross-checked against the
// threshold bracket (a^2 above the bracket must produce a witness, below
// must not); the verdict records both results.
CriterionVerdict g_a_membership(double a, int degree = 64);

} // namespace lplab

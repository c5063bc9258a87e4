#pragma once

// Numeric engines for zero location: simultaneous root iteration with a
// Newton-polygon initialization, argument-principle zero counts on disks,
// minimum modulus on circles, and certified sign scans on real segments.

#include <complex>
#include <optional>
#include <vector>

#include "lplab/common.hpp"
#include "lplab/series.hpp"

namespace lplab {

enum class RootVerdict { AllRealNegative, AllReal, Mixed, ComplexPresent, Uncertain };

const char* verdict_name(RootVerdict v);

struct RootReport {
    std::vector<std::complex<double>> roots; // sorted by (Re, Im), deterministic
    std::vector<double> residuals;           // |P(root)|, saturated at DBL_MAX
    RootVerdict verdict = RootVerdict::Uncertain;
    double im_tol = 1e-8;      // relative to max(1, |root|), per root
    double scale = 0.0;        // max root modulus
    bool simple = true;        // min pairwise relative separation > 1e-6
    double min_separation = 0.0;
    bool converged = true;
};

// Roots of sum c_k z^k (ascending coefficients). Degree >= 1 required.
// Degrees 1 and 2 use closed forms (a zero discriminant yields an exact
// double root); higher degrees run Aberth-Ehrlich refinement from per-root
// radii read off the coefficient Newton polygon, with a companion-matrix
// eigenvalue fallback if the iteration stalls. Deterministic.
RootReport poly_roots(const std::vector<double>& coeffs, double im_tol = 1e-8);
RootReport poly_roots(const std::vector<std::complex<double>>& coeffs, double im_tol = 1e-8);

RootReport is_real_rooted(const std::vector<double>& coeffs, double im_tol = 1e-8);

struct DiskCount {
    double radius = 0.0;
    long count = 0;
    long winding_samples = 0;
    double min_modulus_on_contour = 0.0;
};

// Zeros of the polynomial inside |z| < radius by the argument principle:
// adaptive phase sampling refined until successive unwrapped increments stay
// below pi/2. Refuses (NumericRefusal) when the contour passes within 10x the
// evaluation error of a zero.
DiskCount count_zeros_in_disk(const std::vector<double>& coeffs, double radius,
                              int initial_samples = 512);

// Same count for the alternating form phi(z) = sum (-1)^k a_k z^k of a series,
// truncated at eval_degree (clamped to the materialized degree).
DiskCount count_zeros_in_disk(const CoefficientSeries& s, double radius,
                              int eval_degree, int initial_samples = 512);

struct CircleMin {
    double theta = 0.0; // reported in [0, pi] for real coefficients
    double value = 0.0;
};

// Global minimum of |P| over |z| = radius: dense grid plus golden-section
// refinement of the bracketing cell.
CircleMin min_modulus_on_circle(const std::vector<double>& coeffs, double radius,
                                int grid = 4096);

struct SegmentWitness {
    double x0 = 0.0;
    double value = 0.0;
    bool refined = false; // true when located by bisection between grid points
};

// Scan f over [lo, hi] for a point with certified value <= 0. The Hutchinson
// candidate -(a0/a1)sqrt(q2) is probed first when it lies in the segment;
// otherwise the grid is walked from the endpoint nearest zero and the first
// certified sign crossing is bisection-refined. A nullopt is a statement at
// grid resolution, not a proof of positivity. Uncertain evaluations raise
// NumericRefusal.
std::optional<SegmentWitness> sign_scan_segment(const CoefficientSeries& s,
                                                double lo, double hi,
                                                int grid = 1024,
                                                Precision mode = Precision::Auto);

} // namespace lplab

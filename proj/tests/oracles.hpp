#pragma once

// Frozen reference values for the test suite. Everything here was computed
// offline with independent tooling (mpmath at 40 digits, numpy's balanced
// companion eigensolver, and a plain float64 bisection driver) and pasted in
// verbatim, so the library never grades itself against its own output.

namespace oracles {

// Section-threshold cutoffs in the a^2 variable (offline bisection to 1e-12).
// c2 and c3 are exact: at a^2 = 4 the quadratic section is (1 + x/4)^2 and at
// a^2 = 3 the cubic section is (1 + x/a^3)^3. c4 = 1 + sqrt(5).
inline constexpr double kC2 = 4.0;
inline constexpr double kC3 = 3.0;
inline constexpr double kC4 = 3.2360679774997896;
inline constexpr double kC5 = 3.2336204603648184;
inline constexpr double kC6 = 3.2336366981776337;
inline constexpr double kC7 = 3.2336366652248216;
inline constexpr double kC10 = 3.23363666524574;
inline constexpr double kQInf = 3.23363666524574; // common strand limit

// phi(x) = sum (-1)^k 2^(-k^2) x^k at x = 2 (the normalized partial-theta
// a = 2 alternating value; equals g_2(-4) unnormalized).
inline constexpr double kPhiTheta2At2 = -0.12112420800258050246;

// Second positive zero of that phi (the first is near 1.5318).
inline constexpr double kPhiTheta2SecondZero = 3.7898873551053;

// Roots of S_4(., g_1.8) (positive-coefficient quartic), ascending Re.
inline constexpr double kTheta18S4Roots[4] = {
    -27.358406078827887, -25.516909770023023, -4.318689322225928,
    -4.027998028923204};

// Degree-30 euler-like(3) section: exactly two non-real conjugate pairs; the
// small one frozen here, the large one only by magnitude.
inline constexpr double kEuler3PairRe = -7.201982273413031;
inline constexpr double kEuler3PairIm = 4.679197078035;
inline constexpr double kEuler3BigPairRe = -8.587319618728897e13;
inline constexpr double kEuler3BigPairIm = 2.448468911113446e13;

// euler-like(4): exact rational quotients and normalized-scan anchors.
inline constexpr double kEuler4Q2 = 17.0 / 5.0;
inline constexpr double kEuler4Q3 = 65.0 / 17.0;
inline constexpr double kEuler4Q4 = 257.0 / 65.0;
inline constexpr double kEuler4FirstCrossing = 2.032368493159916; // in t = -x
inline constexpr double kEuler4InteriorMin = -0.0075785547;       // near t = 2.251

// partial-theta(1.7): the scan segment minimum stays positive (no witness).
inline constexpr double kTheta17MinValue = 0.072392421;
inline constexpr double kTheta17MinAt = -3.8029085; // unnormalized g coordinate

// Truncated exponential sum at x = -30 (degree 170 equals e^-30 to 17 digits).
inline constexpr double kExpAtMinus30 = 9.3576229688401754e-14;

// Sharp q3 bounds from q2, plus the weaker rational form 3/(4 - q2).
inline constexpr double kBoundAt35 = 4.7559289460184545;
inline constexpr double kRemarkAt35 = 6.0;
inline constexpr double kBoundAt39 = 20.646920305474705;
inline constexpr double kRemarkAt39 = 30.0;

// Roots of the degree-4 alternating section with q identically 4
// (coefficients 1, -1, 1/4, -1/64, 1/4096); two lie inside |z| < 4.
inline constexpr double kS4Q4Roots[4] = {1.5317620513493828, 3.787181746927077,
                                         16.899109754088126, 41.781946447635434};
inline constexpr long kS4Q4InsideDisk4 = 2;

// Tail bound q2 q6 / (q3^3 q4^2 q5 q6 - q3^2 q4) at two rational corners.
inline constexpr double kTailAll4 = 16.0 / 16320.0; // every quotient 4
inline constexpr double kTailAll2 = 4.0 / 120.0;    // every quotient 2
inline constexpr double kTailAll4Gate = 251.0;      // 4*4*4*4 - (4+1)
inline constexpr double kTailAll2Gate = 13.0;       // 2*2*2*2 - (2+1)

// Unnormalized cubic section of g_2: 1 + x/2 + x^2/16 + x^3/512 has the exact
// middle root -8 (1 - 4 + 4 - 1).
inline constexpr double kTheta2S3MiddleRoot = -8.0;

} // namespace oracles

#pragma once

#include "akhiezer/frame.hpp"
#include "akhiezer/polynomial.hpp"

#include <optional>
#include <vector>

namespace akhiezer {

/// The factor pair of an odd-degree solution, f = U V with deg U = m,
/// deg V = m+1, both monic.
struct FactorPair {
  MonicPolynomial U;
  MonicPolynomial V;
  Branch branch;
};

/// Residual of the quadratic polynomial identity
///   major(x) U^2(x) - minor(x) V^2(x) = A x + B,
/// where the degree->=2 part of the left side must vanish.
struct PellResidual {
  double A;
  double B;
  double excess;      // max |coefficient| of the degree >= 2 part
  double coeff_scale; // max |coefficient| over the two products
  double scaled() const { return excess / coeff_scale; }
};

/// Pell residual for an odd-degree pair under the branch's factor split:
/// ThetaPair:  (x+1)(x-beta)(x-1) U^2 - (x-alpha) V^2
/// Theta1Pair: (x+1)(x-alpha)(x-1) U^2 - (x-beta) V^2
PellResidual pell_residual_odd(const FactorPair& pair, const TwoIntervalSet& set);

/// Pell residual for an even-degree solution split into P (even-indexed
/// zeros) and Q (odd-indexed zeros):
/// grouping A: (x+1)(x-beta) P^2 - (x-alpha)(x-1) Q^2
/// grouping B: (x+1)(x-alpha) P^2 - (x-beta)(x-1) Q^2
enum class EvenPellGrouping { A, B };
PellResidual pell_residual_even(const MonicPolynomial& P, const MonicPolynomial& Q,
                                const TwoIntervalSet& set, EvenPellGrouping grouping);

/// The one-parameter solution family of a degenerate frame. All members
/// (x - theta) phi(x), theta in [alpha, beta], share the same L1 value.
struct DegenerateFamily {
  double gamma;          // distinguished gap point
  double tau;            // transfinite diameter of E
  double Bcoef;          // tau^{2m+2} / (2m+2)
  MonicPolynomial phi;   // common degree-2m factor
  MonicPolynomial f0;    // (x - gamma) phi
  MonicPolynomial f_alpha; // endpoint member with zero pinned at alpha
  MonicPolynomial f_beta;  // endpoint member with zero pinned at beta
};

/// Odd n = 2m+1, non-degenerate: evaluate the theta-quotient closed forms on
/// real preimages with |x| > 1, interpolate to exact degree, normalize monic.
/// Validates the Pell identity; if it fails under the primary theta labeling
/// the alternate labeling is tried once before reporting failure.
FactorPair synthesize_odd(int m, const EllipticFrame& frame, const CaseSelection& sel);

/// Even n = 2m >= 2 via the direct closed forms, selected by the parity of p
/// in (2m+1) rho = p K + sigma.
MonicPolynomial synthesize_even(int m, const EllipticFrame& frame);

/// True when the even-degree decomposition (2m+1) rho = p K + sigma is at a
/// sigma ~ 0 tie, where the two parity formulas coincide in the limit.
bool even_case_near_degenerate(int m, const EllipticFrame& frame);

DegenerateFamily synthesize_degenerate(int m, const EllipticFrame& frame);

/// All real zeros of f, found by sign-change scanning over [-1-delta, 1+delta]
/// refined by bisection to 1e-13; asserts simplicity and exact count.
std::vector<double> extract_zeros(const MonicPolynomial& f, const TwoIntervalSet& set);

/// Lenient variant: whatever sign-change roots exist in [lo, hi].
std::vector<double> find_real_zeros(const MonicPolynomial& f, double lo, double hi);

/// Stationarity residuals of the alternating-sign moment system. zeros are
/// the sorted roots, gap_index k the number of them lying left of the gap
/// (zeros[k-1] <= alpha, beta <= zeros[k]).
std::vector<double> moment_residuals(const std::vector<double>& zeros,
                                     const TwoIntervalSet& set, int gap_index);

/// Zero counts per interval predicted by the case analysis for odd degree:
/// p zeros in (beta, 1), n - p in (-1, alpha).
struct ZeroCountPrediction {
  int left;
  int right;
};
ZeroCountPrediction predicted_zero_counts(int n, const CaseSelection& sel);

} // namespace akhiezer

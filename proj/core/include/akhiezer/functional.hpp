#pragma once

#include "akhiezer/frame.hpp"
#include "akhiezer/polynomial.hpp"
#include "akhiezer/synthesis.hpp"

#include <span>
#include <vector>

namespace akhiezer {

/// Exact L1 integral over E with the piecewise sign structure used.
struct L1Report {
  double value;
  std::vector<int> sign_pattern;     // +-1 per sign-constant piece
  std::vector<double> split_points;  // roots of f interior to E
};

/// Exact integration: roots of f inside E split it into sign-constant
/// pieces; each piece integrates the monomial antiderivative exactly.
L1Report l1_norm(const MonicPolynomial& f, const TwoIntervalSet& set);

/// Same engine on a raw coefficient vector (no monic normalization).
double l1_norm_raw(std::span<const double> coeffs, const TwoIntervalSet& set);

/// Transfinite diameter of E,
///   tau = 1/2 [Theta(0) Theta1(0) / (Theta(rho) Theta1(rho))]^2.
double transfinite_diameter(const EllipticFrame& frame);

/// The closed-form minimal value of a degenerate frame: B = tau^{2m+2}/(2m+2)
/// computed through both published forms (cross-asserted), value = 4 B (2m+2).
struct ClosedFormValue {
  double tau;
  double Bcoef;
  double value;
  int m;
};

ClosedFormValue closed_form_degenerate_value(int m, const EllipticFrame& frame);

/// Relative discrepancy between the weighted sup of the canonical degenerate
/// member over E and half its L1 value (an exact identity; the discrepancy
/// measures only grid and synthesis error).
double bernstein_degenerate_check(const DegenerateFamily& family,
                                  const EllipticFrame& frame);

/// Asymptotic estimate of the minimal value for degree 2m+1,
///   (1/2^{2m}) [Theta(0) Theta1(0) / (Theta(rho) Theta1(rho))]^{4(m+1)}.
/// Exact at ladder rungs; between consecutive rungs it is only an estimate.
double asymptotic_G(int m, const EllipticFrame& frame);

} // namespace akhiezer

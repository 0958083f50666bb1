#pragma once

#include "akhiezer/elliptic.hpp"

#include <complex>

namespace akhiezer {

/// Nome q = exp(-pi K'/K) together with the quarter periods it came from.
struct Nome {
  double q;
  double K;
  double Kprime;

  static Nome from_periods(const QuarterPeriods& periods);
  static Nome from_modulus(const Modulus& mod);
};

/// A theta-series value with an a-posteriori geometric tail bound.
struct ThetaValue {
  std::complex<double> value;
  double truncation_bound;
};

// The four Jacobi theta functions in the classical H/Theta convention,
// z = pi u / (2K):
//   H  ~ theta_1 (odd),      H1 ~ theta_2 (even),
//   Theta ~ theta_4 (even),  Theta1 ~ theta_3 (even).
// Arguments are reduced by (quasi-)periodicity before summation, so any
// finite complex u is accepted.
ThetaValue theta_H(std::complex<double> u, const Nome& nome);
ThetaValue theta_H1(std::complex<double> u, const Nome& nome);
ThetaValue theta_Theta(std::complex<double> u, const Nome& nome);
ThetaValue theta_Theta1(std::complex<double> u, const Nome& nome);

// Real-argument fast paths (values are real on the real axis).
double theta_H(double u, const Nome& nome);
double theta_H1(double u, const Nome& nome);
double theta_Theta(double u, const Nome& nome);
double theta_Theta1(double u, const Nome& nome);

/// Theta'(u)/Theta(u) for real u, by the term-wise differentiated q-series
/// over the series itself. Theta has no real zeros, so this is total.
double theta_Theta_logderiv(double u, const Nome& nome);

} // namespace akhiezer

#pragma once

#include <complex>

namespace akhiezer {

/// Elliptic modulus k with cached k^2 and complementary modulus.
///
/// Valid range is [1e-12, 1 - 1e-12]; values closer to the endpoints are
/// rejected rather than approximated.
struct Modulus {
  double k;
  double k2;
  double kprime;

  static Modulus from_k(double k);
  static Modulus from_k2(double k2);
};

/// Complete elliptic integrals K(k) and K(k') for a modulus.
struct QuarterPeriods {
  double K;
  double Kprime;
};

/// K(k) by the arithmetic-geometric mean, K = pi / (2 agm(1, k')).
/// Quadratic convergence; relative error <= 1e-14 on (0, 1).
double complete_K(double k);

QuarterPeriods quarter_periods(const Modulus& mod);

struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

struct ComplexJacobiValues {
  std::complex<double> sn;
  std::complex<double> cn;
  std::complex<double> dn;
};

/// sn, cn, dn at real argument by descending Landen transformation to a
/// negligible modulus followed by the trigonometric closed form.
JacobiValues jacobi_sn_cn_dn(double u, const Modulus& mod);

/// Complex argument via the addition theorem on real and imaginary parts.
/// Throws NumericalError when u is within 1e-10 of a pole (u = iK' mod periods).
ComplexJacobiValues jacobi_sn_cn_dn(std::complex<double> u, const Modulus& mod);

/// Inverse of sn on [0, K]: returns u with sn(u, k) = s for s in [0, 1].
/// Monotone bisection with Newton polish.
double inverse_sn(double s, const Modulus& mod);

} // namespace akhiezer

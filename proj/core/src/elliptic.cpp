#include "akhiezer/elliptic.hpp"
#include "akhiezer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace akhiezer {

namespace {

constexpr double kModulusMargin = 1e-12;
constexpr int kAgmCap = 40;
constexpr int kLandenCap = 32;
constexpr double kAbsTol = 1e-15;

} // namespace

Modulus Modulus::from_k(double k) {
  if (!std::isfinite(k) || k < kModulusMargin || k > 1.0 - kModulusMargin)
    throw DomainError("Modulus::from_k: k = " + std::to_string(k) +
                      " outside [1e-12, 1 - 1e-12]");
  // k'^2 = (1-k)(1+k) avoids cancellation near k = 1.
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  return Modulus{k, k * k, kp};
}

Modulus Modulus::from_k2(double k2) {
  if (!std::isfinite(k2) || k2 <= 0.0 || k2 >= 1.0)
    throw DomainError("Modulus::from_k2: k^2 outside (0, 1)");
  return from_k(std::sqrt(k2));
}

double complete_K(double k) {
  if (!std::isfinite(k) || k <= 0.0 || k >= 1.0)
    throw DomainError("complete_K: k outside (0, 1)");
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  double a = 1.0;
  double b = kp;
  for (int i = 0; i < kAgmCap; ++i) {
    if (std::abs(a - b) <= kAbsTol * a)
      return M_PI / (a + b); // pi / (2 agm)
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  throw NumericalError("complete_K: AGM did not converge within 40 iterations");
}

QuarterPeriods quarter_periods(const Modulus& mod) {
  return QuarterPeriods{complete_K(mod.k), complete_K(mod.kprime)};
}

namespace {

// Descending Landen ladder k -> k1 -> ... until the modulus is negligible.
struct LandenLadder {
  double ks[kLandenCap];
  int depth;
};

LandenLadder landen_ladder(double k) {
  LandenLadder lad{};
  lad.depth = 0;
  double kc = k;
  while (kc > 1e-10) {
    if (lad.depth >= kLandenCap)
      throw NumericalError("jacobi_sn_cn_dn: Landen depth cap exceeded");
    const double kp = std::sqrt((1.0 - kc) * (1.0 + kc));
    kc = (1.0 - kp) / (1.0 + kp);
    lad.ks[lad.depth++] = kc;
  }
  return lad;
}

JacobiValues jacobi_real(double u, const Modulus& mod) {
  // Reduce by the real period 4K first; the ladder then works on a bounded
  // argument and the terminal sin/cos see no large-angle loss.
  const double K = complete_K(mod.k);
  u = std::remainder(u, 4.0 * K);

  const LandenLadder lad = landen_ladder(mod.k);
  double scale = 1.0;
  for (int i = 0; i < lad.depth; ++i) scale *= 1.0 + lad.ks[i];
  double v = u / scale;

  // At the bottom of the ladder k ~ 1e-10, so sn = sin to ~1e-21.
  double sn = std::sin(v);
  double cn = std::cos(v);
  double dn = 1.0;
  // Ascend: Gauss transformation with modulus k_{i+1}.
  for (int i = lad.depth - 1; i >= 0; --i) {
    const double kk = lad.ks[i];
    const double den = 1.0 + kk * sn * sn;
    const double snn = (1.0 + kk) * sn / den;
    const double cnn = cn * dn / den;
    const double dnn = (1.0 - kk * sn * sn) / den;
    sn = snn;
    cn = cnn;
    dn = dnn;
  }
  return JacobiValues{sn, cn, dn};
}

} // namespace

JacobiValues jacobi_sn_cn_dn(double u, const Modulus& mod) {
  if (!std::isfinite(u)) throw DomainError("jacobi_sn_cn_dn: non-finite argument");
  return jacobi_real(u, mod);
}

ComplexJacobiValues jacobi_sn_cn_dn(std::complex<double> u, const Modulus& mod) {
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag()))
    throw DomainError("jacobi_sn_cn_dn: non-finite argument");
  if (u.imag() == 0.0) {
    const JacobiValues r = jacobi_real(u.real(), mod);
    return ComplexJacobiValues{r.sn, r.cn, r.dn};
  }
  const double K = complete_K(mod.k);
  const double Kp = complete_K(mod.kprime);

  // Pole lattice: u = iK' (mod 2K, 2iK').
  const double dx = std::remainder(u.real(), 2.0 * K);
  const double dy = std::remainder(u.imag() - Kp, 2.0 * Kp);
  if (std::hypot(dx, dy) < 1e-10)
    throw NumericalError("jacobi_sn_cn_dn: argument within 1e-10 of a pole");

  const Modulus comp = Modulus::from_k(mod.kprime);
  const JacobiValues a = jacobi_real(u.real(), mod);
  const JacobiValues b = jacobi_real(u.imag(), comp);

  // Jacobi's imaginary-argument addition (A&S 16.21).
  const double den = b.cn * b.cn + mod.k2 * a.sn * a.sn * b.sn * b.sn;
  const std::complex<double> I(0.0, 1.0);
  const std::complex<double> sn = (a.sn * b.dn + I * a.cn * a.dn * b.sn * b.cn) / den;
  const std::complex<double> cn = (a.cn * b.cn - I * a.sn * a.dn * b.sn * b.dn) / den;
  const std::complex<double> dn =
      (a.dn * b.cn * b.dn - I * mod.k2 * a.sn * a.cn * b.sn) / den;
  return ComplexJacobiValues{sn, cn, dn};
}

double inverse_sn(double s, const Modulus& mod) {
  if (!std::isfinite(s) || s < 0.0 || s > 1.0)
    throw DomainError("inverse_sn: s outside [0, 1]");
  const double K = complete_K(mod.k);
  if (s == 0.0) return 0.0;
  if (s == 1.0) return K;

  // sn is strictly increasing on [0, K]; bracket, then bisect.
  double lo = 0.0, hi = K;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (jacobi_real(mid, mod).sn < s)
      lo = mid;
    else
      hi = mid;
  }
  double u = 0.5 * (lo + hi);
  // Newton polish: d sn/du = cn dn, bounded away from 0 in the interior.
  for (int i = 0; i < 3; ++i) {
    const JacobiValues j = jacobi_real(u, mod);
    const double deriv = j.cn * j.dn;
    if (deriv <= 1e-12) break;
    u -= (j.sn - s) / deriv;
    u = std::clamp(u, 0.0, K);
  }
  return u;
}

} // namespace akhiezer

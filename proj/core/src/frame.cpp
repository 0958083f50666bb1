#include "akhiezer/frame.hpp"
#include "akhiezer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace akhiezer {

TwoIntervalSet TwoIntervalSet::checked(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(-1.0 < alpha) ||
      !(alpha < beta) || !(beta < 1.0))
    throw DomainError("TwoIntervalSet: need -1 < alpha < beta < 1");
  return TwoIntervalSet{alpha, beta};
}

EllipticFrame build_frame(const TwoIntervalSet& set) {
  const TwoIntervalSet checked = TwoIntervalSet::checked(set.alpha, set.beta);
  const double k2 =
      2.0 * (checked.beta - checked.alpha) / ((1.0 - checked.alpha) * (1.0 + checked.beta));
  if (!(k2 > 1e-24) || !(k2 < 1.0 - 1e-12))
    throw DomainError("build_frame: modulus outside the admissible band");
  const Modulus mod = Modulus::from_k2(k2);
  const QuarterPeriods periods = quarter_periods(mod);
  const Nome nome = Nome::from_periods(periods);
  const double rho = inverse_sn(std::sqrt((1.0 - checked.alpha) / 2.0), mod);
  const JacobiValues at_rho = jacobi_sn_cn_dn(rho, mod);

  // Self-consistency residuals of the parameterization.
  const double alpha_back = 1.0 - 2.0 * at_rho.sn * at_rho.sn;
  const double beta_back = 2.0 * at_rho.cn * at_rho.cn / (at_rho.dn * at_rho.dn) - 1.0;
  if (std::abs(alpha_back - checked.alpha) > 1e-12 ||
      std::abs(beta_back - checked.beta) > 1e-12)
    throw NumericalError("build_frame: parameterization residual exceeds 1e-12");

  return EllipticFrame{checked, mod, periods, nome, rho, at_rho};
}

std::complex<double> map_x(std::complex<double> u, const EllipticFrame& frame) {
  const double sr2 = frame.at_rho.sn * frame.at_rho.sn;
  const double cr2 = frame.at_rho.cn * frame.at_rho.cn;

  // Poles of x sit at u = +-rho (mod 2K, 2iK').
  const double twoK = 2.0 * frame.periods.K;
  const double twoKp = 2.0 * frame.periods.Kprime;
  for (double pole : {frame.rho, -frame.rho}) {
    const double dx = std::remainder(u.real() - pole, twoK);
    const double dy = std::remainder(u.imag(), twoKp);
    if (std::hypot(dx, dy) < 1e-10)
      throw NumericalError("map_x: argument within 1e-10 of a pole of x(u)");
  }

  // Near the sn pole at u = iK' (a removable point of x, where x = alpha)
  // evaluate through the shifted identities 1/sn^2 u = k^2 sn^2 v and
  // cn^2 u / sn^2 u = -dn^2 v with v = u - iK'.
  {
    const double vx = std::remainder(u.real(), twoK);
    const double vy = std::remainder(u.imag() - frame.periods.Kprime, twoKp);
    if (std::hypot(vx, vy) <
        0.05 * std::min(frame.periods.K, frame.periods.Kprime)) {
      const ComplexJacobiValues jv =
          jacobi_sn_cn_dn(std::complex<double>(vx, vy), frame.mod);
      const std::complex<double> sn2v = jv.sn * jv.sn;
      const std::complex<double> dn2v = jv.dn * jv.dn;
      return (cr2 - dn2v * sr2) / (1.0 - sr2 * frame.mod.k2 * sn2v);
    }
  }

  const ComplexJacobiValues j = jacobi_sn_cn_dn(u, frame.mod);
  const std::complex<double> sn2 = j.sn * j.sn;
  const std::complex<double> cn2 = j.cn * j.cn;
  return (sn2 * cr2 + cn2 * sr2) / (sn2 - sr2);
}

std::complex<double> inverse_map(double x, const EllipticFrame& frame, Sheet sheet) {
  if (!std::isfinite(x)) throw DomainError("inverse_map: non-finite x");
  const double alpha = frame.set.alpha;
  const double beta = frame.set.beta;
  const double sr2 = frame.at_rho.sn * frame.at_rho.sn;
  const double K = frame.periods.K;
  const double Kp = frame.periods.Kprime;

  std::complex<double> u;
  if (x >= 1.0 || x <= -1.0) {
    // Real segment: sn^2 u = sn^2 rho (x+1)/(x-alpha) lands in [0, 1].
    const double s2 = sr2 * (x + 1.0) / (x - alpha);
    const double s = std::sqrt(std::clamp(s2, 0.0, 1.0));
    u = inverse_sn(s, frame.mod);
  } else if (x <= alpha) {
    // Left edge u = it: sn^2(t, k') / cn^2(t, k') = sn^2 rho (x+1)/(alpha-x).
    const Modulus comp = Modulus::from_k(frame.mod.kprime);
    double t;
    if (alpha - x < 1e-300) {
      t = Kp;
    } else {
      const double w = sr2 * (x + 1.0) / (alpha - x);
      t = inverse_sn(std::sqrt(w / (1.0 + w)), comp);
    }
    u = std::complex<double>(0.0, t);
  } else if (x >= beta) {
    // Right edge u = K + it: dn^2(t, k') = (x - alpha) / (sn^2 rho (x+1)).
    const Modulus comp = Modulus::from_k(frame.mod.kprime);
    const double D = (x - alpha) / (sr2 * (x + 1.0));
    const double s2 = std::clamp((1.0 - D) / (comp.k2), 0.0, 1.0);
    const double t = inverse_sn(std::sqrt(s2), comp);
    u = std::complex<double>(K, t);
  } else {
    // Open gap maps to the top edge u = s + iK':
    // sn^2 u = 1/(k^2 sn^2 s) = sn^2 rho (x+1)/(x-alpha).
    const double s2 = (x - alpha) / (frame.mod.k2 * sr2 * (x + 1.0));
    const double s = inverse_sn(std::sqrt(std::clamp(s2, 0.0, 1.0)), frame.mod);
    u = std::complex<double>(s, Kp);
  }

  // Newton polish on the residual map_x(u) - x along the segment direction
  // is unnecessary: the closed-form reduction already hits 1e-12 level.
  if (sheet == Sheet::Lower) u = -u;
  return u;
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::ThetaPair: return "theta";
    case Branch::Theta1Pair: return "theta1";
    case Branch::Degenerate: return "degenerate";
  }
  return "?";
}

PeriodDecomposition decompose_rho_multiple(int multiplier, const EllipticFrame& frame) {
  const double t = double(multiplier) * frame.rho / frame.periods.K;
  int p = static_cast<int>(std::floor(t));
  double sigma = (t - p) * frame.periods.K;
  if (sigma < 0.0) sigma = 0.0;
  return PeriodDecomposition{p, sigma};
}

CaseSelection classify_case(int m, const EllipticFrame& frame) {
  if (m < 0) throw DomainError("classify_case: m must be >= 0");
  const double K = frame.periods.K;
  PeriodDecomposition d = decompose_rho_multiple(2 * m + 2, frame);
  if (K - d.sigma < kDegenerateSigmaTol * K) {
    // sigma = K tie folds into (p+1, 0).
    d.p += 1;
    d.sigma = 0.0;
  }
  Branch branch;
  if (d.sigma < kDegenerateSigmaTol * K)
    branch = Branch::Degenerate;
  else
    branch = (d.p % 2 != 0) ? Branch::ThetaPair : Branch::Theta1Pair;
  return CaseSelection{m, d.p, d.sigma, branch};
}

std::vector<double> BetaLadder::betas_with_sentinel() const {
  std::vector<double> out{1.0};
  for (const Rung& r : rungs) out.push_back(r.beta);
  return out;
}

namespace {

// sn(p K(k)/(2m+2), k)^2 as a function of k; strictly increasing from
// sin^2(p pi/(4m+4)) at k -> 0 toward 1 at k -> 1.
double rung_objective(double k, int p, int m) {
  const Modulus mod = Modulus::from_k(k);
  const double K = complete_K(k);
  const double u = double(p) * K / double(2 * m + 2);
  const double sn = jacobi_sn_cn_dn(u, mod).sn;
  return sn * sn;
}

} // namespace

BetaLadder beta_ladder(double alpha, int m) {
  if (!std::isfinite(alpha) || !(-1.0 < alpha) || !(alpha < 1.0))
    throw DomainError("beta_ladder: alpha outside (-1, 1)");
  if (m < 0) throw DomainError("beta_ladder: m must be >= 0");

  BetaLadder ladder{alpha, m, {}};
  const double target = (1.0 - alpha) / 2.0; // sn^2 rho
  const double klo = 1e-12, khi = 1.0 - 1e-12;
  for (int p = 1; p <= 2 * m + 1; ++p) {
    // Existence: sin^2(p pi/(4m+4)) < (1-alpha)/2, i.e. cos(p pi/(2m+2)) > alpha.
    if (!(std::cos(double(p) * M_PI / double(2 * m + 2)) > alpha)) break;
    double lo = klo, hi = khi;
    if (rung_objective(hi, p, m) < target) break; // no bracket (can only happen by rounding)
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (rung_objective(mid, p, m) < target)
        lo = mid;
      else
        hi = mid;
    }
    const double k = 0.5 * (lo + hi);
    const double k2 = k * k;
    // Eq-level inversion of the modulus relation: beta from (alpha, k).
    const double beta = (2.0 * alpha + k2 * (1.0 - alpha)) / (2.0 - k2 * (1.0 - alpha));
    if (!(beta > alpha && beta < 1.0)) break;
    ladder.rungs.push_back(BetaLadder::Rung{p, beta, k});
  }
  // Strictly decreasing in p by construction; enforce as an invariant.
  for (std::size_t i = 1; i < ladder.rungs.size(); ++i)
    if (!(ladder.rungs[i].beta < ladder.rungs[i - 1].beta))
      throw NumericalError("beta_ladder: rungs not strictly decreasing");
  return ladder;
}

} // namespace akhiezer

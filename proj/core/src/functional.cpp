#include "akhiezer/functional.hpp"
#include "akhiezer/errors.hpp"

#include <algorithm>
#include <cmath>

namespace akhiezer {

namespace {

// Sign-change roots of a raw polynomial within [lo, hi].
std::vector<double> scan_roots(std::span<const double> c, double lo, double hi) {
  const int n = std::max<int>(1, int(c.size()) - 1);
  const int pts = std::max(129, 16 * n + 1);
  std::vector<double> roots;
  double x0 = lo, f0 = poly::eval(c, lo);
  for (int i = 1; i < pts; ++i) {
    const double x1 = lo + (hi - lo) * double(i) / double(pts - 1);
    const double f1 = poly::eval(c, x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if (f0 * f1 < 0.0) {
      double a = x0, b = x1, fa = f0;
      for (int it = 0; it < 60 && (b - a) > 1e-14; ++it) {
        const double mid = 0.5 * (a + b), fm = poly::eval(c, mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (fa * fm < 0.0)
          b = mid;
        else {
          a = mid;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

struct PieceIntegral {
  double total;
  std::vector<int> signs;
  std::vector<double> splits;
};

PieceIntegral integrate_abs(std::span<const double> c, const TwoIntervalSet& set) {
  PieceIntegral out{0.0, {}, {}};
  for (const auto& [lo, hi] : {std::pair{-1.0, set.alpha}, std::pair{set.beta, 1.0}}) {
    std::vector<double> pts{lo};
    for (double r : scan_roots(c, lo, hi))
      if (r > lo + 1e-15 && r < hi - 1e-15) {
        pts.push_back(r);
        out.splits.push_back(r);
      }
    pts.push_back(hi);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double mid = 0.5 * (pts[i] + pts[i + 1]);
      const int sign = poly::eval(c, mid) >= 0.0 ? 1 : -1;
      out.signs.push_back(sign);
      out.total += sign * poly::integrate(c, pts[i], pts[i + 1]);
    }
  }
  return out;
}

} // namespace

L1Report l1_norm(const MonicPolynomial& f, const TwoIntervalSet& set) {
  const PieceIntegral pi = integrate_abs(f.coefficients(), set);
  return L1Report{pi.total, pi.signs, pi.splits};
}

double l1_norm_raw(std::span<const double> coeffs, const TwoIntervalSet& set) {
  return integrate_abs(coeffs, set).total;
}

double transfinite_diameter(const EllipticFrame& frame) {
  const double r = theta_Theta(0.0, frame.nome) * theta_Theta1(0.0, frame.nome) /
                   (theta_Theta(frame.rho, frame.nome) * theta_Theta1(frame.rho, frame.nome));
  return 0.5 * r * r;
}

ClosedFormValue closed_form_degenerate_value(int m, const EllipticFrame& frame) {
  if (m < 0) throw DomainError("closed_form_degenerate_value: m must be >= 0");
  const double tau = transfinite_diameter(frame);
  // Form one: theta quotient to the power 4m+4 over (2m+2) 4^{m+1}.
  const double r = theta_Theta(0.0, frame.nome) * theta_Theta1(0.0, frame.nome) /
                   (theta_Theta(frame.rho, frame.nome) * theta_Theta1(frame.rho, frame.nome));
  double pow_r = 1.0;
  for (int i = 0; i < 4 * m + 4; ++i) pow_r *= r;
  const double form1 = pow_r / (double(2 * m + 2) * std::pow(4.0, m + 1));
  // Form two: tau^{2m+2} / (2m+2).
  double pow_tau = 1.0;
  for (int i = 0; i < 2 * m + 2; ++i) pow_tau *= tau;
  const double form2 = pow_tau / double(2 * m + 2);
  if (std::abs(form1 - form2) > 1e-11 * std::abs(form2))
    throw NumericalError("closed_form_degenerate_value: the two forms of B disagree");
  return ClosedFormValue{tau, form2, 4.0 * form2 * double(2 * m + 2), m};
}

double bernstein_degenerate_check(const DegenerateFamily& family,
                                  const EllipticFrame& frame) {
  const double a = frame.set.alpha, b = frame.set.beta;
  const int m = (family.phi.degree()) / 2;
  const double target = 2.0 * family.Bcoef * double(2 * m + 2); // value / 2

  // sup over E of |f0(x)| sqrt((1-x^2)(alpha-x)(beta-x)) / |x - gamma|;
  // f0/(x-gamma) = phi keeps the evaluation regular at gamma.
  double sup = 0.0;
  constexpr int kGrid = 4096;
  for (const auto& [lo, hi] : {std::pair{-1.0, a}, std::pair{b, 1.0}}) {
    for (int i = 0; i < kGrid; ++i) {
      const double x = lo + (hi - lo) * double(i) / double(kGrid - 1);
      const double w2 = (1.0 - x * x) * (a - x) * (b - x);
      const double v = std::abs(family.phi(x)) * std::sqrt(std::max(0.0, w2));
      sup = std::max(sup, v);
    }
  }
  return std::abs(sup - target) / target;
}

double asymptotic_G(int m, const EllipticFrame& frame) {
  if (m < 0) throw DomainError("asymptotic_G: m must be >= 0");
  const double r = theta_Theta(0.0, frame.nome) * theta_Theta1(0.0, frame.nome) /
                   (theta_Theta(frame.rho, frame.nome) * theta_Theta1(frame.rho, frame.nome));
  double pow_r = 1.0;
  for (int i = 0; i < 4 * (m + 1); ++i) pow_r *= r;
  return pow_r / std::pow(2.0, 2 * m);
}

} // namespace akhiezer

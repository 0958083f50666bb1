#include "akhiezer/synthesis.hpp"
#include "akhiezer/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <string>

namespace akhiezer {

namespace {

constexpr double kPellTol = 1e-9;     // scaled excess acceptance
constexpr double kFitTol = 1e-9;      // held-out validation, relative
constexpr double kRootRefineTol = 1e-13;

double ipow(double base, int e) {
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

// ---------------------------------------------------------------------------
// Sampling and interpolation machinery.

struct SampleSet {
  std::vector<double> fit_x, held_x;
};

// Chebyshev-distributed nodes on [-3, -1-margin] u [1+margin, 3]; the fitted
// expressions are manifestly real there and the nodes keep clear of the pole
// of x(u) at u = rho.
SampleSet make_nodes(int count_per_side) {
  constexpr double kInner = 1.05, kOuter = 3.0;
  SampleSet s;
  const auto cheb = [](int j, int n) {
    return std::cos(M_PI * (2.0 * j + 1.0) / (2.0 * n));
  };
  const double mid = 0.5 * (kInner + kOuter), half = 0.5 * (kOuter - kInner);
  for (int j = 0; j < count_per_side; ++j) {
    const double xr = mid + half * cheb(j, count_per_side);
    s.fit_x.push_back(xr);
    s.fit_x.push_back(-xr);
  }
  const int held = count_per_side + 2;
  for (int j = 0; j < held; ++j) {
    const double xr = mid + half * std::cos(M_PI * double(j + 1) / double(held + 1));
    s.held_x.push_back(xr);
    s.held_x.push_back(-xr);
  }
  return s;
}

// Chebyshev basis of [-3, 3]: column j holds T_j(x/3).
Eigen::MatrixXd cheb_design(const std::vector<double>& xs, int degree) {
  Eigen::MatrixXd A(xs.size(), degree + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double t = xs[i] / 3.0;
    double tm = 1.0, tc = t;
    for (int j = 0; j <= degree; ++j) {
      if (j == 0)
        A(i, j) = 1.0;
      else if (j == 1)
        A(i, j) = t;
      else {
        const double tn = 2.0 * t * tc - tm;
        tm = tc;
        tc = tn;
        A(i, j) = tn;
      }
    }
  }
  return A;
}

// Chebyshev-of-(x/3) coefficients -> monomial coefficients in x.
std::vector<double> cheb_to_monomial(const Eigen::VectorXd& c) {
  const int deg = int(c.size()) - 1;
  std::vector<std::vector<double>> T(deg + 1);
  T[0] = {1.0};
  if (deg >= 1) T[1] = {0.0, 1.0 / 3.0};
  for (int j = 2; j <= deg; ++j) {
    T[j].assign(j + 1, 0.0);
    for (int i = 0; i < int(T[j - 1].size()); ++i) T[j][i + 1] += 2.0 / 3.0 * T[j - 1][i];
    for (int i = 0; i < int(T[j - 2].size()); ++i) T[j][i] -= T[j - 2][i];
  }
  std::vector<double> mono(deg + 1, 0.0);
  for (int j = 0; j <= deg; ++j)
    for (int i = 0; i < int(T[j].size()); ++i) mono[i] += c[j] * T[j][i];
  return mono;
}

// Least-squares fit of an exact-degree polynomial with held-out validation.
std::vector<double> fit_polynomial(const std::vector<double>& xs,
                                   const std::vector<double>& ys, int degree,
                                   const std::vector<double>& held_x,
                                   const std::vector<double>& held_y) {
  const Eigen::MatrixXd A = cheb_design(xs, degree);
  Eigen::VectorXd b(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) b(i) = ys[i];
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
  const std::vector<double> mono = cheb_to_monomial(c);

  double scale = 1.0;
  for (double y : held_y) scale = std::max(scale, std::abs(y));
  for (std::size_t i = 0; i < held_x.size(); ++i) {
    const double r = std::abs(poly::eval(mono, held_x[i]) - held_y[i]);
    if (!(r <= kFitTol * scale))
      throw NumericalError("synthesis: interpolation failed held-out validation "
                           "(residual " + std::to_string(r / scale) + ")");
  }
  return mono;
}

// ---------------------------------------------------------------------------
// Theta-quotient evaluation.

struct ThetaRatios {
  // [H(rho-u)/H(rho+u)]^pw and its reciprocal, and T(u+-R)/T(u) for the
  // branch's theta label.
  double wm, wp;
};

double theta_of(Branch branch, bool swap_labels, double u, const Nome& nome) {
  const bool use_Theta = (branch == Branch::ThetaPair) != swap_labels;
  return use_Theta ? theta_Theta(u, nome) : theta_Theta1(u, nome);
}

ThetaRatios eval_ratios(double u, double R, int pw, Branch branch, bool swap_labels,
                        const EllipticFrame& fr) {
  const double rho = fr.rho;
  const double h_ratio = theta_H(rho - u, fr.nome) / theta_H(rho + u, fr.nome);
  const double t0 = theta_of(branch, swap_labels, u, fr.nome);
  ThetaRatios r;
  r.wm = ipow(h_ratio, pw) * theta_of(branch, swap_labels, u + R, fr.nome) / t0;
  r.wp = ipow(1.0 / h_ratio, pw) * theta_of(branch, swap_labels, u - R, fr.nome) / t0;
  return r;
}

// u(x) on the real preimage segments: sn^2 u = sn^2 rho (x+1)/(x-alpha).
double u_of_real_x(double x, const EllipticFrame& fr) {
  const double sr2 = fr.at_rho.sn * fr.at_rho.sn;
  const double s2 = sr2 * (x + 1.0) / (x - fr.set.alpha);
  return inverse_sn(std::sqrt(std::clamp(s2, 0.0, 1.0)), fr.mod);
}

// sqrt(minor/major) prefactor with the analytic-continuation sign: negative
// on x < -1, positive on x > 1. sign_choice flips the left-region sign when
// the primary choice fails validation.
double sqrt_prefactor(double minor, double major, double x, bool flip_left) {
  const double s = std::sqrt(minor / major);
  if (x < -1.0) return flip_left ? s : -s;
  return s;
}

std::vector<double> pell_major(const TwoIntervalSet& set, Branch branch) {
  const double inner = (branch == Branch::ThetaPair) ? set.beta : set.alpha;
  // (x+1)(x-inner)(x-1) = x^3 - inner x^2 - x + inner
  return {inner, -1.0, -inner, 1.0};
}

std::vector<double> pell_minor(const TwoIntervalSet& set, Branch branch) {
  const double inner = (branch == Branch::ThetaPair) ? set.alpha : set.beta;
  return {-inner, 1.0};
}

PellResidual residual_of(const std::vector<double>& lhs1, const std::vector<double>& lhs2) {
  double scale = 0.0;
  for (double v : lhs1) scale = std::max(scale, std::abs(v));
  for (double v : lhs2) scale = std::max(scale, std::abs(v));
  std::vector<double> diff(std::max(lhs1.size(), lhs2.size()), 0.0);
  for (std::size_t i = 0; i < lhs1.size(); ++i) diff[i] += lhs1[i];
  for (std::size_t i = 0; i < lhs2.size(); ++i) diff[i] -= lhs2[i];
  double excess = 0.0;
  for (std::size_t i = 2; i < diff.size(); ++i) excess = std::max(excess, std::abs(diff[i]));
  return PellResidual{diff.size() > 1 ? diff[1] : 0.0, diff.empty() ? 0.0 : diff[0],
                      excess, scale};
}

FactorPair synthesize_odd_attempt(int m, const EllipticFrame& fr, const CaseSelection& sel,
                                  bool swap_labels, bool flip_left) {
  const double R = double(2 * m + 2) * fr.rho;
  const auto minor = pell_minor(fr.set, sel.branch);
  const auto major = pell_major(fr.set, sel.branch);

  const SampleSet nodes = make_nodes(m + 3); // 2(m+3) >= 2(m+2) fit nodes
  auto sample = [&](const std::vector<double>& xs, std::vector<double>& V_out,
                    std::vector<double>& U_out) {
    for (double x : xs) {
      const double u = u_of_real_x(x, fr);
      const ThetaRatios w = eval_ratios(u, R, m + 1, sel.branch, swap_labels, fr);
      const double S = sqrt_prefactor(poly::eval(minor, x), poly::eval(major, x), x,
                                      flip_left);
      V_out.push_back(0.5 * (w.wp + w.wm));
      U_out.push_back(0.5 * (w.wp - w.wm) * S);
    }
  };
  std::vector<double> Vf, Uf, Vh, Uh;
  sample(nodes.fit_x, Vf, Uf);
  sample(nodes.held_x, Vh, Uh);

  const auto Vc = fit_polynomial(nodes.fit_x, Vf, m + 1, nodes.held_x, Vh);
  const auto Uc = fit_polynomial(nodes.fit_x, Uf, m, nodes.held_x, Uh);
  return FactorPair{MonicPolynomial::from_coefficients(Uc),
                    MonicPolynomial::from_coefficients(Vc), sel.branch};
}

} // namespace

PellResidual pell_residual_odd(const FactorPair& pair, const TwoIntervalSet& set) {
  const auto lhs1 = poly::multiply(pell_major(set, pair.branch),
                                   poly::multiply(pair.U.coefficients(), pair.U.coefficients()));
  const auto lhs2 = poly::multiply(pell_minor(set, pair.branch),
                                   poly::multiply(pair.V.coefficients(), pair.V.coefficients()));
  return residual_of(lhs1, lhs2);
}

PellResidual pell_residual_even(const MonicPolynomial& P, const MonicPolynomial& Q,
                                const TwoIntervalSet& set, EvenPellGrouping grouping) {
  const double a = set.alpha, b = set.beta;
  const std::vector<double> x_plus1{1.0, 1.0}, x_minus1{-1.0, 1.0};
  const std::vector<double> x_minus_a{-a, 1.0}, x_minus_b{-b, 1.0};
  std::vector<double> majP, majQ;
  if (grouping == EvenPellGrouping::A) {
    majP = poly::multiply(x_plus1, x_minus_b);
    majQ = poly::multiply(x_minus_a, x_minus1);
  } else {
    majP = poly::multiply(x_plus1, x_minus_a);
    majQ = poly::multiply(x_minus_b, x_minus1);
  }
  const auto lhs1 = poly::multiply(majP, poly::multiply(P.coefficients(), P.coefficients()));
  const auto lhs2 = poly::multiply(majQ, poly::multiply(Q.coefficients(), Q.coefficients()));
  return residual_of(lhs1, lhs2);
}

FactorPair synthesize_odd(int m, const EllipticFrame& frame, const CaseSelection& sel) {
  if (sel.branch == Branch::Degenerate)
    throw DomainError("synthesize_odd: degenerate case must use synthesize_degenerate");
  if (m < 0) throw DomainError("synthesize_odd: m must be >= 0");

  std::string failure;
  // Deterministic retry order: primary sign, then flipped sign, each under
  // both theta labelings.
  for (bool swap_labels : {false, true}) {
    for (bool flip_left : {false, true}) {
      try {
        FactorPair pair = synthesize_odd_attempt(m, frame, sel, swap_labels, flip_left);
        const PellResidual res = pell_residual_odd(pair, frame.set);
        if (res.scaled() <= kPellTol) return pair;
        failure = "scaled Pell excess " + std::to_string(res.scaled());
      } catch (const NumericalError& e) {
        failure = e.what();
      }
    }
  }
  throw NumericalError("synthesize_odd: no theta labeling satisfied the Pell "
                       "identity (" + failure + ")");
}

bool even_case_near_degenerate(int m, const EllipticFrame& frame) {
  const PeriodDecomposition d = decompose_rho_multiple(2 * m + 1, frame);
  const double K = frame.periods.K;
  return std::min(d.sigma, K - d.sigma) < kDegenerateSigmaTol * K;
}

namespace {

MonicPolynomial synthesize_even_attempt(int m, const EllipticFrame& fr, bool p_even,
                                        bool swap_labels, bool flip_left) {
  const int n = 2 * m;
  const double R = double(2 * m + 1) * fr.rho;
  const double a = fr.set.alpha, b = fr.set.beta;
  // Prefactor sqrt((x-beta)/((x+1)(x-alpha)(x-1))) for the Theta1^2 form
  // (p even), minor/major swapped for the Theta^2 form.
  const double inner_minor = p_even ? b : a;
  const double inner_major = p_even ? a : b;
  const std::vector<double> minor{-inner_minor, 1.0};
  const std::vector<double> x_plus1{1.0, 1.0}, x_minus1{-1.0, 1.0};
  const std::vector<double> x_minus_inner{-inner_major, 1.0};
  const std::vector<double> major =
      poly::multiply(x_plus1, poly::multiply(x_minus_inner, x_minus1));
  const Branch label = p_even ? Branch::Theta1Pair : Branch::ThetaPair;

  const SampleSet nodes = make_nodes(m + 4);
  auto sample = [&](const std::vector<double>& xs, std::vector<double>& out) {
    for (double x : xs) {
      const double u = u_of_real_x(x, fr);
      const double h_ratio = theta_H(fr.rho - u, fr.nome) / theta_H(fr.rho + u, fr.nome);
      const double t0 = theta_of(label, swap_labels, u, fr.nome);
      const double tp = theta_of(label, swap_labels, u + R, fr.nome);
      const double tm = theta_of(label, swap_labels, u - R, fr.nome);
      const double val = ipow(h_ratio, 2 * m + 1) * (tp * tp) / (t0 * t0) -
                         ipow(1.0 / h_ratio, 2 * m + 1) * (tm * tm) / (t0 * t0);
      const double S = sqrt_prefactor(poly::eval(minor, x), poly::eval(major, x), x,
                                      flip_left);
      out.push_back(S * val);
    }
  };
  std::vector<double> yf, yh;
  sample(nodes.fit_x, yf);
  sample(nodes.held_x, yh);
  const auto c = fit_polynomial(nodes.fit_x, yf, n, nodes.held_x, yh);
  return MonicPolynomial::from_coefficients(c);
}

// Validate an even-degree candidate by recovering the interlaced factor
// polynomials from its zeros and testing both Pell groupings.
PellResidual best_even_residual(const MonicPolynomial& f, const TwoIntervalSet& set,
                                EvenPellGrouping* which) {
  const std::vector<double> zeros = extract_zeros(f, set);
  std::vector<double> odd_indexed, even_indexed; // 1-based xi_1, xi_2, ...
  for (std::size_t i = 0; i < zeros.size(); ++i)
    ((i % 2 == 0) ? odd_indexed : even_indexed).push_back(zeros[i]);
  const MonicPolynomial Q = MonicPolynomial::from_roots(odd_indexed);
  const MonicPolynomial P = MonicPolynomial::from_roots(even_indexed);
  const PellResidual ra = pell_residual_even(P, Q, set, EvenPellGrouping::A);
  const PellResidual rb = pell_residual_even(P, Q, set, EvenPellGrouping::B);
  if (ra.scaled() <= rb.scaled()) {
    if (which) *which = EvenPellGrouping::A;
    return ra;
  }
  if (which) *which = EvenPellGrouping::B;
  return rb;
}

} // namespace

MonicPolynomial synthesize_even(int m, const EllipticFrame& frame) {
  if (m < 1) throw DomainError("synthesize_even: need n = 2m >= 2");
  const PeriodDecomposition d = decompose_rho_multiple(2 * m + 1, frame);
  const bool p_even = (d.p % 2 == 0);

  std::string failure;
  for (bool swap_labels : {false, true}) {
    for (bool flip_left : {false, true}) {
      try {
        MonicPolynomial f = synthesize_even_attempt(m, frame, p_even, swap_labels, flip_left);
        const PellResidual res = best_even_residual(f, frame.set, nullptr);
        if (res.scaled() <= kPellTol) return f;
        failure = "scaled Pell excess " + std::to_string(res.scaled());
        std::fprintf(stderr, "[dbg] even attempt swap=%d flip=%d: %s\n", int(swap_labels), int(flip_left), failure.c_str());
      } catch (const Error& e) {
        failure = e.what();
        std::fprintf(stderr, "[dbg] even attempt swap=%d flip=%d threw: %s\n", int(swap_labels), int(flip_left), failure.c_str());
      }
    }
  }
  throw NumericalError("synthesize_even: no labeling satisfied the Pell identity (" +
                       failure + ")");
}

DegenerateFamily synthesize_degenerate(int m, const EllipticFrame& frame) {
  if (m < 0) throw DomainError("synthesize_degenerate: m must be >= 0");
  const int n = 2 * m + 1;
  const double rho = frame.rho;
  const double a = frame.set.alpha, b = frame.set.beta;

  // gamma = alpha + (2 sn cn / dn)(rho) * Theta'/Theta (rho).
  const double gamma = a + 2.0 * frame.at_rho.sn * frame.at_rho.cn / frame.at_rho.dn *
                               theta_Theta_logderiv(rho, frame.nome);
  if (!(gamma > a && gamma < b))
    throw NumericalError("synthesize_degenerate: gamma escaped the gap");

  const double tau_ratio = theta_Theta(0.0, frame.nome) * theta_Theta1(0.0, frame.nome) /
                           (theta_Theta(rho, frame.nome) * theta_Theta1(rho, frame.nome));
  const double tau = 0.5 * tau_ratio * tau_ratio;
  const double Bcoef = ipow(tau, 2 * m + 2) / double(2 * m + 2);

  const SampleSet nodes = make_nodes(m + 4);
  const std::vector<double> x_plus1{1.0, 1.0}, x_minus1{-1.0, 1.0};
  const std::vector<double> x_minus_a{-a, 1.0}, x_minus_b{-b, 1.0};
  const std::vector<double> major_a =
      poly::multiply(x_plus1, poly::multiply(x_minus_b, x_minus1));
  const std::vector<double> major_b =
      poly::multiply(x_plus1, poly::multiply(x_minus_a, x_minus1));
  auto sample = [&](const std::vector<double>& xs, std::vector<double>& fa,
                    std::vector<double>& fb) {
    for (double x : xs) {
      const double u = u_of_real_x(x, frame);
      const double h_ratio = theta_H(rho - u, frame.nome) / theta_H(rho + u, frame.nome);
      const double braces = ipow(h_ratio, 2 * m + 2) - ipow(1.0 / h_ratio, 2 * m + 2);
      fa.push_back(sqrt_prefactor(x - a, poly::eval(major_a, x), x, false) * braces);
      fb.push_back(sqrt_prefactor(x - b, poly::eval(major_b, x), x, false) * braces);
    }
  };
  std::vector<double> fa_f, fb_f, fa_h, fb_h;
  sample(nodes.fit_x, fa_f, fb_f);
  sample(nodes.held_x, fa_h, fb_h);
  const MonicPolynomial f_alpha = MonicPolynomial::from_coefficients(
      fit_polynomial(nodes.fit_x, fa_f, n, nodes.held_x, fa_h));
  const MonicPolynomial f_beta = MonicPolynomial::from_coefficients(
      fit_polynomial(nodes.fit_x, fb_f, n, nodes.held_x, fb_h));

  // Common factor phi: deflate either endpoint member; cross-check both.
  const MonicPolynomial phi = f_alpha.deflate_root(a);
  const MonicPolynomial phi2 = f_beta.deflate_root(b);
  double phidiff = 0.0, phiscale = 1.0;
  for (int i = 0; i <= phi.degree(); ++i) {
    phidiff = std::max(phidiff,
                       std::abs(phi.coefficients()[i] - phi2.coefficients()[i]));
    phiscale = std::max(phiscale, std::abs(phi.coefficients()[i]));
  }
  if (phidiff > 1e-9 * phiscale)
    throw NumericalError("synthesize_degenerate: endpoint members disagree on the "
                         "common factor");

  const MonicPolynomial f0 = MonicPolynomial::from_coefficients(
      poly::multiply(std::vector<double>{-gamma, 1.0}, phi.coefficients()));
  return DegenerateFamily{gamma, tau, Bcoef, phi, f0, f_alpha, f_beta};
}

std::vector<double> find_real_zeros(const MonicPolynomial& f, double lo, double hi) {
  const int n = std::max(f.degree(), 1);
  std::vector<double> grid;
  const int uniform = 16 * n + 1;
  for (int i = 0; i < uniform; ++i)
    grid.push_back(lo + (hi - lo) * double(i) / double(uniform - 1));
  // Chebyshev-clustered points resolve root clusters near the endpoints.
  for (int i = 1; i < 8 * n; ++i) {
    const double c = std::cos(M_PI * double(i) / double(8 * n));
    grid.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * c);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double x0 = grid[i], x1 = grid[i + 1];
    double f0 = f(x0), f1 = f(x1);
    if (f0 == 0.0) {
      if (roots.empty() || std::abs(roots.back() - x0) > 1e-12) roots.push_back(x0);
      continue;
    }
    if (f0 * f1 > 0.0) continue;
    for (int it = 0; it < 60 && (x1 - x0) > kRootRefineTol; ++it) {
      const double mid = 0.5 * (x0 + x1);
      const double fm = f(mid);
      if (fm == 0.0) {
        x0 = x1 = mid;
        break;
      }
      if (f0 * fm < 0.0) {
        x1 = mid;
        f1 = fm;
      } else {
        x0 = mid;
        f0 = fm;
      }
    }
    const double r = 0.5 * (x0 + x1);
    if (roots.empty() || std::abs(roots.back() - r) > 1e-12) roots.push_back(r);
  }
  return roots;
}

std::vector<double> extract_zeros(const MonicPolynomial& f, const TwoIntervalSet& set) {
  if (f.degree() < 1) throw DomainError("extract_zeros: nonconstant polynomial required");
  constexpr double kDelta = 1e-9;
  const std::vector<double> roots = find_real_zeros(f, -1.0 - kDelta, 1.0 + kDelta);
  if (int(roots.size()) != f.degree())
    throw NumericalError("extract_zeros: found " + std::to_string(roots.size()) +
                         " sign changes for degree " + std::to_string(f.degree()));
  double scale = 1.0;
  for (double c : f.coefficients()) scale = std::max(scale, std::abs(c));
  for (double r : roots)
    if (!(std::abs(f.derivative_at(r)) > 1e-8 * scale))
      throw NumericalError("extract_zeros: zero at " + std::to_string(r) +
                           " fails the simplicity bound");
  (void)set;
  return roots;
}

std::vector<double> moment_residuals(const std::vector<double>& zeros,
                                     const TwoIntervalSet& set, int gap_index) {
  const int n = static_cast<int>(zeros.size());
  if (gap_index < 0 || gap_index > n)
    throw DomainError("moment_residuals: gap index out of range");
  for (int i = 1; i < n; ++i)
    if (!(zeros[i] >= zeros[i - 1])) throw DomainError("moment_residuals: zeros not sorted");
  // A zero assigned left of the gap may sit anywhere up to beta (a zero in
  // the open gap flips the sign across it, as in the degenerate family);
  // crossing into the opposite interval is a genuine partition violation.
  if (gap_index > 0 && zeros[gap_index - 1] > set.beta + 1e-9)
    throw DomainError("moment_residuals: zeros violate the gap partition (left)");
  if (gap_index < n && zeros[gap_index] < set.alpha - 1e-9)
    throw DomainError("moment_residuals: zeros violate the gap partition (right)");

  // Pieces of E between consecutive split points, clamped to the intervals;
  // both gap-adjacent pieces carry the same sign (-1)^k.
  struct Piece {
    double lo, hi;
    int sign;
  };
  std::vector<Piece> pieces;
  {
    double prev = -1.0;
    int s = 1;
    for (int i = 0; i < gap_index; ++i) {
      pieces.push_back({std::max(prev, -1.0), std::min(zeros[i], set.alpha), s});
      prev = zeros[i];
      s = -s;
    }
    pieces.push_back({std::max(prev, -1.0), set.alpha, s});
    prev = set.beta;
    for (int i = gap_index; i < n; ++i) {
      pieces.push_back({std::max(prev, set.beta), std::min(zeros[i], 1.0), s});
      prev = zeros[i];
      s = -s;
    }
    pieces.push_back({std::max(prev, set.beta), 1.0, s});
  }

  std::vector<double> residuals(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const Piece& pc : pieces) {
      if (pc.hi <= pc.lo) continue;
      const double integral =
          (std::pow(pc.hi, i + 1) - std::pow(pc.lo, i + 1)) / double(i + 1);
      acc += pc.sign * integral;
    }
    residuals[i] = acc;
  }
  return residuals;
}

ZeroCountPrediction predicted_zero_counts(int n, const CaseSelection& sel) {
  return ZeroCountPrediction{n - sel.p, sel.p};
}

} // namespace akhiezer

#include "akhiezer/oracle.hpp"
#include "akhiezer/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace akhiezer {

void OracleConfig::validate() const {
  if (grid_size < 101 || grid_size % 2 == 0)
    throw DomainError("OracleConfig: grid_size must be odd and >= 101");
  if (refine_rounds < 0) throw DomainError("OracleConfig: refine_rounds must be >= 0");
  if (!(tolerance > 0.0)) throw DomainError("OracleConfig: tolerance must be positive");
}

namespace {

struct Grid {
  std::vector<double> x, w; // trapezoid nodes and weights over E
};

// Composite trapezoid per interval, optionally with extra nodes clustered
// around estimated roots (the objective's kinks sit at roots and dominate
// the discretization error).
Grid make_grid(const TwoIntervalSet& set, int per_interval,
               const std::vector<double>& cluster) {
  Grid g;
  for (const auto& [lo, hi] : {std::pair{-1.0, set.alpha}, std::pair{set.beta, 1.0}}) {
    std::vector<double> xs;
    xs.reserve(per_interval + 64 * cluster.size());
    for (int i = 0; i < per_interval; ++i)
      xs.push_back(lo + (hi - lo) * double(i) / double(per_interval - 1));
    const double h = (hi - lo) / double(per_interval - 1);
    for (double r : cluster) {
      if (r < lo - h || r > hi + h) continue;
      const double a = std::max(lo, r - 3.0 * h), b = std::min(hi, r + 3.0 * h);
      for (int i = 0; i <= 128; ++i) xs.push_back(a + (b - a) * double(i) / 128.0);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double left = (i == 0) ? xs[0] : xs[i - 1];
      const double right = (i + 1 == xs.size()) ? xs.back() : xs[i + 1];
      g.x.push_back(xs[i]);
      g.w.push_back(0.5 * (right - left));
    }
  }
  return g;
}

// Design data at the grid: Chebyshev basis T_0..T_{n-1} plus the fixed
// monic part x^n. The Chebyshev parameterization keeps the Newton systems
// well conditioned through n = 12.
struct Design {
  Eigen::MatrixXd T;     // grid_size x n
  Eigen::VectorXd fixed; // x^n at each node
  Eigen::VectorXd w;
};

Design make_design(const Grid& g, int n) {
  const int M = int(g.x.size());
  Design d;
  d.T.resize(M, n);
  d.fixed.resize(M);
  d.w.resize(M);
  for (int i = 0; i < M; ++i) {
    const double x = g.x[i];
    double tm = 1.0, tc = x;
    for (int j = 0; j < n; ++j) {
      if (j == 0)
        d.T(i, j) = 1.0;
      else if (j == 1)
        d.T(i, j) = x;
      else {
        const double tn = 2.0 * x * tc - tm;
        tm = tc;
        tc = tn;
        d.T(i, j) = tn;
      }
    }
    d.fixed(i) = std::pow(x, n);
    d.w(i) = g.w[i];
  }
  return d;
}

double smoothed_objective(const Design& d, const Eigen::VectorXd& c, double eps,
                          Eigen::VectorXd* grad, Eigen::MatrixXd* hess) {
  const Eigen::VectorXd f = d.T * c + d.fixed;
  double F = 0.0;
  if (grad) grad->setZero();
  if (hess) hess->setZero();
  for (int i = 0; i < f.size(); ++i) {
    const double r = f(i);
    const double s = std::sqrt(r * r + eps * eps);
    F += d.w(i) * s;
    if (grad) *grad += (d.w(i) * r / s) * d.T.row(i).transpose();
    if (hess) {
      const double curv = d.w(i) * eps * eps / (s * s * s);
      hess->noalias() += curv * d.T.row(i).transpose() * d.T.row(i);
    }
  }
  return F;
}

// Damped Newton on the smoothed problem; returns the achieved objective.
double newton_solve(const Design& d, Eigen::VectorXd& c, double eps) {
  const int n = int(c.size());
  Eigen::VectorXd g(n);
  Eigen::MatrixXd H(n, n);
  double F = smoothed_objective(d, c, eps, &g, &H);
  double lambda = 0.0;
  for (int it = 0; it < 120; ++it) {
    if (g.lpNorm<Eigen::Infinity>() <= 1e-13 * std::max(1.0, F)) break;
    Eigen::MatrixXd Hd = H;
    if (lambda > 0.0) Hd.diagonal().array() += lambda * (1.0 + H.diagonal().array().abs());
    Eigen::VectorXd step = Hd.ldlt().solve(-g);
    if (!step.allFinite()) {
      lambda = std::max(1e-12, lambda * 10.0);
      continue;
    }
    // Backtracking line search.
    double t = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      const Eigen::VectorXd cand = c + t * step;
      const double Fc = smoothed_objective(d, cand, eps, nullptr, nullptr);
      if (Fc < F) {
        c = cand;
        const double drop = F - Fc;
        F = smoothed_objective(d, c, eps, &g, &H);
        lambda = std::max(0.0, lambda * 0.25);
        accepted = true;
        if (drop <= 1e-16 * std::max(1.0, F)) it = 120; // converged
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      lambda = (lambda == 0.0) ? 1e-8 : lambda * 10.0;
      if (lambda > 1e6) break;
    }
  }
  return F;
}

// Full smoothing continuation on one grid; c is warm-started in and out.
double continuation_solve(const Design& d, Eigen::VectorXd& c) {
  double F = 0.0;
  for (double eps = 1e-2; eps > 0.5e-10; eps *= 0.1) F = newton_solve(d, c, eps);
  return F;
}

std::vector<double> chebyshev_to_monic(const Eigen::VectorXd& c, int n) {
  // Expand sum c_j T_j + x^n into ascending monomial coefficients.
  std::vector<std::vector<double>> T(n);
  if (n > 0) T[0] = {1.0};
  if (n > 1) T[1] = {0.0, 1.0};
  for (int j = 2; j < n; ++j) {
    T[j].assign(j + 1, 0.0);
    for (int i = 0; i < j; ++i) T[j][i + 1] += 2.0 * T[j - 1][i];
    for (int i = 0; i < int(T[j - 2].size()); ++i) T[j][i] -= T[j - 2][i];
  }
  std::vector<double> mono(n + 1, 0.0);
  mono[n] = 1.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < int(T[j].size()); ++i) mono[i] += c(j) * T[j][i];
  return mono;
}

std::string serialize_coeffs(const MonicPolynomial& f) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  const auto d = f.descending_coefficients();
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  os << "]";
  return os.str();
}

} // namespace

double discretized_objective(int n, const TwoIntervalSet& set, const OracleConfig& cfg,
                             std::span<const double> free_coeffs) {
  cfg.validate();
  if (int(free_coeffs.size()) != n)
    throw DomainError("discretized_objective: expected n free coefficients");
  const Grid g = make_grid(set, cfg.grid_size, {});
  double F = 0.0;
  std::vector<double> full(free_coeffs.begin(), free_coeffs.end());
  full.push_back(1.0);
  for (std::size_t i = 0; i < g.x.size(); ++i)
    F += g.w[i] * std::abs(poly::eval(full, g.x[i]));
  return F;
}

OracleResult oracle_minimize(int n, const TwoIntervalSet& set, const OracleConfig& cfg) {
  cfg.validate();
  if (n < 1 || n > 12) throw DomainError("oracle_minimize: degree must be in [1, 12]");
  TwoIntervalSet::checked(set.alpha, set.beta);

  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  Grid grid = make_grid(set, cfg.grid_size, {});
  Design design = make_design(grid, n);
  continuation_solve(design, c);

  double final_gap = 0.0;
  for (int round = 0; round < cfg.refine_rounds; ++round) {
    const std::vector<double> mono = chebyshev_to_monic(c, n);
    std::vector<double> cluster;
    for (const auto& [lo, hi] : {std::pair{-1.0, set.alpha}, std::pair{set.beta, 1.0}})
      for (double r : find_real_zeros(MonicPolynomial::from_coefficients(mono), lo, hi))
        cluster.push_back(r);
    grid = make_grid(set, cfg.grid_size, cluster);
    design = make_design(grid, n);
    const double before = smoothed_objective(design, c, 1e-10, nullptr, nullptr);
    const double after = continuation_solve(design, c);
    final_gap = std::max(0.0, before - after);
  }
  if (cfg.refine_rounds > 0 && final_gap > cfg.tolerance)
    throw NumericalError("oracle_minimize: final refinement round still moved the "
                         "objective by " + std::to_string(final_gap));

  const MonicPolynomial f = MonicPolynomial::from_coefficients(chebyshev_to_monic(c, n));
  const double value = l1_norm(f, set).value;
  return OracleResult{f, value, final_gap};
}

CertifyReport certify_report(const MonicPolynomial& analytic_f, double analytic_value,
                             bool analytic_degenerate, const TwoIntervalSet& set,
                             const OracleConfig& cfg, double value_tol, double root_tol) {
  if (analytic_f.degree() > 12)
    throw DomainError("certify: oracle is desk-scale only (degree <= 12)");
  const OracleResult oracle = oracle_minimize(analytic_f.degree(), set, cfg);

  CertifyReport rep;
  rep.degenerate = analytic_degenerate;
  rep.value_analytic = analytic_value;
  rep.value_oracle = oracle.value;
  rep.rel_value_gap = std::abs(analytic_value - oracle.value) / oracle.value;

  const auto& ca = analytic_f.coefficients();
  const auto& co = oracle.f.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i)
    rep.coeff_distance = std::max(rep.coeff_distance, std::abs(ca[i] - co[i]));

  bool roots_ok = true;
  if (!analytic_degenerate) {
    const auto za = extract_zeros(analytic_f, set);
    const auto zo = extract_zeros(oracle.f, set);
    for (std::size_t i = 0; i < za.size(); ++i)
      rep.root_pairing = std::max(rep.root_pairing, std::abs(za[i] - zo[i]));
    roots_ok = rep.root_pairing <= root_tol;
  } else {
    // Any family member is optimal; the oracle's distinguishing root must sit
    // inside [alpha, beta] (up to grid resolution), the rest match phi.
    const auto zo = extract_zeros(oracle.f, set);
    bool found = false;
    for (double r : zo)
      if (r >= set.alpha - root_tol && r <= set.beta + root_tol) {
        rep.gap_root = r;
        found = true;
        break;
      }
    roots_ok = found;
    if (!found) rep.detail = "no oracle root inside the gap";
  }

  rep.pass = rep.rel_value_gap <= value_tol && roots_ok;
  if (!rep.pass && rep.detail.empty()) {
    std::ostringstream os;
    os << "analytic " << serialize_coeffs(analytic_f) << " vs oracle "
       << serialize_coeffs(oracle.f);
    rep.detail = os.str();
  }
  return rep;
}

CertifyReport certify(const MonicPolynomial& analytic_f, double analytic_value,
                      bool analytic_degenerate, const TwoIntervalSet& set,
                      const OracleConfig& cfg, double value_tol, double root_tol) {
  CertifyReport rep = certify_report(analytic_f, analytic_value, analytic_degenerate, set,
                                     cfg, value_tol, root_tol);
  if (!rep.pass)
    throw CertificationError("certify: analytic and oracle solutions disagree: " +
                             rep.detail);
  return rep;
}

} // namespace akhiezer

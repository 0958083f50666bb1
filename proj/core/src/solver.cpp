#include "akhiezer/solver.hpp"
#include "akhiezer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace akhiezer {

namespace {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("AKHIEZER_LOG");
    if (!env) return 0;
    const std::string v(env);
    if (v == "debug" || v == "trace" || v == "1") return 1;
    return 0;
  }();
  return level;
}

void trace(const std::string& msg) {
  if (log_level() > 0) std::fprintf(stderr, "[akhiezer] %s\n", msg.c_str());
}

int gap_index_of(const std::vector<double>& zeros, const TwoIntervalSet& set) {
  int k = 0;
  const double mid = 0.5 * (set.alpha + set.beta);
  for (double z : zeros)
    if (z < mid) ++k;
  return k;
}

PellResidual best_split_residual(const MonicPolynomial& f,
                                 const std::vector<double>& zeros,
                                 const TwoIntervalSet& set) {
  // Interlaced split: V gets the odd-indexed zeros xi_1, xi_3, ...
  std::vector<double> v_roots, u_roots;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    ((i % 2 == 0) ? v_roots : u_roots).push_back(zeros[i]);
  const MonicPolynomial V = MonicPolynomial::from_roots(v_roots);
  const MonicPolynomial U = MonicPolynomial::from_roots(u_roots);
  const PellResidual r1 = pell_residual_odd(FactorPair{U, V, Branch::ThetaPair}, set);
  const PellResidual r2 = pell_residual_odd(FactorPair{U, V, Branch::Theta1Pair}, set);
  (void)f;
  return r1.scaled() <= r2.scaled() ? r1 : r2;
}

} // namespace

ExtremalSolution solve_extremal(int n, const TwoIntervalSet& set) {
  if (n < 1) throw DomainError("solve_extremal: degree must be >= 1");
  const EllipticFrame frame = build_frame(set);
  const double tau = transfinite_diameter(frame);

  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    const CaseSelection sel = classify_case(m, frame);
    trace("degree " + std::to_string(n) + ": branch " + branch_name(sel.branch) +
          ", p = " + std::to_string(sel.p));

    if (sel.branch == Branch::Degenerate) {
      DegenerateFamily family = synthesize_degenerate(m, frame);
      std::vector<double> zeros = extract_zeros(family.f0, set);
      // Stationarity diagnostics use the endpoint member, whose roots respect
      // the gap partition.
      const std::vector<double> za = extract_zeros(family.f_alpha, set);
      const std::vector<double> moments = moment_residuals(za, set, gap_index_of(za, set));
      double mmax = 0.0;
      for (double r : moments) mmax = std::max(mmax, std::abs(r));
      const double value = l1_norm(family.f0, set).value;
      const PellResidual pell = best_split_residual(family.f_alpha, za, set);
      return ExtremalSolution{family.f0, std::nullopt, std::move(zeros), sel,
                              sel.sigma / frame.periods.K, value, tau, pell,
                              moments, mmax, std::move(family), false};
    }

    FactorPair pair = synthesize_odd(m, frame, sel);
    MonicPolynomial f = pair.U.multiply(pair.V);
    std::vector<double> zeros = extract_zeros(f, set);

    // Zero-structure validation: all zeros in E, counts as predicted.
    const ZeroCountPrediction counts = predicted_zero_counts(n, sel);
    int left = 0, right = 0;
    for (double z : zeros) {
      if (z <= set.alpha + 1e-12 && z >= -1.0 - 1e-12)
        ++left;
      else if (z >= set.beta - 1e-12 && z <= 1.0 + 1e-12)
        ++right;
    }
    if (left != counts.left || right != counts.right || left + right != n)
      throw NumericalError("solve_extremal: zero counts violate the case analysis");

    const PellResidual pell = pell_residual_odd(pair, set);
    const std::vector<double> moments = moment_residuals(zeros, set, gap_index_of(zeros, set));
    double mmax = 0.0;
    for (double r : moments) mmax = std::max(mmax, std::abs(r));
    const double value = l1_norm(f, set).value;
    return ExtremalSolution{std::move(f), std::move(pair), std::move(zeros), sel,
                            sel.sigma / frame.periods.K, value, tau, pell,
                            moments, mmax, std::nullopt, false};
  }

  // Even degree n = 2m.
  const int m = n / 2;
  const PeriodDecomposition d = decompose_rho_multiple(2 * m + 1, frame);
  const bool near_degenerate = even_case_near_degenerate(m, frame);
  CaseSelection sel{m, d.p, d.sigma,
                    (d.p % 2 != 0) ? Branch::ThetaPair : Branch::Theta1Pair};
  MonicPolynomial f = synthesize_even(m, frame);
  std::vector<double> zeros = extract_zeros(f, set);
  for (double z : zeros)
    if (!(z >= -1.0 - 1e-9 && z <= 1.0 + 1e-9) ||
        (z > set.alpha + 1e-9 && z < set.beta - 1e-9))
      throw NumericalError("solve_extremal: even-degree zero escaped E");

  std::vector<double> v_roots, u_roots;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    ((i % 2 == 0) ? v_roots : u_roots).push_back(zeros[i]);
  const MonicPolynomial Q = MonicPolynomial::from_roots(v_roots);
  const MonicPolynomial P = MonicPolynomial::from_roots(u_roots);
  const PellResidual ra = pell_residual_even(P, Q, set, EvenPellGrouping::A);
  const PellResidual rb = pell_residual_even(P, Q, set, EvenPellGrouping::B);
  const PellResidual pell = ra.scaled() <= rb.scaled() ? ra : rb;

  const std::vector<double> moments = moment_residuals(zeros, set, gap_index_of(zeros, set));
  double mmax = 0.0;
  for (double r : moments) mmax = std::max(mmax, std::abs(r));
  const double value = l1_norm(f, set).value;
  return ExtremalSolution{std::move(f), std::nullopt, std::move(zeros), sel,
                          sel.sigma / frame.periods.K, value, tau, pell,
                          moments, mmax, std::nullopt, near_degenerate};
}

SolveResponse run_solve(const SolveRequest& req) {
  const TwoIntervalSet set = TwoIntervalSet::checked(req.alpha, req.beta);
  if (req.degree < 1) throw DomainError("solve: degree must be >= 1");
  SolveResponse resp{req, solve_extremal(req.degree, set), std::nullopt};
  if (resp.solution.pell.scaled() > req.tol_pell)
    throw NumericalError("solve: Pell excess above the requested tolerance");
  if (req.with_oracle) {
    OracleConfig cfg;
    cfg.grid_size = req.grid;
    const CertifyReport rep =
        certify_report(resp.solution.f, resp.solution.minimal_value,
                       resp.solution.family.has_value(), set, cfg, req.tol_cert);
    resp.oracle_gap = rep.rel_value_gap;
  }
  return resp;
}

LadderReport run_ladder(double alpha, int m) {
  LadderReport report{alpha, m, beta_ladder(alpha, m), {}};
  const std::vector<double> betas = report.ladder.betas_with_sentinel();
  // Bands between consecutive rungs, closed off by beta_{q+1} = alpha.
  std::vector<double> bounds = betas;
  bounds.push_back(alpha);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double hi = bounds[i], lo = bounds[i + 1];
    const double mid = 0.5 * (lo + hi);
    Branch branch = Branch::Degenerate;
    try {
      branch = classify_case(m, build_frame(TwoIntervalSet{alpha, mid})).branch;
    } catch (const Error&) {
      // Band midpoint too close to the set boundary to frame; skip the band.
      continue;
    }
    report.bands.push_back(LadderBand{lo, hi, branch});
  }
  return report;
}

CertifyRun run_certify(const SolveRequest& req) {
  const TwoIntervalSet set = TwoIntervalSet::checked(req.alpha, req.beta);
  if (req.degree > 12)
    throw DomainError("certify: oracle comparison is desk-scale only (degree <= 12)");
  const ExtremalSolution sol = solve_extremal(req.degree, set);
  OracleConfig cfg;
  cfg.grid_size = req.grid;
  CertifyRun run{req, certify_report(sol.f, sol.minimal_value, sol.family.has_value(),
                                     set, cfg, req.tol_cert)};
  return run;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_array(const std::vector<double>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += fmt(vs[i]);
  }
  out += "]";
  return out;
}

} // namespace

std::string to_json(const SolveResponse& resp) {
  const ExtremalSolution& s = resp.solution;
  std::ostringstream os;
  os << "{\n";
  os << "  \"alpha\": " << fmt(resp.request.alpha) << ",\n";
  os << "  \"beta\": " << fmt(resp.request.beta) << ",\n";
  os << "  \"degree\": " << resp.request.degree << ",\n";
  os << "  \"case\": {\"branch\": \"" << branch_name(s.sel.branch)
     << "\", \"p\": " << s.sel.p
     << ", \"sigma_over_K\": " << fmt(s.sigma_over_K) << "},\n";
  os << "  \"coefficients\": " << json_array(s.f.descending_coefficients()) << ",\n";
  os << "  \"zeros\": " << json_array(s.zeros) << ",\n";
  os << "  \"minimal_value\": " << fmt(s.minimal_value) << ",\n";
  os << "  \"tau\": " << fmt(s.tau) << ",\n";
  os << "  \"diagnostics\": {\"pell_excess\": " << fmt(s.pell.scaled())
     << ", \"max_moment_residual\": " << fmt(s.max_moment_residual);
  if (resp.oracle_gap) os << ", \"oracle_gap\": " << fmt(*resp.oracle_gap);
  os << "}";
  if (s.family) {
    os << ",\n  \"degenerate_family\": {\"gamma\": " << fmt(s.family->gamma)
       << ", \"endpoint_roots\": [" << fmt(resp.request.alpha) << ", "
       << fmt(resp.request.beta) << "]}";
  }
  if (s.even_near_degenerate)
    os << ",\n  \"warnings\": [\"even-degree case at a degenerate tie; both parity "
          "formulas coincide in the limit\"]";
  os << "\n}\n";
  return os.str();
}

std::string to_csv(const SolveResponse& resp) {
  std::ostringstream os;
  os << "kind,index,value\n";
  const auto desc = resp.solution.f.descending_coefficients();
  for (std::size_t i = 0; i < desc.size(); ++i)
    os << "coefficient," << i << "," << fmt(desc[i]) << "\n";
  for (std::size_t i = 0; i < resp.solution.zeros.size(); ++i)
    os << "zero," << i << "," << fmt(resp.solution.zeros[i]) << "\n";
  return os.str();
}

std::string to_text(const SolveResponse& resp) {
  const ExtremalSolution& s = resp.solution;
  std::ostringstream os;
  os << "L1-minimal monic polynomial on [-1, " << fmt(resp.request.alpha) << "] u ["
     << fmt(resp.request.beta) << ", 1], degree " << resp.request.degree << "\n";
  os << "branch: " << branch_name(s.sel.branch) << " (p = " << s.sel.p << ")\n";
  os << "coefficients (descending): " << json_array(s.f.descending_coefficients()) << "\n";
  os << "zeros: " << json_array(s.zeros) << "\n";
  os << "minimal value: " << fmt(s.minimal_value) << "\n";
  os << "transfinite diameter: " << fmt(s.tau) << "\n";
  os << "pell excess (scaled): " << fmt(s.pell.scaled())
     << ", max moment residual: " << fmt(s.max_moment_residual) << "\n";
  if (resp.oracle_gap) os << "oracle gap: " << fmt(*resp.oracle_gap) << "\n";
  if (s.family) os << "degenerate family: gamma = " << fmt(s.family->gamma) << "\n";
  return os.str();
}

std::string to_json(const LadderReport& report) {
  std::ostringstream os;
  os << "{\n  \"alpha\": " << fmt(report.alpha) << ",\n  \"m\": " << report.m
     << ",\n  \"rungs\": [";
  for (std::size_t i = 0; i < report.ladder.rungs.size(); ++i) {
    const auto& r = report.ladder.rungs[i];
    os << (i ? ", " : "") << "{\"p\": " << r.p << ", \"beta\": " << fmt(r.beta)
       << ", \"k\": " << fmt(r.k) << "}";
  }
  os << "],\n  \"bands\": [";
  for (std::size_t i = 0; i < report.bands.size(); ++i) {
    const auto& b = report.bands[i];
    os << (i ? ", " : "") << "{\"beta_lo\": " << fmt(b.beta_lo)
       << ", \"beta_hi\": " << fmt(b.beta_hi) << ", \"branch\": \""
       << branch_name(b.branch) << "\"}";
  }
  os << "]\n}\n";
  return os.str();
}

std::string to_json(const CertifyRun& run) {
  const CertifyReport& r = run.report;
  std::ostringstream os;
  os << "{\n";
  os << "  \"alpha\": " << fmt(run.request.alpha) << ",\n";
  os << "  \"beta\": " << fmt(run.request.beta) << ",\n";
  os << "  \"degree\": " << run.request.degree << ",\n";
  os << "  \"value_analytic\": " << fmt(r.value_analytic) << ",\n";
  os << "  \"value_oracle\": " << fmt(r.value_oracle) << ",\n";
  os << "  \"rel_value_gap\": " << fmt(r.rel_value_gap) << ",\n";
  os << "  \"coeff_distance\": " << fmt(r.coeff_distance) << ",\n";
  os << "  \"root_pairing\": " << fmt(r.root_pairing) << ",\n";
  os << "  \"degenerate\": " << (r.degenerate ? "true" : "false") << ",\n";
  if (r.degenerate) os << "  \"gap_root\": " << fmt(r.gap_root) << ",\n";
  os << "  \"pass\": " << (r.pass ? "true" : "false") << "\n";
  os << "}\n";
  return os.str();
}

std::string error_json(const std::string& kind, const std::string& message) {
  std::ostringstream os;
  std::string escaped;
  for (char c : message) {
    if (c == '"' || c == '\\') escaped += '\\';
    if (c == '\n') {
      escaped += "\\n";
      continue;
    }
    escaped += c;
  }
  os << "{\"error\": {\"kind\": \"" << kind << "\", \"message\": \"" << escaped
     << "\"}}\n";
  return os.str();
}

} // namespace akhiezer

#pragma once

#include "akhiezer/functional.hpp"
#include "akhiezer/polynomial.hpp"
#include "akhiezer/synthesis.hpp"

#include <span>
#include <string>
#include <vector>

namespace akhiezer {

struct OracleConfig {
  int grid_size = 4001;    // nodes per interval, odd, >= 101
  int refine_rounds = 2;   // root-clustered regrid passes after the base solve
  double tolerance = 1e-10; // acceptable objective decrease in the final round

  void validate() const;
};

struct OracleResult {
  MonicPolynomial f;
  double value;         // exact L1 of f, re-evaluated by antiderivative
  double certified_gap; // objective decrease achieved in the final round
};

/// Brute-force minimizer of the discretized L1 functional over monic degree-n
/// polynomials: convex piecewise-linear objective, solved by smoothing
/// continuation sqrt(t^2 + eps^2) with damped Newton, eps: 1e-2 -> 1e-10.
/// Deterministic for a fixed config.
OracleResult oracle_minimize(int n, const TwoIntervalSet& set,
                             const OracleConfig& cfg = {});

/// The discretized objective sum_j w_j |f(x_j)| for a monic polynomial given
/// by its free coefficients (ascending, length n; leading coefficient 1 is
/// implicit). Exposed for convexity testing.
double discretized_objective(int n, const TwoIntervalSet& set, const OracleConfig& cfg,
                             std::span<const double> free_coeffs);

struct CertifyReport {
  double value_analytic = 0.0;
  double value_oracle = 0.0;
  double rel_value_gap = 0.0;
  double coeff_distance = 0.0;
  double root_pairing = 0.0; // max sorted-root distance (non-degenerate only)
  bool degenerate = false;
  double gap_root = 0.0;     // oracle minimizer's root inside the gap, if degenerate
  bool pass = false;
  std::string detail;
};

/// Everything certify checks, without throwing.
CertifyReport certify_report(const MonicPolynomial& analytic_f, double analytic_value,
                             bool analytic_degenerate, const TwoIntervalSet& set,
                             const OracleConfig& cfg = {}, double value_tol = 1e-4,
                             double root_tol = 1e-3);

/// Throwing wrapper: returns the report when all gaps are within tolerance,
/// otherwise raises CertificationError with both polynomials serialized.
CertifyReport certify(const MonicPolynomial& analytic_f, double analytic_value,
                      bool analytic_degenerate, const TwoIntervalSet& set,
                      const OracleConfig& cfg = {}, double value_tol = 1e-4,
                      double root_tol = 1e-3);

} // namespace akhiezer

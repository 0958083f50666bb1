#pragma once

#include "akhiezer/frame.hpp"
#include "akhiezer/functional.hpp"
#include "akhiezer/oracle.hpp"
#include "akhiezer/synthesis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace akhiezer {

/// A fully synthesized and validated extremal solution.
struct ExtremalSolution {
  MonicPolynomial f;
  std::optional<FactorPair> factors; // odd non-degenerate only
  std::vector<double> zeros;
  CaseSelection sel;
  double sigma_over_K;
  double minimal_value;
  double tau;
  PellResidual pell;
  std::vector<double> moments;
  double max_moment_residual;
  std::optional<DegenerateFamily> family;
  bool even_near_degenerate = false;
};

/// Dispatch odd / even / degenerate synthesis for degree n and attach the
/// validation diagnostics.
ExtremalSolution solve_extremal(int n, const TwoIntervalSet& set);

enum class OutputFormat { Json, Csv, Text };

struct SolveRequest {
  double alpha;
  double beta;
  int degree;
  bool with_oracle = false;
  OutputFormat format = OutputFormat::Json;
  int grid = 4001;
  double tol_pell = 1e-9;
  double tol_cert = 1e-4;
};

struct SolveResponse {
  SolveRequest request;
  ExtremalSolution solution;
  std::optional<double> oracle_gap;
};

SolveResponse run_solve(const SolveRequest& req);

struct LadderBand {
  double beta_lo;
  double beta_hi;
  Branch branch;
};

struct LadderReport {
  double alpha;
  int m;
  BetaLadder ladder;
  std::vector<LadderBand> bands;
};

LadderReport run_ladder(double alpha, int m);

struct CertifyRun {
  SolveRequest request;
  CertifyReport report;
};

CertifyRun run_certify(const SolveRequest& req);

// Serialization. All floating-point values are emitted with 17 significant
// digits so outputs round-trip losslessly and repeat runs are byte-identical.
std::string to_json(const SolveResponse& resp);
std::string to_csv(const SolveResponse& resp);
std::string to_text(const SolveResponse& resp);
std::string to_json(const LadderReport& report);
std::string to_json(const CertifyRun& run);

/// "error" JSON payload for structured failure reporting.
std::string error_json(const std::string& kind, const std::string& message);

} // namespace akhiezer

#pragma once

#include "akhiezer/elliptic.hpp"
#include "akhiezer/theta.hpp"

#include <complex>
#include <string>
#include <vector>

namespace akhiezer {

/// The two-interval set E = [-1, alpha] u [beta, 1].
struct TwoIntervalSet {
  double alpha;
  double beta;

  static TwoIntervalSet checked(double alpha, double beta);
  double measure() const { return (alpha + 1.0) + (1.0 - beta); }
  bool contains(double x) const {
    return (x >= -1.0 && x <= alpha) || (x >= beta && x <= 1.0);
  }
};

/// Full elliptic parameterization of a two-interval set:
///   k^2 = 2(beta - alpha) / ((1 - alpha)(1 + beta)),
///   alpha = 1 - 2 sn^2 rho,   beta = 2 cn^2 rho / dn^2 rho - 1,
/// with 0 < rho < K. Immutable once built.
struct EllipticFrame {
  TwoIntervalSet set;
  Modulus mod;
  QuarterPeriods periods;
  Nome nome;
  double rho;
  JacobiValues at_rho; // sn, cn, dn at rho (cached)
};

EllipticFrame build_frame(const TwoIntervalSet& set);

/// The rational map from the period rectangle to the x-plane,
///   x(u) = (sn^2 u cn^2 rho + cn^2 u sn^2 rho) / (sn^2 u - sn^2 rho).
/// u = +-rho (mod periods) is a pole.
std::complex<double> map_x(std::complex<double> u, const EllipticFrame& frame);

enum class Sheet { Upper, Lower };

/// Inverse of map_x for real x, via sn^2 u = sn^2 rho (x+1)/(x-alpha).
/// Segment placement: x >= 1 -> u in (rho, K]; x <= -1 -> u in [0, rho);
/// x in [-1, alpha] -> u = it; x in [beta, 1] -> u = K + it; x in the open
/// gap -> u = s + iK'. Sheet::Lower returns the reflected preimage -u.
std::complex<double> inverse_map(double x, const EllipticFrame& frame,
                                 Sheet sheet = Sheet::Upper);

/// Which closed-form family solves the problem for a given frame.
enum class Branch { ThetaPair, Theta1Pair, Degenerate };

std::string branch_name(Branch b);

/// Decomposition (2m+2) rho = p K + sigma, 0 <= sigma <= K, and the branch
/// it selects: p odd -> ThetaPair, p even -> Theta1Pair, sigma at either
/// endpoint -> Degenerate (the sigma = K tie is folded into p+1, sigma = 0).
struct CaseSelection {
  int m;
  int p;
  double sigma;
  Branch branch;
};

CaseSelection classify_case(int m, const EllipticFrame& frame);

/// (multiplier * rho) = p K + sigma with 0 <= sigma < K.
struct PeriodDecomposition {
  int p;
  double sigma;
};

PeriodDecomposition decompose_rho_multiple(int multiplier, const EllipticFrame& frame);

/// Threshold on min(sigma, K - sigma)/K below which a frame is treated as
/// degenerate.
inline constexpr double kDegenerateSigmaTol = 1e-9;

/// The finite set of beta values (for fixed alpha and m) at which the
/// degree-(2m+1) problem degenerates: (2m+2) rho = p K exactly.
struct BetaLadder {
  double alpha;
  int m;
  struct Rung {
    int p;
    double beta;
    double k;
  };
  std::vector<Rung> rungs; // p = 1..q, beta strictly decreasing

  /// Rung betas preceded by the sentinel beta_0 = 1.
  std::vector<double> betas_with_sentinel() const;
};

BetaLadder beta_ladder(double alpha, int m);

} // namespace akhiezer

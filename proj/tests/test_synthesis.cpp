#include "akhiezer/synthesis.hpp"
#include "akhiezer/errors.hpp"
#include "akhiezer/functional.hpp"
#include "akhiezer/solver.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace akhiezer;

namespace {

int count_in(const std::vector<double>& xs, double lo, double hi) {
  int c = 0;
  for (double x : xs)
    if (x >= lo && x <= hi) ++c;
  return c;
}

} // namespace

TEST_CASE("monic normalization is idempotent and rejects bad input") {
  const MonicPolynomial f = MonicPolynomial::from_coefficients({2.0, -4.0, 2.0});
  CHECK(f.coefficients().back() == 1.0);
  const MonicPolynomial g = MonicPolynomial::from_coefficients(f.coefficients());
  for (int i = 0; i <= f.degree(); ++i)
    CHECK(g.coefficients()[i] == f.coefficients()[i]);
  CHECK_THROWS_AS(MonicPolynomial::from_coefficients({1.0, 0.0}), DomainError);
}

TEST_CASE("extract_zeros on x^2 - 1 and error paths") {
  const TwoIntervalSet set{-0.3, 0.4};
  const MonicPolynomial f = MonicPolynomial::from_coefficients({-1.0, 0.0, 1.0});
  const auto zeros = extract_zeros(f, set);
  REQUIRE(zeros.size() == 2);
  CHECK(zeros[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(zeros[1] == doctest::Approx(1.0).epsilon(1e-12));
  // No real roots in range -> count mismatch.
  const MonicPolynomial g = MonicPolynomial::from_coefficients({1.0, 0.0, 1.0});
  CHECK_THROWS_AS(extract_zeros(g, set), NumericalError);
}

TEST_CASE("odd synthesis: Pell identity, zero counts, factor product") {
  const TwoIntervalSet set{-0.3, 0.4};
  const EllipticFrame fr = build_frame(set);
  for (int m : {1, 2, 3}) {
    const int n = 2 * m + 1;
    const CaseSelection sel = classify_case(m, fr);
    REQUIRE(sel.branch != Branch::Degenerate);
    const FactorPair pair = synthesize_odd(m, fr, sel);
    CHECK(pair.U.degree() == m);
    CHECK(pair.V.degree() == m + 1);

    const PellResidual res = pell_residual_odd(pair, set);
    CHECK(res.scaled() <= 1e-9);

    const MonicPolynomial f = pair.U.multiply(pair.V);
    const auto zeros = extract_zeros(f, set);
    REQUIRE(int(zeros.size()) == n);
    const ZeroCountPrediction counts = predicted_zero_counts(n, sel);
    CHECK(count_in(zeros, -1.0, set.alpha) == counts.left);
    CHECK(count_in(zeros, set.beta, 1.0) == counts.right);
    // Gap is clean for non-degenerate branches.
    CHECK(count_in(zeros, set.alpha + 1e-12, set.beta - 1e-12) == 0);

    // Per-factor split for p = 2q+1 (ThetaPair): U has (m-q, q) zeros and
    // V has (m-q, q+1) zeros in the two intervals.
    if (sel.branch == Branch::ThetaPair) {
      const int q = (sel.p - 1) / 2;
      const auto zu = extract_zeros(pair.U, set);
      const auto zv = extract_zeros(pair.V, set);
      CHECK(count_in(zu, -1.0, set.alpha) == m - q);
      CHECK(count_in(zu, set.beta, 1.0) == q);
      CHECK(count_in(zv, -1.0, set.alpha) == m - q);
      CHECK(count_in(zv, set.beta, 1.0) == q + 1);
    }

    // Interlacing: between consecutive zeros of V inside each interval of E
    // there is exactly one zero of U.
    const auto zu = extract_zeros(pair.U, set);
    const auto zv = extract_zeros(pair.V, set);
    for (const auto& [lo, hi] : {std::pair{-1.0, set.alpha}, std::pair{set.beta, 1.0}}) {
      std::vector<double> vs, us;
      for (double z : zv)
        if (z >= lo && z <= hi) vs.push_back(z);
      for (double z : zu)
        if (z >= lo && z <= hi) us.push_back(z);
      for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        CHECK(count_in(us, vs[i], vs[i + 1]) == 1);
    }
  }
}

TEST_CASE("rejected branch violates the zero-count requirement") {
  const TwoIntervalSet set{-0.3, 0.4};
  const EllipticFrame fr = build_frame(set);
  const int m = 2, n = 5;
  const CaseSelection sel = classify_case(m, fr);
  CaseSelection wrong = sel;
  wrong.branch = (sel.branch == Branch::ThetaPair) ? Branch::Theta1Pair : Branch::ThetaPair;
  wrong.p = sel.p + 1; // parity bookkeeping for the wrong branch
  const FactorPair pair = synthesize_odd(m, fr, wrong);
  // The wrong pair satisfies its own Pell identity...
  CHECK(pell_residual_odd(pair, set).scaled() <= 1e-9);
  // ...but its product has a zero in the open gap (or a count mismatch).
  const MonicPolynomial f = pair.U.multiply(pair.V);
  const auto roots = find_real_zeros(f, -1.0 - 1e-9, 1.0 + 1e-9);
  const int in_gap = count_in(roots, set.alpha + 1e-9, set.beta - 1e-9);
  const bool counts_ok = count_in(roots, -1.0, set.alpha) == n - sel.p &&
                         count_in(roots, set.beta, 1.0) == sel.p;
  CHECK((in_gap > 0 || !counts_ok));
}

TEST_CASE("m = 0: the linear minimizer matches a golden-section oracle") {
  const TwoIntervalSet set{-0.35, 0.2};
  const EllipticFrame fr = build_frame(set);
  const CaseSelection sel = classify_case(0, fr);
  REQUIRE(sel.branch != Branch::Degenerate);
  const FactorPair pair = synthesize_odd(0, fr, sel);
  CHECK(pair.U.degree() == 0);
  const double xi = -pair.V.coefficients()[0];

  // Golden-section oracle over xi on [-1, 1] for F(xi) = int_E |x - xi| dx.
  const auto F = [&](double t) {
    const std::vector<double> c{-t, 1.0};
    return l1_norm_raw(c, set);
  };
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = -1.0, b = 1.0;
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  for (int i = 0; i < 200; ++i) {
    if (F(c1) < F(c2))
      b = c2;
    else
      a = c1;
    c1 = b - gr * (b - a);
    c2 = a + gr * (b - a);
  }
  const double xi_oracle = 0.5 * (a + b);
  CHECK(xi == doctest::Approx(xi_oracle).epsilon(1e-7));
}

TEST_CASE("even synthesis: zeros in E, Pell residual, symmetric parity") {
  const TwoIntervalSet set{-0.3, 0.4};
  const EllipticFrame fr = build_frame(set);
  for (int m : {1, 2, 3}) {
    const MonicPolynomial f = synthesize_even(m, fr);
    CHECK(f.degree() == 2 * m);
    const auto zeros = extract_zeros(f, set);
    REQUIRE(int(zeros.size()) == 2 * m);
    for (double z : zeros) {
      CHECK(set.contains(z));
      CHECK(std::abs(f.derivative_at(z)) > 1e-8);
    }
    std::vector<double> oddi, eveni;
    for (std::size_t i = 0; i < zeros.size(); ++i)
      ((i % 2 == 0) ? oddi : eveni).push_back(zeros[i]);
    const MonicPolynomial Q = MonicPolynomial::from_roots(oddi);
    const MonicPolynomial P = MonicPolynomial::from_roots(eveni);
    const double ra = pell_residual_even(P, Q, set, EvenPellGrouping::A).scaled();
    const double rb = pell_residual_even(P, Q, set, EvenPellGrouping::B).scaled();
    CHECK(std::min(ra, rb) <= 1e-9);
  }

  // n = 2 on a symmetric set: the minimizer is even.
  const EllipticFrame sym = build_frame(TwoIntervalSet{-0.5, 0.5});
  const MonicPolynomial f2 = synthesize_even(1, sym);
  CHECK(std::abs(f2.coefficients()[1]) < 1e-10); // no linear term
}

TEST_CASE("degenerate family at a ladder rung") {
  const BetaLadder lad = beta_ladder(-0.3, 2);
  REQUIRE(lad.rungs.size() >= 2);
  const double beta = lad.rungs[1].beta; // p = 2 rung
  const TwoIntervalSet set{-0.3, beta};
  const EllipticFrame fr = build_frame(set);
  REQUIRE(classify_case(2, fr).branch == Branch::Degenerate);

  const DegenerateFamily fam = synthesize_degenerate(2, fr);
  CHECK(fam.gamma > set.alpha);
  CHECK(fam.gamma < set.beta);
  CHECK(fam.tau > 0.0);

  // f_alpha has a root exactly at alpha, f_beta at beta, f0 at gamma.
  const auto za = extract_zeros(fam.f_alpha, set);
  const auto zb = extract_zeros(fam.f_beta, set);
  const auto z0 = extract_zeros(fam.f0, set);
  const auto closest = [](const std::vector<double>& zs, double t) {
    double best = 1e9;
    for (double z : zs) best = std::min(best, std::abs(z - t));
    return best;
  };
  CHECK(closest(za, set.alpha) < 1e-10);
  CHECK(closest(zb, set.beta) < 1e-10);
  CHECK(closest(z0, fam.gamma) < 1e-10);

  // The endpoint members differ exactly by swapping the pinned root through
  // the common factor.
  const MonicPolynomial phi_a = fam.f_alpha.deflate_root(set.alpha);
  const MonicPolynomial phi_b = fam.f_beta.deflate_root(set.beta);
  for (int i = 0; i <= phi_a.degree(); ++i)
    CHECK(phi_a.coefficients()[i] ==
          doctest::Approx(phi_b.coefficients()[i]).epsilon(1e-9));

  // All family members share the L1 value, equal to 4 B (2m+2).
  const double v0 = l1_norm(fam.f0, set).value;
  const double va = l1_norm(fam.f_alpha, set).value;
  const double vb = l1_norm(fam.f_beta, set).value;
  CHECK(va == doctest::Approx(v0).epsilon(1e-9));
  CHECK(vb == doctest::Approx(v0).epsilon(1e-9));
  CHECK(v0 == doctest::Approx(4.0 * fam.Bcoef * 6.0).epsilon(1e-9));
}

TEST_CASE("symmetric set: every odd degree is degenerate with gamma = 0") {
  const TwoIntervalSet set{-0.5, 0.5};
  const EllipticFrame fr = build_frame(set);
  for (int m : {0, 1, 2}) {
    CHECK(classify_case(m, fr).branch == Branch::Degenerate);
    const DegenerateFamily fam = synthesize_degenerate(m, fr);
    CHECK(std::abs(fam.gamma) < 1e-11);
  }
}

TEST_CASE("moment residuals: stationarity holds and is sensitive") {
  const TwoIntervalSet set{-0.3, 0.4};
  const ExtremalSolution sol = solve_extremal(5, set);
  CHECK(sol.max_moment_residual <= 1e-9);

  // n = 1 on a symmetric set: xi = 0 zeroes the i = 0 residual.
  const TwoIntervalSet sym{-0.5, 0.5};
  const auto r0 = moment_residuals({0.0}, sym, 1);
  CHECK(std::abs(r0[0]) < 1e-15);

  // Perturbing one zero by 1e-3 must show up at the 1e-4 level.
  std::vector<double> z = sol.zeros;
  z[1] += 1e-3;
  std::sort(z.begin(), z.end());
  int k = 0;
  for (double zz : z)
    if (zz < 0.5 * (set.alpha + set.beta)) ++k;
  const auto pert = moment_residuals(z, set, k);
  double mx = 0.0;
  for (double r : pert) mx = std::max(mx, std::abs(r));
  CHECK(mx >= 1e-4);

  // Genuine partition violations are rejected: a left-assigned zero beyond
  // beta, a right-assigned zero below alpha.
  CHECK_THROWS_AS(moment_residuals({0.45}, set, 1), DomainError);
  CHECK_THROWS_AS(moment_residuals({-0.45}, set, 0), DomainError);
  // A zero in the open gap is legal on either assignment (the sign flips
  // across the gap, as for the degenerate family).
  CHECK_NOTHROW(moment_residuals({0.0}, set, 0));
  CHECK_NOTHROW(moment_residuals({0.0}, set, 1));
}

TEST_CASE("solve_extremal: f = U V coefficient identity") {
  const TwoIntervalSet set{0.1, 0.6};
  const ExtremalSolution sol = solve_extremal(7, set);
  REQUIRE(sol.factors.has_value());
  const MonicPolynomial prod = sol.factors->U.multiply(sol.factors->V);
  for (int i = 0; i <= sol.f.degree(); ++i)
    CHECK(prod.coefficients()[i] ==
          doctest::Approx(sol.f.coefficients()[i]).epsilon(1e-10));
}

TEST_CASE("gap check: at most one zero in the gap, none off the set") {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> ad(-0.7, 0.0), bd(0.1, 0.7);
  for (int trial = 0; trial < 6; ++trial) {
    const TwoIntervalSet set{ad(rng), bd(rng)};
    for (int n : {3, 4, 5}) {
      const ExtremalSolution sol = solve_extremal(n, set);
      const int gap = count_in(sol.zeros, set.alpha + 1e-10, set.beta - 1e-10);
      if (sol.family.has_value())
        CHECK(gap <= 1);
      else
        CHECK(gap == 0);
      for (double z : sol.zeros) CHECK((set.contains(z) || (z > set.alpha && z < set.beta)));
    }
  }
}

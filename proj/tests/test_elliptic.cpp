#include "akhiezer/elliptic.hpp"
#include "akhiezer/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace akhiezer;

namespace {

// Independent oracle: plain AGM iterated to a fixed point, no shared code
// with the implementation's early-exit loop.
double oracle_K_agm(double k) {
  double a = 1.0, b = std::sqrt((1.0 - k) * (1.0 + k));
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return M_PI / (2.0 * a);
}

// Second independent oracle: midpoint quadrature of the defining integral
// K = int_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t).
double oracle_K_quadrature(double k, int panels = 200000) {
  const double h = (M_PI / 2.0) / panels;
  double acc = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double t = (i + 0.5) * h;
    const double s = std::sin(t);
    acc += h / std::sqrt(1.0 - k * k * s * s);
  }
  return acc;
}

} // namespace

TEST_CASE("complete_K matches the AGM fixed point and the defining integral") {
  const double k_half = std::sqrt(0.5);
  CHECK(complete_K(k_half) == doctest::Approx(oracle_K_agm(k_half)).epsilon(1e-14));
  CHECK(complete_K(k_half) == doctest::Approx(oracle_K_quadrature(k_half)).epsilon(1e-9));
  // Frozen oracle values.
  CHECK(complete_K(k_half) == doctest::Approx(1.8540746773013719).epsilon(1e-14));
  const double k89 = std::sqrt(8.0 / 9.0);
  CHECK(complete_K(k89) == doctest::Approx(2.5286255322188941).epsilon(1e-14));
  CHECK(complete_K(k89) == doctest::Approx(oracle_K_agm(k89)).epsilon(1e-14));
}

TEST_CASE("complete_K limit and domain") {
  CHECK(complete_K(1e-12) == doctest::Approx(M_PI / 2.0).epsilon(1e-10));
  CHECK_THROWS_AS(complete_K(0.0), DomainError);
  CHECK_THROWS_AS(complete_K(1.0), DomainError);
  CHECK_THROWS_AS(complete_K(-0.3), DomainError);
  CHECK_THROWS_AS(complete_K(2.0), DomainError);
}

TEST_CASE("K is strictly increasing in k and diverges toward k = 1") {
  double prev = 0.0;
  for (double k : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95, 0.999, 0.9999999}) {
    const double K = complete_K(k);
    CHECK(K > prev);
    CHECK(std::isfinite(K));
    CHECK(std::isfinite(complete_K(std::sqrt((1.0 - k) * (1.0 + k)))));
    prev = K;
  }
}

TEST_CASE("Modulus construction enforces the admissible band") {
  CHECK_THROWS_AS(Modulus::from_k(1e-13), DomainError);
  CHECK_THROWS_AS(Modulus::from_k(1.0 - 1e-13), DomainError);
  const Modulus m = Modulus::from_k(0.5);
  CHECK(std::abs(m.k2 + m.kprime * m.kprime - 1.0) < 1e-15);
}

TEST_CASE("jacobi trivial values at 0 and K") {
  const Modulus m = Modulus::from_k2(8.0 / 9.0);
  const JacobiValues at0 = jacobi_sn_cn_dn(0.0, m);
  CHECK(at0.sn == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(at0.cn == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(at0.dn == doctest::Approx(1.0).epsilon(1e-15));
  const double K = complete_K(m.k);
  const JacobiValues atK = jacobi_sn_cn_dn(K, m);
  CHECK(atK.sn == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(atK.cn) < 1e-13);
  CHECK(atK.dn == doctest::Approx(m.kprime).epsilon(1e-13));
}

TEST_CASE("jacobi half-K values against the closed half-argument forms") {
  // sn(K/2) = 1/sqrt(1+k'), cn(K/2) = sqrt(k'/(1+k')), dn(K/2) = sqrt(k').
  const Modulus m = Modulus::from_k2(8.0 / 9.0);
  const double K = complete_K(m.k);
  const JacobiValues j = jacobi_sn_cn_dn(K / 2.0, m);
  CHECK(j.sn == doctest::Approx(1.0 / std::sqrt(1.0 + m.kprime)).epsilon(1e-13));
  CHECK(j.cn == doctest::Approx(std::sqrt(m.kprime / (1.0 + m.kprime))).epsilon(1e-13));
  CHECK(j.dn == doctest::Approx(std::sqrt(m.kprime)).epsilon(1e-13));
  // Frozen: for k^2 = 8/9 these are sqrt(3)/2, 1/2, 1/sqrt(3).
  CHECK(j.sn == doctest::Approx(0.86602540378443865).epsilon(1e-13));
  CHECK(j.cn == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(j.dn == doctest::Approx(0.57735026918962576).epsilon(1e-13));
  CHECK(std::abs(j.sn * j.sn + j.cn * j.cn - 1.0) < 1e-12);
  CHECK(std::abs(j.dn * j.dn + m.k2 * j.sn * j.sn - 1.0) < 1e-12);
}

TEST_CASE("identities hold for 1000 random real and complex arguments") {
  std::mt19937_64 rng(20250810);
  std::uniform_real_distribution<double> kd(0.02, 0.98), ud(-2.0, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Modulus m = Modulus::from_k(kd(rng));
    const double K = complete_K(m.k), Kp = complete_K(m.kprime);
    const std::complex<double> u(ud(rng) * K, 0.45 * ud(rng) * Kp);
    const ComplexJacobiValues j = jacobi_sn_cn_dn(u, m);
    const std::complex<double> id1 = j.sn * j.sn + j.cn * j.cn - 1.0;
    const std::complex<double> id2 = j.dn * j.dn + m.k2 * j.sn * j.sn - 1.0;
    CHECK(std::abs(id1) < 1e-12);
    CHECK(std::abs(id2) < 1e-12);
  }
}

TEST_CASE("periodicity sn(u + 4K) = sn(u)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> kd(0.05, 0.95), ud(-6.0, 6.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Modulus m = Modulus::from_k(kd(rng));
    const double K = complete_K(m.k);
    const double u = ud(rng);
    CHECK(jacobi_sn_cn_dn(u + 4.0 * K, m).sn ==
          doctest::Approx(jacobi_sn_cn_dn(u, m).sn).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("pole proximity is reported") {
  const Modulus m = Modulus::from_k(0.7);
  const double Kp = complete_K(m.kprime);
  CHECK_THROWS_AS(jacobi_sn_cn_dn(std::complex<double>(0.0, Kp), m), NumericalError);
  CHECK_THROWS_AS(jacobi_sn_cn_dn(std::complex<double>(1e-12, Kp - 1e-12), m),
                  NumericalError);
}

TEST_CASE("inverse_sn endpoints, oracle value, and round trip") {
  const Modulus m = Modulus::from_k2(8.0 / 9.0);
  const double K = complete_K(m.k);
  CHECK(inverse_sn(0.0, m) == 0.0);
  CHECK(inverse_sn(1.0, m) == doctest::Approx(K).epsilon(1e-14));
  CHECK_THROWS_AS(inverse_sn(-0.1, m), DomainError);
  CHECK_THROWS_AS(inverse_sn(1.1, m), DomainError);

  // Bisection oracle directly on sn, independent of inverse_sn internals.
  const double target = std::sqrt(3.0) / 2.0;
  double lo = 0.0, hi = K;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (jacobi_sn_cn_dn(mid, m).sn < target ? lo : hi) = mid;
  }
  const double u = inverse_sn(target, m);
  CHECK(u == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-12));
  CHECK(jacobi_sn_cn_dn(u, m).sn == doctest::Approx(target).epsilon(1e-12));

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> sd(0.0, 1.0), kd(0.05, 0.95);
  for (int trial = 0; trial < 300; ++trial) {
    const Modulus mm = Modulus::from_k(kd(rng));
    const double KK = complete_K(mm.k);
    const double uu = sd(rng) * KK;
    CHECK(inverse_sn(jacobi_sn_cn_dn(uu, mm).sn, mm) ==
          doctest::Approx(uu).epsilon(1e-10).scale(KK));
  }
}

TEST_CASE("inverse_sn is monotone") {
  const Modulus m = Modulus::from_k(0.8);
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double u = inverse_sn(double(i) / 50.0, m);
    CHECK(u >= prev);
    prev = u;
  }
}

#include "akhiezer/theta.hpp"
#include "akhiezer/errors.hpp"

#include <cmath>
#include <complex>

namespace akhiezer {

namespace {

constexpr int kTermCap = 200;
constexpr double kTermCutoff = 1e-17;

enum class Kind { H, H1, Theta, Theta1 };

// theta_1/theta_4 flip sign under a half-period shift of the imaginary
// quasi-period; theta_2/theta_3 do not.
bool odd_under_imag_shift(Kind kind) { return kind == Kind::H || kind == Kind::Theta; }
// theta_1/theta_2 flip sign under u -> u + 2K; theta_3/theta_4 are periodic.
bool odd_under_real_shift(Kind kind) { return kind == Kind::H || kind == Kind::H1; }

// q-series in z = pi u / (2K). T is double or complex<double>.
template <typename T>
struct Series {
  T value;
  double tail;
};

template <typename T>
Series<T> sum_series(Kind kind, T z, double q, double im_z_abs) {
  using std::cos;
  using std::sin;
  // Growth factor of the oscillatory part per index step, e^{2|Im z|}.
  const double osc = std::exp(2.0 * im_z_abs);
  T sum{};
  double run_max = 0.0;
  double last_term = 0.0;
  int n = 0;
  for (; n < kTermCap; ++n) {
    T term;
    double bound;
    switch (kind) {
      case Kind::H: {
        const double a = std::pow(q, (n + 0.5) * (n + 0.5)) * ((n % 2) ? -2.0 : 2.0);
        term = a * sin((2.0 * n + 1.0) * z);
        bound = std::abs(a) * std::pow(osc, n + 0.5);
        break;
      }
      case Kind::H1: {
        const double a = 2.0 * std::pow(q, (n + 0.5) * (n + 0.5));
        term = a * cos((2.0 * n + 1.0) * z);
        bound = a * std::pow(osc, n + 0.5);
        break;
      }
      case Kind::Theta:
      case Kind::Theta1: {
        if (n == 0) {
          term = T(1);
          bound = 1.0;
          break;
        }
        double a = 2.0 * std::pow(q, double(n) * n);
        if (kind == Kind::Theta && (n % 2)) a = -a;
        term = a * cos(2.0 * double(n) * z);
        bound = std::abs(a) * std::pow(osc, n);
        break;
      }
    }
    sum += term;
    run_max = std::max(run_max, std::abs(sum));
    last_term = bound;
    if (n >= 2 && bound < kTermCutoff * std::max(1.0, run_max)) break;
  }
  if (n >= kTermCap)
    throw NumericalError("theta series did not converge within 200 terms");
  // Geometric tail: successive term ratio is at most q^{2n} * osc.
  const double ratio = std::pow(q, 2.0 * n) * osc;
  const double tail = (ratio < 0.5) ? last_term * ratio / (1.0 - ratio) : last_term;
  return Series<T>{sum, tail};
}

struct Reduced {
  std::complex<double> u;
  std::complex<double> multiplier;
  bool real_sign_flip;
};

// Bring Im u into [-K', K'] using the 2iK' quasi-period and Re u into
// [-K, K] using the 2K (quasi-)period:
//   theta(z + m pi tau) = s^m q^{-m^2} e^{-2 i m z} theta(z).
Reduced reduce_argument(Kind kind, std::complex<double> u, const Nome& nome) {
  Reduced r{u, {1.0, 0.0}, false};
  const double twoKp = 2.0 * nome.Kprime;
  const long m = std::lround(u.imag() / twoKp);
  if (m != 0) {
    r.u -= std::complex<double>(0.0, double(m) * twoKp);
    // exponent of the multiplier: -m^2 log q ... computed in log form to
    // dodge overflow for large |m|.
    const std::complex<double> z = M_PI * r.u / (2.0 * nome.K);
    std::complex<double> logmul =
        -double(m) * double(m) * std::log(nome.q) - 2.0 * double(m) * std::complex<double>(0, 1) * z;
    r.multiplier = std::exp(logmul);
    if (odd_under_imag_shift(kind) && (m % 2 != 0)) r.multiplier = -r.multiplier;
  }
  const double twoK = 2.0 * nome.K;
  const long mr = std::lround(r.u.real() / twoK);
  if (mr != 0) {
    r.u -= double(mr) * twoK;
    if (odd_under_real_shift(kind) && (mr % 2 != 0)) r.multiplier = -r.multiplier;
  }
  return r;
}

ThetaValue eval_complex(Kind kind, std::complex<double> u, const Nome& nome) {
  const Reduced red = reduce_argument(kind, u, nome);
  const std::complex<double> z = M_PI * red.u / (2.0 * nome.K);
  const auto s = sum_series<std::complex<double>>(kind, z, nome.q,
                                                  std::abs(z.imag()));
  return ThetaValue{red.multiplier * s.value, std::abs(red.multiplier) * s.tail};
}

double eval_real(Kind kind, double u, const Nome& nome) {
  const double twoK = 2.0 * nome.K;
  const long mr = std::lround(u / twoK);
  double sign = 1.0;
  if (mr != 0) {
    u -= double(mr) * twoK;
    if (odd_under_real_shift(kind) && (mr % 2 != 0)) sign = -1.0;
  }
  const double z = M_PI * u / (2.0 * nome.K);
  return sign * sum_series<double>(kind, z, nome.q, 0.0).value;
}

} // namespace

Nome Nome::from_periods(const QuarterPeriods& periods) {
  const double q = std::exp(-M_PI * periods.Kprime / periods.K);
  if (!(q > 0.0 && q < 1.0)) throw DomainError("Nome: q outside (0, 1)");
  return Nome{q, periods.K, periods.Kprime};
}

Nome Nome::from_modulus(const Modulus& mod) {
  return from_periods(quarter_periods(mod));
}

ThetaValue theta_H(std::complex<double> u, const Nome& nome) {
  return eval_complex(Kind::H, u, nome);
}
ThetaValue theta_H1(std::complex<double> u, const Nome& nome) {
  return eval_complex(Kind::H1, u, nome);
}
ThetaValue theta_Theta(std::complex<double> u, const Nome& nome) {
  return eval_complex(Kind::Theta, u, nome);
}
ThetaValue theta_Theta1(std::complex<double> u, const Nome& nome) {
  return eval_complex(Kind::Theta1, u, nome);
}

double theta_H(double u, const Nome& nome) { return eval_real(Kind::H, u, nome); }
double theta_H1(double u, const Nome& nome) { return eval_real(Kind::H1, u, nome); }
double theta_Theta(double u, const Nome& nome) { return eval_real(Kind::Theta, u, nome); }
double theta_Theta1(double u, const Nome& nome) { return eval_real(Kind::Theta1, u, nome); }

double theta_Theta_logderiv(double u, const Nome& nome) {
  u = std::remainder(u, 2.0 * nome.K);
  const double w = M_PI * u / nome.K; // Theta(u) = 1 + 2 sum (-1)^n q^{n^2} cos(n w)
  const double q = nome.q;
  double num = 0.0; // Theta'(u)
  double den = 1.0; // Theta(u)
  for (int n = 1; n <= kTermCap; ++n) {
    const double a = 2.0 * std::pow(q, double(n) * n) * ((n % 2) ? -1.0 : 1.0);
    den += a * std::cos(n * w);
    num += -a * (double(n) * M_PI / nome.K) * std::sin(n * w);
    if (std::abs(a) * (1.0 + double(n) * M_PI / nome.K) < 1e-18) break;
  }
  return num / den;
}

} // namespace akhiezer

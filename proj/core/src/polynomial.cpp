#include "akhiezer/polynomial.hpp"
#include "akhiezer/errors.hpp"

#include <algorithm>
#include <cmath>

namespace akhiezer {

namespace poly {

double eval(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<double> multiply(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<double> derivative(std::span<const double> c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = double(i) * c[i];
  return out;
}

double integrate(std::span<const double> c, double lo, double hi) {
  double acc_hi = 0.0, acc_lo = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    const double a = c[i] / double(i + 1);
    acc_hi = acc_hi * hi + a;
    acc_lo = acc_lo * lo + a;
  }
  return acc_hi * hi - acc_lo * lo;
}

std::vector<double> deflate(std::span<const double> c, double r) {
  if (c.size() <= 1) throw DomainError("poly::deflate: constant polynomial");
  std::vector<double> out(c.size() - 1);
  double carry = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    out[i] = carry;
    carry = c[i] + r * carry;
  }
  return out;
}

} // namespace poly

MonicPolynomial MonicPolynomial::from_coefficients(std::vector<double> ascending) {
  if (ascending.empty()) throw DomainError("MonicPolynomial: empty coefficients");
  const double lead = ascending.back();
  if (lead == 0.0 || !std::isfinite(lead))
    throw DomainError("MonicPolynomial: zero or non-finite leading coefficient");
  for (double& c : ascending) {
    c /= lead;
    if (!std::isfinite(c)) throw DomainError("MonicPolynomial: non-finite coefficient");
  }
  ascending.back() = 1.0;
  return MonicPolynomial(std::move(ascending));
}

MonicPolynomial MonicPolynomial::from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    c = poly::multiply(c, std::vector<double>{-r, 1.0});
  }
  return MonicPolynomial(std::move(c));
}

std::vector<double> MonicPolynomial::descending_coefficients() const {
  std::vector<double> d(coeffs_.rbegin(), coeffs_.rend());
  return d;
}

double MonicPolynomial::derivative_at(double x) const {
  const auto d = poly::derivative(coeffs_);
  return poly::eval(d, x);
}

MonicPolynomial MonicPolynomial::multiply(const MonicPolynomial& other) const {
  return MonicPolynomial(poly::multiply(coeffs_, other.coeffs_));
}

MonicPolynomial MonicPolynomial::deflate_root(double r) const {
  return MonicPolynomial(poly::deflate(coeffs_, r));
}

} // namespace akhiezer

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace akhiezer {

namespace poly {

// Coefficient vectors are ascending: c[i] multiplies x^i.

double eval(std::span<const double> c, double x);
std::vector<double> multiply(std::span<const double> a, std::span<const double> b);
std::vector<double> derivative(std::span<const double> c);

/// Exact definite integral from the monomial antiderivative.
double integrate(std::span<const double> c, double lo, double hi);

/// Divide by (x - r); returns the quotient, discarding the remainder.
std::vector<double> deflate(std::span<const double> c, double r);

} // namespace poly

/// A monic real polynomial; construction renormalizes so the leading
/// coefficient is exactly 1.
class MonicPolynomial {
public:
  static MonicPolynomial from_coefficients(std::vector<double> ascending);
  static MonicPolynomial from_roots(std::span<const double> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  std::vector<double> descending_coefficients() const;

  double operator()(double x) const { return poly::eval(coeffs_, x); }
  double derivative_at(double x) const;

  MonicPolynomial multiply(const MonicPolynomial& other) const;
  MonicPolynomial deflate_root(double r) const;

private:
  explicit MonicPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<double> coeffs_;
};

} // namespace akhiezer

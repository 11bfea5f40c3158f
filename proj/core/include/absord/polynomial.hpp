#pragma once

#include <optional>
#include <string>
#include <vector>

namespace absord {

// Polynomial in one variable q with integer coefficients, stored ascending.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial zero() { return IntPolynomial{}; }
  static IntPolynomial one() { return constant(1); }
  static IntPolynomial constant(long long c);
  // prod over e in exps of (1 + e*q)
  static IntPolynomial from_exponents(const std::vector<int>& exps);
  // coefficient k = number of occurrences of k in values (rank polynomial helper)
  static IntPolynomial from_counts(const std::vector<int>& values);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int k) const;
  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long long eval(long long q) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  // Exact quotient, or nullopt when the division leaves a remainder or a
  // non-integer intermediate coefficient.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  // "1 + 6q + 8q^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<long long> c_;
};

}  // namespace absord

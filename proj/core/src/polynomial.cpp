#include "absord/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace absord {

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(long long c) {
  IntPolynomial p;
  if (c != 0) p.c_ = {c};
  return p;
}

IntPolynomial IntPolynomial::from_exponents(const std::vector<int>& exps) {
  IntPolynomial p = one();
  for (int e : exps) p = p * IntPolynomial({1, e});
  return p;
}

IntPolynomial IntPolynomial::from_counts(const std::vector<int>& values) {
  std::vector<long long> c;
  for (int v : values) {
    if (v < 0) throw std::invalid_argument("from_counts: negative rank");
    if (static_cast<size_t>(v) >= c.size()) c.resize(v + 1, 0);
    ++c[v];
  }
  return IntPolynomial(std::move(c));
}

long long IntPolynomial::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return 0;
  return c_[k];
}

long long IntPolynomial::eval(long long q) const {
  long long r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return zero();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<long long> rem = c_;
  std::vector<long long> quot(degree() - divisor.degree() + 1, 0);
  long long lead = divisor.c_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    long long top = rem[k + divisor.degree()];
    if (top % lead != 0) return std::nullopt;
    long long f = top / lead;
    quot[k] = f;
    for (int j = 0; j <= divisor.degree(); ++j) rem[k + j] -= f * divisor.c_[j];
  }
  for (long long r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    long long a = c_[k];
    if (a == 0) continue;
    if (!s.empty()) s += a > 0 ? " + " : " - ";
    else if (a < 0) s += "-";
    long long m = a < 0 ? -a : a;
    if (k == 0) {
      s += std::to_string(m);
    } else {
      if (m != 1) s += std::to_string(m);
      s += "q";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace absord

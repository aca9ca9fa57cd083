#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <string>
#include <vector>

#include "hess/errors.hpp"

namespace hess {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// dense univariate polynomial with exact integer coefficients.
// the variable is the half-degree t = q^2 throughout: Betti data live in
// even cohomological degrees, so rendering in q doubles exponents.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(bigint v) { return QPoly({std::move(v)}); }
  static QPoly monomial(int deg, bigint coeff = 1) {
    std::vector<bigint> c(static_cast<size_t>(deg) + 1);
    c.back() = std::move(coeff);
    return QPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<bigint>& coeffs() const { return c_; }
  bigint coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : bigint(0);
  }
  bigint leading() const { return c_.empty() ? bigint(0) : c_.back(); }

  bigint eval(const bigint& x) const {
    bigint acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<bigint> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return QPoly(std::move(c));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<bigint> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return QPoly(std::move(c));
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<bigint> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
  }
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // "1+2t+t^2"; doubled exponents in q when q_exponents is set.
  std::string render(bool q_exponents = false) const {
    if (c_.empty()) return "0";
    std::string out;
    const char* var = q_exponents ? "q" : "t";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      bigint a = c_[i];
      if (!out.empty()) {
        out += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      } else if (a < 0) {
        out += "-";
        a = -a;
      }
      size_t e = q_exponents ? 2 * i : i;
      if (e == 0) {
        out += a.str();
      } else {
        if (a != 1) out += a.str() + "*";
        out += var;
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<bigint> c_;  // c_[i] multiplies t^i; no trailing zeros
};

namespace closedform {

// 1 + t + ... + t^{n-1}; counts lines in n-space over a field with t elements.
inline QPoly q_int(int n) {
  if (n < 0) throw invalid_input("q_int: negative n");
  std::vector<bigint> c(static_cast<size_t>(n), bigint(1));
  return QPoly(std::move(c));
}

// product of q_int(1..n); counts complete flags.  [0]! = 1.
inline QPoly q_factorial(int n) {
  if (n < 0) throw invalid_input("q_factorial: negative n");
  QPoly acc = QPoly::constant(1);
  for (int j = 1; j <= n; ++j) acc *= q_int(j);
  return acc;
}

inline bigint q_int_at(int n, const bigint& p) { return q_int(n).eval(p); }
inline bigint q_factorial_at(int n, const bigint& p) { return q_factorial(n).eval(p); }

}  // namespace closedform
}  // namespace hess

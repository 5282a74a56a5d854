#pragma once

#include <string>
#include <vector>

#include "hdeg/bigint.hpp"

namespace hdeg {

// Dense univariate polynomial over Z; index = power of t.  The empty
// coefficient sequence is the zero polynomial, otherwise the last
// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs)
      : c_(std::move(coeffs)) {
    normalize();
  }
  static IntPolynomial constant(BigInt v) {
    return IntPolynomial({std::move(v)});
  }
  // 1 - t, the reduction factor used throughout.
  static IntPolynomial one_minus_t() { return IntPolynomial({1, -1}); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is undefined; callers never ask (h has
  // constant term 1), kept as -1 for the internal arithmetic.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(int i) const {
    static const BigInt zero = 0;
    return i >= 0 && i < static_cast<int>(c_.size())
               ? c_[static_cast<std::size_t>(i)]
               : zero;
  }
  const std::vector<BigInt>& coefficients() const { return c_; }

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (const BigInt& c : c_) s += c;
    return s;
  }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const;  // e.g. "1 + 3t - 2t^3"

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient p / (1 - t); throws NotDivisible when p(1) != 0.
IntPolynomial poly_divide_by_one_minus_t(const IntPolynomial& p);

}  // namespace hdeg

#include "hdeg/polynomial.hpp"

#include "hdeg/errors.hpp"

namespace hdeg {

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1 || i == 0) out += a.str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  return a + b;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  return a * b;
}

IntPolynomial poly_divide_by_one_minus_t(const IntPolynomial& p) {
  // From p = q (1-t): q_i = p_i + q_{i-1}, so q is the prefix-sum sequence;
  // the final carry is p(1) and must vanish.
  if (p.is_zero()) return {};
  std::vector<BigInt> q(p.coefficients().size(), 0);
  BigInt carry = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    carry += p.coefficients()[i];
    q[i] = carry;
  }
  if (carry != 0)
    throw NotDivisible("polynomial has value " + carry.str() + " at t=1");
  q.pop_back();  // top prefix sum is the vanishing carry
  return IntPolynomial(std::move(q));
}

}  // namespace hdeg

#include <doctest.h>

#include <random>

#include "hdeg/errors.hpp"
#include "hdeg/polynomial.hpp"

using namespace hdeg;

TEST_CASE("normalization and degree") {
  CHECK(IntPolynomial({}).is_zero());
  CHECK(IntPolynomial({0, 0}).is_zero());
  CHECK(IntPolynomial({1, 3, 0}).degree() == 1);
  CHECK(IntPolynomial::constant(7).degree() == 0);
  CHECK(IntPolynomial({1, 3}).coeff(5) == 0);
}

TEST_CASE("arithmetic basics") {
  IntPolynomial one_minus = IntPolynomial::one_minus_t();
  IntPolynomial one_plus({1, 1});
  CHECK(poly_mul(one_minus, one_plus) == IntPolynomial({1, 0, -1}));
  CHECK(poly_add(one_minus, one_plus) == IntPolynomial({2}));
  CHECK((one_plus - one_plus).is_zero());
}

TEST_CASE("division by 1 - t") {
  CHECK(poly_divide_by_one_minus_t(IntPolynomial({1, 0, -1})) ==
        IntPolynomial({1, 1}));
  CHECK(poly_divide_by_one_minus_t(IntPolynomial({1, -1})) ==
        IntPolynomial({1}));
  CHECK_THROWS_AS(poly_divide_by_one_minus_t(IntPolynomial({1, 1})),
                  NotDivisible);
  CHECK(poly_divide_by_one_minus_t(IntPolynomial({})).is_zero());
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> coeffs(1 + rng() % 8);
    for (auto& c : coeffs) c = static_cast<long long>(rng() % 21) - 10;
    IntPolynomial q(coeffs);
    IntPolynomial p = poly_mul(q, IntPolynomial::one_minus_t());
    CHECK(poly_divide_by_one_minus_t(p) == q);
  }
}

TEST_CASE("rendering") {
  CHECK(IntPolynomial({1, 3, 0, -2}).to_string() == "1 + 3t - 2t^3");
  CHECK(IntPolynomial({}).to_string() == "0");
  CHECK(IntPolynomial({0, 1}).to_string() == "t");
  CHECK(IntPolynomial({-1, 0, 1}).to_string() == "-1 + t^2");
}

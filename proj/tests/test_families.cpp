#include <doctest.h>

#include "hdeg/errors.hpp"
#include "hdeg/families.hpp"
#include "hdeg/hilbert.hpp"

using namespace hdeg;

TEST_CASE("binomial helper") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("path counts") {
  CHECK(path_count(5, 2) == 6);
  CHECK(path_count(3, 2) == 1);  // boundary n = 2i - 1
  CHECK(path_count(2, 2) == 0);
  CHECK(path_count(7, 0) == 1);
  // Against enumeration.
  for (int n = 1; n <= 16; ++n) {
    FVector fv = f_vector(path(n));
    for (int i = 0; i <= n; ++i) {
      BigInt expect = i == 0 ? BigInt(1)
                      : i <= fv.alpha() ? fv.g(i)
                                        : BigInt(0);
      CHECK(path_count(n, i) == expect);
    }
  }
}

TEST_CASE("cycle counts") {
  CHECK(cycle_count(6, 2) == 9);
  CHECK(cycle_count(6, 3) == 2);
  CHECK(cycle_count(5, 3) == 0);
  CHECK(cycle_count(9, 0) == 1);
  for (int n = 3; n <= 16; ++n) {
    FVector fv = f_vector(cycle(n));
    for (int i = 0; i <= n; ++i) {
      BigInt expect = i == 0 ? BigInt(1)
                      : i <= fv.alpha() ? fv.g(i)
                                        : BigInt(0);
      CHECK(cycle_count(n, i) == expect);
    }
  }
}

TEST_CASE("alternating sum tables") {
  CHECK(path_alt_sum(1) == 1);
  CHECK(path_alt_sum(2) == 2);
  CHECK(path_alt_sum(3) == 2);
  CHECK(path_alt_sum(9) == 2);  // 9 = 3 mod 6
  CHECK(cycle_alt_sum(3) == 3);
  CHECK(cycle_alt_sum(4) == 2);
  CHECK(cycle_alt_sum(5) == 0);
  CHECK(cycle_alt_sum(6) == -1);
  for (int n = 1; n <= 14; ++n)
    CHECK(path_alt_sum(n) == alternating_g(f_vector(path(n))));
  for (int n = 3; n <= 14; ++n)
    CHECK(cycle_alt_sum(n) == alternating_g(f_vector(cycle(n))));
}

TEST_CASE("T ladder") {
  CHECK(t_ladder(1) == 1);
  CHECK(t_ladder(3) == 1);
  CHECK(t_ladder(4) == -2);
  CHECK(t_ladder(5) == -4);
  for (int n = 1; n <= 12; ++n)
    CHECK(t_ladder(n) == d_ladder(f_vector(path(n))).values[0]);
  for (int n = 1; n <= 24; ++n)
    CHECK(t_ladder(n) + 2 * t_ladder(n + 3) + t_ladder(n + 6) == 0);
}

TEST_CASE("degree formulas") {
  CHECK(path_degree(4) == 1);
  CHECK(cycle_degree(6) == 3);
  CHECK(cycle_degree(5) == 2);
  CHECK(path_degree(1) == 0);
  for (int n = 1; n <= 14; ++n)
    CHECK(path_degree(n) == summarize(path(n)).deg_h);
  for (int n = 3; n <= 14; ++n)
    CHECK(cycle_degree(n) == summarize(cycle(n)).deg_h);
}

TEST_CASE("degree reports") {
  auto rp = family_degree_report("path", 7);
  CHECK(rp.alpha == 4);
  CHECK(rp.deg_formula == 4);
  REQUIRE(rp.deg_brute.has_value());
  CHECK(*rp.deg_brute == 4);

  auto rc = family_degree_report("cycle", 30, 18);
  CHECK(rc.deg_formula == 15);
  CHECK(!rc.deg_brute.has_value());

  CHECK_THROWS_AS(family_degree_report("wheel", 5), InvalidFamilyParameter);
  CHECK_THROWS_AS(path_count(0, 1), InvalidFamilyParameter);
  CHECK_THROWS_AS(cycle_count(2, 1), InvalidFamilyParameter);
  CHECK_THROWS_AS(cycle_degree(2), InvalidFamilyParameter);
}

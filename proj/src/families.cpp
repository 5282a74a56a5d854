#include "hdeg/families.hpp"

#include "hdeg/errors.hpp"
#include "hdeg/graph.hpp"
#include "hdeg/hilbert.hpp"

namespace hdeg {

BigInt path_count(int n, int i) {
  if (n < 1) throw InvalidFamilyParameter("path_count needs n >= 1");
  if (i < 0) return 0;
  if (n < 2 * i - 1) return 0;
  return binomial(n - i + 1, i);
}

BigInt cycle_count(int n, int i) {
  if (n < 3) throw InvalidFamilyParameter("cycle_count needs n >= 3");
  if (i < 0) return 0;
  if (i == 0) return 1;  // the empty set, kept for uniform indexing
  if (n < 2 * i) return 0;
  BigInt numer = BigInt(n) * binomial(n - i - 1, i - 1);
  if (numer % i != 0)
    throw InternalInconsistency("cycle_count not divisible by i");
  return numer / i;
}

BigInt path_alt_sum(int n) {
  if (n < 1) throw InvalidFamilyParameter("path_alt_sum needs n >= 1");
  switch (n % 6) {
    case 2:
    case 3:
      return 2;
    case 1:
    case 4:
      return 1;
    default:  // 0, 5
      return 0;
  }
}

BigInt cycle_alt_sum(int n) {
  if (n < 3) throw InvalidFamilyParameter("cycle_alt_sum needs n >= 3");
  switch (n % 6) {
    case 0:
      return -1;
    case 1:
    case 5:
      return 0;
    case 2:
    case 4:
      return 2;
    default:  // 3
      return 3;
  }
}

BigInt t_ladder(int n) {
  if (n < 1) throw InvalidFamilyParameter("t_ladder needs n >= 1");
  int k, sign_parity;
  BigInt value;
  if (n % 3 == 1) {
    k = (n - 1) / 3;
    value = k + 1;
  } else if (n % 3 == 2) {
    k = (n - 2) / 3;
    value = 2 * (k + 1);
  } else {
    k = (n - 3) / 3;
    value = k + 1;
  }
  sign_parity = k % 2;
  if (sign_parity) value = -value;

  // The case formula must agree with D_0 computed directly.
  BigInt direct = 0;
  int top = (n + 1) / 2;
  for (int j = 1; j <= top; ++j) {
    BigInt term = BigInt(j) * path_count(n, j);
    if (j % 2 == 1)
      direct += term;
    else
      direct -= term;
  }
  if (direct != value)
    throw InternalInconsistency("t_ladder case formula disagrees with sum");
  return value;
}

int path_degree(int n) {
  if (n < 1) throw InvalidFamilyParameter("path_degree needs n >= 1");
  int alpha = (n + 1) / 2;
  return n % 3 == 1 ? alpha - 1 : alpha;
}

int cycle_degree(int n) {
  if (n < 3) throw InvalidFamilyParameter("cycle_degree needs n >= 3");
  return n / 2;
}

FamilyDegreeReport family_degree_report(const std::string& family, int n,
                                        int brute_budget) {
  FamilyDegreeReport out;
  out.family = family;
  out.n = n;
  if (family == "path") {
    out.alpha = (n + 1) / 2;
    out.deg_formula = path_degree(n);
  } else if (family == "cycle") {
    out.alpha = n / 2;
    out.deg_formula = cycle_degree(n);
  } else {
    throw InvalidFamilyParameter("unknown family: " + family);
  }
  if (n <= brute_budget) {
    Graph g = family == "path" ? path(n) : cycle(n);
    out.deg_brute = summarize(g).deg_h;
  }
  return out;
}

}  // namespace hdeg

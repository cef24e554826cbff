#pragma once

#include <string>
#include <vector>

namespace hlbc {

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// Polynomial in t with 64-bit integer coefficients, overflow-checked.
// Canonical form has no trailing zero coefficient.
struct TPoly {
  std::vector<long long> c;  // c[k] is the coefficient of t^k

  TPoly() = default;
  static TPoly constant(long long v);
  // t^a (1-t)^b, expanded.
  static TPoly pow_t_one_minus_t(int a, int b);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long coeff(int k) const;
  long long eval01(int t) const;  // t in {0,1}

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly&, const TPoly&) = default;

  void trim();
  std::string str() const;  // ascending degree, e.g. "2 - t - t^2"
};

}  // namespace hlbc

#include "hlbc/tpoly.hpp"

#include <stdexcept>

namespace hlbc {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

TPoly TPoly::constant(long long v) {
  TPoly p;
  if (v != 0) p.c = {v};
  return p;
}

TPoly TPoly::pow_t_one_minus_t(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  TPoly p;
  p.c.assign(static_cast<std::size_t>(a + b) + 1, 0);
  // binomial expansion of (1-t)^b, shifted by t^a
  long long binom = 1;
  for (int k = 0; k <= b; ++k) {
    p.c[static_cast<std::size_t>(a + k)] = (k % 2 == 0) ? binom : -binom;
    if (k < b) binom = checked_mul(binom, b - k) / (k + 1);
  }
  return p;
}

long long TPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return 0;
  return c[static_cast<std::size_t>(k)];
}

long long TPoly::eval01(int t) const {
  if (t == 0) return coeff(0);
  if (t != 1) throw std::invalid_argument("only t=0 and t=1 supported");
  long long s = 0;
  for (long long x : c) s = checked_add(s, x);
  return s;
}

void TPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (c.size() < o.c.size()) c.resize(o.c.size(), 0);
  for (std::size_t k = 0; k < o.c.size(); ++k) c[k] = checked_add(c[k], o.c[k]);
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (c.size() < o.c.size()) c.resize(o.c.size(), 0);
  for (std::size_t k = 0; k < o.c.size(); ++k) c[k] = checked_add(c[k], -o.c[k]);
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      p.c[i + j] = checked_add(p.c[i + j], checked_mul(a.c[i], b.c[j]));
  }
  p.trim();
  return p;
}

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const long long v = c[k];
    if (v == 0) continue;
    if (first) {
      if (v < 0) s += "-";
      first = false;
    } else {
      s += (v < 0) ? " - " : " + ";
    }
    const long long av = v < 0 ? -v : v;
    if (k == 0)
      s += std::to_string(av);
    else {
      if (av != 1) s += std::to_string(av);
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace hlbc

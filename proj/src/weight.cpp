#include "hlbc/weight.hpp"

#include <stdexcept>

namespace hlbc {

WeightVec WeightVec::from_ints(const std::vector<int>& v) {
  std::vector<int> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = 2 * v[i];
  return WeightVec(std::move(d));
}

bool WeightVec::is_zero() const {
  for (int x : d)
    if (x != 0) return false;
  return true;
}

bool WeightVec::all_even() const {
  for (int x : d)
    if (x % 2 != 0) return false;
  return true;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (d.size() != o.d.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  if (d.size() != o.d.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
  return *this;
}

WeightVec WeightVec::operator-() const {
  WeightVec r = *this;
  for (int& x : r.d) x = -x;
  return r;
}

WeightVec& WeightVec::scale(int c) {
  for (int& x : d) x *= c;
  return *this;
}

std::strong_ordering operator<=>(const WeightVec& a, const WeightVec& b) {
  if (a.d.size() != b.d.size()) return a.d.size() <=> b.d.size();
  for (std::size_t i = 0; i < a.d.size(); ++i)
    if (a.d[i] != b.d[i]) return a.d[i] <=> b.d[i];
  return std::strong_ordering::equal;
}

int pair_coroot(const WeightVec& v, const std::vector<int>& coroot) {
  if (v.d.size() != coroot.size()) throw std::invalid_argument("coroot rank mismatch");
  long long dot = 0;
  for (std::size_t i = 0; i < coroot.size(); ++i)
    dot += static_cast<long long>(v.d[i]) * coroot[i];
  if (dot % 2 != 0) throw std::domain_error("non-integral coroot pairing");
  return static_cast<int>(dot / 2);
}

std::string to_string(const WeightVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.d.size(); ++i) {
    if (i) s += ",";
    if (v.d[i] % 2 == 0)
      s += std::to_string(v.d[i] / 2);
    else
      s += std::to_string(v.d[i]) + "/2";
  }
  s += ")";
  return s;
}

}  // namespace hlbc

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hlbc {

// Weight in the coordinates e_1..e_n, stored with doubled entries so that
// half-integral (spin) weights need no rational arithmetic.  The actual
// coordinate value is d[i]/2.
struct WeightVec {
  std::vector<int> d;

  WeightVec() = default;
  explicit WeightVec(std::vector<int> doubled) : d(std::move(doubled)) {}

  static WeightVec zero(int n) { return WeightVec(std::vector<int>(n, 0)); }
  // Integral coordinates, doubled on the way in.
  static WeightVec from_ints(const std::vector<int>& v);

  int n() const { return static_cast<int>(d.size()); }
  bool is_zero() const;
  bool all_even() const;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  WeightVec operator-() const;
  WeightVec& scale(int c);

  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }

  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  // Lexicographic on the doubled coordinates; the canonical term order.
  friend std::strong_ordering operator<=>(const WeightVec& a, const WeightVec& b);
};

// <v, coroot>, with v doubled and the coroot in ordinary integer coordinates.
// Throws if the pairing is not integral (v outside the weight lattice).
int pair_coroot(const WeightVec& v, const std::vector<int>& coroot);

std::string to_string(const WeightVec& v);  // halves printed as k/2

}  // namespace hlbc

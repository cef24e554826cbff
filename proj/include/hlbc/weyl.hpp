#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hlbc/letters.hpp"
#include "hlbc/weight.hpp"

namespace hlbc {

enum class LieType { B, C };

std::string to_string(LieType t);
LieType lie_type_from_string(const std::string& s);

enum class ReflKind { Transposition, SignedTransposition, SignChange };

// A reflection of the hyperoctahedral group, acting on window positions upon
// right multiplication:
//   (i,j)   with i<j  swaps positions i and j;
//   (i,-j)  with i<j  swaps positions i and j and negates both entries;
//   (i,-i)            negates position i.
// The group action never depends on the ambient type; only roots/coroots do.
struct ReflectionBC {
  ReflKind kind{};
  int i = 0;
  int j = 0;  // equals i for SignChange

  static ReflectionBC transposition(int i, int j);
  static ReflectionBC signed_transposition(int i, int j);
  static ReflectionBC sign_change(int i);

  friend bool operator==(const ReflectionBC&, const ReflectionBC&) = default;
};

// Signed permutation in window notation w(1)..w(n); w(-i) = -w(i) is implicit.
struct SignedPerm {
  Window window;

  SignedPerm() = default;
  explicit SignedPerm(Window w) : window(std::move(w)) {}
  static SignedPerm identity(int n);

  int n() const { return static_cast<int>(window.size()); }
  Letter at(int i) const { return window[static_cast<std::size_t>(i) - 1]; }  // 1-based
  bool is_valid() const;  // absolute values are a permutation of 1..n

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b);
};

SignedPerm apply_reflection(const SignedPerm& w, const ReflectionBC& r);

// Inversion counts in the letter order: ell_plus over pairs k<l with
// w(k) > w(l), ell_minus over pairs k<=l with w(k) > -w(l).
int ell_plus(const SignedPerm& w);
int ell_minus(const SignedPerm& w);
int length(const SignedPerm& w);

// ell_plus of a bare column (pairwise distinct absolute values required).
int ell_plus_column(const Column& c, int n);

// length(w r) - length(w) from the closed-form window counts; always odd.
// The descending case is handled by evaluating the ascending formula at w r.
int length_diff(const SignedPerm& w, const ReflectionBC& r);
bool reflection_ascends(const SignedPerm& w, const ReflectionBC& r);

// Part of ell_minus supported on the pairs (k,l) that precede (i,j) in the
// column-major order (1,1),(1,2),(2,2),(1,3),...,(n,n).
int ell_minus_ij(const SignedPerm& w, int i, int j);

// All 2^n n! elements, in lexicographic window order; throws above the cap.
std::vector<SignedPerm> enumerate_group(int n, std::size_t cap = (std::size_t{1} << 24));
std::size_t group_order(int n);

// w(sum v_i e_i) = sum v_i e_{w(i)} with e_{-i} = -e_i.
WeightVec act_on_weight(const SignedPerm& w, const WeightVec& v);
std::vector<int> act_on_coroot(const SignedPerm& w, const std::vector<int>& coroot);

int det_sign(const SignedPerm& w);  // (-1)^length(w)

std::string to_string(const SignedPerm& w);

}  // namespace hlbc

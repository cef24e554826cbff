#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hlbc {

// A letter of the alphabet {1 < 2 < ... < n < -n < ... < -1}.  Negative
// values encode barred letters, and the bar of -i is i again.  Barred
// letters sit ABOVE all unbarred ones, largest bar first, so native integer
// comparison of `val` is wrong; use order_key / letter_lt.
struct Letter {
  int val = 0;

  constexpr Letter() = default;
  constexpr explicit Letter(int v) : val(v) {}

  constexpr Letter bar() const { return Letter{-val}; }
  constexpr int abs() const { return val < 0 ? -val : val; }
  constexpr bool barred() const { return val < 0; }

  friend constexpr bool operator==(Letter a, Letter b) { return a.val == b.val; }
  friend constexpr bool operator!=(Letter a, Letter b) { return a.val != b.val; }
};

// Rank of a letter in the total order: i -> i, bar(i) -> 2n+1-i.
constexpr int order_key(Letter a, int n) { return a.val > 0 ? a.val : 2 * n + 1 + a.val; }

constexpr bool letter_lt(Letter a, Letter b, int n) {
  return order_key(a, n) < order_key(b, n);
}
constexpr bool letter_le(Letter a, Letter b, int n) {
  return order_key(a, n) <= order_key(b, n);
}

inline Letter letter_from_key(int key, int n) {
  if (key < 1 || key > 2 * n) throw std::out_of_range("letter key out of range");
  return Letter{key <= n ? key : key - (2 * n + 1)};
}

using Word = std::vector<Letter>;
using Column = Word;   // a filling column: letters with pairwise distinct absolute values
using Window = Word;   // the window w(1)..w(n) of a signed permutation

// Number of entries of `word` strictly between a and b in the letter order.
int count_between(const Word& word, Letter a, Letter b, int n);

// Letters strictly between a and b that are not equal to +-x for any x in `forbidden`.
int count_interval_excluding(Letter a, Letter b, const Word& forbidden, int n);

bool distinct_abs(const Word& word);

std::string to_string(Letter a);
std::string to_string(const Word& w);

}  // namespace hlbc

#include "hlbc/letters.hpp"

#include <algorithm>

namespace hlbc {

int count_between(const Word& word, Letter a, Letter b, int n) {
  const int lo = order_key(a, n), hi = order_key(b, n);
  int cnt = 0;
  for (Letter x : word) {
    const int k = order_key(x, n);
    if (lo < k && k < hi) ++cnt;
  }
  return cnt;
}

int count_interval_excluding(Letter a, Letter b, const Word& forbidden, int n) {
  const int lo = order_key(a, n), hi = order_key(b, n);
  int cnt = 0;
  for (int k = lo + 1; k < hi; ++k) {
    const Letter x = letter_from_key(k, n);
    bool hit = false;
    for (Letter f : forbidden)
      if (f.abs() == x.abs()) { hit = true; break; }
    if (!hit) ++cnt;
  }
  return cnt;
}

bool distinct_abs(const Word& word) {
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i].abs() == word[j].abs()) return false;
  return true;
}

std::string to_string(Letter a) { return std::to_string(a.val); }

std::string to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  s += ")";
  return s;
}

}  // namespace hlbc

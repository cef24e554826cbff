#include "hlbc/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlbc {

std::string to_string(LieType t) { return t == LieType::B ? "B" : "C"; }

LieType lie_type_from_string(const std::string& s) {
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  throw std::invalid_argument("unknown type '" + s + "' (expected B or C)");
}

ReflectionBC ReflectionBC::transposition(int i, int j) {
  if (!(0 < i && i < j)) throw std::invalid_argument("transposition needs 0 < i < j");
  return ReflectionBC{ReflKind::Transposition, i, j};
}

ReflectionBC ReflectionBC::signed_transposition(int i, int j) {
  if (!(0 < i && i < j)) throw std::invalid_argument("signed transposition needs 0 < i < j");
  return ReflectionBC{ReflKind::SignedTransposition, i, j};
}

ReflectionBC ReflectionBC::sign_change(int i) {
  if (i <= 0) throw std::invalid_argument("sign change needs i >= 1");
  return ReflectionBC{ReflKind::SignChange, i, i};
}

SignedPerm SignedPerm::identity(int n) {
  Window w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = Letter{i};
  return SignedPerm(std::move(w));
}

bool SignedPerm::is_valid() const {
  std::vector<bool> seen(window.size() + 1, false);
  for (Letter x : window) {
    const int a = x.abs();
    if (a < 1 || a > n() || seen[static_cast<std::size_t>(a)]) return false;
    seen[static_cast<std::size_t>(a)] = true;
  }
  return true;
}

std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b) {
  if (a.window.size() != b.window.size()) return a.window.size() <=> b.window.size();
  for (std::size_t i = 0; i < a.window.size(); ++i)
    if (a.window[i].val != b.window[i].val) return a.window[i].val <=> b.window[i].val;
  return std::strong_ordering::equal;
}

SignedPerm apply_reflection(const SignedPerm& w, const ReflectionBC& r) {
  if (r.i < 1 || r.j < 1 || r.i > w.n() || r.j > w.n())
    throw std::out_of_range("reflection index out of range");
  SignedPerm out = w;
  auto& win = out.window;
  const std::size_t i = static_cast<std::size_t>(r.i) - 1;
  const std::size_t j = static_cast<std::size_t>(r.j) - 1;
  switch (r.kind) {
    case ReflKind::Transposition:
      std::swap(win[i], win[j]);
      break;
    case ReflKind::SignedTransposition: {
      const Letter a = win[i], b = win[j];
      win[i] = b.bar();
      win[j] = a.bar();
      break;
    }
    case ReflKind::SignChange:
      win[i] = win[i].bar();
      break;
  }
  return out;
}

int ell_plus(const SignedPerm& w) {
  const int n = w.n();
  int cnt = 0;
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      if (letter_lt(w.at(l), w.at(k), n)) ++cnt;
  return cnt;
}

int ell_minus(const SignedPerm& w) {
  const int n = w.n();
  int cnt = 0;
  for (int k = 1; k <= n; ++k)
    for (int l = k; l <= n; ++l)
      if (letter_lt(w.at(l).bar(), w.at(k), n)) ++cnt;
  return cnt;
}

int length(const SignedPerm& w) { return ell_plus(w) + ell_minus(w); }

int ell_plus_column(const Column& c, int n) {
  if (!distinct_abs(c)) throw std::invalid_argument("column repeats an absolute value");
  int cnt = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t l = k + 1; l < c.size(); ++l)
      if (letter_lt(c[l], c[k], n)) ++cnt;
  return cnt;
}

bool reflection_ascends(const SignedPerm& w, const ReflectionBC& r) {
  const int n = w.n();
  switch (r.kind) {
    case ReflKind::Transposition:
      return letter_lt(w.at(r.i), w.at(r.j), n);
    case ReflKind::SignChange:
      return !w.at(r.i).barred();
    case ReflKind::SignedTransposition:
      return letter_lt(w.at(r.i), w.at(r.j).bar(), n);
  }
  return false;
}

namespace {

// The ascending count N such that length(w r) - length(w) = 1 + 2N, valid
// only when the reflection ascends from w.
int ascent_count(const SignedPerm& w, const ReflectionBC& r) {
  const int n = w.n();
  switch (r.kind) {
    case ReflKind::Transposition: {
      const Letter a = w.at(r.i), b = w.at(r.j);
      Word mid(w.window.begin() + r.i, w.window.begin() + (r.j - 1));
      return count_between(mid, a, b, n);
    }
    case ReflKind::SignChange: {
      const Letter a = w.at(r.i);
      Word tail(w.window.begin() + (r.i - 1), w.window.end());
      return count_between(tail, a, a.bar(), n);
    }
    case ReflKind::SignedTransposition: {
      const Letter a = w.at(r.i), b = w.at(r.j);
      Word seg(w.window.begin() + (r.i - 1), w.window.begin() + (r.j - 1));
      Word tail(w.window.begin() + r.j, w.window.end());
      int cnt = count_between(seg, a, b.bar(), n);
      cnt += count_between(tail, a, b.bar(), n);
      for (Letter& x : tail) x = x.bar();
      cnt += count_between(tail, a, b.bar(), n);
      if (!a.barred() && !b.barred()) ++cnt;
      return cnt;
    }
  }
  return 0;
}

}  // namespace

int length_diff(const SignedPerm& w, const ReflectionBC& r) {
  if (reflection_ascends(w, r)) return 1 + 2 * ascent_count(w, r);
  return -(1 + 2 * ascent_count(apply_reflection(w, r), r));
}

int ell_minus_ij(const SignedPerm& w, int i, int j) {
  const int n = w.n();
  if (!(1 <= i && i <= j && j <= n)) throw std::invalid_argument("need 1 <= i <= j <= n");
  int cnt = 0;
  for (int l = 1; l <= j; ++l)
    for (int k = 1; k <= l; ++k) {
      if (l == j && k >= i) break;  // only pairs strictly before (i,j)
      if (letter_lt(w.at(l).bar(), w.at(k), n)) ++cnt;
    }
  return cnt;
}

std::size_t group_order(int n) {
  std::size_t r = 1;
  for (int i = 1; i <= n; ++i) r *= 2 * static_cast<std::size_t>(i);
  return r;
}

std::vector<SignedPerm> enumerate_group(int n, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  const std::size_t total = group_order(n);
  if (total > cap) throw std::length_error("group too large for configured cap");
  std::vector<SignedPerm> out;
  out.reserve(total);
  Window win;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(win.size()) == n) {
      out.emplace_back(win);
      return;
    }
    for (int key = 1; key <= 2 * n; ++key) {
      const Letter x = letter_from_key(key, n);
      if (used[static_cast<std::size_t>(x.abs())]) continue;
      used[static_cast<std::size_t>(x.abs())] = true;
      win.push_back(x);
      self(self);
      win.pop_back();
      used[static_cast<std::size_t>(x.abs())] = false;
    }
  };
  rec(rec);
  return out;
}

WeightVec act_on_weight(const SignedPerm& w, const WeightVec& v) {
  if (w.n() != v.n()) throw std::invalid_argument("rank mismatch");
  WeightVec out = WeightVec::zero(v.n());
  for (int i = 1; i <= w.n(); ++i) {
    const Letter wi = w.at(i);
    out.d[static_cast<std::size_t>(wi.abs()) - 1] =
        (wi.barred() ? -1 : 1) * v.d[static_cast<std::size_t>(i) - 1];
  }
  return out;
}

std::vector<int> act_on_coroot(const SignedPerm& w, const std::vector<int>& coroot) {
  WeightVec tmp{std::vector<int>(coroot)};
  for (int& x : tmp.d) x *= 2;
  WeightVec img = act_on_weight(w, tmp);
  std::vector<int> out(img.d.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = img.d[i] / 2;
  return out;
}

int det_sign(const SignedPerm& w) {
  // parity of the underlying permutation times the number of sign flips
  const int n = w.n();
  int sign = 1;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (w.at(i).barred()) sign = -sign;
    if (seen[static_cast<std::size_t>(i)]) continue;
    int cyc = 0, j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = w.at(j).abs();
      ++cyc;
    }
    if (cyc % 2 == 0) sign = -sign;
  }
  return sign;
}

std::string to_string(const SignedPerm& w) { return to_string(w.window); }

}  // namespace hlbc

#include "hlbc/characters.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hlbc/chains.hpp"

namespace hlbc {

bool is_dominant(LieType type, int n, const WeightVec& lambda) {
  (void)type;
  if (lambda.n() != n) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (lambda.d[static_cast<std::size_t>(i)] < lambda.d[static_cast<std::size_t>(i) + 1])
      return false;
  return n == 0 || lambda.d[static_cast<std::size_t>(n) - 1] >= 0;
}

WeightVec rho(LieType type, int n) {
  WeightVec r = WeightVec::zero(n);
  for (int i = 0; i < n; ++i)
    r.d[static_cast<std::size_t>(i)] = (type == LieType::C) ? 2 * (n - i) : 2 * (n - i) - 1;
  return r;
}

namespace {

using Sparse = std::map<WeightVec, long long>;

Sparse alternant(int n, const WeightVec& v) {
  Sparse out;
  for (const SignedPerm& w : enumerate_group(n)) {
    const WeightVec img = act_on_weight(w, v);
    auto it = out.find(img);
    if (it == out.end())
      out.emplace(img, det_sign(w));
    else {
      it->second = checked_add(it->second, det_sign(w));
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace

HLPoly weyl_character(LieType type, int n, const WeightVec& lambda) {
  if (!is_dominant(type, n, lambda)) throw std::invalid_argument("weight is not dominant");
  if (type == LieType::C && !lambda.all_even())
    throw std::invalid_argument("type C weights must be integral");

  const WeightVec r = rho(type, n);
  Sparse num = alternant(n, lambda + r);
  const Sparse den = alternant(n, r);

  // The lexicographically largest denominator term is x^rho with coefficient 1;
  // peel the leading numerator term against it until nothing is left.
  Sparse quotient;
  std::size_t guard = 0;
  while (!num.empty()) {
    if (++guard > 10'000'000) throw std::runtime_error("character division diverged");
    const auto& [lead_e, lead_c] = *num.rbegin();
    WeightVec q = lead_e - r;
    quotient[q] = checked_add(quotient.count(q) ? quotient[q] : 0, lead_c);
    for (const auto& [de, dc] : den) {
      const WeightVec e = q + de;
      auto it = num.find(e);
      const long long cur = (it == num.end()) ? 0 : it->second;
      const long long next = checked_add(cur, -checked_mul(lead_c, dc));
      if (next == 0) {
        if (it != num.end()) num.erase(it);
      } else if (it == num.end()) {
        num.emplace(e, next);
      } else {
        it->second = next;
      }
    }
  }

  HLPoly out;
  for (const auto& [e, c] : quotient) {
    if (c < 0) throw std::runtime_error("character with a negative multiplicity");
    if (c != 0) out.add(e, TPoly::constant(c));
  }
  return out;
}

HLPoly orbit_sum(LieType type, int n, const WeightVec& lambda) {
  if (!is_dominant(type, n, lambda)) throw std::invalid_argument("weight is not dominant");
  std::set<WeightVec> orbit;
  for (const SignedPerm& w : enumerate_group(n)) orbit.insert(act_on_weight(w, lambda));
  HLPoly out;
  for (const WeightVec& v : orbit) out.add(v, TPoly::constant(1));
  return out;
}

long long dimension(LieType type, int n, const WeightVec& lambda) {
  if (!is_dominant(type, n, lambda)) throw std::invalid_argument("weight is not dominant");
  const WeightVec r = rho(type, n);
  const WeightVec shifted = lambda + r;
  long long num = 1, den = 1;
  for (const RootBC& alpha : positive_roots(type, n)) {
    const std::vector<int> co = alpha.coroot(n);
    num = checked_mul(num, pair_coroot(shifted, co));
    den = checked_mul(den, pair_coroot(r, co));
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1 && num % den != 0) throw std::runtime_error("dimension product not integral");
  return num / den;
}

}  // namespace hlbc

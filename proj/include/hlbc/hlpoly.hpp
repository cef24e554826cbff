#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "hlbc/tpoly.hpp"
#include "hlbc/weight.hpp"
#include "hlbc/weyl.hpp"

namespace hlbc {

// Laurent polynomial in x_1..x_n over Z[t], exponent vectors on the doubled
// lattice.  Terms are held in lexicographic exponent order and zero
// coefficients are never stored, so equality is structural.
struct HLPoly {
  std::map<WeightVec, TPoly> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t term_count() const { return terms.size(); }

  void add(const WeightVec& v, const TPoly& p);
  // += t^a (1-t)^b x^v
  void add_term(int a, int b, const WeightVec& v);
  void add(const HLPoly& o);

  // Permute-and-sign every exponent vector by w.
  HLPoly apply_group_element(const SignedPerm& w) const;

  // Evaluate every coefficient at t=0 or t=1, dropping zeros.
  std::map<WeightVec, long long> specialize_t(int t) const;

  friend bool operator==(const HLPoly&, const HLPoly&) = default;

  std::string str() const;
  nlohmann::json to_json() const;  // [{"x":[...doubled...],"t":[c0,c1,...]},...]
  static HLPoly from_json(const nlohmann::json& j);
};

// "x1^2*x2^-1" style; a half-integral exponent k/2 prints as "^(k/2)".
std::string monomial_str(const WeightVec& v);

}  // namespace hlbc

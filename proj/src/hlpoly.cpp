#include "hlbc/hlpoly.hpp"

#include <stdexcept>

namespace hlbc {

void HLPoly::add(const WeightVec& v, const TPoly& p) {
  if (p.is_zero()) return;
  auto it = terms.find(v);
  if (it == terms.end()) {
    terms.emplace(v, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms.erase(it);
}

void HLPoly::add_term(int a, int b, const WeightVec& v) {
  add(v, TPoly::pow_t_one_minus_t(a, b));
}

void HLPoly::add(const HLPoly& o) {
  for (const auto& [v, p] : o.terms) add(v, p);
}

HLPoly HLPoly::apply_group_element(const SignedPerm& w) const {
  HLPoly out;
  for (const auto& [v, p] : terms) out.add(act_on_weight(w, v), p);
  return out;
}

std::map<WeightVec, long long> HLPoly::specialize_t(int t) const {
  std::map<WeightVec, long long> out;
  for (const auto& [v, p] : terms) {
    const long long c = p.eval01(t);
    if (c != 0) out.emplace(v, c);
  }
  return out;
}

std::string monomial_str(const WeightVec& v) {
  std::string s;
  for (int i = 0; i < v.n(); ++i) {
    const int e = v.d[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e == 2) continue;  // exponent 1
    if (e % 2 == 0)
      s += "^" + std::to_string(e / 2);
    else
      s += "^(" + std::to_string(e) + "/2)";
  }
  return s;
}

std::string HLPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [v, p] : terms) {
    if (!s.empty()) s += " + ";
    const std::string mono = monomial_str(v);
    const bool simple = p.c.size() == 1 && p.c[0] == 1;
    if (mono.empty()) {
      s += "(" + p.str() + ")";
    } else if (simple) {
      s += mono;
    } else {
      s += "(" + p.str() + ")*" + mono;
    }
  }
  return s;
}

nlohmann::json HLPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [v, p] : terms) {
    nlohmann::json term;
    term["x"] = v.d;
    term["t"] = p.c;
    arr.push_back(std::move(term));
  }
  return arr;
}

HLPoly HLPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  HLPoly out;
  for (const auto& term : j) {
    WeightVec v(term.at("x").get<std::vector<int>>());
    TPoly p;
    p.c = term.at("t").get<std::vector<long long>>();
    p.trim();
    out.add(v, p);
  }
  return out;
}

}  // namespace hlbc

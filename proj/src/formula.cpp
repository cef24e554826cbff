#include "hlbc/formula.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace hlbc {

HLPoly tableau_evaluate(const HatShape& shape) {
  HLPoly p;
  for (const Filling& f : enumerate_fillings(shape))
    p.add_term(stat_N(shape, f), stat_des(shape, f), content(shape, f));
  return p;
}

HLPoly tableau_evaluate(LieType type, int n, const std::vector<int>& parts) {
  return tableau_evaluate(hat_shape(type, n, parts));
}

CompressionReport verify_compression(const LambdaChain& chain, const EnumOptions& opt) {
  CompressionReport rep;
  const HatShape shape = shape_of(chain);

  struct Acc {
    Filling filling;
    TPoly sum;
    std::size_t count = 0;
  };
  std::map<std::string, Acc> fibers;
  rep.weights_match = true;

  for (const AdmissiblePair& pair : enumerate_admissible(chain, opt)) {
    const Filling f = filling_map(pair.w, pair.positions, chain);
    Acc& acc = fibers[filling_key(f)];
    if (acc.count == 0) acc.filling = f;
    acc.sum += TPoly::pow_t_one_minus_t(pair.t_exponent(), pair.fold_count());
    ++acc.count;
    ++rep.pair_count;
    if (content(shape, f) != pair.weight()) {
      rep.weights_match = false;
      if (!rep.first_failure)
        rep.first_failure = "content mismatch for w=" + to_string(pair.w);
    }
  }

  const std::vector<Filling> all = enumerate_fillings(shape);
  rep.filling_count = all.size();
  rep.factor = rep.filling_count ? static_cast<double>(rep.pair_count) /
                                       static_cast<double>(rep.filling_count)
                                 : 0.0;

  rep.image_equals_fillings = true;
  std::set<std::string> enumerated;
  for (const Filling& f : all) enumerated.insert(filling_key(f));
  for (const auto& [key, acc] : fibers)
    if (!enumerated.count(key)) {
      rep.image_equals_fillings = false;
      if (!rep.first_failure) rep.first_failure = "walk image outside the filling set";
    }

  rep.fibers_match = true;
  for (const Filling& f : all) {
    FiberReport fr;
    fr.filling = f;
    auto it = fibers.find(filling_key(f));
    if (it == fibers.end()) {
      rep.image_equals_fillings = false;
      if (!rep.first_failure)
        rep.first_failure = "filling missed by every walk:\n" + render_filling(shape, f);
    } else {
      fr.fiber_size = it->second.count;
      fr.sum = it->second.sum;
    }
    fr.predicted = TPoly::pow_t_one_minus_t(stat_N(shape, f), stat_des(shape, f));
    fr.match = fr.sum == fr.predicted;
    if (!fr.match) {
      rep.fibers_match = false;
      if (!rep.first_failure)
        rep.first_failure = "fiber sum " + fr.sum.str() + " != predicted " + fr.predicted.str() +
                            " for filling:\n" + render_filling(shape, f);
    }
    rep.fibers.push_back(std::move(fr));
  }
  return rep;
}

bool is_t_power_times_one_minus_t_power(const TPoly& p) {
  if (p.is_zero()) return false;
  const int d = p.degree();
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      if (p == TPoly::pow_t_one_minus_t(a, b)) return true;
  return false;
}

FiberDemo compressed_fiber_demo() {
  const LambdaChain chain = lambda_chain(LieType::C, 2, {3, 2});
  const HatShape shape = shape_of(chain);

  // The distinguished compressed filling: columns (-2)(-2)(-2,-1)(-2,-1)(1,2)(1,2).
  Filling target;
  target.push_back({Letter{-2}});
  target.push_back({Letter{-2}});
  target.push_back({Letter{-2}, Letter{-1}});
  target.push_back({Letter{-2}, Letter{-1}});
  target.push_back({Letter{1}, Letter{2}});
  target.push_back({Letter{1}, Letter{2}});

  FiberDemo demo;
  for (const AdmissiblePair& pair : enumerate_admissible(chain)) {
    const Filling f = filling_map(pair.w, pair.positions, chain);
    if (compress(shape, f) != target) continue;
    demo.w = pair.w;
    demo.fold_sets.push_back(pair.positions);
    demo.sum += TPoly::pow_t_one_minus_t(pair.t_exponent(), pair.fold_count());
    ++demo.fiber_size;
  }
  demo.factorable = is_t_power_times_one_minus_t_power(demo.sum);
  return demo;
}

namespace {

RootBC mk_tr(int i, int j) { return {ReflectionBC::transposition(i, j), LieType::C}; }
RootBC mk_st(int i, int j) { return {ReflectionBC::signed_transposition(i, j), LieType::C}; }
RootBC mk_sc(int i) { return {ReflectionBC::sign_change(i), LieType::C}; }

// ((1,p+1),...,(1,n), sign change at 1, (1,-n),...,(1,-(p+1)))
std::vector<RootBC> delta_chain(int n, int p) {
  std::vector<RootBC> d;
  for (int s = p + 1; s <= n; ++s) d.push_back(mk_tr(1, s));
  d.push_back(mk_sc(1));
  for (int s = n; s >= p + 1; --s) d.push_back(mk_st(1, s));
  return d;
}

// ((1,-1) | (1,-2),(2,-2) | ... | (1,-n),...,(n-1,-n),(n,-n))
std::vector<RootBC> phi_chain(int n) {
  std::vector<RootBC> d;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i < j; ++i) d.push_back(mk_st(i, j));
    d.push_back(mk_sc(j));
  }
  return d;
}

std::vector<std::vector<int>> regular_catalogue(LieType type, int n) {
  std::vector<std::vector<int>> out;
  if (type == LieType::C) {
    // strict partitions with n parts, each at most n+1
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next_max) -> void {
      if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
      }
      const int remaining = n - static_cast<int>(cur.size());
      for (int p = next_max; p >= remaining; --p) {
        cur.push_back(p);
        self(self, p - 1);
        cur.pop_back();
      }
    };
    rec(rec, n + 1);
    return out;
  }
  // type B: fundamental coefficients in {1,2}
  std::vector<int> alpha(static_cast<std::size_t>(n), 1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::vector<int> mu;
      for (int k = n; k >= 1; --k)
        for (int c = 0; c < alpha[static_cast<std::size_t>(k) - 1]; ++c) mu.push_back(k);
      out.push_back(mu);
      return;
    }
    for (int v = 1; v <= 2; ++v) {
      alpha[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

ReflectionBC random_reflection(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> pick(1, n);
  const int k = kind(rng);
  if (k == 2 || n == 1) return ReflectionBC::sign_change(pick(rng));
  int i = pick(rng), j = pick(rng);
  while (j == i) j = pick(rng);
  if (i > j) std::swap(i, j);
  return k == 0 ? ReflectionBC::transposition(i, j) : ReflectionBC::signed_transposition(i, j);
}

SignedPerm random_perm(int n, std::mt19937& rng) {
  std::vector<int> abs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) abs[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(abs.begin(), abs.end(), rng);
  Window w;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int v : abs) w.push_back(Letter{coin(rng) ? v : -v});
  return SignedPerm(w);
}

}  // namespace

IdentityReport identity_suite(int max_exhaustive_n, int random_trials, unsigned seed) {
  IdentityReport rep;

  // closed-form length differences against direct recomputation
  for (int n = 1; n <= max_exhaustive_n; ++n)
    for (const SignedPerm& w : enumerate_group(n))
      for (const RootBC& r : positive_roots(LieType::C, n)) {
        const int got = length_diff(w, r.refl);
        const int direct = length(apply_reflection(w, r.refl)) - length(w);
        ++rep.checks_run;
        if (got != direct)
          rep.fail("length diff " + std::to_string(got) + " != " + std::to_string(direct) +
                   " at w=" + to_string(w) + " r=" + r.display());
        if (direct % 2 == 0) rep.fail("even length change at w=" + to_string(w));
      }
  std::mt19937 rng(seed);
  for (int n = max_exhaustive_n + 1; n <= 6; ++n)
    for (int t = 0; t < random_trials; ++t) {
      const SignedPerm w = random_perm(n, rng);
      const ReflectionBC r = random_reflection(n, rng);
      const int got = length_diff(w, r);
      const int direct = length(apply_reflection(w, r)) - length(w);
      ++rep.checks_run;
      if (got != direct)
        rep.fail("length diff mismatch at w=" + to_string(w) + " (rank " + std::to_string(n) +
                 ")");
    }

  // single-row fold sums over the delta chain, ascending walks with a pinned endpoint
  for (int n = 1; n <= std::min(max_exhaustive_n, 3); ++n)
    for (const SignedPerm& w : enumerate_group(n))
      for (int p = 1; p <= n; ++p) {
        const Letter a = w.at(1);
        std::vector<Letter> candidates{a, a.bar()};
        for (int q = p + 1; q <= n; ++q) {
          candidates.push_back(w.at(q));
          candidates.push_back(w.at(q).bar());
        }
        const std::vector<RootBC> delta = delta_chain(n, p);
        for (Letter b : candidates) {
          if (letter_lt(b, a, n)) continue;
          TPoly lhs;
          enumerate_monotone_folds(delta, w, ChainDirection::Increasing,
                                   std::make_pair(1, b), [&](const SubPair& sp) {
                                     const int e =
                                         (sp.len_end - length(w) -
                                          static_cast<int>(sp.positions.size())) /
                                         2;
                                     lhs += TPoly::pow_t_one_minus_t(
                                         e, static_cast<int>(sp.positions.size()));
                                   });
          const Word mid(w.window.begin() + 1, w.window.begin() + p);
          const TPoly rhs =
              TPoly::pow_t_one_minus_t(count_between(mid, a, b, n), a == b ? 0 : 1);
          ++rep.checks_run;
          if (lhs != rhs)
            rep.fail("delta-chain sum " + lhs.str() + " != " + rhs.str() + " at w=" +
                     to_string(w) + " p=" + std::to_string(p) + " b=" + to_string(b));
        }
      }

  // tail sums over the sign-flip chain, descending walks
  for (int n = 1; n <= std::min(max_exhaustive_n, 3); ++n) {
    const std::vector<RootBC> phi = phi_chain(n);
    for (const SignedPerm& w : enumerate_group(n))
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i) {
          const std::size_t start = static_cast<std::size_t>(j * (j - 1) / 2 + i - 1);
          const std::vector<RootBC> suffix(phi.begin() + static_cast<std::ptrdiff_t>(start),
                                           phi.end());
          TPoly lhs;
          enumerate_monotone_folds(suffix, w, ChainDirection::Decreasing, std::nullopt,
                                   [&](const SubPair& sp) {
                                     const int e =
                                         (length(w) + sp.len_end -
                                          static_cast<int>(sp.positions.size())) /
                                         2;
                                     lhs += TPoly::pow_t_one_minus_t(
                                         e, static_cast<int>(sp.positions.size()));
                                   });
          const TPoly rhs = TPoly::pow_t_one_minus_t(ell_plus(w) + ell_minus_ij(w, i, j), 0);
          ++rep.checks_run;
          if (lhs != rhs)
            rep.fail("tail sum " + lhs.str() + " != " + rhs.str() + " at w=" + to_string(w) +
                     " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
          // the pairs at or after (i,j) account for the rest of ell_minus
          int after = 0;
          for (int l = 1; l <= n; ++l)
            for (int k = 1; k <= l; ++k) {
              if (l < j || (l == j && k < i)) continue;
              if (letter_lt(w.at(l).bar(), w.at(k), n)) ++after;
            }
          ++rep.checks_run;
          if (ell_minus_ij(w, i, j) + after != ell_minus(w))
            rep.fail("ell_minus partition failed at w=" + to_string(w));
        }
  }

  // generated chains satisfy both chain conditions
  for (LieType type : {LieType::B, LieType::C})
    for (int n = 1; n <= max_exhaustive_n; ++n)
      for (const std::vector<int>& parts : regular_catalogue(type, n)) {
        const auto bad = validate_chain(lambda_chain(type, n, parts));
        ++rep.checks_run;
        if (bad) rep.fail("chain condition " + bad->rule + ": " + bad->detail);
      }

  // hyperplane levels against partial contents along every walk
  {
    EnumOptions opt;
    opt.check_levels = true;
    struct Instance {
      LieType type;
      int n;
      std::vector<int> parts;
    };
    std::vector<Instance> instances = {{LieType::C, 2, {2, 1}}, {LieType::B, 2, {2, 1}}};
    if (max_exhaustive_n >= 3) instances.push_back({LieType::C, 3, {3, 2, 1}});
    for (const Instance& inst : instances) {
      try {
        count_admissible(lambda_chain(inst.type, inst.n, inst.parts), opt);
        ++rep.checks_run;
      } catch (const std::logic_error& e) {
        rep.fail(e.what());
      }
    }
  }

  return rep;
}

}  // namespace hlbc

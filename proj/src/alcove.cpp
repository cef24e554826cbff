#include "hlbc/alcove.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>

#include "hlbc/fillings.hpp"

namespace hlbc {

WeightVec mu_of_fold_set(const LambdaChain& chain, const std::vector<int>& positions) {
  WeightVec v = chain.lambda;
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
    const int k = *it;
    if (k < 1 || k > static_cast<int>(chain.size()))
      throw std::out_of_range("fold position out of range");
    const ChainPos& p = chain.pos[static_cast<std::size_t>(k) - 1];
    const int offset = pair_coroot(v, p.root.coroot(chain.n)) - p.level;
    WeightVec beta = p.root.root_vec(chain.n);
    beta.scale(offset);
    v -= beta;
  }
  return v;
}

namespace {

// Compressed-column index (1 = rightmost) of every chain position, used by
// the optional hyperplane-level invariant.
std::vector<int> compressed_column_of_position(const LambdaChain& chain) {
  int max_group = 0;
  for (const Segment& s : chain.segments) max_group = std::max(max_group, s.group);
  std::vector<int> width(static_cast<std::size_t>(max_group) + 1, 0);
  for (const Segment& s : chain.segments) {
    const bool single = chain.type == LieType::B && s.height == chain.n;
    width[static_cast<std::size_t>(s.group)] = single ? 1 : 2;
  }
  std::vector<int> base(static_cast<std::size_t>(max_group) + 1, 0);
  for (int g = 2; g <= max_group; ++g)
    base[static_cast<std::size_t>(g)] =
        base[static_cast<std::size_t>(g) - 1] + width[static_cast<std::size_t>(g) - 1];
  std::vector<int> col(chain.size(), 0);
  for (const Segment& s : chain.segments) {
    int q = base[static_cast<std::size_t>(s.group)];
    if (width[static_cast<std::size_t>(s.group)] == 1)
      q += 1;
    else
      q += (s.kind == SegKind::Unprimed) ? 1 : 2;
    for (std::size_t k = s.begin; k < s.end; ++k) col[k] = q;
  }
  return col;
}

struct LevelCheckCtx {
  HatShape shape;
  std::vector<int> pos_col;
};

class Walker {
 public:
  Walker(const LambdaChain& chain, const PairSink& sink, std::size_t max_pairs,
         std::atomic<std::size_t>& emitted, const LevelCheckCtx* levels)
      : chain_(chain), sink_(sink), max_pairs_(max_pairs), emitted_(emitted), levels_(levels) {}

  void run(const SignedPerm& w) {
    w0_ = w;
    len_w0_ = length(w);
    pi_ = w;
    len_pi_ = len_w0_;
    lin_ = SignedPerm::identity(chain_.n);
    trans_ = WeightVec::zero(chain_.n);
    folds_.clear();
    step(0);
  }

 private:
  void step(std::size_t k) {
    if (k == chain_.size()) {
      emit();
      return;
    }
    const ChainPos& p = chain_.pos[k];
    if (levels_) level_check(k, p);

    step(k + 1);  // skip branch before fold branch

    const int diff = length_diff(pi_, p.root.refl);
    if (diff < 0) {
      const SignedPerm pi_save = pi_;
      const SignedPerm lin_save = lin_;
      const WeightVec trans_save = trans_;

      pi_ = apply_reflection(pi_, p.root.refl);
      len_pi_ += diff;
      WeightVec move = act_on_weight(lin_, p.root.root_vec(chain_.n));
      move.scale(p.level);
      trans_ += move;
      lin_ = apply_reflection(lin_, p.root.refl);
      folds_.push_back(static_cast<int>(k) + 1);

      step(k + 1);

      folds_.pop_back();
      pi_ = pi_save;
      lin_ = lin_save;
      trans_ = trans_save;
      len_pi_ -= diff;
    }
  }

  void emit() {
    AdmissiblePair out;
    out.w = w0_;
    out.positions = folds_;
    out.end = pi_;
    out.len_w = len_w0_;
    out.len_end = len_pi_;
    out.mu = act_on_weight(lin_, chain_.lambda);
    out.mu += trans_;
    if (emitted_.fetch_add(1) + 1 > max_pairs_)
      throw std::length_error("admissible-pair cap exceeded (raise --max-pairs)");
    sink_(out);
  }

  // The level of the hyperplane the walk is about to cross must equal the
  // coroot pairing against the content of the compressed partial filling
  // restricted to the columns left of this position.
  void level_check(std::size_t k, const ChainPos& p) const {
    const std::vector<int> gamma_co = act_on_coroot(pi_, p.root.coroot(chain_.n));
    const WeightVec tau_walk = act_on_weight(w0_, trans_);
    const int m_k = p.level + pair_coroot(tau_walk, gamma_co);

    const Filling f = filling_map(w0_, folds_, chain_);
    const Filling comp = compress(levels_->shape, f);
    const int q = levels_->pos_col[k];
    WeightVec ct = WeightVec::zero(chain_.n);
    const int total = static_cast<int>(comp.size());
    for (int c = 0; c < total; ++c) {
      const int right_index = total - c;
      if (right_index < q) continue;
      for (Letter x : comp[static_cast<std::size_t>(c)])
        ct.d[static_cast<std::size_t>(x.abs()) - 1] += x.barred() ? -1 : 1;
    }
    const int expected = pair_coroot(ct, gamma_co);
    if (m_k != expected)
      throw std::logic_error("level invariant failed at position " + std::to_string(k + 1) +
                             " for w=" + to_string(w0_) + ": hyperplane level " +
                             std::to_string(m_k) + " vs content pairing " +
                             std::to_string(expected));
  }

  const LambdaChain& chain_;
  const PairSink& sink_;
  std::size_t max_pairs_;
  std::atomic<std::size_t>& emitted_;
  const LevelCheckCtx* levels_;

  SignedPerm w0_;
  int len_w0_ = 0;
  SignedPerm pi_;
  int len_pi_ = 0;
  SignedPerm lin_;
  WeightVec trans_;
  std::vector<int> folds_;
};

}  // namespace

void enumerate_admissible_from(const LambdaChain& chain, const SignedPerm& w,
                               const PairSink& sink, const EnumOptions& opt) {
  std::atomic<std::size_t> emitted{0};
  LevelCheckCtx ctx;
  if (opt.check_levels) {
    ctx.shape = shape_of(chain);
    ctx.pos_col = compressed_column_of_position(chain);
  }
  Walker walker(chain, sink, opt.max_pairs, emitted, opt.check_levels ? &ctx : nullptr);
  walker.run(w);
}

namespace {

// Run `fn` over contiguous chunks of the group and return the per-chunk
// results in group order; the merge downstream must be associative.
template <typename T, typename Fn>
std::vector<T> over_group_chunks(const LambdaChain& chain, const EnumOptions& opt, Fn fn) {
  const std::vector<SignedPerm> group = enumerate_group(chain.n);
  if (chain.size() * group.size() > opt.max_pairs)
    throw std::length_error("enumeration too large: m*|W| exceeds the pair cap");
  std::atomic<std::size_t> emitted{0};
  const int threads = std::max(1, opt.threads);
  if (threads == 1 || group.size() < 2) return {fn(group, emitted)};

  const std::size_t per =
      (group.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
  std::vector<std::future<T>> futs;
  for (std::size_t lo = 0; lo < group.size(); lo += per) {
    const std::size_t hi = std::min(group.size(), lo + per);
    std::vector<SignedPerm> slice(group.begin() + static_cast<std::ptrdiff_t>(lo),
                                  group.begin() + static_cast<std::ptrdiff_t>(hi));
    futs.push_back(std::async(std::launch::async, [fn, slice = std::move(slice), &emitted]() {
      return fn(slice, emitted);
    }));
  }
  std::vector<T> out;
  out.reserve(futs.size());
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace

std::vector<AdmissiblePair> enumerate_admissible(const LambdaChain& chain,
                                                 const EnumOptions& opt) {
  LevelCheckCtx ctx;
  if (opt.check_levels) {
    ctx.shape = shape_of(chain);
    ctx.pos_col = compressed_column_of_position(chain);
  }
  auto work = [&chain, &opt, &ctx](const std::vector<SignedPerm>& ws,
                                   std::atomic<std::size_t>& emitted) {
    std::vector<AdmissiblePair> out;
    PairSink sink = [&out](const AdmissiblePair& p) { out.push_back(p); };
    Walker walker(chain, sink, opt.max_pairs, emitted, opt.check_levels ? &ctx : nullptr);
    for (const SignedPerm& w : ws) walker.run(w);
    return out;
  };
  std::vector<AdmissiblePair> all;
  for (auto& part : over_group_chunks<std::vector<AdmissiblePair>>(chain, opt, work))
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

std::size_t count_admissible(const LambdaChain& chain, const EnumOptions& opt) {
  auto work = [&chain, &opt](const std::vector<SignedPerm>& ws,
                             std::atomic<std::size_t>& emitted) {
    std::size_t cnt = 0;
    PairSink sink = [&cnt](const AdmissiblePair&) { ++cnt; };
    Walker walker(chain, sink, opt.max_pairs, emitted, nullptr);
    for (const SignedPerm& w : ws) walker.run(w);
    return cnt;
  };
  std::size_t total = 0;
  for (std::size_t c : over_group_chunks<std::size_t>(chain, opt, work)) total += c;
  return total;
}

HLPoly alcove_evaluate(const LambdaChain& chain, const EnumOptions& opt) {
  auto work = [&chain, &opt](const std::vector<SignedPerm>& ws,
                             std::atomic<std::size_t>& emitted) {
    HLPoly acc;
    PairSink sink = [&acc](const AdmissiblePair& p) {
      const int a = p.t_exponent();
      if (a < 0) throw std::logic_error("negative t-exponent in walk term");
      acc.add_term(a, p.fold_count(), p.weight());
    };
    Walker walker(chain, sink, opt.max_pairs, emitted, nullptr);
    for (const SignedPerm& w : ws) walker.run(w);
    return acc;
  };
  HLPoly total;
  for (HLPoly& part : over_group_chunks<HLPoly>(chain, opt, work)) total.add(part);
  return total;
}

void enumerate_monotone_folds(const std::vector<RootBC>& chain, const SignedPerm& w,
                              ChainDirection dir,
                              std::optional<std::pair<int, Letter>> endpoint,
                              const std::function<void(const SubPair&)>& sink) {
  SignedPerm cur = w;
  int len_cur = length(w);
  std::vector<int> folds;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == chain.size()) {
      if (!endpoint || cur.at(endpoint->first) == endpoint->second)
        sink(SubPair{folds, cur, len_cur});
      return;
    }
    self(self, k + 1);
    const int diff = length_diff(cur, chain[k].refl);
    const bool allowed = (dir == ChainDirection::Decreasing) ? diff < 0 : diff > 0;
    if (allowed) {
      const SignedPerm save = cur;
      cur = apply_reflection(cur, chain[k].refl);
      len_cur += diff;
      folds.push_back(static_cast<int>(k) + 1);
      self(self, k + 1);
      folds.pop_back();
      cur = save;
      len_cur -= diff;
    }
  };
  rec(rec, 0);
}

}  // namespace hlbc

#include "hlbc/chains.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hlbc {

WeightVec RootBC::root_vec(int n) const {
  WeightVec v = WeightVec::zero(n);
  const std::size_t i = static_cast<std::size_t>(refl.i) - 1;
  const std::size_t j = static_cast<std::size_t>(refl.j) - 1;
  switch (refl.kind) {
    case ReflKind::Transposition:  // e_i - e_j
      v.d[i] = 2;
      v.d[j] = -2;
      break;
    case ReflKind::SignedTransposition:  // e_i + e_j
      v.d[i] = 2;
      v.d[j] = 2;
      break;
    case ReflKind::SignChange:  // 2 e_i (C) or e_i (B)
      v.d[i] = (type == LieType::C) ? 4 : 2;
      break;
  }
  return v;
}

std::vector<int> RootBC::coroot(int n) const {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  const std::size_t i = static_cast<std::size_t>(refl.i) - 1;
  const std::size_t j = static_cast<std::size_t>(refl.j) - 1;
  switch (refl.kind) {
    case ReflKind::Transposition:
      c[i] = 1;
      c[j] = -1;
      break;
    case ReflKind::SignedTransposition:
      c[i] = 1;
      c[j] = 1;
      break;
    case ReflKind::SignChange:
      c[i] = (type == LieType::C) ? 1 : 2;
      break;
  }
  return c;
}

std::string RootBC::display() const {
  const int i = refl.i, j = refl.j;
  switch (refl.kind) {
    case ReflKind::Transposition:
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case ReflKind::SignedTransposition:
      return "(" + std::to_string(i) + ",-" + std::to_string(j) + ")";
    case ReflKind::SignChange:
      if (type == LieType::C) return "(" + std::to_string(i) + ",-" + std::to_string(i) + ")";
      return "(" + std::to_string(i) + ")";
  }
  return "?";
}

std::vector<RootBC> positive_roots(LieType type, int n) {
  std::vector<RootBC> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({ReflectionBC::transposition(i, j), type});
      out.push_back({ReflectionBC::signed_transposition(i, j), type});
    }
    out.push_back({ReflectionBC::sign_change(i), type});
  }
  return out;
}

bool is_regular(LieType type, int n, const std::vector<int>& parts) {
  if (type == LieType::C) {
    if (static_cast<int>(parts.size()) != n) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) return false;
      if (i > 0 && parts[i] >= parts[i - 1]) return false;
    }
    return true;
  }
  // type B: the partition must use every part size 1..n
  if (parts.empty()) return false;
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || parts[i] > n) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
    ++mult[static_cast<std::size_t>(parts[i])];
  }
  for (int k = 1; k <= n; ++k)
    if (mult[static_cast<std::size_t>(k)] == 0) return false;
  return true;
}

WeightVec dominant_weight(LieType type, int n, const std::vector<int>& parts) {
  WeightVec v = WeightVec::zero(n);
  if (type == LieType::C) {
    if (static_cast<int>(parts.size()) > n) throw std::invalid_argument("too many parts");
    for (std::size_t i = 0; i < parts.size(); ++i) v.d[i] = 2 * parts[i];
    return v;
  }
  for (int p : parts) {
    if (p < 1 || p > n) throw std::invalid_argument("part out of range");
    if (p < n) {
      for (int i = 0; i < p; ++i) v.d[static_cast<std::size_t>(i)] += 2;
    } else {
      for (int i = 0; i < n; ++i) v.d[static_cast<std::size_t>(i)] += 1;
    }
  }
  return v;
}

std::vector<int> conjugate_partition(const std::vector<int>& parts) {
  if (parts.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts[0]), 0);
  for (int p : parts)
    for (int i = 0; i < p; ++i) ++conj[static_cast<std::size_t>(i)];
  return conj;
}

namespace {

RootBC st(int i, int j, LieType t) { return {ReflectionBC::signed_transposition(i, j), t}; }
RootBC tr(int i, int j, LieType t) { return {ReflectionBC::transposition(i, j), t}; }
RootBC sc(int i, LieType t) { return {ReflectionBC::sign_change(i), t}; }

struct SegmentDraft {
  SegKind kind;
  int index;
  bool records;
  std::vector<RootBC> roots;
};

// The unprimed factor for transition index j inside a column of height k:
// the cycle roots, the middle block that can move position j past the
// prefix, and the descending tail.
std::vector<RootBC> unprimed_factor(LieType type, int n, int k, int j) {
  std::vector<RootBC> r;
  for (int i = 1; i < j; ++i) r.push_back(st(i, j, type));
  for (int s = k + 1; s <= n; ++s) r.push_back(st(j, s, type));
  r.push_back(sc(j, type));
  for (int s = n; s >= k + 1; --s) r.push_back(tr(j, s, type));
  return r;
}

std::vector<RootBC> primed_factor(LieType type, int n, int j) {
  (void)n;
  std::vector<RootBC> r;
  for (int i = 1; i < j; ++i) r.push_back(st(i, j, type));
  if (type == LieType::B) r.push_back(sc(j, type));
  return r;
}

// All factors of the chain for one fundamental weight (the k-th), with the
// per-factor column-recording flags appropriate for a group in the given
// position (`rightmost` marks the group that owns the walk tail).
std::vector<SegmentDraft> omega_factors(LieType type, int n, int k, bool rightmost) {
  std::vector<SegmentDraft> out;
  if (k < 1 || k > n) throw std::invalid_argument("fundamental index out of range");
  if (type == LieType::C) {
    for (int j = 2; j <= k; ++j)
      out.push_back({SegKind::Primed, j, true, primed_factor(type, n, j)});
    for (int j = 1; j <= k; ++j) {
      const bool rec = !rightmost || j == 1;
      out.push_back({SegKind::Unprimed, j, rec, unprimed_factor(type, n, k, j)});
    }
    return out;
  }
  if (k < n) {
    for (int j = 1; j <= k; ++j)
      out.push_back({SegKind::Primed, j, true, primed_factor(type, n, j)});
    for (int j = 1; j <= k; ++j)
      out.push_back({SegKind::Unprimed, j, true, unprimed_factor(type, n, k, j)});
    return out;
  }
  // k == n: only the short factors remain; the recorded columns all follow
  // the primed transition rule.
  for (int j = 1; j <= n; ++j) {
    const bool rec = !rightmost || j == 1;
    out.push_back({SegKind::Primed, j, rec, primed_factor(type, n, j)});
  }
  return out;
}

}  // namespace

LambdaChain lambda_chain(LieType type, int n, const std::vector<int>& parts) {
  if (!is_regular(type, n, parts))
    throw std::invalid_argument("weight is not regular for type " + to_string(type));

  // Group heights, rightmost group first.
  std::vector<int> heights;
  if (type == LieType::C) {
    heights = conjugate_partition(parts);  // heights[i-1] = height of group i
  } else {
    heights = parts;  // group i has height mu_i
  }
  const int num_groups = static_cast<int>(heights.size());

  LambdaChain chain;
  chain.type = type;
  chain.n = n;
  chain.parts = parts;
  chain.lambda = dominant_weight(type, n, parts);

  std::map<std::string, int> occurrence;
  for (int g = num_groups; g >= 1; --g) {
    const int h = heights[static_cast<std::size_t>(g) - 1];
    const bool rightmost = (g == 1);
    for (const SegmentDraft& d : omega_factors(type, n, h, rightmost)) {
      Segment seg;
      seg.group = g;
      seg.kind = d.kind;
      seg.index = d.index;
      seg.begin = chain.pos.size();
      seg.records_column = d.records;
      seg.height = h;
      for (const RootBC& r : d.roots) {
        const int lvl = ++occurrence[r.display()];
        chain.pos.push_back({r, lvl});
      }
      seg.end = chain.pos.size();
      chain.segments.push_back(seg);
    }
  }
  return chain;
}

LambdaChain omega_chain(LieType type, int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("fundamental index out of range");
  LambdaChain chain;
  chain.type = type;
  chain.n = n;
  // as a partition, the k-th fundamental weight is a single column of height
  // k in type C and the single part k in type B
  chain.parts = (type == LieType::C) ? std::vector<int>(static_cast<std::size_t>(k), 1)
                                     : std::vector<int>{k};
  chain.lambda = dominant_weight(type, n, chain.parts);

  std::map<std::string, int> occurrence;
  for (const SegmentDraft& d : omega_factors(type, n, k, true)) {
    Segment seg;
    seg.group = 1;
    seg.kind = d.kind;
    seg.index = d.index;
    seg.begin = chain.pos.size();
    seg.records_column = d.records;
    seg.height = k;
    for (const RootBC& r : d.roots) {
      const int lvl = ++occurrence[r.display()];
      chain.pos.push_back({r, lvl});
    }
    seg.end = chain.pos.size();
    chain.segments.push_back(seg);
  }
  return chain;
}

std::optional<ChainViolation> validate_chain(const LambdaChain& chain) {
  const int n = chain.n;

  // R1: occurrence counts match the coroot pairings.
  std::map<std::string, int> counts;
  for (const ChainPos& p : chain.pos) ++counts[p.root.display()];
  for (const RootBC& alpha : positive_roots(chain.type, n)) {
    const int expect = pair_coroot(chain.lambda, alpha.coroot(n));
    const int got = counts.count(alpha.display()) ? counts[alpha.display()] : 0;
    if (got != expect)
      return ChainViolation{"R1", "root " + alpha.display() + " occurs " + std::to_string(got) +
                                      " times, expected " + std::to_string(expect)};
  }

  // R2: for each coroot-additive triple, the restricted subsequence splits
  // into (gamma,alpha) / (gamma,beta) pairs.
  const std::vector<RootBC> roots = positive_roots(chain.type, n);
  auto coroot_sum = [&](const RootBC& a, const RootBC& b) {
    std::vector<int> s = a.coroot(n);
    const std::vector<int> t = b.coroot(n);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += t[i];
    return s;
  };
  for (std::size_t ai = 0; ai < roots.size(); ++ai)
    for (std::size_t bi = ai + 1; bi < roots.size(); ++bi) {
      const std::vector<int> target = coroot_sum(roots[ai], roots[bi]);
      const RootBC* gamma = nullptr;
      for (const RootBC& g : roots)
        if (g.coroot(n) == target) {
          gamma = &g;
          break;
        }
      if (!gamma) continue;
      const RootBC &alpha = roots[ai], &beta = roots[bi];
      std::vector<int> seq;  // 0 = alpha, 1 = beta, 2 = gamma
      for (const ChainPos& p : chain.pos) {
        if (p.root == alpha)
          seq.push_back(0);
        else if (p.root == beta)
          seq.push_back(1);
        else if (p.root == *gamma)
          seq.push_back(2);
      }
      const std::string triple = alpha.display() + "," + beta.display() + "," + gamma->display();
      if (seq.size() % 2 != 0)
        return ChainViolation{"R2", "odd subsequence for (" + triple + ")"};
      for (std::size_t t = 0; t < seq.size(); t += 2)
        if (seq[t] != 2 || seq[t + 1] == 2)
          return ChainViolation{"R2", "subsequence for (" + triple + ") is not a pairing"};
    }
  return std::nullopt;
}

std::string dump_chain(const LambdaChain& chain) {
  std::string out;
  for (std::size_t s = 0; s < chain.segments.size(); ++s) {
    const Segment& seg = chain.segments[s];
    if (s > 0) {
      out += (chain.segments[s - 1].group != seg.group) ? "||\n" : "|\n";
    }
    for (std::size_t k = seg.begin; k < seg.end; ++k) out += chain.pos[k].root.display() + "\n";
  }
  return out;
}

}  // namespace hlbc

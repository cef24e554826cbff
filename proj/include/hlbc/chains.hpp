#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlbc/weyl.hpp"

namespace hlbc {

// A positive root together with its type, sharing the reflection carrier:
//   (i,j) ~ e_i - e_j,  (i,-j) ~ e_i + e_j,
//   sign change at i ~ 2e_i in type C and e_i in type B.
struct RootBC {
  ReflectionBC refl;
  LieType type{};

  WeightVec root_vec(int n) const;        // doubled coordinates
  std::vector<int> coroot(int n) const;   // ordinary integer coordinates

  std::string display() const;  // "(i,j)", "(i,-j)", "(i,-i)", "(i)"
  friend bool operator==(const RootBC&, const RootBC&) = default;
};

std::vector<RootBC> positive_roots(LieType type, int n);

enum class SegKind { Primed, Unprimed };

struct ChainPos {
  RootBC root;
  int level = 0;  // occurrence count of this root up to and including here
};

// One factor of the chain.  Factors correspond to recorded filling columns
// except in the rightmost group, whose trailing factors only contribute
// folds (the walk keeps moving after the last recorded column).
struct Segment {
  int group = 0;   // original column of the weight, 1 = rightmost
  SegKind kind{};  // governs the transition rule out of the recorded column
  int index = 0;   // the j of the transition rule
  std::size_t begin = 0, end = 0;  // half-open range of chain positions (0-based)
  bool records_column = false;
  int height = 0;  // column height of the owning group
};

struct LambdaChain {
  LieType type{};
  int n = 0;
  std::vector<int> parts;  // the strict partition (C) or the partition mu (B)
  WeightVec lambda;        // the dominant weight, doubled coordinates
  std::vector<ChainPos> pos;
  std::vector<Segment> segments;

  std::size_t size() const { return pos.size(); }
};

// Regularity: type C needs n strictly decreasing positive parts; type B needs
// every part size 1..n to occur (all fundamental coefficients positive).
bool is_regular(LieType type, int n, const std::vector<int>& parts);
WeightVec dominant_weight(LieType type, int n, const std::vector<int>& parts);
std::vector<int> conjugate_partition(const std::vector<int>& parts);

// The fixed chain for one fundamental weight (k-th), segment metadata included.
LambdaChain omega_chain(LieType type, int n, int k);

// Concatenation of fundamental chains, one per column of the weight, smallest
// column leftmost; levels recomputed over the whole chain.
LambdaChain lambda_chain(LieType type, int n, const std::vector<int>& parts);

struct ChainViolation {
  std::string rule;    // "R1" or "R2"
  std::string detail;
};

// R1: every positive root alpha occurs <lambda, alpha^vee> times.
// R2: for every triple with gamma^vee = alpha^vee + beta^vee, the subsequence
// on {alpha,beta,gamma} splits into pairs (gamma,alpha) / (gamma,beta).
std::optional<ChainViolation> validate_chain(const LambdaChain& chain);

// One root per line, "|" between segments, "||" between groups.
std::string dump_chain(const LambdaChain& chain);

}  // namespace hlbc

#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hlbc/chains.hpp"
#include "hlbc/hlpoly.hpp"

namespace hlbc {

// A fold set J along a lambda-chain whose walk w > w r_{j1} > ... strictly
// descends in length at every step, with the cached endpoint data.
struct AdmissiblePair {
  SignedPerm w;
  std::vector<int> positions;  // 1-based, increasing
  SignedPerm end;              // w times the fold reflections, left to right
  int len_w = 0;
  int len_end = 0;
  WeightVec mu;  // the fold reflections applied affinely to lambda, rightmost first

  int fold_count() const { return static_cast<int>(positions.size()); }
  // Exponent of t in the walk term; a nonnegative integer because every fold
  // drops the length by an odd amount.
  int t_exponent() const { return (len_w + len_end - fold_count()) / 2; }
  WeightVec weight() const { return act_on_weight(w, mu); }
};

struct EnumOptions {
  int threads = 1;
  std::size_t max_pairs = 10'000'000;
  // Assert, at every chain position, that the level of the hyperplane the
  // folded walk is about to cross matches the partial-content pairing.
  bool check_levels = false;
};

// Direct evaluation of the reflected weight for a fold set, rightmost
// reflection applied to lambda first.
WeightVec mu_of_fold_set(const LambdaChain& chain, const std::vector<int>& positions);

using PairSink = std::function<void(const AdmissiblePair&)>;

// Depth-first over positions 1..m for one starting element; at each position
// the "skip" branch is explored before the "fold" branch, and folding is
// allowed exactly when the length strictly drops.
void enumerate_admissible_from(const LambdaChain& chain, const SignedPerm& w,
                               const PairSink& sink, const EnumOptions& opt = {});

std::vector<AdmissiblePair> enumerate_admissible(const LambdaChain& chain,
                                                 const EnumOptions& opt = {});
std::size_t count_admissible(const LambdaChain& chain, const EnumOptions& opt = {});

// Sum of t^{(len(w)+len(wT)-|T|)/2} (1-t)^{|T|} x^{w(mu(T))} over all
// admissible pairs; partials per starting element merged in group order.
HLPoly alcove_evaluate(const LambdaChain& chain, const EnumOptions& opt = {});

enum class ChainDirection { Increasing, Decreasing };

struct SubPair {
  std::vector<int> positions;  // 1-based within the subchain
  SignedPerm end;
  int len_end = 0;
};

// Fold enumeration over a bare root list with a strict length monotonicity
// requirement, optionally filtered on the final window value at one position.
void enumerate_monotone_folds(const std::vector<RootBC>& chain, const SignedPerm& w,
                              ChainDirection dir,
                              std::optional<std::pair<int, Letter>> endpoint,
                              const std::function<void(const SubPair&)>& sink);

}  // namespace hlbc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlbc/alcove.hpp"
#include "hlbc/fillings.hpp"

namespace hlbc {

// Sum of t^N (1-t)^des x^content over all fillings of the widened shape.
HLPoly tableau_evaluate(const HatShape& shape);
HLPoly tableau_evaluate(LieType type, int n, const std::vector<int>& parts);

struct FiberReport {
  Filling filling;
  std::size_t fiber_size = 0;
  TPoly sum;        // sum of t^a (1-t)^b over the walks mapping to this filling
  TPoly predicted;  // t^N (1-t)^des
  bool match = false;
};

struct CompressionReport {
  std::size_t filling_count = 0;
  std::size_t pair_count = 0;
  double factor = 0.0;  // pair_count / filling_count
  bool fibers_match = false;
  bool image_equals_fillings = false;  // walk images coincide with the local enumeration
  bool weights_match = false;          // content equals the walk weight for every pair
  std::vector<FiberReport> fibers;     // in canonical filling order
  std::optional<std::string> first_failure;

  bool ok() const { return fibers_match && image_equals_fillings && weights_match; }
};

// Group the walk terms by their filling and check each fiber against the
// factored prediction, plus image equality and per-pair weight consistency.
CompressionReport verify_compression(const LambdaChain& chain, const EnumOptions& opt = {});

// The fixed two-variable instance showing that grouping by the compressed
// filling is too coarse: its distinguished compressed fiber holds exactly two
// walks and sums to (1-t)(1-t+t^2), which no t^a (1-t)^b matches.
struct FiberDemo {
  SignedPerm w;
  std::vector<std::vector<int>> fold_sets;  // fold positions of the fiber members
  TPoly sum;
  std::size_t fiber_size = 0;
  bool factorable = true;  // whether sum == t^a (1-t)^b for some a,b >= 0
};
FiberDemo compressed_fiber_demo();

// Is p of the form t^a (1-t)^b?
bool is_t_power_times_one_minus_t_power(const TPoly& p);

struct IdentityReport {
  bool ok = true;
  std::size_t checks_run = 0;
  std::string first_failure;

  void fail(const std::string& msg) {
    if (ok) first_failure = msg;
    ok = false;
  }
};

// Enumeration-vs-closed-form checks: the length-difference formulas
// (exhaustive for small rank, sampled above), the single-row fold sums over
// the delta-chain, and the tail sums over the sign-flip chain.
IdentityReport identity_suite(int max_exhaustive_n, int random_trials, unsigned seed);

}  // namespace hlbc

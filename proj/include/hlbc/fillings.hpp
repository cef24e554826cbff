#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlbc/chains.hpp"

namespace hlbc {

struct ColumnDesc {
  int group = 0;
  SegKind kind{};  // rule for the transition OUT of this column (to its right neighbor)
  int index = 0;
  int height = 0;
};

// The widened column list: every original column of the weight contributes a
// run of equal-height columns, primed copies first, and heights weakly
// increase left to right in steps of at most one.
struct HatShape {
  LieType type{};
  int n = 0;
  std::vector<int> parts;
  std::vector<ColumnDesc> cols;

  int num_cols() const { return static_cast<int>(cols.size()); }
};

HatShape hat_shape(LieType type, int n, const std::vector<int>& parts);
HatShape shape_of(const LambdaChain& chain);

using Filling = std::vector<Column>;

// Record the window prefix of the running walk at every column-recording
// segment start; folds taken at the given 1-based positions.  Defined for
// arbitrary fold sets, admissible or not.
Filling filling_map(const SignedPerm& w, const std::vector<int>& positions,
                    const LambdaChain& chain);

// The decomposition of one left-to-right column transition.
struct Transition {
  std::vector<int> cycle;  // positions r_1 < ... < r_p < index
  bool drop = false;       // unprimed only: strict drop at the index position
  bool trailing = false;   // type B primed only: final sign change at the index
  // 0 = identical, 1/2 = pure signed cycle, 3 = cycle plus drop, 4 = cycle
  // plus trailing sign change.
  int case_tag = 0;
};

// Recovers the unique signed cycle (and final move) relating C to D, checked
// by re-application; throws std::domain_error when no legal transition exists.
Transition transition_decompose(const Column& D, const Column& C, const ColumnDesc& left,
                                LieType type, int n);

// A statistic value on the half-integer grid; only the type B trailing case
// produces odd values before summation.
struct HalfInt {
  int twice = 0;
  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
  HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
  bool integral() const { return twice % 2 == 0; }
  friend bool operator==(HalfInt, HalfInt) = default;
};

HalfInt stat_N_pair(const Column& D, const Column& C, const ColumnDesc& left,
                    LieType type, int n);
int stat_des_pair(const Column& D, const Column& C, const ColumnDesc& left,
                  LieType type, int n);

// Sum of the pair statistics over all adjacent columns plus ell_plus of the
// rightmost column; throws if the type B half contributions do not cancel.
int stat_N(const HatShape& shape, const Filling& f);
int stat_des(const HatShape& shape, const Filling& f);

// Whether the filling satisfies all membership conditions (weakly decreasing
// rows, no +-repeat inside a column, legal transitions).
bool filling_ok(const HatShape& shape, const Filling& f, std::string* why = nullptr);

// All fillings of the shape, by left-to-right depth-first extension,
// deterministic order.
std::vector<Filling> enumerate_fillings(const HatShape& shape);

// Two representative columns per group (first primed copy and first unprimed
// copy); groups of full height contribute a single column in type B and a
// doubled column in type C.
Filling compress(const HatShape& shape, const Filling& f);
WeightVec content(const HatShape& shape, const Filling& f);

// Attack-pair inversion statistics on a column-ordered filling of the
// unwidened shape (heights weakly increasing left to right).
struct InvStats {
  int inv = 0;
  int cinv = 0;  // n(shape) - inv, equal to the lower-triple count
  int des = 0;
};
InvStats inversion_stats(const std::vector<Column>& tau, int n);
int cinv_triples(const std::vector<Column>& tau, int n);  // independent triple count

// Fillings with vanishing N statistic (the t=0 survivors).
std::vector<Filling> kn_fillings(const HatShape& shape);

std::string render_filling(const HatShape& shape, const Filling& f);  // rows top to bottom
nlohmann::json filling_to_json(const Filling& f);
std::string filling_key(const Filling& f);  // canonical serialization

}  // namespace hlbc

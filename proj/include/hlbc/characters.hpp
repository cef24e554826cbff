#pragma once

#include "hlbc/hlpoly.hpp"

namespace hlbc {

// Independent oracles: irreducible characters via the alternant quotient,
// orbit sums, and the dimension product formula.

bool is_dominant(LieType type, int n, const WeightVec& lambda);
WeightVec rho(LieType type, int n);

// (sum_w sgn(w) x^{w(lambda+rho)}) / (sum_w sgn(w) x^{w(rho)}), divided
// exactly on the doubled lattice; throws if a remainder survives.
HLPoly weyl_character(LieType type, int n, const WeightVec& lambda);

// One unit monomial per distinct orbit element.
HLPoly orbit_sum(LieType type, int n, const WeightVec& lambda);

// Product over positive roots of <lambda+rho,a^vee>/<rho,a^vee>.
long long dimension(LieType type, int n, const WeightVec& lambda);

}  // namespace hlbc

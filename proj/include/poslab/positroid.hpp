#pragma once

#include <vector>

#include "poslab/decorated.hpp"
#include "poslab/perm.hpp"

namespace poslab {

// (I_1, ..., I_n), all of one size k.
struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<KSubset> entries;

  auto operator<=>(const GrassmannNecklace&) const = default;
};

// Throws unless sizes are consistent and every entry lies in [n].
void validate(const GrassmannNecklace& N);

// I_r = { i : i precedes w^-1(i) in the order r < r+1 < ... < r-1, or i is
// a clockwise loop }.
KSubset shifted_anti_exceedance_set(const DecoratedPermutation& w, int r);

GrassmannNecklace grassmann_necklace(const DecoratedPermutation& w);

// Inverts grassmann_necklace via the transition rule
// I_{r+1} = (I_r \ {r}) u {w(r)}, reading w(r) off the symmetric
// difference; equal consecutive entries force a loop at r, clockwise
// exactly when r is in I_r.
DecoratedPermutation decorated_perm_from_necklace(const GrassmannNecklace& N);

// Bases of a rank-k matroid on [n], kept sorted.
struct Positroid {
  int n = 0;
  int k = 0;
  std::vector<KSubset> bases;

  bool contains(uint64_t mask) const;

  auto operator<=>(const Positroid&) const = default;
};

// { I : I_r gale-dominates ... I for every r }.
Positroid positroid_from_necklace(const GrassmannNecklace& N);

// I_r = the unique shifted-Gale minimum of the bases; throws when some r
// has no minimum dominating every basis (the input is not a positroid).
GrassmannNecklace necklace_from_positroid(const Positroid& M);

// Round trip: M == positroid_from_necklace(necklace_from_positroid(M)).
bool is_positroid(const std::vector<KSubset>& bases, int n);

// Pair u <= v with v k-Grassmannian.
struct BruhatInterval {
  Permutation u;
  Permutation v;
  int k = 0;

  auto operator<=>(const BruhatInterval&) const = default;
};

void validate(const BruhatInterval& I);

// v = the k-Grassmannian permutation whose first k values are w^-1(I_1);
// u = w v.  The initial set of u is then I_1.
BruhatInterval interval_from_decorated_perm(const DecoratedPermutation& w);

// w = u v^-1 with the fixed points inside the initial set of u clockwise.
DecoratedPermutation decorated_perm_from_interval(const BruhatInterval& I);

// Initial k-sets of all permutations in [u, v].
Positroid positroid_from_interval(const BruhatInterval& I);

}  // namespace poslab

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "poslab/positroid.hpp"
#include "poslab/smooth.hpp"

namespace poslab {

// Multilinear polynomial in the free entries of the affine chart at a
// torus-fixed point.  Monomials are bitmasks over the chart variables; minors
// of a matrix are multilinear in its entries, so monomials are square-free
// and the bitmask encoding is lossless.
struct ChartPolynomial {
  std::map<uint64_t, mpz_class> terms;

  void add(uint64_t monomial, int coefficient);
  // Coefficients of the degree-one monomials, one slot per chart variable.
  std::vector<mpz_class> gradient_at_origin(int num_vars) const;
};

// Plücker coordinate Δ_I on the chart at A_J: rows follow J in ascending
// order, the columns of J carry the identity, every other entry is free.
// Variable (row r, column c) occupies bit r*(n-k) + rank of c outside J.
// Charts wider than 63 free entries are refused.
ChartPolynomial chart_minor(int n, const KSubset& J, const KSubset& I);

// Rank of the Jacobian of {Δ_I : I not a basis} at the point A_J, by exact
// fraction-free elimination.  Every defining equation vanishes at A_J, so
// only the gradient rows matter.
int jacobian_rank_at(const Positroid& M, const KSubset& J);

// Initial sets of the permutations inside a Bruhat interval, collected by
// filtering all of S_n; the slow mirror of positroid_from_interval.
std::set<KSubset> brute_initial_sets(const Permutation& u, const Permutation& v,
                                     int k);

// One census line: decorated permutations of [n] with k anti-exceedances,
// and how many of those pass the chosen smoothness criterion.
struct CensusRow {
  int n = 0;
  int k = 0;
  uint64_t total = 0;
  uint64_t smooth = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// Full census for [n], one row per k in ascending order.  Work is sharded
// over contiguous permutation index ranges; `jobs` only sets the parallelism
// and never changes the table.
std::vector<CensusRow> smoothness_census(int n, Criterion criterion,
                                         int jobs = 1);

// Rows as "n<TAB>k<TAB>total<TAB>smooth<TAB>criterion" lines.
std::string census_tsv(const std::vector<CensusRow>& rows, Criterion criterion);

}  // namespace poslab

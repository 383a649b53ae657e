#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poslab/decorated.hpp"
#include "poslab/positroid.hpp"

namespace poslab {

// Codimension of the variety: the alignment count, cross-checked against
// k(n-k) - (length(v) - length(u)) and throwing on mismatch.
int codimension(const DecoratedPermutation& w);

// Induced subgraph of the Johnson graph on the bases: I ~ J when
// |I n J| = k-1.
struct JohnsonGraphView {
  Positroid positroid;
  std::vector<std::pair<int, int>> edges;  // index pairs into bases, i < j
  std::vector<int> degrees;                // aligned with bases

  auto operator<=>(const JohnsonGraphView&) const = default;
};

JohnsonGraphView johnson_graph(const Positroid& M);

// #{ I not in M : |I n J| = k-1 } for a basis J; throws when J is not a
// basis (the count means a tangent-space codimension only at torus-fixed
// points of the variety, which are exactly the bases).
int tangent_codim(const Positroid& M, const KSubset& J);

enum class Criterion { Degree, Regular, Crossed, Spirograph };

Criterion parse_criterion(const std::string& name);
std::string to_string(Criterion c);

// Degree: every Johnson degree inside M equals k(n-k) - #alignments.
// Regular: all Johnson degrees inside M coincide.
// Crossed: no crossed alignment.
// Spirograph: disjoint union of spirographs over a noncrossing partition.
bool is_smooth(const DecoratedPermutation& w, Criterion c);

// { J basis : tangent_codim(M, J) < codimension(w) }.
std::vector<KSubset> singular_fixed_points(const DecoratedPermutation& w);

// The four criteria evaluated together; construction throws if they ever
// disagree.  jacobian_ranks stays empty unless a caller certifies the
// tangent counts against the exact Jacobian oracle.
struct SmoothnessReport {
  DecoratedPermutation w;
  int codim = 0;
  Positroid M;
  std::vector<int> johnson_degrees;  // aligned with M.bases
  std::vector<int> tangent_codims;   // aligned with M.bases
  bool degree_ok = false;
  bool regular_ok = false;
  bool crossed_ok = false;
  bool spirograph_ok = false;
  bool smooth = false;
  std::vector<KSubset> singular_points;
  std::optional<CrossedAlignment> witness;
  std::vector<int> jacobian_ranks;  // aligned with M.bases when present
};

SmoothnessReport smoothness_report(const DecoratedPermutation& w);

// Pairs (a in J, b not in J) with (J \ a) u b not a basis, for a
// derangement w and J its first necklace entry.  Evaluated both straight
// from the positroid and through the interval-walk conditions; throws if
// the two disagree.
std::vector<std::pair<int, int>> anti_exchange_pairs(const Permutation& w);

// Injective map from anti-exchange pairs into alignments.
ArcPair psi_map(const Permutation& w, std::pair<int, int> ab);

// Least (rotation, reflected) dihedral transform after which some crossed
// alignment has its witness arc based at 1, member tails strictly inside
// the clockwise span (1, w'(1)), and member heads outside it.  The image
// itself is reflected ? reflect(rotate(w, s)) : rotate(w, s).  Throws when
// w has no crossed alignment.
std::pair<int, bool> canonicalize_crossed(const DecoratedPermutation& w);

DecoratedPermutation apply_dihedral(const DecoratedPermutation& w,
                                    std::pair<int, bool> transform);

}  // namespace poslab

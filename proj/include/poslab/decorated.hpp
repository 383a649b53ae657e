#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "poslab/perm.hpp"

namespace poslab {

// Permutation with every fixed point oriented clockwise or counterclockwise.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;
  DecoratedPermutation(Permutation perm, std::set<int> clockwise_fixed);

  int size() const { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }
  const Permutation& perm() const { return perm_; }
  const std::set<int>& clockwise() const { return cw_; }

  bool is_loop(int i) const { return perm_(i) == i; }
  bool is_clockwise_loop(int i) const { return cw_.contains(i); }

  auto operator<=>(const DecoratedPermutation&) const = default;

 private:
  Permutation perm_;
  std::set<int> cw_;
};

// "5,7,3-,6,4,9,2,8+,1": fixed points carry a mandatory +/- orientation.
DecoratedPermutation parse_decorated(const std::string& text);
std::string to_string(const DecoratedPermutation& w);

// Arc i -> w(i) lifted to the interval [i, i+n]: counterclockwise loops sit
// at [i, i], clockwise loops span [i, i+n], everything else lands strictly
// between.
struct BoundedAffineArc {
  int base = 0;
  int target = 0;

  bool is_loop(int n) const { return target == base || target == base + n; }
  auto operator<=>(const BoundedAffineArc&) const = default;
};

std::vector<BoundedAffineArc> to_affine(const DecoratedPermutation& w);
BoundedAffineArc affine_arc(const DecoratedPermutation& w, int i);

enum class PairRelation { Alignment, Crossing, Misalignment };

// Relation between two arcs with distinct bases.
PairRelation classify_pair(const BoundedAffineArc& a, const BoundedAffineArc& b, int n);

// Unordered pair of arc bases, stored with i < j.
struct ArcPair {
  int i = 0;
  int j = 0;

  auto operator<=>(const ArcPair&) const = default;
};

std::vector<ArcPair> alignments(const DecoratedPermutation& w);
std::vector<ArcPair> crossings(const DecoratedPermutation& w);
std::vector<ArcPair> misalignments(const DecoratedPermutation& w);

// Alignment whose two member arcs are both crossed by the arc at `witness`.
struct CrossedAlignment {
  ArcPair pair;
  int witness = 0;

  auto operator<=>(const CrossedAlignment&) const = default;
};

// Every (alignment, witness) combination, alignments in lexicographic order,
// witnesses ascending within one alignment.
std::vector<CrossedAlignment> crossed_alignments(const DecoratedPermutation& w);
bool has_crossed_alignment(const DecoratedPermutation& w);

// Conjugation by the rotation i -> i+s; decorations travel along.
DecoratedPermutation rotate(const DecoratedPermutation& w, int s);

// Mirror fixing 1 (i -> n+2-i elsewhere); loop orientations toggle.
DecoratedPermutation reflect(const DecoratedPermutation& w);

// Inverse permutation; loop orientations toggle.
DecoratedPermutation reverse_arcs(const DecoratedPermutation& w);

// Drop a loop and relabel the remaining points order-preservingly.
DecoratedPermutation remove_fixed_point(const DecoratedPermutation& w, int i);

// Restriction of w to a w-closed support, relabeled order-preservingly to
// [|support|].  Throws if the support is not closed under w.
DecoratedPermutation restrict_to_support(const DecoratedPermutation& w,
                                         const std::vector<int>& support);

// Connected components of the graph on arc bases whose edges are the
// Crossing pairs.  Each component's support is sorted; components are
// ordered by smallest base and together partition [n].
std::vector<std::vector<int>> crossing_components(const DecoratedPermutation& w);

// True iff the component supports form a noncrossing partition of [n] and
// each component, relabeled order-preservingly to [m], is a cyclic shift
// x -> x+t (mod m).  Loops count as one-point shifts.  When `blocks` is
// non-null it receives the component supports.
bool is_spirograph_union(const DecoratedPermutation& w,
                         std::vector<std::vector<int>>* blocks = nullptr);

// Every permutation of [n] in lexicographic order, each with all 2^(number
// of fixed points) decorations (binary counter over the sorted fixed
// points).  Guarded at n <= 9 by default.
void for_each_decorated(int n, const std::function<void(const DecoratedPermutation&)>& fn);

// Same stream restricted to a lexicographic permutation-index window
// [perm_begin, perm_end); used by the sharded census.  Not guarded.
void for_each_decorated_range(int n, uint64_t perm_begin, uint64_t perm_end,
                              const std::function<void(const DecoratedPermutation&)>& fn);

// Fixed-point-free permutations in lexicographic order; guarded at n <= 9.
void for_each_derangement(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace poslab

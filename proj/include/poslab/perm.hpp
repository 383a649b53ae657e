#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "poslab/errors.hpp"

namespace poslab {

// Permutation of [n] in one-line notation, 1-based: w(i) is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(v_.size()); }
  int operator()(int i) const { return v_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& one_line() const { return v_; }

  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

// (wv)(i) = w(v(i)).
Permutation multiply(const Permutation& w, const Permutation& v);

// Number of inversions.
int length(const Permutation& w);

// Increasing on positions 1..k and on k+1..n.
bool is_k_grassmannian(const Permutation& v, int k);

Permutation parse_permutation(const std::string& text);
std::string to_string(const Permutation& w);

// k-element subset of [n], elements kept strictly increasing.
class KSubset {
 public:
  KSubset() = default;
  KSubset(int n, std::vector<int> elements);

  int n() const { return n_; }
  int k() const { return static_cast<int>(e_.size()); }
  const std::vector<int>& elements() const { return e_; }
  bool contains(int x) const;

  // Bit i-1 set iff element i present.
  uint64_t mask() const;
  static KSubset from_mask(int n, uint64_t mask);

  auto operator<=>(const KSubset&) const = default;

 private:
  int n_ = 0;
  std::vector<int> e_;
};

// {y(1), ..., y(k)} as a sorted subset.
KSubset initial_set(const Permutation& y, int k);

KSubset parse_subset(const std::string& text, int n);
std::string to_string(const KSubset& s);

// Shifted Gale order: sort both subsets by the rotated order
// r < r+1 < ... < n < 1 < ... < r-1 and compare componentwise.
bool gale_leq(const KSubset& I, const KSubset& J, int r);
bool gale_leq_masks(uint64_t I, uint64_t J, int r, int n);

// Tableau criterion: sorted initial segments componentwise dominated.
bool bruhat_leq(const Permutation& u, const Permutation& v);

// Shortcut valid when v is k-Grassmannian: u(j) <= v(j) for j <= k and
// u(j) >= v(j) for j > k.  Throws if v is not k-Grassmannian.
bool bruhat_leq_grassmannian(const Permutation& u, const Permutation& v, int k);

// All y covering w: swap a pair i<j with w(i)<w(j) and no value between
// them at a position between them.
std::vector<Permutation> bruhat_covers_up(const Permutation& w);

// [u, v] = {y : u <= y <= v}, sorted lexicographically.  Upward BFS from u
// through covers, pruned by comparison against v.  Throws unless u <= v.
std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v);

// All k-subset bitmasks of [n] in lexicographic order of element lists.
std::vector<uint64_t> ksubset_masks(int n, int k);

uint64_t factorial(int n);

// index-th permutation of [n] in lexicographic one-line order, 0-based.
Permutation nth_permutation(int n, uint64_t index);

}  // namespace poslab

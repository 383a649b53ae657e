#include "poslab/positroid.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace poslab {

void validate(const GrassmannNecklace& N) {
  if (N.n < 0 || static_cast<int>(N.entries.size()) != N.n)
    throw invariant_error("necklace needs one entry per column");
  if (N.k < 0 || N.k > N.n) throw invariant_error("necklace rank out of range");
  for (const auto& I : N.entries) {
    if (I.k() != N.k) throw invariant_error("necklace entries must share one size");
    if (I.n() != N.n) throw invariant_error("necklace entry on the wrong ground set");
  }
}

KSubset shifted_anti_exceedance_set(const DecoratedPermutation& w, int r) {
  const int n = w.size();
  if (r < 1 || r > n) throw invariant_error("column index out of range");
  const Permutation winv = w.perm().inverse();
  std::vector<int> elems;
  for (int i = 1; i <= n; ++i) {
    if (w.is_loop(i)) {
      if (w.is_clockwise_loop(i)) elems.push_back(i);
    } else if ((winv(i) - r + n) % n > (i - r + n) % n) {
      elems.push_back(i);
    }
  }
  return KSubset(n, std::move(elems));
}

GrassmannNecklace grassmann_necklace(const DecoratedPermutation& w) {
  GrassmannNecklace N;
  N.n = w.size();
  for (int r = 1; r <= N.n; ++r)
    N.entries.push_back(shifted_anti_exceedance_set(w, r));
  N.k = N.n == 0 ? 0 : N.entries.front().k();
  validate(N);
  return N;
}

DecoratedPermutation decorated_perm_from_necklace(const GrassmannNecklace& N) {
  validate(N);
  const int n = N.n;
  std::vector<int> vals(static_cast<size_t>(n));
  std::set<int> cw;
  for (int r = 1; r <= n; ++r) {
    const uint64_t cur = N.entries[static_cast<size_t>(r) - 1].mask();
    const uint64_t next = N.entries[r % n].mask();
    const uint64_t removed = cur & ~next;
    const uint64_t added = next & ~cur;
    if (removed == 0 && added == 0) {
      vals[static_cast<size_t>(r) - 1] = r;
      if (cur >> (r - 1) & 1) cw.insert(r);
    } else if (removed == uint64_t{1} << (r - 1) && std::popcount(added) == 1) {
      vals[static_cast<size_t>(r) - 1] = std::countr_zero(added) + 1;
    } else {
      throw invariant_error("necklace transition at " + std::to_string(r) +
                            " is not (I \\ {r}) u {j}");
    }
  }
  DecoratedPermutation w{Permutation(std::move(vals)), std::move(cw)};
  if (grassmann_necklace(w) != N)
    throw invariant_error("necklace does not round-trip");
  return w;
}

bool Positroid::contains(uint64_t mask) const {
  return std::any_of(bases.begin(), bases.end(),
                     [&](const KSubset& I) { return I.mask() == mask; });
}

Positroid positroid_from_necklace(const GrassmannNecklace& N) {
  validate(N);
  Positroid M{N.n, N.k, {}};
  std::vector<uint64_t> bounds;
  for (const auto& I : N.entries) bounds.push_back(I.mask());
  for (uint64_t cand : ksubset_masks(N.n, N.k)) {
    bool in = true;
    for (int r = 1; r <= N.n && in; ++r)
      in = gale_leq_masks(bounds[static_cast<size_t>(r) - 1], cand, r, N.n);
    if (in) M.bases.push_back(KSubset::from_mask(N.n, cand));
  }
  return M;
}

GrassmannNecklace necklace_from_positroid(const Positroid& M) {
  if (M.bases.empty()) throw invariant_error("positroid with no bases");
  GrassmannNecklace N{M.n, M.k, {}};
  for (const auto& I : M.bases)
    if (I.k() != M.k || I.n() != M.n)
      throw invariant_error("bases must share rank and ground set");
  for (int r = 1; r <= M.n; ++r) {
    // The Gale minimum, when it exists, has the lexicographically least
    // tuple of rotated coordinates.
    auto rotated = [&](const KSubset& I) {
      std::vector<int> t;
      for (int x : I.elements()) t.push_back((x - r + M.n) % M.n);
      std::sort(t.begin(), t.end());
      return t;
    };
    const KSubset* best = &M.bases.front();
    std::vector<int> best_t = rotated(*best);
    for (const auto& I : M.bases) {
      auto t = rotated(I);
      if (t < best_t) {
        best_t = std::move(t);
        best = &I;
      }
    }
    for (const auto& I : M.bases)
      if (!gale_leq_masks(best->mask(), I.mask(), r, M.n))
        throw invariant_error("no shifted-Gale minimum at " + std::to_string(r));
    N.entries.push_back(*best);
  }
  return N;
}

bool is_positroid(const std::vector<KSubset>& bases, int n) {
  if (bases.empty()) return false;
  const int k = bases.front().k();
  std::vector<KSubset> sorted;
  for (const auto& I : bases) {
    if (I.k() != k || I.n() > n) return false;
    sorted.emplace_back(n, I.elements());
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Positroid M{n, k, sorted};
  try {
    const GrassmannNecklace N = necklace_from_positroid(M);
    // Gale minima can exist for non-matroids ({13,24} on [4] has them), so
    // the minima must additionally chain together as a genuine necklace.
    decorated_perm_from_necklace(N);
    return positroid_from_necklace(N) == M;
  } catch (const invariant_error&) {
    return false;
  }
}

void validate(const BruhatInterval& I) {
  if (I.u.size() != I.v.size()) throw invariant_error("interval endpoints disagree on n");
  if (!is_k_grassmannian(I.v, I.k))
    throw invariant_error("upper endpoint is not k-Grassmannian");
  if (!bruhat_leq_grassmannian(I.u, I.v, I.k))
    throw invariant_error("interval endpoints are not comparable");
}

BruhatInterval interval_from_decorated_perm(const DecoratedPermutation& w) {
  const int n = w.size();
  const KSubset I1 = shifted_anti_exceedance_set(w, 1);
  const int k = I1.k();
  const Permutation winv = w.perm().inverse();
  std::vector<int> first, rest;
  for (int i : I1.elements()) first.push_back(winv(i));
  std::sort(first.begin(), first.end());
  for (int x = 1; x <= n; ++x)
    if (std::find(first.begin(), first.end(), x) == first.end()) rest.push_back(x);
  first.insert(first.end(), rest.begin(), rest.end());
  const Permutation v{std::move(first)};
  const Permutation u = multiply(w.perm(), v);
  BruhatInterval I{u, v, k};
  validate(I);
  if (initial_set(u, k) != I1)
    throw invariant_error("initial set of u strayed from the necklace");
  return I;
}

DecoratedPermutation decorated_perm_from_interval(const BruhatInterval& I) {
  validate(I);
  const Permutation w = multiply(I.u, I.v.inverse());
  const KSubset marked = initial_set(I.u, I.k);
  std::set<int> cw;
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) == i && marked.contains(i)) cw.insert(i);
  return DecoratedPermutation{w, std::move(cw)};
}

Positroid positroid_from_interval(const BruhatInterval& I) {
  validate(I);
  Positroid M{I.u.size(), I.k, {}};
  std::set<KSubset> seen;
  for (const Permutation& y : bruhat_interval(I.u, I.v))
    seen.insert(initial_set(y, I.k));
  M.bases.assign(seen.begin(), seen.end());
  return M;
}

}  // namespace poslab

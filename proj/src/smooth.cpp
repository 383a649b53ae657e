#include "poslab/smooth.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace poslab {

namespace {

Positroid positroid_of(const DecoratedPermutation& w) {
  return positroid_from_necklace(grassmann_necklace(w));
}

int tangent_codim_masks(const std::set<uint64_t>& members, uint64_t J, int n) {
  int count = 0;
  for (int a = 1; a <= n; ++a) {
    if (!(J >> (a - 1) & 1)) continue;
    for (int b = 1; b <= n; ++b) {
      if (J >> (b - 1) & 1) continue;
      const uint64_t I = (J & ~(uint64_t{1} << (a - 1))) | uint64_t{1} << (b - 1);
      if (!members.contains(I)) ++count;
    }
  }
  return count;
}

}  // namespace

int codimension(const DecoratedPermutation& w) {
  const int n = w.size();
  const int a = static_cast<int>(alignments(w).size());
  const BruhatInterval I = interval_from_decorated_perm(w);
  const int via_lengths = I.k * (n - I.k) - (length(I.v) - length(I.u));
  if (a != via_lengths)
    throw invariant_error("codimension: alignment count and length formula disagree");
  return a;
}

JohnsonGraphView johnson_graph(const Positroid& M) {
  JohnsonGraphView G{M, {}, std::vector<int>(M.bases.size(), 0)};
  for (size_t i = 0; i < M.bases.size(); ++i) {
    for (size_t j = i + 1; j < M.bases.size(); ++j) {
      if (std::popcount(M.bases[i].mask() & M.bases[j].mask()) == M.k - 1) {
        G.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        ++G.degrees[i];
        ++G.degrees[j];
      }
    }
  }
  return G;
}

int tangent_codim(const Positroid& M, const KSubset& J) {
  std::set<uint64_t> members;
  for (const auto& I : M.bases) members.insert(I.mask());
  if (!members.contains(J.mask()))
    throw invariant_error("tangent count requested at a non-basis");
  return tangent_codim_masks(members, J.mask(), M.n);
}

Criterion parse_criterion(const std::string& name) {
  if (name == "degree") return Criterion::Degree;
  if (name == "regular") return Criterion::Regular;
  if (name == "crossed") return Criterion::Crossed;
  if (name == "spirograph") return Criterion::Spirograph;
  throw parse_error("unknown criterion: " + name);
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::Degree: return "degree";
    case Criterion::Regular: return "regular";
    case Criterion::Crossed: return "crossed";
    case Criterion::Spirograph: return "spirograph";
  }
  throw invariant_error("bad criterion value");
}

bool is_smooth(const DecoratedPermutation& w, Criterion c) {
  switch (c) {
    case Criterion::Crossed:
      return !has_crossed_alignment(w);
    case Criterion::Spirograph:
      return is_spirograph_union(w);
    default:
      break;
  }
  const Positroid M = positroid_of(w);
  const JohnsonGraphView G = johnson_graph(M);
  const int target =
      M.k * (M.n - M.k) - static_cast<int>(alignments(w).size());
  if (c == Criterion::Regular) {
    // regularity alone is not enough: 2,5,4,1,6,3 has a 6-regular Johnson
    // graph yet tangent codimension 2 < 3 everywhere; the common degree
    // must also hit the target
    const bool regular =
        std::all_of(G.degrees.begin(), G.degrees.end(),
                    [&](int d) { return d == G.degrees.front(); });
    return regular && (G.degrees.empty() || G.degrees.front() == target);
  }
  return std::all_of(G.degrees.begin(), G.degrees.end(),
                     [&](int d) { return d == target; });
}

std::vector<KSubset> singular_fixed_points(const DecoratedPermutation& w) {
  const int codim = codimension(w);
  const Positroid M = positroid_of(w);
  std::set<uint64_t> members;
  for (const auto& I : M.bases) members.insert(I.mask());
  std::vector<KSubset> out;
  for (const auto& J : M.bases)
    if (tangent_codim_masks(members, J.mask(), M.n) < codim) out.push_back(J);
  return out;
}

SmoothnessReport smoothness_report(const DecoratedPermutation& w) {
  SmoothnessReport R;
  R.w = w;
  R.codim = codimension(w);
  R.M = positroid_of(w);
  const JohnsonGraphView G = johnson_graph(R.M);
  R.johnson_degrees = G.degrees;

  std::set<uint64_t> members;
  for (const auto& I : R.M.bases) members.insert(I.mask());
  const int kd = R.M.k * (R.M.n - R.M.k);
  for (size_t i = 0; i < R.M.bases.size(); ++i) {
    const int t = tangent_codim_masks(members, R.M.bases[i].mask(), R.M.n);
    R.tangent_codims.push_back(t);
    if (t + G.degrees[i] != kd)
      throw invariant_error("Johnson degree and tangent count do not add to k(n-k)");
    if (t < R.codim) R.singular_points.push_back(R.M.bases[i]);
  }

  const int target = kd - R.codim;
  R.degree_ok = std::all_of(G.degrees.begin(), G.degrees.end(),
                            [&](int d) { return d == target; });
  R.regular_ok = G.degrees.empty() ||
                 std::all_of(G.degrees.begin(), G.degrees.end(),
                             [&](int d) { return d == G.degrees.front(); });
  const auto crossed = crossed_alignments(w);
  R.crossed_ok = crossed.empty();
  if (!crossed.empty()) R.witness = crossed.front();
  R.spirograph_ok = is_spirograph_union(w);

  if (R.degree_ok != R.regular_ok || R.degree_ok != R.crossed_ok ||
      R.degree_ok != R.spirograph_ok)
    throw invariant_error("smoothness criteria disagree");
  R.smooth = R.degree_ok;
  if (R.smooth != R.singular_points.empty())
    throw invariant_error("singular-point set contradicts the verdict");
  return R;
}

namespace {

// Does some x in [a, r-1] send its arc across r (w^-1(x) >= r)?
bool walk_cond1(const Permutation& winv, int a, int r) {
  for (int x = a; x < r; ++x)
    if (winv(x) >= r) return true;
  return false;
}

// Does some y in [r, b] come from the left of r (w^-1(y) <= r-1)?
bool walk_cond2(const Permutation& winv, int b, int r) {
  for (int y = r; y <= b; ++y)
    if (winv(y) <= r - 1) return true;
  return false;
}

bool lemma_says_basis(const Permutation& winv, int a, int b) {
  if (a >= b) return false;
  for (int r = a + 1; r <= b; ++r)
    if (!walk_cond1(winv, a, r) || !walk_cond2(winv, b, r)) return false;
  return true;
}

Permutation mirror_conjugate(const Permutation& w) {
  const int n = w.size();
  std::vector<int> vals(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    vals[static_cast<size_t>(i) - 1] = n + 1 - w(n + 1 - i);
  return Permutation(std::move(vals));
}

// Condition-1 repair: minimal failing r, then the first element of the
// backward cycle of b that clears r.  When the whole cycle stays below r
// the walk closes at b itself, which clears r because r <= b; 3,4,2,1 with
// (a,b) = (2,4) needs that closing case.
int trace_cond1_arc(const Permutation& winv, int a, int b) {
  int r = -1;
  for (int s = a + 1; s <= b && r < 0; ++s)
    if (!walk_cond1(winv, a, s)) r = s;
  if (r < 0) throw invariant_error("condition 1 holds everywhere");
  int c = winv(b);
  while (c != b && c < r) c = winv(c);
  return c;
}

}  // namespace

std::vector<std::pair<int, int>> anti_exchange_pairs(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    if (w(i) == i) throw invariant_error("anti-exchange pairs need a derangement");
  const DecoratedPermutation dw{w, {}};
  const KSubset J = shifted_anti_exceedance_set(dw, 1);
  const Positroid M = positroid_of(dw);
  std::set<uint64_t> members;
  for (const auto& I : M.bases) members.insert(I.mask());

  const Permutation winv = w.inverse();
  std::vector<std::pair<int, int>> direct, walked;
  for (int a : J.elements()) {
    for (int b = 1; b <= n; ++b) {
      if (J.contains(b)) continue;
      const uint64_t I = (J.mask() & ~(uint64_t{1} << (a - 1))) | uint64_t{1} << (b - 1);
      if (!members.contains(I)) direct.emplace_back(a, b);
      if (!lemma_says_basis(winv, a, b)) walked.emplace_back(a, b);
    }
  }
  std::sort(direct.begin(), direct.end());
  std::sort(walked.begin(), walked.end());
  if (direct != walked)
    throw invariant_error("interval-walk conditions disagree with the matroid");
  return direct;
}

ArcPair psi_map(const Permutation& w, std::pair<int, int> ab) {
  const auto pairs = anti_exchange_pairs(w);
  if (std::find(pairs.begin(), pairs.end(), ab) == pairs.end())
    throw invariant_error("not an anti-exchange pair");
  const auto [a, b] = ab;
  const int n = w.size();
  const Permutation winv = w.inverse();

  auto normalized = [](int i, int j) { return ArcPair{std::min(i, j), std::max(i, j)}; };
  ArcPair result{};
  if (b < a) {
    result = normalized(winv(b), winv(a));
  } else {
    bool cond1_fails = false;
    for (int r = a + 1; r <= b && !cond1_fails; ++r)
      cond1_fails = !walk_cond1(winv, a, r);
    if (cond1_fails) {
      result = normalized(trace_cond1_arc(winv, a, b), winv(a));
    } else {
      // Condition 2 fails; run the condition-1 repair on the mirrored
      // diagram and carry the arcs back through the mirror.
      const Permutation m = mirror_conjugate(w);
      const Permutation minv = m.inverse();
      const int am = n + 1 - b, bm = n + 1 - a;
      const int c = trace_cond1_arc(minv, am, bm);
      result = normalized(n + 1 - c, winv(b));
    }
  }

  const auto all = alignments(DecoratedPermutation{w, {}});
  if (std::find(all.begin(), all.end(), result) == all.end())
    throw invariant_error("mapped pair is not an alignment");
  return result;
}

std::pair<int, bool> canonicalize_crossed(const DecoratedPermutation& w) {
  const int n = w.size();
  if (!has_crossed_alignment(w))
    throw invariant_error("nothing to canonicalize: no crossed alignment");
  // A member enters the witness's clockwise span at its tail and leaves it at
  // its head.  Pass 0 demands both strictly transversal; pass 1 lets tails
  // touch the span's far end and heads its near end, which is the best
  // possible when every crossing shares an endpoint (2,4,1,3 is such a case).
  for (int pass = 0; pass < 2; ++pass) {
    for (int s = 0; s < n; ++s) {
      for (int flip = 0; flip < 2; ++flip) {
        const DecoratedPermutation cand = apply_dihedral(w, {s, flip == 1});
        const int head1 = cand(1);
        for (const auto& c : crossed_alignments(cand)) {
          if (c.witness != 1) continue;
          auto placed = [&](int m) {
            if (1 < cand(m) && cand(m) < head1) return false;
            return pass == 0 ? 1 < m && m < head1 : 1 < m && m <= head1;
          };
          if (placed(c.pair.i) && placed(c.pair.j)) return {s, flip == 1};
        }
      }
    }
  }
  throw invariant_error("no dihedral image shows a based crossed alignment");
}

DecoratedPermutation apply_dihedral(const DecoratedPermutation& w,
                                    std::pair<int, bool> transform) {
  const DecoratedPermutation rotated = rotate(w, transform.first);
  return transform.second ? reflect(rotated) : rotated;
}

}  // namespace poslab

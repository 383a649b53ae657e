#include "poslab/decorated.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace poslab {

DecoratedPermutation::DecoratedPermutation(Permutation perm, std::set<int> clockwise_fixed)
    : perm_(std::move(perm)), cw_(std::move(clockwise_fixed)) {
  for (int i : cw_)
    if (i < 1 || i > perm_.size() || perm_(i) != i)
      throw invariant_error("clockwise mark on a non-fixed point");
}

DecoratedPermutation parse_decorated(const std::string& text) {
  std::vector<std::string> tokens;
  {
    std::string cur;
    for (char c : text) {
      if (c == ',') {
        tokens.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    tokens.push_back(cur);
  }
  std::vector<int> vals;
  std::set<int> cw;
  std::set<int> decorated;
  for (size_t idx = 0; idx < tokens.size(); ++idx) {
    std::string tok = tokens[idx];
    if (tok.empty()) throw parse_error("empty entry in decorated permutation");
    char suffix = 0;
    if (tok.back() == '+' || tok.back() == '-') {
      suffix = tok.back();
      tok.pop_back();
    }
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &pos);
    } catch (...) {
      throw parse_error("expected an integer, got \"" + tokens[idx] + "\"");
    }
    if (pos != tok.size())
      throw parse_error("expected an integer, got \"" + tokens[idx] + "\"");
    vals.push_back(value);
    if (suffix != 0) {
      if (value != static_cast<int>(idx) + 1)
        throw parse_error("orientation mark on a non-fixed point in \"" + text + "\"");
      decorated.insert(value);
      if (suffix == '+') cw.insert(value);
    }
  }
  Permutation perm;
  try {
    perm = Permutation(std::move(vals));
  } catch (const invariant_error& e) {
    throw parse_error(std::string("bad decorated permutation \"") + text + "\": " + e.what());
  }
  for (int i = 1; i <= perm.size(); ++i)
    if (perm(i) == i && !decorated.contains(i))
      throw parse_error("fixed point " + std::to_string(i) + " needs a '+' or '-' mark");
  return DecoratedPermutation(std::move(perm), std::move(cw));
}

std::string to_string(const DecoratedPermutation& w) {
  std::ostringstream out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out << ',';
    out << w(i);
    if (w.is_loop(i)) out << (w.is_clockwise_loop(i) ? '+' : '-');
  }
  return out.str();
}

BoundedAffineArc affine_arc(const DecoratedPermutation& w, int i) {
  const int n = w.size();
  if (w(i) == i) return {i, w.is_clockwise_loop(i) ? i + n : i};
  return {i, w(i) > i ? w(i) : w(i) + n};
}

std::vector<BoundedAffineArc> to_affine(const DecoratedPermutation& w) {
  std::vector<BoundedAffineArc> arcs;
  arcs.reserve(static_cast<size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) arcs.push_back(affine_arc(w, i));
  return arcs;
}

namespace {

enum class Rel { Nest, Sep, Touch, Overlap };

// Place q's base at its unique lift j inside (p.base, p.base+n) and compare
// the lifted interval [j, j + len(q)] against [p.base, p.target].
Rel rel(const BoundedAffineArc& p, const BoundedAffineArc& q, int n) {
  const int j = q.base > p.base ? q.base : q.base + n;
  const int fj = j + (q.target - q.base);
  if (fj < p.target) return Rel::Nest;
  if (j > p.target) return Rel::Sep;
  if (j == p.target) return Rel::Touch;
  if (fj == p.target)  // would force w(p.base) = w(q.base)
    throw invariant_error("classify_pair: arcs do not come from one permutation");
  return Rel::Overlap;
}

}  // namespace

PairRelation classify_pair(const BoundedAffineArc& a, const BoundedAffineArc& b, int n) {
  if (a.base == b.base) throw invariant_error("classify_pair: arcs share a base");
  const Rel r1 = rel(a, b, n);
  const Rel r2 = rel(b, a, n);
  if (r1 == Rel::Nest || r2 == Rel::Nest) return PairRelation::Alignment;
  if (a.is_loop(n) || b.is_loop(n)) return PairRelation::Misalignment;
  const bool w1 = r1 == Rel::Touch || r1 == Rel::Overlap;
  const bool w2 = r2 == Rel::Touch || r2 == Rel::Overlap;
  if (w1 && w2) {
    // Two long arcs that each run past the other's whole span stay parallel
    // (anti-parallel, in fact); only a shared endpoint forces an intersection.
    return (r1 == Rel::Touch || r2 == Rel::Touch) ? PairRelation::Crossing
                                                  : PairRelation::Misalignment;
  }
  return (w1 || w2) ? PairRelation::Crossing : PairRelation::Misalignment;
}

namespace {

std::vector<ArcPair> classified_pairs(const DecoratedPermutation& w, PairRelation want) {
  const int n = w.size();
  const auto arcs = to_affine(w);
  std::vector<ArcPair> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (classify_pair(arcs[static_cast<size_t>(i) - 1], arcs[static_cast<size_t>(j) - 1],
                        n) == want)
        out.push_back({i, j});
  return out;
}

}  // namespace

std::vector<ArcPair> alignments(const DecoratedPermutation& w) {
  return classified_pairs(w, PairRelation::Alignment);
}

std::vector<ArcPair> crossings(const DecoratedPermutation& w) {
  return classified_pairs(w, PairRelation::Crossing);
}

std::vector<ArcPair> misalignments(const DecoratedPermutation& w) {
  return classified_pairs(w, PairRelation::Misalignment);
}

std::vector<CrossedAlignment> crossed_alignments(const DecoratedPermutation& w) {
  const int n = w.size();
  const auto arcs = to_affine(w);
  std::vector<CrossedAlignment> out;
  for (const ArcPair& p : alignments(w)) {
    for (int h = 1; h <= n; ++h) {
      if (h == p.i || h == p.j) continue;
      const auto& hh = arcs[static_cast<size_t>(h) - 1];
      if (classify_pair(hh, arcs[static_cast<size_t>(p.i) - 1], n) == PairRelation::Crossing &&
          classify_pair(hh, arcs[static_cast<size_t>(p.j) - 1], n) == PairRelation::Crossing)
        out.push_back({p, h});
    }
  }
  return out;
}

bool has_crossed_alignment(const DecoratedPermutation& w) {
  const int n = w.size();
  const auto arcs = to_affine(w);
  for (const ArcPair& p : alignments(w))
    for (int h = 1; h <= n; ++h) {
      if (h == p.i || h == p.j) continue;
      const auto& hh = arcs[static_cast<size_t>(h) - 1];
      if (classify_pair(hh, arcs[static_cast<size_t>(p.i) - 1], n) == PairRelation::Crossing &&
          classify_pair(hh, arcs[static_cast<size_t>(p.j) - 1], n) == PairRelation::Crossing)
        return true;
    }
  return false;
}

DecoratedPermutation rotate(const DecoratedPermutation& w, int s) {
  const int n = w.size();
  if (n == 0) return w;
  s = ((s % n) + n) % n;
  auto rho = [&](int x) { return (x - 1 + s) % n + 1; };
  std::vector<int> vals(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) vals[static_cast<size_t>(rho(i)) - 1] = rho(w(i));
  std::set<int> cw;
  for (int i : w.clockwise()) cw.insert(rho(i));
  return DecoratedPermutation(Permutation(std::move(vals)), std::move(cw));
}

DecoratedPermutation reflect(const DecoratedPermutation& w) {
  const int n = w.size();
  if (n == 0) return w;
  auto mirror = [&](int x) { return x == 1 ? 1 : n + 2 - x; };
  std::vector<int> vals(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) vals[static_cast<size_t>(mirror(i)) - 1] = mirror(w(i));
  std::set<int> cw;
  for (int i = 1; i <= n; ++i)
    if (w.is_loop(i) && !w.is_clockwise_loop(i)) cw.insert(mirror(i));
  return DecoratedPermutation(Permutation(std::move(vals)), std::move(cw));
}

DecoratedPermutation reverse_arcs(const DecoratedPermutation& w) {
  std::set<int> cw;
  for (int i = 1; i <= w.size(); ++i)
    if (w.is_loop(i) && !w.is_clockwise_loop(i)) cw.insert(i);
  return DecoratedPermutation(w.perm().inverse(), std::move(cw));
}

DecoratedPermutation remove_fixed_point(const DecoratedPermutation& w, int i) {
  const int n = w.size();
  if (i < 1 || i > n || !w.is_loop(i))
    throw invariant_error("remove_fixed_point: not a fixed point");
  auto relabel = [&](int x) { return x > i ? x - 1 : x; };
  std::vector<int> vals(static_cast<size_t>(n) - 1);
  for (int x = 1; x <= n; ++x)
    if (x != i) vals[static_cast<size_t>(relabel(x)) - 1] = relabel(w(x));
  std::set<int> cw;
  for (int x : w.clockwise())
    if (x != i) cw.insert(relabel(x));
  return DecoratedPermutation(Permutation(std::move(vals)), std::move(cw));
}

DecoratedPermutation restrict_to_support(const DecoratedPermutation& w,
                                          const std::vector<int>& support) {
  const int m = static_cast<int>(support.size());
  std::map<int, int> index;
  for (int t = 0; t < m; ++t) index[support[static_cast<size_t>(t)]] = t + 1;
  std::vector<int> vals(static_cast<size_t>(m));
  std::set<int> cw;
  for (int x : support) {
    const auto it = index.find(w(x));
    if (it == index.end())
      throw invariant_error("restrict_to_support: support not closed under w");
    vals[static_cast<size_t>(index[x]) - 1] = it->second;
    if (w.is_clockwise_loop(x)) cw.insert(index[x]);
  }
  return DecoratedPermutation(Permutation(std::move(vals)), std::move(cw));
}

std::vector<std::vector<int>> crossing_components(const DecoratedPermutation& w) {
  const int n = w.size();
  const auto arcs = to_affine(w);
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (classify_pair(arcs[static_cast<size_t>(i) - 1], arcs[static_cast<size_t>(j) - 1],
                        n) == PairRelation::Crossing)
        parent[static_cast<size_t>(find(i - 1))] = find(j - 1);
  std::vector<std::vector<int>> by_root(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) by_root[static_cast<size_t>(find(i))].push_back(i + 1);
  std::vector<std::vector<int>> components;
  for (auto& c : by_root)
    if (!c.empty()) components.push_back(std::move(c));
  return components;
}

namespace {

// No a < b < c < d alternating between the two (disjoint, sorted) blocks.
bool blocks_noncrossing(const std::vector<int>& p, const std::vector<int>& q) {
  size_t ip = 0, iq = 0;
  int transitions = 0;
  int last = 0;  // 1 = p, 2 = q
  while (ip < p.size() || iq < q.size()) {
    int side;
    if (iq == q.size() || (ip < p.size() && p[ip] < q[iq])) {
      side = 1;
      ++ip;
    } else {
      side = 2;
      ++iq;
    }
    if (side != last) {
      if (last != 0) ++transitions;
      last = side;
    }
  }
  return transitions <= 2;
}

bool block_is_cyclic_shift(const DecoratedPermutation& w, const std::vector<int>& support) {
  const int m = static_cast<int>(support.size());
  if (m == 1) return true;
  auto relabel = [&](int x) {
    return static_cast<int>(std::lower_bound(support.begin(), support.end(), x) -
                            support.begin()) +
           1;
  };
  int t = -1;
  for (int pos = 1; pos <= m; ++pos) {
    const int image = w(support[static_cast<size_t>(pos) - 1]);
    if (!std::binary_search(support.begin(), support.end(), image)) return false;
    const int shift = ((relabel(image) - pos) % m + m) % m;
    if (t == -1) t = shift;
    if (shift != t) return false;
  }
  return true;
}

}  // namespace

bool is_spirograph_union(const DecoratedPermutation& w, std::vector<std::vector<int>>* blocks) {
  const auto components = crossing_components(w);
  if (blocks) *blocks = components;
  for (size_t a = 0; a < components.size(); ++a)
    for (size_t b = a + 1; b < components.size(); ++b)
      if (!blocks_noncrossing(components[a], components[b])) return false;
  for (const auto& c : components)
    if (!block_is_cyclic_shift(w, c)) return false;
  return true;
}

namespace {

void decorations_of(const Permutation& p,
                    const std::function<void(const DecoratedPermutation&)>& fn) {
  std::vector<int> fixed;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) fixed.push_back(i);
  const uint64_t total = uint64_t{1} << fixed.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    std::set<int> cw;
    for (size_t b = 0; b < fixed.size(); ++b)
      if (mask >> b & 1) cw.insert(fixed[b]);
    fn(DecoratedPermutation(p, std::move(cw)));
  }
}

}  // namespace

void for_each_decorated(int n, const std::function<void(const DecoratedPermutation&)>& fn) {
  if (n > guard_limit(9))
    throw guard_error("decorated enumeration guarded at n <= 9 (POSITROID_GUARD_N overrides)");
  if (n < 0) throw invariant_error("negative n");
  for_each_decorated_range(n, 0, factorial(n), fn);
}

void for_each_decorated_range(int n, uint64_t perm_begin, uint64_t perm_end,
                              const std::function<void(const DecoratedPermutation&)>& fn) {
  if (perm_begin >= perm_end) return;
  std::vector<int> v = nth_permutation(n, perm_begin).one_line();
  for (uint64_t idx = perm_begin; idx < perm_end; ++idx) {
    decorations_of(Permutation(v), fn);
    if (!std::next_permutation(v.begin(), v.end())) break;
  }
}

void for_each_derangement(int n, const std::function<void(const Permutation&)>& fn) {
  if (n > guard_limit(9))
    throw guard_error("derangement enumeration guarded at n <= 9 (POSITROID_GUARD_N overrides)");
  std::vector<int> v(static_cast<size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  if (n <= 0) return;
  do {
    bool fixed_free = true;
    for (int i = 0; i < n && fixed_free; ++i)
      if (v[static_cast<size_t>(i)] == i + 1) fixed_free = false;
    if (fixed_free) fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace poslab

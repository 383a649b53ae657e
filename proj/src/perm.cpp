#include "poslab/perm.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

namespace poslab {

int guard_limit(int default_limit) {
  if (const char* env = std::getenv("POSITROID_GUARD_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  return default_limit;
}

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : v_) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)])
      throw invariant_error("one-line values are not a bijection of [n]");
    seen[static_cast<size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  const int n = size();
  std::vector<int> inv(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation multiply(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) throw invariant_error("multiply: size mismatch");
  const int n = w.size();
  std::vector<int> out(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = w(v(i));
  return Permutation(std::move(out));
}

int length(const Permutation& w) {
  int count = 0;
  const int n = w.size();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

bool is_k_grassmannian(const Permutation& v, int k) {
  const int n = v.size();
  if (k < 0 || k > n) return false;
  for (int i = 1; i < k; ++i)
    if (v(i) > v(i + 1)) return false;
  for (int i = k + 1; i < n; ++i)
    if (v(i) > v(i + 1)) return false;
  return true;
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw parse_error("expected an integer, got \"" + tok + "\"");
  return value;
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
  std::vector<int> vals;
  for (const std::string& tok : split_commas(text)) vals.push_back(parse_int(tok));
  try {
    return Permutation(std::move(vals));
  } catch (const invariant_error& e) {
    throw parse_error(std::string("bad permutation \"") + text + "\": " + e.what());
  }
}

std::string to_string(const Permutation& w) {
  std::ostringstream out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out << ',';
    out << w(i);
  }
  return out.str();
}

KSubset::KSubset(int n, std::vector<int> elements) : n_(n), e_(std::move(elements)) {
  if (n < 0 || n > 64) throw invariant_error("subset ground set out of range");
  std::sort(e_.begin(), e_.end());
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < 1 || e_[i] > n) throw invariant_error("subset element out of [n]");
    if (i > 0 && e_[i] == e_[i - 1]) throw invariant_error("repeated subset element");
  }
}

bool KSubset::contains(int x) const {
  return std::binary_search(e_.begin(), e_.end(), x);
}

uint64_t KSubset::mask() const {
  uint64_t m = 0;
  for (int x : e_) m |= uint64_t{1} << (x - 1);
  return m;
}

KSubset KSubset::from_mask(int n, uint64_t mask) {
  std::vector<int> elems;
  for (int i = 1; i <= n; ++i)
    if (mask >> (i - 1) & 1) elems.push_back(i);
  return KSubset(n, std::move(elems));
}

KSubset initial_set(const Permutation& y, int k) {
  if (k < 0 || k > y.size()) throw invariant_error("initial_set: k out of range");
  std::vector<int> elems;
  elems.reserve(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) elems.push_back(y(i));
  return KSubset(y.size(), std::move(elems));
}

KSubset parse_subset(const std::string& text, int n) {
  size_t a = text.find_first_not_of(" \t");
  size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos || text[a] != '{' || text[b] != '}')
    throw parse_error("subset must look like {1,2,4}");
  std::string body = text.substr(a + 1, b - a - 1);
  std::vector<int> elems;
  if (body.find_first_not_of(" \t") != std::string::npos)
    for (const std::string& tok : split_commas(body)) elems.push_back(parse_int(tok));
  try {
    return KSubset(n, std::move(elems));
  } catch (const invariant_error& e) {
    throw parse_error(std::string("bad subset \"") + text + "\": " + e.what());
  }
}

std::string to_string(const KSubset& s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.elements().size(); ++i) {
    if (i > 0) out << ',';
    out << s.elements()[i];
  }
  out << '}';
  return out.str();
}

bool gale_leq_masks(uint64_t I, uint64_t J, int r, int n) {
  // p-th smallest of I in shifted order never comes after p-th smallest of J
  // iff every prefix of the rotated walk sees at least as many I's as J's.
  int ci = 0, cj = 0;
  for (int t = 0; t < n; ++t) {
    const int x = (r - 1 + t) % n;
    ci += static_cast<int>(I >> x & 1);
    cj += static_cast<int>(J >> x & 1);
    if (cj > ci) return false;
  }
  return true;
}

bool gale_leq(const KSubset& I, const KSubset& J, int r) {
  if (I.n() != J.n() || I.k() != J.k())
    throw invariant_error("gale_leq: subsets not comparable");
  if (r < 1 || r > std::max(I.n(), 1))
    throw invariant_error("gale_leq: shift out of range");
  return gale_leq_masks(I.mask(), J.mask(), r, I.n());
}

namespace {

void insert_sorted(std::vector<int>& v, int x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

}  // namespace

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw invariant_error("bruhat_leq: size mismatch");
  const int n = u.size();
  std::vector<int> su, sv;
  su.reserve(static_cast<size_t>(n));
  sv.reserve(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) {
    insert_sorted(su, u(i));
    insert_sorted(sv, v(i));
    for (size_t t = 0; t < su.size(); ++t)
      if (su[t] > sv[t]) return false;
  }
  return true;
}

bool bruhat_leq_grassmannian(const Permutation& u, const Permutation& v, int k) {
  if (u.size() != v.size())
    throw invariant_error("bruhat_leq_grassmannian: size mismatch");
  if (!is_k_grassmannian(v, k))
    throw invariant_error("bruhat_leq_grassmannian: v is not k-Grassmannian");
  const int n = u.size();
  for (int j = 1; j <= k; ++j)
    if (u(j) > v(j)) return false;
  for (int j = k + 1; j <= n; ++j)
    if (u(j) < v(j)) return false;
  return true;
}

std::vector<Permutation> bruhat_covers_up(const Permutation& w) {
  const int n = w.size();
  std::vector<Permutation> out;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) >= w(j)) continue;
      bool blocked = false;
      for (int m = i + 1; m < j && !blocked; ++m)
        if (w(i) < w(m) && w(m) < w(j)) blocked = true;
      if (blocked) continue;
      std::vector<int> v = w.one_line();
      std::swap(v[static_cast<size_t>(i) - 1], v[static_cast<size_t>(j) - 1]);
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v) {
  if (!bruhat_leq(u, v)) throw invariant_error("bruhat_interval: u is not below v");
  std::set<Permutation> seen{u};
  std::vector<Permutation> frontier{u};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& y : frontier) {
      for (Permutation& z : bruhat_covers_up(y)) {
        if (seen.contains(z) || !bruhat_leq(z, v)) continue;
        seen.insert(z);
        next.push_back(std::move(z));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

void emit_combinations(int n, int k, int first, uint64_t acc, std::vector<uint64_t>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int x = first; x <= n - k + 1; ++x)
    emit_combinations(n, k - 1, x + 1, acc | uint64_t{1} << (x - 1), out);
}

}  // namespace

std::vector<uint64_t> ksubset_masks(int n, int k) {
  std::vector<uint64_t> out;
  if (k < 0 || k > n) return out;
  emit_combinations(n, k, 1, 0, out);
  return out;
}

uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw invariant_error("factorial argument out of range");
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

Permutation nth_permutation(int n, uint64_t index) {
  if (index >= factorial(n)) throw invariant_error("permutation index out of range");
  std::vector<int> pool;
  for (int i = 1; i <= n; ++i) pool.push_back(i);
  std::vector<int> out;
  for (int i = n - 1; i >= 0; --i) {
    const uint64_t f = factorial(i);
    const size_t d = static_cast<size_t>(index / f);
    index %= f;
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(out));
}

}  // namespace poslab

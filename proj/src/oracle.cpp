#include "poslab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

#include "poslab/errors.hpp"
#include "poslab/rational.hpp"

namespace poslab {

void ChartPolynomial::add(uint64_t monomial, int coefficient) {
  mpz_class& c = terms[monomial];
  c += coefficient;
  if (c == 0) terms.erase(monomial);
}

std::vector<mpz_class> ChartPolynomial::gradient_at_origin(int num_vars) const {
  std::vector<mpz_class> grad(static_cast<size_t>(num_vars), mpz_class(0));
  for (int v = 0; v < num_vars; ++v) {
    const auto it = terms.find(uint64_t{1} << v);
    if (it != terms.end()) grad[static_cast<size_t>(v)] = it->second;
  }
  return grad;
}

namespace {

// Chart layout at A_J plus the Leibniz walk over one minor.  Each column of J
// pins its own row, so distinct row assignments touch distinct free entries
// and no two terms share a monomial.
struct Chart {
  int k = 0;
  int width = 0;                 // n - k free columns per row
  std::vector<int> row_of_col;   // column -> its identity row, -1 if free
  std::vector<int> var_of_col;   // column -> rank among free columns, -1 if pinned

  Chart(int n, const KSubset& J) : k(J.k()), width(n - J.k()) {
    row_of_col.assign(static_cast<size_t>(n) + 1, -1);
    var_of_col.assign(static_cast<size_t>(n) + 1, -1);
    for (int r = 0; r < k; ++r)
      row_of_col[static_cast<size_t>(J.elements()[static_cast<size_t>(r)])] = r;
    int next = 0;
    for (int c = 1; c <= n; ++c)
      if (row_of_col[static_cast<size_t>(c)] < 0)
        var_of_col[static_cast<size_t>(c)] = next++;
  }

  void expand(const KSubset& I, size_t pos, unsigned used, uint64_t monomial,
              int sign, ChartPolynomial& out) const {
    if (pos == static_cast<size_t>(k)) {
      out.add(monomial, sign);
      return;
    }
    const int c = I.elements()[pos];
    const int pinned = row_of_col[static_cast<size_t>(c)];
    if (pinned >= 0) {
      if (used & (1u << pinned)) return;
      const int flips = std::popcount(used >> (pinned + 1));
      expand(I, pos + 1, used | (1u << pinned), monomial,
             (flips & 1) ? -sign : sign, out);
      return;
    }
    for (int r = 0; r < k; ++r) {
      if (used & (1u << r)) continue;
      const uint64_t bit = uint64_t{1}
                           << (r * width + var_of_col[static_cast<size_t>(c)]);
      const int flips = std::popcount(used >> (r + 1));
      expand(I, pos + 1, used | (1u << r), monomial | bit,
             (flips & 1) ? -sign : sign, out);
    }
  }
};

}  // namespace

ChartPolynomial chart_minor(int n, const KSubset& J, const KSubset& I) {
  if (J.n() != n || I.n() != n || J.k() != I.k())
    throw invariant_error("chart minor needs equal-size subsets of [n]");
  const int k = J.k();
  if (k * (n - k) > 63)
    throw guard_error("chart has more than 63 free entries");
  const Chart chart(n, J);
  ChartPolynomial p;
  chart.expand(I, 0, 0u, 0u, +1, p);
  return p;
}

int jacobian_rank_at(const Positroid& M, const KSubset& J) {
  if (J.n() != M.n || J.k() != M.k || !M.contains(J.mask()))
    throw invariant_error("chart point is not a basis of the positroid");
  const int num_vars = M.k * (M.n - M.k);
  std::vector<std::vector<mpz_class>> rows;
  for (uint64_t mask : ksubset_masks(M.n, M.k)) {
    if (M.contains(mask)) continue;
    const KSubset I = KSubset::from_mask(M.n, mask);
    const ChartPolynomial p = chart_minor(M.n, J, I);
    if (p.terms.count(0))
      throw invariant_error("defining equation does not vanish at the chart origin");
    std::vector<mpz_class> grad = p.gradient_at_origin(num_vars);
    const bool live = std::any_of(grad.begin(), grad.end(),
                                  [](const mpz_class& c) { return c != 0; });
    const bool adjacent =
        std::popcount(mask & J.mask()) == M.k - 1;
    if (live != adjacent)
      throw invariant_error("gradient support disagrees with basis adjacency");
    rows.push_back(std::move(grad));
  }
  if (rows.empty()) return 0;
  return integer_rank(rows);
}

std::set<KSubset> brute_initial_sets(const Permutation& u, const Permutation& v,
                                     int k) {
  const int n = u.size();
  if (v.size() != n) throw invariant_error("interval endpoints live in different S_n");
  if (!is_k_grassmannian(v, k)) throw invariant_error("v is not k-Grassmannian");
  if (!bruhat_leq(u, v)) throw invariant_error("u is not below v in Bruhat order");
  if (n > guard_limit(8))
    throw guard_error("full S_n filter guarded at n <= 8 (POSITROID_GUARD_N overrides)");
  std::set<KSubset> out;
  std::vector<int> line(static_cast<size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  do {
    const Permutation y(line);
    if (bruhat_leq(u, y) && bruhat_leq(y, v)) out.insert(initial_set(y, k));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<CensusRow> smoothness_census(int n, Criterion criterion, int jobs) {
  if (n < 1) throw invariant_error("census needs n >= 1");
  if (n > guard_limit(8))
    throw guard_error("census guarded at n <= 8 (POSITROID_GUARD_N overrides)");
  jobs = std::clamp(jobs, 1, 64);

  const uint64_t perms = factorial(n);
  std::vector<std::vector<CensusRow>> partial(
      static_cast<size_t>(jobs),
      std::vector<CensusRow>(static_cast<size_t>(n) + 1));
  auto worker = [&](int t) {
    auto& counts = partial[static_cast<size_t>(t)];
    const uint64_t lo = perms * static_cast<uint64_t>(t) / static_cast<uint64_t>(jobs);
    const uint64_t hi =
        perms * static_cast<uint64_t>(t + 1) / static_cast<uint64_t>(jobs);
    for_each_decorated_range(n, lo, hi, [&](const DecoratedPermutation& w) {
      const int k = shifted_anti_exceedance_set(w, 1).k();
      auto& row = counts[static_cast<size_t>(k)];
      ++row.total;
      if (is_smooth(w, criterion)) ++row.smooth;
    });
  };

  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();

  std::vector<CensusRow> rows(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    rows[static_cast<size_t>(k)].n = n;
    rows[static_cast<size_t>(k)].k = k;
    for (const auto& counts : partial) {
      rows[static_cast<size_t>(k)].total += counts[static_cast<size_t>(k)].total;
      rows[static_cast<size_t>(k)].smooth += counts[static_cast<size_t>(k)].smooth;
    }
  }
  return rows;
}

std::string census_tsv(const std::vector<CensusRow>& rows, Criterion criterion) {
  std::ostringstream out;
  for (const CensusRow& r : rows)
    out << r.n << '\t' << r.k << '\t' << r.total << '\t' << r.smooth << '\t'
        << to_string(criterion) << '\n';
  return out.str();
}

}  // namespace poslab

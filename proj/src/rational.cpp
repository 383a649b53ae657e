#include "poslab/rational.hpp"

#include <algorithm>
#include <set>

namespace poslab {

mpq_class parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw parse_error("empty rational");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw parse_error("bad rational: " + text);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw invariant_error("negative matrix shape");
}

RationalMatrix::RationalMatrix(std::vector<std::vector<mpq_class>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.front().size());
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw invariant_error("ragged matrix rows");
    for (auto& x : row) data_.push_back(std::move(x));
  }
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int p = 0; p < n - 1; ++p) {
    if (m[p][p] == 0) {
      int swap = -1;
      for (int r = p + 1; r < n && swap < 0; ++r)
        if (m[r][p] != 0) swap = r;
      if (swap < 0) return 0;
      std::swap(m[p], m[swap]);
      sign = -sign;
    }
    for (int r = p + 1; r < n; ++r) {
      for (int c = p + 1; c < n; ++c) {
        m[r][c] = m[p][p] * m[r][c] - m[r][p] * m[p][c];
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][p] = 0;
    }
    prev = m[p][p];
  }
  return sign * m[n - 1][n - 1];
}

int integer_rank(std::vector<std::vector<mpz_class>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m.front().size());
  mpz_class prev = 1;
  int rank = 0;
  int lead = 0;
  for (int p = 0; p < rows && lead < cols; ++lead) {
    int pivot = -1;
    for (int r = p; r < rows && pivot < 0; ++r)
      if (m[r][lead] != 0) pivot = r;
    if (pivot < 0) continue;
    std::swap(m[p], m[pivot]);
    for (int r = p + 1; r < rows; ++r) {
      for (int c = lead + 1; c < cols; ++c) {
        m[r][c] = m[p][lead] * m[r][c] - m[r][lead] * m[p][c];
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][lead] = 0;
    }
    prev = m[p][lead];
    ++rank;
    ++p;
  }
  return rank;
}

std::vector<std::vector<mpz_class>> scaled_integer_rows(const RationalMatrix& A) {
  std::vector<std::vector<mpz_class>> out(static_cast<size_t>(A.rows()));
  for (int r = 0; r < A.rows(); ++r) {
    mpz_class lcm = 1;
    for (int c = 0; c < A.cols(); ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), A.at(r, c).get_den().get_mpz_t());
    auto& row = out[static_cast<size_t>(r)];
    row.reserve(static_cast<size_t>(A.cols()));
    for (int c = 0; c < A.cols(); ++c) {
      const mpq_class& q = A.at(r, c);
      row.push_back(q.get_num() * (lcm / q.get_den()));
    }
  }
  return out;
}

int rank(const RationalMatrix& A) { return integer_rank(scaled_integer_rows(A)); }

mpz_class scaled_minor(const std::vector<std::vector<mpz_class>>& rows,
                       const KSubset& cols) {
  const int k = static_cast<int>(rows.size());
  if (cols.k() != k) throw invariant_error("minor is not square");
  std::vector<std::vector<mpz_class>> sub(static_cast<size_t>(k));
  for (int r = 0; r < k; ++r) {
    sub[static_cast<size_t>(r)].reserve(static_cast<size_t>(k));
    for (int c : cols.elements())
      sub[static_cast<size_t>(r)].push_back(rows[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]);
  }
  return bareiss_determinant(std::move(sub));
}

std::vector<KSubset> matroid_of_matrix(const RationalMatrix& A) {
  const int k = A.rows(), n = A.cols();
  const auto rows = scaled_integer_rows(A);
  if (integer_rank(rows) < k)
    throw invariant_error("matrix rank below row count");
  std::vector<KSubset> out;
  for (uint64_t m : ksubset_masks(n, k)) {
    const KSubset J = KSubset::from_mask(n, m);
    if (scaled_minor(rows, J) != 0) out.push_back(J);
  }
  return out;
}

bool is_totally_nonnegative(const RationalMatrix& A) {
  const auto rows = scaled_integer_rows(A);
  for (uint64_t cmask : ksubset_masks(A.cols(), A.rows()))
    if (scaled_minor(rows, KSubset::from_mask(A.cols(), cmask)) < 0) return false;
  return true;
}

bool verify_basis_exchange(const std::vector<KSubset>& M) {
  if (M.empty()) return true;
  const int k = M.front().k();
  std::set<uint64_t> masks;
  for (const auto& I : M) {
    if (I.k() != k) return false;
    masks.insert(I.mask());
  }
  for (const auto& I : M) {
    for (const auto& J : M) {
      for (int a : I.elements()) {
        if (J.contains(a)) continue;
        bool found = false;
        for (int b : J.elements()) {
          if (I.contains(b)) continue;
          const uint64_t swapped = (I.mask() & ~(uint64_t{1} << (a - 1))) |
                                   uint64_t{1} << (b - 1);
          if (masks.contains(swapped)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace poslab

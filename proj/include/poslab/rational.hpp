#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "poslab/perm.hpp"

namespace poslab {

// Accepts "p", "-p", or "p/q" (q > 0 after normalization).
mpq_class parse_rational(const std::string& text);
std::string to_string(const mpq_class& q);

// Dense k x n matrix over the rationals, 0-based indexing.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  explicit RationalMatrix(std::vector<std::vector<mpq_class>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const mpq_class& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpq_class> data_;
};

// Fraction-free Bareiss elimination.  Arguments are consumed.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);
int integer_rank(std::vector<std::vector<mpz_class>> m);

// Each row scaled by the (positive) lcm of its denominators.  Minors keep
// their signs under positive row scalings, so basis detection and TNN
// tests can run over the integers.
std::vector<std::vector<mpz_class>> scaled_integer_rows(const RationalMatrix& A);

int rank(const RationalMatrix& A);

// Maximal minor on the given columns, up to the positive row scaling.
mpz_class scaled_minor(const std::vector<std::vector<mpz_class>>& rows,
                       const KSubset& cols);

// { J : the k x k minor on columns J is nonzero }.  Throws if rank < k.
std::vector<KSubset> matroid_of_matrix(const RationalMatrix& A);

// Every maximal (k x k) minor is >= 0.
bool is_totally_nonnegative(const RationalMatrix& A);

// For all I, J in M and a in I \ J there is b in J \ I with I - a + b in M.
bool verify_basis_exchange(const std::vector<KSubset>& M);

}  // namespace poslab

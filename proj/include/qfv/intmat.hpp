#pragma once

#include <vector>

#include "qfv/bigint.hpp"

namespace qfv {

// Dense integer matrix with exact entries.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<BigInt> mul_vec(const std::vector<BigInt>& v) const;
  bool operator==(const IntMat&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

// In-place row Hermite normal form (row-style, unimodular row operations):
// pivots positive, entries above each pivot reduced into [0, pivot).
// Returns the rank. Zero rows end up at the bottom.
int hermite_normal_form(IntMat& m);

// Basis of the integer kernel lattice {u : M u = 0}, canonicalized by
// Hermite reduction of the basis matrix. Each element has length M.cols().
std::vector<std::vector<BigInt>> integer_kernel_basis(const IntMat& m);

// Whether v lies in the lattice spanned by the rows of the Hermite-form
// matrix `hnf_rows` (rank rows, no zero rows).
bool in_row_lattice(const std::vector<std::vector<BigInt>>& hnf_rows,
                    std::vector<BigInt> v);

}  // namespace qfv

#include "qfv/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace qfv {

std::vector<BigInt> IntMat::mul_vec(const std::vector<BigInt>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat: size mismatch");
  std::vector<BigInt> out(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    BigInt acc;
    for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[static_cast<size_t>(c)];
    out[static_cast<size_t>(r)] = std::move(acc);
  }
  return out;
}

namespace {

void row_axpy(IntMat& m, int dst, int src, const BigInt& factor) {
  if (factor.is_zero()) return;
  for (int c = 0; c < m.cols(); ++c) m.at(dst, c) -= factor * m.at(src, c);
}

void swap_rows(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void negate_row(IntMat& m, int r) {
  for (int c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

}  // namespace

int hermite_normal_form(IntMat& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    // Euclidean elimination below the pivot row.
    while (true) {
      int piv = -1;
      for (int r = rank; r < m.rows(); ++r)
        if (!m.at(r, col).is_zero() &&
            (piv < 0 || m.at(r, col).abs() < m.at(piv, col).abs()))
          piv = r;
      if (piv < 0) break;
      swap_rows(m, rank, piv);
      bool clean = true;
      for (int r = rank + 1; r < m.rows(); ++r) {
        if (m.at(r, col).is_zero()) continue;
        BigInt q = BigInt::floordiv(m.at(r, col), m.at(rank, col));
        row_axpy(m, r, rank, q);
        if (!m.at(r, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (m.at(rank, col).is_zero()) continue;
    if (m.at(rank, col).sign() < 0) negate_row(m, rank);
    // reduce entries above the pivot into [0, pivot)
    for (int r = 0; r < rank; ++r) {
      BigInt q = BigInt::floordiv(m.at(r, col), m.at(rank, col));
      row_axpy(m, r, rank, q);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<BigInt>> integer_kernel_basis(const IntMat& m) {
  // Row-reduce [M^T | I]; rows of the identity block facing zero rows of the
  // reduced M^T block span the kernel of M.
  const int n = m.cols(), r = m.rows();
  IntMat aug(n, r + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) aug.at(i, j) = m.at(j, i);
    aug.at(i, r + i) = 1;
  }

  int row = 0;
  for (int col = 0; col < r && row < n; ++col) {
    while (true) {
      int piv = -1;
      for (int i = row; i < n; ++i)
        if (!aug.at(i, col).is_zero() &&
            (piv < 0 || aug.at(i, col).abs() < aug.at(piv, col).abs()))
          piv = i;
      if (piv < 0) break;
      swap_rows(aug, row, piv);
      bool clean = true;
      for (int i = row + 1; i < n; ++i) {
        if (aug.at(i, col).is_zero()) continue;
        BigInt q = BigInt::floordiv(aug.at(i, col), aug.at(row, col));
        row_axpy(aug, i, row, q);
        if (!aug.at(i, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!aug.at(row, col).is_zero()) ++row;
  }

  IntMat kern(n - row, n);
  for (int i = row; i < n; ++i)
    for (int c = 0; c < n; ++c) kern.at(i - row, c) = aug.at(i, r + c);
  int krank = hermite_normal_form(kern);
  std::vector<std::vector<BigInt>> basis;
  basis.reserve(static_cast<size_t>(krank));
  for (int i = 0; i < krank; ++i) {
    std::vector<BigInt> v(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) v[static_cast<size_t>(c)] = kern.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_lattice(const std::vector<std::vector<BigInt>>& hnf_rows, std::vector<BigInt> v) {
  for (const auto& row : hnf_rows) {
    size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero()) ++lead;
    if (lead == row.size()) continue;
    if (v[lead].is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(v[lead], row[lead], q, r);
    if (!r.is_zero()) return false;
    for (size_t c = 0; c < v.size(); ++c) v[c] -= q * row[c];
  }
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace qfv

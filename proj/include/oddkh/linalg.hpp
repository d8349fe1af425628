#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oddkh/simd/f2_kernels.hpp"

namespace oddkh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer matrix stored by columns; each column sorted by row, no zeros.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> col;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), col(static_cast<std::size_t>(c)) {}

  /// Adds v to entry (r, c).
  void add(int r, int c, std::int64_t v);
  std::int64_t at(int r, int c) const;
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }
  void canonicalize();

  SparseMatrix transpose() const;
  SparseMatrix scaled(std::int64_t s) const;
  SparseMatrix mod2() const;
  std::vector<std::vector<std::int64_t>> dense() const;
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& m);
  static SparseMatrix identity(int n);

  bool operator==(const SparseMatrix& o) const {
    return rows == o.rows && cols == o.cols && col == o.col;
  }
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);

/// Nonzero diagonal of the Smith normal form.
struct SmithResult {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors greater than one, ascending
};

SmithResult smith_normal_form(const SparseMatrix& m);
std::size_t rank_q(const SparseMatrix& m);
std::size_t rank_f2(const SparseMatrix& m);

/// Row-major bit matrix over F2.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }
  bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
  void set(int r, int c, bool v);
  void flip(int r, int c) { row(r)[c >> 6] ^= simd::Word{1} << (c & 63); }
  simd::Word* row(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }
  const simd::Word* row(int r) const {
    return data_.data() + static_cast<std::size_t>(r) * words_;
  }

  static BitMatrix from_sparse(const SparseMatrix& m);
  /// Rank by row elimination with the given kernels (the active set by default).
  std::size_t rank(const simd::F2Kernels& k = simd::active_kernels()) const;
  /// this * other over F2; uses the transpose of `other` for AND-parity rows.
  BitMatrix multiply(const BitMatrix& other,
                     const simd::F2Kernels& k = simd::active_kernels()) const;
  BitMatrix transpose() const;
  bool is_zero(const simd::F2Kernels& k = simd::active_kernels()) const;

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::size_t words_ = 0;
  std::vector<simd::Word> data_;
};

}  // namespace oddkh

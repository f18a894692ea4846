#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "distlat/integer.hpp"

namespace distlat {

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Each inner list is one row.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);
  static IntMatrix column_vector(const IntVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  void set_column(std::size_t c, const IntVector& v);
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  IntMatrix columns_range(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;
  // Places `block` with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const IntMatrix& block);
  void add_block(std::size_t r, std::size_t c, const IntMatrix& block, long sign = 1);

  bool is_zero() const;

  // Elementary column operations; used by the normal form routines.
  void swap_columns(std::size_t a, std::size_t b);
  void negate_column(std::size_t c);
  // col[dst] += factor * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // (col a, col b) <- (p*a + q*b, r*a + s*b)
  void combine_columns(std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                       const Integer& r, const Integer& s);
  void swap_rows(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void combine_rows(std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix scale(const IntMatrix& a, const Integer& factor);

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(std::span<const IntMatrix> blocks);
// Kronecker product a (x) b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, const Integer& factor);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace distlat

#pragma once

#include <optional>
#include <vector>

#include "distlat/matrix.hpp"

namespace distlat {

/// A sublattice of Z^dim held in canonical column Hermite form. Two lattices
/// are equal iff their bases are identical.
class IntLattice {
 public:
  IntLattice() = default;
  explicit IntLattice(std::size_t dim);  // zero lattice

  static IntLattice span(const IntMatrix& generators);
  static IntLattice span(std::size_t dim, std::span<const IntVector> generators);
  static IntLattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }
  bool full_rank() const { return rank() == dim_; }
  // [Z^dim : L] when full rank.
  std::optional<Integer> index() const;

  bool contains(const IntVector& v) const;
  bool contains(const IntLattice& other) const;
  // The unique c with basis * c == v.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  // Canonical representative of v + L: coordinate at pivot row k lands in
  // [0, pivot_k).
  IntVector reduce(const IntVector& v) const;

  IntLattice operator+(const IntLattice& other) const;
  IntLattice intersect(const IntLattice& other) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }
  // Lexicographic order on the canonical form; used for table lookups.
  friend bool operator<(const IntLattice& a, const IntLattice& b);

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

}  // namespace distlat

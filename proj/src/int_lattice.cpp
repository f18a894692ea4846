#include "distlat/int_lattice.hpp"

#include <stdexcept>

#include "distlat/normal_form.hpp"

namespace distlat {

IntLattice::IntLattice(std::size_t dim) : dim_(dim), basis_(dim, 0) {}

IntLattice IntLattice::span(const IntMatrix& generators) {
  HermiteForm h = hnf(generators, false);
  IntLattice l;
  l.dim_ = generators.rows();
  l.basis_ = h.basis.columns_range(0, h.rank);
  l.pivot_rows_ = std::move(h.pivot_rows);
  return l;
}

IntLattice IntLattice::span(std::size_t dim, std::span<const IntVector> generators) {
  return span(IntMatrix::from_columns(dim, generators));
}

IntLattice IntLattice::full(std::size_t dim) { return span(IntMatrix::identity(dim)); }

std::optional<Integer> IntLattice::index() const {
  if (!full_rank()) return std::nullopt;
  Integer idx = 1;
  for (std::size_t k = 0; k < rank(); ++k) idx *= basis_(pivot_rows_[k], k);
  return idx;
}

std::optional<IntVector> IntLattice::coordinates(const IntVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("IntLattice: dimension mismatch");
  IntVector residual = v;
  IntVector c = zero_vector(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t r = pivot_rows_[k];
    if (residual[r] == 0) continue;
    const Integer& p = basis_(r, k);
    if (!divides(p, residual[r])) return std::nullopt;
    Integer q = residual[r] / p;
    for (std::size_t i = r; i < dim_; ++i)
      if (basis_(i, k) != 0) residual[i] -= q * basis_(i, k);
    c[k] = std::move(q);
  }
  if (!is_zero(residual)) return std::nullopt;
  return c;
}

bool IntLattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool IntLattice::contains(const IntLattice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("IntLattice: dimension mismatch");
  for (std::size_t k = 0; k < other.rank(); ++k)
    if (!contains(other.basis_.column(k))) return false;
  return true;
}

IntVector IntLattice::reduce(const IntVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("IntLattice: dimension mismatch");
  IntVector out = v;
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t r = pivot_rows_[k];
    Integer q = floor_div(out[r], basis_(r, k));
    if (q == 0) continue;
    for (std::size_t i = r; i < dim_; ++i)
      if (basis_(i, k) != 0) out[i] -= q * basis_(i, k);
  }
  return out;
}

IntLattice IntLattice::operator+(const IntLattice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("IntLattice: dimension mismatch");
  return span(hconcat(basis_, other.basis_));
}

IntLattice IntLattice::intersect(const IntLattice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("IntLattice: dimension mismatch");
  if (rank() == 0 || other.rank() == 0) return IntLattice(dim_);
  // x = B1 c1 = B2 c2  <=>  (c1, c2) in ker [B1 | -B2]
  IntMatrix stacked = hconcat(basis_, scale(other.basis_, Integer(-1)));
  IntMatrix kernel = kernel_basis(stacked);
  IntMatrix c1 = kernel.rows_range(0, rank());
  return span(basis_ * c1);
}

bool operator<(const IntLattice& a, const IntLattice& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (std::size_t r = 0; r < a.dim_; ++r)
    for (std::size_t c = 0; c < a.rank(); ++c) {
      int cmp = ::cmp(a.basis_(r, c), b.basis_(r, c));
      if (cmp != 0) return cmp < 0;
    }
  return false;
}

}  // namespace distlat

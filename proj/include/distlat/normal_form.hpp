#pragma once

#include <optional>
#include <vector>

#include "distlat/matrix.hpp"

namespace distlat {

/// Column Hermite normal form H = M * U.
///
/// H is a lower-triangular staircase: pivot column k has its first nonzero
/// entry at row pivot_rows[k], that entry is positive, and every entry to the
/// left of it in the same row lies in [0, pivot). Columns rank.. are zero.
/// The canonical form depends only on the column span of M.
struct HermiteForm {
  IntMatrix basis;      // rows(M) x cols(M), zero columns trailing
  IntMatrix transform;  // cols(M) x cols(M), unimodular; empty unless requested
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteForm hnf(const IntMatrix& m, bool with_transform = true);

/// Smith normal form S = U * M * V, S diagonal with s_1 | s_2 | ... and all
/// diagonal entries non-negative (zeros last).
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;          // U
  IntMatrix right;         // V
  IntMatrix left_inverse;  // U^{-1}
  std::size_t rank = 0;

  IntVector invariants() const;  // diagonal entries, length min(rows, cols)
};

SmithForm snf(const IntMatrix& m);

// Basis (as columns) of the lattice {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Some x with m x = y, chosen by back substitution against the Hermite form.
std::optional<IntVector> solve_linear(const IntMatrix& m, const IntVector& y);
// Same, reusing a form computed with its transform.
std::optional<IntVector> solve_linear(const HermiteForm& h, const IntVector& y);

}  // namespace distlat

#include "distlat/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace distlat {

namespace {

// Coefficients of values in the used pivot columns of a Hermite basis.
std::optional<IntVector> back_substitute(const HermiteForm& h, const IntVector& y) {
  IntVector residual = y;
  IntVector coeffs = zero_vector(h.rank);
  for (std::size_t k = 0; k < h.rank; ++k) {
    const std::size_t r = h.pivot_rows[k];
    const Integer& p = h.basis(r, k);
    if (residual[r] == 0) continue;
    if (!divides(p, residual[r])) return std::nullopt;
    Integer c = residual[r] / p;
    for (std::size_t i = r; i < residual.size(); ++i)
      if (h.basis(i, k) != 0) residual[i] -= c * h.basis(i, k);
    coeffs[k] = std::move(c);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeffs;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m, bool with_transform) {
  HermiteForm out;
  out.basis = m;
  if (with_transform) out.transform = IntMatrix::identity(m.cols());
  IntMatrix& h = out.basis;
  IntMatrix& u = out.transform;
  const std::size_t cols = m.cols();

  std::size_t k = 0;
  for (std::size_t r = 0; r < m.rows() && k < cols; ++r) {
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (h(r, j) == 0) continue;
      if (h(r, k) == 0) {
        h.swap_columns(k, j);
        if (with_transform) u.swap_columns(k, j);
        continue;
      }
      const Integer a = h(r, k);
      const Integer b = h(r, j);
      const ExtendedGcd e = extended_gcd(a, b);
      const Integer ag = a / e.gcd;
      const Integer bg = b / e.gcd;
      // (col_k, col_j) <- (s col_k + t col_j, -b/g col_k + a/g col_j)
      h.combine_columns(k, j, e.s, e.t, -bg, ag);
      if (with_transform) u.combine_columns(k, j, e.s, e.t, -bg, ag);
    }
    if (h(r, k) == 0) continue;
    if (h(r, k) < 0) {
      h.negate_column(k);
      if (with_transform) u.negate_column(k);
    }
    const Integer p = h(r, k);
    for (std::size_t j = 0; j < k; ++j) {
      Integer q = floor_div(h(r, j), p);
      if (q == 0) continue;
      h.add_column_multiple(j, k, -q);
      if (with_transform) u.add_column_multiple(j, k, -q);
    }
    out.pivot_rows.push_back(r);
    ++k;
  }
  out.rank = k;
  return out;
}

IntVector SmithForm::invariants() const {
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = diagonal(i, i);
  return d;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out;
  out.diagonal = m;
  out.left = IntMatrix::identity(m.rows());
  out.left_inverse = IntMatrix::identity(m.rows());
  out.right = IntMatrix::identity(m.cols());
  IntMatrix& s = out.diagonal;
  IntMatrix& u = out.left;
  IntMatrix& ui = out.left_inverse;
  IntMatrix& v = out.right;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  auto row_swap = [&](std::size_t a, std::size_t b) {
    s.swap_rows(a, b);
    u.swap_rows(a, b);
    ui.swap_columns(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    s.swap_columns(a, b);
    v.swap_columns(a, b);
  };
  // Row pair (t, i) <- T (t, i) with T = [[p, q], [r, w]] unimodular.
  auto row_combine = [&](std::size_t t, std::size_t i, const Integer& p, const Integer& q,
                         const Integer& r, const Integer& w) {
    s.combine_rows(t, i, p, q, r, w);
    u.combine_rows(t, i, p, q, r, w);
    // U^{-1} <- U^{-1} T^{-1}, T^{-1} = [[w, -q], [-r, p]]
    ui.combine_columns(t, i, w, -r, -q, p);
  };

  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  while (t < limit) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s(i, j) == 0) continue;
        if (pi == rows || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        const Integer a = s(t, t);
        const Integer b = s(i, t);
        const ExtendedGcd e = extended_gcd(a, b);
        row_combine(t, i, e.s, e.t, -(b / e.gcd), a / e.gcd);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        const Integer a = s(t, t);
        const Integer b = s(t, j);
        const ExtendedGcd e = extended_gcd(a, b);
        const Integer ag = a / e.gcd;
        const Integer bg = b / e.gcd;
        s.combine_columns(t, j, e.s, e.t, -bg, ag);
        v.combine_columns(t, j, e.s, e.t, -bg, ag);
      }
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        if (s(i, t) != 0) clean = false;
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(s(t, t), s(i, j))) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      row_combine(t, bad_row, 1, 1, 0, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
      ui.negate_column(t);
    }
    ++t;
  }
  out.rank = t;
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  HermiteForm h = hnf(m, true);
  return h.transform.columns_range(h.rank, m.cols() - h.rank);
}

std::optional<IntVector> solve_linear(const HermiteForm& h, const IntVector& y) {
  if (y.size() != h.basis.rows()) throw std::invalid_argument("solve_linear: length mismatch");
  if (h.transform.rows() != h.basis.cols())
    throw std::invalid_argument("solve_linear: Hermite form lacks its transform");
  auto coeffs = back_substitute(h, y);
  if (!coeffs) return std::nullopt;
  const std::size_t n = h.basis.cols();
  IntVector x = zero_vector(n);
  for (std::size_t k = 0; k < h.rank; ++k) {
    if ((*coeffs)[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (h.transform(i, k) != 0) x[i] += h.transform(i, k) * (*coeffs)[k];
  }
  return x;
}

std::optional<IntVector> solve_linear(const IntMatrix& m, const IntVector& y) {
  if (y.size() != m.rows()) throw std::invalid_argument("solve_linear: length mismatch");
  return solve_linear(hnf(m, true), y);
}

}  // namespace distlat

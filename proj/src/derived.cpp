#include "distlat/derived.hpp"

#include "distlat/complexes.hpp"

namespace distlat {

namespace {

GroupPtr diagonal_group(const IntVector& orders) {
  std::vector<IntVector> rel;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (orders[k] == 0) continue;
    IntVector v = zero_vector(orders.size());
    v[k] = orders[k];
    rel.push_back(std::move(v));
  }
  return AbelianGroup::presented(orders.size(), IntMatrix::from_columns(orders.size(), rel));
}

IntMatrix unit_matrix(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c,
                      const Integer& v) {
  IntMatrix m(rows, cols);
  m(r, c) = v;
  return m;
}

}  // namespace

HomGroup hom_group(const GroupPtr& a, const GroupPtr& b) {
  HomGroup h;
  h.source = a;
  h.target = b;
  const CyclicDecomposition& ca = a->cyclic();
  const CyclicDecomposition& cb = b->cyclic();
  for (std::size_t i = 0; i < ca.moduli.size(); ++i) {
    const Integer& s = ca.moduli[i];
    if (s == 1) continue;
    for (std::size_t j = 0; j < cb.moduli.size(); ++j) {
      const Integer& t = cb.moduli[j];
      if (t == 1) continue;
      Integer scale, order;
      if (s == 0) {
        scale = 1;
        order = t;
      } else if (t == 0) {
        continue;
      } else {
        order = gcd(s, t);
        if (order == 1) continue;
        scale = t / order;
      }
      IntMatrix e = unit_matrix(cb.moduli.size(), ca.moduli.size(), j, i, scale);
      h.basis_homs.emplace_back(a, b, cb.from_cyclic * e * ca.to_cyclic);
      h.orders.push_back(order);
      h.scales.push_back(scale);
      h.factor_pairs.emplace_back(i, j);
    }
  }
  h.group = diagonal_group(h.orders);
  h.decomposition = h.group->decomposition();
  return h;
}

IntVector HomGroup::coordinates(const Homomorphism& phi) const {
  require_same_parent(source, phi.source(), "hom coordinates");
  require_same_parent(target, phi.target(), "hom coordinates");
  const CyclicDecomposition& ca = source->cyclic();
  const CyclicDecomposition& cb = target->cyclic();
  IntMatrix e = cb.to_cyclic * phi.matrix() * ca.from_cyclic;
  IntVector c(basis_homs.size());
  for (std::size_t k = 0; k < basis_homs.size(); ++k) {
    const auto [i, j] = factor_pairs[k];
    Integer v = e(j, i);
    const Integer& t = cb.moduli[j];
    if (t != 0) v = floor_mod(v, t);
    if (!divides(scales[k], v)) throw InvariantViolation("hom coordinates: image not in range");
    v /= scales[k];
    if (orders[k] != 0) v = floor_mod(v, orders[k]);
    c[k] = std::move(v);
  }
  return c;
}

Homomorphism HomGroup::evaluate(const IntVector& c) const {
  if (c.size() != basis_homs.size()) throw std::invalid_argument("hom evaluate: length mismatch");
  IntMatrix m(target->generators(), source->generators());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) m = m + scale(basis_homs[k].matrix(), c[k]);
  return Homomorphism(source, target, std::move(m));
}

Homomorphism precomposition(const HomGroup& from, const HomGroup& to, const Homomorphism& f) {
  require_same_parent(to.source, f.source(), "precomposition");
  require_same_parent(from.source, f.target(), "precomposition");
  require_same_parent(from.target, to.target, "precomposition");
  IntMatrix m(to.basis_homs.size(), from.basis_homs.size());
  for (std::size_t k = 0; k < from.basis_homs.size(); ++k)
    m.set_column(k, to.coordinates(Homomorphism(to.source, to.target,
                                                from.basis_homs[k].matrix() * f.matrix())));
  return Homomorphism(from.group, to.group, std::move(m));
}

Homomorphism postcomposition(const HomGroup& from, const HomGroup& to, const Homomorphism& g) {
  require_same_parent(from.target, g.source(), "postcomposition");
  require_same_parent(to.target, g.target(), "postcomposition");
  require_same_parent(from.source, to.source, "postcomposition");
  IntMatrix m(to.basis_homs.size(), from.basis_homs.size());
  for (std::size_t k = 0; k < from.basis_homs.size(); ++k)
    m.set_column(k, to.coordinates(Homomorphism(to.source, to.target,
                                                g.matrix() * from.basis_homs[k].matrix())));
  return Homomorphism(from.group, to.group, std::move(m));
}

TensorGroup tensor_group(const GroupPtr& a, const GroupPtr& b) {
  TensorGroup t;
  t.left = a;
  t.right = b;
  const IntVector& s = a->cyclic().moduli;
  const IntVector& u = b->cyclic().moduli;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      Integer order = gcd(s[i], u[j]);
      if (order == 1) continue;
      t.factor_pairs.emplace_back(i, j);
      t.orders.push_back(order);
    }
  t.group = diagonal_group(t.orders);
  t.decomposition = t.group->decomposition();
  return t;
}

GroupElement TensorGroup::pure_tensor(const GroupElement& x, const GroupElement& y) const {
  require_same_parent(left, x.parent(), "pure_tensor");
  require_same_parent(right, y.parent(), "pure_tensor");
  const IntVector cx = left->cyclic().to_cyclic * x.coords();
  const IntVector cy = right->cyclic().to_cyclic * y.coords();
  IntVector c(factor_pairs.size());
  for (std::size_t k = 0; k < factor_pairs.size(); ++k) {
    const auto [i, j] = factor_pairs[k];
    c[k] = cx[i] * cy[j];
  }
  return GroupElement(group, std::move(c));
}

Homomorphism tensor_map(const TensorGroup& from, const TensorGroup& to, const Homomorphism& f,
                        const Homomorphism& g) {
  require_same_parent(from.left, f.source(), "tensor_map");
  require_same_parent(from.right, g.source(), "tensor_map");
  require_same_parent(to.left, f.target(), "tensor_map");
  require_same_parent(to.right, g.target(), "tensor_map");
  const IntMatrix& fa = from.left->cyclic().from_cyclic;
  const IntMatrix& fb = from.right->cyclic().from_cyclic;
  IntMatrix m(to.group->generators(), from.group->generators());
  for (std::size_t k = 0; k < from.factor_pairs.size(); ++k) {
    const auto [i, j] = from.factor_pairs[k];
    GroupElement x(to.left, f.matrix() * fa.column(i));
    GroupElement y(to.right, g.matrix() * fb.column(j));
    m.set_column(k, to.pure_tensor(x, y).coords());
  }
  return Homomorphism(from.group, to.group, std::move(m));
}

namespace {

ChainComplex free_chain_complex(std::span<const Subgroup> family) {
  if (family.empty()) throw EmptyFamily("derived: empty family");
  if (!family[0].parent()->is_free())
    throw NonFreeAmbient("ext/tor need a free ambient group");
  return chain_complex(family);
}

std::map<int, DecomposedGroup> pad(std::map<int, DecomposedGroup> h, std::size_t through) {
  std::map<int, DecomposedGroup> out;
  for (std::size_t q = 0; q <= through; ++q) {
    auto it = h.find(static_cast<int>(q));
    out.emplace(static_cast<int>(q), it == h.end() ? DecomposedGroup() : std::move(it->second));
  }
  return out;
}

}  // namespace

std::map<int, DecomposedGroup> ext(std::span<const Subgroup> family, const GroupPtr& m,
                                   std::size_t through_degree) {
  ChainComplex c = free_chain_complex(family);
  const int top = static_cast<int>(family.size()) - 1;
  std::vector<HomGroup> homs;
  std::map<int, ComplexTerm> terms;
  for (int q = 0; q <= top; ++q) {
    homs.push_back(hom_group(c.term(q)->group, m));
    terms.emplace(q, ComplexTerm{q, homs.back().group, {}});
  }
  std::map<int, Homomorphism> diffs;
  for (int q = 0; q < top; ++q)
    diffs.emplace(q, precomposition(homs[q], homs[q + 1], *c.outgoing(q + 1)));
  ChainComplex dual(Direction::cohomological, std::move(terms), std::move(diffs));
  return pad(homology(dual).by_degree, through_degree);
}

std::map<int, DecomposedGroup> tor(std::span<const Subgroup> family, const GroupPtr& m,
                                   std::size_t through_degree) {
  ChainComplex c = free_chain_complex(family);
  const int top = static_cast<int>(family.size()) - 1;
  std::vector<TensorGroup> tensors;
  std::map<int, ComplexTerm> terms;
  for (int q = 0; q <= top; ++q) {
    tensors.push_back(tensor_group(c.term(q)->group, m));
    terms.emplace(q, ComplexTerm{q, tensors.back().group, {}});
  }
  const Homomorphism id = Homomorphism::identity(m);
  std::map<int, Homomorphism> diffs;
  for (int q = 1; q <= top; ++q)
    diffs.emplace(q, tensor_map(tensors[q], tensors[q - 1], *c.outgoing(q), id));
  ChainComplex tensored(Direction::homological, std::move(terms), std::move(diffs));
  return pad(homology(tensored).by_degree, through_degree);
}

}  // namespace distlat

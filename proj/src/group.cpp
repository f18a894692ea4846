#include "distlat/group.hpp"

#include <algorithm>
#include <sstream>

#include "distlat/normal_form.hpp"

namespace distlat {

// ---------------------------------------------------------------------------
// DecomposedGroup

DecomposedGroup::DecomposedGroup(IntVector factors) : factors_(std::move(factors)) {
  bool seen_free = false;
  const Integer* previous = nullptr;
  for (const auto& f : factors_) {
    if (f < 0 || f == 1) throw std::invalid_argument("invariant factor must be 0 or >= 2");
    if (f == 0) {
      seen_free = true;
      continue;
    }
    if (seen_free) throw std::invalid_argument("free factors must be listed last");
    if (previous && !divides(*previous, f))
      throw std::invalid_argument("invariant factors must form a divisibility chain");
    previous = &f;
  }
}

DecomposedGroup DecomposedGroup::from_cyclic_orders(const IntVector& orders) {
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = abs(orders[i]);
  SmithForm s = snf(d);
  IntVector out;
  for (const auto& x : s.invariants())
    if (x != 1) out.push_back(x);
  return DecomposedGroup(std::move(out));
}

std::size_t DecomposedGroup::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Integer(0)));
}

IntVector DecomposedGroup::torsion() const {
  IntVector t;
  for (const auto& f : factors_)
    if (f != 0) t.push_back(f);
  return t;
}

std::optional<Integer> DecomposedGroup::order() const {
  Integer o = 1;
  for (const auto& f : factors_) {
    if (f == 0) return std::nullopt;
    o *= f;
  }
  return o;
}

std::string DecomposedGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " + ";
    if (factors_[i] == 0)
      os << "Z";
    else
      os << "Z/" << factors_[i].get_str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup(std::size_t generators, IntLattice relations)
    : generators_(generators), relations_(std::move(relations)) {
  SmithForm s = snf(relations_.basis());
  cyclic_.to_cyclic = s.left;
  cyclic_.from_cyclic = s.left_inverse;
  cyclic_.moduli = zero_vector(generators_);
  IntVector factors;
  for (std::size_t i = 0; i < generators_; ++i) {
    if (i < s.rank) cyclic_.moduli[i] = s.diagonal(i, i);
    if (cyclic_.moduli[i] != 1) factors.push_back(cyclic_.moduli[i]);
  }
  decomposition_ = DecomposedGroup(std::move(factors));
}

GroupPtr AbelianGroup::ambient(std::size_t free_rank, IntVector torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw std::invalid_argument("torsion factors must be >= 2");
    if (i > 0 && !divides(torsion[i - 1], torsion[i]))
      throw std::invalid_argument("torsion factors must satisfy d_i | d_{i+1}");
  }
  const std::size_t n = free_rank + torsion.size();
  IntMatrix rel(n, torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) rel(free_rank + i, i) = torsion[i];
  auto g = std::shared_ptr<AbelianGroup>(new AbelianGroup(n, IntLattice::span(rel)));
  g->ambient_form_ = true;
  return g;
}

GroupPtr AbelianGroup::presented(std::size_t generators, const IntMatrix& relations) {
  if (relations.cols() > 0 && relations.rows() != generators)
    throw std::invalid_argument("relation matrix row count must equal generator count");
  IntLattice lattice =
      relations.cols() == 0 ? IntLattice(generators) : IntLattice::span(relations);
  return std::shared_ptr<AbelianGroup>(new AbelianGroup(generators, std::move(lattice)));
}

GroupPtr AbelianGroup::from_decomposition(const DecomposedGroup& d) {
  const IntVector t = d.torsion();
  return ambient(d.free_rank(), t);
}

bool AbelianGroup::same_as(const AbelianGroup& other) const {
  return this == &other ||
         (generators_ == other.generators_ && relations_ == other.relations_);
}

void require_same_parent(const GroupPtr& a, const GroupPtr& b, const char* where) {
  if (!a || !b || !a->same_as(*b)) throw ParentMismatch(std::string(where) + ": parent mismatch");
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(GroupPtr parent, IntVector coords) : parent_(std::move(parent)) {
  if (coords.size() != parent_->generators())
    throw std::invalid_argument("element length does not match generator count");
  coords_ = parent_->reduce(coords);
}

GroupElement GroupElement::zero(GroupPtr parent) {
  const std::size_t n = parent->generators();
  return GroupElement(std::move(parent), zero_vector(n));
}

GroupElement GroupElement::basis_vector(GroupPtr parent, std::size_t i) {
  IntVector v = zero_vector(parent->generators());
  v.at(i) = 1;
  return GroupElement(std::move(parent), std::move(v));
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  require_same_parent(parent_, o.parent_, "element +");
  return GroupElement(parent_, add(coords_, o.coords_));
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
  require_same_parent(parent_, o.parent_, "element -");
  return GroupElement(parent_, subtract(coords_, o.coords_));
}

GroupElement GroupElement::operator-() const {
  return GroupElement(parent_, scale(coords_, Integer(-1)));
}

GroupElement GroupElement::operator*(const Integer& k) const {
  return GroupElement(parent_, scale(coords_, k));
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::from_vectors(const GroupPtr& parent, std::span<const IntVector> gens) {
  const std::size_t n = parent->generators();
  IntMatrix m = IntMatrix::from_columns(n, gens);
  return Subgroup(parent, IntLattice::span(hconcat(m, parent->relations().basis())));
}

Subgroup Subgroup::from_generators(const GroupPtr& parent, std::span<const GroupElement> gens) {
  std::vector<IntVector> cols;
  cols.reserve(gens.size());
  for (const auto& g : gens) {
    require_same_parent(parent, g.parent(), "subgroup_from_generators");
    cols.push_back(g.coords());
  }
  return from_vectors(parent, cols);
}

Subgroup Subgroup::from_lift(const GroupPtr& parent, const IntLattice& lift) {
  return Subgroup(parent, lift + parent->relations());
}

Subgroup Subgroup::zero(const GroupPtr& parent) { return Subgroup(parent, parent->relations()); }

Subgroup Subgroup::whole(const GroupPtr& parent) {
  return Subgroup(parent, IntLattice::full(parent->generators()));
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> out;
  for (std::size_t k = 0; k < lift_.rank(); ++k) {
    GroupElement g(parent_, lift_.basis().column(k));
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

bool Subgroup::contains(const GroupElement& x) const {
  require_same_parent(parent_, x.parent(), "contains");
  return lift_.contains(x.coords());
}

std::optional<IntVector> Subgroup::coefficients(const GroupElement& x) const {
  require_same_parent(parent_, x.parent(), "contains");
  return lift_.coordinates(x.coords());
}

bool Subgroup::contains(const Subgroup& other) const {
  require_same_parent(parent_, other.parent_, "contains");
  return lift_.contains(other.lift_);
}

Subgroup Subgroup::operator+(const Subgroup& other) const {
  require_same_parent(parent_, other.parent_, "sub_sum");
  return Subgroup(parent_, lift_ + other.lift_);
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  require_same_parent(parent_, other.parent_, "sub_intersect");
  return Subgroup(parent_, lift_.intersect(other.lift_));
}

std::optional<Integer> Subgroup::order() const {
  auto whole = parent_->relations().index();
  auto mine = lift_.index();
  if (!whole || !mine) return std::nullopt;
  return Integer(*whole / *mine);
}

GroupElement Subgroup::reduce(const GroupElement& x) const {
  require_same_parent(parent_, x.parent(), "reduce");
  return GroupElement(parent_, lift_.reduce(x.coords()));
}

Subgroup subgroup_from_generators(const GroupPtr& parent, std::span<const GroupElement> gens) {
  return Subgroup::from_generators(parent, gens);
}

Subgroup sub_sum(const Subgroup& a, const Subgroup& b) { return a + b; }
Subgroup sub_intersect(const Subgroup& a, const Subgroup& b) { return a.intersect(b); }

Subgroup sum_of(std::span<const Subgroup> family) {
  if (family.empty()) throw EmptyFamily("sum_of: empty family");
  Subgroup s = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) s = s + family[i];
  return s;
}

Subgroup intersection_of(std::span<const Subgroup> family) {
  if (family.empty()) throw EmptyFamily("intersection_of: empty family");
  Subgroup s = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) s = s.intersect(family[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Homomorphism

Homomorphism::Homomorphism(GroupPtr source, GroupPtr target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_->generators() || matrix_.cols() != source_->generators())
    throw std::invalid_argument("homomorphism matrix shape does not match groups");
  const IntMatrix& rel = source_->relations().basis();
  for (std::size_t k = 0; k < rel.cols(); ++k) {
    if (!target_->is_relation(matrix_ * rel.column(k)))
      throw IllDefinedHomomorphism("homomorphism does not respect source relations");
  }
}

Homomorphism Homomorphism::zero(GroupPtr source, GroupPtr target) {
  IntMatrix m(target->generators(), source->generators());
  return Homomorphism(std::move(source), std::move(target), std::move(m));
}

Homomorphism Homomorphism::identity(GroupPtr group) {
  IntMatrix m = IntMatrix::identity(group->generators());
  return Homomorphism(group, group, std::move(m));
}

GroupElement Homomorphism::operator()(const GroupElement& x) const {
  require_same_parent(source_, x.parent(), "homomorphism apply");
  return GroupElement(target_, matrix_ * x.coords());
}

Homomorphism Homomorphism::then(const Homomorphism& g) const {
  require_same_parent(target_, g.source_, "homomorphism compose");
  return Homomorphism(source_, g.target_, g.matrix_ * matrix_);
}

bool Homomorphism::is_zero() const {
  for (std::size_t c = 0; c < matrix_.cols(); ++c)
    if (!target_->is_relation(matrix_.column(c))) return false;
  return true;
}

KernelImage kernel_image(const Homomorphism& f) {
  const IntMatrix& tr = f.target()->relations().basis();
  const std::size_t ns = f.source()->generators();
  IntMatrix stacked = hconcat(f.matrix(), tr);
  IntMatrix ker = kernel_basis(stacked).rows_range(0, ns);
  Subgroup kernel = Subgroup::from_lift(f.source(), IntLattice::span(ker));
  Subgroup image = Subgroup::from_lift(f.target(), IntLattice::span(hconcat(f.matrix(), tr)));
  return {std::move(kernel), std::move(image)};
}

std::optional<GroupElement> solve(const Homomorphism& f, const GroupElement& y) {
  require_same_parent(f.target(), y.parent(), "solve");
  const IntMatrix& tr = f.target()->relations().basis();
  auto x = solve_linear(hconcat(f.matrix(), tr), y.coords());
  if (!x) return std::nullopt;
  x->resize(f.source()->generators());
  return GroupElement(f.source(), std::move(*x));
}

Quotient quotient(const GroupPtr& group, const Subgroup& s) {
  require_same_parent(group, s.parent(), "quotient");
  GroupPtr q = AbelianGroup::presented(group->generators(), s.basis());
  Homomorphism proj(group, q, IntMatrix::identity(group->generators()));
  return {q->decomposition(), std::move(proj)};
}

}  // namespace distlat

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distlat/errors.hpp"
#include "distlat/int_lattice.hpp"
#include "distlat/matrix.hpp"

namespace distlat {

/// Invariant-factor form of a finitely generated abelian group: finite
/// factors d_1 | d_2 | ... (each >= 2) followed by one 0 per free summand.
class DecomposedGroup {
 public:
  DecomposedGroup() = default;
  // Validates the canonical shape.
  explicit DecomposedGroup(IntVector factors);
  // Any list of cyclic orders (0 = infinite cyclic, 1 = trivial), in any
  // order; normalized to invariant factors.
  static DecomposedGroup from_cyclic_orders(const IntVector& orders);

  const IntVector& factors() const { return factors_; }
  std::size_t free_rank() const;
  IntVector torsion() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const { return free_rank() == 0; }
  std::optional<Integer> order() const;
  std::string to_string() const;

  friend bool operator==(const DecomposedGroup&, const DecomposedGroup&) = default;

 private:
  IntVector factors_;
};

/// Change of coordinates that splits a presented group into cyclic factors.
/// Coordinate i of to_cyclic * x is taken modulo moduli[i]; moduli[i] == 1
/// marks a trivial factor and 0 an infinite cyclic one.
struct CyclicDecomposition {
  IntMatrix to_cyclic;
  IntMatrix from_cyclic;
  IntVector moduli;
};

class AbelianGroup;
using GroupPtr = std::shared_ptr<const AbelianGroup>;

/// Z^n modulo a relation lattice. Ambient groups use the canonical diagonal
/// relations: free generators first, then one generator per torsion factor.
class AbelianGroup {
 public:
  static GroupPtr ambient(std::size_t free_rank, IntVector torsion);
  static GroupPtr free(std::size_t rank) { return ambient(rank, {}); }
  static GroupPtr presented(std::size_t generators, const IntMatrix& relations);
  static GroupPtr from_decomposition(const DecomposedGroup& d);

  std::size_t generators() const { return generators_; }
  const IntLattice& relations() const { return relations_; }
  const DecomposedGroup& decomposition() const { return decomposition_; }
  const CyclicDecomposition& cyclic() const { return cyclic_; }

  // Set only for groups built with ambient().
  bool has_ambient_form() const { return ambient_form_; }
  std::size_t free_rank() const { return decomposition_.free_rank(); }
  IntVector torsion() const { return decomposition_.torsion(); }

  bool is_finite() const { return relations_.full_rank(); }
  bool is_free() const { return relations_.rank() == 0; }
  std::optional<Integer> order() const { return relations_.index(); }

  IntVector reduce(const IntVector& coords) const { return relations_.reduce(coords); }
  bool is_relation(const IntVector& coords) const { return relations_.contains(coords); }

  bool same_as(const AbelianGroup& other) const;

 private:
  AbelianGroup(std::size_t generators, IntLattice relations);

  std::size_t generators_ = 0;
  IntLattice relations_;
  DecomposedGroup decomposition_;
  CyclicDecomposition cyclic_;
  bool ambient_form_ = false;
};

void require_same_parent(const GroupPtr& a, const GroupPtr& b, const char* where);

/// An element held in canonical reduced coordinates; equality is syntactic.
class GroupElement {
 public:
  GroupElement(GroupPtr parent, IntVector coords);
  static GroupElement zero(GroupPtr parent);
  static GroupElement basis_vector(GroupPtr parent, std::size_t i);

  const GroupPtr& parent() const { return parent_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const { return distlat::is_zero(coords_); }

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement operator*(const Integer& k) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords_ == b.coords_ && a.parent_->same_as(*b.parent_);
  }

 private:
  GroupPtr parent_;
  IntVector coords_;
};

/// A subgroup, represented by its preimage ("lift") in the free cover; the
/// lift always contains the parent's relation lattice.
class Subgroup {
 public:
  static Subgroup from_generators(const GroupPtr& parent, std::span<const GroupElement> gens);
  static Subgroup from_vectors(const GroupPtr& parent, std::span<const IntVector> gens);
  static Subgroup from_lift(const GroupPtr& parent, const IntLattice& lift);
  static Subgroup zero(const GroupPtr& parent);
  static Subgroup whole(const GroupPtr& parent);

  const GroupPtr& parent() const { return parent_; }
  const IntLattice& lift() const { return lift_; }
  // Canonical column HNF of [generators | relations], zero columns dropped.
  const IntMatrix& basis() const { return lift_.basis(); }
  // Reduced nonzero images of the basis columns.
  std::vector<GroupElement> generators() const;

  bool contains(const GroupElement& x) const;
  // Coefficients c with basis() * c == x.coords(), when x lies in the subgroup.
  std::optional<IntVector> coefficients(const GroupElement& x) const;
  bool contains(const Subgroup& other) const;
  bool is_zero() const { return lift_ == parent_->relations(); }

  Subgroup operator+(const Subgroup& other) const;
  Subgroup intersect(const Subgroup& other) const;

  // Finite parent only.
  std::optional<Integer> order() const;
  // Canonical representative of x modulo this subgroup.
  GroupElement reduce(const GroupElement& x) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.lift_ == b.lift_ && a.parent_->same_as(*b.parent_);
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.lift_ < b.lift_; }

 private:
  Subgroup(GroupPtr parent, IntLattice lift) : parent_(std::move(parent)), lift_(std::move(lift)) {}
  GroupPtr parent_;
  IntLattice lift_;
};

Subgroup subgroup_from_generators(const GroupPtr& parent, std::span<const GroupElement> gens);
Subgroup sub_sum(const Subgroup& a, const Subgroup& b);
Subgroup sub_intersect(const Subgroup& a, const Subgroup& b);
Subgroup sum_of(std::span<const Subgroup> family);
Subgroup intersection_of(std::span<const Subgroup> family);

/// Matrix (target generators x source generators) acting on coordinates.
class Homomorphism {
 public:
  // Throws IllDefinedHomomorphism unless every source relation maps into the
  // target relation lattice.
  Homomorphism(GroupPtr source, GroupPtr target, IntMatrix matrix);
  static Homomorphism zero(GroupPtr source, GroupPtr target);
  static Homomorphism identity(GroupPtr group);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;
  IntVector apply(const IntVector& coords) const { return target_->reduce(matrix_ * coords); }
  // then(g) = g o this
  Homomorphism then(const Homomorphism& g) const;
  bool is_zero() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  IntMatrix matrix_;
};

struct KernelImage {
  Subgroup kernel;  // of source
  Subgroup image;   // of target
};

KernelImage kernel_image(const Homomorphism& f);

// Some x with f(x) = y, chosen by back substitution against the Hermite form
// of [matrix | target relations]; nullopt when y is not in the image.
std::optional<GroupElement> solve(const Homomorphism& f, const GroupElement& y);

struct Quotient {
  DecomposedGroup decomposition;
  Homomorphism projection;  // onto Z^n / lift(S)
};

Quotient quotient(const GroupPtr& group, const Subgroup& s);

}  // namespace distlat

#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "distlat/group.hpp"

namespace distlat {

/// Hom(A, B), generated by one map per pair of nontrivial cyclic factors
/// (g_i of order s, h_j of order t): g_i -> (t / gcd(s, t)) h_j, or g_i -> h_j
/// when g_i is free. Pairs with no nonzero map are omitted.
struct HomGroup {
  GroupPtr source;
  GroupPtr target;
  DecomposedGroup decomposition;
  GroupPtr group;  // Z^k modulo the orders of basis_homs
  std::vector<Homomorphism> basis_homs;
  IntVector orders;  // 0 for infinite order
  std::vector<std::pair<std::size_t, std::size_t>> factor_pairs;
  IntVector scales;  // image of g_i is scales[k] h_j

  // c with phi = sum c_k basis_homs[k], reduced modulo the orders.
  IntVector coordinates(const Homomorphism& phi) const;
  Homomorphism evaluate(const IntVector& c) const;
};

HomGroup hom_group(const GroupPtr& a, const GroupPtr& b);

// For f: A' -> A, the map Hom(A, B) -> Hom(A', B), phi -> phi o f.
Homomorphism precomposition(const HomGroup& from, const HomGroup& to, const Homomorphism& f);
// For g: B -> B', the map Hom(A, B) -> Hom(A, B'), phi -> g o phi.
Homomorphism postcomposition(const HomGroup& from, const HomGroup& to, const Homomorphism& g);

/// A (x) B with one generator g_i (x) h_j of order gcd(s, t) per pair of
/// cyclic factors, trivial pairs omitted.
struct TensorGroup {
  GroupPtr left;
  GroupPtr right;
  DecomposedGroup decomposition;
  GroupPtr group;
  std::vector<std::pair<std::size_t, std::size_t>> factor_pairs;
  IntVector orders;

  GroupElement pure_tensor(const GroupElement& x, const GroupElement& y) const;
};

TensorGroup tensor_group(const GroupPtr& a, const GroupPtr& b);

// f (x) g : A (x) B -> A' (x) B'
Homomorphism tensor_map(const TensorGroup& from, const TensorGroup& to, const Homomorphism& f,
                        const Homomorphism& g);

// Degrees 0..through_degree; zero above the length of the family's complex.
// Both throw NonFreeAmbient unless the family lives in a free group.
std::map<int, DecomposedGroup> ext(std::span<const Subgroup> family, const GroupPtr& m,
                                   std::size_t through_degree);
std::map<int, DecomposedGroup> tor(std::span<const Subgroup> family, const GroupPtr& m,
                                   std::size_t through_degree);

}  // namespace distlat

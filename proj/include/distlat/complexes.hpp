#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "distlat/group.hpp"

namespace distlat {

using Tuple = std::vector<std::size_t>;

// All strictly increasing tuples of `length` indices from 0..members-1, in
// lexicographic order.
std::vector<Tuple> increasing_tuples(std::size_t members, std::size_t length);

/// How a summand's generators sit over the ambient group.
///   subgroup: generators are the lift basis of `value`, relations are the
///             ambient relations in those coordinates.
///   quotient: generators are ambient coordinates, relations are the lift
///             of `value` (the summand is A / value).
enum class CellKind { subgroup, quotient };

struct Cell {
  Tuple tuple;
  Subgroup value;
  CellKind kind = CellKind::subgroup;
  std::size_t offset = 0;  // first generator of this summand in the term
  std::size_t width = 0;
};

struct ComplexTerm {
  int degree = 0;
  GroupPtr group;
  std::vector<Cell> cells;  // empty for terms not built from the tuple model
};

enum class Direction { homological, cohomological };

/// Terms by degree and differentials keyed by their source degree. A
/// homological differential lowers the degree by one, a cohomological one
/// raises it.
class ChainComplex {
 public:
  // Throws InvariantViolation when two consecutive differentials do not
  // compose to zero.
  ChainComplex(Direction direction, std::map<int, ComplexTerm> terms,
               std::map<int, Homomorphism> differentials, bool augmented = false);

  Direction direction() const { return direction_; }
  bool augmented() const { return augmented_; }
  int step() const { return direction_ == Direction::homological ? -1 : 1; }
  const std::map<int, ComplexTerm>& terms() const { return terms_; }
  const ComplexTerm* term(int degree) const;
  // Differential leaving `degree`, if any.
  const Homomorphism* outgoing(int degree) const;
  // Differential arriving at `degree`, if any.
  const Homomorphism* incoming(int degree) const;
  bool composite_vanishes(int degree) const;

  // Ambient values of the summands of x (subgroup cells give elements of the
  // ambient group, quotient cells the canonical representative).
  std::vector<GroupElement> cell_values(int degree, const GroupElement& x) const;
  // Inverse of cell_values; nullopt when a value is outside its summand.
  std::optional<GroupElement> from_cell_values(int degree,
                                               std::span<const GroupElement> values) const;

 private:
  Direction direction_;
  std::map<int, ComplexTerm> terms_;
  std::map<int, Homomorphism> differentials_;
  bool augmented_ = false;
};

// Summand at (a_0 < ... < a_q) is P_{a_0} n ... n P_{a_q}; degree -1 holds
// P_0 + ... + P_n when augmented.
ChainComplex chain_complex(std::span<const Subgroup> family, bool augment = false);
// Summand at (a_0 < ... < a_q) is I_{a_0} + ... + I_{a_q}; degree -1 holds
// I_0 n ... n I_n when augmented.
ChainComplex cochain_complex(std::span<const Subgroup> family, bool augment = false);

// Cech-style complex on increasing tuples with a caller-chosen summand per
// tuple; `value(tuple)` must be monotone so the restriction maps exist.
ChainComplex tuple_cochain_complex(const GroupPtr& parent, std::size_t members, CellKind kind,
                                   const std::function<Subgroup(const Tuple&)>& value);

struct HomologyResult {
  std::map<int, DecomposedGroup> by_degree;
  // Generators matching by_degree[k].factors() one for one.
  std::optional<std::map<int, std::vector<GroupElement>>> representatives;
};

HomologyResult homology(const ChainComplex& c, bool with_representatives = false,
                        unsigned threads = 1);

// Compares degree 0 of an augmented complex with the augmentation term.
// Chain side: the augmentation maps H_0 onto P_0 + ... + P_n, injectively.
// Cochain side: the kernel of d^0 is the diagonal copy of I_0 n ... n I_n.
struct DegreeZeroComparison {
  Subgroup image;     // of the ambient group
  Subgroup expected;  // the augmentation value
  bool injective = false;

  bool matches() const { return injective && image == expected; }
};

DegreeZeroComparison degree_zero(const ChainComplex& augmented);

// Process-wide tally of the d o d checks made while constructing complexes.
struct DifferentialLawTally {
  std::uint64_t checked = 0;
  std::uint64_t violated = 0;
};
DifferentialLawTally differential_law_tally();

bool is_cycle(const ChainComplex& c, int degree, const GroupElement& x);
bool is_boundary(const ChainComplex& c, int degree, const GroupElement& x);

// A 1-cocycle (i_01, i_02, i_12) representing a nonzero class of
// H^1(I_0, I_1, I_2), or nullopt when that group vanishes.
std::optional<std::array<GroupElement, 3>> h1_witness(const Subgroup& i0, const Subgroup& i1,
                                                      const Subgroup& i2);

}  // namespace distlat

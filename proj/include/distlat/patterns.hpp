#pragma once

#include <map>
#include <optional>
#include <vector>

#include "distlat/complexes.hpp"
#include "distlat/crt.hpp"
#include "distlat/lattice.hpp"

namespace distlat {

enum class PatternFlavor { constant, ideal, quotient };
const char* to_string(PatternFlavor f);
std::optional<PatternFlavor> parse_flavor(std::string_view s);

/// A pattern on a covering by closed sets C_0..C_n, which only enter through
/// their indices. On C_{i_0} n ... n C_{i_p} the value is
///   constant: the ambient group
///   ideal:    I_{i_0} + ... + I_{i_p}
///   quotient: A / (I_{i_0} + ... + I_{i_p})
struct PatternAssignment {
  GroupPtr ambient;
  std::size_t covering_size = 0;
  PatternFlavor flavor = PatternFlavor::constant;
  std::vector<Subgroup> family;  // empty for the constant flavor

  static PatternAssignment constant(GroupPtr ambient, std::size_t covering_size);
  static PatternAssignment ideal(std::vector<Subgroup> family);
  static PatternAssignment quotient(std::vector<Subgroup> family);
};

struct PatternCohomologyResult {
  std::map<int, DecomposedGroup> by_degree;
};

ChainComplex pattern_complex(const PatternAssignment& p);
PatternCohomologyResult pattern_cohomology(const PatternAssignment& p, unsigned threads = 1);

struct GluingReport {
  bool intersect_condition = true;  // tuple values are the joins of single values in L
  bool union_condition = true;      // meets of single values in L are their intersections
  bool h0_is_union_value = true;    // H^0 sits diagonally over I_0 n ... n I_n
  bool equalizer = true;
  std::optional<ResidueSystem> counterexample;

  bool ok() const { return intersect_condition && union_condition && h0_is_union_value && equalizer; }
};

// Ideal flavor only; every family member must be a member of `l`.
GluingReport gluing_check(const PatternAssignment& p, const LatticeClosure& l);

struct EulerReport {
  bool term_orders = true;  // |constant| = |ideal| * |quotient| in every degree
  // Alternating product of cohomology orders equals that of term orders, per complex.
  bool constant_euler = true;
  bool ideal_euler = true;
  bool quotient_euler = true;
  bool multiplicative = true;  // chi(constant) = chi(ideal) * chi(quotient)

  bool ok() const {
    return term_orders && constant_euler && ideal_euler && quotient_euler && multiplicative;
  }
};

// Throws InfiniteAmbient unless the ambient group is finite.
EulerReport euler_consistency(const GroupPtr& ambient, const std::vector<Subgroup>& family);

}  // namespace distlat

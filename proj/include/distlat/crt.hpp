#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "distlat/group.hpp"
#include "distlat/normal_form.hpp"

namespace distlat {

/// Residues a_alpha modulo subgroups I_alpha of a common group.
struct ResidueSystem {
  std::vector<Subgroup> moduli;
  std::vector<GroupElement> residues;
};

enum class CrtStatus { solved, incompatible, no_solution };
const char* to_string(CrtStatus s);

using IndexPair = std::pair<std::size_t, std::size_t>;

struct CrtOutcome {
  CrtStatus status = CrtStatus::solved;
  std::optional<GroupElement> solution;  // a_0 - i_0, reduced modulo the relations only
  std::optional<GroupElement> reduced;   // canonical representative modulo the intersection
  std::optional<IndexPair> incompatibility;
  // On no_solution: i_ab = a_b - a_a for a < b, pairs in lexicographic order.
  std::optional<std::vector<GroupElement>> certificate;
};

struct Compatibility {
  bool compatible = true;
  std::optional<IndexPair> failing;
};

/// Precomputes the stacked coboundary system for one family so that many
/// residue systems over it can be solved cheaply.
class CrtSolver {
 public:
  explicit CrtSolver(std::vector<Subgroup> moduli);

  const std::vector<Subgroup>& moduli() const { return moduli_; }
  const Subgroup& intersection() const { return intersection_; }

  Compatibility compatible(std::span<const GroupElement> residues) const;
  CrtOutcome solve(std::span<const GroupElement> residues) const;

 private:
  std::vector<Subgroup> moduli_;
  std::vector<IndexPair> pairs_;
  std::vector<Subgroup> pair_sums_;
  std::vector<std::size_t> offsets_;  // first unknown of each modulus
  Subgroup intersection_;
  HermiteForm system_;
};

Compatibility compatible(const ResidueSystem& r);
CrtOutcome crt_solve(const ResidueSystem& r);

struct EqualizerReport {
  bool equalizer = true;
  std::optional<ResidueSystem> counterexample;
  std::string method;  // "enumeration", "distributivity" or "cohomology"
  std::uint64_t systems_checked = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1u << 20;

// Enumerates residue systems with a_0 = 0 over coset representatives when
// the search space has at most `limit` elements; otherwise decides through
// the closure (distributive implies equalizer) or through H^1 of the family.
EqualizerReport equalizer_check(std::span<const Subgroup> family,
                                std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace distlat

#pragma once

// Brute-force recomputation over small finite groups by element enumeration.
// Nothing here touches the normal-form machinery; it exists to cross-check it.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace distlat::oracle {

using Element = std::vector<std::int64_t>;
using Code = std::uint64_t;

/// Z/m_0 x Z/m_1 x ... with elements numbered in mixed radix.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t coordinates() const { return moduli_.size(); }
  Code order() const { return order_; }

  Code encode(const Element& e) const;  // reduces coordinates first
  Element decode(Code c) const;
  Code add(Code a, Code b) const;
  Code negate(Code a) const;
  Code multiply(Code a, std::int64_t k) const;
  Code zero() const { return 0; }

 private:
  Code add_slow(Code a, Code b) const;
  Code negate_slow(Code a) const;

  std::vector<std::int64_t> moduli_;
  Code order_ = 1;
  std::vector<std::uint32_t> sum_table_;  // order^2 entries, small groups only
  std::vector<std::uint32_t> negation_table_;
};

/// A subset of a finite group, usually a subgroup produced by span().
struct ElementSet {
  std::vector<char> member;  // indexed by code
  std::vector<Code> elements;

  bool contains(Code c) const { return member[c] != 0; }
  std::size_t size() const { return elements.size(); }
  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.member == b.member; }
};

ElementSet span(const FiniteGroup& g, const std::vector<Element>& generators);
ElementSet set_sum(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);
ElementSet whole(const FiniteGroup& g);

/// Isomorphism type of a finite abelian group H, given |H| and a counter
/// m -> |{h in H : m h = 0}|. Returns invariant factors d_1 | d_2 | ...
std::vector<std::int64_t> invariant_factors_from_counts(
    std::int64_t order, const std::function<std::int64_t(std::int64_t)>& killed_by);

struct DegreeData {
  std::int64_t term_order = 0;
  std::int64_t cycles = 0;      // |ker| of the outgoing map
  std::int64_t boundaries = 0;  // |im| of the incoming map
  std::vector<std::int64_t> invariant_factors;
};

/// Enumerated homology of the tuple complexes of a family of subgroups.
/// Throws std::length_error when a term exceeds `term_limit` elements.
std::map<int, DegreeData> cochain_cohomology(const FiniteGroup& g,
                                             const std::vector<ElementSet>& family,
                                             std::uint64_t term_limit = 1u << 22);
std::map<int, DegreeData> chain_homology(const FiniteGroup& g,
                                         const std::vector<ElementSet>& family,
                                         std::uint64_t term_limit = 1u << 22);

/// True iff the 1-cochain (values listed for pairs (0,1), (0,2), ..., in
/// lexicographic order) is d of some 0-cochain (i_a in I_a).
bool is_one_coboundary(const FiniteGroup& g, const std::vector<ElementSet>& family,
                       const std::vector<Code>& cochain);
bool is_one_cocycle(const FiniteGroup& g, const std::vector<ElementSet>& family,
                    const std::vector<Code>& cochain);

/// Some a with a - a_i in I_i for all i, by scanning the whole group.
std::optional<Code> crt_search(const FiniteGroup& g, const std::vector<ElementSet>& moduli,
                               const std::vector<Code>& residues);

/// Closure of the family under sum and intersection, then the triple scan.
bool is_distributive(const FiniteGroup& g, const std::vector<ElementSet>& family);

// |Hom(A, B)| and |A (x) B| where A has the given cyclic orders (0 = Z) and B
// is finite; each cyclic factor is handled by counting elements of B.
std::int64_t hom_count(const std::vector<std::int64_t>& source_orders, const FiniteGroup& target);
std::int64_t tensor_count(const std::vector<std::int64_t>& source_orders,
                          const FiniteGroup& target);
// |Hom(A, B)| by trying every assignment of generator images (small only).
std::int64_t hom_count_exhaustive(const FiniteGroup& source, const FiniteGroup& target);

}  // namespace distlat::oracle

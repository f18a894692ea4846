#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "distlat/group.hpp"

namespace distlat {

inline constexpr std::size_t kDefaultClosureCap = 512;

/// The sublattice generated by a seed family under sum and intersection.
/// Members are distinct and ordered by insertion, seeds first.
struct LatticeClosure {
  GroupPtr parent;
  std::vector<Subgroup> members;
  std::vector<std::size_t> seed_indices;  // seed position -> member index
  std::vector<std::vector<std::size_t>> join_table;
  std::vector<std::vector<std::size_t>> meet_table;

  std::size_t size() const { return members.size(); }
  std::optional<std::size_t> index_of(const Subgroup& s) const;
};

// Throws ClosureCapExceeded once more than `cap` members would be needed.
LatticeClosure closure(std::span<const Subgroup> seed, std::size_t cap = kDefaultClosureCap);

struct DistributivityWitness {
  std::array<std::size_t, 3> triple;  // member indices (P0, P1, P2)
  // In P0 n (P1 + P2) but not in (P0 n P1) + (P0 n P2).
  GroupElement element;
};

struct DistributivityReport {
  bool distributive = true;
  std::optional<DistributivityWitness> witness;
};

// a n (b + c) == (a n b) + (a n c)
bool meet_distributes(const LatticeClosure& l, std::size_t a, std::size_t b, std::size_t c);
// a + (b n c) == (a + b) n (a + c)
bool join_distributes(const LatticeClosure& l, std::size_t a, std::size_t b, std::size_t c);

// Scans ordered triples lexicographically; the reported witness is the first
// failing triple regardless of `threads`.
DistributivityReport is_distributive(const LatticeClosure& l, unsigned threads = 1);

}  // namespace distlat
